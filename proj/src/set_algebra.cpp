#include "pgd/set_algebra.hpp"

#include "pgd/errors.hpp"

#include <algorithm>
#include <bit>
#include <vector>

namespace pgd {

SetFunction SetFunction::unit() { return indicator(0, 1); }

SetFunction SetFunction::indicator(Subset s, const Rational& value) {
  SetFunction f;
  f.add(s, value);
  return f;
}

Rational SetFunction::operator()(Subset s) const {
  auto it = values_.find(s);
  return it == values_.end() ? Rational(0) : it->second;
}

void SetFunction::add(Subset s, const Rational& v) {
  if (v == 0)
    return;
  auto [it, inserted] = values_.try_emplace(s, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0)
      values_.erase(it);
  }
}

SetFunction& SetFunction::operator+=(const SetFunction& o) {
  for (const auto& [s, v] : o.values_)
    add(s, v);
  return *this;
}

SetFunction operator*(const Rational& c, const SetFunction& f) {
  SetFunction out;
  for (const auto& [s, v] : f.values_)
    out.add(s, c * v);
  return out;
}

SetFunction cameron_product(const SetFunction& f, const SetFunction& g) {
  // Only disjoint pairs (M, N) contribute, to P = M ∪ N.
  SetFunction out;
  for (const auto& [m, a] : f.values())
    for (const auto& [n, b] : g.values())
      if ((m & n) == 0)
        out.add(m | n, a * b);
  return out;
}

namespace {

std::vector<Subset> subsets_up_to(int ground_size, int bound) {
  if (ground_size > 24)
    throw GuardExceeded("subset enumeration limited to 24 ground elements");
  std::vector<Subset> out;
  for (Subset s = 0; s < (Subset{1} << ground_size); ++s)
    if (std::popcount(s) <= bound)
      out.push_back(s);
  return out;
}

} // namespace

bool is_hereditary(const Equivalence& eq, int ground_size, int bound) {
  std::map<std::int64_t, std::vector<Subset>> classes;
  for (Subset s : subsets_up_to(ground_size, bound))
    classes[eq(s)].push_back(s);
  auto deletions = [&](Subset s) {
    std::vector<std::int64_t> labels;
    for (Subset b = s; b; b &= b - 1)
      labels.push_back(eq(s & ~(b & -b)));
    std::sort(labels.begin(), labels.end());
    return labels;
  };
  for (const auto& [label, members] : classes) {
    auto reference = deletions(members.front());
    for (Subset s : members) {
      if (std::popcount(s) != std::popcount(members.front()))
        return false;
      if (deletions(s) != reference)
        return false;
    }
  }
  return true;
}

bool is_invariant(const SetFunction& f, const Equivalence& eq, int ground_size, int bound) {
  std::map<std::int64_t, Rational> value;
  for (Subset s : subsets_up_to(ground_size, bound)) {
    auto [it, inserted] = value.try_emplace(eq(s), f(s));
    if (!inserted && it->second != f(s))
      return false;
  }
  return true;
}

long chi(const Equivalence& eq, std::int64_t a, std::int64_t b, std::int64_t c, Subset d) {
  long count = 0;
  // C ranges over subsets of D; A and B over subsets of C covering it.
  Subset cset = 0;
  do {
    if (eq(cset) == c) {
      Subset aset = 0;
      do {
        if (eq(aset) == a) {
          Subset rest = cset & ~aset;
          // B = rest ∪ (any subset of A).
          Subset extra = 0;
          do {
            if (eq(rest | extra) == b)
              ++count;
            extra = (extra - aset) & aset;
          } while (extra != 0);
        }
        aset = (aset - cset) & cset;
      } while (aset != 0);
    }
    cset = (cset - d) & d;
  } while (cset != 0);
  return count;
}

SetFunction phi_embedding(const Monomial& m, int points, int truncation) {
  if (truncation < 1 || points * truncation > 64)
    throw DomainError("truncated ground does not fit in 64 elements");
  auto d = m.exponents(points);
  Integer weight = 1;
  for (int e : d) {
    if (e > truncation)
      throw DomainError("truncation " + std::to_string(truncation) + " is smaller than exponent " +
                        std::to_string(e));
    weight *= factorial(e);
  }
  // Choose d_i copies in each block independently.
  std::vector<Subset> partial{0};
  for (int i = 0; i < points; ++i) {
    std::vector<Subset> next;
    for (Subset base : partial)
      for (Subset pick = 0; pick < (Subset{1} << truncation); ++pick)
        if (std::popcount(pick) == d[i])
          next.push_back(base | (pick << (i * truncation)));
    partial = std::move(next);
  }
  SetFunction f;
  for (Subset s : partial)
    f.add(s, Rational(weight));
  return f;
}

SetFunction phi_embedding(const Polynomial& p, int points, int truncation) {
  SetFunction f;
  for (const auto& [m, c] : p.terms())
    f += c * phi_embedding(m, points, truncation);
  return f;
}

} // namespace pgd
