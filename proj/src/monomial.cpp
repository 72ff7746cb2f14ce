#include "pgd/monomial.hpp"

#include "pgd/errors.hpp"

#include <algorithm>
#include <map>

namespace pgd {

Monomial Monomial::variable(int var, int exp) {
  if (var < 0)
    throw DomainError("negative variable index");
  if (exp < 0)
    throw DomainError("negative exponent");
  Monomial m;
  if (exp > 0) {
    m.entries_.emplace_back(var, exp);
    m.degree_ = exp;
  }
  return m;
}

Monomial Monomial::from_exponents(std::span<const int> exps) {
  Monomial m;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0)
      throw DomainError("negative exponent");
    if (exps[i] > 0) {
      m.entries_.emplace_back(static_cast<int>(i), exps[i]);
      m.degree_ += exps[i];
    }
  }
  return m;
}

Monomial Monomial::square_free(PointSet s) {
  Monomial m;
  s.for_each([&](int p) { m.entries_.emplace_back(p, 1); });
  m.degree_ = s.size();
  return m;
}

int Monomial::exponent(int var) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{var, 0});
  return it != entries_.end() && it->first == var ? it->second : 0;
}

PointSet Monomial::support() const {
  PointSet s;
  for (auto [v, e] : entries_) {
    if (v >= 32)
      throw DomainError("variable index too large for a point set");
    s = s.with(v);
  }
  return s;
}

std::vector<int> Monomial::exponents(int n) const {
  std::vector<int> out(n, 0);
  for (auto [v, e] : entries_) {
    if (v >= n)
      throw DomainError("monomial uses a variable outside the ground set");
    out[v] = e;
  }
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.entries_.reserve(a.entries_.size() + b.entries_.size());
  auto i = a.entries_.begin(), j = b.entries_.begin();
  while (i != a.entries_.end() || j != b.entries_.end()) {
    if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first))
      m.entries_.push_back(*i++);
    else if (i == a.entries_.end() || j->first < i->first)
      m.entries_.push_back(*j++);
    else {
      m.entries_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_)
    return a.degree_ <=> b.degree_;
  // Lex with x_0 largest: the first variable where exponents differ decides.
  auto i = a.entries_.begin(), j = b.entries_.begin();
  for (; i != a.entries_.end() && j != b.entries_.end(); ++i, ++j) {
    if (i->first != j->first)
      return i->first < j->first ? std::strong_ordering::greater : std::strong_ordering::less;
    if (i->second != j->second)
      return i->second <=> j->second;
  }
  if (i != a.entries_.end())
    return std::strong_ordering::greater;
  if (j != b.entries_.end())
    return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto [v, e] : entries_) {
    h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ull;
    h = (h ^ static_cast<std::size_t>(e)) * 0x100000001b3ull;
  }
  return h;
}

std::optional<Monomial> act(const LocalBijection& f, const Monomial& m) {
  std::vector<Monomial::Entry> moved;
  moved.reserve(m.entries().size());
  for (auto [v, e] : m.entries()) {
    if (v >= f.ground_size() || !f.defined_at(v))
      return std::nullopt;
    moved.emplace_back(f(v), e);
  }
  std::sort(moved.begin(), moved.end());
  Monomial out;
  for (auto [v, e] : moved)
    out = out * Monomial::variable(v, e);
  return out;
}

std::vector<Monomial> monomials_of_degree(int n, int degree) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (degree == 0)
      out.emplace_back();
    return out;
  }
  std::vector<int> exps(n, 0);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == n - 1) {
      exps[var] = left;
      out.push_back(Monomial::from_exponents(exps));
      return;
    }
    for (int e = 0; e <= left; ++e) {
      exps[var] = e;
      self(self, var + 1, left - e);
    }
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end());
  return out;
}

ChainDecomposition chain_decompose(const Monomial& m) {
  // Distinct exponent values, largest first, give the distinct layers smallest first.
  std::vector<int> levels;
  for (auto [v, e] : m.entries())
    levels.push_back(e);
  std::sort(levels.begin(), levels.end(), std::greater<>());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  ChainDecomposition c;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    PointSet layer;
    for (auto [v, e] : m.entries())
      if (e >= levels[k])
        layer = layer.with(v);
    int next = k + 1 < levels.size() ? levels[k + 1] : 0;
    c.layers.push_back({layer, levels[k] - next});
  }
  return c;
}

Monomial reconstruct(const ChainDecomposition& c) {
  Monomial m;
  for (const auto& layer : c.layers)
    for (int i = 0; i < layer.multiplicity; ++i)
      m = m * Monomial::square_free(layer.set);
  return m;
}

std::vector<int> fine_degree(const Monomial& m, int n) {
  std::vector<int> r(n, 0);
  for (const auto& layer : chain_decompose(m).layers) {
    int s = layer.set.size();
    if (s > n)
      throw DomainError("monomial support exceeds the ground set");
    r[s - 1] += layer.multiplicity;
  }
  return r;
}

Monomial chain_monomial(std::span<const PointSet> sets) {
  Monomial m;
  for (PointSet s : sets)
    m = m * Monomial::square_free(s);
  return m;
}

std::optional<Monomial> star_product(const Monomial& a, const Monomial& b) {
  std::vector<PointSet> sets;
  for (const auto& l : chain_decompose(a).layers)
    sets.push_back(l.set);
  for (const auto& l : chain_decompose(b).layers)
    sets.push_back(l.set);
  std::sort(sets.begin(), sets.end(), [](PointSet x, PointSet y) { return x.size() < y.size(); });
  for (std::size_t i = 1; i < sets.size(); ++i)
    if (!sets[i - 1].subset_of(sets[i]))
      return std::nullopt;
  return a * b;
}

std::string to_string(const Monomial& m) {
  if (m.is_one())
    return "1";
  std::string out;
  for (auto [v, e] : m.entries()) {
    if (!out.empty())
      out += '*';
    out += 'x' + std::to_string(v + 1);
    if (e > 1)
      out += '^' + std::to_string(e);
  }
  return out;
}

} // namespace pgd
