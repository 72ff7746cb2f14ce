#include "pgd/series.hpp"

#include "pgd/errors.hpp"
#include "pgd/orbits.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace pgd {

std::vector<Integer> expand_denominator(std::span<const int> den) {
  std::vector<Integer> out{1};
  for (int e : den) {
    if (e < 1)
      throw DomainError("denominator exponents must be positive");
    std::vector<Integer> next(out.size() + e, 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
      next[i] += out[i];
      next[i + e] -= out[i];
    }
    out = std::move(next);
  }
  return out;
}

void trim(std::vector<Integer>& poly) {
  while (!poly.empty() && poly.back() == 0)
    poly.pop_back();
}

std::vector<Integer> multiply(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.empty() || b.empty())
    return {};
  std::vector<Integer> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] += a[i] * b[j];
  return out;
}

std::vector<Integer> coefficients(const RationalSeries& s, int count) {
  // c = num / den as a power series; den has constant term 1.
  auto den = expand_denominator(s.denominator);
  std::vector<Integer> c(std::max(count, 0), 0);
  for (int n = 0; n < count; ++n) {
    Integer v = n < static_cast<int>(s.numerator.size()) ? s.numerator[n] : Integer(0);
    for (std::size_t k = 1; k < den.size() && k <= static_cast<std::size_t>(n); ++k)
      v -= den[k] * c[n - k];
    c[n] = v;
  }
  return c;
}

Integer coefficient(const RationalSeries& s, int n) {
  if (n < 0)
    return 0;
  return coefficients(s, n + 1)[n];
}

RationalSeries fit_series(std::span<const Integer> values, std::vector<int> den, int margin, int extra) {
  std::sort(den.begin(), den.end());
  auto d = expand_denominator(den);
  int top = static_cast<int>(d.size()) - 1 + extra;
  if (static_cast<int>(values.size()) < top + 1 + margin)
    throw DomainError("not enough values to fit the series with the requested margin");
  auto product = multiply(values, d);
  product.resize(values.size());
  for (std::size_t k = top + 1; k < product.size(); ++k)
    if (product[k] != 0)
      throw FitError("denominator does not explain the values", static_cast<int>(k));
  product.resize(top + 1);
  trim(product);
  return RationalSeries{std::move(product), std::move(den)};
}

RationalSeries hilbert_series(const PermutationGroupoid& g, std::vector<int> den, int margin) {
  if (den.empty())
    throw DomainError("denominator must be nonempty");
  if (margin < 0)
    throw DomainError("margin must be non-negative");
  int degree = std::accumulate(den.begin(), den.end(), 0);
  std::vector<Integer> dims;
  for (int n = 0; n <= degree + margin; ++n)
    dims.emplace_back(orbit_count(g, n));
  return fit_series(dims, std::move(den), margin);
}

std::optional<RationalSeries> rewrite_denominator(const RationalSeries& s, std::vector<int> den) {
  std::sort(den.begin(), den.end());
  auto num = multiply(s.numerator, expand_denominator(den));
  auto old = expand_denominator(s.denominator);
  trim(num);
  if (num.empty())
    return RationalSeries{{}, std::move(den)};
  int qdeg = static_cast<int>(num.size()) - static_cast<int>(old.size());
  if (qdeg < 0)
    return std::nullopt;
  // Long division from the constant term; old[0] = 1.
  std::vector<Integer> q(qdeg + 1, 0);
  std::vector<Integer> rem = num;
  for (int i = 0; i <= qdeg; ++i) {
    q[i] = rem[i];
    if (q[i] == 0)
      continue;
    for (std::size_t k = 0; k < old.size(); ++k)
      rem[i + k] -= q[i] * old[k];
  }
  if (std::any_of(rem.begin(), rem.end(), [](const Integer& x) { return x != 0; }))
    return std::nullopt;
  trim(q);
  return RationalSeries{std::move(q), std::move(den)};
}

NonnegativityResult nonnegativity_search(const RationalSeries& s, int max_factors, int max_exp) {
  if (max_factors < 1 || max_exp < 1)
    throw DomainError("search bounds must be positive");
  NonnegativityResult result;
  for (int size = 1; size <= max_factors; ++size) {
    // Multisets {1 = n_1 <= ... <= n_size}, grouped by sum, lexicographic within a sum.
    std::vector<std::vector<int>> candidates;
    std::vector<int> cur{1};
    auto rec = [&](auto&& self) -> void {
      if (static_cast<int>(cur.size()) == size) {
        candidates.push_back(cur);
        return;
      }
      for (int e = cur.back(); e <= max_exp; ++e) {
        cur.push_back(e);
        self(self);
        cur.pop_back();
      }
    };
    rec(rec);
    std::stable_sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
      int sa = std::accumulate(a.begin(), a.end(), 0), sb = std::accumulate(b.begin(), b.end(), 0);
      return sa != sb ? sa < sb : a < b;
    });
    for (const auto& den : candidates) {
      ++result.examined;
      auto r = rewrite_denominator(s, den);
      if (r && std::all_of(r->numerator.begin(), r->numerator.end(), [](const Integer& x) { return x >= 0; })) {
        result.found = std::move(r);
        return result;
      }
    }
  }
  return result;
}

Rational QuasiPolynomial::evaluate(long n) const {
  const auto& p = polys.at(static_cast<std::size_t>(((n % period) + period) % period));
  Rational v = 0, power = 1;
  for (const auto& c : p) {
    v += c * power;
    power *= n;
  }
  return v;
}

namespace {

/// Coefficients (ascending) of the polynomial through the points (xs[i], ys[i]).
std::vector<Rational> interpolate(const std::vector<long>& xs, const std::vector<Rational>& ys) {
  std::size_t k = xs.size();
  std::vector<Rational> out(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Rational> basis{1};
    Rational denom = 1;
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i)
        continue;
      std::vector<Rational> next(basis.size() + 1, 0);
      for (std::size_t t = 0; t < basis.size(); ++t) {
        next[t + 1] += basis[t];
        next[t] -= basis[t] * xs[j];
      }
      basis = std::move(next);
      denom *= xs[i] - xs[j];
    }
    for (std::size_t t = 0; t < basis.size(); ++t)
      out[t] += ys[i] * basis[t] / denom;
  }
  while (!out.empty() && out.back() == 0)
    out.pop_back();
  return out;
}

} // namespace

QuasiPolynomial quasi_polynomial(const RationalSeries& s) {
  if (s.denominator.empty())
    throw DomainError("quasi-polynomial of a polynomial series is not defined");
  int period = 1;
  for (int e : s.denominator)
    period = std::lcm(period, e);
  int k = static_cast<int>(s.denominator.size());
  int den_degree = std::accumulate(s.denominator.begin(), s.denominator.end(), 0);
  long threshold = std::max(0L, static_cast<long>(s.numerator.size()) - 1 - den_degree + 1);

  constexpr int kVerify = 50;
  long needed = threshold + static_cast<long>(period) * k + period + kVerify;
  auto c = coefficients(s, static_cast<int>(needed));

  QuasiPolynomial q;
  q.period = period;
  q.threshold = threshold;
  for (int r = 0; r < period; ++r) {
    long first = threshold + ((r - threshold) % period + period) % period;
    std::vector<long> xs;
    std::vector<Rational> ys;
    for (int j = 0; j < k; ++j) {
      xs.push_back(first + static_cast<long>(j) * period);
      ys.emplace_back(c[xs.back()]);
    }
    q.polys.push_back(interpolate(xs, ys));
  }
  for (long n = threshold; n < threshold + kVerify; ++n)
    if (q.evaluate(n) != Rational(c[n]))
      throw FitError("quasi-polynomial does not reproduce the series", static_cast<int>(n));

  // Shrink to the smallest period that still describes the same residues.
  for (int p = 1; p < period; ++p) {
    if (period % p != 0)
      continue;
    bool same = true;
    for (int r = 0; r < period && same; ++r)
      same = q.polys[r] == q.polys[r % p];
    if (same) {
      q.polys.resize(p);
      q.period = p;
      break;
    }
  }
  return q;
}

std::map<std::vector<int>, long> fine_hilbert_table(const PermutationGroupoid& g, const std::vector<int>& bound) {
  int n = g.ground_size();
  if (static_cast<int>(bound.size()) != n)
    throw DomainError("fine degree bound must have one entry per point");
  std::map<std::vector<int>, long> table;
  // Every vector below the bound starts at zero.
  std::vector<int> r(n, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      table[r] = 0;
      return;
    }
    for (int v = 0; v <= bound[i]; ++v) {
      r[i] = v;
      self(self, i + 1);
    }
    r[i] = 0;
  };
  rec(rec, 0);

  int max_degree = 0;
  for (int s = 0; s < n; ++s)
    max_degree += (s + 1) * bound[s];
  for (int deg = 0; deg <= max_degree; ++deg) {
    std::unordered_set<Monomial, MonomialHash> covered;
    for (const auto& m : monomials_of_degree(n, deg)) {
      if (covered.count(m))
        continue;
      for (const auto& f : g.with_domain(m.support()))
        covered.insert(*act(f, m));
      auto it = table.find(fine_degree(m, n));
      if (it != table.end())
        ++it->second;
    }
  }
  return table;
}

std::string polynomial_in_z(std::span<const Integer> coeffs) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Integer& c = coeffs[i];
    if (c == 0)
      continue;
    Integer mag = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? "-" : "+";
    bool show = mag != 1 || i == 0;
    if (show)
      out += mag.get_str();
    if (i >= 1)
      out += "Z";
    if (i >= 2)
      out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::string to_string(const RationalSeries& s) {
  std::string out = polynomial_in_z(s.numerator) + " /";
  if (s.denominator.empty())
    return out + " 1";
  out += " ";
  for (int e : s.denominator)
    out += e == 1 ? "(1-Z)" : "(1-Z^" + std::to_string(e) + ")";
  return out;
}

std::string to_string(const QuasiPolynomial& q) {
  std::string out = "period " + std::to_string(q.period) + ", valid for n >= " + std::to_string(q.threshold);
  for (int r = 0; r < q.period; ++r) {
    out += "\n  n = " + std::to_string(r) + " mod " + std::to_string(q.period) + ": ";
    std::string poly;
    for (std::size_t i = q.polys[r].size(); i-- > 0;) {
      const Rational& c = q.polys[r][i];
      if (c == 0)
        continue;
      if (!poly.empty())
        poly += c < 0 ? " - " : " + ";
      else if (c < 0)
        poly += "-";
      Rational mag = abs(c);
      std::string term;
      if (i == 0 || mag != 1)
        term = pgd::to_string(mag);
      if (i >= 1)
        term += (term.empty() ? "" : "*") + std::string("n") + (i >= 2 ? "^" + std::to_string(i) : "");
      poly += term;
    }
    out += poly.empty() ? "0" : poly;
  }
  return out;
}

} // namespace pgd
