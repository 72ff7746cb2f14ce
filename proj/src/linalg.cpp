#include "pgd/linalg.hpp"

namespace pgd {

Polynomial EchelonBasis::reduce(Polynomial p) const {
  // Walk the residue downwards; each elimination only touches smaller monomials.
  const Monomial* bound = nullptr;
  Monomial current;
  while (!p.is_zero()) {
    auto it = bound ? p.terms().lower_bound(*bound) : p.terms().end();
    bool eliminated = false;
    while (it != p.terms().begin()) {
      --it;
      auto row = rows_.find(it->first);
      if (row == rows_.end())
        continue;
      current = it->first;
      Rational c = it->second;
      p -= c * row->second;
      bound = &current;
      eliminated = true;
      break;
    }
    if (!eliminated)
      break;
  }
  return p;
}

bool EchelonBasis::insert(const Polynomial& p) {
  Polynomial r = reduce(p);
  if (r.is_zero())
    return false;
  Monomial pivot = r.max_monomial();
  r *= 1 / r.coefficient(pivot);
  rows_.emplace(pivot, std::move(r));
  return true;
}

std::size_t rank(Matrix m) {
  std::size_t r = 0;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.size() && m[pivot][c] == 0)
      ++pivot;
    if (pivot == m.size())
      continue;
    std::swap(m[r], m[pivot]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0)
        continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j)
        m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

bool is_invertible(const Matrix& m) {
  for (const auto& row : m)
    if (row.size() != m.size())
      return false;
  return rank(m) == m.size();
}

} // namespace pgd
