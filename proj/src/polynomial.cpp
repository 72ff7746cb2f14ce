#include "pgd/polynomial.hpp"

#include "pgd/errors.hpp"

#include <cctype>

namespace pgd {

Polynomial::Polynomial(const Rational& c) {
  if (c != 0)
    terms_.emplace(Monomial(), c);
}

Polynomial::Polynomial(const Monomial& m, const Rational& c) {
  if (c != 0)
    terms_.emplace(m, c);
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

const Monomial& Polynomial::max_monomial() const {
  if (terms_.empty())
    throw DomainError("zero polynomial has no leading monomial");
  return terms_.rbegin()->first;
}

int Polynomial::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

bool Polynomial::is_homogeneous() const {
  return terms_.empty() || terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_)
    add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_)
    add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_)
    v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial pow(const Polynomial& p, int k) {
  if (k < 0)
    throw DomainError("negative power");
  Polynomial out(1);
  for (int i = 0; i < k; ++i)
    out = out * p;
  return out;
}

Polynomial star_product(const Polynomial& p, const Polynomial& q) {
  Polynomial out;
  for (const auto& [mp, cp] : p.terms())
    for (const auto& [mq, cq] : q.terms())
      if (auto m = star_product(mp, mq))
        out.add_term(*m, cp * cq);
  return out;
}

Polynomial elementary_symmetric(int d, PointSet on) {
  if (d < 0 || d > on.size())
    throw DomainError("elementary symmetric degree out of range");
  Polynomial out;
  for (PointSet s : subsets_of(on))
    if (s.size() == d)
      out.add_term(Monomial::square_free(s), 1);
  return out;
}

Polynomial elementary_symmetric(int d, int n) {
  if (d < 1 || d > n)
    throw DomainError("elementary symmetric degree out of range");
  return elementary_symmetric(d, PointSet::full(n));
}

Polynomial act(const LocalBijection& f, const Polynomial& p) {
  Polynomial out;
  for (const auto& [m, c] : p.terms())
    if (auto image = act(f, m))
      out.add_term(*image, c);
  return out;
}

Polynomial act_graded(const LocalBijection& f, const Polynomial& p) {
  Polynomial out;
  for (const auto& [m, c] : p.terms())
    if (m.max_variable() < f.ground_size() && m.support() == f.domain())
      out.add_term(*act(f, m), c);
  return out;
}

Polynomial partial(int var, const Polynomial& p) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    int e = m.exponent(var);
    if (e == 0)
      continue;
    Monomial rest;
    for (auto [v, x] : m.entries())
      rest = rest * Monomial::variable(v, v == var ? x - 1 : x);
    out.add_term(rest, c * e);
  }
  return out;
}

Polynomial derivation_D(const Polynomial& p, int n) {
  Polynomial out;
  for (int i = 0; i < n; ++i)
    out += partial(i, p);
  return out;
}

Polynomial steenrod(int k, const Polynomial& p, int n) {
  if (k < 0)
    throw DomainError("Steenrod index must be non-negative");
  Polynomial out;
  for (int i = 0; i < n; ++i)
    out += Polynomial(Monomial::variable(i, k + 1)) * partial(i, p);
  return out;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    if (m.is_one())
      out += to_string(mag);
    else if (mag == 1)
      out += to_string(m);
    else
      out += to_string(mag) + "*" + to_string(m);
  }
  return out;
}

namespace {

class PolyParser {
public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  Polynomial parse() {
    skip();
    if (pos_ == s_.size())
      fail("empty polynomial");
    Polynomial out;
    bool first = true;
    while (true) {
      skip();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [m, c] = term();
      out.add_term(m, sign * c);
      skip();
      if (pos_ == s_.size())
        break;
    }
    return out;
  }

private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at position " + std::to_string(pos_) + ": " + what);
  }
  long number() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek())))
      ++pos_;
    if (start == pos_)
      fail("expected a number");
    if (pos_ - start > 9)
      fail("exponent or index too large");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  std::pair<Monomial, Rational> term() {
    Monomial m;
    Rational c = 1;
    while (true) {
      skip();
      if (peek() == 'x') {
        ++pos_;
        long idx = number();
        if (idx < 1)
          fail("variables are numbered from 1");
        long e = 1;
        skip();
        if (peek() == '^') {
          ++pos_;
          skip();
          e = number();
        }
        m = m * Monomial::variable(static_cast<int>(idx - 1), static_cast<int>(e));
      } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())))
          ++pos_;
        if (peek() == '/') {
          ++pos_;
          if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected a denominator");
          while (std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        }
        c *= parse_rational(s_.substr(start, pos_ - start));
      } else {
        fail("expected a coefficient or a variable");
      }
      skip();
      if (peek() != '*')
        break;
      ++pos_;
    }
    return {m, c};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text) { return PolyParser(text).parse(); }

} // namespace pgd
