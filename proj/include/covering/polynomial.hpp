#pragma once

#include <complex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "covering/gaussian_rational.hpp"

namespace covering {

/// Univariate polynomial over Q(i). Coefficients are stored low-to-high with
/// no trailing zeros; the zero polynomial has an empty coefficient list and
/// degree -1.
class Poly {
public:
  Poly() = default;

  explicit Poly(std::vector<GaussRat> coeffs) : c_(std::move(coeffs)) {
    trim();
  }

  Poly(GaussRat constant) {
    c_.push_back(std::move(constant));
    trim();
  }

  static Poly zero() { return Poly(); }
  static Poly one() { return Poly(GaussRat(1L)); }
  static Poly z() { return monomial(1, GaussRat(1L)); }

  static Poly monomial(int degree, GaussRat coeff) {
    if (coeff.is_zero()) return Poly();
    std::vector<GaussRat> c(degree + 1);
    c[degree] = std::move(coeff);
    return Poly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_constant() const { return c_.size() <= 1; }

  const GaussRat& leading() const {
    if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
    return c_.back();
  }

  GaussRat coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return GaussRat();
    return c_[k];
  }

  const std::vector<GaussRat>& coeffs() const { return c_; }

  GaussRat eval(const GaussRat& x) const {
    GaussRat acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  std::complex<double> eval(const std::complex<double>& x) const {
    std::complex<double> acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = acc * x + it->to_complex();
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<GaussRat> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
      d[k - 1] = c_[k] * GaussRat(static_cast<long>(k));
    return Poly(std::move(d));
  }

  /// Coefficientwise complex conjugation; represents z -> conj(p(conj(z))).
  Poly conj_coeffs() const {
    std::vector<GaussRat> d(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) d[k] = c_[k].conj();
    return Poly(std::move(d));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<GaussRat> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k)
      c[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<GaussRat> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k)
      c[k] = a.coeff(static_cast<int>(k)) - b.coeff(static_cast<int>(k));
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a) {
    std::vector<GaussRat> c(a.c_.size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = -a.c_[k];
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<GaussRat> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, const GaussRat& s) {
    std::vector<GaussRat> c(a.c_.size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.c_[k] * s;
    return Poly(std::move(c));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative exponent");
    Poly acc = Poly::one();
    for (int k = 0; k < e; ++k) acc = acc * *this;
    return acc;
  }

  /// Substitute another polynomial for z.
  Poly compose(const Poly& inner) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = acc * inner + Poly(*it);
    return acc;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<GaussRat> c_;
};

/// Euclidean division over the field Q(i).
inline std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly rem = a;
  std::vector<GaussRat> q;
  if (rem.degree() >= b.degree())
    q.assign(rem.degree() - b.degree() + 1, GaussRat());
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int shift = rem.degree() - b.degree();
    GaussRat factor = rem.leading() / b.leading();
    q[shift] = factor;
    rem = rem - Poly::monomial(shift, factor) * b;
  }
  return {Poly(std::move(q)), rem};
}

inline Poly make_monic(const Poly& a) {
  if (a.is_zero()) return a;
  return a * (GaussRat(1L) / a.leading());
}

/// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
inline Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

/// Highest-degree terms first: "z^2+2z+1", "(1+2i)z^3-z", "0". Coefficients
/// with both parts are parenthesized.
inline std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    GaussRat c = p.coeff(k);
    if (c.is_zero()) continue;
    bool mixed = c.re != 0 && c.im != 0;
    std::string cs = to_string(c);
    if (!out.empty()) {
      if (!mixed && cs[0] == '-') {
        out += "-";
        cs = cs.substr(1);
      } else {
        out += "+";
      }
    }
    if (k == 0) {
      out += mixed ? "(" + cs + ")" : cs;
      continue;
    }
    if (cs == "1")
      ;  // unit coefficient elided
    else if (cs == "-1")
      out += "-";
    else
      out += mixed ? "(" + cs + ")" : cs;
    out += "z";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Poly& p) {
  return os << to_string(p);
}

/// Parse "z^2+2z+1", "(1+2i)z^3-z/..."-style text (whitespace ignored,
/// optional '*' between coefficient and z).
inline Poly parse_poly(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("empty polynomial");

  Poly acc;
  std::size_t pos = 0;
  while (pos < t.size()) {
    bool negative = false;
    if (t[pos] == '+' || t[pos] == '-') {
      negative = t[pos] == '-';
      ++pos;
      if (pos >= t.size())
        throw std::invalid_argument("dangling sign in polynomial: " + text);
    }
    GaussRat coeff(1L);
    bool have_coeff = false;
    if (t[pos] == '(') {
      std::size_t close = t.find(')', pos);
      if (close == std::string::npos)
        throw std::invalid_argument("unbalanced '(' in polynomial: " + text);
      coeff = parse_gauss_rat(t.substr(pos + 1, close - pos - 1));
      have_coeff = true;
      pos = close + 1;
    } else if (std::isdigit(static_cast<unsigned char>(t[pos])) ||
               t[pos] == 'i') {
      GaussRat g;
      detail::parse_gauss_term(t, pos, &g);
      coeff = g;
      have_coeff = true;
    }
    if (negative) coeff = -coeff;
    if (pos < t.size() && t[pos] == '*') ++pos;

    int exponent = 0;
    if (pos < t.size() && t[pos] == 'z') {
      ++pos;
      exponent = 1;
      if (pos < t.size() && t[pos] == '^') {
        ++pos;
        std::size_t start = pos;
        while (pos < t.size() &&
               std::isdigit(static_cast<unsigned char>(t[pos])))
          ++pos;
        if (start == pos)
          throw std::invalid_argument("missing exponent in polynomial: " + text);
        exponent = std::stoi(t.substr(start, pos - start));
      }
    } else if (!have_coeff) {
      throw std::invalid_argument("expected term at '" + t.substr(pos) +
                                  "' in polynomial: " + text);
    }
    acc = acc + Poly::monomial(exponent, coeff);
  }
  return acc;
}

}  // namespace covering
