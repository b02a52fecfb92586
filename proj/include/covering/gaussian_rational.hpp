#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <complex>
#include <ostream>
#include <stdexcept>
#include <string>

namespace covering {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  return Rational(num) / Rational(den);
}

/// Exact element of Q(i): real and imaginary parts are rationals in lowest
/// terms with positive denominators (cpp_rational keeps that invariant).
struct GaussRat {
  Rational re;
  Rational im;

  GaussRat() = default;
  GaussRat(Rational r) : re(std::move(r)) {}
  GaussRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussRat(long r) : re(r) {}
  GaussRat(long r, long i) : re(r), im(i) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussRat conj() const { return {re, -im}; }

  Rational norm() const { return re * re + im * im; }

  std::complex<double> to_complex() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
    Rational n = b.norm();
    if (n == 0) throw std::domain_error("division by zero");
    GaussRat c = a * b.conj();
    return {c.re / n, c.im / n};
  }
  GaussRat& operator+=(const GaussRat& o) { return *this = *this + o; }
  GaussRat& operator-=(const GaussRat& o) { return *this = *this - o; }
  GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }
  GaussRat& operator/=(const GaussRat& o) { return *this = *this / o; }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) {
    return !(a == b);
  }
};

namespace detail {

inline std::string rational_to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

}  // namespace detail

/// Literal format: "a/b", "c/di", "a/b+c/di", "a/b-c/di"; unit denominators
/// and unit imaginary coefficients are elided ("3", "i", "-i", "2-i").
inline std::string to_string(const GaussRat& g) {
  if (g.is_zero()) return "0";
  std::string out;
  if (g.re != 0) out += detail::rational_to_string(g.re);
  if (g.im != 0) {
    if (g.im > 0 && !out.empty()) out += "+";
    if (g.im == -1)
      out += "-";
    else if (g.im != 1)
      out += detail::rational_to_string(g.im);
    out += "i";
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const GaussRat& g) {
  return os << to_string(g);
}

namespace detail {

// One signed term "3", "-4/5", "2i", "i", "-i", "7/2i" starting at pos.
// Advances pos past the term.
inline void parse_gauss_term(const std::string& t, std::size_t& pos,
                             GaussRat* acc) {
  const std::string whole = t;
  bool negative = false;
  if (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) {
    negative = t[pos] == '-';
    ++pos;
  }
  if (pos >= t.size())
    throw std::invalid_argument("dangling sign in coefficient: " + whole);

  if (t[pos] == 'i') {
    ++pos;
    acc->im += negative ? -1 : 1;
    return;
  }
  if (!std::isdigit(static_cast<unsigned char>(t[pos])))
    throw std::invalid_argument("expected digits in coefficient: " + whole);

  std::size_t start = pos;
  while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos])))
    ++pos;
  BigInt num(t.substr(start, pos - start));
  BigInt den(1);
  if (pos < t.size() && t[pos] == '/') {
    ++pos;
    start = pos;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos])))
      ++pos;
    if (start == pos)
      throw std::invalid_argument("missing denominator in: " + whole);
    den = BigInt(t.substr(start, pos - start));
    if (den == 0) throw std::invalid_argument("zero denominator in: " + whole);
  }
  Rational value = make_rational(negative ? -num : num, den);
  if (pos < t.size() && t[pos] == 'i') {
    ++pos;
    acc->im += value;
  } else {
    acc->re += value;
  }
}

}  // namespace detail

/// Parse a Gaussian rational literal; whitespace is ignored.
inline GaussRat parse_gauss_rat(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("empty coefficient");

  GaussRat acc;
  std::size_t pos = 0;
  int terms = 0;
  while (pos < t.size()) {
    if (terms > 0 && t[pos] != '+' && t[pos] != '-')
      throw std::invalid_argument("expected '+' or '-' between terms: " + text);
    detail::parse_gauss_term(t, pos, &acc);
    ++terms;
    if (terms > 2)
      throw std::invalid_argument("too many terms in coefficient: " + text);
  }
  return acc;
}

}  // namespace covering
