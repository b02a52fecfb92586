#pragma once

#include <array>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "covering/polynomial.hpp"

namespace covering {

/// Quotient of two coprime polynomials over Q(i), normalized so that the
/// denominator is monic. Degree-0 maps are the constants; the point at
/// infinity is not representable as a constant value, so compositions that
/// would produce the constant infinity throw.
class RationalMap {
public:
  // marks num/den pairs already known coprime, skipping the gcd pass
  struct coprime_tag {};

  RationalMap() : num_(Poly::zero()), den_(Poly::one()) {}

  RationalMap(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize(false);
  }

  RationalMap(Poly num, Poly den, coprime_tag)
      : num_(std::move(num)), den_(std::move(den)) {
    normalize(true);
  }

  explicit RationalMap(Poly num) : num_(std::move(num)), den_(Poly::one()) {}

  static RationalMap constant(GaussRat c) { return RationalMap(Poly(std::move(c))); }
  static RationalMap identity() { return RationalMap(Poly::z()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  /// max(deg num, deg den); constants have degree 0.
  int degree() const {
    int d = std::max(num_.degree(), den_.degree());
    return d < 0 ? 0 : d;
  }

  bool is_constant() const { return degree() == 0; }

  GaussRat constant_value() const {
    if (!is_constant()) throw std::domain_error("map is not constant");
    return num_.coeff(0) / den_.coeff(0);
  }

  GaussRat eval(const GaussRat& z) const {
    GaussRat d = den_.eval(z);
    if (d.is_zero()) throw std::domain_error("evaluation at a pole");
    return num_.eval(z) / d;
  }

  std::complex<double> eval(const std::complex<double>& z) const {
    return num_.eval(z) / den_.eval(z);
  }

  /// Coefficientwise conjugation: represents z -> conj(R(conj(z))).
  RationalMap conj_coeffs() const {
    return RationalMap(num_.conj_coeffs(), den_.conj_coeffs());
  }

  friend bool operator==(const RationalMap& a, const RationalMap& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalMap& a, const RationalMap& b) {
    return !(a == b);
  }

private:
  void normalize(bool known_coprime) {
    if (den_.is_zero()) throw std::invalid_argument("denominator is zero");
    if (num_.is_zero()) {
      den_ = Poly::one();
      return;
    }
    if (!known_coprime && num_.degree() > 0 && den_.degree() > 0) {
      Poly g = poly_gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = divrem(num_, g).first;
        den_ = divrem(den_, g).first;
      }
    }
    GaussRat lead = den_.leading();
    num_ = num_ * (GaussRat(1L) / lead);
    den_ = den_ * (GaussRat(1L) / lead);
  }

  Poly num_;
  Poly den_;
};

/// Exact composition outer(inner). The result carries the true
/// post-cancellation degree; for nonconstant inputs that is the product of
/// the degrees. Composing onto an exact pole would be the constant infinity
/// and throws instead.
///
/// The homogenized numerator and denominator below are already coprime: a
/// common irreducible factor would have a root w, and either inner(w) is a
/// shared root of outer's coprime pair, or q(w)=0 forces both leading
/// coefficients of outer to vanish. So the quadratic-blowup gcd pass is
/// skipped.
inline RationalMap compose(const RationalMap& outer, const RationalMap& inner) {
  if (inner.is_constant()) {
    GaussRat c = inner.constant_value();
    GaussRat d = outer.den().eval(c);
    if (d.is_zero())
      throw std::domain_error(
          "composition lands on a pole; the constant infinity is not representable");
    return RationalMap::constant(outer.num().eval(c) / d);
  }
  if (outer.is_constant()) return outer;

  const Poly& p = inner.num();
  const Poly& q = inner.den();
  const int n = std::max(outer.num().degree(), outer.den().degree());

  // homogeneous Horner: H_k = H_{k+1} p + a_k q^{n-k}
  Poly num(outer.num().coeff(n));
  Poly den(outer.den().coeff(n));
  Poly q_power = Poly::one();
  for (int k = n - 1; k >= 0; --k) {
    q_power = q_power * q;
    num = num * p + Poly(outer.num().coeff(k)) * q_power;
    den = den * p + Poly(outer.den().coeff(k)) * q_power;
  }
  return RationalMap(std::move(num), std::move(den), RationalMap::coprime_tag{});
}

/// Numerator of the derivative, num' den - num den', with no further
/// scaling; its roots are the finite critical points.
inline Poly critical_point_polynomial(const RationalMap& r) {
  if (r.is_constant())
    throw std::invalid_argument("constant map has no critical points");
  return r.num().derivative() * r.den() - r.num() * r.den().derivative();
}

/// Moebius transformation as a projective 2x2 matrix (a b; c d) acting by
/// z -> (a z + b)/(c z + d); scalar multiples are identified by scaling the
/// first nonzero entry to 1.
class Mobius {
public:
  Mobius() : m_{GaussRat(1L), GaussRat(0L), GaussRat(0L), GaussRat(1L)} {}

  Mobius(GaussRat a, GaussRat b, GaussRat c, GaussRat d)
      : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    normalize();
  }

  static Mobius identity() { return Mobius(); }

  GaussRat det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

  Mobius inverse() const {
    return Mobius(m_[3], -m_[1], -m_[2], m_[0]);
  }

  const std::array<GaussRat, 4>& entries() const { return m_; }

  GaussRat apply(const GaussRat& z) const {
    GaussRat den = m_[2] * z + m_[3];
    if (den.is_zero()) throw std::domain_error("Moebius map sends point to infinity");
    return (m_[0] * z + m_[1]) / den;
  }

  RationalMap to_rational_map() const {
    Poly num(std::vector<GaussRat>{m_[1], m_[0]});
    Poly den(std::vector<GaussRat>{m_[3], m_[2]});
    return RationalMap(std::move(num), std::move(den));
  }

  friend Mobius operator*(const Mobius& f, const Mobius& g) {
    // matrix product; (f*g)(z) = f(g(z))
    return Mobius(f.m_[0] * g.m_[0] + f.m_[1] * g.m_[2],
                  f.m_[0] * g.m_[1] + f.m_[1] * g.m_[3],
                  f.m_[2] * g.m_[0] + f.m_[3] * g.m_[2],
                  f.m_[2] * g.m_[1] + f.m_[3] * g.m_[3]);
  }

  friend bool operator==(const Mobius& a, const Mobius& b) {
    return a.m_ == b.m_;
  }
  friend bool operator!=(const Mobius& a, const Mobius& b) { return !(a == b); }

private:
  void normalize() {
    if (det().is_zero())
      throw std::invalid_argument("Moebius matrix must have nonzero determinant");
    for (const GaussRat& e : m_) {
      if (!e.is_zero()) {
        GaussRat inv = GaussRat(1L) / e;
        for (GaussRat& x : m_) x = x * inv;
        return;
      }
    }
  }

  std::array<GaussRat, 4> m_;
};

// ---------------------------------------------------------------------------
// Rational map literal syntax: "(NUM)/(DEN)" or a bare polynomial "NUM".
// The printer emits the normalized form and parse/print round-trips.
// ---------------------------------------------------------------------------

inline std::string to_string(const RationalMap& r) {
  if (r.den() == Poly::one()) return "(" + to_string(r.num()) + ")";
  return "(" + to_string(r.num()) + ")/(" + to_string(r.den()) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const RationalMap& r) {
  return os << to_string(r);
}

inline RationalMap parse_rational_map(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("empty rational map literal");

  if (t[0] == '(') {
    int depth = 0;
    std::size_t close = std::string::npos;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] == '(') ++depth;
      if (t[i] == ')' && --depth == 0) {
        close = i;
        break;
      }
    }
    if (close == std::string::npos)
      throw std::invalid_argument("unbalanced '(' in rational map: " + text);
    if (close == t.size() - 1)
      return RationalMap(parse_poly(t.substr(1, close - 1)));
    if (t[close + 1] == '/' && close + 2 < t.size() && t[close + 2] == '(' &&
        t.back() == ')') {
      Poly num = parse_poly(t.substr(1, close - 1));
      Poly den = parse_poly(t.substr(close + 3, t.size() - close - 4));
      return RationalMap(std::move(num), std::move(den));
    }
  }
  return RationalMap(parse_poly(t));
}

inline std::string to_string(const Mobius& m) {
  return to_string(m.to_rational_map());
}

inline Mobius parse_mobius(const std::string& text) {
  RationalMap r = parse_rational_map(text);
  if (r.num().degree() > 1 || r.den().degree() > 1)
    throw std::invalid_argument("Moebius literal must have degree <= 1: " + text);
  Mobius m(r.num().coeff(1), r.num().coeff(0), r.den().coeff(1),
           r.den().coeff(0));
  return m;
}

}  // namespace covering
