#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "covering/rational_map.hpp"

namespace covering {

namespace zi {

/// Gaussian integer, the arithmetic behind rational-root search over Q(i).
struct GaussInt {
  BigInt re;
  BigInt im;

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_unit() const { return norm() == 1; }
  BigInt norm() const { return re * re + im * im; }
  GaussInt conj() const { return {re, -im}; }

  friend GaussInt operator+(const GaussInt& a, const GaussInt& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussInt operator-(const GaussInt& a, const GaussInt& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussInt& a, const GaussInt& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator<(const GaussInt& a, const GaussInt& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }
};

inline BigInt floor_div(const BigInt& n, const BigInt& d) {
  BigInt q = n / d;  // truncates toward zero
  if (n % d != 0 && ((n < 0) != (d < 0))) --q;
  return q;
}

inline BigInt round_div(const BigInt& n, const BigInt& d) {
  BigInt dd = d < 0 ? -d : d;
  BigInt nn = d < 0 ? -n : n;
  BigInt q = floor_div(nn, dd);
  BigInt rem = nn - q * dd;
  if (2 * rem >= dd) ++q;
  return q;
}

/// Euclidean division with nearest rounding: norm(rem) <= norm(b)/2.
inline std::pair<GaussInt, GaussInt> divrem(const GaussInt& a,
                                            const GaussInt& b) {
  if (b.is_zero()) throw std::domain_error("Gaussian division by zero");
  GaussInt num = a * b.conj();
  BigInt n = b.norm();
  GaussInt q{round_div(num.re, n), round_div(num.im, n)};
  return {q, a - q * b};
}

inline bool divides(const GaussInt& d, const GaussInt& a) {
  return divrem(a, d).second.is_zero();
}

inline GaussInt gcd(GaussInt a, GaussInt b) {
  while (!b.is_zero()) {
    GaussInt r = divrem(a, b).second;
    a = b;
    b = r;
  }
  return a;
}

/// Associate with re > 0, im >= 0 (or the unit 1 itself).
inline GaussInt canonical_associate(GaussInt g) {
  if (g.is_zero()) return g;
  for (int k = 0; k < 4; ++k) {
    if (g.re > 0 && g.im >= 0) return g;
    g = g * GaussInt{0, 1};
  }
  return g;
}

inline BigInt sqrt_minus_one_mod(const BigInt& p) {
  using boost::multiprecision::powm;
  BigInt e = (p - 1) / 2;
  for (BigInt a = 2;; ++a) {
    if (powm(a, e, p) == p - 1) return powm(a, e / 2, p);
  }
}

/// Factor g into canonical Gaussian primes. Returns false when the norm has
/// a factor beyond the trial-division range (search gives up, callers fall
/// back to square-free reporting).
inline bool factorize(GaussInt g,
                      std::vector<std::pair<GaussInt, int>>* factors) {
  factors->clear();
  if (g.is_zero()) return false;
  BigInt n = g.norm();

  std::vector<std::pair<BigInt, int>> rational_primes;
  auto take = [&](const BigInt& p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) rational_primes.emplace_back(p, e);
  };
  take(2);
  for (BigInt p = 3; p * p <= n && p < 1'000'000; p += 2) take(p);
  if (n > 1) {
    if (n >= BigInt(1'000'000) * BigInt(1'000'000)) return false;
    rational_primes.emplace_back(n, 1);  // no factor below 1e6, hence prime
    n = 1;
  }

  auto extract = [&g, factors](const GaussInt& prime) {
    int e = 0;
    while (divides(prime, g)) {
      g = divrem(g, prime).first;
      ++e;
    }
    if (e > 0) factors->emplace_back(canonical_associate(prime), e);
  };

  for (const auto& [p, e] : rational_primes) {
    (void)e;
    if (p == 2) {
      extract(GaussInt{1, 1});
    } else if (p % 4 == 3) {
      extract(GaussInt{p, 0});
    } else {
      BigInt k = sqrt_minus_one_mod(p);
      GaussInt pi = gcd(GaussInt{p, 0}, GaussInt{k, 1});
      extract(pi);
      extract(pi.conj());
    }
  }
  return g.is_unit();
}

/// All divisors up to associates, as canonical associates.
inline std::vector<GaussInt> divisors(const GaussInt& g, std::size_t cap) {
  std::vector<std::pair<GaussInt, int>> factors;
  if (!factorize(g, &factors)) return {};
  std::vector<GaussInt> divs{GaussInt{1, 0}};
  for (const auto& [prime, e] : factors) {
    std::vector<GaussInt> next;
    next.reserve(divs.size() * (e + 1));
    for (const GaussInt& d : divs) {
      GaussInt acc = d;
      next.push_back(canonical_associate(acc));
      for (int k = 1; k <= e; ++k) {
        acc = acc * prime;
        next.push_back(canonical_associate(acc));
      }
    }
    divs.swap(next);
    if (divs.size() > cap) return {};
  }
  return divs;
}

}  // namespace zi

/// Square-free decomposition (Yun); returns monic factors with their
/// multiplicities, product over factor^multiplicity = input up to a scalar.
inline std::vector<std::pair<Poly, int>> square_free_decomposition(Poly f) {
  std::vector<std::pair<Poly, int>> out;
  if (f.degree() < 1) return out;
  f = make_monic(f);
  Poly df = f.derivative();
  Poly a = poly_gcd(f, df);
  Poly b = divrem(f, a).first;
  Poly c = divrem(df, a).first;
  Poly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Poly ai = poly_gcd(b, d);
    if (ai.degree() > 0) out.emplace_back(ai, i);
    b = divrem(b, ai).first;
    c = divrem(d, ai).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

struct CriticalPointReport {
  Poly critical_polynomial;  // numerator of R'
  int sphere_count = 0;      // 2 deg(R) - 2, critical points on the sphere
  int infinity_deficiency = 0;  // sphere_count - deg(critical_polynomial)
  std::vector<std::pair<GaussRat, int>> roots;       // exact, with multiplicity
  std::vector<std::pair<Poly, int>> unresolved;      // square-free factors
  bool complete = false;  // all finite critical points found exactly
};

namespace detail {

inline BigInt lcm_big(const BigInt& a, const BigInt& b) {
  return a / boost::multiprecision::gcd(a, b) * b;
}

inline BigInt gauss_rat_height(const GaussRat& g) {
  BigInt h = 0;
  for (const Rational* r : {&g.re, &g.im}) {
    BigInt n = numerator(*r);
    if (n < 0) n = -n;
    h = std::max(h, n);
    h = std::max(h, BigInt(denominator(*r)));
  }
  return h;
}

}  // namespace detail

/// Exact roots of p in Q(i) by the rational-root theorem over Z[i], limited
/// to candidates of height <= height_cap. Deflates found roots; whatever is
/// left lands in `unresolved` via square-free decomposition.
inline void find_rational_roots(Poly p, const BigInt& height_cap,
                                std::vector<std::pair<GaussRat, int>>* roots,
                                std::vector<std::pair<Poly, int>>* unresolved) {
  roots->clear();
  unresolved->clear();
  if (p.degree() < 1) return;

  // roots at zero
  int zero_mult = 0;
  while (p.degree() >= 1 && p.coeff(0).is_zero()) {
    std::vector<GaussRat> shifted(p.coeffs().begin() + 1, p.coeffs().end());
    p = Poly(std::move(shifted));
    ++zero_mult;
  }
  if (zero_mult > 0) roots->emplace_back(GaussRat(), zero_mult);

  if (p.degree() >= 1) {
    // clear denominators into Z[i]
    BigInt den(1);
    for (const GaussRat& c : p.coeffs()) {
      den = detail::lcm_big(den, denominator(c.re));
      den = detail::lcm_big(den, denominator(c.im));
    }
    std::vector<zi::GaussInt> ic;
    for (const GaussRat& c : p.coeffs()) {
      Rational re = c.re * den;
      Rational im = c.im * den;
      ic.push_back({numerator(re), numerator(im)});
    }

    auto lead_divs = zi::divisors(ic.back(), 4096);
    auto trail_divs = zi::divisors(ic.front(), 4096);
    if (!lead_divs.empty() && !trail_divs.empty() &&
        lead_divs.size() * trail_divs.size() <= 65536) {
      const zi::GaussInt units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      std::map<std::pair<Rational, Rational>, GaussRat> candidates;
      for (const auto& num : trail_divs) {
        for (const auto& u : units) {
          zi::GaussInt un = num * u;
          for (const auto& q : lead_divs) {
            BigInt qn = q.norm();
            zi::GaussInt scaled = un * q.conj();
            GaussRat cand{make_rational(scaled.re, qn),
                          make_rational(scaled.im, qn)};
            if (detail::gauss_rat_height(cand) > height_cap) continue;
            candidates.emplace(std::make_pair(cand.re, cand.im), cand);
          }
        }
      }
      for (const auto& [key, r] : candidates) {
        (void)key;
        if (p.degree() < 1) break;
        int mult = 0;
        while (p.degree() >= 1 && p.eval(r).is_zero()) {
          Poly lin(std::vector<GaussRat>{-r, GaussRat(1L)});
          p = divrem(p, lin).first;
          ++mult;
        }
        if (mult > 0) roots->emplace_back(r, mult);
      }
    }
  }

  if (p.degree() >= 1) *unresolved = square_free_decomposition(p);
}

/// Critical data of a rational map: the derivative numerator, the sphere
/// count 2d-2 with its infinity deficiency, and the finite critical points
/// resolved exactly where rational-root search (height <= height_cap)
/// succeeds.
inline CriticalPointReport critical_points(const RationalMap& r,
                                           const BigInt& height_cap = 64) {
  CriticalPointReport rep;
  rep.critical_polynomial = critical_point_polynomial(r);
  rep.sphere_count = 2 * r.degree() - 2;
  int finite = rep.critical_polynomial.degree();
  rep.infinity_deficiency = rep.sphere_count - (finite < 0 ? 0 : finite);
  find_rational_roots(rep.critical_polynomial, height_cap, &rep.roots,
                      &rep.unresolved);
  int resolved = 0;
  for (const auto& [root, mult] : rep.roots) {
    (void)root;
    resolved += mult;
  }
  rep.complete = rep.unresolved.empty() &&
                 resolved == (finite < 0 ? 0 : finite);
  return rep;
}

}  // namespace covering
