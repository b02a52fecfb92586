#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "covering/constellation.hpp"
#include "covering/rational_map.hpp"

namespace covering {

/// splitmix64: tiny deterministic generator. The standard distributions are
/// implementation-defined, so seeded reports stay byte-identical only with
/// a fixed mapping like this one.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // modulo mapping; the bias is irrelevant at desk scale
  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool chance(int percent) { return below(100) < static_cast<std::uint64_t>(percent); }

private:
  std::uint64_t state_;
};

inline Perm random_perm(Rng& rng, int degree) {
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i + 1;
  for (int i = degree - 1; i > 0; --i)
    std::swap(images[i], images[rng.below(i + 1)]);
  return Perm(std::move(images));
}

inline Perm random_transposition(Rng& rng, int degree) {
  int a = static_cast<int>(rng.range(1, degree));
  int b = static_cast<int>(rng.range(1, degree - 1));
  if (b >= a) ++b;
  return Perm::transposition(degree, a, b);
}

/// Random valid constellation: entries-1 random non-identity permutations
/// plus the closing inverse, retried until the result is transitive and the
/// closure is not the identity.
inline Constellation random_constellation(Rng& rng, int degree, int entries) {
  if (degree == 1) return Constellation(1, {});
  if (entries < 2)
    throw std::invalid_argument("need at least 2 entries for degree > 1");
  for (;;) {
    std::vector<Perm> tuple;
    Perm acc = Perm::identity(degree);
    for (int e = 0; e + 1 < entries; ++e) {
      Perm p = random_perm(rng, degree);
      if (p.is_identity()) p = random_transposition(rng, degree);
      tuple.push_back(p);
      acc = compose(acc, p);
    }
    Perm closer = inverse(acc);
    if (!closer.is_identity()) tuple.push_back(closer);
    Constellation c(degree, std::move(tuple));
    if (c.size() >= 1 && c.is_valid()) return c;
  }
}

/// Random general-position polynomial constellation of degree d: d-1 random
/// transpositions whose closure is a full d-cycle, with the infinity entry
/// rotated to a random position.
inline Constellation random_generic_polynomial(Rng& rng, int degree) {
  if (degree < 2)
    throw std::invalid_argument("generic polynomials need degree >= 2");
  for (;;) {
    std::vector<Perm> tuple;
    Perm acc = Perm::identity(degree);
    for (int e = 0; e < degree - 1; ++e) {
      Perm t = random_transposition(rng, degree);
      tuple.push_back(t);
      acc = compose(acc, t);
    }
    Perm closer = inverse(acc);
    CycleType ct = cycle_type(closer);
    if (ct.size() != 1 || ct[0] != degree) continue;
    tuple.push_back(closer);
    // cyclic rotation keeps the identity product
    int shift = static_cast<int>(rng.below(tuple.size()));
    std::rotate(tuple.begin(), tuple.begin() + shift, tuple.end());
    Constellation c(degree, std::move(tuple));
    if (c.is_valid()) return c;
  }
}

inline GaussRat random_gauss_rat(Rng& rng, long height, bool real_only = false) {
  auto part = [&]() {
    BigInt num(rng.range(-height, height));
    BigInt den(rng.range(1, height));
    return make_rational(num, den);
  };
  GaussRat g;
  g.re = part();
  if (!real_only && rng.chance(50)) g.im = part();
  return g;
}

inline Poly random_poly(Rng& rng, int max_degree, long height) {
  int deg = static_cast<int>(rng.range(0, max_degree));
  std::vector<GaussRat> coeffs(deg + 1);
  for (int k = 0; k <= deg; ++k) coeffs[k] = random_gauss_rat(rng, height);
  while (coeffs.back().is_zero()) coeffs.back() = random_gauss_rat(rng, height);
  return Poly(std::move(coeffs));
}

/// Random nonconstant rational map of degree <= max_degree with coefficient
/// height <= height.
inline RationalMap random_rational_map(Rng& rng, int max_degree, long height) {
  for (;;) {
    Poly num = random_poly(rng, max_degree, height);
    Poly den = rng.chance(40) ? Poly::one() : random_poly(rng, max_degree, height);
    RationalMap r(num, den);
    if (!r.is_constant()) return r;
  }
}

inline Mobius random_mobius(Rng& rng, long height) {
  for (;;) {
    GaussRat a = random_gauss_rat(rng, height);
    GaussRat b = random_gauss_rat(rng, height);
    GaussRat c = random_gauss_rat(rng, height);
    GaussRat d = random_gauss_rat(rng, height);
    if ((a * d - b * c).is_zero()) continue;
    return Mobius(a, b, c, d);
  }
}

inline std::vector<std::pair<RationalMap, RationalMap>> random_sample_pairs(
    Rng& rng, int count, int max_degree, long height) {
  std::vector<std::pair<RationalMap, RationalMap>> pairs;
  pairs.reserve(count);
  for (int i = 0; i < count; ++i)
    pairs.emplace_back(random_rational_map(rng, max_degree, height),
                       random_rational_map(rng, max_degree, height));
  return pairs;
}

}  // namespace covering
