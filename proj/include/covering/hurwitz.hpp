#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "covering/constellation.hpp"
#include "covering/surgery.hpp"

namespace covering {

enum class Ternary { yes, no, inconclusive };

inline const char* to_string(Ternary t) {
  switch (t) {
    case Ternary::yes: return "yes";
    case Ternary::no: return "no";
    default: return "inconclusive";
  }
}

/// Caps on the braid-orbit search. max_states bounds the number of distinct
/// canonical forms kept; max_depth bounds the BFS depth.
struct OrbitBudget {
  std::size_t max_states = 1'000'000;
  std::size_t max_depth = static_cast<std::size_t>(-1);
};

/// A constellation tuple reduced modulo simultaneous sheet relabeling.
/// Exact (lexicographically least over all d! relabelings) for d <= 8; for
/// larger degrees a traversal-based normal form is used, which still never
/// identifies inequivalent tuples but is not guaranteed least, so orbit
/// searches on it cannot certify a "no".
struct CanonicalForm {
  int degree = 0;
  std::vector<int> flat;  // entry-major images, flat[e*d + x - 1] = sigma_e(x)
  bool exact = true;

  Constellation to_constellation() const {
    std::vector<Perm> tuple;
    const std::size_t k = degree == 0 ? 0 : flat.size() / degree;
    tuple.reserve(k);
    for (std::size_t e = 0; e < k; ++e)
      tuple.emplace_back(std::vector<int>(flat.begin() + e * degree,
                                          flat.begin() + (e + 1) * degree));
    return Constellation(degree, std::move(tuple));
  }

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.degree == b.degree && a.flat == b.flat;
  }
  friend bool operator!=(const CanonicalForm& a, const CanonicalForm& b) {
    return !(a == b);
  }
  friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.flat < b.flat;
  }
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
      h ^= v;
      h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(f.degree));
    for (int v : f.flat) mix(static_cast<std::uint64_t>(v));
    return static_cast<std::size_t>(h);
  }
};

namespace detail {

// Relabel the tuple along g (new label of x is g[x-1]) into flat form.
inline void relabel_flat(const std::vector<Perm>& tuple, int d,
                         const std::vector<int>& g, std::vector<int>* out) {
  out->assign(tuple.size() * d, 0);
  for (std::size_t e = 0; e < tuple.size(); ++e) {
    const Perm& p = tuple[e];
    for (int x = 1; x <= d; ++x)
      (*out)[e * d + g[x - 1] - 1] = g[p.apply(x) - 1];
  }
}

// First-visit relabeling of the transitive tuple action seeded at a sheet.
inline std::vector<int> traversal_relabel(const std::vector<Perm>& tuple,
                                          int d, int seed) {
  std::vector<int> order(d, 0);
  std::vector<int> queue{seed};
  order[seed - 1] = 1;
  int next = 2;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int p = queue[head];
    for (const Perm& s : tuple) {
      int q = s.apply(p);
      if (order[q - 1] == 0) {
        order[q - 1] = next++;
        queue.push_back(q);
      }
    }
  }
  // Unreached sheets (intransitive input) get the remaining labels in order.
  for (int x = 1; x <= d; ++x)
    if (order[x - 1] == 0) order[x - 1] = next++;
  return order;
}

}  // namespace detail

inline CanonicalForm canonical_form(const Constellation& c) {
  const int d = c.degree();
  CanonicalForm best;
  best.degree = d;
  best.exact = d <= 8;

  std::vector<int> candidate;
  if (d <= 8) {
    std::vector<int> g(d);
    std::iota(g.begin(), g.end(), 1);
    bool first = true;
    do {
      detail::relabel_flat(c.tuple(), d, g, &candidate);
      if (first || candidate < best.flat) {
        best.flat = candidate;
        first = false;
      }
    } while (std::next_permutation(g.begin(), g.end()));
  } else {
    bool first = true;
    for (int seed = 1; seed <= d; ++seed) {
      auto g = detail::traversal_relabel(c.tuple(), d, seed);
      detail::relabel_flat(c.tuple(), d, g, &candidate);
      if (first || candidate < best.flat) {
        best.flat = candidate;
        first = false;
      }
    }
  }
  if (c.size() == 0) best.flat.clear();
  return best;
}

/// Elementary Hurwitz move at index i (1-based, 1 <= i < tuple length):
/// (.., a, b, ..) -> (.., a b a^-1, a, ..) in left-first words. Preserves
/// the tuple product and the passport.
inline Constellation braid_move(const Constellation& c, int i) {
  if (i < 1 || i >= c.size())
    throw std::out_of_range("braid index " + std::to_string(i) +
                            " outside [1, " + std::to_string(c.size()) + ")");
  std::vector<Perm> tuple = c.tuple();
  const Perm a = tuple[i - 1];
  const Perm b = tuple[i];
  tuple[i - 1] = compose(compose(a, b), inverse(a));
  tuple[i] = a;
  return Constellation(c.degree(), std::move(tuple), c.target_genus());
}

/// Inverse move: (.., a, b, ..) -> (.., b, b^-1 a b, ..).
inline Constellation braid_move_inverse(const Constellation& c, int i) {
  if (i < 1 || i >= c.size())
    throw std::out_of_range("braid index " + std::to_string(i) +
                            " outside [1, " + std::to_string(c.size()) + ")");
  std::vector<Perm> tuple = c.tuple();
  const Perm a = tuple[i - 1];
  const Perm b = tuple[i];
  tuple[i - 1] = b;
  tuple[i] = compose(compose(inverse(b), a), b);
  return Constellation(c.degree(), std::move(tuple), c.target_genus());
}

struct HurwitzOrbit {
  std::vector<CanonicalForm> states;  // BFS discovery order
  bool exhausted = true;
};

namespace detail {

struct OrbitSearchResult {
  HurwitzOrbit orbit;
  bool found = false;
};

inline OrbitSearchResult orbit_search(const Constellation& c,
                                      const OrbitBudget& budget,
                                      const CanonicalForm* target) {
  if (budget.max_states == 0 || budget.max_depth == 0)
    throw std::invalid_argument("orbit budget fields must be positive");

  OrbitSearchResult res;
  CanonicalForm start = canonical_form(c);
  if (target && start == *target) {
    res.found = true;
  }
  std::unordered_set<CanonicalForm, CanonicalFormHash> seen{start};
  res.orbit.states.push_back(start);
  std::deque<std::pair<CanonicalForm, std::size_t>> queue;
  queue.emplace_back(start, 0);

  while (!queue.empty() && !(res.found && target)) {
    auto [state, depth] = queue.front();
    queue.pop_front();
    Constellation x = state.to_constellation();
    for (int i = 1; i < x.size(); ++i) {
      for (int dir = 0; dir < 2; ++dir) {
        Constellation y = dir == 0 ? braid_move(x, i) : braid_move_inverse(x, i);
        CanonicalForm cf = canonical_form(y);
        if (seen.contains(cf)) continue;
        if (depth >= budget.max_depth) {
          res.orbit.exhausted = false;
          continue;
        }
        if (seen.size() >= budget.max_states) {
          res.orbit.exhausted = false;
          continue;
        }
        if (target && cf == *target) res.found = true;
        seen.insert(cf);
        res.orbit.states.push_back(cf);
        queue.emplace_back(std::move(cf), depth + 1);
      }
      if (res.found && target) break;
    }
  }
  return res;
}

}  // namespace detail

/// BFS closure of the canonical form of c under braid moves and their
/// inverses. exhausted is false iff a budget cap cut the search short.
inline HurwitzOrbit hurwitz_orbit(const Constellation& c,
                                  const OrbitBudget& budget = {}) {
  ValidationResult r = c.validate();
  if (!r.ok) throw std::invalid_argument("invalid constellation: " + r.violation);
  return detail::orbit_search(c, budget, nullptr).orbit;
}

/// Decide whether a and b differ by braid moves plus sheet relabeling.
///
/// A passport mismatch is a certified "no" (both move kinds preserve it).
/// Otherwise the orbit of a is searched for b's canonical form; a completed
/// search can certify "no" only when canonicalization is exact (d <= 8).
inline Ternary same_hurwitz_class(const Constellation& a,
                                  const Constellation& b,
                                  const OrbitBudget& budget = {}) {
  for (const Constellation* c : {&a, &b}) {
    ValidationResult r = c->validate();
    if (!r.ok)
      throw std::invalid_argument("invalid constellation: " + r.violation);
  }
  if (a.degree() != b.degree()) return Ternary::no;
  if (a.size() != b.size()) return Ternary::no;
  if (a.passport() != b.passport()) return Ternary::no;

  CanonicalForm target = canonical_form(b);
  auto res = detail::orbit_search(a, budget, &target);
  if (res.found) return Ternary::yes;
  if (res.orbit.exhausted && target.exact) return Ternary::no;
  return Ternary::inconclusive;
}

/// A Hurwitz class is symmetric iff it contains the orientation-reversed
/// copy of its element.
inline Ternary is_symmetric(const Constellation& c,
                            const OrbitBudget& budget = {}) {
  return same_hurwitz_class(c, mirror(c), budget);
}

/// Greedy componentwise matching of two covering collections by certified
/// Hurwitz class. The matching is reported, not claimed canonical.
struct CollectionMatch {
  struct Pair {
    std::string left_label;
    std::string right_label;
    Ternary verdict;
  };
  Ternary overall = Ternary::yes;
  std::vector<Pair> pairs;
};

inline CollectionMatch match_collections(const CoveringCollection& a,
                                         const CoveringCollection& b,
                                         const OrbitBudget& budget = {}) {
  CollectionMatch match;
  if (a.components.size() != b.components.size()) {
    match.overall = Ternary::no;
    return match;
  }
  std::vector<bool> used(b.components.size(), false);
  bool any_inconclusive = false;
  for (const auto& ca : a.components) {
    bool matched = false;
    bool saw_inconclusive = false;
    for (std::size_t j = 0; j < b.components.size(); ++j) {
      if (used[j]) continue;
      Ternary t = same_hurwitz_class(ca.constellation,
                                     b.components[j].constellation, budget);
      if (t == Ternary::yes) {
        used[j] = true;
        match.pairs.push_back({ca.label, b.components[j].label, t});
        matched = true;
        break;
      }
      if (t == Ternary::inconclusive) saw_inconclusive = true;
    }
    if (!matched) {
      match.pairs.push_back(
          {ca.label, "", saw_inconclusive ? Ternary::inconclusive : Ternary::no});
      if (saw_inconclusive)
        any_inconclusive = true;
      else {
        match.overall = Ternary::no;
        return match;
      }
    }
  }
  if (any_inconclusive) match.overall = Ternary::inconclusive;
  return match;
}

}  // namespace covering
