#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "covering/constellation.hpp"

namespace covering {

/// Gluing choices for a connected sum: which sheet of each side gets
/// amalgamated. Defaults are (last sheet of left, first sheet of right).
/// Different plans may give non-isomorphic constellations; all of them
/// realize the same degree/passport/Euler bookkeeping.
struct SumPlan {
  Constellation left;
  Constellation right;
  int shared_sheet_left;
  int shared_sheet_right;

  SumPlan(Constellation l, Constellation r, int sheet_left = -1,
          int sheet_right = 1)
      : left(std::move(l)),
        right(std::move(r)),
        shared_sheet_left(sheet_left < 0 ? left.degree() : sheet_left),
        shared_sheet_right(sheet_right) {
    if (shared_sheet_left < 1 || shared_sheet_left > left.degree())
      throw std::out_of_range("shared sheet " +
                              std::to_string(shared_sheet_left) +
                              " outside left range");
    if (shared_sheet_right < 1 || shared_sheet_right > right.degree())
      throw std::out_of_range("shared sheet " +
                              std::to_string(shared_sheet_right) +
                              " outside right range");
  }
};

namespace detail {

inline void require_valid_sphere(const Constellation& c, const char* side) {
  if (c.target_genus() != 0)
    throw std::invalid_argument(std::string(side) +
                                " input has unsupported target genus");
  ValidationResult r = c.validate();
  if (!r.ok)
    throw std::invalid_argument(std::string(side) + " input invalid: " +
                                r.violation);
}

// Extend a permutation through a sheet relabeling into a larger sheet set;
// sheets outside the image are fixed.
inline Perm embed(const Perm& p, const std::vector<int>& relabel,
                  int total_degree) {
  std::vector<int> images(total_degree);
  for (int i = 1; i <= total_degree; ++i) images[i - 1] = i;
  for (int x = 1; x <= p.degree(); ++x)
    images[relabel[x - 1] - 1] = relabel[p.apply(x) - 1];
  return Perm(std::move(images));
}

}  // namespace detail

/// One-sheet amalgam of the two monodromy actions: the left action keeps
/// sheets {1..n} with its shared sheet sent to n, the right action moves to
/// {n..n+m-1} with its shared sheet also sent to n, and the tuples are
/// concatenated. Output degree is n + m - 1.
inline Constellation connected_sum(const SumPlan& plan) {
  detail::require_valid_sphere(plan.left, "left");
  detail::require_valid_sphere(plan.right, "right");

  const int n = plan.left.degree();
  const int m = plan.right.degree();
  const int total = n + m - 1;

  std::vector<int> left_relabel(n);
  for (int x = 1; x <= n; ++x) left_relabel[x - 1] = x;
  std::swap(left_relabel[plan.shared_sheet_left - 1], left_relabel[n - 1]);

  std::vector<int> right_relabel(m);
  right_relabel[plan.shared_sheet_right - 1] = n;
  int next = n + 1;
  for (int x = 1; x <= m; ++x) {
    if (x == plan.shared_sheet_right) continue;
    right_relabel[x - 1] = next++;
  }

  std::vector<Perm> tuple;
  tuple.reserve(plan.left.size() + plan.right.size());
  for (const Perm& p : plan.left.tuple())
    tuple.push_back(detail::embed(p, left_relabel, total));
  for (const Perm& p : plan.right.tuple())
    tuple.push_back(detail::embed(p, right_relabel, total));

  return Constellation(total, std::move(tuple));
}

/// Left fold of connected_sum. sheet_choices, when given, holds one
/// (left, right) shared-sheet pair per fold step; -1 means default.
inline Constellation iterated_sum(
    const std::vector<Constellation>& cs,
    const std::vector<std::pair<int, int>>& sheet_choices = {}) {
  if (cs.size() < 2)
    throw std::invalid_argument("iterated sum needs at least 2 constellations");
  if (!sheet_choices.empty() && sheet_choices.size() != cs.size() - 1)
    throw std::invalid_argument("need one sheet choice per fold step");

  Constellation acc = cs[0];
  for (std::size_t i = 1; i < cs.size(); ++i) {
    int sl = -1, sr = 1;
    if (!sheet_choices.empty()) {
      sl = sheet_choices[i - 1].first;
      sr = sheet_choices[i - 1].second;
      if (sr < 0) sr = 1;
    }
    acc = connected_sum(SumPlan(acc, cs[i], sl, sr));
  }
  return acc;
}

/// Orientation-reversed constellation: tuple reversed, entries inverted.
/// Preserves degree, passport and genus; an involution.
inline Constellation mirror(const Constellation& c) {
  ValidationResult r = c.validate();
  if (!r.ok) throw std::invalid_argument("mirror of invalid input: " + r.violation);
  std::vector<Perm> tuple;
  tuple.reserve(c.size());
  for (auto it = c.tuple().rbegin(); it != c.tuple().rend(); ++it)
    tuple.push_back(inverse(*it));
  return Constellation(c.degree(), std::move(tuple), c.target_genus());
}

namespace detail {

// Index (0-based) of the designated infinity entry: the unique full d-cycle.
// Degree 2 is the one degenerate case where both entries of a polynomial
// constellation are 2-cycles; the last one is taken.
inline int infinity_entry_index(const Constellation& c) {
  int found = -1, count = 0;
  for (int i = 0; i < c.size(); ++i) {
    CycleType ct = cycle_type(c.tuple()[i]);
    if (ct.size() == 1 && ct[0] == c.degree()) {
      found = i;
      ++count;
    }
  }
  if (count == 1) return found;
  if (c.degree() == 2 && count == 2 && c.size() == 2) return 1;
  throw std::invalid_argument(
      "input lacks a unique full-cycle entry over infinity");
}

// Slide entry at index (0-based) to the back by elementary braid moves;
// conjugates the entries it passes, preserving the product and the passport.
inline std::vector<Perm> slide_entry_to_back(std::vector<Perm> tuple, int index) {
  for (int i = index; i + 1 < static_cast<int>(tuple.size()); ++i) {
    Perm mover = tuple[i];
    Perm conj = compose(compose(mover, tuple[i + 1]), inverse(mover));
    tuple[i] = conj;
    tuple[i + 1] = mover;
  }
  return tuple;
}

}  // namespace detail

/// Combinatorial formal mating of two polynomial constellations of equal
/// degree d: both infinity cycles are cancelled against each other and the
/// finite branch entries are concatenated, with q's sheets relabeled so that
/// its infinity cycle is conjugated inversely to p's. The result has no
/// infinity entry (the equator is unbranched) and is validated before it is
/// returned.
inline Constellation formal_mating(const Constellation& p,
                                   const Constellation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("degree mismatch: " +
                                std::to_string(p.degree()) + " vs " +
                                std::to_string(q.degree()));
  detail::require_valid_sphere(p, "first");
  detail::require_valid_sphere(q, "second");

  const int d = p.degree();
  auto p_tuple = detail::slide_entry_to_back(p.tuple(),
                                             detail::infinity_entry_index(p));
  auto q_tuple = detail::slide_entry_to_back(q.tuple(),
                                             detail::infinity_entry_index(q));
  const Perm& inf_p = p_tuple.back();
  const Perm& inf_q = q_tuple.back();

  // Relabeling s with s(inf_q)s^-1 = inf_p^-1, walking both cycles from
  // sheet 1 in opposite directions.
  std::vector<int> s_images(d);
  {
    int a = 1, b = 1;
    Perm inf_p_inv = inverse(inf_p);
    for (int k = 0; k < d; ++k) {
      s_images[b - 1] = a;
      b = inf_q.apply(b);
      a = inf_p_inv.apply(a);
    }
  }
  Perm s{std::move(s_images)};

  std::vector<Perm> tuple(p_tuple.begin(), p_tuple.end() - 1);
  for (std::size_t i = 0; i + 1 < q_tuple.size(); ++i)
    tuple.push_back(conjugate(q_tuple[i], s));

  Constellation out(d, std::move(tuple));
  ValidationResult r = out.validate();
  if (!r.ok)
    throw std::logic_error("formal mating postcondition failed: " + r.violation);
  return out;
}

/// Comparison of the Riemann-Hurwitz genus of a connected sum against the
/// product-style bookkeeping genus(U) = m*genus(S) + n*genus(T). The two
/// agree on genus-0 factors and diverge as soon as a factor has positive
/// genus; both values are reported, nothing is asserted.
struct SumGenusReport {
  int left_degree = 0;
  int right_degree = 0;
  int left_genus = 0;
  int right_genus = 0;
  int derived_genus = 0;        // Riemann-Hurwitz on the constructed sum
  long long product_formula_genus = 0;
  bool matches = false;
};

inline SumGenusReport sum_genus_report(const Constellation& left,
                                       const Constellation& right,
                                       const Constellation& out) {
  SumGenusReport rep;
  rep.left_degree = left.degree();
  rep.right_degree = right.degree();
  rep.left_genus = left.genus();
  rep.right_genus = right.genus();
  rep.derived_genus = out.genus();
  rep.product_formula_genus =
      static_cast<long long>(rep.right_degree) * rep.left_genus +
      static_cast<long long>(rep.left_degree) * rep.right_genus;
  rep.matches = rep.product_formula_genus == rep.derived_genus;
  return rep;
}

}  // namespace covering
