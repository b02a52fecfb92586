#pragma once

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace covering {

/// Bijection of {1..d}. Points are 1-based in the API and in all I/O.
///
/// Composition convention, fixed project-wide: compose(a, b) applies a
/// first, so compose(a, b)(i) == b(a(i)).
class Perm {
public:
  // identity on d points
  explicit Perm(int degree) : images_(degree) {
    if (degree < 1)
      throw std::invalid_argument("permutation degree must be >= 1");
    std::iota(images_.begin(), images_.end(), 1);
  }

  // images[i-1] is the image of point i
  explicit Perm(std::vector<int> images) : images_(std::move(images)) {
    if (images_.empty())
      throw std::invalid_argument("permutation degree must be >= 1");
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
      if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1])
        throw std::invalid_argument("images are not a bijection of {1..d}");
      seen[v - 1] = 1;
    }
  }

  static Perm identity(int degree) { return Perm(degree); }

  static Perm transposition(int degree, int a, int b) {
    Perm p(degree);
    p.check_point(a);
    p.check_point(b);
    std::swap(p.images_[a - 1], p.images_[b - 1]);
    return p;
  }

  // single cycle (p1 p2 ... pk), remaining points fixed
  static Perm cycle(int degree, const std::vector<int>& points) {
    Perm p(degree);
    for (int q : points) p.check_point(q);
    for (std::size_t i = 0; i < points.size(); ++i) {
      int from = points[i];
      int to = points[(i + 1) % points.size()];
      p.images_[from - 1] = to;
    }
    std::vector<char> seen(degree, 0);
    for (int q : points) {
      if (seen[q - 1]) throw std::invalid_argument("repeated point in cycle");
      seen[q - 1] = 1;
    }
    return p;
  }

  int degree() const { return static_cast<int>(images_.size()); }

  int apply(int point) const {
    check_point(point);
    return images_[point - 1];
  }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (images_[i] != i + 1) return false;
    return true;
  }

  const std::vector<int>& images() const { return images_; }

  friend bool operator==(const Perm& a, const Perm& b) {
    return a.images_ == b.images_;
  }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
  friend bool operator<(const Perm& a, const Perm& b) {
    return a.images_ < b.images_;
  }

private:
  void check_point(int point) const {
    if (point < 1 || point > degree())
      throw std::out_of_range("point " + std::to_string(point) +
                              " outside {1.." + std::to_string(degree()) + "}");
  }

  std::vector<int> images_;
};

/// apply a, then b
inline Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("degree mismatch: " +
                                std::to_string(a.degree()) + " vs " +
                                std::to_string(b.degree()));
  std::vector<int> images(a.degree());
  for (int i = 1; i <= a.degree(); ++i) images[i - 1] = b.apply(a.apply(i));
  return Perm(std::move(images));
}

inline Perm inverse(const Perm& a) {
  std::vector<int> images(a.degree());
  for (int i = 1; i <= a.degree(); ++i) images[a.apply(i) - 1] = i;
  return Perm(std::move(images));
}

/// g^-1 a g under the project convention: relabels a along g.
inline Perm conjugate(const Perm& a, const Perm& g) {
  return compose(compose(inverse(g), a), g);
}

/// Cycle lengths sorted descending; fixed points count as 1-cycles, so the
/// lengths always sum to the degree.
inline std::vector<int> cycle_type(const Perm& a) {
  std::vector<char> seen(a.degree(), 0);
  std::vector<int> lengths;
  for (int i = 1; i <= a.degree(); ++i) {
    if (seen[i - 1]) continue;
    int len = 0;
    int j = i;
    do {
      seen[j - 1] = 1;
      ++len;
      j = a.apply(j);
    } while (j != i);
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<int>());
  return lengths;
}

inline int cycle_count(const Perm& a) {
  std::vector<char> seen(a.degree(), 0);
  int count = 0;
  for (int i = 1; i <= a.degree(); ++i) {
    if (seen[i - 1]) continue;
    ++count;
    int j = i;
    do {
      seen[j - 1] = 1;
      j = a.apply(j);
    } while (j != i);
  }
  return count;
}

/// Orbit of start under the group generated by gens, by BFS. Sorted.
inline std::vector<int> orbit_closure(const std::vector<Perm>& gens,
                                      int start) {
  for (std::size_t i = 1; i < gens.size(); ++i)
    if (gens[i].degree() != gens[0].degree())
      throw std::invalid_argument("degree mismatch among generators");
  if (!gens.empty() && (start < 1 || start > gens[0].degree()))
    throw std::out_of_range("start point outside {1..d}");

  std::vector<int> orbit{start};
  if (gens.empty()) return orbit;

  std::vector<char> seen(gens[0].degree(), 0);
  seen[start - 1] = 1;
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    int p = orbit[head];
    for (const Perm& g : gens) {
      int q = g.apply(p);
      if (!seen[q - 1]) {
        seen[q - 1] = 1;
        orbit.push_back(q);
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

inline bool acts_transitively(const std::vector<Perm>& gens, int degree) {
  if (degree == 1) return true;
  if (gens.empty()) return false;
  return static_cast<int>(orbit_closure(gens, 1).size()) == degree;
}

/// Cycle notation: "(1 2)(3 4 5)"; the identity prints as "id[d]".
/// Cycles start at their least point and are ordered by that point.
inline std::string to_cycle_string(const Perm& a) {
  if (a.is_identity()) return "id[" + std::to_string(a.degree()) + "]";
  std::vector<char> seen(a.degree(), 0);
  std::string out;
  for (int i = 1; i <= a.degree(); ++i) {
    if (seen[i - 1] || a.apply(i) == i) {
      seen[i - 1] = 1;
      continue;
    }
    out += '(';
    int j = i;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(j);
      seen[j - 1] = 1;
      j = a.apply(j);
      first = false;
    } while (j != i);
    out += ')';
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Perm& a) {
  return os << to_cycle_string(a);
}

namespace detail {

inline std::vector<std::vector<int>> parse_cycles(const std::string& text,
                                                  int* id_degree) {
  *id_degree = 0;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip_ws();

  if (text.compare(pos, 3, "id[") == 0) {
    std::size_t close = text.find(']', pos);
    if (close == std::string::npos)
      throw std::invalid_argument("unterminated id[...] in: " + text);
    *id_degree = std::stoi(text.substr(pos + 3, close - pos - 3));
    if (*id_degree < 1) throw std::invalid_argument("bad identity degree");
    return {};
  }

  std::vector<std::vector<int>> cycles;
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw std::invalid_argument("expected '(' in cycle notation: " + text);
    ++pos;
    std::vector<int> cyc;
    for (;;) {
      skip_ws();
      if (pos >= text.size())
        throw std::invalid_argument("unbalanced '(' in cycle notation: " + text);
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw std::invalid_argument("expected point index in cycle: " + text);
      int v = 0;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        ++pos;
      }
      cyc.push_back(v);
    }
    if (cyc.empty()) throw std::invalid_argument("empty cycle in: " + text);
    cycles.push_back(std::move(cyc));
    skip_ws();
  }
  if (cycles.empty()) throw std::invalid_argument("empty permutation text");
  return cycles;
}

}  // namespace detail

/// Parse cycle notation against a known degree.
inline Perm parse_perm(const std::string& text, int degree) {
  int id_degree = 0;
  auto cycles = detail::parse_cycles(text, &id_degree);
  if (id_degree > 0) {
    if (id_degree != degree)
      throw std::invalid_argument("identity degree " +
                                  std::to_string(id_degree) +
                                  " does not match expected degree " +
                                  std::to_string(degree));
    return Perm::identity(degree);
  }
  Perm p = Perm::identity(degree);
  std::vector<char> touched(static_cast<std::size_t>(degree), 0);
  for (const auto& cyc : cycles) {
    for (int q : cyc) {
      if (q < 1 || q > degree)
        throw std::invalid_argument("point " + std::to_string(q) +
                                    " outside {1.." + std::to_string(degree) +
                                    "} in: " + text);
      if (touched[q - 1])
        throw std::invalid_argument("point " + std::to_string(q) +
                                    " repeated in: " + text);
      touched[q - 1] = 1;
    }
    p = compose(p, Perm::cycle(degree, cyc));
  }
  return p;
}

/// Parse with the degree inferred from the largest point mentioned.
inline Perm parse_perm(const std::string& text) {
  int id_degree = 0;
  auto cycles = detail::parse_cycles(text, &id_degree);
  if (id_degree > 0) return Perm::identity(id_degree);
  int degree = 1;
  for (const auto& cyc : cycles)
    for (int q : cyc) degree = std::max(degree, q);
  return parse_perm(text, degree);
}

}  // namespace covering
