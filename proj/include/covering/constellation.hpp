#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "covering/perm.hpp"

namespace covering {

struct ValidationResult {
  bool ok = true;
  std::string violation;  // names the first violated invariant
};

using CycleType = std::vector<int>;      // lengths sorted descending
using Passport = std::vector<CycleType>; // sorted, one cycle type per entry

/// Monodromy of a single degree-d branched covering of the sphere: an
/// ordered tuple of permutations of {1..d} with identity product and
/// transitive action, one entry per branch point.
///
/// Identity entries are stripped on construction rather than rejected;
/// target_genus is stored but only genus-0 targets validate.
class Constellation {
public:
  Constellation(int degree, std::vector<Perm> tuple, int target_genus = 0)
      : degree_(degree), target_genus_(target_genus) {
    if (degree < 1) throw std::invalid_argument("degree must be >= 1");
    if (target_genus < 0)
      throw std::invalid_argument("target_genus must be >= 0");
    for (const Perm& p : tuple) {
      if (p.degree() != degree)
        throw std::invalid_argument(
            "branch permutation degree " + std::to_string(p.degree()) +
            " does not match constellation degree " + std::to_string(degree));
      if (!p.is_identity()) tuple_.push_back(p);
    }
  }

  int degree() const { return degree_; }
  int target_genus() const { return target_genus_; }
  const std::vector<Perm>& tuple() const { return tuple_; }
  int size() const { return static_cast<int>(tuple_.size()); }

  /// Left-first product of the whole tuple.
  Perm product() const {
    Perm acc = Perm::identity(degree_);
    for (const Perm& p : tuple_) acc = compose(acc, p);
    return acc;
  }

  ValidationResult validate() const {
    if (target_genus_ != 0)
      return {false, "target genus " + std::to_string(target_genus_) +
                         " is unsupported; only genus-0 targets validate"};
    if (!product().is_identity())
      return {false, "product of branch permutations is not the identity"};
    if (!acts_transitively(tuple_, degree_))
      return {false, "monodromy does not act transitively on the sheets"};
    return {};
  }

  bool is_valid() const { return validate().ok; }

  /// chi(source) = d*chi(target) - sum_i (d - #cycles(sigma_i))
  int euler_characteristic() const {
    require_valid();
    int chi = degree_ * (2 - 2 * target_genus_);
    for (const Perm& p : tuple_) chi -= degree_ - cycle_count(p);
    return chi;
  }

  int genus() const {
    int chi = euler_characteristic();
    if ((2 - chi) % 2 != 0)
      throw std::logic_error("Euler characteristic parity violation");
    int g = (2 - chi) / 2;
    if (g < 0) throw std::logic_error("negative genus");
    return g;
  }

  Passport passport() const {
    Passport pp;
    pp.reserve(tuple_.size());
    for (const Perm& p : tuple_) pp.push_back(cycle_type(p));
    std::sort(pp.begin(), pp.end());
    return pp;
  }

  /// True iff the branch data is that of a degree-d polynomial with d-1
  /// distinct finite critical values: one full d-cycle (the fiber over
  /// infinity) and d-1 transpositions.
  bool is_general_position_polynomial() const {
    if (target_genus_ != 0 || !is_valid()) return false;
    if (size() != degree_ || degree_ < 2) return false;
    int full_cycles = 0, transpositions = 0;
    for (const Perm& p : tuple_) {
      CycleType ct = cycle_type(p);
      bool is_full = ct.size() == 1 && ct[0] == degree_;
      bool is_transposition = !ct.empty() && ct[0] == 2 &&
                              (ct.size() == 1 || ct[1] == 1);
      if (is_full) ++full_cycles;
      if (is_transposition) ++transpositions;
      if (!is_full && !is_transposition) return false;
    }
    if (degree_ == 2) return full_cycles == 2;
    return full_cycles == 1 && transpositions == degree_ - 1;
  }

  /// Canonical general-position witness: [(1 2),(2 3),...,(d-1 d), s]
  /// with s the unique permutation closing the product to the identity.
  static Constellation generic_polynomial(int d) {
    if (d < 2) throw std::invalid_argument("generic_polynomial needs d >= 2");
    std::vector<Perm> tuple;
    Perm acc = Perm::identity(d);
    for (int i = 1; i < d; ++i) {
      Perm t = Perm::transposition(d, i, i + 1);
      tuple.push_back(t);
      acc = compose(acc, t);
    }
    tuple.push_back(inverse(acc));
    return Constellation(d, std::move(tuple));
  }

  friend bool operator==(const Constellation& a, const Constellation& b) {
    return a.degree_ == b.degree_ && a.target_genus_ == b.target_genus_ &&
           a.tuple_ == b.tuple_;
  }
  friend bool operator!=(const Constellation& a, const Constellation& b) {
    return !(a == b);
  }

private:
  void require_valid() const {
    ValidationResult r = validate();
    if (!r.ok) throw std::invalid_argument("invalid constellation: " + r.violation);
  }

  int degree_;
  int target_genus_;
  std::vector<Perm> tuple_;
};

/// Labeled list of constellations; the avatar of a covering whose source
/// need not be connected. The collection degree is the max component degree.
struct CoveringCollection {
  struct Component {
    std::string label;
    Constellation constellation;
  };

  std::vector<Component> components;

  int degree() const {
    int d = 0;
    for (const auto& c : components) d = std::max(d, c.constellation.degree());
    return d;
  }

  ValidationResult validate() const {
    if (components.empty())
      return {false, "covering collection must be non-empty"};
    for (const auto& c : components) {
      ValidationResult r = c.constellation.validate();
      if (!r.ok) return {false, "component '" + c.label + "': " + r.violation};
    }
    return {};
  }
};

// ---------------------------------------------------------------------------
// Text format, the interchange unit for all CLI commands:
//
//   label <name>          (optional, collections only)
//   degree <d>
//   target_genus <g>
//   branch <cycle notation>    (one line per tuple entry)
//
// Records in a stream are separated by blank lines; '#' lines are comments.
// ---------------------------------------------------------------------------

struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line(line) {}
  int line;
};

inline void print_constellation(std::ostream& os, const Constellation& c,
                                const std::string& label = "") {
  if (!label.empty()) os << "label " << label << "\n";
  os << "degree " << c.degree() << "\n";
  os << "target_genus " << c.target_genus() << "\n";
  for (const Perm& p : c.tuple()) os << "branch " << to_cycle_string(p) << "\n";
}

inline std::string to_text(const Constellation& c) {
  std::ostringstream os;
  print_constellation(os, c);
  return os.str();
}

namespace detail {

inline bool split_key_value(const std::string& line, std::string* key,
                            std::string* value) {
  std::size_t i = 0;
  while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
    ++i;
  *key = line.substr(0, i);
  while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
    ++i;
  *value = line.substr(i);
  while (!value->empty() &&
         std::isspace(static_cast<unsigned char>(value->back())))
    value->pop_back();
  return !key->empty();
}

inline bool blank_or_comment(const std::string& line) {
  for (char c : line)
    if (!std::isspace(static_cast<unsigned char>(c))) return c == '#';
  return true;
}

}  // namespace detail

/// Read one record; returns nullopt at end of stream. The parser rejects
/// invalid data with the same reports as Constellation::validate unless
/// check_valid is false (the validate command reports instead of rejecting).
inline std::optional<Constellation> read_constellation_record(
    std::istream& is, int& line_no, std::string* label = nullptr,
    bool check_valid = true) {
  std::string line;
  int degree = -1, target_genus = -1;
  std::vector<Perm> tuple;
  bool in_record = false;
  int record_line = line_no;
  if (label) label->clear();

  auto finish = [&]() -> Constellation {
    if (degree < 0) throw ParseError(record_line, "missing 'degree' line");
    if (target_genus < 0)
      throw ParseError(record_line, "missing 'target_genus' line");
    Constellation c(degree, std::move(tuple), target_genus);
    if (check_valid) {
      ValidationResult r = c.validate();
      if (!r.ok) throw ParseError(record_line, r.violation);
    }
    return c;
  };

  while (std::getline(is, line)) {
    ++line_no;
    if (detail::blank_or_comment(line)) {
      if (in_record) return finish();
      continue;
    }
    if (!in_record) {
      in_record = true;
      record_line = line_no;
    }
    std::string key, value;
    detail::split_key_value(line, &key, &value);
    if (key == "label") {
      if (label) *label = value;
    } else if (key == "degree") {
      try {
        degree = std::stoi(value);
      } catch (const std::exception&) {
        throw ParseError(line_no, "bad degree: '" + value + "'");
      }
      if (degree < 1) throw ParseError(line_no, "degree must be >= 1");
    } else if (key == "target_genus") {
      try {
        target_genus = std::stoi(value);
      } catch (const std::exception&) {
        throw ParseError(line_no, "bad target_genus: '" + value + "'");
      }
      if (target_genus < 0)
        throw ParseError(line_no, "target_genus must be >= 0");
    } else if (key == "branch") {
      if (degree < 0)
        throw ParseError(line_no, "'branch' before 'degree'");
      try {
        tuple.push_back(parse_perm(value, degree));
      } catch (const std::exception& e) {
        throw ParseError(line_no, e.what());
      }
    } else {
      throw ParseError(line_no, "unknown key '" + key + "'");
    }
  }
  if (in_record) return finish();
  return std::nullopt;
}

inline Constellation parse_constellation(std::istream& is) {
  int line_no = 0;
  auto c = read_constellation_record(is, line_no);
  if (!c) throw ParseError(1, "empty constellation record");
  return *c;
}

inline Constellation parse_constellation(const std::string& text) {
  std::istringstream is(text);
  return parse_constellation(is);
}

inline CoveringCollection parse_collection(std::istream& is) {
  CoveringCollection coll;
  int line_no = 0;
  std::string label;
  while (auto c = read_constellation_record(is, line_no, &label)) {
    if (label.empty()) label = "component-" + std::to_string(coll.components.size() + 1);
    coll.components.push_back({label, *c});
  }
  ValidationResult r = coll.validate();
  if (!r.ok) throw ParseError(line_no, r.violation);
  return coll;
}

inline void print_collection(std::ostream& os, const CoveringCollection& coll) {
  bool first = true;
  for (const auto& c : coll.components) {
    if (!first) os << "\n";
    print_constellation(os, c.constellation, c.label);
    first = false;
  }
}

}  // namespace covering
