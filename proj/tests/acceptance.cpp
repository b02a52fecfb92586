// Acceptance suite: one pass/fail line per criterion, each with its runtime
// budget pinned in code. Exits nonzero if any criterion fails.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "covering/constellation.hpp"
#include "covering/dynamics.hpp"
#include "covering/hurwitz.hpp"
#include "covering/sampling.hpp"
#include "covering/sandwich.hpp"
#include "covering/surgery.hpp"
#include "enumerate_generic.hpp"

namespace fs = std::filesystem;
using namespace covering;
using covering::testing::enumerate_generic;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw Failure(message);
}

Constellation z_power(int d) {
  std::vector<int> pts(d);
  for (int i = 0; i < d; ++i) pts[i] = i + 1;
  Perm c = Perm::cycle(d, pts);
  return Constellation(d, {c, inverse(c)});
}

Constellation z_squared() { return z_power(2); }

// ---------------------------------------------------------------------
// criterion bodies; each returns a short detail string
// ---------------------------------------------------------------------

std::string criterion_sum_degree_law() {
  Rng rng(1001);
  for (int trial = 0; trial < 200; ++trial) {
    int n = static_cast<int>(rng.range(2, 6));
    int m = static_cast<int>(rng.range(2, 6));
    Constellation left = random_constellation(rng, n, static_cast<int>(rng.range(2, 4)));
    Constellation right = random_constellation(rng, m, static_cast<int>(rng.range(2, 4)));
    Constellation out = connected_sum(SumPlan(
        left, right, static_cast<int>(rng.range(1, n)),
        static_cast<int>(rng.range(1, m))));
    require(out.degree() == n + m - 1,
            "degree law failed at trial " + std::to_string(trial));
    require(out.validate().ok, "sum output invalid");
  }
  Constellation worked = connected_sum(SumPlan(z_squared(), z_power(3)));
  require(worked.degree() == 4, "z^2 # z^3 should have degree 4");
  return "200 random pairs exact; z^2 # z^3 -> degree 4";
}

std::string criterion_iterated_ledger() {
  Rng rng(1002);
  int runs = 0;
  for (int k = 2; k <= 5; ++k) {
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<Constellation> cs;
      int total = 0;
      for (int i = 0; i < k; ++i) {
        int d = static_cast<int>(rng.range(2, 5));
        total += d;
        cs.push_back(random_constellation(rng, d, static_cast<int>(rng.range(2, 4))));
      }
      Constellation out = iterated_sum(cs);
      require(out.degree() == total - (k - 1),
              "ledger failed for k=" + std::to_string(k));
      ++runs;
    }
  }
  return std::to_string(runs) + " iterated sums, k=2..5, ledger exact";
}

std::string criterion_genus_oracle() {
  Rng rng(1003);
  int agree = 0, disagree = 0;
  std::ostringstream sample_lines;
  for (int trial = 0; trial < 100; ++trial) {
    int n = static_cast<int>(rng.range(2, 6));
    int m = static_cast<int>(rng.range(2, 6));
    Constellation left = random_constellation(rng, n, static_cast<int>(rng.range(2, 5)));
    Constellation right = random_constellation(rng, m, static_cast<int>(rng.range(2, 5)));
    Constellation out = connected_sum(SumPlan(left, right));
    require(out.euler_characteristic() ==
                left.euler_characteristic() + right.euler_characteristic() - 2,
            "Euler bookkeeping failed");
    SumGenusReport rep = sum_genus_report(left, right, out);
    rep.matches ? ++agree : ++disagree;
    if (trial < 3)
      sample_lines << "    genus report: derived=" << rep.derived_genus
                   << " product_formula=" << rep.product_formula_genus
                   << " left=(d" << rep.left_degree << ",g" << rep.left_genus
                   << ") right=(d" << rep.right_degree << ",g"
                   << rep.right_genus << ")\n";
  }
  std::cout << sample_lines.str();
  return "chi law exact on 100 sums; product-formula comparison: " +
         std::to_string(agree) + " agree / " + std::to_string(disagree) +
         " differ (reported, not asserted)";
}

std::string criterion_hurwitz_classification() {
  std::string detail;
  for (int d : {3, 4}) {
    auto start = std::chrono::steady_clock::now();
    std::vector<Constellation> all = enumerate_generic(d);
    require(!all.empty(), "enumeration is empty");
    HurwitzOrbit orbit = hurwitz_orbit(Constellation::generic_polynomial(d));
    require(orbit.exhausted, "orbit search did not exhaust");
    std::set<CanonicalForm> reached(orbit.states.begin(), orbit.states.end());
    std::set<CanonicalForm> enumerated;
    for (const Constellation& c : all) {
      CanonicalForm cf = canonical_form(c);
      require(reached.contains(cf),
              "an enumerated constellation escapes the orbit (d=" +
                  std::to_string(d) + ")");
      enumerated.insert(cf);
    }
    require(reached == enumerated, "orbit overshoots the enumeration");

    Rng rng(1004 + d);
    for (int pair = 0; pair < 25; ++pair) {
      const Constellation& a = all[rng.below(all.size())];
      const Constellation& b = all[rng.below(all.size())];
      require(same_hurwitz_class(a, b) == Ternary::yes,
              "equiv said no for a same-degree pair");
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    double limit = d == 3 ? 1.0 : 60.0;
    require(elapsed < limit, "d=" + std::to_string(d) + " took " +
                                 std::to_string(elapsed) + "s, limit " +
                                 std::to_string(limit) + "s");
    detail += "d=" + std::to_string(d) + ": " + std::to_string(all.size()) +
              " tuples, one orbit of " + std::to_string(orbit.states.size()) +
              " canonical forms; ";
  }
  require(same_hurwitz_class(Constellation::generic_polynomial(3),
                             Constellation::generic_polynomial(4)) == Ternary::no,
          "cross-degree pair not rejected");
  require(same_hurwitz_class(Constellation::generic_polynomial(3), z_power(3)) ==
              Ternary::no,
          "cross-passport pair not rejected");
  require(same_hurwitz_class(Constellation::generic_polynomial(4), z_power(4)) ==
              Ternary::no,
          "cross-passport pair not rejected");
  return detail + "cross pairs certified no";
}

std::string criterion_symmetry() {
  for (int d = 2; d <= 5; ++d)
    require(is_symmetric(Constellation::generic_polynomial(d)) == Ternary::yes,
            "generic_polynomial(" + std::to_string(d) + ") not symmetric");
  for (int d = 2; d <= 6; ++d)
    require(is_symmetric(z_power(d)) == Ternary::yes,
            "z^" + std::to_string(d) + " not symmetric");
  return "generic d=2..5 and z^d d=2..6 all symmetric";
}

std::string criterion_mating() {
  Rng rng(1006);
  int runs = 0;
  for (int d = 2; d <= 5; ++d) {
    for (int rep = 0; rep < 25; ++rep) {
      Constellation p = random_generic_polynomial(rng, d);
      Constellation q = random_generic_polynomial(rng, d);
      Constellation out = formal_mating(p, q);
      require(out.validate().ok, "mating output invalid");
      require(out.degree() == d, "mating degree changed");
      require(out.size() == p.size() + q.size() - 2,
              "mating kept an infinity entry");
      if (d > 2) {
        for (const Perm& e : out.tuple()) {
          CycleType ct = cycle_type(e);
          require(!(ct.size() == 1 && ct[0] == d),
                  "equator is branched: a full cycle survived");
        }
      }
      require(out.genus() == 0, "mating genus is not 0");

      Passport expected;
      for (const Constellation* c : {&p, &q}) {
        bool skipped = false;
        for (const Perm& e : c->tuple()) {
          CycleType ct = cycle_type(e);
          if (!skipped && ct.size() == 1 && ct[0] == d) {
            skipped = true;
            continue;
          }
          expected.push_back(ct);
        }
      }
      std::sort(expected.begin(), expected.end());
      require(out.passport() == expected, "mating passport is not the union");
      ++runs;
    }
  }
  return std::to_string(runs) + " matings valid, unbranched equator, genus 0";
}

std::string criterion_sandwich() {
  Rng rng(1007);
  int corollary_instances = 0;
  for (int instance = 0; instance < 100; ++instance) {
    RationalMap r1 = random_rational_map(rng, 3, 8);
    Mobius h = random_mobius(rng, 8);
    Mobius g = (instance % 4 == 0) ? h : random_mobius(rng, 8);
    auto samples = random_sample_pairs(rng, 3, 3, 8);
    SandwichCheckReport rep = verify_sandwich_isomorphism(r1, h, g, samples);
    if (!rep.ok()) {
      throw Failure("instance " + std::to_string(instance) + ": " +
                    rep.counterexamples.front());
    }
    if (rep.corollary_mode) ++corollary_instances;
  }
  return "100 instances exact (degrees<=3, height<=8), " +
         std::to_string(corollary_instances) + " in corollary mode";
}

std::string criterion_pinch() {
  double prev = 0.0;
  for (int n = 1; n <= 6; ++n) {
    PinchEstimate e = pinch_beltrami_norm(n, 100, 2.0);
    double cf = static_cast<double>(e.closed_form);
    require(std::abs(e.measured - cf) < 1e-6,
            "n=" + std::to_string(n) + ": measured " +
                std::to_string(e.measured) + " vs closed form " +
                std::to_string(cf));
    require(e.measured > prev, "sequence not strictly increasing");
    prev = e.measured;
  }
  return "n=1..6 within 1e-6 of (2^n-1)/(2^n+1), strictly increasing";
}

std::string criterion_julia() {
  for (const char* t_text : {"1/4", "1/2", "3/4"}) {
    FtParams p{Rational(t_text)};
    RenderConfig cfg;
    cfg.resolution = 512;
    cfg.max_iter = 500;
    cfg.half_width = 4.5;  // window strictly containing the filled set
    JuliaSliceReport rep = render_julia_slice(p, cfg, 4);
    require(rep.components.size() == 2,
            std::string("t=") + t_text + ": census is " +
                std::to_string(rep.components.size()) + ", expected 2");
    int bounded_count = 0;
    for (const auto& c : rep.components) {
      if (c.bounded) {
        ++bounded_count;
        require(c.contains_zero, "bounded component misses z=0");
        require(c.basin, "bounded component is not the basin of 0");
      }
    }
    require(bounded_count == 1, "expected exactly one bounded component");
  }
  for (int k = 1; k <= 20; ++k) {
    Rational t(k, 21);
    FtParams p{t};
    FtCriticalData data = ft_critical_data(p);
    Rational expected = 4 * (1 - t) * (1 - t) * (1 - t) / (27 * t * t);
    require(data.values.back() == GaussRat(expected),
            "critical value mismatch at t=" + std::to_string(k) + "/21");
    require(ft_eval_exact(p, data.points.back()) == data.values.back(),
            "f_t(z_c) != v_c at t=" + std::to_string(k) + "/21");
  }
  return "t in {1/4,1/2,3/4}: 2 components, bounded one contains 0; 20 exact "
         "critical values";
}

// criterion 10: every command, run twice, byte-identical output

struct CommandRun {
  int exit_code;
  std::string stdout_bytes;
};

CommandRun run_cli(const std::string& args, const fs::path& capture) {
  std::string cmd = std::string(COVERING_FORGE_BIN) + " " + args + " > " +
                    capture.string() + " 2>&1";
  int status = std::system(cmd.c_str());
  std::ifstream in(capture, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return {WEXITSTATUS(status), buf.str()};
}

std::string read_bytes(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string criterion_determinism() {
  fs::path dir = fs::temp_directory_path() /
                 ("covering_forge_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);

  auto write = [&](const std::string& name, const std::string& text) {
    fs::path p = dir / name;
    std::ofstream out(p);
    out << text;
    return p.string();
  };
  auto record = [&](const Constellation& c) {
    std::ostringstream os;
    print_constellation(os, c);
    return os.str();
  };

  std::string z2 = write("z2.const", record(z_squared()));
  std::string g3 = write("g3.const", record(Constellation::generic_polynomial(3)));
  std::string g3m = write("g3m.const", record(mirror(Constellation::generic_polynomial(3))));
  std::string g4 = write("g4.const", record(Constellation::generic_polynomial(4)));
  std::string spec = write("sandwich.spec",
                           "R1 (z^3+z)\nh (z+1)\ng (2z)\nsamples 25\nmaxdeg 2\n"
                           "height 6\nseed 7\n");

  struct Command {
    std::string args;
    std::vector<std::string> artifacts;  // produced files to compare
    int expected_exit;
  };
  fs::path out_a = dir / "run_a";
  fs::path out_b = dir / "run_b";

  std::vector<Command> commands = {
      {"validate " + z2, {}, 0},
      {"--seed 7 --out OUTDIR/sum.const sum " + z2 + " " + g3, {"sum.const"}, 0},
      {"--seed 7 --out OUTDIR/mate.const mate " + g3 + " " + g3, {"mate.const"}, 0},
      {"orbit " + g3, {}, 0},
      {"equiv " + g3 + " " + g3m, {}, 0},
      {"symmetric " + g4, {}, 0},
      {"--seed 7 verify-sandwich " + spec, {}, 0},
      {"--seed 7 --out OUTDIR julia --t 1/2 --resolution 128 --max-iter 200",
       {"julia_t_1_2.ppm"}, 0},
      {"--seed 7 --out OUTDIR sweep --t-list 1/4,3/4 --resolution 64 --max-iter 100",
       {"julia_t_1_4.ppm", "julia_t_3_4.ppm"}, 0},
      {"pinch --n-max 4 --grid 60", {}, 0},
  };

  int checked = 0;
  for (const Command& command : commands) {
    for (const fs::path* out_dir : {&out_a, &out_b}) {
      fs::remove_all(*out_dir);
      fs::create_directories(*out_dir);
    }
    std::string args_a = command.args;
    std::string args_b = command.args;
    auto substitute = [](std::string s, const std::string& what,
                         const std::string& with) {
      for (std::size_t pos = s.find(what); pos != std::string::npos;
           pos = s.find(what, pos)) {
        s.replace(pos, what.size(), with);
        pos += with.size();
      }
      return s;
    };
    args_a = substitute(args_a, "OUTDIR", out_a.string());
    args_b = substitute(args_b, "OUTDIR", out_b.string());

    CommandRun first = run_cli(args_a, dir / "cap_a.txt");
    CommandRun second = run_cli(args_b, dir / "cap_b.txt");
    require(first.exit_code == command.expected_exit,
            "unexpected exit " + std::to_string(first.exit_code) + " from: " +
                command.args);
    require(second.exit_code == first.exit_code,
            "exit codes differ between runs: " + command.args);
    // stdout may embed the out dir path; normalize before comparing
    std::string out_a_norm = substitute(first.stdout_bytes, out_a.string(), "OUT");
    std::string out_b_norm = substitute(second.stdout_bytes, out_b.string(), "OUT");
    require(out_a_norm == out_b_norm,
            "stdout differs between runs: " + command.args);
    for (const std::string& artifact : command.artifacts) {
      require(read_bytes(out_a / artifact) == read_bytes(out_b / artifact),
              "artifact " + artifact + " differs between runs: " + command.args);
      require(!read_bytes(out_a / artifact).empty(),
              "artifact " + artifact + " is empty: " + command.args);
    }
    ++checked;
  }
  return std::to_string(checked) + " commands byte-identical across repeat runs";
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<std::string()> body;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "connected-sum degree law", 1.0, criterion_sum_degree_law},
      {2, "iterated-sum degree ledger", 1.0, criterion_iterated_ledger},
      {3, "Euler/genus bookkeeping with comparison report", 1.0,
       criterion_genus_oracle},
      {4, "one Hurwitz orbit per degree (d=3,4)", 60.0,
       criterion_hurwitz_classification},
      {5, "symmetry of generic and power maps", 60.0, criterion_symmetry},
      {6, "formal mating validity", 1.0, criterion_mating},
      {7, "sandwich-semigroup identities", 10.0, criterion_sandwich},
      {8, "pinching Beltrami norms", 5.0, criterion_pinch},
      {9, "Julia two-component census + critical values", 30.0,
       criterion_julia},
      {10, "command determinism", 120.0, criterion_determinism},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = criterion.body();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (ok && elapsed > criterion.limit_seconds) {
      ok = false;
      detail += " [exceeded " + std::to_string(criterion.limit_seconds) +
                "s budget]";
    }
    char line[512];
    std::snprintf(line, sizeof(line), "[%s] %2d. %s: %s (%.2fs, limit %.0fs)",
                  ok ? "PASS" : "FAIL", criterion.id, criterion.name.c_str(),
                  detail.c_str(), elapsed, criterion.limit_seconds);
    std::cout << line << std::endl;
    if (!ok) ++failures;
  }
  if (failures) {
    std::cout << failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all criteria passed" << std::endl;
  return 0;
}
