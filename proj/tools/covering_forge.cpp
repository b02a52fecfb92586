// covering-forge: monodromy constellations, covering surgery, Hurwitz-class
// search, exact sandwich-semigroup checks and Julia slice experiments, all
// driven by plain-text files so runs are reproducible.

#include <CLI11.hpp>

#include <complex>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "covering/constellation.hpp"
#include "covering/critical_points.hpp"
#include "covering/dynamics.hpp"
#include "covering/hurwitz.hpp"
#include "covering/manifest.hpp"
#include "covering/sampling.hpp"
#include "covering/sandwich.hpp"
#include "covering/surgery.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;

struct ParseFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

covering::Constellation load_constellation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseFailure(path + ": cannot open");
  int line_no = 0;
  try {
    auto c = covering::read_constellation_record(in, line_no);
    if (!c) throw ParseFailure(path + ": empty constellation record");
    return *c;
  } catch (const covering::ParseError& e) {
    throw ParseFailure(path + ": " + e.what());
  }
}

covering::Rational parse_fraction(const std::string& text) {
  try {
    return covering::Rational(text);
  } catch (const std::exception&) {
    throw UsageFailure("bad fraction '" + text + "'");
  }
}

std::string fraction_slug(const covering::Rational& t) {
  return numerator(t).str() + "_" + denominator(t).str();
}

std::string fraction_str(const covering::Rational& t) {
  std::string s = numerator(t).str();
  if (denominator(t) != 1) s += "/" + denominator(t).str();
  return s;
}

int ternary_exit(covering::Ternary t) {
  switch (t) {
    case covering::Ternary::yes: return kExitYes;
    case covering::Ternary::no: return kExitNo;
    default: return kExitInconclusive;
  }
}

struct GlobalOptions {
  std::uint64_t seed = 7;
  int threads = 0;  // 0 = hardware
  std::string out;

  int resolved_threads() const {
    if (const char* env = std::getenv("COVERING_FORGE_THREADS")) {
      int v = std::atoi(env);
      if (v > 0) return v;
    }
    if (threads > 0) return threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
  }
};

void write_or_print(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ParseFailure(out_path + ": cannot open for writing");
  out << payload;
}

// --------------------------------------------------------------------------
// sum / mate
// --------------------------------------------------------------------------

int cmd_sum(const GlobalOptions& global, const std::vector<std::string>& files,
            int left_sheet, int right_sheet) {
  if (files.size() < 2) throw UsageFailure("sum needs at least 2 input files");

  covering::RunManifest manifest;
  manifest.command = "sum";
  manifest.add_option("seed", std::to_string(global.seed));
  manifest.add_option("left_sheet", std::to_string(left_sheet));
  manifest.add_option("right_sheet", std::to_string(right_sheet));
  for (const std::string& f : files) manifest.add_input(f);
  manifest.print(std::cout);

  std::vector<covering::Constellation> cs;
  long long degree_total = 0;
  for (const std::string& f : files) {
    cs.push_back(load_constellation(f));
    degree_total += cs.back().degree();
  }

  covering::Constellation acc = cs[0];
  for (std::size_t i = 1; i < cs.size(); ++i) {
    covering::Constellation out = covering::connected_sum(
        covering::SumPlan(acc, cs[i], left_sheet, right_sheet < 1 ? 1 : right_sheet));
    covering::SumGenusReport rep = covering::sum_genus_report(acc, cs[i], out);
    std::cout << "step " << i << ": " << acc.degree() << " # "
              << cs[i].degree() << " -> degree " << out.degree()
              << " genus_derived=" << rep.derived_genus
              << " genus_product_formula=" << rep.product_formula_genus
              << " match=" << (rep.matches ? "true" : "false") << "\n";
    acc = std::move(out);
  }

  long long k = static_cast<long long>(cs.size());
  std::cout << "ledger: sum(deg) - (k-1) = " << degree_total << " - " << (k - 1)
            << " = " << acc.degree() << "\n";

  std::ostringstream record;
  covering::print_constellation(record, acc);
  if (global.out.empty()) std::cout << record.str();
  else {
    write_or_print(global.out, record.str());
    std::cout << "wrote " << global.out << "\n";
  }
  return kExitYes;
}

int cmd_mate(const GlobalOptions& global, const std::string& p_file,
             const std::string& q_file) {
  covering::RunManifest manifest;
  manifest.command = "mate";
  manifest.add_option("seed", std::to_string(global.seed));
  manifest.add_input(p_file);
  manifest.add_input(q_file);
  manifest.print(std::cout);

  covering::Constellation p = load_constellation(p_file);
  covering::Constellation q = load_constellation(q_file);
  covering::Constellation out = covering::formal_mating(p, q);
  std::cout << "mating: degree " << out.degree() << " entries " << out.size()
            << " genus " << out.genus() << "\n";

  std::ostringstream record;
  covering::print_constellation(record, out);
  if (global.out.empty()) std::cout << record.str();
  else {
    write_or_print(global.out, record.str());
    std::cout << "wrote " << global.out << "\n";
  }
  return kExitYes;
}

// --------------------------------------------------------------------------
// orbit / equiv / symmetric / validate
// --------------------------------------------------------------------------

covering::OrbitBudget make_budget(std::uint64_t max_states,
                                  std::uint64_t max_depth) {
  covering::OrbitBudget budget;
  if (max_states == 0 || max_depth == 0)
    throw UsageFailure("budget fields must be positive");
  budget.max_states = max_states;
  budget.max_depth = max_depth;
  return budget;
}

int cmd_orbit(const GlobalOptions& global, const std::string& file,
              std::uint64_t max_states, std::uint64_t max_depth) {
  covering::RunManifest manifest;
  manifest.command = "orbit";
  manifest.add_option("seed", std::to_string(global.seed));
  manifest.add_option("max_states", std::to_string(max_states));
  manifest.add_option("max_depth", std::to_string(max_depth));
  manifest.add_input(file);

  std::ostringstream report;
  manifest.print(report);
  covering::Constellation c = load_constellation(file);
  covering::HurwitzOrbit orbit =
      covering::hurwitz_orbit(c, make_budget(max_states, max_depth));
  for (const covering::CanonicalForm& state : orbit.states) {
    covering::print_constellation(report, state.to_constellation());
    report << "\n";
  }
  report << "orbit_size=" << orbit.states.size()
         << " exhausted=" << (orbit.exhausted ? "true" : "false") << "\n";
  write_or_print(global.out, report.str());
  return kExitYes;
}

int cmd_equiv(const GlobalOptions& global, const std::string& a_file,
              const std::string& b_file, std::uint64_t max_states,
              std::uint64_t max_depth) {
  covering::RunManifest manifest;
  manifest.command = "equiv";
  manifest.add_option("seed", std::to_string(global.seed));
  manifest.add_option("max_states", std::to_string(max_states));
  manifest.add_option("max_depth", std::to_string(max_depth));
  manifest.add_input(a_file);
  manifest.add_input(b_file);
  manifest.print(std::cout);

  covering::Constellation a = load_constellation(a_file);
  covering::Constellation b = load_constellation(b_file);
  covering::Ternary t =
      covering::same_hurwitz_class(a, b, make_budget(max_states, max_depth));
  std::cout << "equiv=" << covering::to_string(t) << "\n";
  return ternary_exit(t);
}

int cmd_symmetric(const GlobalOptions& global, const std::string& file,
                  std::uint64_t max_states, std::uint64_t max_depth) {
  covering::RunManifest manifest;
  manifest.command = "symmetric";
  manifest.add_option("seed", std::to_string(global.seed));
  manifest.add_option("max_states", std::to_string(max_states));
  manifest.add_option("max_depth", std::to_string(max_depth));
  manifest.add_input(file);
  manifest.print(std::cout);

  covering::Constellation c = load_constellation(file);
  covering::Ternary t =
      covering::is_symmetric(c, make_budget(max_states, max_depth));
  std::cout << "symmetric=" << covering::to_string(t) << "\n";
  return ternary_exit(t);
}

int cmd_validate(const GlobalOptions& global,
                 const std::vector<std::string>& files) {
  covering::RunManifest manifest;
  manifest.command = "validate";
  manifest.add_option("seed", std::to_string(global.seed));
  for (const std::string& f : files) manifest.add_input(f);
  manifest.print(std::cout);

  bool all_ok = true;
  for (const std::string& f : files) {
    std::ifstream in(f);
    if (!in) throw ParseFailure(f + ": cannot open");
    int line_no = 0;
    int index = 0;
    try {
      while (auto c = covering::read_constellation_record(
                 in, line_no, nullptr, /*check_valid=*/false)) {
        ++index;
        covering::ValidationResult r = c->validate();
        std::cout << f << " record " << index << ": "
                  << (r.ok ? "ok" : "violation: " + r.violation) << "\n";
        if (!r.ok) all_ok = false;
      }
      if (index == 0) throw ParseFailure(f + ": empty constellation record");
    } catch (const covering::ParseError& e) {
      throw ParseFailure(f + ": " + e.what());
    }
  }
  return all_ok ? kExitYes : kExitNo;
}

// --------------------------------------------------------------------------
// verify-sandwich
// --------------------------------------------------------------------------

struct SandwichSpec {
  covering::RationalMap r1;
  bool have_r1 = false;
  covering::Mobius h;
  covering::Mobius g;
  covering::RationalMap r2_claimed;
  bool have_r2 = false;
  int samples = 100;
  int max_degree = 3;
  long height = 8;
  std::uint64_t seed = 7;
  bool orientation_reversing = false;
};

SandwichSpec load_sandwich_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseFailure(path + ": cannot open");
  SandwichSpec spec;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (covering::detail::blank_or_comment(line)) continue;
    std::string key, value;
    covering::detail::split_key_value(line, &key, &value);
    try {
      if (key == "R1") {
        spec.r1 = covering::parse_rational_map(value);
        spec.have_r1 = true;
      } else if (key == "R2") {
        spec.r2_claimed = covering::parse_rational_map(value);
        spec.have_r2 = true;
      } else if (key == "h") {
        spec.h = covering::parse_mobius(value);
      } else if (key == "g") {
        spec.g = covering::parse_mobius(value);
      } else if (key == "samples") {
        spec.samples = std::stoi(value);
      } else if (key == "maxdeg") {
        spec.max_degree = std::stoi(value);
      } else if (key == "height") {
        spec.height = std::stol(value);
      } else if (key == "seed") {
        spec.seed = std::stoull(value);
      } else if (key == "orientation") {
        spec.orientation_reversing = value == "reversing";
      } else {
        throw std::invalid_argument("unknown key '" + key + "'");
      }
    } catch (const std::exception& e) {
      throw ParseFailure(path + ": line " + std::to_string(line_no) + ": " +
                         e.what());
    }
  }
  if (!spec.have_r1) throw ParseFailure(path + ": missing R1");
  return spec;
}

int cmd_verify_sandwich(const GlobalOptions& global, const std::string& file,
                        int samples_override, bool seed_given) {
  SandwichSpec spec = load_sandwich_spec(file);
  if (samples_override > 0) spec.samples = samples_override;
  if (seed_given) spec.seed = global.seed;

  covering::RunManifest manifest;
  manifest.command = "verify-sandwich";
  manifest.add_option("seed", std::to_string(spec.seed));
  manifest.add_option("samples", std::to_string(spec.samples));
  manifest.add_option("maxdeg", std::to_string(spec.max_degree));
  manifest.add_option("height", std::to_string(spec.height));
  manifest.add_input(file);

  std::ostringstream report;
  manifest.print(report);

  covering::Rng rng(spec.seed);
  auto samples = covering::random_sample_pairs(rng, spec.samples,
                                               spec.max_degree, spec.height);
  covering::SandwichCheckReport rep =
      spec.have_r2
          ? covering::verify_sandwich_against(spec.r1, spec.r2_claimed, spec.h,
                                              spec.g, samples,
                                              spec.orientation_reversing)
          : covering::verify_sandwich_isomorphism(spec.r1, spec.h, spec.g,
                                                  samples,
                                                  spec.orientation_reversing);
  covering::print_report(report, rep);
  write_or_print(global.out, report.str());
  return rep.ok() ? kExitYes : kExitNo;
}

// --------------------------------------------------------------------------
// julia / sweep / pinch
// --------------------------------------------------------------------------

struct RenderOptions {
  std::string t_text = "1/2";
  int resolution = 512;
  int max_iter = 500;
  double half_width = covering::RenderConfig{}.half_width;
  double center_re = 0.0;
  double center_im = 0.0;
  double escape_radius = 0.0;
};

int render_one(const GlobalOptions& global, const covering::Rational& t,
               const RenderOptions& opt, std::ostream& report) {
  covering::FtParams params{t};
  covering::RenderConfig cfg;
  cfg.resolution = opt.resolution;
  cfg.max_iter = opt.max_iter;
  cfg.half_width = opt.half_width;
  cfg.center = {opt.center_re, opt.center_im};
  cfg.escape_radius = opt.escape_radius;

  covering::JuliaSliceReport rep =
      covering::render_julia_slice(params, cfg, global.resolved_threads());

  std::filesystem::path dir = global.out.empty() ? "." : global.out;
  std::filesystem::create_directories(dir);
  std::filesystem::path image = dir / ("julia_t_" + fraction_slug(t) + ".ppm");
  std::ofstream img(image, std::ios::binary);
  if (!img) throw ParseFailure(image.string() + ": cannot open for writing");
  covering::write_ppm(img, rep);

  report << rep.summary_line() << "\n";
  report << "image=" << image.string() << " escape_radius=" << rep.escape_radius
         << "\n";
  covering::FtCriticalData crit = covering::ft_critical_data(params);
  report << "critical_points=[";
  for (std::size_t i = 0; i < crit.points.size(); ++i)
    report << (i ? "," : "") << covering::to_string(crit.points[i]);
  report << "] critical_values=[";
  for (std::size_t i = 0; i < crit.values.size(); ++i)
    report << (i ? "," : "") << covering::to_string(crit.values[i]);
  report << "]" << (crit.degenerate ? " degenerate_t0" : "")
         << (crit.merged ? " merged" : "") << "\n";
  return kExitYes;
}

int cmd_julia(const GlobalOptions& global, const RenderOptions& opt) {
  covering::Rational t = parse_fraction(opt.t_text);
  covering::RunManifest manifest;
  manifest.command = "julia";
  manifest.add_option("seed", std::to_string(global.seed));
  manifest.add_option("t", fraction_str(t));
  manifest.add_option("resolution", std::to_string(opt.resolution));
  manifest.add_option("max_iter", std::to_string(opt.max_iter));
  manifest.print(std::cout);
  return render_one(global, t, opt, std::cout);
}

int cmd_sweep(const GlobalOptions& global, const std::string& t_list,
              const RenderOptions& opt) {
  std::vector<covering::Rational> ts;
  std::stringstream ss(t_list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) ts.push_back(parse_fraction(item));
  }
  if (ts.empty()) throw UsageFailure("sweep needs a non-empty t list");

  covering::RunManifest manifest;
  manifest.command = "sweep";
  manifest.add_option("seed", std::to_string(global.seed));
  manifest.add_option("t_list", t_list);
  manifest.add_option("resolution", std::to_string(opt.resolution));
  manifest.add_option("max_iter", std::to_string(opt.max_iter));
  manifest.print(std::cout);

  for (const covering::Rational& t : ts) render_one(global, t, opt, std::cout);
  return kExitYes;
}

int cmd_pinch(const GlobalOptions& global, int n_min, int n_max, int grid,
              double radius) {
  if (n_min < 1 || n_max < n_min) throw UsageFailure("bad n range");
  covering::RunManifest manifest;
  manifest.command = "pinch";
  manifest.add_option("seed", std::to_string(global.seed));
  manifest.add_option("n_min", std::to_string(n_min));
  manifest.add_option("n_max", std::to_string(n_max));
  manifest.add_option("grid", std::to_string(grid));

  std::ostringstream report;
  manifest.print(report);
  report << "n closed_form measured abs_error\n";
  char line[160];
  for (int n = n_min; n <= n_max; ++n) {
    covering::PinchEstimate e = covering::pinch_beltrami_norm(n, grid, radius);
    double cf = static_cast<double>(e.closed_form);
    std::string cf_str = fraction_str(e.closed_form);
    std::snprintf(line, sizeof(line), "%d %s %.12f %.3e\n", n, cf_str.c_str(),
                  e.measured, std::abs(e.measured - cf));
    report << line;
  }
  write_or_print(global.out, report.str());
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"covering-forge: branched-covering monodromy workbench"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--seed", global.seed, "seed for randomized harnesses")
      ->capture_default_str();
  app.add_option("--threads", global.threads,
                 "worker threads (0 = hardware); COVERING_FORGE_THREADS overrides")
      ->capture_default_str();
  app.add_option("--out", global.out, "output file or directory");

  // sum
  std::vector<std::string> sum_files;
  int left_sheet = -1, right_sheet = 1;
  auto* sum = app.add_subcommand("sum", "iterated connected sum of coverings");
  sum->fallthrough();
  sum->add_option("inputs", sum_files, "constellation files")->expected(-1);
  sum->add_option("--left-sheet", left_sheet, "shared sheet on the left (default: last)");
  sum->add_option("--right-sheet", right_sheet, "shared sheet on the right");

  // mate
  std::string mate_p, mate_q;
  auto* mate = app.add_subcommand("mate", "formal mating of two polynomial coverings");
  mate->fallthrough();
  mate->add_option("p", mate_p, "first polynomial constellation")->required();
  mate->add_option("q", mate_q, "second polynomial constellation")->required();

  // orbit
  std::string orbit_file;
  std::uint64_t max_states = 1'000'000;
  std::uint64_t max_depth = static_cast<std::uint64_t>(-1);
  auto* orbit = app.add_subcommand("orbit", "braid-move orbit dump");
  orbit->fallthrough();
  orbit->add_option("input", orbit_file, "constellation file")->required();
  orbit->add_option("--max-states", max_states, "orbit state cap");
  orbit->add_option("--max-depth", max_depth, "BFS depth cap");

  // equiv
  std::string equiv_a, equiv_b;
  auto* equiv = app.add_subcommand("equiv", "same Hurwitz class?");
  equiv->fallthrough();
  equiv->add_option("a", equiv_a, "first constellation")->required();
  equiv->add_option("b", equiv_b, "second constellation")->required();
  equiv->add_option("--max-states", max_states, "orbit state cap");
  equiv->add_option("--max-depth", max_depth, "BFS depth cap");

  // symmetric
  std::string symmetric_file;
  auto* symmetric = app.add_subcommand("symmetric", "is the Hurwitz class symmetric?");
  symmetric->fallthrough();
  symmetric->add_option("input", symmetric_file, "constellation file")->required();
  symmetric->add_option("--max-states", max_states, "orbit state cap");
  symmetric->add_option("--max-depth", max_depth, "BFS depth cap");

  // validate
  std::vector<std::string> validate_files;
  auto* validate = app.add_subcommand("validate", "validate constellation files");
  validate->fallthrough();
  validate->add_option("inputs", validate_files, "constellation files")
      ->required()
      ->expected(-1);

  // verify-sandwich
  std::string sandwich_file;
  int sandwich_samples = 0;
  auto* verify = app.add_subcommand("verify-sandwich",
                                    "check the sandwich-isomorphism identities");
  verify->fallthrough();
  verify->add_option("spec", sandwich_file, "spec file with R1, h, g")->required();
  verify->add_option("--samples", sandwich_samples, "override sample count");

  // julia / sweep
  RenderOptions render;
  auto* julia = app.add_subcommand("julia", "escape-time slice of F(z,t)");
  julia->fallthrough();
  julia->add_option("--t", render.t_text, "parameter t as a fraction")
      ->capture_default_str();
  julia->add_option("--resolution", render.resolution, "pixels per side")
      ->capture_default_str();
  julia->add_option("--max-iter", render.max_iter, "iteration cap")
      ->capture_default_str();
  julia->add_option("--half-width", render.half_width, "window half width")
      ->capture_default_str();
  julia->add_option("--center-re", render.center_re, "window center, real part");
  julia->add_option("--center-im", render.center_im, "window center, imaginary part");
  julia->add_option("--escape-radius", render.escape_radius,
                    "escape radius (0 = sound default)");

  std::string sweep_list = "1/4,1/2,3/4";
  auto* sweep = app.add_subcommand("sweep", "julia over a list of t values");
  sweep->fallthrough();
  sweep->add_option("--t-list", sweep_list, "comma-separated fractions")
      ->capture_default_str();
  sweep->add_option("--resolution", render.resolution, "pixels per side");
  sweep->add_option("--max-iter", render.max_iter, "iteration cap");
  sweep->add_option("--half-width", render.half_width, "window half width");

  // pinch
  int n_min = 1, n_max = 6, pinch_grid = 100;
  double pinch_radius = 2.0;
  auto* pinch = app.add_subcommand("pinch", "Beltrami norms of the pinching iterates");
  pinch->fallthrough();
  pinch->add_option("--n-min", n_min, "first n")->capture_default_str();
  pinch->add_option("--n-max", n_max, "last n")->capture_default_str();
  pinch->add_option("--grid", pinch_grid, "samples per axis")->capture_default_str();
  pinch->add_option("--radius", pinch_radius, "annulus outer radius")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (sum->parsed()) return cmd_sum(global, sum_files, left_sheet, right_sheet);
    if (mate->parsed()) return cmd_mate(global, mate_p, mate_q);
    if (orbit->parsed()) return cmd_orbit(global, orbit_file, max_states, max_depth);
    if (equiv->parsed())
      return cmd_equiv(global, equiv_a, equiv_b, max_states, max_depth);
    if (symmetric->parsed())
      return cmd_symmetric(global, symmetric_file, max_states, max_depth);
    if (validate->parsed()) return cmd_validate(global, validate_files);
    if (verify->parsed())
      return cmd_verify_sandwich(global, sandwich_file, sandwich_samples,
                                 app.count("--seed") > 0);
    if (julia->parsed()) return cmd_julia(global, render);
    if (sweep->parsed()) return cmd_sweep(global, sweep_list, render);
    if (pinch->parsed())
      return cmd_pinch(global, n_min, n_max, pinch_grid, pinch_radius);
  } catch (const UsageFailure& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitUsage;
}
