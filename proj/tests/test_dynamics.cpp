#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "covering/dynamics.hpp"

using namespace covering;

TEST_CASE("f_t evaluation") {
  CHECK(ft_eval(FtParams(Rational(0)), {3.0, 0.0}) == std::complex<double>(9.0, 0.0));
  CHECK(ft_eval(FtParams(Rational(1)), {2.0, 0.0}) == std::complex<double>(8.0, 0.0));
  // exact: f_{1/2}(-2/3) = 2/27
  GaussRat v = ft_eval_exact(FtParams(Rational(1, 2)), GaussRat(Rational(-2, 3)));
  CHECK(v == GaussRat(Rational(2, 27)));
}

TEST_CASE("critical data of f_t") {
  FtCriticalData d = ft_critical_data(FtParams(Rational(1, 2)));
  REQUIRE(d.points.size() == 2);
  CHECK(d.points[0] == GaussRat());
  CHECK(d.points[1] == GaussRat(Rational(-2, 3)));
  REQUIRE(d.values.size() == 2);
  CHECK(d.values[0] == GaussRat());
  CHECK(d.values[1] == GaussRat(Rational(2, 27)));
  CHECK_FALSE(d.degenerate);
  CHECK_FALSE(d.merged);

  FtCriticalData cubic = ft_critical_data(FtParams(Rational(1)));
  CHECK(cubic.merged);
  CHECK(cubic.points == std::vector<GaussRat>{GaussRat(), GaussRat()});
  CHECK(cubic.values == std::vector<GaussRat>{GaussRat()});

  FtCriticalData square = ft_critical_data(FtParams(Rational(0)));
  CHECK(square.degenerate);
}

TEST_CASE("critical values satisfy f_t(z_c) = v_c exactly") {
  for (int k = 1; k <= 20; ++k) {
    Rational t(k, 21);
    FtParams p(t);
    FtCriticalData d = ft_critical_data(p);
    REQUIRE(d.points.size() == 2);
    CHECK(ft_eval_exact(p, d.points[1]) == d.values[1]);
    // closed form 4(1-t)^3 / (27 t^2)
    Rational expected = 4 * (1 - t) * (1 - t) * (1 - t) / (27 * t * t);
    CHECK(d.values[1] == GaussRat(expected));
  }
}

TEST_CASE("t outside [0,1] is rejected") {
  CHECK_THROWS_AS(FtParams(Rational(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(FtParams(Rational(-1, 2)), std::invalid_argument);
}

TEST_CASE("pinch closed forms") {
  PinchEstimate e1 = pinch_beltrami_norm(1, 20);
  CHECK(e1.closed_form == Rational(1, 3));
  PinchEstimate e3 = pinch_beltrami_norm(3, 20);
  CHECK(e3.closed_form == Rational(7, 9));
  CHECK_THROWS_AS(pinch_beltrami_norm(0), std::invalid_argument);
  CHECK_THROWS_AS(pinch_beltrami_norm(41), std::invalid_argument);
}

TEST_CASE("measured Beltrami norms track the closed form and increase") {
  double prev = 0.0;
  for (int n = 1; n <= 6; ++n) {
    PinchEstimate e = pinch_beltrami_norm(n, 100, 2.0);
    double cf = static_cast<double>(e.closed_form);
    INFO("n=" << n << " measured=" << e.measured << " closed=" << cf);
    CHECK(std::abs(e.measured - cf) < 1e-6);
    CHECK(e.measured > prev);
    prev = e.measured;
  }
}

TEST_CASE("escape radius default is sound and classification matches z^2") {
  FtParams t0{Rational(0)};
  RenderConfig cfg;
  cfg.resolution = 128;
  cfg.max_iter = 200;
  JuliaSliceReport rep = render_julia_slice(t0, cfg);

  // the retained set approximates the closed unit disk
  const int res = cfg.resolution;
  double step = 2.0 * cfg.half_width / res;
  for (int row = 0; row < res; ++row) {
    for (int col = 0; col < res; ++col) {
      double x = -cfg.half_width + (col + 0.5) * step;
      double y = cfg.half_width - (row + 0.5) * step;
      double r = std::hypot(x, y);
      PixelClass c = rep.classes[static_cast<std::size_t>(row) * res + col];
      if (r < 0.95) CHECK(c == PixelClass::basin);
      if (r > 1.05) CHECK(c == PixelClass::escaped);
    }
  }
  REQUIRE(rep.components.size() == 2);
  CHECK(rep.components[0].bounded != rep.components[1].bounded);
  long long total = 0;
  for (const auto& c : rep.components) total += c.size;
  CHECK(total == rep.classified_pixels);
}

TEST_CASE("z^3 slice also retains the unit disk") {
  FtParams t1{Rational(1)};
  RenderConfig cfg;
  cfg.resolution = 64;
  cfg.max_iter = 100;
  JuliaSliceReport rep = render_julia_slice(t1, cfg);
  REQUIRE(rep.components.size() == 2);
  int bounded = rep.components[0].bounded ? 0 : 1;
  CHECK(rep.components[bounded].basin);
  CHECK(rep.components[bounded].contains_zero);
}

TEST_CASE("an all-escaped grid is one component") {
  FtParams t0{Rational(0)};
  RenderConfig cfg;
  cfg.resolution = 32;
  cfg.max_iter = 50;
  cfg.center = {10.0, 10.0};  // window far outside the filled set
  cfg.half_width = 1.0;
  JuliaSliceReport rep = render_julia_slice(t0, cfg);
  REQUIRE(rep.components.size() == 1);
  CHECK_FALSE(rep.components[0].bounded);
  CHECK(rep.classified_pixels == 32LL * 32);
}

TEST_CASE("renders are deterministic and thread-independent") {
  FtParams t{Rational(1, 2)};
  RenderConfig cfg;
  cfg.resolution = 64;
  cfg.max_iter = 120;
  JuliaSliceReport a = render_julia_slice(t, cfg, 1);
  JuliaSliceReport b = render_julia_slice(t, cfg, 4);
  CHECK(a.classes == b.classes);
  CHECK(a.iterations == b.iterations);
  CHECK(a.summary_line() == b.summary_line());

  std::ostringstream ppm_a, ppm_b;
  write_ppm(ppm_a, a);
  write_ppm(ppm_b, b);
  CHECK(ppm_a.str() == ppm_b.str());
}

TEST_CASE("summary line format") {
  FtParams t{Rational(1, 2)};
  RenderConfig cfg;
  cfg.resolution = 64;
  cfg.max_iter = 120;
  JuliaSliceReport rep = render_julia_slice(t, cfg);
  std::string line = rep.summary_line();
  CHECK(line.rfind("t=1/2 resolution=64 components=", 0) == 0);
  CHECK(line.find("sizes=[") != std::string::npos);
  CHECK(line.find("bounded=[") != std::string::npos);
}

TEST_CASE("escaped pixels verifiably pass the escape radius") {
  FtParams t{Rational(1, 4)};
  RenderConfig cfg;
  cfg.resolution = 48;
  cfg.max_iter = 80;
  JuliaSliceReport rep = render_julia_slice(t, cfg);
  const int res = cfg.resolution;
  double step = 2.0 * cfg.half_width / res;
  double td = 0.25;
  int checked = 0;
  for (int row = 0; row < res && checked < 200; ++row) {
    for (int col = 0; col < res && checked < 200; ++col) {
      std::size_t idx = static_cast<std::size_t>(row) * res + col;
      if (rep.classes[idx] != PixelClass::escaped) continue;
      std::complex<double> z(-cfg.half_width + (col + 0.5) * step,
                             cfg.half_width - (row + 0.5) * step);
      for (int k = 0; k < rep.iterations[idx]; ++k)
        z = (1.0 - td) * z * z + td * z * z * z;
      CHECK(std::abs(z) > rep.escape_radius);
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("render config validation") {
  RenderConfig cfg;
  cfg.resolution = 8;
  CHECK_THROWS_AS(render_julia_slice(FtParams(Rational(0)), cfg),
                  std::invalid_argument);
}
