#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "covering/gaussian_rational.hpp"

namespace covering {

/// Parameter of the convex family f_t(z) = (1-t) z^2 + t z^3, t in [0,1],
/// kept exact.
struct FtParams {
  Rational t;

  explicit FtParams(Rational value) : t(std::move(value)) {
    if (t < 0 || t > 1)
      throw std::invalid_argument("t must lie in [0,1]");
  }
};

inline std::complex<double> ft_eval(const FtParams& p,
                                    std::complex<double> z) {
  double t = static_cast<double>(p.t);
  return (1.0 - t) * z * z + t * z * z * z;
}

inline GaussRat ft_eval_exact(const FtParams& p, const GaussRat& z) {
  GaussRat t(p.t);
  GaussRat one(1L);
  return (one - t) * z * z + t * z * z * z;
}

/// Finite critical data of f_t: points {0, -2(1-t)/(3t)} and values
/// {0, 4(1-t)^3/(27 t^2)}, exact. t=0 degenerates (the second critical
/// point escapes to infinity); t=1 merges both points at 0.
struct FtCriticalData {
  std::vector<GaussRat> points;
  std::vector<GaussRat> values;
  bool degenerate = false;  // t == 0, z^2 data returned
  bool merged = false;      // t == 1, double critical point at 0
};

inline FtCriticalData ft_critical_data(const FtParams& p) {
  FtCriticalData data;
  if (p.t == 0) {
    data.degenerate = true;
    data.points = {GaussRat()};
    data.values = {GaussRat()};
    return data;
  }
  Rational one(1);
  Rational zc = -2 * (one - p.t) / (3 * p.t);
  Rational vc = 4 * (one - p.t) * (one - p.t) * (one - p.t) /
                (27 * p.t * p.t);
  if (p.t == 1) {
    data.merged = true;
    data.points = {GaussRat(), GaussRat()};
    data.values = {GaussRat()};
    return data;
  }
  data.points = {GaussRat(), GaussRat(Rational(zc))};
  data.values = {GaussRat(), GaussRat(Rational(vc))};
  return data;
}

// ---------------------------------------------------------------------------
// Pinching: F(z) = z|z| on the round annulus, Beltrami norms of iterates.
// ---------------------------------------------------------------------------

struct PinchEstimate {
  int n = 0;
  Rational closed_form;  // (2^n - 1)/(2^n + 1)
  double measured = 0.0; // max |dbar F^n / d F^n| over the sample grid
};

namespace detail {

inline std::complex<long double> pinch_iterate(std::complex<long double> z,
                                               int n) {
  for (int k = 0; k < n; ++k) z *= std::abs(z);
  return z;
}

}  // namespace detail

/// Closed-form and finite-difference Beltrami norm of F^n, F(z) = z|z|,
/// sampled on a grid_size x grid_size polar grid of the annulus
/// 1/r < |z| < r. The Wirtinger derivatives use the 4-point complex stencil
/// with step 1e-6 |z|.
inline PinchEstimate pinch_beltrami_norm(int n, int grid_size = 100,
                                         double r = 2.0) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n > 40) throw std::invalid_argument("n > 40 exceeds float precision");
  if (grid_size < 2) throw std::invalid_argument("grid too small");
  if (r <= 1.0) throw std::invalid_argument("annulus outer radius must exceed 1");

  PinchEstimate est;
  est.n = n;
  BigInt two_n = BigInt(1) << n;
  est.closed_form = Rational(two_n - 1) / Rational(two_n + 1);

  long double inner = 1.0L / r;
  long double span = r - inner;
  long double max_mu = 0.0L;
  const long double pi = 3.141592653589793238462643383279502884L;
  for (int i = 0; i < grid_size; ++i) {
    long double rad = inner + (i + 0.5L) * span / grid_size;
    for (int j = 0; j < grid_size; ++j) {
      long double theta = (j + 0.5L) * 2.0L * pi / grid_size;
      std::complex<long double> z = std::polar(rad, theta);
      long double h = 1e-6L * std::abs(z);
      std::complex<long double> fx_p = detail::pinch_iterate(z + h, n);
      std::complex<long double> fx_m = detail::pinch_iterate(z - h, n);
      std::complex<long double> fy_p =
          detail::pinch_iterate(z + std::complex<long double>(0, h), n);
      std::complex<long double> fy_m =
          detail::pinch_iterate(z - std::complex<long double>(0, h), n);
      std::complex<long double> dx = fx_p - fx_m;
      std::complex<long double> dy = fy_p - fy_m;
      std::complex<long double> i_unit(0, 1);
      std::complex<long double> d = (dx - i_unit * dy) / (4.0L * h);
      std::complex<long double> dbar = (dx + i_unit * dy) / (4.0L * h);
      long double mu = std::abs(dbar) / std::abs(d);
      if (mu > max_mu) max_mu = mu;
    }
  }
  est.measured = static_cast<double>(max_mu);
  return est;
}

// ---------------------------------------------------------------------------
// Julia slice experiment for F(z,t) = (f_t(z), t).
// ---------------------------------------------------------------------------

// Default window: the filled set of f_t on [1/4, 1] stays inside |z| < 4.5
// (its leftmost reach is the negative fixed point, -4 at t = 1/4).
struct RenderConfig {
  std::complex<double> center{0.0, 0.0};
  double half_width = 4.5;
  int resolution = 512;
  int max_iter = 500;
  double escape_radius = 0.0;  // 0 = sound default max(2, 3/max(t, 1/100))

  void check() const {
    if (resolution < 16) throw std::invalid_argument("resolution must be >= 16");
    if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
    if (half_width <= 0) throw std::invalid_argument("half_width must be > 0");
  }
};

/// |f_t(z)| >= |z|^2 (t|z| - (1-t)) >= 2|z| beyond this radius, so escape
/// through it is irreversible.
inline double default_escape_radius(double t) {
  return std::max(2.0, 3.0 / std::max(t, 0.01));
}

enum class PixelClass : std::uint8_t {
  escaped = 0,    // |z_k| > escape_radius at some k <= max_iter
  basin = 1,      // |z_k| < 1e-6 at some k <= max_iter (attractor at 0)
  undecided = 2,  // neither within the iteration budget; Julia stand-in
};

struct JuliaComponent {
  long long size = 0;
  bool bounded = false;       // does not touch the window boundary
  bool basin = false;         // made of basin-class pixels
  bool contains_zero = false; // contains the pixel covering z = 0
};

struct JuliaSliceReport {
  Rational t;
  RenderConfig config;
  double escape_radius = 0.0;
  std::vector<PixelClass> classes;  // row-major, resolution^2 entries
  std::vector<int> iterations;      // escape iteration, 0 otherwise
  std::vector<JuliaComponent> components;
  long long classified_pixels = 0;  // escaped + basin

  std::string summary_line() const;
};

namespace detail {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[b] = a;
  }
};

}  // namespace detail

/// Census of the complement-of-Julia approximation: 4-connected components
/// of same-class pixels (escaped with escaped, basin with basin); undecided
/// pixels separate them. Components are listed in row-major discovery order.
inline std::vector<JuliaComponent> complement_components(
    const std::vector<PixelClass>& classes, int resolution,
    int zero_pixel_index = -1) {
  const int n = resolution * resolution;
  detail::UnionFind uf(n);
  auto classified = [&](int idx) { return classes[idx] != PixelClass::undecided; };
  for (int row = 0; row < resolution; ++row) {
    for (int col = 0; col < resolution; ++col) {
      int idx = row * resolution + col;
      if (!classified(idx)) continue;
      if (col + 1 < resolution && classes[idx + 1] == classes[idx])
        uf.unite(idx, idx + 1);
      if (row + 1 < resolution && classes[idx + resolution] == classes[idx])
        uf.unite(idx, idx + resolution);
    }
  }

  std::vector<int> component_of(n, -1);
  std::vector<JuliaComponent> components;
  for (int idx = 0; idx < n; ++idx) {
    if (!classified(idx)) continue;
    int root = uf.find(idx);
    if (component_of[root] == -1) {
      component_of[root] = static_cast<int>(components.size());
      JuliaComponent c;
      c.bounded = true;
      c.basin = classes[idx] == PixelClass::basin;
      components.push_back(c);
    }
    JuliaComponent& c = components[component_of[root]];
    ++c.size;
    int row = idx / resolution, col = idx % resolution;
    if (row == 0 || col == 0 || row == resolution - 1 || col == resolution - 1)
      c.bounded = false;
    if (idx == zero_pixel_index) c.contains_zero = true;
  }
  return components;
}

/// Escape-time classification of a t-slice. Deterministic for a fixed
/// configuration, independent of the thread count (threads only split rows).
inline JuliaSliceReport render_julia_slice(const FtParams& p,
                                           const RenderConfig& cfg,
                                           int threads = 1) {
  cfg.check();
  JuliaSliceReport rep;
  rep.t = p.t;
  rep.config = cfg;
  const double t = static_cast<double>(p.t);
  rep.escape_radius =
      cfg.escape_radius > 0 ? cfg.escape_radius : default_escape_radius(t);
  if (rep.escape_radius <= 1.0)
    throw std::invalid_argument("escape radius must exceed 1");

  const int res = cfg.resolution;
  rep.classes.assign(static_cast<std::size_t>(res) * res,
                     PixelClass::undecided);
  rep.iterations.assign(static_cast<std::size_t>(res) * res, 0);

  const double step = 2.0 * cfg.half_width / res;
  const double x0 = cfg.center.real() - cfg.half_width;
  const double y0 = cfg.center.imag() + cfg.half_width;
  const double esc2 = rep.escape_radius * rep.escape_radius;
  const double basin2 = 1e-12;  // |z| < 1e-6
  const double one_minus_t = 1.0 - t;

  auto render_rows = [&](int row_begin, int row_end) {
    for (int row = row_begin; row < row_end; ++row) {
      double y = y0 - (row + 0.5) * step;
      for (int col = 0; col < res; ++col) {
        double x = x0 + (col + 0.5) * step;
        double zr = x, zi = y;
        PixelClass cls = PixelClass::undecided;
        int iter = 0;
        for (int k = 0; k <= cfg.max_iter; ++k) {
          double n2 = zr * zr + zi * zi;
          if (n2 > esc2) {
            cls = PixelClass::escaped;
            iter = k;
            break;
          }
          if (n2 < basin2) {
            cls = PixelClass::basin;
            break;
          }
          if (k == cfg.max_iter) break;
          // (1-t) z^2 + t z^3
          double sqr = zr * zr - zi * zi;
          double sqi = 2.0 * zr * zi;
          double cur = sqr * zr - sqi * zi;
          double cui = sqr * zi + sqi * zr;
          zr = one_minus_t * sqr + t * cur;
          zi = one_minus_t * sqi + t * cui;
        }
        std::size_t idx = static_cast<std::size_t>(row) * res + col;
        rep.classes[idx] = cls;
        rep.iterations[idx] = iter;
      }
    }
  };

  if (threads <= 1) {
    render_rows(0, res);
  } else {
    std::vector<std::thread> pool;
    int chunk = (res + threads - 1) / threads;
    for (int w = 0; w < threads; ++w) {
      int begin = w * chunk;
      int end = std::min(res, begin + chunk);
      if (begin < end) pool.emplace_back(render_rows, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  for (PixelClass c : rep.classes)
    if (c != PixelClass::undecided) ++rep.classified_pixels;

  int zero_idx = -1;
  {
    double fcol = (0.0 - x0) / step;
    double frow = (y0 - 0.0) / step;
    if (fcol >= 0 && frow >= 0) {
      int col = static_cast<int>(fcol);
      int row = static_cast<int>(frow);
      if (col < res && row < res) zero_idx = row * res + col;
    }
  }
  rep.components = complement_components(rep.classes, res, zero_idx);
  return rep;
}

inline std::string JuliaSliceReport::summary_line() const {
  std::string sizes, bounded;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) {
      sizes += ",";
      bounded += ",";
    }
    sizes += std::to_string(components[i].size);
    bounded += components[i].bounded ? "true" : "false";
  }
  std::string t_str = numerator(t).str();
  if (denominator(t) != 1) t_str += "/" + denominator(t).str();
  return "t=" + t_str + " resolution=" + std::to_string(config.resolution) +
         " components=" + std::to_string(components.size()) + " sizes=[" +
         sizes + "] bounded=[" + bounded + "]";
}

/// Binary 8-bit PPM: escaped pixels in an iteration-count gray ramp, the
/// retained set black. Bit-exact for a fixed configuration.
inline void write_ppm(std::ostream& os, const JuliaSliceReport& rep) {
  const int res = rep.config.resolution;
  os << "P6\n" << res << " " << res << "\n255\n";
  std::string buffer;
  buffer.reserve(static_cast<std::size_t>(res) * res * 3);
  for (std::size_t idx = 0; idx < rep.classes.size(); ++idx) {
    unsigned char v = 0;
    if (rep.classes[idx] == PixelClass::escaped) {
      long long k = rep.iterations[idx];
      v = static_cast<unsigned char>(55 + (200 * k) / rep.config.max_iter);
    }
    buffer.push_back(static_cast<char>(v));
    buffer.push_back(static_cast<char>(v));
    buffer.push_back(static_cast<char>(v));
  }
  os.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
}

}  // namespace covering
