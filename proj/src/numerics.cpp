#include "csf/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

namespace csf::num {

namespace {

// Lanczos rational approximation, g = 607/128, 15 terms. The coefficient
// set is the standard double-precision one; it can be regenerated from the
// defining partial-fraction sum with any extended-precision evaluator.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5};

cplx gamma_lanczos_pos(cplx z) {
  // valid for Re z >= 0.5
  cplx sum = kLanczos[0];
  for (int k = 1; k < static_cast<int>(kLanczos.size()); ++k) {
    sum += kLanczos[k] / (z - 1.0 + static_cast<double>(k));
  }
  const cplx t = z - 0.5 + kLanczosG;
  return std::sqrt(2.0 * kPi) * std::pow(t, z - 0.5) * std::exp(-t) * sum;
}

bool is_nonpositive_integer(cplx z, double tol = 1e-13) {
  if (std::abs(z.imag()) > tol) return false;
  const double r = std::round(z.real());
  return r <= 0.0 && std::abs(z.real() - r) <= tol * std::max(1.0, std::abs(r));
}

bool is_integer(cplx z, double tol = 1e-12) {
  if (std::abs(z.imag()) > tol) return false;
  return std::abs(z.real() - std::round(z.real())) <=
         tol * std::max(1.0, std::abs(z.real()));
}

}  // namespace

cplx complex_gamma(cplx z) {
  if (is_nonpositive_integer(z)) {
    std::ostringstream os;
    os << "gamma: pole at z = (" << z.real() << ", " << z.imag() << ")";
    throw PoleError(os.str(), z);
  }
  if (z.real() >= 0.5) return gamma_lanczos_pos(z);
  // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
  const cplx s = std::sin(kPi * z);
  return kPi / (s * gamma_lanczos_pos(1.0 - z));
}

// ---------------------------------------------------------------------------
// 2F1
// ---------------------------------------------------------------------------

namespace {

// Maclaurin series; requires |z| < 1 (practically |z| <= ~0.85).
cplx hyp2f1_series(cplx a, cplx b, cplx c, cplx z) {
  cplx term = 1.0;
  cplx sum = 1.0;
  const int kMaxTerms = 8000;
  int small_count = 0;
  for (int k = 0; k < kMaxTerms; ++k) {
    const double dk = static_cast<double>(k);
    term *= (a + dk) * (b + dk) / ((c + dk) * (dk + 1.0)) * z;
    sum += term;
    if (std::abs(term) <= 1e-18 * (1.0 + std::abs(sum))) {
      if (++small_count >= 2) return sum;
    } else {
      small_count = 0;
    }
  }
  throw NonConvergenceError("hyp2f1: series did not converge");
}

struct GammaRatio {
  // Gamma(c) Gamma(x) / (Gamma(y1) Gamma(y2)), with pole bookkeeping:
  // a pole of Gamma(x) is a genuine failure (logarithmic case upstream);
  // poles of the denominator produce zero.
  static cplx eval(cplx c, cplx x, cplx y1, cplx y2) {
    if (is_nonpositive_integer(y1) || is_nonpositive_integer(y2)) return 0.0;
    return complex_gamma(c) * complex_gamma(x) / (complex_gamma(y1) * complex_gamma(y2));
  }
};

cplx hyp2f1_core(cplx a, cplx b, cplx c, cplx z);

// z -> 1 - z  (requires c - a - b not an integer)
cplx via_one_minus_z(cplx a, cplx b, cplx c, cplx z) {
  const cplx s = c - a - b;
  const cplx w = 1.0 - z;
  const cplx t1 = GammaRatio::eval(c, s, c - a, c - b) *
                  hyp2f1_core(a, b, a + b - c + 1.0, w);
  const cplx t2 = GammaRatio::eval(c, -s, a, b) * std::pow(w, s) *
                  hyp2f1_core(c - a, c - b, s + 1.0, w);
  return t1 + t2;
}

// z -> 1 / z  (requires a - b not an integer)
cplx via_inv_z(cplx a, cplx b, cplx c, cplx z) {
  const cplx w = 1.0 / z;
  const cplx t1 = GammaRatio::eval(c, b - a, b, c - a) * std::pow(-z, -a) *
                  hyp2f1_core(a, a - c + 1.0, a - b + 1.0, w);
  const cplx t2 = GammaRatio::eval(c, a - b, a, c - b) * std::pow(-z, -b) *
                  hyp2f1_core(b, b - c + 1.0, b - a + 1.0, w);
  return t1 + t2;
}

// z -> 1 / (1 - z)  (requires a - b not an integer)
cplx via_inv_one_minus_z(cplx a, cplx b, cplx c, cplx z) {
  const cplx w = 1.0 / (1.0 - z);
  const cplx t1 = GammaRatio::eval(c, b - a, b, c - a) * std::pow(1.0 - z, -a) *
                  hyp2f1_core(a, c - b, a - b + 1.0, w);
  const cplx t2 = GammaRatio::eval(c, a - b, a, c - b) * std::pow(1.0 - z, -b) *
                  hyp2f1_core(b, c - a, b - a + 1.0, w);
  return t1 + t2;
}

// z -> 1 - 1/z  (requires c - a - b not an integer)
cplx via_one_minus_inv_z(cplx a, cplx b, cplx c, cplx z) {
  const cplx s = c - a - b;
  const cplx w = 1.0 - 1.0 / z;
  const cplx t1 = GammaRatio::eval(c, s, c - a, c - b) * std::pow(z, -a) *
                  hyp2f1_core(a, a - c + 1.0, a + b - c + 1.0, w);
  const cplx t2 = GammaRatio::eval(c, -s, a, b) * std::pow(1.0 - z, s) *
                  std::pow(z, a - c) *
                  hyp2f1_core(c - a, 1.0 - a, s + 1.0, w);
  return t1 + t2;
}

// Pfaff: always valid (no new Gamma factors)
cplx via_pfaff(cplx a, cplx b, cplx c, cplx z) {
  const cplx w = z / (z - 1.0);
  return std::pow(1.0 - z, -a) * hyp2f1_core(a, c - b, c, w);
}

cplx hyp2f1_core(cplx a, cplx b, cplx c, cplx z) {
  if (is_nonpositive_integer(c)) {
    throw PoleError("hyp2f1: c is a non-positive integer", c);
  }
  const double az = std::abs(z);
  if (az <= 0.72) return hyp2f1_series(a, b, c, z);

  struct Option {
    double mod;
    int which;  // 0 direct, 1 pfaff, 2 one-minus, 3 inv, 4 inv-one-minus,
                // 5 one-minus-inv
    bool degenerate;
  };
  const bool ab_int = is_integer(a - b);
  const bool s_int = is_integer(c - a - b);
  std::array<Option, 6> opts = {
      Option{az, 0, false},
      Option{std::abs(z / (z - 1.0)), 1, false},
      Option{std::abs(1.0 - z), 2, s_int},
      Option{std::abs(1.0 / z), 3, ab_int},
      Option{std::abs(1.0 / (1.0 - z)), 4, ab_int},
      Option{std::abs(1.0 - 1.0 / z), 5, s_int},
  };
  std::sort(opts.begin(), opts.end(),
            [](const Option& u, const Option& v) { return u.mod < v.mod; });
  // Prefer a comfortably convergent non-degenerate transformation; fall
  // back to a slow series if the point sits in the lens near |z|=|1-z|=1.
  for (double threshold : {0.80, 0.985}) {
    for (const auto& o : opts) {
      if (o.mod > threshold) break;
      if (o.degenerate) continue;
      switch (o.which) {
        case 0: return hyp2f1_series(a, b, c, z);
        case 1: return via_pfaff(a, b, c, z);
        case 2: return via_one_minus_z(a, b, c, z);
        case 3: return via_inv_z(a, b, c, z);
        case 4: return via_inv_one_minus_z(a, b, c, z);
        case 5: return via_one_minus_inv_z(a, b, c, z);
      }
    }
  }
  // Nothing non-degenerate maps inside the series disk.
  if ((ab_int || s_int)) {
    throw NonConvergenceError(
        "hyp2f1: logarithmic parameter case (a-b or c-a-b integral) is not "
        "implemented; perturb the parameters");
  }
  throw NonConvergenceError("hyp2f1: no transformation reached the series disk");
}

}  // namespace

cplx hyp2f1(cplx a, cplx b, cplx c, cplx z, CutSide side) {
  if (is_nonpositive_integer(c)) {
    throw PoleError("hyp2f1: c is a non-positive integer", c);
  }
  const bool on_cut = std::abs(z.imag()) == 0.0 && z.real() >= 1.0;
  if (on_cut) {
    if (std::abs(z.real() - 1.0) <= 1e-14) {
      // Gauss summation at z = 1
      const cplx s = c - a - b;
      if (s.real() <= 0.0) {
        throw DomainError("hyp2f1: divergent at z = 1 (Re(c-a-b) <= 0)");
      }
      return complex_gamma(c) * complex_gamma(s) / (complex_gamma(c - a) * complex_gamma(c - b));
    }
    if (side == CutSide::none) {
      throw CutAmbiguityError(
          "hyp2f1: z lies on the cut [1, inf); specify a side");
    }
    const double delta = 1e-14 * (1.0 + std::abs(z));
    z += cplx(0.0, side == CutSide::above ? delta : -delta);
  }
  return hyp2f1_core(a, b, c, z);
}

// ---------------------------------------------------------------------------
// Quadrature
// ---------------------------------------------------------------------------

void QuadratureConfig::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || !(tail_tol > 0.0)) {
    throw ValidationError("QuadratureConfig: tolerances must be positive");
  }
  if (max_subdivisions < 1) {
    throw ValidationError("QuadratureConfig: max_subdivisions >= 1 required");
  }
  if (!(halfline_cutoff_initial > 0.0)) {
    throw ValidationError("QuadratureConfig: halfline_cutoff_initial > 0 required");
  }
}

namespace {

// 32-point Gauss-Legendre nodes/weights on [-1, 1], computed once by
// Newton iteration on the Legendre polynomial.
struct GL32 {
  std::array<double, 32> x{};
  std::array<double, 32> w{};
  GL32() {
    const int n = 32;
    for (int i = 0; i < n / 2; ++i) {
      double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
      double p0, p1, dp;
      for (int it = 0; it < 100; ++it) {
        p0 = 1.0;
        p1 = t;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (t * p1 - p0) / (t * t - 1.0);
        const double dt = p1 / dp;
        t -= dt;
        if (std::abs(dt) < 1e-16) break;
      }
      x[i] = -t;
      x[n - 1 - i] = t;
      const double wi = 2.0 / ((1.0 - t * t) * dp * dp);
      w[i] = wi;
      w[n - 1 - i] = wi;
    }
  }
};

const GL32& gl32() {
  static const GL32 table;
  return table;
}

cplx gl32_panel(const Integrand& f, double a, double b) {
  const auto& t = gl32();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  cplx acc = 0.0;
  for (int i = 0; i < 32; ++i) {
    const double xi = mid + half * t.x[i];
    const cplx fx = f(xi);
    if (!std::isfinite(fx.real()) || !std::isfinite(fx.imag())) {
      throw NonFiniteError("integrand returned a non-finite value", xi);
    }
    acc += t.w[i] * fx;
  }
  return acc * half;
}

struct AdaptiveState {
  int panels_used = 0;
};

void adaptive_rec(const Integrand& f, double a, double b, cplx whole,
                  double tol, int depth, const QuadratureConfig& cfg,
                  AdaptiveState& st, cplx& value, double& err) {
  const double mid = 0.5 * (a + b);
  const cplx left = gl32_panel(f, a, mid);
  const cplx right = gl32_panel(f, mid, b);
  const double diff = std::abs(whole - (left + right));
  st.panels_used += 2;
  if (st.panels_used > cfg.max_subdivisions) {
    throw BudgetError("adaptive quadrature: subdivision budget exhausted",
                      value + left + right, err + diff);
  }
  if (diff <= tol || depth >= 48) {
    value += left + right;
    err += diff;
    return;
  }
  adaptive_rec(f, a, mid, left, 0.5 * tol, depth + 1, cfg, st, value, err);
  adaptive_rec(f, mid, b, right, 0.5 * tol, depth + 1, cfg, st, value, err);
}

}  // namespace

QuadResult integrate_segment(const Integrand& f, double a, double b,
                             const QuadratureConfig& cfg) {
  cfg.validate();
  if (a == b) return {0.0, 0.0};
  const cplx whole = gl32_panel(f, a, b);
  const double tol =
      std::max(cfg.abs_tol, cfg.rel_tol * std::abs(whole));
  AdaptiveState st;
  cplx value = 0.0;
  double err = 0.0;
  adaptive_rec(f, a, b, whole, tol, 0, cfg, st, value, err);
  return {value, err};
}

QuadResult integrate_halfline(const Integrand& f, const QuadratureConfig& cfg) {
  cfg.validate();
  double lo = 0.0;
  double hi = cfg.halfline_cutoff_initial;
  QuadResult total = integrate_segment(f, lo, hi, cfg);
  for (int iter = 0; iter < 60; ++iter) {
    lo = hi;
    hi *= 2.0;
    const QuadResult piece = integrate_segment(f, lo, hi, cfg);
    total.value += piece.value;
    total.err_estimate += piece.err_estimate;
    if (std::abs(piece.value) < cfg.tail_tol) {
      total.err_estimate += std::abs(piece.value);
      return total;
    }
  }
  throw BudgetError("integrate_halfline: tail did not stabilise",
                    total.value, total.err_estimate);
}

QuadResult integrate_graded(const Integrand& f, double a, double b,
                            bool toward_b, const QuadratureConfig& cfg,
                            int levels) {
  cfg.validate();
  QuadResult total;
  const double len = b - a;
  // Geometric panels shrinking toward the singular endpoint; the last
  // sliver (relative size 4^-levels) is dropped, which is consistent with
  // an integrable endpoint singularity.
  double frac = 1.0;
  double last_abs = 0.0;
  for (int k = 0; k < levels; ++k) {
    const double next = frac * 0.25;
    double lo, hi;
    if (toward_b) {
      lo = b - len * frac;
      hi = b - len * next;
    } else {
      lo = a + len * next;
      hi = a + len * frac;
    }
    // stop when panels collapse to rounding scale near the endpoint
    const double scale = std::max({std::abs(lo), std::abs(hi), 1e-300});
    if (!(hi > lo) || hi - lo <= 8.0 * std::numeric_limits<double>::epsilon() * scale) {
      break;
    }
    const QuadResult piece = integrate_segment(f, lo, hi, cfg);
    total.value += piece.value;
    total.err_estimate += piece.err_estimate;
    last_abs = std::abs(piece.value);
    frac = next;
  }
  total.err_estimate += last_abs;  // dropped sliver allowance
  return total;
}

QuadResult integrate_endpoint_power(const EndpointIntegrand& f, double a,
                                    double b, bool singular_at_b, int m,
                                    const QuadratureConfig& cfg) {
  cfg.validate();
  if (m < 1) throw ValidationError("integrate_endpoint_power: m >= 1 required");
  const double len = b - a;
  const double U = std::pow(len, 1.0 / m);
  const double dm = static_cast<double>(m);
  auto g = [&](double u) {
    const double d = std::pow(u, dm);
    const double x = singular_at_b ? b - d : a + d;
    return f(x, d) * (dm * std::pow(u, dm - 1.0));
  };
  return integrate_segment(g, 0.0, U, cfg);
}

QuadResult integrate_periodic(const Integrand& f, double period,
                              const QuadratureConfig& cfg) {
  cfg.validate();
  int n = 64;
  auto eval = [&](int m) {
    cplx acc = 0.0;
    const double h = period / m;
    for (int i = 0; i < m; ++i) {
      const cplx fx = f(i * h);
      if (!std::isfinite(fx.real()) || !std::isfinite(fx.imag())) {
        throw NonFiniteError("periodic integrand non-finite", i * h);
      }
      acc += fx;
    }
    return acc * h;
  };
  cplx prev = eval(n);
  for (int iter = 0; iter < 16; ++iter) {
    n *= 2;
    const cplx cur = eval(n);
    const double diff = std::abs(cur - prev);
    if (diff <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(cur))) {
      return {cur, diff};
    }
    prev = cur;
  }
  throw BudgetError("integrate_periodic: no convergence", prev, 1.0);
}

QuadResult integrate_real_line(const Integrand& f,
                               const std::vector<double>& singular_points,
                               const QuadratureConfig& cfg,
                               double core_halfwidth) {
  cfg.validate();
  std::vector<double> pts = singular_points;
  std::sort(pts.begin(), pts.end());
  const double X = std::max(
      core_halfwidth,
      pts.empty() ? 1.0 : 2.0 * std::max(std::abs(pts.front()), std::abs(pts.back())));

  QuadResult total;
  auto add = [&total](const QuadResult& r) {
    total.value += r.value;
    total.err_estimate += r.err_estimate;
  };

  std::vector<double> knots;
  knots.push_back(-X);
  for (double p : pts) knots.push_back(p);
  knots.push_back(X);

  // Interior knots are the singular points: grade toward them from both
  // sides. Outer segments are regular except when they touch a knot.
  for (size_t i = 0; i + 1 < knots.size(); ++i) {
    const double a = knots[i];
    const double b = knots[i + 1];
    const bool sing_left = i > 0;
    const bool sing_right = i + 2 < knots.size();
    const double mid = 0.5 * (a + b);
    auto fx = [&f](double x, double) { return f(x); };
    if (sing_left && sing_right) {
      add(integrate_endpoint_power(fx, a, mid, false, 4, cfg));
      add(integrate_endpoint_power(fx, mid, b, true, 4, cfg));
    } else if (sing_left) {
      add(integrate_endpoint_power(fx, a, b, false, 4, cfg));
    } else if (sing_right) {
      add(integrate_endpoint_power(fx, a, b, true, 4, cfg));
    } else {
      add(integrate_segment(f, a, b, cfg));
    }
  }

  // Tails via x = X/t, t in (0, 1]:  int_X^inf f = int_0^1 f(X/t) X/t^2 dt.
  auto tail = [&](double sign) {
    return integrate_graded(
        [&f, X, sign](double t) {
          const double x = sign * X / t;
          return f(x) * (X / (t * t));
        },
        0.0, 1.0, false, cfg);
  };
  add(tail(1.0));
  add(tail(-1.0));
  return total;
}

}  // namespace csf::num
