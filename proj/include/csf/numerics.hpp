#pragma once

#include <complex>
#include <functional>

#include "csf/errors.hpp"

namespace csf::num {

using cplx = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;

/// Gamma function on the complex plane via a fixed-coefficient Lanczos
/// approximation, with the reflection formula for Re z < 1/2.
/// Relative accuracy is ~1e-13 for moderate |z|.
/// Throws PoleError at non-positive integers.
cplx complex_gamma(cplx z);

/// Which side of the cut [1, inf) to take when evaluating 2F1 there.
enum class CutSide { none, above, below };

/// Gauss hypergeometric function 2F1(a, b; c; z).
///
/// Power series for small |z|; otherwise the standard linear
/// transformations to an argument of modulus <= ~0.8. Degenerate
/// (logarithmic) parameter combinations a-b in Z or c-a-b in Z that a
/// transformation would require are rejected with NonConvergenceError.
/// For z on [1, inf) a CutSide must be supplied, otherwise
/// CutAmbiguityError is thrown.
cplx hyp2f1(cplx a, cplx b, cplx c, cplx z, CutSide side = CutSide::none);

struct QuadratureConfig {
  double abs_tol = 1e-9;
  double rel_tol = 1e-8;
  int max_subdivisions = 4000;
  double halfline_cutoff_initial = 8.0;  // first truncation point for [0, inf)
  double tail_tol = 1e-10;

  void validate() const;  // throws ValidationError
};

struct QuadResult {
  cplx value{0.0, 0.0};
  double err_estimate = 0.0;
};

using Integrand = std::function<cplx(double)>;

/// Adaptive Gauss-Legendre quadrature on [a, b].
QuadResult integrate_segment(const Integrand& f, double a, double b,
                             const QuadratureConfig& cfg);

/// Adaptive quadrature on [0, inf): panels on [0, L] with L grown
/// geometrically until the last panel contributes less than tail_tol.
/// The error estimate combines panel errors with the last tail term.
QuadResult integrate_halfline(const Integrand& f, const QuadratureConfig& cfg);

/// Quadrature on [a, b] with a geometrically graded mesh toward one
/// endpoint, for integrable algebraic endpoint singularities.
/// `toward_b` selects which endpoint carries the singularity.
QuadResult integrate_graded(const Integrand& f, double a, double b,
                            bool toward_b, const QuadratureConfig& cfg,
                            int levels = 36);

/// Integrand for integrate_endpoint_power: receives the point x and the
/// exact distance d to the singular endpoint (x is rounded; d is not, so
/// singular factors should be evaluated from d).
using EndpointIntegrand = std::function<cplx(double x, double d)>;

/// Quadrature on [a, b] with an integrable algebraic singularity at one
/// endpoint, desingularised by the substitution x = endpoint -/+ u^m.
/// m = 4 handles exponents down to about -0.8 accurately.
QuadResult integrate_endpoint_power(const EndpointIntegrand& f, double a,
                                    double b, bool singular_at_b, int m,
                                    const QuadratureConfig& cfg);

/// Trapezoidal rule with doubling for smooth periodic integrands on
/// [0, period].
QuadResult integrate_periodic(const Integrand& f, double period,
                              const QuadratureConfig& cfg);

/// Integral over the whole real line of a function with algebraic decay
/// |f| ~ |x|^{-p}, p > 1, and optional interior integrable singularities.
/// Splits at the singular points (graded meshes on both sides) and maps
/// the tails to finite segments.
QuadResult integrate_real_line(const Integrand& f,
                               const std::vector<double>& singular_points,
                               const QuadratureConfig& cfg,
                               double core_halfwidth = 8.0);

}  // namespace csf::num
