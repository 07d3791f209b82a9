#pragma once

#include <functional>
#include <vector>

namespace wh {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Time-filter kernel parameters: angular frequency omega and the period
/// T = 2*pi/omega it induces. The product period()*omega is 2*pi exactly.
struct KernelSpec {
  double omega = 1.0;

  explicit KernelSpec(double omega_);
  double period() const { return 2.0 * kPi / omega; }
};

/// Filter descriptor: kernel plus the half-width delta of the resonant band
/// I_delta = (1-delta, 1+delta) in rescaled frequency.
struct TransferFunction {
  KernelSpec kernel;
  double delta = 0.25;

  explicit TransferFunction(KernelSpec k, double delta_ = 0.25);
};

/// sinc(x) = sin(2*pi*x) / (2*pi*x), continuous at 0.
double sinc(double x);

/// Time-filter weight K(t) = (2/T)(cos(omega t) - 1/4) for t in [0, T].
double kernel_weight(double t, const KernelSpec& spec);

/// The rescaled transfer function of one filtered wave period,
///   beta_closed(r) = sinc(r+1) + sinc(r-1) - sinc(r)/2,
/// continuous at r in {0, +-1} and even in r. beta_closed(1) = 1.
double beta_closed(double r);

/// Algebraically equivalent form (1/pi) sin(2 pi r) (r/(r^2-1) - 1/(4r));
/// falls back to beta_closed near the removable points {0, +-1}.
double beta_closed_alt(double r);

/// Transfer function at unscaled frequency lambda by composite Simpson
/// quadrature of K(t) cos(lambda t) over one period. steps must be even.
/// Converges to beta_closed(lambda/omega) at fourth order in 1/steps.
double beta_quadrature(double lambda, const KernelSpec& spec, int steps);

/// Symmetric part of the transfer function about r = 1:
/// beta_sym(r) = sinc(r) (1 + r^2/(2 r^2 + 4)); even in r.
double beta_sym(double r);

/// Ratio w(r) = beta_closed(1+r) / beta_sym(r), evaluated in the
/// cancellation-free form 1 - r^3 q_poly(r). Requires |r| < 1/2 (the first
/// zero of beta_sym).
double w_ratio(double r);

/// q_poly(r) = 6 / ((3 r^2 + 4)(2 r^2 + 6 r + 4)), the cubic coefficient in
/// w_ratio(r) = 1 - r^3 q_poly(r). Poles at r = -1 and r = -2.
double q_poly(double r);

/// Symmetric difference quotient about omega:
/// (h(omega+x) - h(omega-x)) / (2x), x != 0.
double d_omega(const std::function<double(double)>& h, double omega, double x);

// ---------------------------------------------------------------------------
// Pointwise bound ladder for |beta_closed|.
// ---------------------------------------------------------------------------

/// Coefficient of the 1/(r-1) envelope.
inline constexpr double kBetaTailCoeff = 3.0 / (4.0 * kPi);

struct BoundViolation {
  double r;
  double beta_abs;
  double bound;
  const char* which;
};

struct BoundReport {
  // Smallest margin (bound - |beta|) seen for each bound; negative = violated.
  double parabola_margin = 1e300;   // 1 - (r-1)^2/2         on |r-1| <= 1/2
  double exponential_margin = 1e300;// exp(-(r-1)^2/2)       on |r-1| <= 1/2
  double half_margin = 1e300;       // 1/2                   on |r-1| >= 1/2
  double tail_margin = 1e300;       // a/(r-1)               on r >= 3/2
  double offband_margin = 1e300;    // 31/32                 on |r-1| >= 1/4
  std::vector<BoundViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks the bound ladder at every sample. Samples must reach out to at
/// least r = 8. A margin below -1e-12 is recorded as a violation (the
/// parabola touches |beta| with margin exactly 0 at r = 1).
BoundReport beta_bounds_check(const std::vector<double>& r_samples);

// ---------------------------------------------------------------------------
// The three-term functional N_omega.
// ---------------------------------------------------------------------------

/// N_omega(h) = omega^{-1} ||h||_{L1(R)} + ||D_omega h||_{L1(0, omega delta)}
///            + ||h||_{Linf(R \ omega I_delta)}, for even h.
struct NFunctionalReport {
  double l1_term = 0.0;
  double dstar_term = 0.0;
  double linf_term = 0.0;
  double total = 0.0;
};

struct NQuadratureConfig {
  double abs_tol = 1e-10;  // per-term absolute quadrature tolerance
  double r_cut = 0.0;      // truncation radius in unscaled frequency; 0 -> max(8, 4 omega)
  double dstar_limit = 0.0;// value of the D_omega integrand at x = 0
  int linf_samples = 4001; // dense samples per off-band segment, refined near maxima
  // When >= 2, adds the analytic L1 tail of (a/(lambda/omega - 1))^power
  // beyond r_cut and folds the same envelope into the Linf supremum. The
  // power-1 envelope is not integrable, so no tail is added in that case and
  // the L1 term is the truncated integral.
  int tail_power = 0;
};

/// Evaluates the three terms by adaptive quadrature on [0, r_cut] plus the
/// analytic tail (see NQuadratureConfig). h_hat is evaluated for
/// lambda >= 0 only; evenness is assumed. Throws ToleranceError if the
/// quadrature fails to converge.
NFunctionalReport n_functional(const std::function<double(double)>& h_hat, double omega,
                               double delta, const NQuadratureConfig& cfg = {});

/// N_1 of the n-th power of the rescaled transfer function. Uses the
/// cancellation-free beta_sym/w_ratio form of the near-band difference
/// quotient, the exact endpoint limit 0 at x = 0, and the analytic tail for
/// n >= 2. For n = 1 the L1 integral is truncated at r_cut: the envelope
/// decays like 1/r there, so no finite tail bound exists.
NFunctionalReport n_functional_beta_power(int n, double delta = 0.25,
                                          const NQuadratureConfig& cfg = {});

}  // namespace wh
