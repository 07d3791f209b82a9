#include "waveholtz/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "waveholtz/quadrature.hpp"

namespace wh {

KernelSpec::KernelSpec(double omega_) : omega(omega_) {
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw std::invalid_argument("KernelSpec: omega must be positive and finite");
}

TransferFunction::TransferFunction(KernelSpec k, double delta_) : kernel(k), delta(delta_) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("TransferFunction: delta must lie in (0, 1)");
}

double sinc(double x) {
  const double y = 2.0 * kPi * x;
  if (std::abs(x) < 1e-4) {
    const double y2 = y * y;
    return 1.0 - y2 / 6.0 * (1.0 - y2 / 20.0);
  }
  return std::sin(y) / y;
}

double kernel_weight(double t, const KernelSpec& spec) {
  const double T = spec.period();
  if (t < 0.0 || t > T * (1.0 + 1e-12))
    throw std::invalid_argument("kernel_weight: t outside [0, T]");
  return 2.0 / T * (std::cos(spec.omega * t) - 0.25);
}

double beta_closed(double r) {
  return sinc(r + 1.0) + sinc(r - 1.0) - 0.5 * sinc(r);
}

double beta_closed_alt(double r) {
  if (std::abs(r) < 1e-4 || std::abs(r - 1.0) < 1e-4 || std::abs(r + 1.0) < 1e-4)
    return beta_closed(r);
  return std::sin(2.0 * kPi * r) / kPi * (r / (r * r - 1.0) - 0.25 / r);
}

double beta_quadrature(double lambda, const KernelSpec& spec, int steps) {
  if (steps < 2 || steps % 2 != 0)
    throw std::invalid_argument("beta_quadrature: steps must be even and >= 2");
  const double T = spec.period();
  const double dt = T / steps;
  const double scale = 2.0 / T;

  // Simpson sum with phasor recurrences for cos(omega t) and cos(lambda t).
  // Phasors are recomputed from scratch every 512 steps to stop drift.
  const double cw = std::cos(spec.omega * dt), sw = std::sin(spec.omega * dt);
  const double cl = std::cos(lambda * dt), sl = std::sin(lambda * dt);
  double cwt = 1.0, swt = 0.0;  // cos/sin(omega t)
  double clt = 1.0, slt = 0.0;  // cos/sin(lambda t)

  auto integrand = [&]() { return scale * (cwt - 0.25) * clt; };

  double sum = integrand();  // m = 0, weight 1
  for (int m = 1; m < steps; ++m) {
    const double cwt_new = cwt * cw - swt * sw;
    swt = swt * cw + cwt * sw;
    cwt = cwt_new;
    const double clt_new = clt * cl - slt * sl;
    slt = slt * cl + clt * sl;
    clt = clt_new;
    if (m % 512 == 0) {
      const double t = m * dt;
      cwt = std::cos(spec.omega * t);
      swt = std::sin(spec.omega * t);
      clt = std::cos(lambda * t);
      slt = std::sin(lambda * t);
    }
    sum += (m % 2 == 1 ? 4.0 : 2.0) * integrand();
  }
  {
    cwt = std::cos(spec.omega * T);
    swt = std::sin(spec.omega * T);
    clt = std::cos(lambda * T);
    slt = std::sin(lambda * T);
    sum += integrand();  // m = steps, weight 1
  }
  return dt / 3.0 * sum;
}

double beta_sym(double r) {
  const double r2 = r * r;
  return sinc(r) * (1.0 + r2 / (2.0 * r2 + 4.0));
}

double q_poly(double r) {
  const double quad = 2.0 * r * r + 6.0 * r + 4.0;  // = 2 (r+1)(r+2)
  if (std::abs(quad) < 1e-14)
    throw std::invalid_argument("q_poly: evaluation at a pole (r = -1 or r = -2)");
  return 6.0 / ((3.0 * r * r + 4.0) * quad);
}

double w_ratio(double r) {
  if (!(std::abs(r) < 0.5))
    throw std::invalid_argument("w_ratio: |r| must be below 1/2, the first zero of beta_sym");
  return 1.0 - r * r * r * q_poly(r);
}

double d_omega(const std::function<double(double)>& h, double omega, double x) {
  if (x == 0.0) throw std::invalid_argument("d_omega: x must be nonzero");
  return (h(omega + x) - h(omega - x)) / (2.0 * x);
}

namespace {

constexpr double kMarginTol = 1e-12;

void record(BoundReport& rep, double& slot, double r, double babs, double bound,
            const char* which) {
  const double margin = bound - babs;
  slot = std::min(slot, margin);
  if (margin < -kMarginTol) rep.violations.push_back({r, babs, bound, which});
}

}  // namespace

BoundReport beta_bounds_check(const std::vector<double>& r_samples) {
  if (r_samples.empty()) throw std::invalid_argument("beta_bounds_check: no samples");
  double rmax = 0.0;
  for (double r : r_samples) rmax = std::max(rmax, std::abs(r));
  if (rmax < 8.0)
    throw std::invalid_argument("beta_bounds_check: samples must cover [0, R] with R >= 8");

  BoundReport rep;
  for (double rs : r_samples) {
    const double r = std::abs(rs);  // evenness
    const double babs = std::abs(beta_closed(r));
    const double d = r - 1.0;
    if (std::abs(d) <= 0.5) {
      const double parabola = 1.0 - 0.5 * d * d;
      record(rep, rep.parabola_margin, r, babs, parabola, "1 - (r-1)^2/2");
      record(rep, rep.exponential_margin, r, babs, std::exp(-0.5 * d * d), "exp(-(r-1)^2/2)");
    }
    if (std::abs(d) >= 0.5) {
      record(rep, rep.half_margin, r, babs, 0.5, "1/2");
    }
    if (r >= 1.5) {
      record(rep, rep.tail_margin, r, babs, kBetaTailCoeff / d, "a/(r-1)");
    }
    if (std::abs(d) >= 0.25) {
      record(rep, rep.offband_margin, r, babs, 31.0 / 32.0, "31/32");
    }
  }
  return rep;
}

namespace {

// Splits [0, hi] at the half-integer multiples of omega so that the kinks of
// |h|^n (sign changes of the transfer function) sit on panel boundaries.
std::vector<double> half_integer_panels(double omega, double hi) {
  std::vector<double> cuts{0.0};
  for (double c = 0.5 * omega; c < hi; c += 0.5 * omega) cuts.push_back(c);
  cuts.push_back(hi);
  return cuts;
}

double integrate_panels(const std::function<double(double)>& f, const std::vector<double>& cuts,
                        double abs_tol) {
  double total = 0.0;
  const double per_panel = abs_tol / static_cast<double>(cuts.size());
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    total += integrate_or_throw(f, cuts[i], cuts[i + 1], per_panel);
  return total;
}

// Dense scan of |h| over [lo, hi] with a few refinement rounds near the
// running maximum. Band edges are endpoints, so they are always sampled.
double scan_sup(const std::function<double(double)>& h, double lo, double hi, int samples) {
  if (hi <= lo) return 0.0;
  double best = 0.0, arg = lo;
  auto sweep = [&](double a, double b, int m) {
    for (int i = 0; i <= m; ++i) {
      const double x = a + (b - a) * i / m;
      const double v = std::abs(h(x));
      if (v > best) {
        best = v;
        arg = x;
      }
    }
  };
  sweep(lo, hi, samples - 1);
  double w = (hi - lo) / (samples - 1);
  for (int round = 0; round < 3; ++round) {
    sweep(std::max(lo, arg - w), std::min(hi, arg + w), 64);
    w /= 10.0;
  }
  return best;
}

NFunctionalReport n_functional_impl(const std::function<double(double)>& h_abs,
                                    const std::function<double(double)>& dstar_abs, double omega,
                                    double delta, const NQuadratureConfig& cfg) {
  if (!(omega > 0.0)) throw std::invalid_argument("n_functional: omega must be positive");
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("n_functional: delta must lie in (0, 1)");
  const double r_cut = cfg.r_cut > 0.0 ? cfg.r_cut : std::max(8.0, 4.0 * omega);
  if (r_cut <= omega * (1.0 + delta))
    throw std::invalid_argument("n_functional: r_cut must exceed the band");

  NFunctionalReport rep;

  // L1 over the whole line: evenness gives the factor 2.
  rep.l1_term = 2.0 / omega * integrate_panels(h_abs, half_integer_panels(omega, r_cut), cfg.abs_tol);
  if (cfg.tail_power >= 2) {
    const int p = cfg.tail_power;
    rep.l1_term += 2.0 * std::pow(kBetaTailCoeff, p) *
                   std::pow(r_cut / omega - 1.0, 1.0 - p) / (p - 1.0);
  }

  // Difference-quotient term on (0, omega*delta], continuous at 0.
  auto dstar_integrand = [&](double x) { return x == 0.0 ? std::abs(cfg.dstar_limit) : dstar_abs(x); };
  rep.dstar_term = integrate_or_throw(dstar_integrand, 0.0, omega * delta, cfg.abs_tol);

  // Sup norm off the band, with edge refinement; the analytic envelope covers
  // the truncated tail.
  const double lo_edge = omega * (1.0 - delta), hi_edge = omega * (1.0 + delta);
  double sup = std::max(scan_sup(h_abs, 0.0, lo_edge, cfg.linf_samples),
                        scan_sup(h_abs, hi_edge, r_cut, cfg.linf_samples));
  if (cfg.tail_power >= 1)
    sup = std::max(sup, std::pow(kBetaTailCoeff / (r_cut / omega - 1.0), cfg.tail_power));
  rep.linf_term = sup;

  rep.total = rep.l1_term + rep.dstar_term + rep.linf_term;
  return rep;
}

}  // namespace

NFunctionalReport n_functional(const std::function<double(double)>& h_hat, double omega,
                               double delta, const NQuadratureConfig& cfg) {
  auto h_abs = [&h_hat](double x) { return std::abs(h_hat(x)); };
  auto dstar_abs = [&h_hat, omega](double x) {
    return std::abs(h_hat(omega + x) - h_hat(omega - x)) / (2.0 * x);
  };
  return n_functional_impl(h_abs, dstar_abs, omega, delta, cfg);
}

NFunctionalReport n_functional_beta_power(int n, double delta, const NQuadratureConfig& cfg) {
  if (n < 1) throw std::invalid_argument("n_functional_beta_power: n must be >= 1");
  if (!(delta > 0.0 && delta < 0.5))
    throw std::invalid_argument("n_functional_beta_power: delta must lie in (0, 1/2)");
  auto h_abs = [n](double r) { return std::pow(std::abs(beta_closed(r)), n); };
  // Near the band, beta^n(1+x) - beta^n(1-x) = beta_sym^n(x) (w(x)^n - w(-x)^n):
  // products only, no cancellation of nearly equal transfer values.
  auto dstar_abs = [n](double x) {
    const double bs = std::pow(std::abs(beta_sym(x)), n);
    const double dw = std::pow(w_ratio(x), n) - std::pow(w_ratio(-x), n);
    return bs * std::abs(dw) / (2.0 * x);
  };
  NQuadratureConfig c = cfg;
  c.dstar_limit = 0.0;               // d/dr beta^n vanishes at the band center
  c.tail_power = n >= 2 ? n : 0;     // the n = 1 envelope is not integrable
  return n_functional_impl(h_abs, dstar_abs, 1.0, delta, c);
}

}  // namespace wh
