#pragma once

#include <Eigen/Core>
#include <complex>
#include <vector>

#include "waveholtz/grid.hpp"

namespace wh {

using complexd = std::complex<double>;

/// Complex samples on a Grid, flattened row-major (last axis fastest).
/// is_real marks fields whose imaginary part is zero up to roundoff.
struct Field {
  Grid grid;
  Eigen::ArrayXcd values;
  bool is_real = false;

  static Field zeros(const Grid& g, bool real = true);
};

/// Spectral coefficients in FFT index order, unitary normalization.
struct SpectralField {
  Grid grid;
  Eigen::ArrayXcd values;
};

/// Unitary d-dimensional DFT; dft_inverse(dft_forward(v)) == v to roundoff
/// and the l2 norm of the coefficient array equals that of the samples.
SpectralField dft_forward(const Field& v);
Field dft_inverse(const SpectralField& v);

double max_abs(const Field& v);

/// Checks that |Im| <= tol * max|value| everywhere, then zeroes the
/// imaginary part and sets is_real. Throws if the check fails.
void enforce_real(Field& v, double tol = 1e-13);

Field real_part(const Field& v);

/// Weighted Sobolev norm descriptor: weight (1+|x|^2)^{s/2} with
/// s = weight_exponent, derivative order k in {0, 1}.
struct NormSpec {
  double weight_exponent = 0.0;
  int derivative_order = 0;
};

/// ( sum_{|a| <= k} || d^a v * <x>^s ||_{L2(box)}^2 )^{1/2} by trapezoidal
/// quadrature on the grid; k = 1 derivatives are spectral.
double weighted_norm(const Field& v, const NormSpec& spec);

/// Caches the weight table (and spectral machinery for k = 1) so repeated
/// norms on one grid stay cheap.
class WeightedNorm {
 public:
  WeightedNorm(const Grid& g, const NormSpec& spec);
  double operator()(const Field& v) const;
  /// Same norm evaluated from the spectral coefficients (saves a transform
  /// when the caller already holds them).
  double from_spectral(const SpectralField& v) const;
  const NormSpec& spec() const { return spec_; }

 private:
  Grid grid_;
  NormSpec spec_;
  Eigen::ArrayXd weight2_;  // <x>^{2s}
};

/// Gaussian bump A exp(-|x - c|^2 / width^2). The tail at the box boundary
/// must stay below 1e-14 of the peak, else TruncationError.
Field gaussian_source(const Grid& g, const std::vector<double>& center, double width,
                      double amplitude);

struct SourceProfile {
  double width = 1.0;
  double amplitude = 1.0;
};

/// Frequency-concentrated source omega^{(3+d)/2} S(omega x) for a Gaussian
/// profile S. Requires spacing * omega / width <= 0.28 so the concentrated
/// bump stays resolved; violations name the needed point count.
Field scaled_source(const SourceProfile& profile, double omega, const Grid& g);

/// Radius of the smallest origin-centered ball outside which
/// |v| < threshold * max|v|; 0 for the zero field.
double support_radius(const Field& v, double threshold);

}  // namespace wh
