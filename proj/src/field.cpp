#include "waveholtz/field.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <stdexcept>

#include "waveholtz/errors.hpp"

namespace wh {

Field Field::zeros(const Grid& g, bool real) {
  Field f{g, Eigen::ArrayXcd::Zero(g.size()), real};
  return f;
}

namespace {

Eigen::FFT<double>& fft_engine() {
  thread_local Eigen::FFT<double> fft;
  return fft;
}

// In-place transform along one axis of the flattened row-major array.
// Axis a has stride N^{dim-1-a}; a line is {base + j*stride : j < N}.
void fft_axis(Eigen::ArrayXcd& data, const Grid& g, int axis, bool inverse) {
  const int N = g.points;
  Eigen::Index stride = 1;
  for (int a = g.dim - 1; a > axis; --a) stride *= N;
  const Eigen::Index block = stride * N;
  const double scale = inverse ? std::sqrt(double(N)) : 1.0 / std::sqrt(double(N));

  std::vector<complexd> line(N), out(N);
  auto& fft = fft_engine();
  for (Eigen::Index outer = 0; outer < data.size(); outer += block) {
    for (Eigen::Index inner = 0; inner < stride; ++inner) {
      const Eigen::Index base = outer + inner;
      for (int j = 0; j < N; ++j) line[j] = data[base + j * stride];
      if (inverse)
        fft.inv(out, line);
      else
        fft.fwd(out, line);
      for (int j = 0; j < N; ++j) data[base + j * stride] = out[j] * scale;
    }
  }
}

Eigen::ArrayXcd transform(const Eigen::ArrayXcd& values, const Grid& g, bool inverse) {
  Eigen::ArrayXcd data = values;
  for (int a = 0; a < g.dim; ++a) fft_axis(data, g, a, inverse);
  return data;
}

}  // namespace

SpectralField dft_forward(const Field& v) {
  if (v.values.size() != v.grid.size())
    throw std::invalid_argument("dft_forward: field size does not match grid");
  return {v.grid, transform(v.values, v.grid, false)};
}

Field dft_inverse(const SpectralField& v) {
  if (v.values.size() != v.grid.size())
    throw std::invalid_argument("dft_inverse: field size does not match grid");
  return {v.grid, transform(v.values, v.grid, true), false};
}

double max_abs(const Field& v) { return v.values.abs().maxCoeff(); }

void enforce_real(Field& v, double tol) {
  const double scale = max_abs(v);
  const double worst = v.values.imag().abs().maxCoeff();
  if (worst > tol * scale && scale > 0.0)
    throw std::runtime_error("enforce_real: imaginary part above tolerance (" +
                             std::to_string(worst / scale) + " relative)");
  v.values = v.values.real().cast<complexd>();
  v.is_real = true;
}

Field real_part(const Field& v) {
  return {v.grid, v.values.real().cast<complexd>(), true};
}

namespace {

// Spectral partial derivative along one axis. The unpaired Nyquist mode is
// zeroed, as usual for odd-order spectral derivatives of real data.
Eigen::ArrayXcd spectral_derivative_axis(const Eigen::ArrayXcd& coeff, const Grid& g, int axis) {
  const int N = g.points;
  Eigen::Index stride = 1;
  for (int a = g.dim - 1; a > axis; --a) stride *= N;
  Eigen::ArrayXcd out(coeff.size());
  const complexd iunit(0.0, 1.0);
  for (Eigen::Index idx = 0; idx < coeff.size(); ++idx) {
    const int j = static_cast<int>((idx / stride) % N);
    const double xi = (j == N / 2) ? 0.0 : g.freq(j);
    out[idx] = coeff[idx] * (iunit * xi);
  }
  return out;
}

double l2_of_array(const Eigen::ArrayXcd& a, const Eigen::ArrayXd& w2) {
  return (a.abs2() * w2).sum();
}

}  // namespace

WeightedNorm::WeightedNorm(const Grid& g, const NormSpec& spec)
    : grid_(g), spec_(spec), weight2_(coord_weight(g, spec.weight_exponent)) {
  if (spec.derivative_order != 0 && spec.derivative_order != 1)
    throw std::invalid_argument("WeightedNorm: derivative order must be 0 or 1");
}

double WeightedNorm::operator()(const Field& v) const {
  if (v.grid != grid_) throw std::invalid_argument("WeightedNorm: grid mismatch");
  if (spec_.derivative_order == 0) {
    const double cell = std::pow(grid_.spacing(), grid_.dim);
    return std::sqrt(cell * l2_of_array(v.values, weight2_));
  }
  return from_spectral(dft_forward(v));
}

double WeightedNorm::from_spectral(const SpectralField& v) const {
  if (v.grid != grid_) throw std::invalid_argument("WeightedNorm: grid mismatch");
  const double cell = std::pow(grid_.spacing(), grid_.dim);
  double sum = l2_of_array(dft_inverse(v).values, weight2_);
  if (spec_.derivative_order == 1) {
    for (int a = 0; a < grid_.dim; ++a) {
      SpectralField dv{grid_, spectral_derivative_axis(v.values, grid_, a)};
      sum += l2_of_array(dft_inverse(dv).values, weight2_);
    }
  }
  return std::sqrt(cell * sum);
}

double weighted_norm(const Field& v, const NormSpec& spec) {
  return WeightedNorm(v.grid, spec)(v);
}

Field gaussian_source(const Grid& g, const std::vector<double>& center, double width,
                      double amplitude) {
  if (!(width > 0.0)) throw std::invalid_argument("gaussian_source: width must be positive");
  if (static_cast<int>(center.size()) != g.dim)
    throw std::invalid_argument("gaussian_source: center dimension mismatch");

  double boundary_gap = g.half_width;
  for (double c : center) {
    if (std::abs(c) >= g.half_width)
      throw std::invalid_argument("gaussian_source: center outside the box");
    boundary_gap = std::min(boundary_gap, g.half_width - std::abs(c));
  }
  if (amplitude != 0.0) {
    const double tail = std::exp(-boundary_gap * boundary_gap / (width * width));
    if (tail > 1e-14)
      throw TruncationError("gaussian_source: boundary tail " + std::to_string(tail) +
                            " exceeds 1e-14 of the peak; enlarge the box");
  }

  const int N = g.points;
  Eigen::ArrayXd axis[3];
  for (int a = 0; a < g.dim; ++a) {
    axis[a].resize(N);
    for (int i = 0; i < N; ++i) {
      const double dx = g.coord(i) - center[a];
      axis[a][i] = dx * dx;
    }
  }
  Field f = Field::zeros(g, true);
  const double inv_w2 = 1.0 / (width * width);
  Eigen::Index idx = 0;
  if (g.dim == 1) {
    for (int i = 0; i < N; ++i) f.values[idx++] = amplitude * std::exp(-axis[0][i] * inv_w2);
  } else if (g.dim == 2) {
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        f.values[idx++] = amplitude * std::exp(-(axis[0][i] + axis[1][j]) * inv_w2);
  } else {
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k)
          f.values[idx++] = amplitude * std::exp(-(axis[0][i] + axis[1][j] + axis[2][k]) * inv_w2);
  }
  return f;
}

Field scaled_source(const SourceProfile& profile, double omega, const Grid& g) {
  if (!(profile.width > 0.0)) throw std::invalid_argument("scaled_source: width must be positive");
  if (!(omega > 0.0)) throw std::invalid_argument("scaled_source: omega must be positive");
  const double resolution = g.spacing() * omega / profile.width;
  if (resolution > 0.28) {
    const int needed = static_cast<int>(std::ceil(2.0 * g.half_width * omega / (0.28 * profile.width)));
    throw std::invalid_argument(
        "scaled_source: grid under-resolves the concentrated bump; need at least " +
        std::to_string(needed) + " points per axis (have " + std::to_string(g.points) + ")");
  }
  // omega^{(3+d)/2} S(omega x) with S(y) = A exp(-|y|^2 / width^2): the same
  // Gaussian with width shrunk by omega and the amplitude factor applied.
  const double factor = std::pow(omega, 0.5 * (3.0 + g.dim));
  Field f = gaussian_source(g, std::vector<double>(g.dim, 0.0), profile.width / omega,
                            factor * profile.amplitude);
  return f;
}

double support_radius(const Field& v, double threshold) {
  if (!(threshold > 0.0)) throw std::invalid_argument("support_radius: threshold must be positive");
  const double peak = max_abs(v);
  if (peak == 0.0) return 0.0;
  const double cut = threshold * peak;
  const Eigen::ArrayXd r = radial_coords(v.grid);
  double radius = 0.0;
  for (Eigen::Index i = 0; i < v.values.size(); ++i)
    if (std::abs(v.values[i]) >= cut) radius = std::max(radius, r[i]);
  return radius;
}

}  // namespace wh
