#include "waveholtz/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace wh {

Grid::Grid(int dim_, int points_, double half_width_)
    : dim(dim_), points(points_), half_width(half_width_) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("Grid: dim must be 1, 2 or 3");
  if (points < 4 || points % 2 != 0)
    throw std::invalid_argument("Grid: points per axis must be even and >= 4");
  if (!(half_width > 0.0)) throw std::invalid_argument("Grid: half_width must be positive");
}

Eigen::Index Grid::size() const {
  Eigen::Index s = 1;
  for (int a = 0; a < dim; ++a) s *= points;
  return s;
}

Eigen::ArrayXd Grid::axis_coords() const {
  Eigen::ArrayXd x(points);
  for (int i = 0; i < points; ++i) x[i] = coord(i);
  return x;
}

Eigen::ArrayXd Grid::axis_freqs() const {
  Eigen::ArrayXd xi(points);
  for (int i = 0; i < points; ++i) xi[i] = freq(i);
  return xi;
}

bool operator==(const Grid& a, const Grid& b) {
  return a.dim == b.dim && a.points == b.points && a.half_width == b.half_width;
}

namespace {

// Applies f to the per-axis values of every flattened index (last axis fastest).
template <class Axis, class Fold>
Eigen::ArrayXd tabulate(const Grid& g, Axis&& axis_value, Fold&& fold) {
  const int N = g.points;
  Eigen::ArrayXd out(g.size());
  Eigen::ArrayXd v(N);
  for (int i = 0; i < N; ++i) v[i] = axis_value(i);
  if (g.dim == 1) {
    for (int i = 0; i < N; ++i) out[i] = fold(v[i], 0.0, 0.0);
  } else if (g.dim == 2) {
    Eigen::Index idx = 0;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) out[idx++] = fold(v[i], v[j], 0.0);
  } else {
    Eigen::Index idx = 0;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k) out[idx++] = fold(v[i], v[j], v[k]);
  }
  return out;
}

double norm3(double a, double b, double c) { return std::sqrt(a * a + b * b + c * c); }

}  // namespace

Eigen::ArrayXd radial_freqs(const Grid& g) {
  return tabulate(g, [&](int i) { return g.freq(i); }, norm3);
}

Eigen::ArrayXd radial_coords(const Grid& g) {
  return tabulate(g, [&](int i) { return g.coord(i); }, norm3);
}

Eigen::ArrayXd coord_weight(const Grid& g, double exponent) {
  Eigen::ArrayXd r = radial_coords(g);
  return (1.0 + r.square()).pow(exponent);
}

double shell_distance(const Grid& g, double omega) {
  return (radial_freqs(g) - omega).abs().minCoeff();
}

double shell_aligned_half_width(double omega, double target_half_width) {
  if (!(omega > 0.0) || !(target_half_width > 0.0))
    throw std::invalid_argument("shell_aligned_half_width: arguments must be positive");
  const double k = std::max(0.0, std::round(omega * target_half_width / kPi - 0.5));
  return (k + 0.5) * kPi / omega;
}

}  // namespace wh
