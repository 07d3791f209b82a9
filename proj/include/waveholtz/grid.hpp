#pragma once

#include <Eigen/Core>

#include "waveholtz/transfer.hpp"

namespace wh {

/// Uniform periodic lattice on the box [-L, L)^d with N points per axis.
/// Physical nodes are x_i = -L + i h with h = 2L/N; the frequency lattice is
/// xi_k = pi k / L for k in [-N/2, N/2) per axis (angular convention).
struct Grid {
  int dim = 1;
  int points = 0;        // per axis, even
  double half_width = 0; // L

  Grid(int dim_, int points_, double half_width_);

  double spacing() const { return 2.0 * half_width / points; }
  double freq_spacing() const { return kPi / half_width; }
  Eigen::Index size() const;

  double coord(int i) const { return -half_width + i * spacing(); }
  int freq_index(int i) const { return i < points / 2 ? i : i - points; }
  double freq(int i) const { return kPi * freq_index(i) / half_width; }

  Eigen::ArrayXd axis_coords() const;
  Eigen::ArrayXd axis_freqs() const;  // in FFT storage order
};

bool operator==(const Grid& a, const Grid& b);
inline bool operator!=(const Grid& a, const Grid& b) { return !(a == b); }

/// |xi| for every flattened spectral index.
Eigen::ArrayXd radial_freqs(const Grid& g);

/// |x| for every flattened physical index.
Eigen::ArrayXd radial_coords(const Grid& g);

/// (1 + |x|^2)^exponent for every flattened physical index.
Eigen::ArrayXd coord_weight(const Grid& g, double exponent);

/// Distance from the resonant shell |xi| = omega to the nearest lattice mode.
double shell_distance(const Grid& g, double omega);

/// Nearest half-width to target with omega * L an odd multiple of pi/2, so
/// the axis lattice straddles the shell symmetrically at distance h_xi / 2.
double shell_aligned_half_width(double omega, double target_half_width);

}  // namespace wh
