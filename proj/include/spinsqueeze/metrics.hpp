#pragma once

#include <array>

#include "spinsqueeze/states.hpp"

namespace spinsq {

// First moments and symmetrized second moments of (Jx, Jy, Jz) in the lab
// frame: sym[k][l] = Re<J_k J_l> = <J_k J_l + J_l J_k>/2.
struct SpinMoments {
  std::array<double, 3> mean{};
  std::array<std::array<double, 3>, 3> sym{};
};

struct MeanSpin {
  std::array<double, 3> vector{};
  double magnitude = 0.0;
};

// Right-handed orthonormal frame with n along the mean spin; e_x and e_y are
// the spherical unit vectors (e_theta, e_phi) of n's polar angles, with
// phi := 0 when n is along +-z.
struct RotatedFrame {
  std::array<double, 3> e_x{}, e_y{}, n{};
};

struct SqueezeReport {
  MeanSpin mean_spin;
  double var_x = 0.0, var_y = 0.0;  // (Delta J_x')^2, (Delta J_y')^2
  double s_x = 0.0, s_y = 0.0;      // Delta J_q' * sqrt(2/|<J>|)
  double corr_xy = 0.0, corr_xz = 0.0, corr_yz = 0.0;  // <{Jk,Jl}> - 2<Jk><Jl>, lab frame
};

SpinMoments spin_moments(const SpinOperators& ops, const StateVector& psi);

MeanSpin mean_spin(const SpinOperators& ops, const StateVector& psi);
MeanSpin mean_spin(const SpinMoments& m);

// Throws MeanSpinVanishes when |<J>| < 1e-10 (the squeezing parameters
// diverge there).
RotatedFrame rotated_frame(const MeanSpin& ms);

SqueezeReport squeeze_report(const SpinOperators& ops, const StateVector& psi);
SqueezeReport squeeze_report(const SpinMoments& m);

// Degeneracy threshold shared by rotated_frame and the sweep row markers.
inline constexpr double kMeanSpinEps = 1e-10;

}  // namespace spinsq
