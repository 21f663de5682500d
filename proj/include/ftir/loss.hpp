#pragma once

#include <span>

#include "ftir/linalg.hpp"

namespace ftir {

// guard for the norm product in the spectral angle denominator
inline constexpr double kAngleEpsilon = 1e-9;
// the arccos argument is clamped to [-1+delta, 1-delta] on the gradient path
inline constexpr double kArccosClampDelta = 1e-7;

// Spectral angle distance in radians, range [0, pi].
// Degenerate inputs (either vector with zero norm) return pi/2 by convention;
// `degenerate`, when given, is set accordingly.
double sad(std::span<const double> x, std::span<const double> xhat, bool* degenerate = nullptr);

// SAD after elementwise multiplication of both spectra by the band weights.
// Collapses exactly to sad() when w is all ones.
double wsad(std::span<const double> x, std::span<const double> xhat, std::span<const double> w,
            bool* degenerate = nullptr);

// Differentiable WSAD: returns the angle and accumulates d(angle)/d(xhat)
// into grad_xhat (not zeroed first). The arccos argument is clamped away from
// +-1 so the derivative stays finite near collinearity; outside the clamp the
// gradient is zero.
double wsad_with_grad(const double* x, const double* xhat, const double* w, Eigen::Index n,
                      double* grad_xhat, double grad_scale);

}  // namespace ftir
