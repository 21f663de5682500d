#pragma once

#include <filesystem>

#include "ftir/cube.hpp"
#include "ftir/linalg.hpp"

namespace ftir {

struct WeightConfig {
    double gamma_rough = 1.0;   // fusion gain for the roughness diagnostic
    double gamma_flat = 1.0;    // fusion gain for the flatness diagnostic
    double tau = 3.0;           // score threshold (sigmoid midpoint)
    double alpha_sig = 2.0;     // sigmoid sharpness
    double w_min = 0.05;        // weight floor
    double epsilon = 1e-12;     // numerical guard for MAD/variance denominators

    void validate() const;
};

struct BandDiagnostics {
    Vector d_corr;   // neighbour-correlation deficit
    Vector d_rough;  // median-spectrum curvature
    Vector d_flat;   // negative log spatial variance
    Vector score;    // fused nonnegative outlier score
};

// Global band-reliability vector shared by all pixels, kept fixed during
// training.
struct BandWeights {
    Vector w;                 // in [w_min, 1]
    BandDiagnostics diagnostics;
    WeightConfig config;
};

// Per-band median/MAD standardization of the flattened cube (N x B, row p =
// spectrum of pixel p), then exact mean-centering and scaling to unit
// population variance per column. Constant columns map to all zeros.
Matrix robust_standardize(const HyperCube& cube, double epsilon);

// rho_b = (1/N) sum_p Z[p,b] * Z[p,b+1]; a band's agreement is the worse of
// its two adjacent correlations (the single one at the edges); deficit is
// 1 - agreement.
Vector neighbour_corr_deficit(const Matrix& standardized);

// Absolute second difference of the per-band median spectrum; endpoints copy
// their interior neighbour.
Vector spectral_roughness(const HyperCube& cube);

// -log of per-band spatial variance (population, guarded by epsilon).
Vector spatial_flatness(const HyperCube& cube, double epsilon);

// (u - median(u)) / (MAD(u) + epsilon), elementwise.
Vector robust_z(const Vector& u, double epsilon);

// s_b = max(z(d_corr),0) + gamma_rough*max(z(d_rough),0) + gamma_flat*max(z(d_flat),0)
Vector outlier_score(const Vector& d_corr, const Vector& d_rough, const Vector& d_flat,
                     const WeightConfig& cfg);

// w_b = w_min + (1 - w_min) * logistic(-alpha_sig * (s_b - tau))
Vector map_weights(const Vector& score, const WeightConfig& cfg);

// Full pipeline: standardize, three diagnostics, fuse, map to weights.
BandWeights estimate_band_weights(const HyperCube& cube, const WeightConfig& cfg = {});

// CSV round trip for the weights table. Columns: band, wavenumber (when the
// cube had an axis), d_corr, d_rough, d_flat, s, w.
void write_weights_csv(const BandWeights& bw, const std::optional<WavenumberAxis>& axis,
                       const std::filesystem::path& path);
Vector read_weights_csv(const std::filesystem::path& path);

}  // namespace ftir
