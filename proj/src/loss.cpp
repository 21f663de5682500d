#include "ftir/loss.hpp"

#include <algorithm>
#include <cmath>

#include "ftir/errors.hpp"

namespace ftir {

namespace {

// cosine similarity of (w.x, w.xhat); norm product guarded from below
double weighted_cosine(const double* x, const double* xhat, const double* w, Eigen::Index n,
                       double& dot, double& nx, double& ny) {
    dot = 0.0;
    double sx = 0.0, sy = 0.0;
    if (w) {
        for (Eigen::Index i = 0; i < n; ++i) {
            const double a = w[i] * x[i];
            const double b = w[i] * xhat[i];
            dot += a * b;
            sx += a * a;
            sy += b * b;
        }
    } else {
        for (Eigen::Index i = 0; i < n; ++i) {
            dot += x[i] * xhat[i];
            sx += x[i] * x[i];
            sy += xhat[i] * xhat[i];
        }
    }
    nx = std::sqrt(sx);
    ny = std::sqrt(sy);
    return dot / std::max(nx * ny, kAngleEpsilon);
}

}  // namespace

double sad(std::span<const double> x, std::span<const double> xhat, bool* degenerate) {
    return wsad(x, xhat, {}, degenerate);
}

double wsad(std::span<const double> x, std::span<const double> xhat, std::span<const double> w,
            bool* degenerate) {
    if (x.size() != xhat.size() || (!w.empty() && w.size() != x.size()))
        throw Error(ErrorKind::Dimension, "spectral angle length mismatch");
    if (x.empty()) throw Error(ErrorKind::Dimension, "spectral angle of empty vectors");

    double dot, nx, ny;
    const double c = weighted_cosine(x.data(), xhat.data(), w.empty() ? nullptr : w.data(),
                                     Eigen::Index(x.size()), dot, nx, ny);
    if (nx * ny <= kAngleEpsilon) {
        if (degenerate) *degenerate = true;
        return M_PI / 2.0;
    }
    if (degenerate) *degenerate = false;
    return std::acos(std::clamp(c, -1.0, 1.0));
}

double wsad_with_grad(const double* x, const double* xhat, const double* w, Eigen::Index n,
                      double* grad_xhat, double grad_scale) {
    double dot, nx, ny;
    const double c = weighted_cosine(x, xhat, w, n, dot, nx, ny);
    const double q = nx * ny;
    if (q <= kAngleEpsilon) return M_PI / 2.0;  // flat region, no gradient

    const double lo = -1.0 + kArccosClampDelta;
    const double hi = 1.0 - kArccosClampDelta;
    const double t = std::clamp(c, lo, hi);
    const double angle = std::acos(t);

    if (c > lo && c < hi) {
        const double dacos = -1.0 / std::sqrt(1.0 - t * t);
        // d cos / d v for v = w.xhat:  u/q - dot/(q*ny^2) * v
        const double k1 = grad_scale * dacos / q;
        const double k2 = grad_scale * dacos * dot / (q * ny * ny);
        if (w) {
            for (Eigen::Index i = 0; i < n; ++i)
                grad_xhat[i] += (k1 * (w[i] * x[i]) - k2 * (w[i] * xhat[i])) * w[i];
        } else {
            for (Eigen::Index i = 0; i < n; ++i)
                grad_xhat[i] += k1 * x[i] - k2 * xhat[i];
        }
    }
    return angle;
}

}  // namespace ftir
