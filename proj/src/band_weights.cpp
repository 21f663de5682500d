#include "ftir/band_weights.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "ftir/errors.hpp"

namespace ftir {

namespace {

double median_inplace(std::vector<double>& v) {
    const std::size_t n = v.size();
    const std::size_t mid = n / 2;
    std::nth_element(v.begin(), v.begin() + mid, v.end());
    double m = v[mid];
    if (n % 2 == 0) {
        const double lo = *std::max_element(v.begin(), v.begin() + mid);
        m = 0.5 * (lo + m);
    }
    return m;
}

double median_of(const double* data, std::size_t n, std::size_t stride, std::vector<double>& scratch) {
    scratch.resize(n);
    for (std::size_t i = 0; i < n; ++i) scratch[i] = data[i * stride];
    return median_inplace(scratch);
}

}  // namespace

void WeightConfig::validate() const {
    if (gamma_rough < 0 || gamma_flat < 0)
        throw Error(ErrorKind::Config, "fusion gains must be nonnegative");
    if (alpha_sig <= 0) throw Error(ErrorKind::Config, "alpha_sig must be positive");
    if (w_min < 0 || w_min >= 1) throw Error(ErrorKind::Config, "w_min must be in [0,1)");
    if (epsilon <= 0) throw Error(ErrorKind::Config, "epsilon must be positive");
}

Matrix robust_standardize(const HyperCube& cube, double epsilon) {
    const std::size_t n = cube.pixel_count();
    const std::size_t bands = cube.bands;
    if (n < 2) throw Error(ErrorKind::Data, "robust standardization needs at least 2 pixels");

    Matrix z(n, bands);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t b = 0; b < bands; ++b)
            z(Eigen::Index(p), Eigen::Index(b)) = cube.data[p * bands + b];

    std::vector<double> scratch;
    for (std::size_t b = 0; b < bands; ++b) {
        auto col = z.col(Eigen::Index(b));
        scratch.assign(col.data(), col.data() + n);
        const double med = median_inplace(scratch);
        scratch.resize(n);
        for (std::size_t p = 0; p < n; ++p) scratch[p] = std::abs(col(Eigen::Index(p)) - med);
        const double mad = median_inplace(scratch) + epsilon;
        col = (col.array() - med) / mad;

        // exact mean-centering and unit population variance
        const double mean = col.mean();
        col.array() -= mean;
        const double var = col.squaredNorm() / double(n);
        col /= (std::sqrt(var) + epsilon);
    }
    return z;
}

Vector neighbour_corr_deficit(const Matrix& standardized) {
    const Eigen::Index n = standardized.rows();
    const Eigen::Index bands = standardized.cols();
    if (bands < 2) throw Error(ErrorKind::Dimension, "neighbour correlation needs at least 2 bands");

    Vector rho(bands - 1);
    for (Eigen::Index b = 0; b + 1 < bands; ++b)
        rho(b) = standardized.col(b).dot(standardized.col(b + 1)) / double(n);

    Vector deficit(bands);
    deficit(0) = 1.0 - rho(0);
    deficit(bands - 1) = 1.0 - rho(bands - 2);
    for (Eigen::Index b = 1; b + 1 < bands; ++b)
        deficit(b) = 1.0 - std::min(rho(b - 1), rho(b));
    return deficit;
}

Vector spectral_roughness(const HyperCube& cube) {
    const std::size_t bands = cube.bands;
    if (bands < 3) throw Error(ErrorKind::Dimension, "roughness needs at least 3 bands");
    const std::size_t n = cube.pixel_count();

    Vector median_spectrum(bands);
    std::vector<double> scratch;
    for (std::size_t b = 0; b < bands; ++b)
        median_spectrum(Eigen::Index(b)) = median_of(cube.data.data() + b, n, bands, scratch);

    Vector rough(bands);
    for (std::size_t b = 1; b + 1 < bands; ++b)
        rough(Eigen::Index(b)) = std::abs(median_spectrum(Eigen::Index(b + 1)) -
                                          2.0 * median_spectrum(Eigen::Index(b)) +
                                          median_spectrum(Eigen::Index(b - 1)));
    rough(0) = rough(1);
    rough(Eigen::Index(bands - 1)) = rough(Eigen::Index(bands - 2));
    return rough;
}

Vector spatial_flatness(const HyperCube& cube, double epsilon) {
    const std::size_t n = cube.pixel_count();
    if (n < 2) throw Error(ErrorKind::Data, "spatial flatness needs at least 2 pixels");
    const std::size_t bands = cube.bands;

    Vector flat(bands);
    for (std::size_t b = 0; b < bands; ++b) {
        double mean = 0.0;
        for (std::size_t p = 0; p < n; ++p) mean += cube.data[p * bands + b];
        mean /= double(n);
        double var = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            const double d = cube.data[p * bands + b] - mean;
            var += d * d;
        }
        var = var / double(n) + epsilon;
        flat(Eigen::Index(b)) = -std::log(var);
    }
    return flat;
}

Vector robust_z(const Vector& u, double epsilon) {
    if (u.size() == 0) throw Error(ErrorKind::Dimension, "robust_z of empty vector");
    std::vector<double> scratch(u.data(), u.data() + u.size());
    const double med = median_inplace(scratch);
    scratch.resize(std::size_t(u.size()));
    for (Eigen::Index i = 0; i < u.size(); ++i) scratch[std::size_t(i)] = std::abs(u(i) - med);
    const double mad = median_inplace(scratch);
    return (u.array() - med) / (mad + epsilon);
}

Vector outlier_score(const Vector& d_corr, const Vector& d_rough, const Vector& d_flat,
                     const WeightConfig& cfg) {
    cfg.validate();
    if (d_corr.size() != d_rough.size() || d_corr.size() != d_flat.size())
        throw Error(ErrorKind::Dimension, "diagnostic vectors have mismatched lengths");
    const Vector zc = robust_z(d_corr, cfg.epsilon);
    const Vector zr = robust_z(d_rough, cfg.epsilon);
    const Vector zf = robust_z(d_flat, cfg.epsilon);
    return zc.array().max(0.0) + cfg.gamma_rough * zr.array().max(0.0) +
           cfg.gamma_flat * zf.array().max(0.0);
}

Vector map_weights(const Vector& score, const WeightConfig& cfg) {
    cfg.validate();
    Vector w(score.size());
    for (Eigen::Index b = 0; b < score.size(); ++b) {
        const double t = -cfg.alpha_sig * (score(b) - cfg.tau);
        const double sig = 1.0 / (1.0 + std::exp(-t));
        w(b) = cfg.w_min + (1.0 - cfg.w_min) * sig;
    }
    return w;
}

BandWeights estimate_band_weights(const HyperCube& cube, const WeightConfig& cfg) {
    cfg.validate();
    if (cube.bands < 3) throw Error(ErrorKind::Dimension, "band weighting needs at least 3 bands");

    BandWeights bw;
    bw.config = cfg;
    const Matrix z = robust_standardize(cube, cfg.epsilon);
    bw.diagnostics.d_corr = neighbour_corr_deficit(z);
    bw.diagnostics.d_rough = spectral_roughness(cube);
    bw.diagnostics.d_flat = spatial_flatness(cube, cfg.epsilon);
    bw.diagnostics.score =
        outlier_score(bw.diagnostics.d_corr, bw.diagnostics.d_rough, bw.diagnostics.d_flat, cfg);
    bw.w = map_weights(bw.diagnostics.score, cfg);
    return bw;
}

void write_weights_csv(const BandWeights& bw, const std::optional<WavenumberAxis>& axis,
                       const std::filesystem::path& path) {
    const Eigen::Index bands = bw.w.size();
    if (axis && static_cast<Eigen::Index>(axis->values.size()) != bands)
        throw Error(ErrorKind::Dimension, "axis length does not match weight count");

    std::ofstream out(path, std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot open " + path.string() + " for writing");
    out << "band" << (axis ? ",wavenumber" : "") << ",d_corr,d_rough,d_flat,s,w\n";
    char buf[64];
    auto cell = [&](double v) {
        std::snprintf(buf, sizeof(buf), "%.12g", v);
        out << ',' << buf;
    };
    for (Eigen::Index b = 0; b < bands; ++b) {
        out << b;
        if (axis) cell(axis->values[std::size_t(b)]);
        cell(bw.diagnostics.d_corr(b));
        cell(bw.diagnostics.d_rough(b));
        cell(bw.diagnostics.d_flat(b));
        cell(bw.diagnostics.score(b));
        cell(bw.w(b));
        out << "\n";
    }
    out.flush();
    if (!out) throw Error(ErrorKind::Io, "write failed for " + path.string());
}

Vector read_weights_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw Error(ErrorKind::Format, "empty weights CSV");

    // the weight is the last column
    std::vector<double> w;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto pos = line.find_last_of(',');
        if (pos == std::string::npos)
            throw Error(ErrorKind::Format, "malformed weights CSV row: " + line);
        w.push_back(std::stod(line.substr(pos + 1)));
    }
    if (w.empty()) throw Error(ErrorKind::Format, "weights CSV has no data rows");
    return Eigen::Map<Vector>(w.data(), Eigen::Index(w.size()));
}

}  // namespace ftir
