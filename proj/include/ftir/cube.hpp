#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ftir/errors.hpp"

namespace ftir {

// Wavenumber axis in cm^-1; strictly monotonic.
struct WavenumberAxis {
    enum class Direction { Ascending, Descending };

    std::vector<double> values;
    Direction direction = Direction::Ascending;

    static WavenumberAxis from_values(std::vector<double> vals) {
        if (vals.size() < 2)
            throw Error(ErrorKind::Data, "wavenumber axis needs at least 2 values");
        const bool asc = vals[1] > vals[0];
        for (std::size_t i = 1; i < vals.size(); ++i) {
            const bool step_asc = vals[i] > vals[i - 1];
            if (vals[i] == vals[i - 1] || step_asc != asc)
                throw Error(ErrorKind::Data,
                            "wavenumber axis not strictly monotonic at index " + std::to_string(i));
        }
        WavenumberAxis axis;
        axis.values = std::move(vals);
        axis.direction = asc ? Direction::Ascending : Direction::Descending;
        return axis;
    }
};

// H x W x B absorbance raster, pixel-interleaved: index = ((h*W)+w)*B + b.
// Values are held in double; the on-disk payload is single precision.
struct HyperCube {
    std::uint32_t height = 0;
    std::uint32_t width = 0;
    std::uint32_t bands = 0;
    std::optional<WavenumberAxis> wavenumbers;
    std::vector<double> data;

    HyperCube() = default;
    HyperCube(std::uint32_t h, std::uint32_t w, std::uint32_t b)
        : height(h), width(w), bands(b),
          data(static_cast<std::size_t>(h) * w * b, 0.0) {}

    std::size_t pixel_count() const { return static_cast<std::size_t>(height) * width; }
    std::size_t value_count() const { return pixel_count() * bands; }

    double& at(std::uint32_t h, std::uint32_t w, std::uint32_t b) {
        return data[(static_cast<std::size_t>(h) * width + w) * bands + b];
    }
    double at(std::uint32_t h, std::uint32_t w, std::uint32_t b) const {
        return data[(static_cast<std::size_t>(h) * width + w) * bands + b];
    }

    // length-B spectrum at pixel (h, w)
    std::span<const double> spectrum(std::uint32_t h, std::uint32_t w) const {
        return {data.data() + (static_cast<std::size_t>(h) * width + w) * bands, bands};
    }
    std::span<double> spectrum(std::uint32_t h, std::uint32_t w) {
        return {data.data() + (static_cast<std::size_t>(h) * width + w) * bands, bands};
    }

    void validate() const;
};

// K x H x W per-pixel simplex coefficients. index = (k*H + h)*W + w
struct AbundanceMap {
    std::uint32_t count = 0;   // K
    std::uint32_t height = 0;
    std::uint32_t width = 0;
    std::vector<double> data;

    AbundanceMap() = default;
    AbundanceMap(std::uint32_t k, std::uint32_t h, std::uint32_t w)
        : count(k), height(h), width(w),
          data(static_cast<std::size_t>(k) * h * w, 0.0) {}

    double& at(std::uint32_t k, std::uint32_t h, std::uint32_t w) {
        return data[(static_cast<std::size_t>(k) * height + h) * width + w];
    }
    double at(std::uint32_t k, std::uint32_t h, std::uint32_t w) const {
        return data[(static_cast<std::size_t>(k) * height + h) * width + w];
    }

    std::size_t pixel_count() const { return static_cast<std::size_t>(height) * width; }
};

}  // namespace ftir
