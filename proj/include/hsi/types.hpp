#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hsi {

inline bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

inline void require_pow2_dims(int rows, int cols, const char* what) {
    if (!is_pow2(rows) || !is_pow2(cols))
        throw std::invalid_argument(std::string(what) + ": dimensions must be powers of two, got " +
                                    std::to_string(cols) + "x" + std::to_string(rows));
}

// Position of one 2D basis pattern in the sequency-ordered spectrum.
// u indexes rows (vertical sequency), v indexes columns (horizontal sequency).
struct SpectralCoord {
    std::uint16_t u = 0;
    std::uint16_t v = 0;

    friend bool operator==(SpectralCoord a, SpectralCoord b) { return a.u == b.u && a.v == b.v; }
    friend bool operator<(SpectralCoord a, SpectralCoord b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    }
};

// Row-major raster of real intensities. `peak` is the nominal dynamic range
// of the data (255 for 8-bit sources), not the maximum sample value.
class Image {
public:
    Image() = default;
    Image(int rows, int cols, double fill = 0.0, double peak = 255.0)
        : rows_(rows), cols_(cols), peak_(peak), data_(check_size(rows, cols), fill) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    double peak() const { return peak_; }
    void set_peak(double p) { peak_ = p; }

    double& at(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
    double at(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    std::vector<double>& values() { return data_; }
    const std::vector<double>& values() const { return data_; }
    std::size_t size() const { return data_.size(); }

private:
    static std::size_t check_size(int rows, int cols) {
        if (rows <= 0 || cols <= 0)
            throw std::invalid_argument("Image: dimensions must be positive");
        return std::size_t(rows) * cols;
    }

    int rows_ = 0;
    int cols_ = 0;
    double peak_ = 255.0;
    std::vector<double> data_;
};

// 2D Hadamard spectrum with both axes in sequency order: low-sequency content
// sits at the upper-left corner. coeff(u, v) is the unnormalized coefficient
// of the basis pattern (u, v). `peak` carries the source image's range so a
// round trip through iwht_2d restores it.
class Spectrum {
public:
    Spectrum() = default;
    Spectrum(int rows, int cols, double peak = 255.0)
        : rows_(rows), cols_(cols), peak_(peak), data_(std::size_t(rows) * cols, 0.0) {
        if (rows <= 0 || cols <= 0)
            throw std::invalid_argument("Spectrum: dimensions must be positive");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    double peak() const { return peak_; }
    void set_peak(double p) { peak_ = p; }

    double& at(int u, int v) { return data_[std::size_t(u) * cols_ + v]; }
    double at(int u, int v) const { return data_[std::size_t(u) * cols_ + v]; }
    double& at(SpectralCoord c) { return at(c.u, c.v); }
    double at(SpectralCoord c) const { return at(c.u, c.v); }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    std::vector<double>& values() { return data_; }
    const std::vector<double>& values() const { return data_; }
    std::size_t size() const { return data_.size(); }

private:
    int rows_ = 0;
    int cols_ = 0;
    double peak_ = 255.0;
    std::vector<double> data_;
};

// A +-1 valued basis pattern.
class Pattern {
public:
    Pattern() = default;
    Pattern(int rows, int cols)
        : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, 1) {
        if (rows <= 0 || cols <= 0)
            throw std::invalid_argument("Pattern: dimensions must be positive");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::int8_t& at(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
    std::int8_t at(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }
    const std::vector<std::int8_t>& values() const { return data_; }
    std::vector<std::int8_t>& values() { return data_; }
    std::size_t size() const { return data_.size(); }

    void validate_entries(const char* what) const {
        for (std::int8_t s : data_)
            if (s != 1 && s != -1)
                throw std::invalid_argument(std::string(what) + ": pattern entries must be +-1");
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::int8_t> data_;
};

// A {0,1} half of a differential pattern pair.
class BinaryPattern {
public:
    BinaryPattern() = default;
    BinaryPattern(int rows, int cols)
        : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::uint8_t& at(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
    std::uint8_t at(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }
    const std::vector<std::uint8_t>& values() const { return data_; }
    std::size_t size() const { return data_.size(); }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::uint8_t> data_;
};

// Axis-aligned region, pixel units. x is the column of the left edge, y the
// row of the top edge.
struct Rect {
    int x = 0;
    int y = 0;
    int width = 0;
    int height = 0;
};

} // namespace hsi
