#include "hsi/transform.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace hsi {

namespace {

void require_pow2_len(std::size_t n, const char* what) {
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument(std::string(what) + ": length must be a power of two, got " +
                                    std::to_string(n));
}

} // namespace

void fwht_inplace(std::span<double> v) {
    require_pow2_len(v.size(), "fwht_inplace");
    const std::size_t n = v.size();
    for (std::size_t h = 1; h < n; h <<= 1) {
        for (std::size_t i = 0; i < n; i += h << 1) {
            for (std::size_t j = i; j < i + h; ++j) {
                const double a = v[j];
                const double b = v[j + h];
                v[j] = a + b;
                v[j + h] = a - b;
            }
        }
    }
}

std::vector<double> fwht_1d(std::vector<double> v) {
    fwht_inplace(v);
    return v;
}

std::vector<int> sequency_permutation(int n) {
    if (!is_pow2(n))
        throw std::invalid_argument("sequency_permutation: N must be a power of two, got " +
                                    std::to_string(n));
    const int bits = std::countr_zero(unsigned(n));
    std::vector<int> perm(n);
    for (int s = 0; s < n; ++s) {
        const unsigned gray = unsigned(s) ^ (unsigned(s) >> 1);
        unsigned rev = 0;
        for (int b = 0; b < bits; ++b)
            rev |= ((gray >> b) & 1u) << (bits - 1 - b);
        perm[s] = int(rev);
    }
    return perm;
}

std::vector<int> natural_to_sequency(int n) {
    const std::vector<int> perm = sequency_permutation(n);
    std::vector<int> inv(n);
    for (int s = 0; s < n; ++s)
        inv[perm[s]] = s;
    return inv;
}

std::vector<std::int8_t> walsh_vector(int s, int n) {
    if (!is_pow2(n))
        throw std::invalid_argument("walsh_vector: N must be a power of two");
    if (s < 0 || s >= n)
        throw std::out_of_range("walsh_vector: sequency index out of range");
    const unsigned row = unsigned(sequency_permutation(n)[s]);
    std::vector<std::int8_t> w(n);
    for (int x = 0; x < n; ++x)
        w[x] = (std::popcount(row & unsigned(x)) & 1) ? std::int8_t(-1) : std::int8_t(1);
    return w;
}

Spectrum wht_2d(const Image& img) {
    require_pow2_dims(img.rows(), img.cols(), "wht_2d");
    const int rows = img.rows(), cols = img.cols();

    std::vector<double> work(img.values());
    for (int r = 0; r < rows; ++r)
        fwht_inplace(std::span<double>(work.data() + std::size_t(r) * cols, cols));
    std::vector<double> col(rows);
    for (int c = 0; c < cols; ++c) {
        for (int r = 0; r < rows; ++r)
            col[r] = work[std::size_t(r) * cols + c];
        fwht_inplace(col);
        for (int r = 0; r < rows; ++r)
            work[std::size_t(r) * cols + c] = col[r];
    }

    // Gather natural-order results into sequency positions.
    const std::vector<int> row_perm = sequency_permutation(rows);
    const std::vector<int> col_perm = sequency_permutation(cols);
    Spectrum spec(rows, cols, img.peak());
    for (int u = 0; u < rows; ++u) {
        const std::size_t src_row = std::size_t(row_perm[u]) * cols;
        for (int v = 0; v < cols; ++v)
            spec.at(u, v) = work[src_row + col_perm[v]];
    }
    return spec;
}

Image iwht_2d(const Spectrum& spec) {
    require_pow2_dims(spec.rows(), spec.cols(), "iwht_2d");
    const int rows = spec.rows(), cols = spec.cols();

    // Scatter sequency coefficients back to natural positions, then the
    // forward butterfly is its own inverse up to the 1/(rows*cols) factor.
    const std::vector<int> row_perm = sequency_permutation(rows);
    const std::vector<int> col_perm = sequency_permutation(cols);
    std::vector<double> work(std::size_t(rows) * cols);
    for (int u = 0; u < rows; ++u) {
        const std::size_t dst_row = std::size_t(row_perm[u]) * cols;
        for (int v = 0; v < cols; ++v)
            work[dst_row + col_perm[v]] = spec.at(u, v);
    }

    for (int r = 0; r < rows; ++r)
        fwht_inplace(std::span<double>(work.data() + std::size_t(r) * cols, cols));
    std::vector<double> col(rows);
    for (int c = 0; c < cols; ++c) {
        for (int r = 0; r < rows; ++r)
            col[r] = work[std::size_t(r) * cols + c];
        fwht_inplace(col);
        for (int r = 0; r < rows; ++r)
            work[std::size_t(r) * cols + c] = col[r];
    }

    Image img(rows, cols, 0.0, spec.peak());
    const double scale = 1.0 / (double(rows) * double(cols));
    for (std::size_t i = 0; i < work.size(); ++i)
        img.values()[i] = work[i] * scale;
    return img;
}

Pattern synthesize_pattern(int u, int v, int rows, int cols) {
    require_pow2_dims(rows, cols, "synthesize_pattern");
    if (u < 0 || u >= rows || v < 0 || v >= cols)
        throw std::out_of_range("synthesize_pattern: sequency index out of range");
    const std::vector<std::int8_t> wu = walsh_vector(u, rows);
    const std::vector<std::int8_t> wv = walsh_vector(v, cols);
    Pattern p(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            p.at(r, c) = std::int8_t(wu[r] * wv[c]);
    return p;
}

} // namespace hsi
