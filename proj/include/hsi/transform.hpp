#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hsi/types.hpp"

namespace hsi {

// In-place fast Walsh-Hadamard butterfly. After the call v holds H_N * v with
// H_N in Sylvester (natural) order, unnormalized. N must be a power of two.
void fwht_inplace(std::span<double> v);

// Convenience copy form of fwht_inplace.
std::vector<double> fwht_1d(std::vector<double> v);

// Maps a sequency index s to the natural-order row of H_N whose Walsh vector
// has exactly s sign changes (bit-reversed Gray code).
std::vector<int> sequency_permutation(int n);

// Inverse of sequency_permutation: natural row index -> sequency index.
std::vector<int> natural_to_sequency(int n);

// The sequency-s Walsh vector of length n, entries +-1.
std::vector<std::int8_t> walsh_vector(int s, int n);

// Separable 2D transform, both axes re-indexed to sequency order.
// coeff(u, v) = sum_{r,c} W_u(r) * W_v(c) * img(r, c), unnormalized.
Spectrum wht_2d(const Image& img);

// Inverse of wht_2d; the 1/(rows*cols) normalization is applied here.
Image iwht_2d(const Spectrum& spec);

// Basis pattern for spectrum position (u, v): the outer product
// P(r, c) = W_u(r) * W_v(c). Equals the corresponding reshaped row of the
// order rows*cols Hadamard matrix.
Pattern synthesize_pattern(int u, int v, int rows, int cols);
inline Pattern synthesize_pattern(int u, int v, int n) { return synthesize_pattern(u, v, n, n); }

} // namespace hsi
