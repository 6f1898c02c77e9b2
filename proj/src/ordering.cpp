#include "hsi/ordering.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "hsi/digest.hpp"
#include "hsi/rng.hpp"
#include "hsi/transform.hpp"

namespace hsi {

namespace {

// Shared tie-break: (u+v ascending, then u ascending). Total on distinct
// coordinates, so every generator is reproducible bit-exactly.
bool tie_less(SpectralCoord a, SpectralCoord b) {
    const int sa = a.u + a.v, sb = b.u + b.v;
    if (sa != sb)
        return sa < sb;
    return a.u < b.u;
}

std::vector<SpectralCoord> full_grid(int rows, int cols) {
    std::vector<SpectralCoord> grid;
    grid.reserve(std::size_t(rows) * cols);
    for (int u = 0; u < rows; ++u)
        for (int v = 0; v < cols; ++v)
            grid.push_back({std::uint16_t(u), std::uint16_t(v)});
    return grid;
}

void require_grid_dims(int rows, int cols, const char* what) {
    require_pow2_dims(rows, cols, what);
    if (rows > 32768 || cols > 32768)
        throw std::invalid_argument(std::string(what) + ": dimensions above 32768 are not supported");
}

// Sorts the grid ascending by a scalar key, ties broken by tie_less.
template <typename Key>
std::vector<SpectralCoord> sort_by_key(int rows, int cols, Key&& key) {
    std::vector<SpectralCoord> grid = full_grid(rows, cols);
    std::vector<std::pair<double, SpectralCoord>> keyed;
    keyed.reserve(grid.size());
    for (SpectralCoord c : grid)
        keyed.emplace_back(key(c), c);
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first)
            return a.first < b.first;
        return tie_less(a.second, b.second);
    });
    for (std::size_t i = 0; i < keyed.size(); ++i)
        grid[i] = keyed[i].second;
    return grid;
}

} // namespace

const char* strategy_name(Strategy s) {
    switch (s) {
    case Strategy::natural: return "natural";
    case Strategy::random: return "random";
    case Strategy::walsh: return "walsh";
    case Strategy::cc: return "cc";
    case Strategy::tv: return "tv";
    case Strategy::po: return "po";
    case Strategy::xy: return "xy";
    }
    throw std::invalid_argument("strategy_name: unknown strategy");
}

Strategy strategy_from_name(const std::string& name) {
    for (Strategy s : {Strategy::natural, Strategy::random, Strategy::walsh, Strategy::cc,
                       Strategy::tv, Strategy::po, Strategy::xy})
        if (name == strategy_name(s))
            return s;
    throw std::invalid_argument("unknown strategy '" + name + "'");
}

bool PatternOrder::is_permutation() const {
    const std::size_t n = std::size_t(rows) * cols;
    if (sequence.size() != n)
        return false;
    std::vector<bool> seen(n, false);
    for (SpectralCoord c : sequence) {
        if (c.u >= rows || c.v >= cols)
            return false;
        const std::size_t idx = std::size_t(c.u) * cols + c.v;
        if (seen[idx])
            return false;
        seen[idx] = true;
    }
    return true;
}

int count_blocks(const Pattern& p) {
    p.validate_entries("count_blocks");
    const int rows = p.rows(), cols = p.cols();
    std::vector<bool> seen(p.size(), false);
    std::vector<int> stack;
    int regions = 0;
    for (int start = 0; start < int(p.size()); ++start) {
        if (seen[start])
            continue;
        ++regions;
        const std::int8_t sign = p.values()[start];
        seen[start] = true;
        stack.push_back(start);
        while (!stack.empty()) {
            const int idx = stack.back();
            stack.pop_back();
            const int r = idx / cols, c = idx % cols;
            const int neigh[4] = {r > 0 ? idx - cols : -1, r + 1 < rows ? idx + cols : -1,
                                  c > 0 ? idx - 1 : -1, c + 1 < cols ? idx + 1 : -1};
            for (int nb : neigh) {
                if (nb >= 0 && !seen[nb] && p.values()[nb] == sign) {
                    seen[nb] = true;
                    stack.push_back(nb);
                }
            }
        }
    }
    return regions;
}

double pattern_tv(const Pattern& p) {
    p.validate_entries("pattern_tv");
    const int rows = p.rows(), cols = p.cols();
    long long total = 0;
    for (int r = 0; r + 1 < rows; ++r)
        for (int c = 0; c < cols; ++c)
            total += std::abs(int(p.at(r + 1, c)) - int(p.at(r, c)));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c + 1 < cols; ++c)
            total += std::abs(int(p.at(r, c + 1)) - int(p.at(r, c)));
    return double(total);
}

int flattened_sign_changes(const Pattern& p) {
    p.validate_entries("flattened_sign_changes");
    int changes = 0;
    for (std::size_t i = 1; i < p.size(); ++i)
        if (p.values()[i] != p.values()[i - 1])
            ++changes;
    return changes;
}

PatternOrder natural_order(int rows, int cols) {
    require_grid_dims(rows, cols, "natural_order");
    // Row k of the order rows*cols Hadamard matrix reshapes to the pattern
    // with natural axis indices (k / cols, k % cols); convert each to
    // sequency.
    const std::vector<int> row_seq = natural_to_sequency(rows);
    const std::vector<int> col_seq = natural_to_sequency(cols);
    PatternOrder order{rows, cols, Strategy::natural};
    order.sequence.reserve(std::size_t(rows) * cols);
    for (std::size_t k = 0; k < std::size_t(rows) * cols; ++k)
        order.sequence.push_back({std::uint16_t(row_seq[k / cols]), std::uint16_t(col_seq[k % cols])});
    return order;
}

PatternOrder random_order(int rows, int cols, std::uint64_t seed) {
    require_grid_dims(rows, cols, "random_order");
    PatternOrder order{rows, cols, Strategy::random, true, seed};
    order.sequence = full_grid(rows, cols);
    // Fisher-Yates with explicit draws so the permutation depends only on the
    // seed, not on the standard library's shuffle.
    RandomStream rng(seed);
    for (std::size_t i = order.sequence.size() - 1; i > 0; --i)
        std::swap(order.sequence[i], order.sequence[rng.next_below(i + 1)]);
    return order;
}

PatternOrder walsh_order(int rows, int cols, OrderPath path) {
    require_grid_dims(rows, cols, "walsh_order");
    PatternOrder order{rows, cols, Strategy::walsh};
    if (path == OrderPath::brute) {
        order.sequence = sort_by_key(rows, cols, [&](SpectralCoord c) {
            return double(flattened_sign_changes(synthesize_pattern(c.u, c.v, rows, cols)));
        });
        return order;
    }
    // Row-major flattening gives rows*v in-row changes plus one potential
    // change per row boundary; the boundary count is u when the last entry of
    // W_v is +1 and rows-1-u when it is -1. The last entry's sign is the
    // parity of W_v's natural row index.
    const std::vector<int> col_perm = sequency_permutation(cols);
    order.sequence = sort_by_key(rows, cols, [&](SpectralCoord c) {
        const bool last_neg = std::popcount(unsigned(col_perm[c.v])) & 1;
        const int boundary = last_neg ? (rows - 1 - c.u) : c.u;
        return double(rows) * c.v + boundary;
    });
    return order;
}

PatternOrder cc_order(int rows, int cols, OrderPath path) {
    require_grid_dims(rows, cols, "cc_order");
    PatternOrder order{rows, cols, Strategy::cc};
    if (path == OrderPath::brute) {
        order.sequence = sort_by_key(rows, cols, [&](SpectralCoord c) {
            return double(count_blocks(synthesize_pattern(c.u, c.v, rows, cols)));
        });
    } else {
        // Rank-1 structure: the sign grid is a (u+1) x (v+1) rectangle tiling.
        order.sequence = sort_by_key(rows, cols, [](SpectralCoord c) {
            return double(c.u + 1) * double(c.v + 1);
        });
    }
    return order;
}

PatternOrder tv_order(int rows, int cols, OrderPath path) {
    require_grid_dims(rows, cols, "tv_order");
    PatternOrder order{rows, cols, Strategy::tv};
    if (path == OrderPath::brute) {
        order.sequence = sort_by_key(rows, cols, [&](SpectralCoord c) {
            return pattern_tv(synthesize_pattern(c.u, c.v, rows, cols));
        });
    } else {
        order.sequence = sort_by_key(rows, cols, [&](SpectralCoord c) {
            return 2.0 * (double(cols) * c.u + double(rows) * c.v);
        });
    }
    return order;
}

PatternOrder xy_order(int rows, int cols) {
    require_grid_dims(rows, cols, "xy_order");
    PatternOrder order{rows, cols, Strategy::xy};
    // Weight m = u*v + (u^2 + v^2)/4 with the origin at the spectrum's upper
    // left; compare 4m so keys stay exact integers.
    order.sequence = sort_by_key(rows, cols, [](SpectralCoord c) {
        const double u = c.u, v = c.v;
        return 4.0 * u * v + u * u + v * v;
    });
    return order;
}

Spectrum po_power_spectrum(const std::vector<Image>& images, int rows, int cols) {
    require_grid_dims(rows, cols, "po_order");
    if (images.empty())
        throw std::invalid_argument("po_order: image list is empty");
    Spectrum acc(rows, cols);
    for (const Image& img : images) {
        if (img.rows() != rows || img.cols() != cols)
            throw std::invalid_argument("po_order: image size does not match requested grid");
        Spectrum spec = wht_2d(img);
        double max_abs = 0.0;
        for (double x : spec.values())
            max_abs = std::max(max_abs, std::abs(x));
        if (max_abs == 0.0)
            continue; // blank image, nothing to contribute
        for (std::size_t i = 0; i < spec.size(); ++i)
            acc.values()[i] += std::abs(spec.values()[i]) / max_abs;
    }
    return acc;
}

PatternOrder po_order(const std::vector<Image>& images, int rows, int cols) {
    const Spectrum acc = po_power_spectrum(images, rows, cols);
    PatternOrder order{rows, cols, Strategy::po};
    // Descending accumulated magnitude == ascending negated magnitude.
    order.sequence = sort_by_key(rows, cols, [&](SpectralCoord c) { return -acc.at(c); });
    std::uint64_t digest = fnv1a64_init();
    for (const Image& img : images)
        digest = fnv1a64_update(digest, img.values().data(), img.size() * sizeof(double));
    order.has_dataset_digest = true;
    order.dataset_digest = digest;
    return order;
}

std::uint64_t order_digest(const PatternOrder& order) {
    std::uint64_t d = fnv1a64_init();
    const std::uint16_t dims[2] = {std::uint16_t(order.cols), std::uint16_t(order.rows)};
    d = fnv1a64_update(d, dims, sizeof(dims));
    const std::uint8_t tag = std::uint8_t(order.strategy);
    d = fnv1a64_update(d, &tag, 1);
    d = fnv1a64_update(d, order.sequence.data(), order.sequence.size() * sizeof(SpectralCoord));
    return d;
}

} // namespace hsi
