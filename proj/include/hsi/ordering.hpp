#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hsi/types.hpp"

namespace hsi {

enum class Strategy : std::uint8_t { natural = 0, random, walsh, cc, tv, po, xy };

const char* strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& name);

// Whether pattern key evaluation runs on the closed-form expression or on the
// synthesized pattern itself. Both must produce identical orders; the brute
// paths exist as oracles and for generation-time benchmarks.
enum class OrderPath { fast, brute };

// A measurement-priority permutation of the full spectral coordinate grid.
struct PatternOrder {
    int rows = 0;
    int cols = 0;
    Strategy strategy = Strategy::natural;
    bool has_seed = false;
    std::uint64_t seed = 0;
    bool has_dataset_digest = false;
    std::uint64_t dataset_digest = 0;
    std::vector<SpectralCoord> sequence;

    bool is_permutation() const;
};

// Per-pattern statistics.

// Number of 4-connected constant-sign regions (both signs counted).
int count_blocks(const Pattern& p);

// Anisotropic total variation: sum of |differences| between horizontally and
// vertically adjacent entries, no wrap-around.
double pattern_tv(const Pattern& p);

// Sign changes of the pattern read row-major as one long vector.
int flattened_sign_changes(const Pattern& p);

// Order generators. All are deterministic; random_order is determined by its
// seed. Ties are broken by (u+v, then u) ascending everywhere.
PatternOrder natural_order(int rows, int cols);
PatternOrder random_order(int rows, int cols, std::uint64_t seed);
PatternOrder walsh_order(int rows, int cols, OrderPath path = OrderPath::fast);
PatternOrder cc_order(int rows, int cols, OrderPath path = OrderPath::fast);
PatternOrder tv_order(int rows, int cols, OrderPath path = OrderPath::fast);
PatternOrder xy_order(int rows, int cols);

// Dataset-derived order: sum of per-image max-normalized coefficient
// magnitudes, coordinates sorted by descending accumulated value. Images must
// already match the requested size.
PatternOrder po_order(const std::vector<Image>& images, int rows, int cols);

// Accumulated power spectrum the PO order sorts (exposed for inspection).
Spectrum po_power_spectrum(const std::vector<Image>& images, int rows, int cols);

std::uint64_t order_digest(const PatternOrder& order);

} // namespace hsi
