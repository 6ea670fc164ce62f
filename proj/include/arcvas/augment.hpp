#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include <json.hpp>

#include "arcvas/grid.hpp"

namespace arcvas {

struct AugmentConfig {
    int color_copies = 5;
    double rotate_fraction = 0.6;
    bool mirror = true;
    std::uint64_t seed = 0;
};

/// perm[c] is the new color of c. perm[0] must be 0 and perm must be a
/// bijection on 1..9.
using ColorPermutation = std::array<Color, kNumColors>;

ColorPermutation identity_permutation();

Grid permute_colors(const Grid& g, const ColorPermutation& perm);
Pair permute_colors(const Pair& p, const ColorPermutation& perm);

/// Clockwise rotation; angle must be 90, 180 or 270.
Grid rotate_grid(const Grid& g, int angle);
Pair rotate_pair(const Pair& p, int angle);

/// Columns reversed.
Grid mirror_grid(const Grid& g);
Pair mirror_pair(const Pair& p);

struct CorpusReport {
    std::size_t items = 0;
    std::size_t original_grids = 0;
    std::size_t color_grids = 0;
    std::size_t mirror_grids = 0;
    std::size_t rotated_grids = 0;
    std::size_t rotated_items = 0;
    std::size_t total_grids = 0;
    AugmentConfig config;
};

nlohmann::json to_json(const CorpusReport& r);

struct Corpus {
    std::vector<Grid> grids;
    CorpusReport report;
};

/// Per train pair: the original plus `color_copies` distinct recolorings; the
/// mirror of each of those when enabled; and, for a seeded `rotate_fraction`
/// of items, one rotated copy of everything so far with a per-item angle.
/// Inputs and outputs are both emitted.
Corpus build_training_corpus(std::span<const Item> items, const AugmentConfig& cfg);

} // namespace arcvas
