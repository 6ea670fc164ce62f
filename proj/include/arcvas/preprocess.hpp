#pragma once

#include <span>
#include <vector>

#include "arcvas/grid.hpp"

namespace arcvas {

inline constexpr int kCanvasValues = kNumColors * kCanvasCells;

/// Where a grid of a given size lands on the 30x30 canvas.
struct Placement {
    int height = 0;
    int width = 0;
    int scale = 1;
    int pad_top = 0;
    int pad_left = 0;
};

/// k = min(floor(30/h), floor(30/w)); symmetric padding with the odd row or
/// column going to the bottom/right. Throws SizeError outside 1..30.
Placement placement_for(int height, int width);

struct Upscaled {
    Grid grid;
    int scale = 1;
};

struct Padded {
    Grid grid;
    int pad_top = 0;
    int pad_left = 0;
};

/// One-hot tensor in [color][row][col] layout plus the metadata needed to
/// invert it.
struct CanonicalGrid {
    std::vector<float> tensor;
    int orig_height = 0;
    int orig_width = 0;
    int scale = 1;
    int pad_top = 0;
    int pad_left = 0;
};

/// Per-cell color probabilities in [color][row][col] layout.
struct ColorDistributionGrid {
    std::vector<float> tensor;
};

Upscaled kronecker_upscale(const Grid& g);
Padded pad_to_canvas(const Grid& g);

/// Upscale then pad: the 30x30 color grid a raw grid becomes.
Grid canvas_grid(const Grid& g);

CanonicalGrid canonicalize(const Grid& g);
Grid decanonicalize(const CanonicalGrid& c);

/// Writes the one-hot encoding of a 30x30 grid into `out` (kCanvasValues).
void one_hot(const Grid& canvas, std::span<float> out);

/// Per-cell argmax over a [10][30][30] tensor; ties go to the lowest color.
Grid argmax_canvas(std::span<const float> tensor);

/// Strips the padding for the target size, averages the channel values over
/// each k x k block, then takes the argmax (lowest color wins ties).
Grid rescale_prediction(const ColorDistributionGrid& p, int target_height, int target_width);

} // namespace arcvas
