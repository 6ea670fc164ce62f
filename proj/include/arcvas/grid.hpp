#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace arcvas {

inline constexpr int kMaxSide = 30;
inline constexpr int kNumColors = 10;
inline constexpr int kCanvasCells = kMaxSide * kMaxSide;

using Color = std::uint8_t;
using ColorHistogram = std::array<int, kNumColors>;

/// h x w matrix of color indices 0..9, row-major. Dimensions are 1..30 for
/// every grid built through the validating constructors; a default-constructed
/// grid is empty and only serves as a placeholder.
class Grid {
  public:
    Grid() = default;
    Grid(int height, int width, Color fill = 0);

    /// Throws ValidationError on ragged rows, bad dims, or colors outside 0..9.
    static Grid from_rows(const std::vector<std::vector<int>>& rows);

    int height() const { return height_; }
    int width() const { return width_; }
    bool empty() const { return cells_.empty(); }

    Color at(int r, int c) const { return cells_[static_cast<std::size_t>(r) * width_ + c]; }
    void set(int r, int c, Color color);

    std::span<const Color> cells() const { return cells_; }
    ColorHistogram histogram() const;
    std::vector<std::vector<int>> rows() const;

    bool operator==(const Grid&) const = default;

  private:
    int height_ = 0;
    int width_ = 0;
    std::vector<Color> cells_;
};

struct Pair {
    Grid input;
    Grid output;
    bool operator==(const Pair&) const = default;
};

struct Item {
    std::string id;
    std::vector<Pair> train;
    std::vector<Pair> test;
    // Concept group for ConceptARC items; empty otherwise.
    std::string concept_tag;
    bool operator==(const Item&) const = default;
};

struct DatasetSplit {
    std::vector<Item> train_items;
    std::vector<Item> validation_items;
    std::uint64_t seed = 0;
};

inline constexpr std::size_t kOfficialTrainingItems = 400;
inline constexpr std::size_t kSplitTrainItems = 300;

Item parse_item(std::string_view raw_json, std::string id);
std::string serialize_item(const Item& item);

nlohmann::json grid_to_json(const Grid& g);
Grid grid_from_json(const nlohmann::json& j);

/// One JSON file per item; ids are filename stems, items sorted by filename.
std::vector<Item> load_dataset(const std::filesystem::path& directory);

/// ConceptARC layout: one subdirectory per concept group, each holding item
/// files. The subdirectory name becomes the item's concept tag.
std::vector<Item> load_concept_dataset(const std::filesystem::path& directory);

DatasetSplit split_train_validation(const std::vector<Item>& items, std::uint64_t seed);

/// Input and output grids of every train pair, in item order.
std::vector<Grid> example_grids(std::span<const Item> items);

} // namespace arcvas
