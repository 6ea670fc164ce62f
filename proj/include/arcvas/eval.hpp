#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "arcvas/grid.hpp"
#include "arcvas/solver.hpp"
#include "arcvas/vae.hpp"

namespace arcvas {

/// Anything that turns an item into predictions for its first test input.
/// The expected output dimensions are passed in; nothing else about the
/// expected output may be used.
using Predictor = std::function<std::vector<Prediction>(const Item&, const SolveOptions&, Dims)>;

Predictor vae_predictor(const VaeParams& params);

/// Fraction of the 900 canvas cells where `pred30` equals the canonical
/// (upscaled and padded) expected grid.
double cell_accuracy_30(const Grid& pred30, const Grid& expected);

double cell_accuracy_rescaled(const Grid& pred, const Grid& expected);

/// Accuracy over cells that are non-black in the expected grid (on the
/// canvas when `canvas30`). nullopt when there are no such cells.
std::optional<double> zero_filtered_accuracy(const Grid& pred, const Grid& expected, bool canvas30);

struct ItemAccuracy {
    std::string id;
    double predicted_30 = 0;
    double predicted_rescaled = 0;
    std::optional<double> zero_filtered_30;
    std::optional<double> zero_filtered_rescaled;
};

/// Per-item accuracies first, then an unweighted mean over items. Items with
/// an all-black expected output are left out of the zero-filtered means.
struct AccuracyReport {
    Strategy strategy = Strategy::Average;
    bool deterministic = true;
    std::size_t n = 0;
    double predicted_30 = 0;
    double predicted_rescaled = 0;
    double zero_filtered_30 = 0;
    double zero_filtered_rescaled = 0;
    std::size_t zero_filtered_n = 0;
    std::vector<ItemAccuracy> per_item;
};

nlohmann::json to_json(const AccuracyReport& r);

struct OfficialScore {
    std::size_t solved = 0;
    std::size_t total = 0;
    int attempts_per_item = 3;
    std::vector<std::string> solved_ids;
};

nlohmann::json to_json(const OfficialScore& s);

AccuracyReport evaluate_dataset(const Predictor& predictor, std::span<const Item> items, Strategy strategy,
                                bool deterministic, std::uint64_t seed = 0);
AccuracyReport evaluate_dataset(const VaeParams& params, std::span<const Item> items, Strategy strategy,
                                bool deterministic, std::uint64_t seed = 0);

/// Solved when any of `attempts` sampled, rescaled predictions exactly equals
/// the first expected test output.
OfficialScore score_official(const Predictor& predictor, std::span<const Item> items, Strategy strategy,
                             int attempts, std::uint64_t seed);
OfficialScore score_official(const VaeParams& params, std::span<const Item> items, Strategy strategy,
                             int attempts, std::uint64_t seed);

/// The sixteen ConceptARC concept groups.
const std::vector<std::string>& concept_groups();

struct ConceptScore {
    std::string concept_tag;
    std::size_t solved = 0;
    std::size_t total = 0;
    double accuracy() const { return total == 0 ? 0.0 : static_cast<double>(solved) / total; }
};

/// One row per concept group (all sixteen, in canonical order). Throws
/// ValidationError on an item whose tag is not a known concept.
std::vector<ConceptScore> score_conceptarc(const Predictor& predictor, std::span<const Item> items,
                                           Strategy strategy, int attempts, std::uint64_t seed);

/// CSV with columns concept,human,average_rv,similarity_rv. `human` maps a
/// concept to its reference accuracy; missing entries are left blank.
std::string concept_table_csv(std::span<const ConceptScore> average, std::span<const ConceptScore> similarity,
                              const std::map<std::string, double>& human);

/// Row labels of the four accuracy conditions, in table order.
const std::vector<std::string>& accuracy_row_labels();

/// Four-row table with one column per report (named by strategy).
std::string accuracy_table_csv(std::span<const AccuracyReport> reports);

} // namespace arcvas
