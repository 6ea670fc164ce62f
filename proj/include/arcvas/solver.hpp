#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "arcvas/grid.hpp"
#include "arcvas/preprocess.hpp"
#include "arcvas/vae.hpp"

namespace arcvas {

/// Latent difference between an example output and its input embedding.
struct RuleVector {
    std::vector<float> v;
    std::optional<int> source_example_index;
};

enum class Strategy { Average, Similarity };

std::string to_string(Strategy s);
Strategy parse_strategy(std::string_view name);

struct Dims {
    int height = 0;
    int width = 0;
};

struct Prediction {
    ColorDistributionGrid raw;
    Grid grid30;
    Grid rescaled;
    Strategy strategy = Strategy::Average;
    int attempt = 0;
    bool deterministic = true;
    double rule_norm = 0;
    double latent_norm = 0;
};

struct SolveOptions {
    Strategy strategy = Strategy::Average;
    bool deterministic = true;
    int attempts = 1;
    std::uint64_t seed = 0;
};

/// mu(f(b_i)) - mu(f(a_i)) for every train pair, in order.
std::vector<RuleVector> rule_vectors(const VaeParams& params, const Item& item);

RuleVector combine_average(std::span<const RuleVector> rvs);

/// Rule vector of the example whose input embedding is nearest (Euclidean) to
/// the test embedding; the lowest index wins ties.
RuleVector combine_similarity(std::span<const RuleVector> rvs,
                              std::span<const std::vector<float>> example_inputs,
                              std::span<const float> test_embedding);

/// Decodes f(c) + r for the item's first test input. Rule vectors always use
/// mean embeddings; only the test embedding is sampled when not deterministic.
/// The expected output is never read, only its dimensions via `expected`.
std::vector<Prediction> solve(const VaeParams& params, const Item& item, const SolveOptions& options,
                              Dims expected);

nlohmann::json prediction_to_json(const std::string& item_id, std::span<const Prediction> predictions,
                                  std::uint64_t seed);

} // namespace arcvas
