#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "arcvas/grid.hpp"
#include "arcvas/preprocess.hpp"

namespace arcvas {

/// How the per-cell cross-entropy enters the total loss. `Mean` averages
/// over the 900 cells; `Sum` adds them, which is the usual ELBO weighting
/// against the summed KL term.
enum class ReconReduction { Sum, Mean };

struct Hyperparams {
    int filters = 128;
    int kernel = 4;
    int stride = 2;
    int latent_dim = 128;
    double l2_penalty = 0.2;
    double beta = 1.0;
    double learning_rate = 1e-3;
    int batch_size = 64;
    int epochs = 60;
    int patience = 10;
    ReconReduction recon_reduction = ReconReduction::Sum;
    std::uint64_t seed = 0;
};

nlohmann::json to_json(const Hyperparams& h);
Hyperparams hyperparams_from_json(const nlohmann::json& j);

inline constexpr double kLogvarClamp = 10.0;

struct ParamSlot {
    std::string name;
    std::vector<int> shape;
    std::size_t offset = 0;
    std::size_t size = 0;
    bool is_weight = true; // biases are excluded from the L2 term
};

/// Per-sample loss components, averaged over a batch.
struct LossTerms {
    double total = 0;
    double recon = 0; // mean over the 900 cells of the categorical cross-entropy
    double kl = 0;    // summed over latent dimensions
    double l2 = 0;    // l2_penalty * mean squared weight
};

/// Convolutional VAE: three stride-2 convolutions (10 -> F -> F -> F), two
/// affine heads to (mu, logvar), an affine map back to [F x s x s] and three
/// transposed convolutions (F -> F -> F -> 10) with a per-cell softmax.
///
/// Inputs and outputs are batch-major [batch][10][30][30]. Inference methods
/// are const and safe to call concurrently.
template <typename T>
class VaeModel {
  public:
    explicit VaeModel(const Hyperparams& h);

    const Hyperparams& hyperparams() const { return h_; }
    std::span<const ParamSlot> layout() const { return layout_; }
    std::span<T> values() { return values_; }
    std::span<const T> values() const { return values_; }
    std::size_t weight_count() const { return weight_count_; }

    /// Spatial extents along the encoder: {30, 14, 6, 2} with the defaults.
    std::array<int, 4> spatial_trace() const { return sizes_; }

    void encode(std::span<const T> x, int batch, std::span<T> mu, std::span<T> logvar) const;
    void decode(std::span<const T> z, int batch, std::span<T> probs) const;

    /// Full forward pass with z = mu + exp(logvar / 2) * eps; eps is
    /// [batch][latent]. When `grad` is non-empty it receives d(total)/d(values).
    LossTerms loss_and_gradient(std::span<const T> x, int batch, std::span<const T> eps,
                                std::span<T> grad) const;

    int epochs_trained = 0;
    nlohmann::json metrics = nlohmann::json::object();

  private:
    struct Workspace;
    void forward(Workspace& ws, std::span<const T> x, int batch, std::span<const T> eps) const;

    Hyperparams h_;
    std::array<int, 4> sizes_{};
    std::vector<ParamSlot> layout_;
    std::vector<T> values_;
    std::size_t weight_count_ = 0;
};

extern template class VaeModel<float>;
extern template class VaeModel<double>;

using VaeParams = VaeModel<float>;

struct LatentDistribution {
    std::vector<float> mu;
    std::vector<float> logvar;
};

struct LatentVector {
    std::vector<float> z;
};

LatentDistribution encode(const VaeParams& params, const CanonicalGrid& x);
std::vector<LatentDistribution> encode_grids(const VaeParams& params, std::span<const Grid> grids);

/// rng == nullptr selects the deterministic mode (z = mu).
LatentVector reparameterize(const LatentDistribution& d, std::mt19937_64* rng);

ColorDistributionGrid decode(const VaeParams& params, const LatentVector& z);
std::vector<ColorDistributionGrid> decode_many(const VaeParams& params,
                                               std::span<const LatentVector> zs);

LossTerms loss(const ColorDistributionGrid& recon, const CanonicalGrid& target,
               const LatentDistribution& d, const VaeParams& params, const Hyperparams& h);

struct EpochRecord {
    int epoch = 0;
    LossTerms mean;
    double median_batch_loss = 0;
    double validation_accuracy = 0;
    double seconds = 0;
};

nlohmann::json to_json(const EpochRecord& r);

struct TrainingLog {
    std::vector<EpochRecord> epochs;
    int best_epoch = 0;
    double best_validation_accuracy = 0;
    bool stopped_early = false;
};

struct TrainOptions {
    /// When set, `last.ckpt` and `best.ckpt` are written here every epoch and
    /// the log is appended to `training_log.jsonl`.
    std::filesystem::path checkpoint_dir;
    std::function<void(const EpochRecord&)> on_epoch;
    /// Stop once validation accuracy reaches this value.
    double target_accuracy = 2.0;
};

struct TrainResult {
    VaeParams params;
    TrainingLog log;
};

/// Adam on shuffled mini-batches; keeps the parameters with the best
/// deterministic validation reconstruction accuracy. An empty validation
/// list validates on the corpus itself.
TrainResult train(std::span<const Grid> corpus, std::span<const Grid> validation,
                  const Hyperparams& h, const TrainOptions& options = {});

/// Mean per-grid fraction of the 900 canvas cells whose argmax
/// reconstruction equals the canonical color.
double reconstruction_accuracy(const VaeParams& params, std::span<const Grid> grids,
                               bool deterministic, std::uint64_t seed = 0);

/// Per-grid canvas accuracy (deterministic).
std::vector<double> reconstruction_accuracies(const VaeParams& params, std::span<const Grid> grids);

using Heatmap = std::array<int, kCanvasCells>;

/// Row-major 30x30 count of correct deterministic reconstructions.
Heatmap pixel_heatmap(const VaeParams& params, std::span<const Grid> grids);

inline constexpr std::string_view kCheckpointMagic = "ARCVAE1";

void save_checkpoint(const VaeParams& params, const std::filesystem::path& path);
VaeParams load_checkpoint(const std::filesystem::path& path);

} // namespace arcvas
