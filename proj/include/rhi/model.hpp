// Visual generative models: a convolutional decoder trained supervised from
// joint angles, and a VAE sharing the same decoding stack but trained
// unsupervised on images. Either way the served mapping is
//
//     g_v(mu) = decoder(M * mu + c)
//
// where (M, c) is a fixed affine input map: for the decoder it is the
// per-joint normalization of the joint limits onto [-1,1]; for the VAE it is
// that normalization composed with a least-squares calibration from
// normalized angles to the encoder's latent means, so that the decoder is
// queried in its own latent coordinates. The constant Jacobian M folds into
// the adjoint.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "rhi/dataset.hpp"
#include "rhi/graph.hpp"

namespace rhi {

enum class ModelKind { Decoder, Vae };

std::string to_string(ModelKind k);
ModelKind model_kind_from_string(const std::string& s);

struct TrainHyper {
    std::size_t batch = 64;
    double lr = 0.2;
    double momentum = 0.9;
    std::size_t epochs = 60;
    double beta = 1.0;        // VAE KL weight (final value)
    double beta_start = -1.0; // annealing start; < 0 means no annealing
    std::size_t beta_anneal_epochs = 0;
    std::uint64_t seed = 1;
    int threads = 2;          // fixed gradient-reduction fan-in
    double lr_step_factor = 0.2;   // step schedule; 1.0 disables
    std::size_t lr_step_every = 40;  // epochs; 0 disables
    bool verbose = false;

    static TrainHyper from_config(const Config& cfg);
};

struct TrainMeta {
    std::size_t epochs = 0;
    double final_loss = 0.0;  // per-pixel MSE of the served mapping on the corpus
    std::uint64_t seed = 0;
    std::uint64_t dataset_hash = 0;
    double beta = 0.0;
};

struct BrainState {
    std::array<double, 2> mu{0.0, 0.0};  // believed shoulder, elbow (rad)
};

class VisualModel {
public:
    ModelKind kind = ModelKind::Decoder;
    std::size_t resolution = 0;
    JointLimits limits;
    // z = input_map_m * mu + input_map_c (mu in raw radians)
    std::array<double, 4> input_map_m{0, 0, 0, 0};  // row-major 2x2
    std::array<double, 2> input_map_c{0, 0};
    TrainMeta meta;

    Graph decoder;                  // input "z"[2] -> image [res,res]
    std::optional<Graph> encoder;   // VAE only; input "x"[res,res]
    int encoder_mean_node = -1;
    int encoder_logvar_node = -1;

    // Decoder forward pass at the (clamped) belief. If mu lies outside the
    // joint limits it is clamped first and *oob_flag is set.
    Tensor predict(const BrainState& mu, bool* oob_flag = nullptr) const;

    // Vector-Jacobian product d g_v/d mu ^T * weighted_error, including the
    // constant input-map factor.
    std::array<double, 2> adjoint(const BrainState& mu, const Tensor& weighted_error,
                                  bool* oob_flag = nullptr) const;

    // Full Jacobian columns reshaped to images, for diagnostics.
    std::array<Tensor, 2> jacobian_images(const BrainState& mu) const;

    // VAE posterior moments for an image; throws for plain decoders.
    std::pair<std::array<double, 2>, std::array<double, 2>> encode(const Tensor& image) const;

    void save(const std::string& path) const;
    static VisualModel load(const std::string& path);

    std::uint64_t weight_hash() const;

private:
    // Serving graphs are mutated by forward/backward, so const entry points
    // evaluate on a thread-local scratch clone keyed by this object.
    Graph& scratch_decoder() const;
};

// Architecture builders (weights initialized from the seed).
Graph build_decoder_graph(std::size_t resolution, std::uint64_t seed);

struct VaeGraphs {
    Graph train;   // inputs "x","beta" -> scalar loss = mse + beta*kl/numel
    int recon_mse_node = -1;
    Graph encoder;  // input "x" -> mean (output), logvar via node id
    int mean_node = -1;
    int logvar_node = -1;
};

struct DecoderTrainGraph {
    Graph train;  // inputs "z","target" -> scalar per-pixel mse
};

DecoderTrainGraph build_decoder_train_graph(std::size_t resolution, std::uint64_t seed);
VaeGraphs build_vae_graphs(std::size_t resolution, std::uint64_t seed);

VisualModel train_decoder(const Dataset& ds, const TrainHyper& hyper);
VisualModel train_vae(const Dataset& ds, const TrainHyper& hyper);

// Mean per-pixel MSE of the served mapping over a set of raw angle/image
// pairs (the dataset itself or a held-out grid).
double serving_mse(const VisualModel& model, const Dataset& ds);

}  // namespace rhi
