// mlp.hpp -- multilayer perceptron over concatenated binary word encodings
//
// 1..3 tanh hidden layers, logistic-sigmoid scalar output, mean binary
// cross-entropy loss, exact gradients by backpropagation. Parameters live in
// one flat vector (weights row-major, then bias, per layer) so the optimizer
// and the serializer see the same layout.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "symlab/errors.hpp"

namespace symlab {

struct NetConfig {
    std::size_t input_dim = 0;
    std::size_t hidden_layers = 1; // 1..3
    std::size_t hidden_width = 256;

    bool operator==(const NetConfig&) const = default;
};

/// Throws Error unless dims are positive and hidden_layers is in [1,3].
void validate(const NetConfig& config);

/// One training example: encoded word plus its rating.
struct Example {
    std::vector<double> input;
    double rating;
};
using Batch = std::vector<Example>;

class MlpParams {
public:
    /// Zero-initialized parameters (forward of the zero network is 0.5).
    explicit MlpParams(NetConfig config);

    /// Weights ~ Uniform(-1/sqrt(fan_in), +1/sqrt(fan_in)), biases zero.
    /// Pure function of (config, seed); i.i.d. across all weights.
    static MlpParams init(const NetConfig& config, std::uint64_t seed);

    const NetConfig& config() const { return config_; }

    /// Total parameter count P.
    std::size_t parameter_count() const { return theta_.size(); }

    std::span<double> flat() { return theta_; }
    std::span<const double> flat() const { return theta_; }

    /// Number of affine layers (hidden_layers + 1).
    std::size_t layer_count() const { return config_.hidden_layers + 1; }
    std::size_t layer_rows(std::size_t layer) const;
    std::size_t layer_cols(std::size_t layer) const;
    std::span<const double> weights(std::size_t layer) const;
    std::span<const double> bias(std::size_t layer) const;

    /// Binary format: "SMLP", version, layer sizes, then the flat vector as
    /// little-endian 64-bit floats in layer order, row-major.
    void save(std::ostream& out) const;
    static MlpParams load(std::istream& in);

private:
    NetConfig config_;
    std::vector<double> theta_;
    std::vector<std::size_t> offsets_; // start of each layer's block
};

/// Reusable scratch for forward/backward passes. One per thread.
struct MlpWorkspace {
    std::vector<std::vector<double>> acts; // hidden activations
    std::vector<double> delta_a;           // dL/da for the layer below
    std::vector<double> delta_z;           // dL/dz of the current layer

    void resize(const NetConfig& config);
};

/// Network output in (0,1). Throws NumericError on non-finite intermediates
/// and DomainError on an input length mismatch.
double forward(const MlpParams& params, std::span<const double> input,
               MlpWorkspace& ws);
double forward(const MlpParams& params, std::span<const double> input);

/// Mean binary cross-entropy with probabilities clamped to
/// [1e-12, 1 - 1e-12]. Throws Error on an empty batch.
double loss(const MlpParams& params, const Batch& batch);

/// Loss plus its exact gradient; grad_out must have parameter_count()
/// entries and is overwritten. Examples are reduced in batch order, so the
/// result is bit-reproducible.
double loss_and_grad(const MlpParams& params, const Batch& batch,
                     std::span<double> grad_out, MlpWorkspace& ws);

std::vector<double> grad(const MlpParams& params, const Batch& batch);

/// Numerically stable logistic function.
double sigmoid(double z);

/// Clamping bound used by the loss.
inline constexpr double kProbEpsilon = 1e-12;

} // namespace symlab
