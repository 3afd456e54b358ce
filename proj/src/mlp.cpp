#include "symlab/mlp.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <istream>
#include <ostream>

#include "symlab/kernels.hpp"
#include "symlab/rng.hpp"

namespace symlab {

void validate(const NetConfig& config) {
    if (config.input_dim == 0) throw Error("input_dim must be positive");
    if (config.hidden_layers < 1 || config.hidden_layers > 3) {
        throw Error("hidden_layers must be 1, 2, or 3");
    }
    if (config.hidden_width == 0) throw Error("hidden_width must be positive");
}

MlpParams::MlpParams(NetConfig config) : config_(config) {
    validate(config_);
    std::size_t total = 0;
    for (std::size_t l = 0; l < layer_count(); ++l) {
        offsets_.push_back(total);
        total += layer_rows(l) * layer_cols(l) + layer_rows(l);
    }
    theta_.assign(total, 0.0);
}

std::size_t MlpParams::layer_rows(std::size_t layer) const {
    return layer == config_.hidden_layers ? 1 : config_.hidden_width;
}

std::size_t MlpParams::layer_cols(std::size_t layer) const {
    return layer == 0 ? config_.input_dim : config_.hidden_width;
}

std::span<const double> MlpParams::weights(std::size_t layer) const {
    return {theta_.data() + offsets_[layer], layer_rows(layer) * layer_cols(layer)};
}

std::span<const double> MlpParams::bias(std::size_t layer) const {
    return {theta_.data() + offsets_[layer] + layer_rows(layer) * layer_cols(layer),
            layer_rows(layer)};
}

MlpParams MlpParams::init(const NetConfig& config, std::uint64_t seed) {
    MlpParams params(config);
    Rng rng(seed);
    for (std::size_t l = 0; l < params.layer_count(); ++l) {
        const std::size_t fan_in = params.layer_cols(l);
        const double bound = 1.0 / std::sqrt(static_cast<double>(fan_in));
        double* w = params.theta_.data() + params.offsets_[l];
        const std::size_t n = params.layer_rows(l) * params.layer_cols(l);
        for (std::size_t i = 0; i < n; ++i) {
            w[i] = rng.uniform(-bound, bound);
        }
        // biases stay zero
    }
    return params;
}

namespace {

void write_u32_le(std::ostream& out, std::uint32_t v) {
    char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(b, 4);
}

std::uint32_t read_u32_le(std::istream& in) {
    unsigned char b[4];
    in.read(reinterpret_cast<char*>(b), 4);
    if (!in) throw Error("truncated parameter file");
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

void write_f64_le(std::ostream& out, double v) {
    const auto bits = std::bit_cast<std::uint64_t>(v);
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((bits >> (8 * i)) & 0xff);
    out.write(b, 8);
}

double read_f64_le(std::istream& in) {
    unsigned char b[8];
    in.read(reinterpret_cast<char*>(b), 8);
    if (!in) throw Error("truncated parameter file");
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return std::bit_cast<double>(bits);
}

constexpr char kMagic[4] = {'S', 'M', 'L', 'P'};

} // namespace

void MlpParams::save(std::ostream& out) const {
    out.write(kMagic, 4);
    write_u32_le(out, 1); // version
    write_u32_le(out, static_cast<std::uint32_t>(config_.hidden_layers + 2));
    write_u32_le(out, static_cast<std::uint32_t>(config_.input_dim));
    for (std::size_t l = 0; l < config_.hidden_layers; ++l) {
        write_u32_le(out, static_cast<std::uint32_t>(config_.hidden_width));
    }
    write_u32_le(out, 1);
    for (const double v : theta_) write_f64_le(out, v);
    if (!out) throw Error("failed to write parameter file");
}

MlpParams MlpParams::load(std::istream& in) {
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0) {
        throw Error("not a parameter file (bad magic)");
    }
    if (read_u32_le(in) != 1) throw Error("unsupported parameter file version");
    const std::uint32_t n_sizes = read_u32_le(in);
    if (n_sizes < 3 || n_sizes > 5) throw Error("unsupported layer count");
    std::vector<std::uint32_t> sizes(n_sizes);
    for (auto& s : sizes) s = read_u32_le(in);
    if (sizes.back() != 1) throw Error("output layer must have one unit");
    for (std::size_t i = 2; i + 1 < sizes.size(); ++i) {
        if (sizes[i] != sizes[1]) throw Error("hidden widths must be equal");
    }
    MlpParams params(NetConfig{sizes[0], n_sizes - 2, sizes[1]});
    for (double& v : params.theta_) v = read_f64_le(in);
    return params;
}

void MlpWorkspace::resize(const NetConfig& config) {
    acts.resize(config.hidden_layers);
    for (auto& a : acts) a.resize(config.hidden_width);
    delta_a.resize(config.hidden_width);
    delta_z.resize(config.hidden_width);
}

double sigmoid(double z) {
    if (z >= 0.0) {
        return 1.0 / (1.0 + std::exp(-z));
    }
    const double e = std::exp(z);
    return e / (1.0 + e);
}

namespace {

double forward_impl(const MlpParams& params, std::span<const double> input,
                    MlpWorkspace& ws) {
    const NetConfig& cfg = params.config();
    if (input.size() != cfg.input_dim) {
        throw DomainError("input length does not match the network's input_dim");
    }
    const double* a_prev = input.data();
    std::size_t in_dim = cfg.input_dim;
    for (std::size_t l = 0; l < cfg.hidden_layers; ++l) {
        double* a = ws.acts[l].data();
        kernels::matvec(params.weights(l).data(), a_prev, params.bias(l).data(), a,
                        cfg.hidden_width, in_dim);
        for (std::size_t j = 0; j < cfg.hidden_width; ++j) a[j] = std::tanh(a[j]);
        a_prev = a;
        in_dim = cfg.hidden_width;
    }
    const std::size_t out_layer = cfg.hidden_layers;
    const double z = params.bias(out_layer)[0] +
                     kernels::dot(params.weights(out_layer).data(), a_prev, in_dim);
    if (!std::isfinite(z)) {
        throw NumericError("non-finite pre-activation in forward pass");
    }
    return sigmoid(z);
}

inline double clamp_prob(double s) {
    return std::min(std::max(s, kProbEpsilon), 1.0 - kProbEpsilon);
}

inline double bce(double s, double r) {
    const double p = clamp_prob(s);
    return -(r * std::log(p) + (1.0 - r) * std::log(1.0 - p));
}

} // namespace

double forward(const MlpParams& params, std::span<const double> input,
               MlpWorkspace& ws) {
    return forward_impl(params, input, ws);
}

double forward(const MlpParams& params, std::span<const double> input) {
    MlpWorkspace ws;
    ws.resize(params.config());
    return forward_impl(params, input, ws);
}

double loss(const MlpParams& params, const Batch& batch) {
    if (batch.empty()) throw Error("loss of an empty batch is undefined");
    MlpWorkspace ws;
    ws.resize(params.config());
    double acc = 0.0;
    for (const Example& ex : batch) {
        acc += bce(forward_impl(params, ex.input, ws), ex.rating);
    }
    return acc / static_cast<double>(batch.size());
}

double loss_and_grad(const MlpParams& params, const Batch& batch,
                     std::span<double> grad_out, MlpWorkspace& ws) {
    if (batch.empty()) throw Error("loss of an empty batch is undefined");
    if (grad_out.size() != params.parameter_count()) {
        throw Error("gradient buffer has the wrong size");
    }
    const NetConfig& cfg = params.config();
    ws.resize(cfg);
    std::fill(grad_out.begin(), grad_out.end(), 0.0);

    const double inv_n = 1.0 / static_cast<double>(batch.size());
    const std::size_t out_layer = cfg.hidden_layers;
    // grad layout mirrors the parameter layout
    const auto grad_weights = [&](std::size_t l) {
        return grad_out.data() + (params.weights(l).data() - params.flat().data());
    };
    const auto grad_bias = [&](std::size_t l) {
        return grad_out.data() + (params.bias(l).data() - params.flat().data());
    };

    double acc = 0.0;
    for (const Example& ex : batch) {
        const double s = forward_impl(params, ex.input, ws);
        acc += bce(s, ex.rating);

        // d(mean BCE)/dz_out; zero where the clamp flattens the loss
        double dz_out = 0.0;
        if (s > kProbEpsilon && s < 1.0 - kProbEpsilon) {
            dz_out = (s - ex.rating) * inv_n;
        }
        if (dz_out == 0.0) continue;

        const double* a_last = ws.acts[cfg.hidden_layers - 1].data();
        kernels::axpy(dz_out, a_last, grad_weights(out_layer), cfg.hidden_width);
        grad_bias(out_layer)[0] += dz_out;

        // dL/da for the top hidden layer
        std::fill(ws.delta_a.begin(), ws.delta_a.end(), 0.0);
        kernels::axpy(dz_out, params.weights(out_layer).data(), ws.delta_a.data(),
                      cfg.hidden_width);

        for (std::size_t l = cfg.hidden_layers; l-- > 0;) {
            const double* a = ws.acts[l].data();
            for (std::size_t j = 0; j < cfg.hidden_width; ++j) {
                ws.delta_z[j] = ws.delta_a[j] * (1.0 - a[j] * a[j]);
            }
            const double* a_prev = l == 0 ? ex.input.data() : ws.acts[l - 1].data();
            const std::size_t in_dim = l == 0 ? cfg.input_dim : cfg.hidden_width;
            kernels::ger_acc(ws.delta_z.data(), a_prev, grad_weights(l),
                             cfg.hidden_width, in_dim);
            kernels::axpy(1.0, ws.delta_z.data(), grad_bias(l), cfg.hidden_width);
            if (l > 0) {
                std::fill_n(ws.delta_a.data(), cfg.hidden_width, 0.0);
                kernels::matvec_t_acc(params.weights(l).data(), ws.delta_z.data(),
                                      ws.delta_a.data(), cfg.hidden_width,
                                      cfg.hidden_width);
            }
        }
    }
    return acc / static_cast<double>(batch.size());
}

std::vector<double> grad(const MlpParams& params, const Batch& batch) {
    std::vector<double> g(params.parameter_count());
    MlpWorkspace ws;
    loss_and_grad(params, batch, g, ws);
    return g;
}

} // namespace symlab
