#include <doctest.h>

#include <cmath>
#include <sstream>

#include "symlab/mlp.hpp"
#include "symlab/rng.hpp"

using namespace symlab;

namespace {

Batch random_batch(Rng& rng, std::size_t n, std::size_t dim) {
    Batch batch;
    for (std::size_t i = 0; i < n; ++i) {
        Example ex;
        ex.input.resize(dim);
        for (double& v : ex.input) v = rng.below(2) ? 1.0 : 0.0;
        ex.rating = rng.coin() ? 1.0 : 0.0;
        batch.push_back(std::move(ex));
    }
    return batch;
}

MlpParams random_params(const NetConfig& config, std::uint64_t seed) {
    MlpParams params = MlpParams::init(config, seed);
    // shift biases off zero so the gradient check exercises them
    Rng rng(seed ^ 0xbeef);
    for (double& v : params.flat()) v += rng.uniform(-0.05, 0.05);
    return params;
}

// central finite differences, the independent gradient oracle
std::vector<double> fd_gradient(MlpParams params, const Batch& batch, double h) {
    std::vector<double> g(params.parameter_count());
    const std::span<double> theta = params.flat();
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double saved = theta[i];
        theta[i] = saved + h;
        const double fp = loss(params, batch);
        theta[i] = saved - h;
        const double fm = loss(params, batch);
        theta[i] = saved;
        g[i] = (fp - fm) / (2.0 * h);
    }
    return g;
}

} // namespace

TEST_CASE("zero network outputs 0.5 everywhere") {
    const NetConfig config{4, 1, 3};
    const MlpParams params(config);
    CHECK(forward(params, std::vector<double>{1, 0, 1, 0}) == 0.5);
    CHECK(forward(params, std::vector<double>{0, 0, 0, 0}) == 0.5);
}

TEST_CASE("single-unit forward matches the hand computation") {
    // one hidden unit on a 2-bit input: w1=[1,-1], b1=0, w2=[1], b2=0
    NetConfig config{2, 1, 1};
    MlpParams params(config);
    auto theta = params.flat();
    // layout: W0 (1x2), b0 (1), W1 (1x1), b1 (1)
    theta[0] = 1.0;
    theta[1] = -1.0;
    theta[2] = 0.0;
    theta[3] = 1.0;
    theta[4] = 0.0;
    const double out = forward(params, std::vector<double>{1, 0});
    // sigmoid(tanh(1)); value frozen from a high-precision evaluation
    CHECK(out == doctest::Approx(0.6816997421945262).epsilon(1e-12));
}

TEST_CASE("forward output lies strictly inside (0,1)") {
    Rng rng(5);
    for (const std::size_t layers : {1u, 2u, 3u}) {
        const NetConfig config{10, layers, 8};
        const MlpParams params = random_params(config, rng.next_u64());
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<double> input(10);
            for (double& v : input) v = rng.below(2) ? 1.0 : 0.0;
            const double s = forward(params, input);
            REQUIRE(s > 0.0);
            REQUIRE(s < 1.0);
        }
    }
}

TEST_CASE("forward rejects wrong input sizes") {
    const MlpParams params(NetConfig{4, 1, 2});
    CHECK_THROWS_AS(forward(params, std::vector<double>{1, 0}), DomainError);
}

TEST_CASE("loss: analytic spot values") {
    const NetConfig config{2, 1, 1};
    const MlpParams zero(config); // all outputs 0.5
    Batch batch;
    batch.push_back(Example{{1, 0}, 1.0});
    batch.push_back(Example{{0, 1}, 0.0});
    CHECK(loss(zero, batch) == doctest::Approx(std::log(2.0)).epsilon(1e-15));

    // single example, r=1, s=0.25: loss = -log(0.25)
    MlpParams params(config);
    auto theta = params.flat();
    // hidden path zeroed; the output bias alone sets s = sigmoid(logit(0.25))
    theta[4] = std::log(0.25 / 0.75);
    Batch one;
    one.push_back(Example{{1, 0}, 1.0});
    CHECK(loss(params, one) == doctest::Approx(1.3862943611198906).epsilon(1e-12));

    CHECK_THROWS_AS(loss(zero, Batch{}), Error);
}

TEST_CASE("gradient dimension matches the parameter count") {
    for (const std::size_t layers : {1u, 2u, 3u}) {
        const NetConfig config{6, layers, 5};
        const MlpParams params = MlpParams::init(config, 1);
        Rng rng(layers);
        const Batch batch = random_batch(rng, 4, 6);
        CHECK(grad(params, batch).size() == params.parameter_count());
    }
}

TEST_CASE("zero-parameter network with r=0.5 targets has zero output-bias gradient") {
    const NetConfig config{3, 1, 4};
    const MlpParams params(config);
    Batch batch;
    batch.push_back(Example{{1, 0, 1}, 0.5});
    batch.push_back(Example{{0, 1, 0}, 0.5});
    const auto g = grad(params, batch);
    CHECK(g.back() == 0.0); // output bias is the last flat entry
}

TEST_CASE("backprop agrees with central finite differences") {
    Rng rng(321);
    for (const std::size_t layers : {1u, 2u, 3u}) {
        const NetConfig config{7, layers, 6};
        for (int draw = 0; draw < 5; ++draw) {
            const MlpParams params = random_params(config, rng.next_u64());
            const Batch batch = random_batch(rng, 5, 7);
            const auto analytic = grad(params, batch);
            const auto numeric = fd_gradient(params, batch, 1e-5);
            for (std::size_t i = 0; i < analytic.size(); ++i) {
                const double denom = std::max(std::abs(numeric[i]), 1e-3);
                REQUIRE(std::abs(analytic[i] - numeric[i]) / denom < 1e-5);
            }
        }
    }
}

TEST_CASE("permuting input coordinates and first-layer columns fixes the output") {
    // the structural fact behind the learner's statistical yz-invariance
    const NetConfig config{6, 2, 5};
    const MlpParams params = MlpParams::init(config, 77);
    Rng rng(8);
    std::vector<std::size_t> perm(6);
    for (std::size_t i = 0; i < 6; ++i) perm[i] = i;
    rng.shuffle(perm);

    MlpParams permuted = params;
    auto theta = permuted.flat();
    // first layer weights are W0[j*6 + c]; move column c to perm[c]
    for (std::size_t j = 0; j < 5; ++j) {
        for (std::size_t c = 0; c < 6; ++c) {
            theta[j * 6 + perm[c]] = params.flat()[j * 6 + c];
        }
    }
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> input(6), mapped(6);
        for (double& v : input) v = rng.below(2) ? 1.0 : 0.0;
        for (std::size_t c = 0; c < 6; ++c) mapped[perm[c]] = input[c];
        REQUIRE(forward(permuted, mapped) == forward(params, input));
    }
}

TEST_CASE("loss decreases along the negative gradient") {
    Rng rng(99);
    const NetConfig config{5, 2, 4};
    MlpParams params = random_params(config, 31);
    const Batch batch = random_batch(rng, 6, 5);
    const double f0 = loss(params, batch);
    const auto g = grad(params, batch);
    double gnorm2 = 0.0;
    for (const double gi : g) gnorm2 += gi * gi;
    REQUIRE(gnorm2 > 0.0);
    const double step = 1e-4 / std::sqrt(gnorm2);
    auto theta = params.flat();
    for (std::size_t i = 0; i < theta.size(); ++i) theta[i] -= step * g[i];
    CHECK(loss(params, batch) < f0);
}

TEST_CASE("init_params: bounds, zero biases, determinism, seed sensitivity") {
    const NetConfig config{9, 2, 7};
    const MlpParams a = MlpParams::init(config, 5);
    const MlpParams b = MlpParams::init(config, 5);
    CHECK(std::equal(a.flat().begin(), a.flat().end(), b.flat().begin()));

    int differing = 0;
    for (std::uint64_t s = 0; s < 10; ++s) {
        const MlpParams c = MlpParams::init(config, 1000 + s);
        const MlpParams d = MlpParams::init(config, 2000 + s);
        differing +=
            !std::equal(c.flat().begin(), c.flat().end(), d.flat().begin()) ? 1 : 0;
    }
    CHECK(differing == 10);

    for (std::size_t l = 0; l < a.layer_count(); ++l) {
        const double bound = 1.0 / std::sqrt(static_cast<double>(a.layer_cols(l)));
        for (const double w : a.weights(l)) REQUIRE(std::abs(w) <= bound);
        for (const double bias : a.bias(l)) REQUIRE(bias == 0.0);
    }
}

TEST_CASE("flatten/unflatten and file round trips are bit-exact") {
    for (const std::size_t layers : {1u, 2u, 3u}) {
        const NetConfig config{13, layers, 4};
        const MlpParams params = MlpParams::init(config, layers * 17);
        std::stringstream buffer;
        params.save(buffer);
        const MlpParams back = MlpParams::load(buffer);
        REQUIRE(back.config() == config);
        REQUIRE(back.parameter_count() == params.parameter_count());
        REQUIRE(std::equal(params.flat().begin(), params.flat().end(),
                           back.flat().begin()));
    }
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(validate(NetConfig{0, 1, 4}), Error);
    CHECK_THROWS_AS(validate(NetConfig{4, 0, 4}), Error);
    CHECK_THROWS_AS(validate(NetConfig{4, 4, 4}), Error);
    CHECK_THROWS_AS(validate(NetConfig{4, 1, 0}), Error);
    CHECK_NOTHROW(validate(NetConfig{4, 3, 1}));
}
