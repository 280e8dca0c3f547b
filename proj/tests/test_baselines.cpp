#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>

#include "obls/baselines.hpp"
#include "obls/errors.hpp"
#include "obls/labels.hpp"
#include "obls/online.hpp"
#include "obls/rng.hpp"
#include "support/oracles.hpp"

using namespace obls;

namespace {

struct LabeledStream {
    std::vector<std::vector<double>> features;
    std::vector<std::vector<double>> targets;
};

LabeledStream random_stream(Rng& rng, std::size_t n, std::size_t m, std::size_t c) {
    LabeledStream s;
    for (std::size_t k = 0; k < n; ++k) {
        s.features.push_back(oracles::random_vector(rng, m));
        s.targets.push_back(one_hot(rng.below(c), c));
    }
    return s;
}

} // namespace

TEST_SUITE("baselines") {

TEST_CASE("ibls first sample matches (a a^T + lambda I)^{-1} a y^T") {
    IBls model(2, 1, 1e-8);
    model.update(std::vector<double>{1.0, 0.0}, std::vector<double>{1.0});
    CHECK(model.weights()(0, 0) == doctest::Approx(1.0 / (1.0 + 1e-8)).epsilon(1e-12));
    CHECK(model.weights()(1, 0) == doctest::Approx(0.0));
}

TEST_CASE("ibls tracks the minimum-norm least-squares solution on full-row-rank prefixes") {
    Rng rng(400);
    const std::size_t m = 12;
    IBls model(m, 2, 1e-12);
    std::vector<std::vector<double>> features;
    std::vector<std::vector<double>> targets;
    for (std::size_t k = 0; k < 8; ++k) {
        const auto a = oracles::random_vector(rng, m);
        const auto y = one_hot(rng.below(2), 2);
        model.update(a, y);
        features.push_back(a);
        targets.push_back(y);
        const DenseMatrix oracle = oracles::min_norm_least_squares(features, targets);
        CHECK(oracles::relative_frobenius_gap(model.weights(), oracle) <= 1e-6);
    }
}

TEST_CASE("ibls per-update time increases with the stream length") {
    using clock_type = std::chrono::steady_clock;
    Rng rng(401);
    const std::size_t m = 60;
    IBls model(m, 2, 1e-8);
    std::vector<double> micros;
    for (std::size_t k = 0; k < 400; ++k) {
        const auto a = oracles::random_vector(rng, m);
        const auto y = one_hot(rng.below(2), 2);
        const auto t0 = clock_type::now();
        model.update(a, y);
        const auto t1 = clock_type::now();
        micros.push_back(std::chrono::duration<double, std::micro>(t1 - t0).count());
    }
    double early = 0.0;
    double late = 0.0;
    for (std::size_t k = 0; k < 100; ++k) {
        early += micros[k];
        late += micros[300 + k];
    }
    INFO("first-100 mean ", early / 100.0, "us, last-100 mean ", late / 100.0, "us");
    CHECK(late > early);
}

TEST_CASE("ribls first update coincides with online-bls") {
    Rng rng(402);
    const auto a = oracles::random_vector(rng, 6);
    const auto y = one_hot(1, 3);
    // a well-conditioned lambda isolates the algebraic identity of the two
    // routes; the ill-conditioned contrast is its own acceptance criterion
    RiBls inverse_model(6, 3, 1e-2);
    OnlineBls chol_model(6, 3, 1e-2);
    inverse_model.update(a, y);
    chol_model.update(a, y);
    CHECK(oracles::relative_frobenius_gap(inverse_model.weights(), chol_model.weights()) <= 1e-10);
}

TEST_CASE("ribls equals the batch ridge oracle on every prefix") {
    Rng rng(403);
    const double lambda = 1e-4;
    RiBls model(10, 2, lambda);
    LabeledStream stream = random_stream(rng, 100, 10, 2);
    std::vector<std::vector<double>> features;
    std::vector<std::vector<double>> targets;
    for (std::size_t k = 0; k < 100; ++k) {
        model.update(stream.features[k], stream.targets[k]);
        features.push_back(stream.features[k]);
        targets.push_back(stream.targets[k]);
        const DenseMatrix oracle = oracles::batch_ridge(features, targets, lambda);
        CHECK(oracles::relative_frobenius_gap(model.weights(), oracle) <= 1e-6);
    }
}

TEST_CASE("ribls scatter stays exactly symmetric") {
    Rng rng(404);
    RiBls model(8, 2, 1e-8);
    for (int k = 0; k < 50; ++k) {
        model.update(oracles::random_vector(rng, 8), one_hot(rng.below(2), 2));
    }
    const DenseMatrix& u = model.scatter();
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            CHECK(u(i, j) == u(j, i));
        }
    }
}

TEST_CASE("blscil with zero correlation weights tracks unregularized RLS") {
    Rng rng(405);
    const std::size_t m = 8;
    BlsCil model(m, 2, 0.0, 0.0);
    DenseMatrix gram = DenseMatrix::identity(m); // K^(1) starts from I + a a^T
    DenseMatrix cross(m, 2);
    for (int k = 0; k < 80; ++k) {
        const auto a = oracles::random_vector(rng, m);
        const auto y = one_hot(rng.below(2), 2);
        model.update(a, y);
        add_in_place(gram, outer_product(a, a));
        add_in_place(cross, outer_product(a, y));
        const DenseMatrix oracle = oracles::gauss_solve(gram, cross);
        CHECK(oracles::relative_frobenius_gap(model.weights(), oracle) <= 1e-8);
    }
}

TEST_CASE("blscil branch selection follows label agreement") {
    Rng rng(406);
    const std::size_t m = 4;
    const double lambda1 = 0.3;
    const double lambda2 = 0.2;
    const auto first = oracles::random_vector(rng, m);
    const auto second = oracles::random_vector(rng, m);

    // H = s s^T + lam * (f f^T - s f^T + s s^T - f s^T)
    auto expected_increment = [&](double lam) {
        DenseMatrix inner = subtract(add(outer_product(first, first), outer_product(second, second)),
                                     add(outer_product(second, first), outer_product(first, second)));
        scale_in_place(inner, lam);
        return add(outer_product(second, second), inner);
    };

    SUBCASE("same label uses +lambda2") {
        BlsCil model(m, 2, lambda1, lambda2);
        model.update(first, one_hot(0, 2));
        const DenseMatrix before = model.correlation();
        model.update(second, one_hot(0, 2));
        const DenseMatrix observed = subtract(model.correlation(), before);
        CHECK(oracles::relative_frobenius_gap(observed, expected_increment(lambda2)) <= 1e-12);
    }
    SUBCASE("different label uses -lambda1") {
        BlsCil model(m, 2, lambda1, lambda2);
        model.update(first, one_hot(0, 2));
        const DenseMatrix before = model.correlation();
        model.update(second, one_hot(1, 2));
        const DenseMatrix observed = subtract(model.correlation(), before);
        CHECK(oracles::relative_frobenius_gap(observed, expected_increment(-lambda1)) <= 1e-12);
    }
}

TEST_CASE("blscil runs stably at the paper's lambda1 = lambda2 = 0.1") {
    Rng rng(407);
    BlsCil model(10, 3, 0.1, 0.1);
    for (int k = 0; k < 200; ++k) {
        model.update(oracles::random_vector(rng, 10), one_hot(rng.below(3), 3));
    }
    CHECK(all_finite(model.weights()));
    const DenseMatrix& k_matrix = model.correlation();
    for (std::size_t i = 0; i < 10; ++i) {
        for (std::size_t j = 0; j < 10; ++j) {
            CHECK(k_matrix(i, j) == k_matrix(j, i));
        }
    }
}

TEST_CASE("baselines validate inputs") {
    IBls ibls(3, 2, 1e-8);
    RiBls ribls(3, 2, 1e-8);
    BlsCil blscil(3, 2, 0.1, 0.1);
    const std::vector<double> short_vec{1.0};
    CHECK_THROWS_AS(ibls.update(short_vec, one_hot(0, 2)), DimensionMismatch);
    CHECK_THROWS_AS(ribls.update(short_vec, one_hot(0, 2)), DimensionMismatch);
    CHECK_THROWS_AS(blscil.update(short_vec, one_hot(0, 2)), DimensionMismatch);
    CHECK_THROWS_AS(IBls(3, 2, 0.0), InvalidLambda);
    CHECK_THROWS_AS(RiBls(3, 2, -1.0), InvalidLambda);
    CHECK_THROWS_AS(BlsCil(3, 2, -0.1, 0.1), InvalidLambda);
}

} // TEST_SUITE
