#include "obls/online.hpp"

#include <cmath>
#include <fstream>

#include "obls/errors.hpp"
#include "obls/labels.hpp"
#include "snapshot_io.hpp"

namespace obls {

namespace {

double checked_sqrt_lambda(double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw InvalidLambda("lambda must be a positive finite real");
    }
    return std::sqrt(lambda);
}

} // namespace

OnlineBls::OnlineBls(std::size_t broad_dim, std::size_t num_classes, double lambda)
    : weights_(broad_dim, num_classes),
      factor_(LowerTriangularFactor::scaled_identity(
          broad_dim > 0 ? broad_dim : 1, checked_sqrt_lambda(lambda))),
      lambda_(lambda) {
    if (broad_dim == 0 || num_classes == 0) {
        throw InvalidDimension("OnlineBls: dimensions must be >= 1");
    }
}

std::vector<double> OnlineBls::predict(std::span<const double> a) const {
    return left_multiply(a, weights_);
}

void OnlineBls::update(std::span<const double> a, std::span<const double> y_one_hot) {
    if (a.size() != broad_dim() || y_one_hot.size() != num_classes()) {
        throw DimensionMismatch("OnlineBls::update: input lengths disagree with state");
    }
    require_finite(a, "OnlineBls::update");
    if (!is_one_hot(y_one_hot)) {
        throw InvalidLabel("OnlineBls::update: target must be strictly one-hot");
    }

    // residual row y^T - a^T W against the pre-update weights
    std::vector<double> residual = left_multiply(a, weights_);
    for (std::size_t j = 0; j < residual.size(); ++j) {
        residual[j] = y_one_hot[j] - residual[j];
    }

    // factor first, so the solve runs against L^(k)
    rank_one_update_in_place(factor_, a);

    DenseMatrix rhs = outer_product(a, residual);
    DenseMatrix mid = forward_substitute(factor_, rhs);
    DenseMatrix delta = backward_substitute(factor_, mid);
    add_in_place(weights_, delta);
    ++samples_seen_;
}

void save_snapshot(const OnlineBls& state, std::uint64_t mapper_seed,
                   const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw FileNotFound("save_snapshot: cannot open " + path.string());
    }
    const std::size_t m = state.broad_dim();
    const std::size_t c = state.num_classes();
    nlohmann::json header{
        {"format", "obls-snapshot"}, {"version", 1},  {"kind", "online-bls"},
        {"m", m},                    {"c", c},        {"lambda", state.lambda()},
        {"k", state.samples_seen()}, {"mapper_seed", mapper_seed},
        {"blob_doubles", m * c + m * m},
    };
    detail::write_snapshot_header(out, header);
    detail::write_doubles_le(out, state.weights().data());
    detail::write_doubles_le(out, state.factor().matrix().data());
}

OnlineSnapshot OnlineSnapshot::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FileNotFound("OnlineSnapshot::load: cannot open " + path.string());
    }
    nlohmann::json header = detail::read_snapshot_header(in, "online-bls");
    const auto m = header.at("m").get<std::size_t>();
    const auto c = header.at("c").get<std::size_t>();

    OnlineBls state(m, c, header.at("lambda").get<double>());
    detail::read_doubles_le(in, state.weights_.data());
    DenseMatrix factor(m, m);
    detail::read_doubles_le(in, factor.data());
    state.factor_ = LowerTriangularFactor(std::move(factor));
    state.samples_seen_ = header.at("k").get<std::size_t>();
    return OnlineSnapshot{std::move(state), header.at("mapper_seed").get<std::uint64_t>()};
}

} // namespace obls
