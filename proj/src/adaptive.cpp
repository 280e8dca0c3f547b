#include "obls/adaptive.hpp"

#include <cmath>
#include <fstream>

#include "obls/errors.hpp"
#include "obls/labels.hpp"
#include "snapshot_io.hpp"

namespace obls {

AdaptiveBls::AdaptiveBls(std::size_t broad_dim, std::size_t num_classes, double lambda, double mu)
    : weights_(broad_dim, num_classes),
      scatter_(broad_dim, broad_dim),
      lambda_(lambda),
      mu_(mu) {
    if (broad_dim == 0 || num_classes == 0) {
        throw InvalidDimension("AdaptiveBls: dimensions must be >= 1");
    }
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw InvalidLambda("AdaptiveBls: lambda must be a positive finite real");
    }
    if (!(mu > 0.0) || !(mu <= 1.0)) {
        throw InvalidDecay("AdaptiveBls: decay factor must lie in (0, 1]");
    }
}

std::vector<double> AdaptiveBls::predict(std::span<const double> a) const {
    return left_multiply(a, weights_);
}

void AdaptiveBls::update(std::span<const double> a, std::span<const double> y_one_hot) {
    if (a.size() != broad_dim() || y_one_hot.size() != num_classes()) {
        throw DimensionMismatch("AdaptiveBls::update: input lengths disagree with state");
    }
    require_finite(a, "AdaptiveBls::update");
    if (!is_one_hot(y_one_hot)) {
        throw InvalidLabel("AdaptiveBls::update: target must be strictly one-hot");
    }

    std::vector<double> residual = left_multiply(a, weights_);
    for (std::size_t j = 0; j < residual.size(); ++j) {
        residual[j] = y_one_hot[j] - residual[j];
    }

    // P <- mu*P + a a^T; symmetric exactly because both terms are
    const std::size_t m = broad_dim();
    for (std::size_t i = 0; i < m; ++i) {
        double* row = scatter_.row(i);
        const double ai = a[i];
        for (std::size_t j = 0; j < m; ++j) {
            row[j] = mu_ * row[j] + ai * a[j];
        }
    }

    DenseMatrix regularized = scatter_;
    for (std::size_t i = 0; i < m; ++i) {
        regularized(i, i) += lambda_;
    }
    // PSD + lambda > 0 keeps this factorizable; a throw here means the
    // scatter left the PSD cone, which the update rule cannot produce
    LowerTriangularFactor factor = cholesky(regularized);

    DenseMatrix rhs = outer_product(a, residual);
    DenseMatrix mid = forward_substitute(factor, rhs);
    DenseMatrix delta = backward_substitute(factor, mid);
    add_in_place(weights_, delta);
    ++samples_seen_;
}

void save_snapshot(const AdaptiveBls& state, std::uint64_t mapper_seed,
                   const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw FileNotFound("save_snapshot: cannot open " + path.string());
    }
    const std::size_t m = state.broad_dim();
    const std::size_t c = state.num_classes();
    nlohmann::json header{
        {"format", "obls-snapshot"}, {"version", 1},  {"kind", "online-bls-ada"},
        {"m", m},                    {"c", c},        {"lambda", state.lambda()},
        {"mu", state.mu()},          {"k", state.samples_seen()},
        {"mapper_seed", mapper_seed},
        {"blob_doubles", m * c + m * m},
    };
    detail::write_snapshot_header(out, header);
    detail::write_doubles_le(out, state.weights().data());
    detail::write_doubles_le(out, state.scatter().data());
}

AdaptiveSnapshot AdaptiveSnapshot::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FileNotFound("AdaptiveSnapshot::load: cannot open " + path.string());
    }
    nlohmann::json header = detail::read_snapshot_header(in, "online-bls-ada");
    const auto m = header.at("m").get<std::size_t>();
    const auto c = header.at("c").get<std::size_t>();

    AdaptiveBls state(m, c, header.at("lambda").get<double>(), header.at("mu").get<double>());
    detail::read_doubles_le(in, state.weights_.data());
    detail::read_doubles_le(in, state.scatter_.data());
    state.samples_seen_ = header.at("k").get<std::size_t>();
    return AdaptiveSnapshot{std::move(state), header.at("mapper_seed").get<std::uint64_t>()};
}

} // namespace obls
