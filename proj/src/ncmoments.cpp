#include "repmat/ncmoments.hpp"

#include "repmat/partitions.hpp"

#include <string>

namespace repmat {

LieElement LieElement::centered() const {
    const double t = h.normalized_trace();
    return LieElement{h + HermitianMatrix::identity(h.rows()) * (-t)};
}

LieElement bracket(const LieElement& x, const LieElement& y) {
    if (x.dim() != y.dim()) throw Error(ErrorCode::rank_mismatch, "bracket: rank mismatch");
    const auto& a = x.h.matrix();
    const auto& b = y.h.matrix();
    const HermitianMatrix::Matrix c = std::complex<double>(0, 1) * (a * b - b * a);
    return LieElement{HermitianMatrix(c)};
}

namespace {

void check_common_rank(std::span<const LieElement> xs) {
    for (const auto& x : xs)
        if (x.dim() != xs.front().dim()) throw Error(ErrorCode::rank_mismatch, "Lie elements of mixed rank");
}

}  // namespace

std::complex<double> tensor_power_trace_moment(std::span<const LieElement> xs, long long n, bool centered,
                                               double eps, const TraceMomentOptions& opts) {
    const int k = static_cast<int>(xs.size());
    if (k < 1) throw Error(ErrorCode::invalid_argument, "moment needs k >= 1 elements");
    if (k > opts.max_k)
        throw Error(ErrorCode::k_cap_exceeded,
                    "moment order k = " + std::to_string(k) + " exceeds the cap " + std::to_string(opts.max_k));
    if (n < 1) throw Error(ErrorCode::invalid_argument, "tensor power needs n >= 1");
    check_common_rank(xs);

    const Eigen::Index d = xs.front().h.rows();
    std::vector<HermitianMatrix::Matrix> legs;
    legs.reserve(xs.size());
    for (const auto& x : xs) legs.push_back(centered ? x.centered().h.matrix() : x.h.matrix());

    std::complex<double> total = 0;
    for_each_set_partition(k, [&](const SetPartition& p) {
        const long long blocks = p.block_count();
        if (blocks > n) return;  // falling factorial vanishes
        double falling = 1;
        for (long long j = 0; j < blocks; ++j) falling *= static_cast<double>(n - j);
        std::complex<double> term = falling;
        for (const auto& block : p.blocks) {
            HermitianMatrix::Matrix prod = legs[static_cast<std::size_t>(block.front())];
            for (std::size_t t = 1; t < block.size(); ++t) prod = prod * legs[static_cast<std::size_t>(block[t])];
            term *= prod.trace() / static_cast<double>(d);
        }
        total += term;
    });
    double scale = 1;
    for (int i = 0; i < k; ++i) scale *= eps;
    return total * scale;
}

double wick_limit_moment(std::span<const LieElement> xs) {
    const int k = static_cast<int>(xs.size());
    if (k == 0) return 1.0;
    check_common_rank(xs);
    if (k % 2 != 0) return 0.0;
    const double d = static_cast<double>(xs.front().h.rows());
    std::vector<HermitianMatrix::Matrix> legs;
    legs.reserve(xs.size());
    for (const auto& x : xs) legs.push_back(x.centered().h.matrix());
    double total = 0;
    for_each_pairing(k, [&](const SetPartition& p) {
        double term = 1;
        for (const auto& pair : p.blocks)
            term *= (legs[static_cast<std::size_t>(pair[0])] * legs[static_cast<std::size_t>(pair[1])]).trace().real() / d;
        total += term;
    });
    return total;
}

}  // namespace repmat
