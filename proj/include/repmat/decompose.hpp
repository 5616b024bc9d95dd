#pragma once

#include "repmat/error.hpp"
#include "repmat/exact.hpp"
#include "repmat/weights.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace repmat {

/// Irreducible components -> multiplicity. Keys share a common rank; iteration order is
/// lexicographically descending, e.g. (2,0) before (1,1).
using MultiplicityMap = std::map<HighestWeight, Integer, std::greater<>>;

/// The dimension-weighted random highest weight of a representation: each irreducible component
/// lambda carries probability n_lambda * dim(lambda) / dim(V).
class WeightMeasure {
public:
    struct Entry {
        Integer multiplicity;
        Rational probability;
    };
    using Entries = std::map<HighestWeight, Entry, std::greater<>>;

    /// Throws Error(empty_input) for an empty map, Error(rank_mismatch) for mixed ranks.
    explicit WeightMeasure(const MultiplicityMap& components);

    int rank() const noexcept { return rank_; }
    const Integer& total_dim() const noexcept { return total_dim_; }
    const Entries& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }

    Rational probability(const HighestWeight& w) const;
    Integer multiplicity(const HighestWeight& w) const;

    /// E[lambda] coordinatewise, exact.
    std::vector<Rational> mean() const;

private:
    int rank_ = 0;
    Integer total_dim_;
    Entries entries_;
};

/// Littlewood-Richardson decomposition of V_a (x) V_b, truncated to at most d rows.
MultiplicityMap tensor_decompose(const HighestWeight& a, const HighestWeight& b);

/// Restriction U(d) -> U(d-1): every interlacing mu with multiplicity 1.
MultiplicityMap branch_one_step(const HighestWeight& w);

/// Iterated branching U(d') -> U(d) along the top-left block embedding.
MultiplicityMap restrict_multiplicities(const HighestWeight& w, int target_rank);
WeightMeasure restrict(const HighestWeight& w, int target_rank);

WeightMeasure measure_of_rep(std::span<const std::pair<HighestWeight, Integer>> parts);

struct TensorPowerOptions {
    std::size_t state_cap = 1'000'000;
};

/// Multiplicities of V_w^{(x) n}, by dynamic programming over n.
MultiplicityMap tensor_power_multiplicities(const HighestWeight& w, int n, const TensorPowerOptions& opts = {});
WeightMeasure tensor_power_measure(const HighestWeight& w, int n, const TensorPowerOptions& opts = {});

/// p_k(y) = sum_i y_i^k.
template <class Scalar>
Scalar power_sum(std::span<const Scalar> y, int k) {
    Scalar s(0);
    for (const auto& v : y) {
        Scalar t(1);
        for (int j = 0; j < k; ++j) t *= v;
        s += t;
    }
    return s;
}

/// E[ prod_j p_{ks[j]}(eps * lambda - center) ] under the measure, in the chosen scalar type:
/// `Rational` for exact results, `Real50` or `double` when eps is irrational.
template <class Scalar>
Scalar moments_power_sums(const WeightMeasure& m, std::span<const int> ks, const Scalar& eps,
                          std::optional<std::span<const Scalar>> center = std::nullopt) {
    const int d = m.rank();
    if (center && static_cast<int>(center->size()) != d)
        throw Error(ErrorCode::rank_mismatch, "center vector has wrong length");
    for (int k : ks)
        if (k < 1) throw Error(ErrorCode::invalid_argument, "power-sum indices must be positive");
    Scalar total(0);
    std::vector<Scalar> y(static_cast<std::size_t>(d));
    for (const auto& [w, entry] : m.entries()) {
        for (int i = 0; i < d; ++i) {
            y[static_cast<std::size_t>(i)] = eps * Scalar(w[i]);
            if (center) y[static_cast<std::size_t>(i)] -= (*center)[static_cast<std::size_t>(i)];
        }
        Scalar prod(1);
        for (int k : ks) prod *= power_sum<Scalar>(y, k);
        total += rational_cast<Scalar>(entry.probability) * prod;
    }
    return total;
}

}  // namespace repmat
