#include "repmat/decompose.hpp"

#include <algorithm>
#include <string>

namespace repmat {

WeightMeasure::WeightMeasure(const MultiplicityMap& components) {
    if (components.empty()) throw Error(ErrorCode::empty_input, "weight measure needs at least one component");
    rank_ = components.begin()->first.rank();
    total_dim_ = 0;
    for (const auto& [w, mult] : components) {
        if (w.rank() != rank_) throw Error(ErrorCode::rank_mismatch, "components of mixed rank");
        if (mult < 1) throw Error(ErrorCode::invalid_argument, "multiplicities must be >= 1");
        total_dim_ += mult * dim_weyl(w);
    }
    for (const auto& [w, mult] : components)
        entries_.emplace(w, Entry{mult, Rational(mult * dim_weyl(w), total_dim_)});
}

Rational WeightMeasure::probability(const HighestWeight& w) const {
    auto it = entries_.find(w);
    return it == entries_.end() ? Rational(0) : it->second.probability;
}

Integer WeightMeasure::multiplicity(const HighestWeight& w) const {
    auto it = entries_.find(w);
    return it == entries_.end() ? Integer(0) : it->second.multiplicity;
}

std::vector<Rational> WeightMeasure::mean() const {
    std::vector<Rational> m(static_cast<std::size_t>(rank_), Rational(0));
    for (const auto& [w, e] : entries_)
        for (int i = 0; i < rank_; ++i) m[static_cast<std::size_t>(i)] += e.probability * w[i];
    return m;
}

namespace {

// Enumerates Littlewood-Richardson tableaux of shape nu/inner with content `content`, row by
// row. counts[r][l] is the number of letters l+1 in row r. Conditions per row r:
//   content:   used[l] + c_l <= content[l]
//   lattice:   used[l] + c_l <= used[l-1] over rows above r (row r is read right to left)
//   columns:   inner[r] + S_r(l) <= inner[r-1] + S_{r-1}(l-1)   with S prefix sums of counts
class LrEnumerator {
public:
    LrEnumerator(std::vector<std::int64_t> inner, std::vector<std::int64_t> content, int rows)
        : inner_(std::move(inner)), content_(std::move(content)), rows_(rows),
          used_(content_.size(), 0), prev_prefix_(content_.size() + 1, 0), counts_(static_cast<std::size_t>(rows), std::vector<std::int64_t>(content_.size(), 0)),
          shape_(static_cast<std::size_t>(rows), 0) {}

    MultiplicityMap run() {
        row(0);
        return std::move(result_);
    }

private:
    void row(int r) {
        if (r == rows_) {
            for (std::size_t l = 0; l < content_.size(); ++l)
                if (used_[l] != content_[l]) return;
            auto [it, inserted] = result_.try_emplace(HighestWeight(shape_), Integer(1));
            if (!inserted) it->second += 1;
            return;
        }
        letter(r, 0, 0);
    }

    // Chooses c_l for letter index l (0-based) in row r; `prefix` is S_r(l) accumulated so far.
    void letter(int r, std::size_t l, std::int64_t prefix) {
        const std::size_t max_letters = std::min(content_.size(), static_cast<std::size_t>(r + 1));
        const auto ri = static_cast<std::size_t>(r);
        if (l == max_letters) {
            // Remaining letters are absent in this row; the column bound for them is implied.
            if (r > 0) {
                for (std::size_t k = l; k < content_.size(); ++k)
                    if (inner_[ri] + prefix > inner_[ri - 1] + prev_prefix_[k]) return;
            }
            shape_[ri] = inner_[ri] + prefix;
            auto saved_prev = prev_prefix_;
            std::vector<std::int64_t> this_prefix(content_.size() + 1, 0);
            for (std::size_t k = 0; k < content_.size(); ++k)
                this_prefix[k + 1] = this_prefix[k] + (k < max_letters ? counts_[ri][k] : 0);
            prev_prefix_ = this_prefix;
            row(r + 1);
            prev_prefix_ = std::move(saved_prev);
            return;
        }
        std::int64_t hi = content_[l] - used_[l];
        if (l > 0) hi = std::min(hi, used_[l - 1] - counts_[ri][l - 1] - used_[l]);
        if (r > 0) hi = std::min(hi, inner_[ri - 1] + prev_prefix_[l] - inner_[ri] - prefix);
        for (std::int64_t c = 0; c <= hi; ++c) {
            counts_[ri][l] = c;
            used_[l] += c;
            letter(r, l + 1, prefix + c);
            used_[l] -= c;
        }
        counts_[ri][l] = 0;
    }

    std::vector<std::int64_t> inner_;
    std::vector<std::int64_t> content_;
    int rows_;
    std::vector<std::int64_t> used_;
    std::vector<std::int64_t> prev_prefix_;
    std::vector<std::vector<std::int64_t>> counts_;
    std::vector<std::int64_t> shape_;
    MultiplicityMap result_;
};

std::vector<std::int64_t> partition_part(const HighestWeight& w, std::int64_t shift) {
    std::vector<std::int64_t> p(w.entries().begin(), w.entries().end());
    for (auto& x : p) x -= shift;
    return p;
}

// Pieri rule for V_nu (x) V_(1,0,...,0): add one box to any row keeping dominance.
void accumulate_pieri(const HighestWeight& nu, const Integer& mult, MultiplicityMap& out) {
    std::vector<std::int64_t> e(nu.entries().begin(), nu.entries().end());
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i == 0 || e[i - 1] > e[i]) {
            ++e[i];
            out[HighestWeight(e)] += mult;
            --e[i];
        }
    }
}

}  // namespace

MultiplicityMap tensor_decompose(const HighestWeight& a, const HighestWeight& b) {
    if (a.rank() != b.rank()) throw Error(ErrorCode::rank_mismatch, "tensor_decompose: rank mismatch");
    const int d = a.rank();
    const std::int64_t sa = a[d - 1];
    const std::int64_t sb = b[d - 1];
    const auto inner = partition_part(a, sa);
    auto content = partition_part(b, sb);
    while (!content.empty() && content.back() == 0) content.pop_back();
    if (content.empty()) return MultiplicityMap{{a.twisted(sb), Integer(1)}};

    MultiplicityMap shifted = LrEnumerator(inner, content, d).run();
    if (sa + sb == 0) return shifted;
    MultiplicityMap out;
    for (auto& [nu, c] : shifted) out.emplace(nu.twisted(sa + sb), std::move(c));
    return out;
}

MultiplicityMap branch_one_step(const HighestWeight& w) {
    const int d = w.rank();
    if (d < 2) throw Error(ErrorCode::rank_constraint, "branch_one_step needs d >= 2");
    MultiplicityMap out;
    std::vector<std::int64_t> mu(static_cast<std::size_t>(d - 1));
    // odometer over lambda_{i+1} <= mu_i <= lambda_i
    for (int i = 0; i < d - 1; ++i) mu[static_cast<std::size_t>(i)] = w[i + 1];
    while (true) {
        out.emplace(HighestWeight(mu), Integer(1));
        int i = d - 2;
        while (i >= 0 && mu[static_cast<std::size_t>(i)] == w[i]) {
            mu[static_cast<std::size_t>(i)] = w[i + 1];
            --i;
        }
        if (i < 0) break;
        ++mu[static_cast<std::size_t>(i)];
    }
    return out;
}

MultiplicityMap restrict_multiplicities(const HighestWeight& w, int target_rank) {
    if (target_rank < 1 || target_rank >= w.rank())
        throw Error(ErrorCode::rank_constraint, "restrict needs 1 <= d < d'");
    MultiplicityMap current{{w, Integer(1)}};
    for (int level = w.rank(); level > target_rank; --level) {
        MultiplicityMap next;
        for (const auto& [lambda, mult] : current)
            for (const auto& [mu, one] : branch_one_step(lambda)) next[mu] += mult * one;
        current = std::move(next);
    }
    return current;
}

WeightMeasure restrict(const HighestWeight& w, int target_rank) {
    return WeightMeasure(restrict_multiplicities(w, target_rank));
}

WeightMeasure measure_of_rep(std::span<const std::pair<HighestWeight, Integer>> parts) {
    if (parts.empty()) throw Error(ErrorCode::empty_input, "measure_of_rep: empty component list");
    MultiplicityMap components;
    for (const auto& [w, mult] : parts) {
        if (mult < 1) throw Error(ErrorCode::invalid_argument, "measure_of_rep: multiplicities must be >= 1");
        components[w] += mult;
    }
    return WeightMeasure(components);
}

MultiplicityMap tensor_power_multiplicities(const HighestWeight& w, int n, const TensorPowerOptions& opts) {
    if (n < 1) throw Error(ErrorCode::invalid_argument, "tensor power needs n >= 1");
    const bool defining = (w == HighestWeight::defining(w.rank()));
    MultiplicityMap current{{w, Integer(1)}};
    for (int step = 1; step < n; ++step) {
        MultiplicityMap next;
        for (const auto& [nu, mult] : current) {
            if (defining) {
                accumulate_pieri(nu, mult, next);
            } else {
                for (const auto& [kappa, c] : tensor_decompose(nu, w)) next[kappa] += mult * c;
            }
            if (next.size() > opts.state_cap)
                throw Error(ErrorCode::state_cap_exceeded,
                            "tensor power exceeds the state cap of " + std::to_string(opts.state_cap) +
                                " weights; use a smaller power or scale");
        }
        current = std::move(next);
    }
    return current;
}

WeightMeasure tensor_power_measure(const HighestWeight& w, int n, const TensorPowerOptions& opts) {
    return WeightMeasure(tensor_power_multiplicities(w, n, opts));
}

}  // namespace repmat
