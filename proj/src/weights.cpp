#include "repmat/weights.hpp"

#include "repmat/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>

namespace repmat {

std::string_view error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::invalid_weight: return "invalid_weight";
        case ErrorCode::rank_mismatch: return "rank_mismatch";
        case ErrorCode::rank_constraint: return "rank_constraint";
        case ErrorCode::empty_input: return "empty_input";
        case ErrorCode::state_cap_exceeded: return "state_cap_exceeded";
        case ErrorCode::k_cap_exceeded: return "k_cap_exceeded";
        case ErrorCode::invalid_argument: return "invalid_argument";
        case ErrorCode::not_hermitian: return "not_hermitian";
        case ErrorCode::no_convergence: return "no_convergence";
    }
    return "unknown";
}

HighestWeight::HighestWeight(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw Error(ErrorCode::invalid_weight, "highest weight needs rank d >= 1");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] > max_entry || entries_[i] < -max_entry)
            throw Error(ErrorCode::invalid_weight, "weight entry out of range");
        if (i + 1 < entries_.size() && entries_[i] < entries_[i + 1])
            throw Error(ErrorCode::invalid_weight, "weight entries must be non-increasing: " + str());
    }
}

HighestWeight HighestWeight::zero(int d) {
    if (d < 1) throw Error(ErrorCode::invalid_weight, "rank must be >= 1");
    return HighestWeight(std::vector<std::int64_t>(static_cast<std::size_t>(d), 0));
}

HighestWeight HighestWeight::defining(int d) {
    if (d < 1) throw Error(ErrorCode::invalid_weight, "rank must be >= 1");
    std::vector<std::int64_t> e(static_cast<std::size_t>(d), 0);
    e[0] = 1;
    return HighestWeight(std::move(e));
}

std::int64_t HighestWeight::degree() const noexcept {
    return std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0});
}

bool HighestWeight::is_zero() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](auto e) { return e == 0; });
}

HighestWeight HighestWeight::twisted(std::int64_t c) const {
    auto e = entries_;
    for (auto& x : e) x += c;
    return HighestWeight(std::move(e));
}

HighestWeight HighestWeight::scaled(std::int64_t factor) const {
    if (factor < 0) throw Error(ErrorCode::invalid_argument, "scale factor must be non-negative");
    auto e = entries_;
    for (auto& x : e) {
        if (x != 0 && std::abs(x) > max_entry / std::max<std::int64_t>(factor, 1))
            throw Error(ErrorCode::invalid_weight, "scaled weight out of range");
        x *= factor;
    }
    return HighestWeight(std::move(e));
}

HighestWeight HighestWeight::dual() const {
    std::vector<std::int64_t> e(entries_.rbegin(), entries_.rend());
    for (auto& x : e) x = -x;
    return HighestWeight(std::move(e));
}

std::string HighestWeight::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(entries_[i]);
    }
    return s + ")";
}

std::ostream& operator<<(std::ostream& os, const HighestWeight& w) { return os << w.str(); }

HighestWeight parse_weight(const std::string& text) {
    std::string body = text;
    if (!body.empty() && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
    std::vector<std::int64_t> entries;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto first = item.find_first_not_of(" \t");
        auto last = item.find_last_not_of(" \t");
        if (first == std::string::npos) throw Error(ErrorCode::invalid_weight, "empty weight entry in '" + text + "'");
        std::string_view tok(item.data() + first, last - first + 1);
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw Error(ErrorCode::invalid_weight, "cannot parse weight entry '" + std::string(tok) + "'");
        entries.push_back(v);
    }
    return HighestWeight(std::move(entries));
}

ChamberPoint::ChamberPoint(Eigen::VectorXd x) : x_(std::move(x)) {
    for (Eigen::Index i = 0; i < x_.size(); ++i) {
        if (!std::isfinite(x_(i))) throw Error(ErrorCode::invalid_argument, "chamber point must be finite");
        if (i + 1 < x_.size() && x_(i) < x_(i + 1))
            throw Error(ErrorCode::invalid_argument, "chamber point must be non-increasing");
    }
}

ChamberPoint sort_to_chamber(const Eigen::Ref<const Eigen::VectorXd>& v) {
    Eigen::VectorXd x = v;
    std::stable_sort(x.data(), x.data() + x.size(), std::greater<>{});
    return ChamberPoint(std::move(x));
}

Integer dim_weyl(const HighestWeight& w) {
    const int d = w.rank();
    Integer num = 1;
    Integer den = 1;
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            num *= Integer(w[i] - w[j] + (j - i));
            den *= Integer(j - i);
        }
    }
    return num / den;
}

Rational casimir_value(const HighestWeight& w) {
    const int d = w.rank();
    Integer total = 0;
    for (int i = 0; i < d; ++i) {
        // 1-based index i + 1
        total += Integer(w[i]) * Integer(w[i] + d + 1 - 2 * (i + 1));
    }
    return Rational(total);
}

}  // namespace repmat
