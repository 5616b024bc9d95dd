#pragma once

#include "repmat/exact.hpp"

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace repmat {

/// Dominant integral weight lambda_1 >= ... >= lambda_d of U(d). Entries may be negative.
///
/// Entries are stored as 64-bit integers with a magnitude guard; dimensions and multiplicities
/// derived from weights are arbitrary precision.
class HighestWeight {
public:
    static constexpr std::int64_t max_entry = std::int64_t{1} << 40;

    HighestWeight() = default;
    explicit HighestWeight(std::vector<std::int64_t> entries);
    HighestWeight(std::initializer_list<std::int64_t> entries)
        : HighestWeight(std::vector<std::int64_t>(entries)) {}

    /// The trivial weight (0, ..., 0) of U(d).
    static HighestWeight zero(int d);
    /// The defining weight (1, 0, ..., 0) of U(d).
    static HighestWeight defining(int d);

    int rank() const noexcept { return static_cast<int>(entries_.size()); }
    std::int64_t operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    std::span<const std::int64_t> entries() const noexcept { return entries_; }

    /// Sum of entries (the degree, i.e. how the determinant acts).
    std::int64_t degree() const noexcept;
    bool is_zero() const noexcept;

    /// lambda + c * (1, ..., 1): twist by the c-th power of the determinant.
    HighestWeight twisted(std::int64_t c) const;
    /// lambda * L.
    HighestWeight scaled(std::int64_t factor) const;
    /// The weight of the dual representation, (-lambda_d, ..., -lambda_1).
    HighestWeight dual() const;

    /// "(2,1,0)".
    std::string str() const;

    friend auto operator<=>(const HighestWeight&, const HighestWeight&) = default;
    friend bool operator==(const HighestWeight&, const HighestWeight&) = default;

private:
    std::vector<std::int64_t> entries_;
};

std::ostream& operator<<(std::ostream& os, const HighestWeight& w);

/// Parses "2,1,0" (optionally wrapped in parentheses). Throws Error(invalid_weight).
HighestWeight parse_weight(const std::string& text);

/// Canonical Weyl-chamber representative: coordinates sorted non-increasing.
class ChamberPoint {
public:
    ChamberPoint() = default;
    /// Throws unless `x` is already non-increasing and finite.
    explicit ChamberPoint(Eigen::VectorXd x);

    int rank() const noexcept { return static_cast<int>(x_.size()); }
    const Eigen::VectorXd& coords() const noexcept { return x_; }
    double operator[](int i) const { return x_(i); }

private:
    Eigen::VectorXd x_;
};

/// Stable sort into non-increasing order (ties keep input order).
ChamberPoint sort_to_chamber(const Eigen::Ref<const Eigen::VectorXd>& v);

/// Weyl dimension formula prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i).
Integer dim_weyl(const HighestWeight& w);

/// Eigenvalue of the quadratic Casimir sum_i lambda_i (lambda_i + d + 1 - 2i) (1-based i), for the
/// invariant product <x, y> = Tr(x y^*) on u(d).
Rational casimir_value(const HighestWeight& w);

}  // namespace repmat
