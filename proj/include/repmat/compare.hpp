#pragma once

#include "repmat/decompose.hpp"
#include "repmat/exact.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace repmat {

/// Sample spectra, one non-increasing vector of length d per sample.
class EmpiricalSpectrum {
public:
    explicit EmpiricalSpectrum(int d, std::uint64_t seed = 0, std::string description = {});

    int rank() const noexcept { return d_; }
    std::size_t size() const noexcept { return values_.size() / static_cast<std::size_t>(d_); }
    std::uint64_t seed() const noexcept { return seed_; }
    const std::string& description() const noexcept { return description_; }

    /// Throws unless `sorted` has length d and is non-increasing.
    void push(const Eigen::Ref<const Eigen::VectorXd>& sorted);
    void reserve(std::size_t n) { values_.reserve(n * static_cast<std::size_t>(d_)); }

    Eigen::Map<const Eigen::VectorXd> sample(std::size_t i) const {
        return Eigen::Map<const Eigen::VectorXd>(values_.data() + i * static_cast<std::size_t>(d_), d_);
    }
    /// Row-major samples x d view.
    Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> matrix() const {
        return {values_.data(), static_cast<Eigen::Index>(size()), d_};
    }

private:
    int d_;
    std::uint64_t seed_;
    std::string description_;
    std::vector<double> values_;
};

/// A weight measure pushed forward by lambda -> eps * lambda - center.
struct ScaledMeasure {
    const WeightMeasure* measure = nullptr;
    Real50 eps = 1;
    std::vector<Real50> center;  // empty: no centering

    ScaledMeasure(const WeightMeasure& m, Real50 scale, std::vector<Real50> shift = {})
        : measure(&m), eps(std::move(scale)), center(std::move(shift)) {}

    int rank() const noexcept { return measure->rank(); }
    /// E[prod_j p_{ks[j]}] of the pushed-forward measure.
    Real50 moment(std::span<const int> ks) const;
};

struct MomentEstimate {
    double mean = 0;
    double standard_error = 0;
};

/// Sample mean and standard error of prod_j p_{ks[j]}(sample). Needs at least two samples.
MomentEstimate power_sums_empirical(const EmpiricalSpectrum& s, std::span<const int> ks);

/// Running sum with Neumaier compensation; partial sums merge.
class CompensatedSum {
public:
    void add(double x) noexcept;
    void merge(const CompensatedSum& other) noexcept;
    double value() const noexcept { return sum_ + compensation_; }

private:
    double sum_ = 0;
    double compensation_ = 0;
};

/// Mergeable mean / standard-error accumulator.
class MomentAccumulator {
public:
    void add(double x) noexcept;
    void merge(const MomentAccumulator& other) noexcept;
    std::size_t count() const noexcept { return count_; }
    MomentEstimate estimate() const;

private:
    std::size_t count_ = 0;
    CompensatedSum sum_;
    CompensatedSum sum_sq_;
};

/// One-dimensional atomic law, atoms sorted by position, weights summing to one.
struct Marginal {
    std::vector<double> positions;
    std::vector<double> weights;
};

struct UniformInterval {
    double lo = 0;
    double hi = 1;
};

/// Per-coordinate marginals of a law on sorted vectors.
class SpectralLaw {
public:
    SpectralLaw(const EmpiricalSpectrum& s);  // NOLINT(google-explicit-constructor)
    SpectralLaw(const ScaledMeasure& m);      // NOLINT(google-explicit-constructor)
    explicit SpectralLaw(std::vector<Marginal> marginals);

    int rank() const noexcept { return static_cast<int>(marginals_.size()); }
    const Marginal& marginal(int i) const { return marginals_[static_cast<std::size_t>(i)]; }

private:
    std::vector<Marginal> marginals_;
};

/// W1 between one-dimensional laws, as the integral of |F - G|.
double wasserstein1(const Marginal& a, const Marginal& b);
double wasserstein1(const Marginal& a, const UniformInterval& u);

/// Mean over coordinates of the W1 distance between sorted-coordinate marginals.
double wasserstein1_sorted(const SpectralLaw& a, const SpectralLaw& b);

struct MomentRecord {
    std::string label;
    std::vector<int> ks;  // empty for non-moment rows
    double reference = 0;
    double estimate = 0;
    double estimate_imag = 0;
    double standard_error = 0;
    double tolerance = 0;
    /// Lower-bound row: only a shortfall estimate < reference counts as error.
    bool one_sided = false;
    bool pass = false;

    /// |estimate - reference| (complex modulus when estimate_imag != 0); for one-sided rows
    /// max(0, reference - estimate).
    double error() const noexcept;
    /// Sets pass = error() <= tolerance + 3 standard_error.
    void evaluate() noexcept;
};

struct MomentReport {
    std::vector<MomentRecord> rows;

    bool pass() const noexcept;
    void add(MomentRecord row);
};

using MomentIndex = std::vector<int>;

struct ReportTolerances {
    std::vector<double> moments;  // one per moment index, absolute
    double wasserstein = 0.02;
};

/// Rescaled exact moments (reference) against empirical spectral moments (estimate), plus a W1 row.
MomentReport compare_report(const ScaledMeasure& exact, const EmpiricalSpectrum& spectra,
                            std::span<const MomentIndex> moments, const ReportTolerances& tolerances);

/// "p2", "p1*p1", "p2*p1"; "1" for the empty product.
std::string moment_label(std::span<const int> ks);

}  // namespace repmat
