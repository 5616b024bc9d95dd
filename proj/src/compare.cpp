#include "repmat/compare.hpp"

#include "repmat/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace repmat {

EmpiricalSpectrum::EmpiricalSpectrum(int d, std::uint64_t seed, std::string description)
    : d_(d), seed_(seed), description_(std::move(description)) {
    if (d < 1) throw Error(ErrorCode::invalid_argument, "spectrum rank must be >= 1");
}

void EmpiricalSpectrum::push(const Eigen::Ref<const Eigen::VectorXd>& sorted) {
    if (sorted.size() != d_) throw Error(ErrorCode::rank_mismatch, "spectrum sample has wrong length");
    for (Eigen::Index i = 0; i + 1 < sorted.size(); ++i)
        if (sorted(i) < sorted(i + 1)) throw Error(ErrorCode::invalid_argument, "spectrum sample not sorted");
    values_.insert(values_.end(), sorted.data(), sorted.data() + sorted.size());
}

Real50 ScaledMeasure::moment(std::span<const int> ks) const {
    if (center.empty()) return moments_power_sums<Real50>(*measure, ks, eps);
    return moments_power_sums<Real50>(*measure, ks, eps, std::span<const Real50>(center));
}

void CompensatedSum::add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
        compensation_ += (sum_ - t) + x;
    else
        compensation_ += (x - t) + sum_;
    sum_ = t;
}

void CompensatedSum::merge(const CompensatedSum& other) noexcept {
    add(other.sum_);
    add(other.compensation_);
}

void MomentAccumulator::add(double x) noexcept {
    ++count_;
    sum_.add(x);
    sum_sq_.add(x * x);
}

void MomentAccumulator::merge(const MomentAccumulator& other) noexcept {
    count_ += other.count_;
    sum_.merge(other.sum_);
    sum_sq_.merge(other.sum_sq_);
}

MomentEstimate MomentAccumulator::estimate() const {
    if (count_ < 2) throw Error(ErrorCode::empty_input, "moment estimate needs at least two samples");
    const double n = static_cast<double>(count_);
    const double mean = sum_.value() / n;
    const double var = std::max(0.0, (sum_sq_.value() - n * mean * mean) / (n - 1));
    return {mean, std::sqrt(var / n)};
}

MomentEstimate power_sums_empirical(const EmpiricalSpectrum& s, std::span<const int> ks) {
    if (s.size() < 2) throw Error(ErrorCode::empty_input, "power_sums_empirical needs at least two samples");
    MomentAccumulator acc;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto y = s.sample(i);
        double prod = 1;
        for (int k : ks) prod *= y.array().pow(k).sum();
        acc.add(prod);
    }
    return acc.estimate();
}

namespace {

Marginal normalize_atoms(std::vector<std::pair<double, double>> atoms) {
    std::sort(atoms.begin(), atoms.end());
    Marginal m;
    for (const auto& [x, w] : atoms) {
        if (!m.positions.empty() && m.positions.back() == x) {
            m.weights.back() += w;
        } else {
            m.positions.push_back(x);
            m.weights.push_back(w);
        }
    }
    return m;
}

// Integral over [0, len] of |c - g(t)|, g linear from g0 to g1.
double integrate_abs_linear(double c, double g0, double g1, double len) {
    const double a = g0 - c;
    const double b = g1 - c;
    if (a * b >= 0) return len * std::abs(a + b) / 2;
    const double f = a / (a - b);
    return len * (f * std::abs(a) + (1 - f) * std::abs(b)) / 2;
}

}  // namespace

SpectralLaw::SpectralLaw(const EmpiricalSpectrum& s) {
    const std::size_t n = s.size();
    if (n == 0) throw Error(ErrorCode::empty_input, "empty spectrum");
    const double w = 1.0 / static_cast<double>(n);
    for (int i = 0; i < s.rank(); ++i) {
        std::vector<std::pair<double, double>> atoms;
        atoms.reserve(n);
        for (std::size_t t = 0; t < n; ++t) atoms.emplace_back(s.sample(t)(i), w);
        marginals_.push_back(normalize_atoms(std::move(atoms)));
    }
}

SpectralLaw::SpectralLaw(const ScaledMeasure& m) {
    const int d = m.rank();
    for (int i = 0; i < d; ++i) {
        std::vector<std::pair<double, double>> atoms;
        for (const auto& [w, e] : m.measure->entries()) {
            Real50 y = m.eps * Real50(w[i]);
            if (!m.center.empty()) y -= m.center[static_cast<std::size_t>(i)];
            atoms.emplace_back(static_cast<double>(y), rational_cast<double>(e.probability));
        }
        marginals_.push_back(normalize_atoms(std::move(atoms)));
    }
}

SpectralLaw::SpectralLaw(std::vector<Marginal> marginals) : marginals_(std::move(marginals)) {}

double wasserstein1(const Marginal& a, const Marginal& b) {
    if (a.positions.empty() || b.positions.empty()) throw Error(ErrorCode::empty_input, "W1 of an empty law");
    std::size_t i = 0, j = 0;
    double fa = 0, fb = 0;
    double prev = std::min(a.positions.front(), b.positions.front());
    CompensatedSum total;
    while (i < a.positions.size() || j < b.positions.size()) {
        const double xa = i < a.positions.size() ? a.positions[i] : INFINITY;
        const double xb = j < b.positions.size() ? b.positions[j] : INFINITY;
        const double x = std::min(xa, xb);
        total.add(std::abs(fa - fb) * (x - prev));
        while (i < a.positions.size() && a.positions[i] == x) fa += a.weights[i++];
        while (j < b.positions.size() && b.positions[j] == x) fb += b.weights[j++];
        prev = x;
    }
    return total.value();
}

double wasserstein1(const Marginal& a, const UniformInterval& u) {
    if (a.positions.empty()) throw Error(ErrorCode::empty_input, "W1 of an empty law");
    if (!(u.hi > u.lo)) throw Error(ErrorCode::invalid_argument, "uniform interval must have hi > lo");
    auto cdf = [&](double x) { return std::clamp((x - u.lo) / (u.hi - u.lo), 0.0, 1.0); };
    std::vector<double> breaks = a.positions;
    breaks.push_back(u.lo);
    breaks.push_back(u.hi);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    CompensatedSum total;
    std::size_t i = 0;
    double fa = 0;
    for (std::size_t t = 0; t + 1 < breaks.size(); ++t) {
        while (i < a.positions.size() && a.positions[i] <= breaks[t]) fa += a.weights[i++];
        const double x0 = breaks[t], x1 = breaks[t + 1];
        // cdf is linear on each sub-interval because lo and hi are breakpoints
        total.add(integrate_abs_linear(fa, cdf(x0), cdf(x1), x1 - x0));
    }
    return total.value();
}

double wasserstein1_sorted(const SpectralLaw& a, const SpectralLaw& b) {
    if (a.rank() != b.rank()) throw Error(ErrorCode::rank_mismatch, "W1: rank mismatch");
    double total = 0;
    for (int i = 0; i < a.rank(); ++i) total += wasserstein1(a.marginal(i), b.marginal(i));
    return total / a.rank();
}

double MomentRecord::error() const noexcept {
    if (one_sided) return std::max(0.0, reference - estimate);
    return std::hypot(estimate - reference, estimate_imag);
}

void MomentRecord::evaluate() noexcept { pass = error() <= tolerance + 3 * standard_error; }

bool MomentReport::pass() const noexcept {
    return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.pass; });
}

void MomentReport::add(MomentRecord row) { rows.push_back(std::move(row)); }

std::string moment_label(std::span<const int> ks) {
    if (ks.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < ks.size(); ++i) s += (i ? "*p" : "p") + std::to_string(ks[i]);
    return s;
}

MomentReport compare_report(const ScaledMeasure& exact, const EmpiricalSpectrum& spectra,
                            std::span<const MomentIndex> moments, const ReportTolerances& tolerances) {
    if (exact.rank() != spectra.rank()) throw Error(ErrorCode::rank_mismatch, "compare_report: rank mismatch");
    if (tolerances.moments.size() != moments.size())
        throw Error(ErrorCode::invalid_argument, "compare_report: one tolerance per moment required");
    MomentReport report;
    for (std::size_t m = 0; m < moments.size(); ++m) {
        const auto est = power_sums_empirical(spectra, moments[m]);
        MomentRecord row;
        row.label = moment_label(moments[m]);
        row.ks = moments[m];
        row.reference = static_cast<double>(exact.moment(moments[m]));
        row.estimate = est.mean;
        row.standard_error = est.standard_error;
        row.tolerance = tolerances.moments[m];
        row.evaluate();
        report.add(std::move(row));
    }
    MomentRecord w1;
    w1.label = "W1";
    w1.reference = 0;
    w1.estimate = wasserstein1_sorted(SpectralLaw(exact), SpectralLaw(spectra));
    w1.tolerance = tolerances.wasserstein;
    w1.evaluate();
    report.add(std::move(w1));
    return report;
}

}  // namespace repmat
