#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "repmat/compare.hpp"
#include "repmat/rmt.hpp"

using namespace repmat;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> v) {
    Eigen::VectorXd x(static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (double e : v) x(i++) = e;
    return x;
}

EmpiricalSpectrum constant_spectrum(const Eigen::VectorXd& v, int n) {
    EmpiricalSpectrum s(static_cast<int>(v.size()));
    for (int i = 0; i < n; ++i) s.push(v);
    return s;
}

WeightMeasure point_mass(const HighestWeight& w) { return WeightMeasure(MultiplicityMap{{w, 1}}); }

Marginal random_marginal(RngStream& rng) {
    std::vector<std::pair<double, double>> atoms;
    const int n = 1 + static_cast<int>(rng.next_u64() % 6);
    double total = 0;
    for (int i = 0; i < n; ++i) {
        atoms.emplace_back(std::round(4 * rng.normal()) / 4, 0.1 + rng.uniform());
        total += atoms.back().second;
    }
    std::sort(atoms.begin(), atoms.end());
    Marginal m;
    for (auto [x, w] : atoms) {
        if (!m.positions.empty() && m.positions.back() == x) {
            m.weights.back() += w / total;
        } else {
            m.positions.push_back(x);
            m.weights.push_back(w / total);
        }
    }
    return m;
}

// Riemann-sum oracle for W1 = integral |F - G|, on a fine grid.
double w1_grid(const std::function<double(double)>& f, const std::function<double(double)>& g, double lo, double hi) {
    const int n = 2'000'000;
    const double h = (hi - lo) / n;
    double s = 0;
    for (int i = 0; i < n; ++i) {
        const double x = lo + (i + 0.5) * h;
        s += std::abs(f(x) - g(x));
    }
    return s * h;
}

}  // namespace

TEST_CASE("EmpiricalSpectrum validates samples") {
    EmpiricalSpectrum s(2);
    CHECK_THROWS_AS(s.push(vec({0, 1})), Error);
    CHECK_THROWS_AS(s.push(vec({1, 0, 0})), Error);
    s.push(vec({1, 0}));
    CHECK(s.size() == 1);
}

TEST_CASE("power_sums_empirical") {
    const auto s = constant_spectrum(vec({1, 0}), 10);
    const std::vector<int> p1{1};
    auto e = power_sums_empirical(s, p1);
    CHECK(e.mean == 1);
    CHECK(e.standard_error == 0);
    e = power_sums_empirical(s, std::span<const int>{});
    CHECK(e.mean == 1);
    CHECK(e.standard_error == 0);
    CHECK_THROWS_AS(power_sums_empirical(constant_spectrum(vec({1, 0}), 1), p1), Error);
}

TEST_CASE("power_sums_empirical on traceless GUE against an oversampled oracle") {
    // Oracle: independent 10^7-sample run on a separate stream. Target value d^2 - 1 = 3.
    const std::vector<int> p2{2};
    RngStream oracle_rng(1000, 1);
    MomentAccumulator oracle;
    for (int t = 0; t < 10'000'000; ++t) {
        const auto g = sample_gue_v(2, 0, oracle_rng);
        oracle.add((g.matrix() * g.matrix()).trace().real());
    }
    RngStream rng(1000, 2);
    EmpiricalSpectrum s(2);
    for (int t = 0; t < 100000; ++t) s.push(eigenvalues_hermitian(sample_gue_v(2, 0, rng)));
    const auto e = power_sums_empirical(s, p2);
    const double se = std::hypot(e.standard_error, oracle.estimate().standard_error);
    CHECK(std::abs(e.mean - oracle.estimate().mean) <= 3 * se);
    CHECK(std::abs(oracle.estimate().mean - 3) <= 3 * oracle.estimate().standard_error);
}

TEST_CASE("standard errors shrink like 1/sqrt(n)") {
    RngStream rng(55, 0);
    const std::vector<int> p2{2};
    EmpiricalSpectrum small(2), large(2);
    for (int t = 0; t < 40000; ++t) {
        const auto v = eigenvalues_hermitian(sample_gue_v(2, 0.5, rng));
        if (t < 20000) small.push(v);
        large.push(v);
    }
    const double ratio = power_sums_empirical(small, p2).standard_error / power_sums_empirical(large, p2).standard_error;
    CHECK(ratio >= 1.25);
    CHECK(ratio <= 1.6);
}

TEST_CASE("wasserstein1_sorted examples") {
    const auto a = point_mass(HighestWeight({1, 0}));
    const auto b = point_mass(HighestWeight({1, 1}));
    CHECK(wasserstein1_sorted(ScaledMeasure(a, 1), ScaledMeasure(a, 1)) == 0);
    CHECK(wasserstein1_sorted(ScaledMeasure(a, 1), ScaledMeasure(b, 1)) == 0.5);
    CHECK(wasserstein1_sorted(ScaledMeasure(a, 1), constant_spectrum(vec({1, 0}), 5)) == 0);
    CHECK_THROWS_AS(wasserstein1_sorted(ScaledMeasure(a, 1), constant_spectrum(vec({1, 0, 0}), 5)), Error);

    for (int L : {1, 5, 20, 100, 1000}) {
        const auto m = restrict(HighestWeight({L, 0}), 1);
        const double w = wasserstein1(SpectralLaw(ScaledMeasure(m, Real50(1) / L)).marginal(0), UniformInterval{0, 1});
        auto f = [L](double x) { return x < 0 ? 0.0 : std::min(1.0, (std::floor(x * L + 1e-12) + 1) / (L + 1)); };
        auto g = [](double x) { return std::clamp(x, 0.0, 1.0); };
        CHECK(w == doctest::Approx(w1_grid(f, g, -0.5, 1.5)).epsilon(1e-4));
        CHECK(w <= 1.0 / (2 * L));
    }
}

TEST_CASE("W1 between atomic laws matches the grid oracle") {
    RngStream rng(4, 0);
    for (int t = 0; t < 20; ++t) {
        const auto a = random_marginal(rng);
        const auto b = random_marginal(rng);
        auto cdf = [](const Marginal& m) {
            return [&m](double x) {
                double s = 0;
                for (std::size_t i = 0; i < m.positions.size() && m.positions[i] <= x; ++i) s += m.weights[i];
                return s;
            };
        };
        const double lo = std::min(a.positions.front(), b.positions.front()) - 1;
        const double hi = std::max(a.positions.back(), b.positions.back()) + 1;
        CHECK(wasserstein1(a, b) == doctest::Approx(w1_grid(cdf(a), cdf(b), lo, hi)).epsilon(1e-4));
    }
}

TEST_CASE("W1 is a pseudometric on random triples") {
    RngStream rng(5, 0);
    for (int t = 0; t < 200; ++t) {
        std::vector<Marginal> ma{random_marginal(rng), random_marginal(rng)};
        std::vector<Marginal> mb{random_marginal(rng), random_marginal(rng)};
        std::vector<Marginal> mc{random_marginal(rng), random_marginal(rng)};
        const SpectralLaw a(ma), b(mb), c(mc);
        const double ab = wasserstein1_sorted(a, b), ba = wasserstein1_sorted(b, a);
        CHECK(ab == doctest::Approx(ba).epsilon(1e-13));
        CHECK(wasserstein1_sorted(a, a) == 0);
        CHECK(wasserstein1_sorted(a, c) <= ab + wasserstein1_sorted(b, c) + 1e-12);
    }
}

TEST_CASE("compare_report") {
    const std::vector<MomentIndex> ks{{1}, {2}, {1, 1}};
    const ReportTolerances tol{{0, 0, 0}, 0};
    const auto exact = point_mass(HighestWeight({1, 0}));

    const auto good = compare_report(ScaledMeasure(exact, 1), constant_spectrum(vec({1, 0}), 50), ks, tol);
    CHECK(good.pass());
    CHECK(good.rows.size() == 4);
    for (const auto& r : good.rows) CHECK(r.error() == 0);

    const auto bad = compare_report(ScaledMeasure(exact, 1), constant_spectrum(vec({2, 0}), 50), ks, tol);
    CHECK_FALSE(bad.pass());

    const auto again = compare_report(ScaledMeasure(exact, 1), constant_spectrum(vec({2, 0}), 50), ks, tol);
    for (std::size_t i = 0; i < bad.rows.size(); ++i) {
        CHECK(bad.rows[i].estimate == again.rows[i].estimate);
        CHECK(bad.rows[i].pass == again.rows[i].pass);
    }
    CHECK_THROWS_AS(compare_report(ScaledMeasure(exact, 1), constant_spectrum(vec({1}), 5), ks, tol), Error);
}

TEST_CASE("moment record pass rule") {
    MomentRecord r;
    r.reference = 1;
    r.estimate = 1.5;
    r.tolerance = 0.2;
    r.standard_error = 0.1;
    r.evaluate();
    CHECK(r.pass);
    r.standard_error = 0.09;
    r.evaluate();
    CHECK_FALSE(r.pass);
    CHECK(moment_label(std::vector<int>{2, 1}) == "p2*p1");
}
