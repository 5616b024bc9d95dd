#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "repmat/experiments.hpp"

#include <cstdlib>
#include <sstream>

using namespace repmat;

namespace {

std::string csv(const ExperimentResult& r) {
    std::ostringstream os;
    write_csv(os, r);
    return os.str();
}

RestrictLimitConfig small_restrict(std::uint64_t seed) {
    RestrictLimitConfig cfg;
    cfg.lambda0 = HighestWeight{2, 1, 0};
    cfg.target_rank = 2;
    cfg.scale = 20;
    cfg.samples = 3000;
    cfg.seed = seed;
    return cfg;
}

const MomentRecord& row(const ExperimentResult& r, const std::string& label) {
    for (const auto& x : r.report.rows)
        if (x.label == label) return x;
    FAIL("missing row " << label);
    return r.report.rows.front();
}

}  // namespace

TEST_CASE("sampling is reproducible and independent of the thread count") {
    setenv("REPMAT_THREADS", "1", 1);
    const auto one = csv(run_restrict_limit(small_restrict(11)));
    setenv("REPMAT_THREADS", "4", 1);
    const auto four = csv(run_restrict_limit(small_restrict(11)));
    const auto again = csv(run_restrict_limit(small_restrict(11)));
    unsetenv("REPMAT_THREADS");
    CHECK(one == four);
    CHECK(four == again);
    CHECK(one != csv(run_restrict_limit(small_restrict(12))));
}

TEST_CASE("sample_rows: a longer run extends a shorter one") {
    auto draw = [](RngStream& rng) {
        Eigen::VectorXd v(2);
        v << rng.uniform(), rng.normal();
        return v;
    };
    const auto a = sample_rows(1500, 2, 5, 9, draw);
    const auto b = sample_rows(5000, 2, 5, 9, draw);
    CHECK(a == b.topRows(1500));
    CHECK(a != sample_rows(1500, 2, 5, 10, draw));
}

TEST_CASE("csv: header and round-trip of 17 significant digits") {
    auto r = run_so3({.magnitude = 1, .samples = 50, .seed = 3, .doubled_spins = {1}});
    std::istringstream is(csv(r));
    std::string line;
    std::getline(is, line);
    CHECK(line == "jz");
    for (Eigen::Index i = 0; std::getline(is, line); ++i) CHECK(std::strtod(line.c_str(), nullptr) == r.csv_rows(i, 0));
}

TEST_CASE("restrict-limit: corner law for U(2) -> U(1) and the negative control") {
    RestrictLimitConfig cfg;
    cfg.lambda0 = HighestWeight{1, 0};
    cfg.scale = 100;
    cfg.samples = 20000;
    cfg.seed = 1;
    const auto good = run_restrict_limit(cfg);
    CHECK(good.pass());
    CHECK(row(good, "W1(exact, uniform)").estimate < 0.01);

    cfg.matrix_eigenvalues = Eigen::Vector2d(2, 0);
    const auto bad = run_restrict_limit(cfg);
    CHECK_FALSE(bad.pass());
    CHECK_FALSE(row(bad, "W1").pass);

    cfg.matrix_eigenvalues = Eigen::Vector3d(1, 0, 0);
    CHECK_THROWS_AS(run_restrict_limit(cfg), Error);
    cfg.matrix_eigenvalues.reset();
    cfg.target_rank = 2;
    CHECK_THROWS_AS(run_restrict_limit(cfg), Error);
}

TEST_CASE("restrict-limit: L = 1 runs and shows no convergence") {
    RestrictLimitConfig cfg;
    cfg.lambda0 = HighestWeight{1, 0};
    cfg.scale = 1;
    cfg.samples = 5000;
    cfg.seed = 2;
    const auto r = run_restrict_limit(cfg);
    // two atoms at 0 and 1 against Uniform[0, 1]
    CHECK(row(r, "W1(exact, uniform)").estimate == doctest::Approx(0.25));
    CHECK(row(r, "W1").estimate > 0.2);
    CHECK_FALSE(r.pass());
}

TEST_CASE("tensor-limit: mu0 = 0 collapses both sides to lambda0") {
    TensorLimitConfig cfg;
    cfg.lambda0 = HighestWeight{2, 1, -1};
    cfg.mu0 = HighestWeight::zero(3);
    cfg.scale = 7;
    cfg.samples = 500;
    cfg.seed = 4;
    const auto r = run_tensor_limit(cfg);
    CHECK(r.pass());
    for (const auto& x : r.report.rows) CHECK(x.error() < 1e-9);
    CHECK(r.details["exact_support"] == 1);
}

TEST_CASE("tensor-limit: swapping the weights leaves the exact side unchanged") {
    TensorLimitConfig cfg;
    cfg.lambda0 = HighestWeight{2, 0, 0};
    cfg.mu0 = HighestWeight{1, 1, 0};
    cfg.scale = 4;
    cfg.samples = 100;
    cfg.seed = 4;
    const auto a = run_tensor_limit(cfg);
    std::swap(cfg.lambda0, cfg.mu0);
    const auto b = run_tensor_limit(cfg);
    REQUIRE(a.report.rows.size() == b.report.rows.size());
    for (std::size_t i = 0; i + 1 < a.report.rows.size(); ++i)
        CHECK(a.report.rows[i].reference == b.report.rows[i].reference);
    CHECK(tensor_decompose(HighestWeight{8, 0, 0}, HighestWeight{4, 4, 0}) ==
          tensor_decompose(HighestWeight{4, 4, 0}, HighestWeight{8, 0, 0}));
}

TEST_CASE("tensor-limit: state cap and rank guards") {
    TensorLimitConfig cfg;
    cfg.lambda0 = HighestWeight{1, 0};
    cfg.mu0 = HighestWeight{1, 0};
    cfg.scale = 10;
    cfg.samples = 10;
    cfg.state_cap = 3;
    try {
        run_tensor_limit(cfg);
        FAIL("expected state_cap_exceeded");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::state_cap_exceeded);
    }
    cfg.mu0 = HighestWeight{1, 0, 0};
    CHECK_THROWS_AS(run_tensor_limit(cfg), Error);
}

TEST_CASE("clt: Pauli z fourth moment and exact second moments") {
    CltConfig cfg;
    cfg.elements = "pauli-z";
    cfg.ks = {2, 4};
    cfg.samples = 20000;
    cfg.seed = 8;
    const auto r = run_clt(cfg);
    CHECK(r.pass());
    CHECK(row(r, "nc k=4 n=256").reference == doctest::Approx(3));
    for (long long n : {16, 64, 256}) {
        const auto& x = row(r, "nc k=2 n=" + std::to_string(n));
        CHECK(x.estimate == x.reference);
    }
    // x = sigma_3: |m4(n) - 3| = 2/n
    CHECK(r.details["rate_fits"][1]["C"].get<double>() == doctest::Approx(2));
}

TEST_CASE("clt: guards") {
    CltConfig cfg;
    cfg.samples = 10;
    cfg.ks = {9};
    try {
        run_clt(cfg);
        FAIL("expected k_cap_exceeded");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::k_cap_exceeded);
    }
    cfg.ks = {2};
    cfg.d = 3;
    cfg.elements = "pauli-z";
    CHECK_THROWS_AS(run_clt(cfg), Error);
    cfg.elements = "nope";
    CHECK_THROWS_AS(run_clt(cfg), Error);
}

TEST_CASE("clt: weight-side fit approaches the Gaussian scale") {
    // Casimir expectation over the n-th tensor power of the defining representation of U(d)
    // is n d + n (n - 1) / d, from C = sum_i C_i + 2 sum_{i<j} swap_ij.
    for (int d : {2, 3}) {
        for (int n : {1, 4, 9}) {
            const auto m = tensor_power_measure(HighestWeight::defining(d), n);
            Rational e = 0;
            for (const auto& [w, entry] : m.entries()) e += entry.probability * casimir_value(w);
            CHECK(e == Rational(n * d) + Rational(n * (n - 1), d));
        }
    }
    CltConfig cfg;
    cfg.ks = {2};
    cfg.ns = {64, 1024};
    cfg.samples = 10;
    const auto r = run_clt(cfg);
    const double residual = r.details["weight_fit"]["scale_sq_residual"];
    CHECK(std::abs(residual) < 0.02);
    CHECK(r.details["gue_v"].get<double>() == 0);
}

TEST_CASE("so3: Archimedes and the spin-j weight laws") {
    const auto r = run_so3({.magnitude = 2.5, .samples = 20000, .seed = 6, .doubled_spins = {1, 2, 20}});
    CHECK(r.pass());
    CHECK(row(r, "W1(spin 2j=1, uniform)").estimate == doctest::Approx(2.5 / 2));
    for (Eigen::Index i = 0; i < r.csv_rows.rows(); ++i) CHECK(std::abs(r.csv_rows(i, 0)) <= 2.5 + 1e-12);
    CHECK_THROWS_AS(run_so3({.magnitude = 0}), Error);
}

TEST_CASE("report json carries the reproducibility metadata") {
    const auto r = run_so3({.magnitude = 1, .samples = 100, .seed = 42, .doubled_spins = {2}});
    const auto j = report_json(r);
    CHECK(j["schema_version"] == report_schema_version);
    CHECK(j["rng"]["seed"] == 42);
    CHECK(j["rng"]["algorithm"] == std::string(RngStream::algorithm));
    CHECK(j["build"].get<std::string>() == build_version());
    CHECK(j["config"]["samples"] == 100);
    CHECK(j["pass"] == r.pass());
    CHECK(j["rows"].size() == r.report.rows.size());
}
