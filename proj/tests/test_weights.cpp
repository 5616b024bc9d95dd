#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "repmat/error.hpp"
#include "repmat/rmt.hpp"
#include "repmat/weights.hpp"

using namespace repmat;

namespace {

HighestWeight random_weight(RngStream& rng, int d, int lo, int hi) {
    std::vector<std::int64_t> e(static_cast<std::size_t>(d));
    for (auto& x : e) x = lo + static_cast<std::int64_t>(rng.next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    std::sort(e.begin(), e.end(), std::greater<>{});
    return HighestWeight(e);
}

}  // namespace

TEST_CASE("highest weight invariants") {
    CHECK_THROWS_AS(HighestWeight({0, 1}), Error);
    CHECK_THROWS_AS(HighestWeight(std::vector<std::int64_t>{}), Error);
    CHECK_NOTHROW(HighestWeight({3, -1, -5}));
    CHECK(parse_weight("2,1,0") == HighestWeight({2, 1, 0}));
    CHECK(parse_weight("(1, -1)") == HighestWeight({1, -1}));
    CHECK_THROWS_AS(parse_weight("1,x"), Error);
    CHECK_THROWS_AS(parse_weight("0,1"), Error);
    CHECK(HighestWeight({2, 0, -1}).dual() == HighestWeight({1, 0, -2}));
}

TEST_CASE("dim_weyl examples") {
    CHECK(dim_weyl(HighestWeight({1, 0})) == 2);
    CHECK(dim_weyl(HighestWeight({1, 1})) == 1);
    CHECK(dim_weyl(HighestWeight({2, 1, 0})) == oracle::count_gt_patterns({2, 1, 0}));
    CHECK(dim_weyl(HighestWeight({2, 1, 0})) == 8);
}

TEST_CASE("dim_weyl agrees with Gelfand-Tsetlin pattern counts") {
    RngStream rng(7, 0);
    for (int t = 0; t < 200; ++t) {
        const int d = 1 + static_cast<int>(rng.next_u64() % 4);
        const auto w = random_weight(rng, d, -3, 4);
        std::vector<std::int64_t> top(w.entries().begin(), w.entries().end());
        CHECK(dim_weyl(w) == oracle::count_gt_patterns(top));
    }
}

TEST_CASE("dim_weyl twist and duality invariance") {
    RngStream rng(8, 0);
    for (int t = 0; t < 300; ++t) {
        const int d = 1 + static_cast<int>(rng.next_u64() % 5);
        const auto w = random_weight(rng, d, -6, 9);
        const auto c = static_cast<std::int64_t>(rng.next_u64() % 11) - 5;
        CHECK(dim_weyl(w.twisted(c)) == dim_weyl(w));
        CHECK(dim_weyl(w.dual()) == dim_weyl(w));
    }
}

TEST_CASE("dim_weyl is arbitrary precision") {
    // (40, 20, 0) of U(3): (20+1)(40+2)(20+1)/2
    CHECK(dim_weyl(HighestWeight({40, 20, 0})) == Integer(21 * 42 * 21 / 2));
    const auto big = dim_weyl(HighestWeight({4000, 3000, 2000, 1000, 0}));
    CHECK(big > Integer(std::numeric_limits<std::int64_t>::max()));
}

TEST_CASE("sort_to_chamber") {
    Eigen::VectorXd v(2);
    v << 0.2, 1.5;
    CHECK(sort_to_chamber(v).coords()(0) == 1.5);
    CHECK(sort_to_chamber(v).coords()(1) == 0.2);
    Eigen::VectorXd c = Eigen::VectorXd::Constant(3, 3.0);
    CHECK(sort_to_chamber(c).coords() == c);
    Eigen::VectorXd n(3);
    n << -1, 0, -2;
    Eigen::VectorXd expected(3);
    expected << 0, -1, -2;
    CHECK(sort_to_chamber(n).coords() == expected);

    RngStream rng(3, 1);
    for (int t = 0; t < 100; ++t) {
        Eigen::VectorXd x(5);
        for (int i = 0; i < 5; ++i) x(i) = std::round(4 * rng.normal()) / 2;  // with ties
        const auto once = sort_to_chamber(x);
        CHECK(sort_to_chamber(once.coords()).coords() == once.coords());
        std::vector<double> a(x.data(), x.data() + 5), b(once.coords().data(), once.coords().data() + 5);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
    }
    CHECK_THROWS_AS(ChamberPoint{n}, Error);
}

TEST_CASE("casimir_value examples") {
    CHECK(casimir_value(HighestWeight::zero(4)) == 0);
    CHECK(casimir_value(HighestWeight({1, 0})) == 2);
    CHECK(casimir_value(HighestWeight({1, 0, 0})) == 3);
}

TEST_CASE("casimir_value matches the operator on the defining representation") {
    for (int d : {2, 3}) {
        const auto basis = oracle::hermitian_orthonormal_basis(d);
        CHECK(basis.size() == static_cast<std::size_t>(d * d));
        // -sum rho(i H)^2 = sum H^2
        Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(d, d);
        for (const auto& h : basis) c += h * h;
        const Eigen::MatrixXcd expected = Eigen::MatrixXcd::Identity(d, d) * rational_cast<double>(casimir_value(HighestWeight::defining(d)));
        CHECK((c - expected).norm() < 1e-14);
    }
}

TEST_CASE("casimir_value matches the operator on the tensor square") {
    // Irreducible components of C^d (x) C^d are (2,0,...) and (1,1,0,...).
    for (int d : {2, 3}) {
        const auto basis = oracle::hermitian_orthonormal_basis(d);
        Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(d * d, d * d);
        for (const auto& h : basis) {
            const Eigen::MatrixXcd op = oracle::tensor_power_operator(h, 2);
            c += op * op;
        }
        const auto eig = eigenvalues_hermitian(HermitianMatrix(c));
        std::vector<std::int64_t> sym(static_cast<std::size_t>(d), 0), alt(static_cast<std::size_t>(d), 0);
        sym[0] = 2;
        alt[0] = alt[1] = 1;
        const double cs = rational_cast<double>(casimir_value(HighestWeight(sym)));
        const double ca = rational_cast<double>(casimir_value(HighestWeight(alt)));
        const int nsym = d * (d + 1) / 2;
        for (int i = 0; i < d * d; ++i) CHECK(eig(i) == doctest::Approx(i < nsym ? cs : ca).epsilon(1e-12));
    }
}

TEST_CASE("casimir_value is non-negative on polynomial weights") {
    RngStream rng(11, 0);
    for (int t = 0; t < 200; ++t) {
        const int d = 1 + static_cast<int>(rng.next_u64() % 6);
        CHECK(casimir_value(random_weight(rng, d, 0, 8)) >= 0);
    }
}
