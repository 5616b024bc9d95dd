#pragma once

#include "repmat/compare.hpp"
#include "repmat/decompose.hpp"
#include "repmat/rng.hpp"

#include <json.hpp>

#include <Eigen/Core>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace repmat {

inline constexpr int report_schema_version = 1;

/// Version string of this build (git describe), embedded in reports.
std::string build_version();

/// Worker threads for sampling: REPMAT_THREADS if set, else the hardware concurrency.
int worker_threads();

/// Draws `samples` vectors with `draw`, in fixed-size replicas on streams (seed, role << 40 | replica).
/// The output depends only on (seed, role, samples), not on the thread count.
Eigen::MatrixXd sample_rows(std::size_t samples, int width, std::uint64_t seed, std::uint64_t role,
                            const std::function<Eigen::VectorXd(RngStream&)>& draw);

struct ExperimentResult {
    std::string name;
    std::uint64_t seed = 0;
    nlohmann::json config;
    MomentReport report;
    nlohmann::json details = nlohmann::json::object();
    std::vector<std::string> csv_header;
    Eigen::MatrixXd csv_rows;

    bool pass() const noexcept { return report.pass(); }
};

nlohmann::json report_json(const ExperimentResult& r);
/// Header row, then one row per sample, 17 significant digits.
void write_csv(std::ostream& os, const ExperimentResult& r);
/// Fixed-width human-readable report table.
void write_table(std::ostream& os, const ExperimentResult& r);

/// Heuristic finite-scale bias allowance q * B^(q-1) * spread / L for a degree-q moment of
/// eigenvalues bounded by B, with `spread` the spread of the half-sum of positive roots.
double default_moment_tolerance(int degree, double bound, int spread, double scale);

struct RestrictLimitConfig {
    HighestWeight lambda0;  // rank d'
    int target_rank = 1;
    std::int64_t scale = 200;  // L
    std::size_t samples = 100000;
    std::uint64_t seed = 0;
    std::optional<Eigen::VectorXd> matrix_eigenvalues;  // defaults to lambda0
    std::optional<double> tolerance;
    double w1_tolerance = 0.02;
};

/// Exact restriction of L * lambda0 to U(d), rescaled by 1/L, against eigenvalues of the d x d
/// corner of the invariant matrix with spectrum lambda0.
ExperimentResult run_restrict_limit(const RestrictLimitConfig& cfg);

struct TensorLimitConfig {
    HighestWeight lambda0;
    HighestWeight mu0;
    std::int64_t scale = 20;
    std::size_t samples = 100000;
    std::uint64_t seed = 0;
    std::optional<double> tolerance;
    std::optional<double> w1_tolerance;
    std::size_t state_cap = 1'000'000;
};

/// Exact decomposition of V_{L lambda0} (x) V_{L mu0}, rescaled by 1/L, against the spectrum of a
/// sum of independent invariant matrices with spectra lambda0 and mu0.
ExperimentResult run_tensor_limit(const TensorLimitConfig& cfg);

struct CltConfig {
    int d = 2;
    std::vector<long long> ns{16, 64, 256};
    std::vector<int> ks{1, 2, 3, 4, 5, 6};
    std::size_t samples = 100000;
    std::uint64_t seed = 0;
    std::string elements = "random";  // random | e11 | pauli-z
};

/// Non-commutative moments of centered tensor powers of the defining representation at scale
/// 1/sqrt(n) against their Wick limit, a GUE Monte Carlo cross-check, and the (scale, v) fit of
/// the random highest weight of the n-th tensor power.
ExperimentResult run_clt(const CltConfig& cfg);

/// Lie elements used by run_clt, one per moment slot (max_k of them).
std::vector<Eigen::MatrixXcd> clt_elements(const std::string& kind, int d, int count, std::uint64_t seed);

struct So3Config {
    double magnitude = 1;  // |J|
    std::size_t samples = 100000;
    std::uint64_t seed = 0;
    std::vector<int> doubled_spins{1, 2, 20, 100, 400};  // 2j
};

/// J_z of a Haar-rotated 3 x 3 antisymmetric matrix with spectrum {0, +-i|J|} against
/// Uniform[-|J|, |J|], and the exact spin-j weight laws.
ExperimentResult run_so3(const So3Config& cfg);

}  // namespace repmat
