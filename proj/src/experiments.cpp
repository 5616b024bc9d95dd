#include "repmat/experiments.hpp"

#include "repmat/ncmoments.hpp"
#include "repmat/rmt.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <thread>

#ifndef REPMAT_GIT_DESCRIBE
#define REPMAT_GIT_DESCRIBE "unknown"
#endif

namespace repmat {

namespace {

constexpr std::size_t kReplicaSize = 1024;

enum Role : std::uint64_t { restrict_role = 1, tensor_role = 2, clt_role = 3, so3_role = 4, element_role = 5 };

nlohmann::json weight_json(const HighestWeight& w) {
    return std::vector<std::int64_t>(w.entries().begin(), w.entries().end());
}

EmpiricalSpectrum spectrum_from_rows(const Eigen::MatrixXd& rows, std::uint64_t seed, std::string description) {
    EmpiricalSpectrum s(static_cast<int>(rows.cols()), seed, std::move(description));
    s.reserve(static_cast<std::size_t>(rows.rows()));
    for (Eigen::Index i = 0; i < rows.rows(); ++i) s.push(rows.row(i).transpose());
    return s;
}

int degree(const MomentIndex& ks) {
    int q = 0;
    for (int k : ks) q += k;
    return q;
}

double max_abs_entry(const HighestWeight& w) {
    std::int64_t m = 0;
    for (auto e : w.entries()) m = std::max(m, e < 0 ? -e : e);
    return static_cast<double>(m);
}

Eigen::VectorXd to_vector(const HighestWeight& w) {
    Eigen::VectorXd v(w.rank());
    for (int i = 0; i < w.rank(); ++i) v(i) = static_cast<double>(w[i]);
    return v;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::invalid_argument, what);
}

}  // namespace

std::string build_version() { return REPMAT_GIT_DESCRIBE; }

int worker_threads() {
    if (const char* env = std::getenv("REPMAT_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

Eigen::MatrixXd sample_rows(std::size_t samples, int width, std::uint64_t seed, std::uint64_t role,
                            const std::function<Eigen::VectorXd(RngStream&)>& draw) {
    const std::size_t replicas = (samples + kReplicaSize - 1) / kReplicaSize;
    Eigen::MatrixXd out(static_cast<Eigen::Index>(samples), width);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t r = next++; r < replicas; r = next++) {
            RngStream rng(seed, (role << 40) | r);
            const std::size_t begin = r * kReplicaSize;
            const std::size_t end = std::min(samples, begin + kReplicaSize);
            for (std::size_t i = begin; i < end; ++i) out.row(static_cast<Eigen::Index>(i)) = draw(rng).transpose();
        }
    };
    const int threads = std::min<int>(worker_threads(), static_cast<int>(std::max<std::size_t>(replicas, 1)));
    if (threads <= 1) {
        work();
        return out;
    }
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    return out;
}

double default_moment_tolerance(int degree, double bound, int spread, double scale) {
    return degree * std::pow(std::max(bound, 1.0), degree - 1) * std::max(spread, 1) / scale;
}

nlohmann::json report_json(const ExperimentResult& r) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.report.rows) {
        nlohmann::json j{{"label", row.label},
                         {"ks", row.ks},
                         {"reference", row.reference},
                         {"estimate", row.estimate},
                         {"standard_error", row.standard_error},
                         {"tolerance", row.tolerance},
                         {"error", row.error()},
                         {"pass", row.pass}};
        if (row.estimate_imag != 0) j["estimate_imag"] = row.estimate_imag;
        if (row.one_sided) j["one_sided"] = true;
        rows.push_back(std::move(j));
    }
    return {{"schema_version", report_schema_version},
            {"tool", "repmat"},
            {"build", build_version()},
            {"experiment", r.name},
            {"rng", {{"algorithm", std::string(RngStream::algorithm)}, {"seed", r.seed}}},
            {"config", r.config},
            {"rows", rows},
            {"details", r.details},
            {"pass", r.pass()}};
}

void write_csv(std::ostream& os, const ExperimentResult& r) {
    for (std::size_t i = 0; i < r.csv_header.size(); ++i) os << (i ? "," : "") << r.csv_header[i];
    os << '\n';
    char buf[40];
    for (Eigen::Index i = 0; i < r.csv_rows.rows(); ++i) {
        for (Eigen::Index j = 0; j < r.csv_rows.cols(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", r.csv_rows(i, j));
            os << (j ? "," : "") << buf;
        }
        os << '\n';
    }
}

void write_table(std::ostream& os, const ExperimentResult& r) {
    bool complex = false;
    for (const auto& row : r.report.rows) complex = complex || row.estimate_imag != 0;
    char buf[256];
    os << "# " << r.name << " (seed " << r.seed << ")\n";
    std::snprintf(buf, sizeof buf, "%-28s %16s %16s%s %11s %11s  %s\n", "row", "reference", "estimate",
                  complex ? "   estimate(imag)" : "", "std.err", "tolerance", "result");
    os << buf;
    for (const auto& row : r.report.rows) {
        char imag[24] = "";
        if (complex) std::snprintf(imag, sizeof imag, " %16.10g", row.estimate_imag);
        std::snprintf(buf, sizeof buf, "%-28s %16.10g %16.10g%s %11.3g %11.3g  %s\n", row.label.c_str(), row.reference,
                      row.estimate, imag, row.standard_error, row.tolerance, row.pass ? "PASS" : "FAIL");
        os << buf;
    }
    os << (r.pass() ? "overall: PASS\n" : "overall: FAIL\n");
}

ExperimentResult run_restrict_limit(const RestrictLimitConfig& cfg) {
    const int big_rank = cfg.lambda0.rank();
    const int d = cfg.target_rank;
    if (d < 1 || d >= big_rank) throw Error(ErrorCode::rank_constraint, "restrict-limit needs 1 <= d < d'");
    require(cfg.scale >= 1, "scale L must be >= 1");
    require(cfg.samples >= 2, "need at least two samples");
    const Eigen::VectorXd eigs = cfg.matrix_eigenvalues.value_or(to_vector(cfg.lambda0));
    if (eigs.size() != big_rank) throw Error(ErrorCode::rank_mismatch, "matrix eigenvalues must have length d'");

    const auto exact = restrict(cfg.lambda0.scaled(cfg.scale), d);
    const ScaledMeasure scaled(exact, Real50(1) / Real50(cfg.scale));

    const auto model = InvariantMatrixModel::fixed(sort_to_chamber(eigs).coords());
    const Eigen::MatrixXd rows = sample_rows(cfg.samples, d, cfg.seed, restrict_role, [&](RngStream& rng) {
        return Eigen::VectorXd(eigenvalues_hermitian(corner(sample_invariant(model, rng), d)));
    });
    const auto spectra = spectrum_from_rows(rows, cfg.seed, "corner " + std::to_string(d) + " of " + model.description);

    const std::vector<MomentIndex> ks{{1}, {2}, {3}, {1, 1}};
    ReportTolerances tol;
    tol.wasserstein = cfg.w1_tolerance;
    for (const auto& m : ks)
        tol.moments.push_back(cfg.tolerance.value_or(
            default_moment_tolerance(degree(m), max_abs_entry(cfg.lambda0), big_rank - 1, static_cast<double>(cfg.scale))));

    ExperimentResult r;
    r.name = "restrict-limit";
    r.seed = cfg.seed;
    r.report = compare_report(scaled, spectra, ks, tol);

    if (big_rank == 2 && d == 1) {
        // The 1 x 1 corner of a Haar orbit in U(2) is uniform between the two eigenvalues.
        const SpectralLaw exact_law(scaled), sample_law(spectra);
        if (cfg.lambda0[0] > cfg.lambda0[1]) {
            MomentRecord row;
            row.label = "W1(exact, uniform)";
            row.estimate = wasserstein1(exact_law.marginal(0),
                                        UniformInterval{static_cast<double>(cfg.lambda0[1]), static_cast<double>(cfg.lambda0[0])});
            row.tolerance = cfg.w1_tolerance;
            row.evaluate();
            r.report.add(row);
        }
        const double hi = std::max(eigs(0), eigs(1)), lo = std::min(eigs(0), eigs(1));
        if (hi > lo) {
            MomentRecord row;
            row.label = "W1(samples, uniform)";
            row.estimate = wasserstein1(sample_law.marginal(0), UniformInterval{lo, hi});
            row.tolerance = cfg.w1_tolerance;
            row.evaluate();
            r.report.add(row);
        }
    }

    r.config = {{"lambda0", weight_json(cfg.lambda0)},
                {"source_rank", big_rank},
                {"target_rank", d},
                {"scale", cfg.scale},
                {"samples", cfg.samples},
                {"seed", cfg.seed},
                {"matrix_eigenvalues", std::vector<double>(eigs.data(), eigs.data() + eigs.size())},
                {"w1_tolerance", cfg.w1_tolerance}};
    if (cfg.tolerance) r.config["tolerance"] = *cfg.tolerance;
    r.details = {{"exact_support", exact.size()}, {"exact_total_dim", exact.total_dim().str()}};
    for (int i = 0; i < d; ++i) r.csv_header.push_back("x" + std::to_string(i + 1));
    r.csv_rows = rows;
    return r;
}

ExperimentResult run_tensor_limit(const TensorLimitConfig& cfg) {
    const int d = cfg.lambda0.rank();
    if (cfg.mu0.rank() != d) throw Error(ErrorCode::rank_mismatch, "tensor-limit: weights of different rank");
    require(cfg.scale >= 1, "scale L must be >= 1");
    require(cfg.samples >= 2, "need at least two samples");

    const auto mult = tensor_decompose(cfg.lambda0.scaled(cfg.scale), cfg.mu0.scaled(cfg.scale));
    if (mult.size() > cfg.state_cap)
        throw Error(ErrorCode::state_cap_exceeded, "tensor-limit: decomposition exceeds the state cap; use a smaller --scale");
    const WeightMeasure exact(mult);
    const ScaledMeasure scaled(exact, Real50(1) / Real50(cfg.scale));

    const auto a = InvariantMatrixModel::fixed(to_vector(cfg.lambda0));
    const auto b = InvariantMatrixModel::fixed(to_vector(cfg.mu0));
    const Eigen::MatrixXd rows = sample_rows(cfg.samples, d, cfg.seed, tensor_role, [&](RngStream& rng) {
        return Eigen::VectorXd(eigenvalues_hermitian(sum_independent(a, b, rng)));
    });
    const auto spectra = spectrum_from_rows(rows, cfg.seed, a.description + " + " + b.description);

    const double bound = max_abs_entry(cfg.lambda0) + max_abs_entry(cfg.mu0);
    const double L = static_cast<double>(cfg.scale);
    const std::vector<MomentIndex> ks{{1}, {2}, {3}, {4}, {1, 1}, {2, 1}};
    ReportTolerances tol;
    tol.wasserstein = cfg.w1_tolerance.value_or(0.02 + std::max(bound, 1.0) * std::max(d - 1, 1) / L);
    for (const auto& m : ks) tol.moments.push_back(cfg.tolerance.value_or(default_moment_tolerance(degree(m), bound, d - 1, L)));

    ExperimentResult r;
    r.name = "tensor-limit";
    r.seed = cfg.seed;
    r.report = compare_report(scaled, spectra, ks, tol);
    r.config = {{"lambda0", weight_json(cfg.lambda0)}, {"mu0", weight_json(cfg.mu0)}, {"d", d},
                {"scale", cfg.scale}, {"samples", cfg.samples}, {"seed", cfg.seed},
                {"w1_tolerance", tol.wasserstein}, {"state_cap", cfg.state_cap}};
    if (cfg.tolerance) r.config["tolerance"] = *cfg.tolerance;
    r.details = {{"exact_support", exact.size()}, {"exact_total_dim", exact.total_dim().str()}};
    for (int i = 0; i < d; ++i) r.csv_header.push_back("x" + std::to_string(i + 1));
    r.csv_rows = rows;
    return r;
}

std::vector<Eigen::MatrixXcd> clt_elements(const std::string& kind, int d, int count, std::uint64_t seed) {
    std::vector<Eigen::MatrixXcd> out;
    if (kind == "e11") {
        Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(d, d);
        e(0, 0) = 1;
        out.assign(static_cast<std::size_t>(count), e);
    } else if (kind == "pauli-z") {
        require(d == 2, "pauli-z elements need d = 2");
        Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(2, 2);
        z(0, 0) = 1;
        z(1, 1) = -1;
        out.assign(static_cast<std::size_t>(count), z);
    } else if (kind == "random") {
        RngStream rng(seed, element_role << 40);
        auto draw = [&] { return static_cast<double>(static_cast<int>(rng.next_u64() % 5) - 2); };
        for (int t = 0; t < count; ++t) {
            Eigen::MatrixXcd h(d, d);
            for (int i = 0; i < d; ++i) {
                h(i, i) = draw();
                for (int j = i + 1; j < d; ++j) {
                    const double re = draw();
                    const double im = draw();
                    h(i, j) = {re, im};
                    h(j, i) = std::conj(h(i, j));
                }
            }
            out.push_back(h);
        }
    } else {
        throw Error(ErrorCode::invalid_argument, "unknown element kind '" + kind + "' (random, e11, pauli-z)");
    }
    return out;
}

ExperimentResult run_clt(const CltConfig& cfg) {
    require(cfg.d >= 1, "d must be >= 1");
    require(!cfg.ns.empty() && !cfg.ks.empty(), "need at least one n and one k");
    require(cfg.samples >= 2, "need at least two samples");
    const TraceMomentOptions opts;
    int max_k = 0;
    for (int k : cfg.ks) {
        if (k < 1) throw Error(ErrorCode::invalid_argument, "moment orders must be >= 1");
        if (k > opts.max_k) throw Error(ErrorCode::k_cap_exceeded, "moment order " + std::to_string(k) + " exceeds the cap " + std::to_string(opts.max_k));
        max_k = std::max(max_k, k);
    }
    for (long long n : cfg.ns) require(n >= 1, "tensor powers n must be >= 1");
    auto ns = cfg.ns;
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());

    const auto raw = clt_elements(cfg.elements, cfg.d, max_k, cfg.seed);
    std::vector<LieElement> xs;
    for (const auto& h : raw) xs.push_back(LieElement{HermitianMatrix(h)});

    ExperimentResult r;
    r.name = "clt";
    r.seed = cfg.seed;
    nlohmann::json fits = nlohmann::json::array();

    for (int k : cfg.ks) {
        const std::span<const LieElement> slots(xs.data(), static_cast<std::size_t>(k));
        const double wick = wick_limit_moment(slots);
        std::vector<std::complex<double>> m;
        for (long long n : ns) m.push_back(tensor_power_trace_moment(slots, n, true, 1 / std::sqrt(static_cast<double>(n))));
        double magnitude = 0;
        for (const auto& v : m) magnitude = std::max(magnitude, std::abs(v));
        const bool vanishes = (k % 2 == 1) && magnitude <= 1e-12;

        // k = 1, 2 and identically vanishing odd moments are exact. Otherwise C is the smallest
        // constant with |m(n) - Wick| <= C / n (even k) or C / sqrt(n) (odd k) on the grid, and
        // the rate itself is checked by the decay ratio between n and 4n: >= 3.5 for 1/n
        // (exactly 4 asymptotically), >= 1.9 for 1/sqrt(n) (2 asymptotically).
        const bool exact = k <= 2 || vanishes;
        const bool even = k % 2 == 0;
        double c = 0;
        if (!exact)
            for (std::size_t i = 0; i < ns.size(); ++i) {
                const double n = static_cast<double>(ns[i]);
                c = std::max(c, (even ? n : std::sqrt(n)) * std::abs(m[i] - wick));
            }
        fits.push_back({{"k", k}, {"wick", wick}, {"rate", even ? "1/n" : "1/sqrt(n)"}, {"C", c}});

        for (std::size_t i = 0; i < ns.size(); ++i) {
            const double n = static_cast<double>(ns[i]);
            MomentRecord row;
            row.label = "nc k=" + std::to_string(k) + " n=" + std::to_string(ns[i]);
            row.ks.assign(static_cast<std::size_t>(k), 1);
            row.reference = wick;
            row.estimate = m[i].real();
            row.estimate_imag = m[i].imag();
            if (exact)
                row.tolerance = 1e-12 * std::max(1.0, std::abs(wick));
            else
                row.tolerance = (even ? c / n : c / std::sqrt(n)) * (1 + 1e-12);
            row.evaluate();
            r.report.add(row);
        }
        if (exact) continue;
        for (std::size_t i = 0; i < ns.size(); ++i) {
            auto it = std::find(ns.begin(), ns.end(), 4 * ns[i]);
            if (it == ns.end()) continue;
            MomentRecord row;
            row.label = std::string(even ? "even" : "odd") + " ratio k=" + std::to_string(k) + " n=" + std::to_string(ns[i]);
            row.reference = even ? 3.5 : 1.9;
            row.estimate = std::abs(m[i] - wick) / std::abs(m[static_cast<std::size_t>(it - ns.begin())] - wick);
            row.one_sided = true;
            row.evaluate();
            r.report.add(row);
        }
    }

    // Weight side: random highest weight of the n-th tensor power, centered and scaled.
    nlohmann::json weight_fit;
    double scale_fit = 1 / std::sqrt(static_cast<double>(cfg.d));
    double v_fit = 0;
    if (cfg.d >= 2) {
        const long long n = ns.back();
        TensorPowerOptions tp;
        const auto measure = tensor_power_measure(HighestWeight::defining(cfg.d), static_cast<int>(n), tp);
        const Real50 eps = 1 / boost::multiprecision::sqrt(Real50(n));
        std::vector<Real50> center(static_cast<std::size_t>(cfg.d), Real50(n) / cfg.d * eps);
        const ScaledMeasure sm(measure, eps, center);
        const int p2[] = {2}, p11[] = {1, 1}, p4[] = {4};
        const double m2 = static_cast<double>(sm.moment(p2));
        const double m11 = static_cast<double>(sm.moment(p11));
        const double dd = cfg.d;
        const double s2 = (m2 - m11 / dd) / (dd * dd - 1);
        scale_fit = std::sqrt(s2);
        v_fit = s2 > 0 ? m11 / (dd * dd * s2) : 0;
        weight_fit = {{"n", n},
                      {"scale_sq", s2},
                      {"scale_sq_limit", 1 / dd},
                      {"scale_sq_residual", s2 - 1 / dd},
                      {"v", v_fit},
                      {"p2", m2},
                      {"p4", static_cast<double>(sm.moment(p4))}};
    }

    // Monte Carlo: X = (g - tr g) / sqrt(d) has covariance E Tr(X a) Tr(X b) = tr(a b) on
    // traceless a, b, so E prod Tr(X x_i) is the Wick moment. The fitted model s (g - tr g + x)
    // provides the sample spectra.
    std::vector<Eigen::MatrixXcd> centered;
    for (const auto& x : xs) centered.push_back(x.centered().h.matrix());
    const int nk = static_cast<int>(cfg.ks.size());
    const int d = cfg.d;
    const double inv_sqrt_d = 1 / std::sqrt(static_cast<double>(d));
    const Eigen::MatrixXd rows = sample_rows(cfg.samples, d + nk, cfg.seed, clt_role, [&](RngStream& rng) {
        const HermitianMatrix g0 = sample_gue_v(d, 0, rng);
        const double x = v_fit > 0 ? std::sqrt(v_fit) * rng.normal() : 0.0;
        Eigen::VectorXd out(d + nk);
        const Eigen::MatrixXcd fitted = scale_fit * (g0.matrix() + x * Eigen::MatrixXcd::Identity(d, d));
        out.head(d) = eigenvalues_hermitian(HermitianMatrix(fitted));
        std::vector<double> traces;
        for (int i = 0; i < max_k; ++i) traces.push_back(inv_sqrt_d * (g0.matrix() * centered[static_cast<std::size_t>(i)]).trace().real());
        for (int j = 0; j < nk; ++j) {
            double prod = 1;
            for (int i = 0; i < cfg.ks[static_cast<std::size_t>(j)]; ++i) prod *= traces[static_cast<std::size_t>(i)];
            out(d + j) = prod;
        }
        return out;
    });
    for (int j = 0; j < nk; ++j) {
        MomentAccumulator acc;
        for (Eigen::Index i = 0; i < rows.rows(); ++i) acc.add(rows(i, d + j));
        const int k = cfg.ks[static_cast<std::size_t>(j)];
        MomentRecord row;
        row.label = "gue k=" + std::to_string(k);
        row.ks.assign(static_cast<std::size_t>(k), 1);
        row.reference = wick_limit_moment(std::span<const LieElement>(xs.data(), static_cast<std::size_t>(k)));
        row.estimate = acc.estimate().mean;
        row.standard_error = acc.estimate().standard_error;
        row.evaluate();
        r.report.add(row);
    }
    if (cfg.d >= 2) {
        const auto spectra = spectrum_from_rows(rows.leftCols(d), cfg.seed, "fitted GUE_v");
        const int p4[] = {4};
        const auto est = power_sums_empirical(spectra, p4);
        weight_fit["p4_fitted_gue"] = est.mean;
        weight_fit["p4_fitted_gue_se"] = est.standard_error;
    }

    r.config = {{"d", cfg.d}, {"ns", ns}, {"ks", cfg.ks}, {"samples", cfg.samples}, {"seed", cfg.seed}, {"elements", cfg.elements}};
    r.details = {{"rate_fits", fits}, {"weight_fit", weight_fit}, {"gue_scale", scale_fit}, {"gue_v", v_fit}};
    for (int i = 0; i < d; ++i) r.csv_header.push_back("x" + std::to_string(i + 1));
    r.csv_rows = rows.leftCols(d);
    return r;
}

ExperimentResult run_so3(const So3Config& cfg) {
    require(cfg.magnitude > 0 && std::isfinite(cfg.magnitude), "|J| must be positive");
    require(cfg.samples >= 2, "need at least two samples");
    const double J = cfg.magnitude;
    Eigen::Matrix3d j0 = Eigen::Matrix3d::Zero();
    j0(0, 1) = J;  // J_z slot of the antisymmetric angular-momentum matrix
    j0(1, 0) = -J;

    const Eigen::MatrixXd rows = sample_rows(cfg.samples, 1, cfg.seed, so3_role, [&](RngStream& rng) {
        const Eigen::MatrixXd o = sample_haar_rotation(3, rng);
        const Eigen::MatrixXd m = o * j0 * o.transpose();
        Eigen::VectorXd out(1);
        out(0) = m(0, 1);
        return out;
    });
    const auto samples = spectrum_from_rows(rows, cfg.seed, "J_z of a Haar-rotated angular momentum matrix");
    const SpectralLaw sample_law(samples);

    ExperimentResult r;
    r.name = "so3";
    r.seed = cfg.seed;
    MomentRecord arch;
    arch.label = "W1(Jz, uniform)";
    arch.estimate = wasserstein1(sample_law.marginal(0), UniformInterval{-J, J});
    arch.tolerance = 0.01 * J;
    arch.evaluate();
    r.report.add(arch);

    nlohmann::json spins = nlohmann::json::array();
    for (int twice_j : cfg.doubled_spins) {
        require(twice_j >= 1, "spins must be positive (2j >= 1)");
        // Spin j of SU(2) is the U(2) weight (2j, 0); restricted to the torus U(1) its weights are
        // m = 0..2j, and J_z = m - j.
        const auto exact = restrict(HighestWeight({twice_j, 0}), 1);
        bool uniform = exact.size() == static_cast<std::size_t>(twice_j + 1);
        for (const auto& [w, e] : exact.entries()) uniform = uniform && e.probability == Rational(1, twice_j + 1);
        const std::string tag = "2j=" + std::to_string(twice_j);

        MomentRecord u;
        u.label = "spin " + tag + " uniform";
        u.estimate = uniform ? 0 : 1;
        u.evaluate();
        r.report.add(u);

        // x = (m - j) |J| / j
        const Real50 eps = 2 * Real50(J) / twice_j;
        const ScaledMeasure scaled(exact, eps, {Real50(J)});
        const SpectralLaw law(scaled);
        MomentRecord disc;
        disc.label = "W1(spin " + tag + ", uniform)";
        disc.estimate = wasserstein1(law.marginal(0), UniformInterval{-J, J});
        disc.tolerance = J / (twice_j + 1) * (1 + 1e-12);
        disc.evaluate();
        r.report.add(disc);

        MomentRecord vs;
        vs.label = "W1(spin " + tag + ", Jz)";
        vs.estimate = wasserstein1_sorted(law, sample_law);
        vs.tolerance = 0.01 * J + J / (twice_j + 1);
        vs.evaluate();
        r.report.add(vs);
        spins.push_back({{"doubled_spin", twice_j}, {"points", exact.size()}, {"uniform", uniform}});
    }

    r.config = {{"magnitude", J}, {"samples", cfg.samples}, {"seed", cfg.seed}, {"doubled_spins", cfg.doubled_spins}};
    r.details = {{"spins", spins}};
    r.csv_header = {"jz"};
    r.csv_rows = rows;
    return r;
}

}  // namespace repmat
