// repmat: exact U(d) decompositions and random-matrix limit experiments.

#include "repmat/decompose.hpp"
#include "repmat/error.hpp"
#include "repmat/experiments.hpp"
#include "repmat/weights.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace repmat;

constexpr int exit_failed_rows = 1;
constexpr int exit_error = 2;

[[noreturn]] void fail(std::string_view code, const std::string& message) {
    std::cerr << nlohmann::json{{"error", code}, {"message", message}}.dump() << '\n';
    std::exit(exit_error);
}

std::vector<std::string> split(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
    return parts;
}

template <class Int>
std::vector<Int> parse_ints(const std::string& text, const char* flag) {
    std::vector<Int> out;
    for (const auto& p : split(text)) {
        Int v{};
        auto [end, ec] = std::from_chars(p.data(), p.data() + p.size(), v);
        if (ec != std::errc() || end != p.data() + p.size() || p.empty())
            throw Error(ErrorCode::invalid_argument, std::string(flag) + ": expected comma-separated integers, got '" + text + "'");
        out.push_back(v);
    }
    if (out.empty()) throw Error(ErrorCode::invalid_argument, std::string(flag) + ": empty list");
    return out;
}

std::vector<double> parse_doubles(const std::string& text, const char* flag) {
    std::vector<double> out;
    for (const auto& p : split(text)) {
        char* end = nullptr;
        const double v = std::strtod(p.c_str(), &end);
        if (p.empty() || *end != '\0' || !std::isfinite(v))
            throw Error(ErrorCode::invalid_argument, std::string(flag) + ": expected comma-separated numbers, got '" + text + "'");
        out.push_back(v);
    }
    return out;
}

HighestWeight weight_arg(const std::string& text, int d) {
    auto w = parse_weight(text);
    if (d > 0 && w.rank() != d)
        throw Error(ErrorCode::rank_mismatch, "weight " + w.str() + " has rank " + std::to_string(w.rank()) + ", expected d = " + std::to_string(d));
    return w;
}

void write_json(const std::string& path, const nlohmann::json& j) {
    std::ofstream os(path);
    if (!os) throw Error(ErrorCode::invalid_argument, "cannot write " + path);
    os << j.dump(2) << '\n';
}

nlohmann::json exact_header(const std::string& command) {
    return {{"schema_version", report_schema_version}, {"tool", "repmat"}, {"build", build_version()}, {"command", command}};
}

int print_multiplicities(const std::string& command, const MultiplicityMap& m, const std::string& json_path) {
    std::cout << "weight,multiplicity,dim\n";
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [w, mult] : m) {
        const auto dim = dim_weyl(w).str();
        std::cout << '"' << w.str() << "\"," << mult.str() << ',' << dim << '\n';
        rows.push_back({{"weight", std::vector<std::int64_t>(w.entries().begin(), w.entries().end())},
                        {"multiplicity", mult.str()},
                        {"dim", dim}});
    }
    if (!json_path.empty()) {
        auto j = exact_header(command);
        j["rows"] = rows;
        write_json(json_path, j);
    }
    return 0;
}

int finish(const ExperimentResult& r, const std::string& csv_path, const std::string& json_path) {
    if (!csv_path.empty()) {
        std::ofstream os(csv_path);
        if (!os) throw Error(ErrorCode::invalid_argument, "cannot write " + csv_path);
        write_csv(os, r);
    }
    if (!json_path.empty()) write_json(json_path, report_json(r));
    write_table(std::cout, r);
    return r.pass() ? 0 : exit_failed_rows;
}

void check_range(double v, double lo, double hi, const char* flag) {
    if (!(v >= lo && v <= hi))
        throw Error(ErrorCode::invalid_argument, std::string(flag) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

struct Common {
    std::uint64_t seed = 0;
    std::size_t samples = 100000;
    std::string out, json;
    std::optional<double> tolerance;
};

void add_stochastic(CLI::App* sub, Common& c) {
    sub->add_option("--seed", c.seed, "RNG seed")->required();
    sub->add_option("--samples", c.samples, "Monte Carlo sample count")->capture_default_str();
    sub->add_option("--out", c.out, "CSV file for the sampled spectra");
    sub->add_option("--json-report", c.json, "JSON report file");
    sub->add_option("--tolerance", c.tolerance, "moment tolerance override");
}

void check_common(const Common& c) {
    check_range(static_cast<double>(c.samples), 2, 1e8, "--samples");
    if (c.tolerance) check_range(*c.tolerance, 0, 1e300, "--tolerance");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact U(d) representation data and random-matrix limit experiments"};
    app.require_subcommand(1);
    app.set_version_flag("--version", build_version());

    int d = 0;
    std::string w_text, a_text, b_text, json_path;
    int target = 0;

    auto* dim = app.add_subcommand("dim", "Weyl dimension of an irreducible representation");
    auto* cas = app.add_subcommand("casimir", "Quadratic Casimir eigenvalue");
    auto* ten = app.add_subcommand("tensor", "Decompose V_a (x) V_b");
    auto* br = app.add_subcommand("branch", "Branch to U(d-1) (or to U(--target))");
    for (auto* sub : {dim, cas, br}) {
        sub->add_option("--d", d, "rank");
        sub->add_option("--w", w_text, "highest weight, e.g. 2,1,0")->required();
        sub->add_option("--json-report", json_path, "JSON output file");
    }
    br->add_option("--target", target, "target rank (default d-1)");
    ten->add_option("--d", d, "rank");
    ten->add_option("--a", a_text, "first highest weight")->required();
    ten->add_option("--b", b_text, "second highest weight")->required();
    ten->add_option("--json-report", json_path, "JSON output file");

    Common common;
    std::string lambda_text, mu_text, eigs_text, ns_text, ks_text, spins_text;
    std::int64_t scale = 0;
    double w1_tol = -1, magnitude = 1;
    std::size_t state_cap = 1'000'000;
    std::string elements = "random";
    int d_prime = 0;

    auto* rl = app.add_subcommand("restrict-limit", "Restriction of L*lambda to U(d) vs corners of invariant matrices");
    add_stochastic(rl, common);
    rl->add_option("--lambda", lambda_text, "lambda0, rank d'")->required();
    rl->add_option("--d-prime", d_prime, "rank of lambda0 (checked)");
    rl->add_option("--d", target, "target rank d < d'")->required();
    rl->add_option("--scale", scale, "L (default 200)");
    rl->add_option("--w1-tolerance", w1_tol, "W1 tolerance (default 0.02)");
    rl->add_option("--matrix-eigs", eigs_text, "matrix eigenvalues (negative control; default lambda0)");

    auto* tl = app.add_subcommand("tensor-limit", "V_{L lambda} (x) V_{L mu} vs sums of invariant matrices");
    add_stochastic(tl, common);
    tl->add_option("--lambda", lambda_text, "lambda0")->required();
    tl->add_option("--mu", mu_text, "mu0")->required();
    tl->add_option("--d", d, "rank (checked)");
    tl->add_option("--scale", scale, "L (default 20)");
    tl->add_option("--w1-tolerance", w1_tol, "W1 tolerance");
    tl->add_option("--state-cap", state_cap, "maximum number of components")->capture_default_str();

    auto* clt = app.add_subcommand("clt", "Centered tensor powers at scale 1/sqrt(n) vs the Gaussian limit");
    add_stochastic(clt, common);
    clt->add_option("--d", d, "rank (default 2)");
    clt->add_option("--n", ns_text, "tensor powers (default 16,64,256)");
    clt->add_option("--k", ks_text, "moment orders (default 1,2,3,4,5,6)");
    clt->add_option("--elements", elements, "random | e11 | pauli-z")->capture_default_str();

    auto* so3 = app.add_subcommand("so3", "J_z of a random rotation vs Archimedes' uniform law");
    add_stochastic(so3, common);
    so3->add_option("--magnitude,--J", magnitude, "|J|")->capture_default_str();
    so3->add_option("--spins", spins_text, "doubled spins 2j (default 1,2,20,100,400)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        fail("parse_error", e.what());
    }

    try {
        if (*dim) {
            const auto w = weight_arg(w_text, d);
            const auto v = dim_weyl(w).str();
            std::cout << v << '\n';
            if (!json_path.empty()) {
                auto j = exact_header("dim");
                j["weight"] = std::vector<std::int64_t>(w.entries().begin(), w.entries().end());
                j["dim"] = v;
                write_json(json_path, j);
            }
            return 0;
        }
        if (*cas) {
            const auto w = weight_arg(w_text, d);
            const auto v = to_string(casimir_value(w));
            std::cout << v << '\n';
            if (!json_path.empty()) {
                auto j = exact_header("casimir");
                j["weight"] = std::vector<std::int64_t>(w.entries().begin(), w.entries().end());
                j["casimir"] = v;
                write_json(json_path, j);
            }
            return 0;
        }
        if (*ten) {
            const auto a = weight_arg(a_text, d);
            const auto b = weight_arg(b_text, a.rank());
            return print_multiplicities("tensor", tensor_decompose(a, b), json_path);
        }
        if (*br) {
            const auto w = weight_arg(w_text, d);
            const int t = target > 0 ? target : w.rank() - 1;
            return print_multiplicities("branch", restrict_multiplicities(w, t), json_path);
        }

        check_common(common);
        if (*rl) {
            RestrictLimitConfig cfg;
            cfg.lambda0 = weight_arg(lambda_text, d_prime);
            cfg.target_rank = target;
            if (scale) cfg.scale = scale;
            check_range(static_cast<double>(cfg.scale), 1, 1e5, "--scale");
            cfg.samples = common.samples;
            cfg.seed = common.seed;
            cfg.tolerance = common.tolerance;
            if (w1_tol >= 0) cfg.w1_tolerance = w1_tol;
            if (!eigs_text.empty()) {
                const auto e = parse_doubles(eigs_text, "--matrix-eigs");
                cfg.matrix_eigenvalues = Eigen::Map<const Eigen::VectorXd>(e.data(), static_cast<Eigen::Index>(e.size()));
            }
            return finish(run_restrict_limit(cfg), common.out, common.json);
        }
        if (*tl) {
            TensorLimitConfig cfg;
            cfg.lambda0 = weight_arg(lambda_text, d);
            cfg.mu0 = weight_arg(mu_text, cfg.lambda0.rank());
            if (scale) cfg.scale = scale;
            check_range(static_cast<double>(cfg.scale), 1, 1e4, "--scale");
            cfg.samples = common.samples;
            cfg.seed = common.seed;
            cfg.tolerance = common.tolerance;
            if (w1_tol >= 0) cfg.w1_tolerance = w1_tol;
            cfg.state_cap = state_cap;
            return finish(run_tensor_limit(cfg), common.out, common.json);
        }
        if (*clt) {
            CltConfig cfg;
            if (d) cfg.d = d;
            check_range(cfg.d, 1, 16, "--d");
            if (!ns_text.empty()) cfg.ns = parse_ints<long long>(ns_text, "--n");
            if (!ks_text.empty()) cfg.ks = parse_ints<int>(ks_text, "--k");
            for (long long n : cfg.ns) check_range(static_cast<double>(n), 1, 4096, "--n");
            cfg.samples = common.samples;
            cfg.seed = common.seed;
            cfg.elements = elements;
            return finish(run_clt(cfg), common.out, common.json);
        }
        if (*so3) {
            So3Config cfg;
            cfg.magnitude = magnitude;
            cfg.samples = common.samples;
            cfg.seed = common.seed;
            if (!spins_text.empty()) cfg.doubled_spins = parse_ints<int>(spins_text, "--spins");
            for (int s : cfg.doubled_spins) check_range(s, 1, 2000, "--spins");
            return finish(run_so3(cfg), common.out, common.json);
        }
    } catch (const Error& e) {
        fail(error_code_name(e.code()), e.what());
    } catch (const std::exception& e) {
        fail("internal_error", e.what());
    }
    return exit_error;
}
