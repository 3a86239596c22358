// Command-line surface for the bbwdim library: single queries, dimension
// tables for growing ambient rank, and the verification grids.

#include <cerrno>
#include <cstdlib>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bbwdim/bbwdim.hpp"

namespace {

using bbwdim::BigInt;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 2;
constexpr int kExitCheckFailure = 3;

long long enum_budget_from_env() {
    const char* raw = std::getenv("BBWDIM_ENUM_BUDGET");
    if (raw == nullptr || *raw == '\0') return bbwdim::kDefaultEnumBudget;
    char* end = nullptr;
    errno = 0;
    const long long value = std::strtoll(raw, &end, 10);
    if (errno != 0 || end == raw || *end != '\0' || value <= 0)
        throw bbwdim::Error("BBWDIM_ENUM_BUDGET must be a positive integer");
    return value;
}

bbwdim::Weight parse_lambda(const std::string& text, long long k) {
    if (k <= 0) throw bbwdim::Error("k must be positive");
    std::vector<long long> entries = bbwdim::parse_entries(text);
    if (entries.size() != static_cast<std::size_t>(k))
        throw bbwdim::Error("lambda has " + std::to_string(entries.size()) +
                            " entries, expected k = " + std::to_string(k));
    return bbwdim::make_weight(std::move(entries));
}

json profile_to_json(const bbwdim::CohomologyProfile& profile) {
    json groups = json::array();
    for (const auto& [degree, dim] : profile.groups)
        groups.push_back(json{{"degree", degree}, {"dim", dim.str()}});
    return groups;
}

// Independent recomputation routes backing --check.

BigInt det_power_via_weyl(long long k, long long m, long long l) {
    std::vector<long long> mu(static_cast<std::size_t>(m), 0);
    for (long long i = 0; i < k; ++i) mu[static_cast<std::size_t>(i)] = l;
    return bbwdim::weyl_dim_full(bbwdim::Weight(std::move(mu)));
}

BigInt sym_via_weyl(long long k, long long m, long long r) {
    const bbwdim::Partition shape = r > 0 ? bbwdim::Partition{r} : bbwdim::Partition{};
    return bbwdim::h0_dim(bbwdim::partition_to_weight(shape, static_cast<std::size_t>(k)),
                          static_cast<std::size_t>(m));
}

BigInt sym_det_via_weyl(long long k, long long m, long long r, long long l) {
    std::vector<long long> lambda(static_cast<std::size_t>(k), l);
    lambda[0] = r + l;
    return bbwdim::h0_dim(bbwdim::Weight(std::move(lambda)), static_cast<std::size_t>(m));
}

BigInt pluecker_via_weyl(long long k, long long m, long long l) {
    const BigInt n = bbwdim::binomial(m, k);
    return bbwdim::binomial_big(n + l - 1, l) - det_power_via_weyl(k, m, l);
}

// Tableau-sum recomputation with the multiplicities from the hook formula and
// the dimensions from the enumeration oracle.
BigInt tensor_via_ssyt(long long k, long long m, long long d, long long l,
                       long long budget) {
    BigInt total = 0;
    for (const bbwdim::Partition& p : bbwdim::partitions_of(d, k)) {
        std::vector<long long> shifted = p.parts();
        shifted.resize(static_cast<std::size_t>(k), 0);
        for (long long& x : shifted) x += l;
        total += bbwdim::syt_count(p) *
                 bbwdim::ssyt_count(bbwdim::Partition(std::move(shifted)), m, budget);
    }
    return total;
}

bool word_universe_within(long long m, long long d, long long budget) {
    BigInt universe = 1;
    for (long long i = 0; i < d; ++i) {
        universe *= m;
        if (universe > budget) return false;
    }
    return true;
}

int report_check(const BigInt& value, const BigInt& recomputed, const std::string& route) {
    if (value == recomputed) {
        std::cout << "check: ok (" << route << ")\n";
        return kExitOk;
    }
    std::cerr << "check FAILED: value " << value << " but " << route << " gives " << recomputed
              << "\n";
    return kExitCheckFailure;
}

long long pick(long long user_value, long long fallback) {
    return user_value >= 0 ? user_value : fallback;
}

void print_report(const bbwdim::VerifyReport& report) {
    std::cout << report.suite << ": " << report.cases << " cases, " << report.failures
              << " failures\n";
    if (!report.ok())
        std::cout << "  first counterexample: " << report.first_counterexample << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact cohomology dimensions of equivariant bundles on Grassmannians"};
    app.require_subcommand(1);

    long long k = 0;
    long long m = 0;
    long long r = 0;
    long long l = 0;
    long long d = 0;
    long long m_max = 0;
    std::string lambda_text;
    std::string format = "json";
    bool check = false;

    CLI::App* cmd_dim = app.add_subcommand("dim", "dim H^0 for a dominant weight");
    cmd_dim->add_option("--k", k)->required();
    cmd_dim->add_option("--m", m)->required();
    cmd_dim->add_option("--lambda", lambda_text)->required();

    CLI::App* cmd_cohomology =
        app.add_subcommand("cohomology", "full cohomology profile, any integer weight");
    cmd_cohomology->add_option("--k", k)->required();
    cmd_cohomology->add_option("--m", m)->required();
    cmd_cohomology->add_option("--lambda", lambda_text)->required();

    CLI::App* cmd_det_power = app.add_subcommand("det-power", "determinant power sections");
    cmd_det_power->add_option("--k", k)->required();
    cmd_det_power->add_option("--m", m)->required();
    cmd_det_power->add_option("--l", l)->required();
    cmd_det_power->add_flag("--check", check, "recompute through the Weyl product");

    CLI::App* cmd_sym = app.add_subcommand("sym", "symmetric power sections");
    cmd_sym->add_option("--k", k)->required();
    cmd_sym->add_option("--m", m)->required();
    cmd_sym->add_option("--r", r)->required();
    cmd_sym->add_flag("--check", check, "recompute through the Weyl product");

    CLI::App* cmd_sym_det =
        app.add_subcommand("sym-det", "symmetric power twisted by a determinant power");
    cmd_sym_det->add_option("--k", k)->required();
    cmd_sym_det->add_option("--m", m)->required();
    cmd_sym_det->add_option("--r", r)->required();
    cmd_sym_det->add_option("--l", l)->required();
    cmd_sym_det->add_flag("--check", check, "recompute through the Weyl product");

    CLI::App* cmd_pluecker =
        app.add_subcommand("pluecker", "dimension of the degree-l Pluecker relations");
    cmd_pluecker->add_option("--k", k)->required();
    cmd_pluecker->add_option("--m", m)->required();
    cmd_pluecker->add_option("--l", l)->required();
    cmd_pluecker->add_flag("--check", check, "recompute through the Weyl product");

    CLI::App* cmd_tensor =
        app.add_subcommand("tensor", "tensor power twisted by a determinant power");
    cmd_tensor->add_option("--k", k)->required();
    cmd_tensor->add_option("--m", m)->required();
    cmd_tensor->add_option("--d", d)->required();
    cmd_tensor->add_option("--l", l)->required();
    cmd_tensor->add_flag("--check", check, "recompute through the enumeration oracles");

    CLI::App* cmd_table = app.add_subcommand("table", "dimension table for m = k..mMax");
    cmd_table->add_option("--k", k)->required();
    cmd_table->add_option("--lambda", lambda_text)->required();
    cmd_table->add_option("--m-max", m_max)->required();
    cmd_table->add_option("--format", format)
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    CLI::App* cmd_verify = app.add_subcommand("verify", "run a verification grid");
    std::string suite;
    long long opt_k_max = -1;
    long long opt_l_max = -1;
    long long opt_size_max = -1;
    long long opt_d_max = -1;
    long long opt_m_max = -1;
    cmd_verify->add_option("--suite", suite)
        ->required()
        ->check(CLI::IsMember(
            {"symmetry", "weyl-oracle", "bott-oracle", "schur-weyl", "pluecker", "all"}));
    cmd_verify->add_option("--k-max", opt_k_max);
    cmd_verify->add_option("--l-max", opt_l_max);
    cmd_verify->add_option("--size-max", opt_size_max);
    cmd_verify->add_option("--d-max", opt_d_max);
    cmd_verify->add_option("--m-max", opt_m_max);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitDomainError;
    }

    try {
        const long long budget = enum_budget_from_env();

        if (cmd_dim->parsed()) {
            const bbwdim::Weight lambda = parse_lambda(lambda_text, k);
            std::cout << bbwdim::h0_dim(lambda, static_cast<std::size_t>(m)) << "\n";
            return kExitOk;
        }

        if (cmd_cohomology->parsed()) {
            const bbwdim::Weight lambda = parse_lambda(lambda_text, k);
            if (m < k) throw bbwdim::MTooSmall(static_cast<std::size_t>(m),
                                               static_cast<std::size_t>(k));
            const bbwdim::CohomologyProfile profile =
                bbwdim::grassmannian_cohomology(lambda, static_cast<std::size_t>(m));
            json out;
            out["cohomology"] = profile_to_json(profile);
            if (lambda.lowest() < 0) out["threshold"] = bbwdim::vanishing_threshold(lambda);
            std::cout << out.dump() << "\n";
            return kExitOk;
        }

        if (cmd_det_power->parsed()) {
            const BigInt value = bbwdim::det_power_dim(k, m, l);
            std::cout << value << "\n";
            return check ? report_check(value, det_power_via_weyl(k, m, l), "weyl") : kExitOk;
        }

        if (cmd_sym->parsed()) {
            const BigInt value = bbwdim::sym_dim(k, m, r);
            std::cout << value << "\n";
            return check ? report_check(value, sym_via_weyl(k, m, r), "weyl") : kExitOk;
        }

        if (cmd_sym_det->parsed()) {
            const BigInt value = bbwdim::sym_det_dim(k, m, r, l);
            std::cout << value << "\n";
            return check ? report_check(value, sym_det_via_weyl(k, m, r, l), "weyl") : kExitOk;
        }

        if (cmd_pluecker->parsed()) {
            const BigInt value = bbwdim::pluecker_relations_dim(k, m, l);
            std::cout << value << "\n";
            return check ? report_check(value, pluecker_via_weyl(k, m, l), "weyl") : kExitOk;
        }

        if (cmd_tensor->parsed()) {
            const BigInt value = bbwdim::tensor_det_dim(k, m, d, l);
            std::cout << value << "\n";
            if (!check) return kExitOk;
            int code = report_check(value, tensor_via_ssyt(k, m, d, l, budget), "tableau oracle");
            if (code != kExitOk) return code;
            if (l == 0 && word_universe_within(m, d, budget))
                code = report_check(value, bbwdim::bounded_shape_word_count(k, m, d, budget),
                                    "word oracle");
            return code;
        }

        if (cmd_table->parsed()) {
            const bbwdim::Weight lambda = parse_lambda(lambda_text, k);
            const bbwdim::DimensionTable table =
                bbwdim::dimension_table(lambda, static_cast<std::size_t>(m_max));
            if (format == "csv") {
                std::cout << "m,dim\n";
                for (const auto& [row_m, dim] : table)
                    std::cout << row_m << "," << dim << "\n";
            } else {
                json rows = json::array();
                for (const auto& [row_m, dim] : table)
                    rows.push_back(json{{"m", row_m}, {"dim", dim.str()}});
                std::cout << rows.dump() << "\n";
            }
            return kExitOk;
        }

        if (cmd_verify->parsed()) {
            std::vector<bbwdim::VerifyReport> reports;
            if (suite == "symmetry" || suite == "all")
                reports.push_back(
                    bbwdim::verify_symmetry(pick(opt_k_max, 10), pick(opt_l_max, 8)));
            if (suite == "weyl-oracle" || suite == "all")
                reports.push_back(bbwdim::verify_weyl_oracle(pick(opt_size_max, 6), budget));
            if (suite == "bott-oracle" || suite == "all")
                reports.push_back(
                    bbwdim::verify_bott_oracle(pick(opt_d_max, 10), pick(opt_m_max, 6)));
            if (suite == "schur-weyl" || suite == "all")
                reports.push_back(bbwdim::verify_schur_weyl(pick(opt_d_max, 5),
                                                            pick(opt_m_max, 8), budget));
            if (suite == "pluecker" || suite == "all")
                reports.push_back(
                    bbwdim::verify_pluecker(pick(opt_k_max, 7), pick(opt_l_max, 4)));

            bool all_ok = true;
            for (const bbwdim::VerifyReport& report : reports) {
                print_report(report);
                all_ok = all_ok && report.ok();
            }
            std::cout << (all_ok ? "all checks passed" : "verification FAILED") << "\n";
            return all_ok ? kExitOk : kExitCheckFailure;
        }
    } catch (const bbwdim::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainError;
    }

    return kExitDomainError;
}
