// Command-line front end.
//
//   quadcong verify [--prime-min N] [--prime-max N] [--n-max N]
//                   [--checks LIST] [--format table|csv|json] [--budget N]
//                   [--jobs N] [--signed] [--out FILE]
//   quadcong coeff N K [--mod M] [--signed] [--budget N]
//   quadcong errata [--prime-min N] [--prime-max N] [--n-max N]
//                   [--format ...] [--out FILE]
//
// Exit codes: 0 everything holds, 1 a congruence failed, 2 usage error,
// 3 a requested row exceeded the size budget.

#include "quadcong/qnomial.hpp"
#include "quadcong/report.hpp"
#include "quadcong/sweep.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace quadcong;

OutputFormat parse_format(const std::string& s) {
    if (s == "table") return OutputFormat::table;
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    throw UsageError("unknown format '" + s + "'");
}

// Writes through either stdout or --out FILE.
template <typename Report>
void emit(const SweepConfig& cfg, const Report& report) {
    if (cfg.out_path) {
        std::ofstream f(*cfg.out_path);
        if (!f) throw UsageError("cannot open output file " + *cfg.out_path);
        write_report(f, cfg, report);
    } else {
        write_report(std::cout, cfg, report);
    }
}

struct VerifyArgs {
    u64 prime_min = 5;
    u64 prime_max = 100;
    u64 n_max = 1;
    std::string checks = "all";
    std::string format = "table";
    u64 budget = kSizeBudgetDefault;
    unsigned jobs = 0;
    bool signed_residues = false;
    std::string out;
};

SweepConfig to_config(const VerifyArgs& a) {
    SweepConfig cfg;
    cfg.prime_min = a.prime_min;
    cfg.prime_max = a.prime_max;
    cfg.n_max = a.n_max;
    cfg.checks = expand_check_tokens(a.checks);
    cfg.format = parse_format(a.format);
    cfg.size_budget = a.budget;
    cfg.jobs = a.jobs;
    cfg.signed_residues = a.signed_residues;
    if (!a.out.empty()) cfg.out_path = a.out;
    return cfg;
}

void add_grid_options(CLI::App* cmd, VerifyArgs& a) {
    cmd->add_option("--prime-min", a.prime_min, "lowest prime (>= 5)");
    cmd->add_option("--prime-max", a.prime_max, "highest prime");
    cmd->add_option("--n-max", a.n_max, "rows n*p-1 for n = 1..n-max");
    cmd->add_option("--format", a.format, "table, csv or json");
    cmd->add_option("--out", a.out, "write the report to a file");
}

int do_verify(const VerifyArgs& a) {
    SweepConfig cfg = to_config(a);
    SweepReport report = run_verify(cfg);
    emit(cfg, report);
    return exit_code_for(report);
}

int do_errata(const VerifyArgs& a) {
    SweepConfig cfg = to_config(a);
    ErrataReport report = run_errata(cfg);
    emit(cfg, report);
    return exit_code_for(report);
}

struct CoeffArgs {
    u64 n = 0;
    i64 k = 0;
    u64 mod = 0;
    u64 budget = kSizeBudgetDefault;
    bool signed_residues = false;
};

int do_coeff(const CoeffArgs& a) {
    if (a.signed_residues && a.mod == 0)
        throw UsageError("--signed requires --mod");
    if (a.mod == 0) {
        std::cout << qnomial_exact(a.n, a.k, a.budget).get_str() << '\n';
        return 0;
    }
    if (a.mod < 2 || a.mod > kMaxModulus)
        throw UsageError("--mod must be in [2, 2^62]");
    if (a.k < 0 || u64(a.k) > 3 * a.n) {
        std::cout << 0 << '\n';
        return 0;
    }
    std::vector<u64> row = qnomial_row_mod(a.n, a.mod, a.budget);
    ModInt v = ModInt::residue(row[size_t(a.k)], a.mod);
    std::cout << (a.signed_residues ? std::to_string(v.signed_value())
                                    : std::to_string(v.value()))
              << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"congruence checks for quadrinomial coefficient rows"};
    app.require_subcommand(1);

    VerifyArgs va;
    CLI::App* verify =
        app.add_subcommand("verify", "sweep congruence claims over a prime grid");
    add_grid_options(verify, va);
    verify->add_option("--checks", va.checks,
                       "comma list: all, THM_A, THM_A_EQ1, PROP_B, LEMMAS, "
                       "LEMMA1..3, PROP2, PROP2_4K..3, BLOCK_SUM, COR_C, EM, "
                       "or any single claim id");
    verify->add_option("--budget", va.budget,
                       "max coefficients per computed row");
    verify->add_option("--jobs", va.jobs, "worker threads (0 = all cores)");
    verify->add_flag("--signed", va.signed_residues,
                     "print residues in (-m/2, m/2]");

    VerifyArgs ea;
    CLI::App* errata = app.add_subcommand(
        "errata", "re-check the known statement-vs-proof discrepancies");
    add_grid_options(errata, ea);

    CoeffArgs ca;
    CLI::App* coeff =
        app.add_subcommand("coeff", "print one quadrinomial coefficient");
    coeff->add_option("n", ca.n, "row index")->required();
    coeff->add_option("k", ca.k, "column index")->required();
    coeff->add_option("--mod", ca.mod, "reduce mod M instead of exact value");
    coeff->add_option("--budget", ca.budget,
                      "max coefficients per computed row");
    coeff->add_flag("--signed", ca.signed_residues,
                    "print the residue in (-M/2, M/2]");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return do_verify(va);
        if (errata->parsed()) return do_errata(ea);
        return do_coeff(ca);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const SizeBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
