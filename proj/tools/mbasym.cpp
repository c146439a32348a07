// mbasym: evaluate the Bessel-kernel Mathieu-type series and its asymptotic
// expansions from the command line.
//
//   mbasym eval   --a .. --b .. --gamma .. --nu .. --mu ..  [--kind j|alt|y]
//                 [--method direct|thm1|thm2|thm3|auto] [--tol ..] [--digits N]
//                 [--verbose]
//   mbasym table  --which 1|2|3 [--format csv|md] [--digits N] [--output FILE]
//   mbasym verify [--suite identities|residues|coeffs|all] [--digits N]
//
// Configuration sources, weakest first: built-in defaults, a --config file of
// key=value lines (keys: digits, oracle_cap, kappa_safety), the MBASYM_DIGITS
// environment variable, then explicit flags.  stdout carries only the
// requested data; diagnostics go to stderr.  Exit codes: 0 success, 1 failed
// verification, 2 bad arguments or parameter-domain violations, 3 regime
// mismatch (a method that does not apply to the given gamma + nu).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "mbasym/asymptotics.hpp"
#include "mbasym/errors.hpp"
#include "mbasym/oracle.hpp"
#include "mbasym/tables.hpp"
#include "mbasym/variants.hpp"
#include "mbasym/verify.hpp"

namespace {

using namespace mbasym;

struct FileConfig {
    std::optional<long> digits;
    std::optional<long> oracle_cap;
    std::optional<double> kappa_safety;
};

FileConfig read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open '" + path + "'");
    FileConfig cfg;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error("config: line " + std::to_string(lineno) +
                                     " is not key=value");
        }
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        try {
            if (key == "digits") {
                cfg.digits = std::stol(val);
            } else if (key == "oracle_cap") {
                cfg.oracle_cap = std::stol(val);
            } else if (key == "kappa_safety") {
                cfg.kappa_safety = std::stod(val);
            } else {
                throw std::runtime_error("config: unknown key '" + key + "'");
            }
        } catch (const std::invalid_argument&) {
            throw std::runtime_error("config: bad value for '" + key + "'");
        } catch (const std::out_of_range&) {
            throw std::runtime_error("config: bad value for '" + key + "'");
        }
    }
    return cfg;
}

// Effective digits: flag > MBASYM_DIGITS > config file > fallback.
long resolve_digits(long flag_value, const FileConfig& cfg, long fallback) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("MBASYM_DIGITS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v <= 0) {
            throw std::runtime_error("MBASYM_DIGITS must be a positive integer");
        }
        return v;
    }
    if (cfg.digits) return *cfg.digits;
    return fallback;
}

struct EvalArgs {
    std::string a, b, gamma, nu, mu;
    std::string kind = "j";
    std::string method = "auto";
    std::string tol = "1e-16";
    long digits = 0;
    long oracle_cap = 0;
    double kappa_safety = 0.0;
    bool verbose = false;
};

SeriesKind kind_of(const std::string& k) {
    if (k == "j") return SeriesKind::JSeries;
    if (k == "alt") return SeriesKind::AlternatingJ;
    return SeriesKind::YSeries;
}

void print_expansion(const ExpansionReport& rep, const std::string& method,
                     long sig, bool verbose) {
    std::cout << "method = " << method << '\n';
    std::cout << "regime = " << to_string(rep.regime) << '\n';
    std::cout << "value = " << rep.value.str(sig) << '\n';
    std::cout << "k_used = " << rep.k_used << '\n';
    std::cout << "err_est = " << rep.err_est.str(4) << '\n';
    if (verbose) {
        for (size_t i = 0; i < rep.terms.size(); ++i) {
            std::cout << "term[" << rep.k_first + static_cast<long>(i)
                      << "] = " << rep.terms[i].str(8) << '\n';
        }
    }
}

int run_eval(const EvalArgs& args, const FileConfig& cfg) {
    long digits = resolve_digits(args.digits, cfg, 50);
    long wd = digits + 10;
    Params p = Params::parse(args.a, args.b, args.gamma, args.nu, args.mu, wd);

    if (args.method == "direct") {
        OracleOptions oopt;
        if (args.oracle_cap > 0) {
            oopt.cap = args.oracle_cap;
        } else if (cfg.oracle_cap) {
            oopt.cap = *cfg.oracle_cap;
        }
        if (args.kappa_safety > 0) {
            oopt.kappa = args.kappa_safety;
        } else if (cfg.kappa_safety) {
            oopt.kappa = *cfg.kappa_safety;
        }
        Real tol = Real::parse(args.tol, wd);
        OracleResult r = direct_sum(p, kind_of(args.kind), tol, oopt);
        std::cout << "method = direct\n";
        std::cout << "kind = " << args.kind << '\n';
        std::cout << "value = " << r.value.str(digits) << '\n';
        std::cout << "n_terms = " << r.n_terms << '\n';
        std::cout << "tail_bound = " << r.tail.str(4) << '\n';
        if (args.verbose) std::cout << "tol = " << tol.str(4) << '\n';
        return 0;
    }

    if (args.kind == "alt") {
        if (args.method != "auto" && args.method != "thm1") {
            std::cerr << "error: --kind alt supports --method direct, thm1 or auto\n";
            return 2;
        }
        print_expansion(alternating_expansion(p, Optimal{}), "alt-expansion",
                        digits, args.verbose);
        return 0;
    }
    if (args.kind == "y") {
        if (args.method != "auto" && args.method != "thm1") {
            std::cerr << "error: --kind y supports --method direct, thm1 or auto\n";
            return 2;
        }
        print_expansion(y_series_expansion(p, Optimal{}), "y-expansion", digits,
                        args.verbose);
        return 0;
    }

    std::string method = args.method;
    if (method == "auto") {
        switch (classify_regime(p)) {
            case Regime::Generic: method = "thm1"; break;
            case Regime::DoublePole: method = "thm2"; break;
            case Regime::ExpSmall: method = "thm3"; break;
        }
    }
    if (method == "thm1") {
        print_expansion(theorem1_series(p, Optimal{}), "thm1", digits, args.verbose);
    } else if (method == "thm2") {
        print_expansion(theorem2_series(p, Optimal{}), "thm2", digits, args.verbose);
    } else {
        print_expansion(theorem3_expsmall(p, 2), "thm3", digits, args.verbose);
    }
    return 0;
}

int run_table(int which, const std::string& format, long digits_flag,
              long cap_flag, double kappa_flag, const std::string& output,
              const FileConfig& cfg) {
    TableOptions topt;
    topt.digits = resolve_digits(digits_flag, cfg, 0); // 0 = per-table default
    if (cap_flag > 0) {
        topt.oracle_cap = cap_flag;
    } else if (cfg.oracle_cap) {
        topt.oracle_cap = *cfg.oracle_cap;
    }
    if (kappa_flag > 0) {
        topt.kappa_safety = kappa_flag;
    } else if (cfg.kappa_safety) {
        topt.kappa_safety = *cfg.kappa_safety;
    }

    std::vector<TableRow> rows = mbasym::run_table(which, topt);
    std::string text = format == "md" ? format_table_markdown(rows)
                                      : format_table_csv(rows);
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output);
        if (!out) throw std::runtime_error("cannot write '" + output + "'");
        out << text;
    }
    return 0;
}

int run_verify(const std::string& suite, long digits_flag, const FileConfig& cfg) {
    long digits = resolve_digits(digits_flag, cfg, 30);
    std::vector<CheckResult> results = verify_suite(suite, digits);
    bool all = true;
    for (const CheckResult& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail
                  << '\n';
        all = all && r.pass;
    }
    std::cout << (all ? "all checks passed" : "CHECKS FAILED") << " ("
              << results.size() << " run)\n";
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bessel-kernel Mathieu-type series: oracle summation, "
                 "asymptotic expansions, table reproduction"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path,
                   "key=value defaults file (digits, oracle_cap, kappa_safety)");

    EvalArgs ev;
    CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate one parameter set");
    eval_cmd->add_option("--a", ev.a, "a > 0")->required();
    eval_cmd->add_option("--b", ev.b, "b > 0")->required();
    eval_cmd->add_option("--gamma", ev.gamma, "exponent in the numerator n^gamma")
        ->required();
    eval_cmd->add_option("--nu", ev.nu, "Bessel order")->required();
    eval_cmd->add_option("--mu", ev.mu, "denominator exponent, mu > 0")->required();
    eval_cmd->add_option("--kind", ev.kind, "series kernel (default j)")
        ->check(CLI::IsMember({"j", "alt", "y"}));
    eval_cmd
        ->add_option("--method", ev.method,
                     "direct (certified sum), thm1/thm2/thm3 (expansions), or "
                     "auto (pick the expansion from gamma + nu)")
        ->check(CLI::IsMember({"direct", "thm1", "thm2", "thm3", "auto"}));
    eval_cmd->add_option("--tol", ev.tol,
                         "absolute tolerance for --method direct (default 1e-16)");
    eval_cmd->add_option("--digits", ev.digits, "output precision (default 50)");
    eval_cmd->add_option("--oracle_cap", ev.oracle_cap,
                         "term-count ceiling for --method direct");
    eval_cmd->add_option("--kappa_safety", ev.kappa_safety,
                         "tail-envelope safety factor for --method direct");
    eval_cmd->add_flag("--verbose", ev.verbose, "also print the term ledger");

    int which = 0;
    std::string format = "csv", output;
    long tbl_digits = 0, tbl_cap = 0;
    double tbl_kappa = 0.0;
    CLI::App* table_cmd =
        app.add_subcommand("table", "Reproduce one of the three error tables");
    table_cmd->add_option("--which", which, "table number")
        ->required()
        ->check(CLI::Range(1, 3));
    table_cmd->add_option("--format", format, "csv or md (default csv)")
        ->check(CLI::IsMember({"csv", "md"}));
    table_cmd->add_option("--digits", tbl_digits,
                          "working precision (default 50; 60 for table 3)");
    table_cmd->add_option("--oracle_cap", tbl_cap, "term-count ceiling");
    table_cmd->add_option("--kappa_safety", tbl_kappa, "tail-envelope safety factor");
    table_cmd->add_option("--output", output, "write to a file instead of stdout");

    std::string suite = "all";
    long vf_digits = 0;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Run the self-check suites");
    verify_cmd->add_option("--suite", suite, "which suite (default all)")
        ->check(CLI::IsMember({"identities", "residues", "coeffs", "all"}));
    verify_cmd->add_option("--digits", vf_digits,
                           "certification precision (default 30)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        FileConfig cfg;
        if (!config_path.empty()) cfg = read_config(config_path);
        if (eval_cmd->parsed()) return run_eval(ev, cfg);
        if (table_cmd->parsed()) {
            return run_table(which, format, tbl_digits, tbl_cap, tbl_kappa, output,
                             cfg);
        }
        return run_verify(suite, vf_digits, cfg);
    } catch (const mbasym::RegimeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
