#include "subtrop/cli.hpp"

#include "subtrop/decide.hpp"
#include "subtrop/error.hpp"
#include "subtrop/oracle.hpp"
#include "subtrop/parser.hpp"
#include "subtrop/serialize.hpp"
#include "subtrop/witness.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

namespace subtrop::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Malformed, "cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

SignedSystem load_system(const CliConfig& cfg) {
    const std::string text = read_file(cfg.input_path);
    try {
        return parse_system(text);
    } catch (const ParseError& e) {
        throw Error(e.code(), cfg.input_path + ":" + e.what());
    }
}

std::string tuple_text(const std::vector<BigInt>& xs) {
    std::string out = "(";
    for (std::size_t l = 0; l < xs.size(); ++l) out += (l ? ", " : "") + xs[l].get_str();
    return out + ")";
}

std::string tuple_text(const std::vector<BigRational>& xs) {
    std::string out = "(";
    for (std::size_t l = 0; l < xs.size(); ++l) out += (l ? ", " : "") + xs[l].to_string();
    return out + ")";
}

void report_unsat(const SignedSystem& sys, const Decision& decision, const CliConfig& cfg, std::ostream& out,
                  std::ostream& err) {
    if (decision.zero_row)
        err << "identically zero polynomial in row " << *decision.zero_row + 1 << " ("
            << sys.row_names()[*decision.zero_row] << ")\n";
    if (cfg.format == Format::Json) {
        out << to_json(decision).dump() << '\n';
    } else if (decision.zero_row) {
        out << "unsat: zero-row " << sys.row_names()[*decision.zero_row] << '\n';
    } else {
        out << "unsat\n";
    }
}

// Random positive rationals p/q with 1 <= p, q <= 10 at every nonzero sign.
SignedSystem random_instance(const SignedSystem& sys, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dist(1, 10);
    Matrix<BigRational> values(sys.num_rows(), sys.num_monomials(), BigRational(1));
    for (std::size_t i = 0; i < sys.num_rows(); ++i)
        for (std::size_t j = 0; j < sys.num_monomials(); ++j)
            if (sys.sign(i, j) != 0) {
                const long p = dist(rng);
                const long q = dist(rng);
                values(i, j) = BigRational(BigInt(p), BigInt(q));
            }
    return sys.with_coefficients(std::move(values));
}

SignedSystem concrete_system(const SignedSystem& sys, const CliConfig& cfg) {
    if (sys.is_parametric()) {
        if (!cfg.coeff_path) throw Error(ErrorCode::UnboundCoefficient, "parametric input needs --coeffs");
        const std::string text = read_file(*cfg.coeff_path);
        try {
            return sys.instantiate(parse_coefficients(text));
        } catch (const ParseError& e) {
            throw Error(e.code(), *cfg.coeff_path + ":" + e.what());
        }
    }
    if (cfg.coeff_path) throw Error(ErrorCode::Malformed, "--coeffs given for an input with concrete coefficients");
    return sys;
}

} // namespace

int cmd_decide(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    const SignedSystem sys = load_system(cfg);
    const Decision decision = decide(sys, {cfg.shrink});

    if (sys.num_rows() == 1) {
        bool any_branch = false;
        for (const auto& branch : build_dnf_single(sys)) {
            ConjunctionSystem conj{sys.num_vars(), {}};
            for (const auto& lit : branch.constraints) conj.rows.push_back(lit.coeffs);
            if (solve_conjunction(conj)) {
                any_branch = true;
                break;
            }
        }
        if (any_branch != decision.condition_satisfiable) {
            err << "single-row decomposition disagrees with the clause search\n";
            return kOracleDisagreement;
        }
    }

    if (cfg.check) {
        const bool oracle_sat = oracle::exhaustive_decide(decision.condition) == oracle::Verdict::Sat;
        if (oracle_sat != decision.condition_satisfiable) {
            err << "oracle disagreement: search says " << (decision.condition_satisfiable ? "sat" : "unsat")
                << ", exhaustive check says " << (oracle_sat ? "sat" : "unsat") << '\n';
            return kOracleDisagreement;
        }
        if (decision.status == Status::Sat) {
            std::mt19937_64 rng(cfg.seed.value_or(0));
            for (int sample = 0; sample < kCheckSamples; ++sample) {
                const SignedSystem inst = random_instance(sys, rng);
                const BigRational t = evaluate_t(symbolic_t(inst, *decision.n), inst.concrete());
                verify_witness(inst, *decision.n, t, {cfg.max_bits});
            }
        }
    }

    if (decision.status == Status::Unsat) {
        report_unsat(sys, decision, cfg, out, err);
        return kUnsat;
    }
    if (cfg.format == Format::Json) out << to_json(decision).dump() << '\n';
    else out << "sat\nn = " << tuple_text(decision.n->n) << '\n';
    return kOk;
}

int cmd_witness(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    const SignedSystem sys = load_system(cfg);
    const Decision decision = decide(sys, {cfg.shrink});
    if (decision.status == Status::Unsat) {
        err << "no parametric positive solution exists\n";
        report_unsat(sys, decision, cfg, out, err);
        return kUnsat;
    }
    const SymbolicWitness w = symbolic_t(sys, *decision.n);
    if (cfg.format == Format::Json) out << to_json(w).dump() << '\n';
    else out << to_text(w) << '\n';
    return kOk;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    const SignedSystem source = load_system(cfg);
    const SignedSystem sys = concrete_system(source, cfg);
    const Decision decision = decide(sys, {cfg.shrink});
    if (decision.status == Status::Unsat) {
        err << "no parametric positive solution exists\n";
        report_unsat(sys, decision, cfg, out, err);
        return kUnsat;
    }
    const SymbolicWitness w = symbolic_t(sys, *decision.n);
    const BigRational r = cfg.use_uniform_bound ? uniform_bound(sys) : evaluate_t(w, sys.concrete());
    const VerificationReport report = verify_witness(sys, *decision.n, r, {cfg.max_bits});

    if (cfg.format == Format::Json) {
        Json j;
        j["status"] = "sat";
        j["n"] = to_json(*decision.n);
        const Json body = to_json(report);
        for (const auto& [key, value] : body.items()) j[key] = value;
        out << j.dump() << '\n';
    } else {
        out << "n = " << tuple_text(decision.n->n) << '\n';
        out << "t = " << report.t_value << '\n';
        out << "r = " << report.r_value << '\n';
        out << "point = " << tuple_text(report.point) << '\n';
        for (std::size_t i = 0; i < report.values.size(); ++i)
            out << sys.row_names()[i] << " = " << report.values[i] << '\n';
        out << (report.ok ? "ok" : "FAILED") << '\n';
    }
    return report.ok ? kOk : kWitnessFailure;
}

int cmd_explain(const CliConfig& cfg, std::ostream& out, std::ostream&) {
    const SignedSystem sys = load_system(cfg);
    const LinearCondition cond = build_cnf(sys);
    if (cfg.format == Format::Json) out << to_json(cond).dump() << '\n';
    else out << to_debug_text(cond);
    return kOk;
}

int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        switch (cfg.command) {
        case Command::Decide: return cmd_decide(cfg, out, err);
        case Command::Witness: return cmd_witness(cfg, out, err);
        case Command::Verify: return cmd_verify(cfg, out, err);
        case Command::Explain: return cmd_explain(cfg, out, err);
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << to_string(e.code()) << ": " << e.what() << '\n';
        return e.code() == ErrorCode::WitnessFailure ? kWitnessFailure : kUsage;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << '\n';
        return kWitnessFailure;
    }
    return kUsage;
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Decide parametric positive solvability of signed polynomial systems"};
    app.require_subcommand(1);

    CliConfig cfg;
    std::string format = "text";
    std::optional<std::size_t> max_bits;
    std::optional<std::uint64_t> seed;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("file", cfg.input_path, "input system (.spp)")->required();
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--coeffs", cfg.coeff_path, "coefficient bindings (name = p/q per line)");
        sub->add_flag("--check", cfg.check, "cross-check with the exhaustive oracle");
        sub->add_option("--seed", seed, "seed for sampled coefficient checks");
        sub->add_option("--max-bits", max_bits, "abort when numbers exceed this many bits")->check(CLI::PositiveNumber);
        sub->add_flag("--use-uniform-bound", cfg.use_uniform_bound, "verify at r = 1 + v * (sum of negative coefficients)");
        sub->add_flag("--shrink", cfg.shrink, "move exponents greedily toward 0");
    };
    struct Sub {
        const char* name;
        const char* help;
        Command command;
    };
    const Sub subs[] = {
        {"decide", "decide whether a parametric positive solution exists", Command::Decide},
        {"witness", "print the symbolic witness z(c) = t^n", Command::Witness},
        {"verify", "evaluate the witness exactly on concrete coefficients", Command::Verify},
        {"explain", "print the linear condition with provenance", Command::Explain},
    };
    for (const auto& sub : subs) {
        CLI::App* cmd = app.add_subcommand(sub.name, sub.help);
        add_common(cmd);
        cmd->callback([&cfg, command = sub.command] { cfg.command = command; });
    }

    std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(rest.begin(), rest.end());
    try {
        app.parse(rest);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << e.what() << '\n';
        return kUsage;
    }
    cfg.format = format == "json" ? Format::Json : Format::Text;
    cfg.max_bits = max_bits;
    cfg.seed = seed;
    return run(cfg, out, err);
}

} // namespace subtrop::cli
