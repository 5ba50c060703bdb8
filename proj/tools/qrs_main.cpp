// qrs: command-line front end for the quadratic-residue stochasticity library.
// Every subcommand prints one machine-readable report (table, json or csv).

#include "qrs/analysis.hpp"
#include "qrs/arith.hpp"
#include "qrs/baseline.hpp"
#include "qrs/errors.hpp"
#include "qrs/poly.hpp"
#include "qrs/rational.hpp"
#include "qrs/report.hpp"
#include "qrs/residue.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using qrs::OutputEnvelope;
using qrs::Rational;
using qrs::Row;
using qrs::Value;

struct GlobalOptions {
    std::string format = "table";
    std::string out_path;
    std::uint64_t seed = 0;       // reserved for sampling-based operations
    double c0 = 3.0;              // split exponent for the omega predicate
    int kmax = 60;                // series truncation depth
};

qrs::Format parse_format(const std::string& name) {
    if (name == "table") return qrs::Format::table;
    if (name == "json") return qrs::Format::json;
    if (name == "csv") return qrs::Format::csv;
    throw qrs::RangeError("unknown format: " + name);
}

std::vector<std::uint64_t> parse_u64_list(const std::string& text) {
    std::vector<std::uint64_t> values;
    if (text.empty()) return values;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (item.empty()) {
            throw qrs::RangeError("empty entry in list: " + text);
        }
        std::size_t used = 0;
        unsigned long long parsed = std::stoull(item, &used);
        if (used != item.size()) {
            throw qrs::RangeError("malformed integer in list: " + item);
        }
        values.push_back(parsed);
    }
    return values;
}

std::string join_u64(const std::vector<std::uint64_t>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(values[i]);
    }
    return out;
}

int write_report(const OutputEnvelope& envelope, const GlobalOptions& global) {
    const std::string text = qrs::emit(envelope, parse_format(global.format));
    if (global.out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream file(global.out_path, std::ios::binary);
    if (!file) {
        throw qrs::ResourceError("cannot open output path: " + global.out_path);
    }
    file << text;
    if (!file.flush()) {
        throw qrs::ResourceError("failed writing output path: " + global.out_path);
    }
    return 0;
}

int emit_error(const std::string& command, const std::string& kind,
               const std::string& message, const GlobalOptions& global) {
    OutputEnvelope envelope;
    envelope.command = command;
    envelope.columns = {"error", "message"};
    Row row;
    row.add("error", kind).add("message", message);
    envelope.rows.push_back(std::move(row));
    // errors always go to stdout so callers see a parseable record
    std::cout << qrs::emit(envelope, parse_format(global.format));
    return 1;
}

// ---------------------------------------------------------------------------
// subcommand handlers
// ---------------------------------------------------------------------------

int run_residues(std::uint64_t modulus, const GlobalOptions& global) {
    qrs::ResidueSet set = qrs::quadratic_residues(modulus);
    OutputEnvelope envelope;
    envelope.command = "residues";
    envelope.parameters = {{"modulus", std::to_string(modulus)}};
    envelope.columns = {"element", "gap"};
    envelope.rows.reserve(set.size());
    for (std::size_t i = 0; i < set.size(); ++i) {
        Row row;
        row.add("element", set.elements[i]).add("gap", set.gaps[i]);
        envelope.rows.push_back(std::move(row));
    }
    return write_report(envelope, global);
}

int run_stochasticity(std::uint64_t modulus, const GlobalOptions& global) {
    qrs::ResidueSet set = qrs::quadratic_residues(modulus);
    OutputEnvelope envelope;
    envelope.command = "stochasticity";
    envelope.parameters = {{"modulus", std::to_string(modulus)}};
    envelope.columns = {"modulus", "r_size", "s", "max_gap"};
    Row row;
    row.add("modulus", modulus)
        .add("r_size", static_cast<std::uint64_t>(set.size()))
        .add("s", qrs::stochasticity(set))
        .add("max_gap", qrs::max_gap(set));
    envelope.rows.push_back(std::move(row));
    return write_report(envelope, global);
}

int run_gaps(std::uint64_t modulus, const GlobalOptions& global) {
    qrs::GapHistogram histogram =
        qrs::gap_histogram(qrs::quadratic_residues(modulus));
    OutputEnvelope envelope;
    envelope.command = "gaps";
    envelope.parameters = {{"modulus", std::to_string(modulus)}};
    envelope.columns = {"length", "count"};
    for (const auto& [length, count] : histogram.counts) {
        Row row;
        row.add("length", length).add("count", count);
        envelope.rows.push_back(std::move(row));
    }
    return write_report(envelope, global);
}

int run_fa(std::uint64_t a, const std::string& at, int order, bool series,
           const GlobalOptions& global) {
    const Rational y = qrs::parse_rational(at);
    OutputEnvelope envelope;
    envelope.command = "fa";
    envelope.parameters = {{"a", std::to_string(a)},
                           {"at", at},
                           {"order", std::to_string(order)}};
    if (series) {
        envelope.parameters.emplace_back("kmax", std::to_string(global.kmax));
        envelope.columns = {"a", "y", "kmax", "value", "remainder"};
        Row row;
        row.add("a", a)
            .add("y", y)
            .add("kmax", static_cast<long long>(global.kmax))
            .add("value", qrs::ga_series(a, y, global.kmax))
            .add("remainder", qrs::ga_series_remainder(a, y, global.kmax));
        envelope.rows.push_back(std::move(row));
    } else {
        envelope.columns = {"a", "y", "order", "value"};
        Rational value = order == 0 ? qrs::fa_eval(a, y)
                                    : qrs::fa_derivative_eval(a, y, order);
        Row row;
        row.add("a", a).add("y", y).add("order", static_cast<long long>(order))
            .add("value", value);
        envelope.rows.push_back(std::move(row));
    }
    return write_report(envelope, global);
}

int run_compare(std::uint64_t a_min, std::uint64_t a_max,
                std::optional<std::uint64_t> assert_flip,
                const GlobalOptions& global) {
    const auto table = qrs::compare_table(a_min, a_max);
    OutputEnvelope envelope;
    envelope.command = "compare-a";
    envelope.parameters = {{"min", std::to_string(a_min)},
                           {"max", std::to_string(a_max)}};
    envelope.columns = {"a", "lhs", "rhs", "lhs_less", "squarefree"};
    std::vector<std::uint64_t> flips;
    for (const auto& record : table) {
        if (!record.lhs_less) flips.push_back(record.a_modulus);
        Row row;
        row.add("a", record.a_modulus)
            .add("lhs", record.lhs)
            .add("rhs", record.rhs)
            .add("lhs_less", record.lhs_less)
            .add("squarefree", record.squarefree);
        envelope.rows.push_back(std::move(row));
    }
    int status = write_report(envelope, global);
    if (assert_flip) {
        if (flips.size() != 1 || flips.front() != *assert_flip) {
            std::cerr << "assertion failed: expected the single reversed row at a="
                      << *assert_flip << ", got {" << join_u64(flips) << "}\n";
            return 1;
        }
    }
    return status;
}

int run_verify_sk(std::uint64_t n, std::optional<std::uint64_t> k_single,
                  const GlobalOptions& global) {
    OutputEnvelope envelope;
    envelope.command = "verify-sk";
    envelope.parameters = {{"n", std::to_string(n)}};
    envelope.columns = {"n", "k", "closed_form", "brute_force", "equal"};
    std::vector<std::uint64_t> ks;
    if (k_single) {
        ks.push_back(*k_single);
        envelope.parameters.emplace_back("k", std::to_string(*k_single));
    } else {
        for (std::uint64_t k = 2; k <= n; ++k) ks.push_back(k);
    }
    bool all_equal = true;
    for (std::uint64_t k : ks) {
        Rational closed = qrs::s_average(n, k);
        Rational brute = qrs::s_average_bruteforce(n, k);
        const bool equal = closed == brute;
        all_equal = all_equal && equal;
        Row row;
        row.add("n", n).add("k", k).add("closed_form", closed)
            .add("brute_force", brute).add("equal", equal);
        envelope.rows.push_back(std::move(row));
    }
    int status = write_report(envelope, global);
    return all_equal ? status : 1;
}

int run_theorem13(std::uint64_t a, const std::vector<std::uint64_t>& primes,
                  std::optional<double> assert_decay,
                  const GlobalOptions& global) {
    OutputEnvelope envelope;
    envelope.command = "theorem13";
    envelope.parameters = {{"a", std::to_string(a)},
                           {"p", join_u64(primes)}};
    envelope.columns = {"a", "p", "s_exact", "prediction", "residual", "envelope"};
    std::vector<double> ratios;
    for (std::uint64_t p : primes) {
        qrs::Theorem13Report report = qrs::theorem13_check(a, p);
        ratios.push_back(abs(report.residual).get_d() / static_cast<double>(p));
        Row row;
        row.add("a", report.a_modulus)
            .add("p", report.prime_p)
            .add("s_exact", report.s_exact)
            .add("prediction", report.prediction)
            .add("residual", report.residual)
            .add("envelope", report.envelope);
        envelope.rows.push_back(std::move(row));
    }
    int status = write_report(envelope, global);
    if (assert_decay) {
        if (ratios.size() < 2) {
            std::cerr << "assertion failed: decay check needs at least two primes\n";
            return 1;
        }
        if (!(ratios.back() * (*assert_decay) <= ratios.front())) {
            std::cerr << "assertion failed: |residual|/p fell only "
                      << (ratios.front() / ratios.back()) << "x, expected >= "
                      << *assert_decay << "x\n";
            return 1;
        }
    }
    return status;
}

int run_theorem15(std::uint64_t m, std::uint64_t a, const GlobalOptions& global) {
    qrs::Theorem15Report report = qrs::theorem15_diagnostic(m, a);
    OutputEnvelope envelope;
    envelope.command = "theorem15";
    envelope.parameters = {{"m", std::to_string(m)}, {"a", std::to_string(a)}};
    envelope.columns = {"m", "a", "s_exact", "leading", "correction",
                        "residual", "flags"};
    std::string flags;
    for (std::size_t i = 0; i < report.hypothesis_flags.size(); ++i) {
        if (i) flags += ';';
        flags += report.hypothesis_flags[i];
    }
    Row row;
    row.add("m", report.m_value)
        .add("a", report.a_split)
        .add("s_exact", report.s_exact)
        .add("leading", report.leading)
        .add("correction", report.correction)
        .add("residual", report.residual)
        .add("flags", flags);
    envelope.rows.push_back(std::move(row));
    return write_report(envelope, global);
}

int run_omega(std::uint64_t m, const GlobalOptions& global) {
    qrs::OmegaVerdict verdict = qrs::omega_membership(m, global.c0);
    OutputEnvelope envelope;
    envelope.command = "omega";
    envelope.parameters = {{"m", std::to_string(m)},
                           {"c0", qrs::format_double(global.c0)}};
    envelope.columns = {"m", "c0", "is_member", "a_part", "m_part", "omega",
                        "failed"};
    std::string failed;
    for (std::size_t i = 0; i < verdict.failed_conditions.size(); ++i) {
        if (i) failed += ';';
        switch (verdict.failed_conditions[i]) {
            case qrs::OmegaCondition::squarefree: failed += "i"; break;
            case qrs::OmegaCondition::factor_count: failed += "ii"; break;
            case qrs::OmegaCondition::smooth_rough_split: failed += "iii"; break;
        }
    }
    Row row;
    row.add("m", verdict.m_value)
        .add("c0", verdict.c0)
        .add("is_member", verdict.is_member)
        .add("a_part", verdict.a_part)
        .add("m_part", verdict.m_part)
        .add("omega", static_cast<long long>(verdict.omega))
        .add("failed", failed);
    envelope.rows.push_back(std::move(row));
    return write_report(envelope, global);
}

int run_kr(std::uint64_t m, std::vector<double> u_grid, const GlobalOptions& global) {
    if (u_grid.empty()) u_grid = {0.5, 1.0, 2.0};
    const auto points = qrs::kr_tail(m, u_grid);
    OutputEnvelope envelope;
    envelope.command = "kr";
    envelope.parameters = {{"m", std::to_string(m)}};
    envelope.columns = {"u", "empirical", "expected"};
    for (const auto& point : points) {
        Row row;
        row.add("u", point.u)
            .add("empirical", point.empirical)
            .add("expected", point.expected);
        envelope.rows.push_back(std::move(row));
    }
    return write_report(envelope, global);
}

int run_rn(std::uint64_t m, const std::string& c1_text, const std::string& c2_text,
           const GlobalOptions& global) {
    const auto c1 = parse_u64_list(c1_text);
    const auto c2 = parse_u64_list(c2_text);
    qrs::ConfigCount config = qrs::rn_count(m, c1, c2);
    OutputEnvelope envelope;
    envelope.command = "rn";
    envelope.parameters = {{"m", std::to_string(m)},
                           {"c1", c1_text},
                           {"c2", c2_text}};
    envelope.columns = {"m", "c1", "c2", "count", "main_term", "bound"};
    Row row;
    row.add("m", config.modulus)
        .add("c1", join_u64(config.c1))
        .add("c2", join_u64(config.c2))
        .add("count", config.count)
        .add("main_term", config.main_term ? Value(*config.main_term)
                                           : Value(std::monostate{}))
        .add("bound", config.bound ? Value(*config.bound)
                                   : Value(std::monostate{}));
    envelope.rows.push_back(std::move(row));
    return write_report(envelope, global);
}

int run_charsum(std::uint64_t p, const std::string& shifts_text,
                const GlobalOptions& global) {
    const auto shifts = parse_u64_list(shifts_text);
    qrs::CharacterSum sum = qrs::legendre_product_sum(p, shifts);
    OutputEnvelope envelope;
    envelope.command = "charsum";
    envelope.parameters = {{"p", std::to_string(p)}, {"shifts", shifts_text}};
    envelope.columns = {"p", "shifts", "sum", "bound"};
    Row row;
    row.add("p", p)
        .add("shifts", join_u64(shifts))
        .add("sum", sum.value)
        .add("bound", sum.bound);
    envelope.rows.push_back(std::move(row));
    return write_report(envelope, global);
}

int run_identities(unsigned max_u, unsigned max_v, bool assert_equal,
                   const GlobalOptions& global) {
    OutputEnvelope envelope;
    envelope.command = "identities";
    envelope.parameters = {{"max_u", std::to_string(max_u)},
                           {"max_v", std::to_string(max_v)}};
    envelope.columns = {"u", "v", "moment", "lhs", "rhs", "equal"};
    bool all_equal = true;
    for (unsigned u = 0; u <= max_u; ++u) {
        for (unsigned v = 0; v <= max_v; ++v) {
            for (int moment = 0; moment <= 2; ++moment) {
                qrs::IdentityCheck check = qrs::binom_identity_check(u, v, moment);
                const bool equal = check.lhs == check.rhs;
                all_equal = all_equal && equal;
                Row row;
                row.add("u", static_cast<std::uint64_t>(u))
                    .add("v", static_cast<std::uint64_t>(v))
                    .add("moment", static_cast<long long>(moment))
                    .add("lhs", Rational(check.lhs))
                    .add("rhs", Rational(check.rhs))
                    .add("equal", equal);
                envelope.rows.push_back(std::move(row));
            }
        }
    }
    int status = write_report(envelope, global);
    if (assert_equal && !all_equal) {
        std::cerr << "assertion failed: an identity row differs\n";
        return 1;
    }
    return status;
}

int run_aryan(const std::vector<std::uint64_t>& moduli,
              std::optional<std::uint64_t> sweep_max,
              const GlobalOptions& global) {
    OutputEnvelope envelope;
    envelope.command = "aryan";
    envelope.columns = {"m", "ratio"};
    std::vector<std::uint64_t> targets = moduli;
    if (sweep_max) {
        envelope.parameters.emplace_back("sweep_max", std::to_string(*sweep_max));
        for (std::uint64_t m = 2; m <= *sweep_max; ++m) {
            if (qrs::is_squarefree(m)) targets.push_back(m);
        }
    } else {
        envelope.parameters.emplace_back("m", join_u64(moduli));
    }
    for (std::uint64_t m : targets) {
        Row row;
        row.add("m", m).add("ratio", qrs::aryan_ratio(m));
        envelope.rows.push_back(std::move(row));
    }
    return write_report(envelope, global);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stochasticity of quadratic residues: exact-arithmetic toolkit"};
    app.require_subcommand(1);
    app.fallthrough(false);

    GlobalOptions global;
    app.add_option("--format", global.format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", global.out_path, "Write the report to a file");
    app.add_option("--seed", global.seed,
                   "Seed for sampling-based operations (reserved)");
    app.add_option("--c0", global.c0, "Split exponent for the omega predicate")
        ->capture_default_str();
    app.add_option("--kmax", global.kmax, "Series truncation depth")
        ->capture_default_str();

    std::uint64_t modulus = 0;
    auto* residues_cmd =
        app.add_subcommand("residues", "Quadratic residues and gaps of Z_M");
    residues_cmd->add_option("--modulus", modulus, "Modulus M")->required();

    auto* stoch_cmd = app.add_subcommand(
        "stochasticity", "Sum of squared gaps of the residues of Z_M");
    stoch_cmd->add_option("--modulus", modulus, "Modulus M")->required();

    auto* gaps_cmd =
        app.add_subcommand("gaps", "Gap-length histogram of the residues of Z_M");
    gaps_cmd->add_option("--modulus", modulus, "Modulus M")->required();

    std::uint64_t fa_a = 0;
    std::string fa_at = "1/2";
    int fa_order = 0;
    bool fa_series = false;
    auto* fa_cmd = app.add_subcommand(
        "fa", "Evaluate the gap rational function f_A or its derivatives");
    fa_cmd->add_option("--a", fa_a, "Modulus A")->required();
    fa_cmd->add_option("--at", fa_at, "Evaluation point, rational p/q")
        ->capture_default_str();
    fa_cmd->add_option("--order", fa_order, "Derivative order (0, 1 or 2)")
        ->check(CLI::Range(0, 2))
        ->capture_default_str();
    fa_cmd->add_flag("--series", fa_series,
                     "Evaluate the configuration series instead (depth --kmax)");

    std::uint64_t cmp_min = 3, cmp_max = 100;
    std::optional<std::uint64_t> assert_flip;
    auto* cmp_cmd = app.add_subcommand(
        "compare-a", "Compare 2 f_A(1/2) with 4A^2/|R_A| - A exactly");
    cmp_cmd->add_option("--min", cmp_min, "Smallest A")->capture_default_str();
    cmp_cmd->add_option("--max", cmp_max, "Largest A")->capture_default_str();
    cmp_cmd->add_option("--assert-flip", assert_flip,
                        "Exit 1 unless exactly this A reverses the inequality");

    std::uint64_t sk_n = 0;
    std::optional<std::uint64_t> sk_k;
    auto* sk_cmd = app.add_subcommand(
        "verify-sk", "Check the random-baseline average against enumeration");
    sk_cmd->add_option("--n", sk_n, "Ambient size (n <= 16)")->required();
    sk_cmd->add_option("--k", sk_k, "Subset size (default: sweep 2..n)");

    std::uint64_t t13_a = 0;
    std::vector<std::uint64_t> t13_primes;
    std::optional<double> assert_decay;
    auto* t13_cmd = app.add_subcommand(
        "theorem13", "Exact S(R_Ap) against the prediction 2 f_A(1/2) p");
    t13_cmd->add_option("--a", t13_a, "Squarefree modulus A >= 3")->required();
    t13_cmd->add_option("--p", t13_primes, "Prime(s) coprime to A")->required();
    t13_cmd->add_option("--assert-decay", assert_decay,
                        "Exit 1 unless |residual|/p falls by this factor");

    std::uint64_t t15_m = 0, t15_a = 0;
    auto* t15_cmd = app.add_subcommand(
        "theorem15", "Second-order diagnostic for a squarefree split M = A*m");
    t15_cmd->add_option("--m", t15_m, "Modulus M")->required();
    t15_cmd->add_option("--a", t15_a, "Smooth part A")->required();

    std::uint64_t omega_m = 0;
    auto* omega_cmd = app.add_subcommand(
        "omega", "Membership in the structured-modulus family");
    omega_cmd->add_option("--m", omega_m, "Modulus M")->required();

    std::uint64_t kr_m = 0;
    std::vector<double> kr_u;
    auto* kr_cmd = app.add_subcommand(
        "kr", "Empirical normalized-gap tail against e^{-u}");
    kr_cmd->add_option("--m", kr_m, "Modulus M")->required();
    kr_cmd->add_option("--u", kr_u, "Grid points (default 0.5 1 2)");

    std::uint64_t rn_m = 0;
    std::string rn_c1, rn_c2;
    auto* rn_cmd = app.add_subcommand(
        "rn", "Count x shifted into residues by C1 and out by C2");
    rn_cmd->add_option("--m", rn_m, "Modulus M")->required();
    rn_cmd->add_option("--c1", rn_c1, "Comma-separated residue shifts");
    rn_cmd->add_option("--c2", rn_c2, "Comma-separated non-residue shifts");

    std::uint64_t cs_p = 0;
    std::string cs_shifts;
    auto* cs_cmd = app.add_subcommand(
        "charsum", "Complete product character sum with its sqrt(p) bound");
    cs_cmd->add_option("--p", cs_p, "Odd prime modulus")->required();
    cs_cmd->add_option("--shifts", cs_shifts, "Comma-separated shifts")
        ->required();

    unsigned id_max_u = 30, id_max_v = 30;
    bool id_assert = false;
    auto* id_cmd = app.add_subcommand(
        "identities", "Weighted binomial sums against their closed forms");
    id_cmd->add_option("--max-u", id_max_u, "Largest u")->capture_default_str();
    id_cmd->add_option("--max-v", id_max_v, "Largest v")->capture_default_str();
    id_cmd->add_flag("--assert", id_assert, "Exit 1 if any row differs");

    std::vector<std::uint64_t> aryan_m;
    std::optional<std::uint64_t> aryan_sweep;
    auto* aryan_cmd = app.add_subcommand(
        "aryan", "S(R_M) over the product-form gap bound (squarefree M)");
    aryan_cmd->add_option("--m", aryan_m, "Modulus (repeatable)");
    aryan_cmd->add_option("--sweep-max", aryan_sweep,
                          "Sweep every squarefree modulus up to this bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        if (residues_cmd->parsed()) return run_residues(modulus, global);
        if (stoch_cmd->parsed()) return run_stochasticity(modulus, global);
        if (gaps_cmd->parsed()) return run_gaps(modulus, global);
        if (fa_cmd->parsed())
            return run_fa(fa_a, fa_at, fa_order, fa_series, global);
        if (cmp_cmd->parsed())
            return run_compare(cmp_min, cmp_max, assert_flip, global);
        if (sk_cmd->parsed()) return run_verify_sk(sk_n, sk_k, global);
        if (t13_cmd->parsed())
            return run_theorem13(t13_a, t13_primes, assert_decay, global);
        if (t15_cmd->parsed()) return run_theorem15(t15_m, t15_a, global);
        if (omega_cmd->parsed()) return run_omega(omega_m, global);
        if (kr_cmd->parsed()) return run_kr(kr_m, kr_u, global);
        if (rn_cmd->parsed()) return run_rn(rn_m, rn_c1, rn_c2, global);
        if (cs_cmd->parsed()) return run_charsum(cs_p, cs_shifts, global);
        if (id_cmd->parsed())
            return run_identities(id_max_u, id_max_v, id_assert, global);
        if (aryan_cmd->parsed())
            return run_aryan(aryan_m, aryan_sweep, global);
    } catch (const qrs::ResourceError& e) {
        return emit_error(command, "resource", e.what(), global);
    } catch (const std::exception& e) {
        return emit_error(command, "invalid-input", e.what(), global);
    }
    return 2;
}
