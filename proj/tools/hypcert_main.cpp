// hypcert command-line front end.
//
//   hypcert theorem --p 5 --j 2        one congruence instance
//   hypcert scan --p-min 5 --p-max 97  sweep a prime range
//   hypcert lemma 4.3 --p-max 11       run one named check suite
//   hypcert probe --p 13 --j -3375     mod-p^2 supercongruence probe
//   hypcert selftest                   all suites plus the p <= 37 sweep
//
// Exit codes: 0 when every non-skip verdict passes (probe verdicts are
// informational and never gate), 1 on any failing check, 2 on usage or
// configuration errors.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include "hypcert/hypcert.hpp"

namespace {

using hypcert::usage_error;
using hypcert::arith::Rational;
using hypcert::io::OutputFormat;
using hypcert::verify::CongruenceReport;

Rational parse_rational(const std::string& text) {
    Rational value;
    std::istringstream is(text);
    is >> value;
    if (is.fail() || !(is >> std::ws).eof())
        throw usage_error("cannot parse rational value: " + text);
    return value;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        if (!item.empty()) out.push_back(parse_rational(item));
    }
    return out;
}

struct CommonOptions {
    std::string format = "auto";
    std::string output;
    unsigned workers = 0; // 0 = hardware concurrency
    uint64_t seed = 1;
    uint64_t bound = 1000000;
    uint32_t precision = 1;
    bool timings = false;
};

void add_common(CLI::App* sub, CommonOptions& c) {
    sub->add_option("--format", c.format, "json|csv|human (default: human on a tty, json otherwise)")
        ->check(CLI::IsMember({"auto", "json", "csv", "human"}));
    sub->add_option("--output", c.output, "write reports to this file instead of stdout");
    sub->add_option("--workers", c.workers, "worker threads (0 = hardware concurrency)")
        ->envname("HYPCERT_WORKERS");
    sub->add_option("--seed", c.seed, "seed for randomized instance selection");
    sub->add_option("--bound", c.bound, "largest field size for point counting")
        ->check(CLI::Range(uint64_t(1), uint64_t(100000000)));
    sub->add_option("--precision", c.precision, "unit-residue precision k")
        ->check(CLI::IsMember({1, 2}));
    sub->add_flag("--timings", c.timings, "emit measured per-report timings (not byte-stable)");
}

unsigned resolve_workers(const CommonOptions& c) {
    if (c.workers != 0) return c.workers;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void emit(const std::vector<CongruenceReport>& reports, const CommonOptions& c) {
    OutputFormat fmt;
    if (c.format == "auto") {
        bool tty = c.output.empty() && isatty(fileno(stdout));
        fmt = tty ? OutputFormat::Human : OutputFormat::Json;
    } else {
        fmt = hypcert::io::parse_format(c.format);
    }
    if (c.output.empty()) {
        hypcert::io::emit_report(reports, fmt, std::cout, c.timings);
        return;
    }
    std::ofstream file(c.output, std::ios::binary);
    if (!file) throw usage_error("cannot open output file: " + c.output);
    hypcert::io::emit_report(reports, fmt, file, c.timings);
    if (!file) throw usage_error("failed writing output file: " + c.output);
}

CongruenceReport timed_single(const std::function<CongruenceReport()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    CongruenceReport rep = fn();
    rep.ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count();
    return rep;
}

int run(int argc, char** argv) {
    CLI::App app{"hypcert: desk-scale certification of trace-vs-series congruences"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read options from a key = value file");

    CommonOptions c_theorem, c_probe, c_scan, c_lemma, c_self;

    std::string j_text;
    uint64_t p_single = 0;
    auto* cmd_theorem = app.add_subcommand("theorem", "verify one (p, j0) congruence instance");
    cmd_theorem->add_option("--p", p_single, "prime p, coprime to 6")->required();
    cmd_theorem->add_option("--j", j_text, "j-invariant (integer or n/d)")->required();
    add_common(cmd_theorem, c_theorem);

    std::string probe_j;
    uint64_t probe_p = 0;
    auto* cmd_probe = app.add_subcommand("probe", "mod-p^2 supercongruence probe (informational)");
    cmd_probe->add_option("--p", probe_p, "prime p, coprime to 6")->required();
    cmd_probe->add_option("--j", probe_j, "j-invariant (integer or n/d)")->required();
    add_common(cmd_probe, c_probe);

    uint64_t scan_pmin = 5, scan_pmax = 97, scan_count = 8;
    std::string scan_policy = "all", scan_jlist;
    auto* cmd_scan = app.add_subcommand("scan", "sweep the congruence over a prime range");
    cmd_scan->add_option("--p-min", scan_pmin, "first prime (>= 5)");
    cmd_scan->add_option("--p-max", scan_pmax, "last prime");
    cmd_scan->add_option("--j-policy", scan_policy, "all | list | random")
        ->check(CLI::IsMember({"all", "list", "random"}));
    cmd_scan->add_option("--j-list", scan_jlist, "comma-separated j values for --j-policy list");
    cmd_scan->add_option("--j-count", scan_count, "draws per prime for --j-policy random");
    add_common(cmd_scan, c_scan);

    std::string suite_id;
    uint64_t lemma_pmin = 5, lemma_pmax = 37, lemma_mmax = 200;
    uint32_t lemma_l = 1;
    unsigned lemma_samples = 50;
    bool lemma_deep = false;
    auto* cmd_lemma = app.add_subcommand("lemma", "run one named check suite");
    cmd_lemma->add_option("id", suite_id, "suite id (see `lemma list`)")->required();
    cmd_lemma->add_option("--p-min", lemma_pmin, "first prime (>= 5)");
    cmd_lemma->add_option("--p-max", lemma_pmax, "last prime");
    cmd_lemma->add_option("--l", lemma_l, "residue-degree cap (1 or 2)")
        ->check(CLI::IsMember({1, 2}));
    cmd_lemma->add_option("--m-max", lemma_mmax, "block-reduction cap at l = 2");
    cmd_lemma->add_option("--samples", lemma_samples, "random twist samples for suites 2.1/2.2");
    cmd_lemma->add_flag("--deep-factorization", lemma_deep,
                        "run suite 5.2 at l = 2 (degree p^4 - 1, p <= 13)");
    add_common(cmd_lemma, c_lemma);

    uint64_t self_pmax = 37;
    auto* cmd_self = app.add_subcommand("selftest", "run every suite and the small prime sweep");
    cmd_self->add_option("--p-max", self_pmax, "last prime of the sweep");
    add_common(cmd_self, c_self);

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

    std::vector<CongruenceReport> reports;
    const CommonOptions* common = nullptr;

    if (cmd_theorem->parsed()) {
        common = &c_theorem;
        Rational j0 = parse_rational(j_text);
        if (!hypcert::arith::is_prime_u64(p_single)) throw usage_error("--p must be prime");
        reports.push_back(timed_single(
            [&] { return hypcert::verify::verify_theorem(j0, p_single, c_theorem.bound); }));
    } else if (cmd_probe->parsed()) {
        common = &c_probe;
        Rational j0 = parse_rational(probe_j);
        if (!hypcert::arith::is_prime_u64(probe_p)) throw usage_error("--p must be prime");
        reports.push_back(timed_single(
            [&] { return hypcert::verify::supercongruence_probe(j0, probe_p, c_probe.bound); }));
    } else if (cmd_scan->parsed()) {
        common = &c_scan;
        hypcert::verify::ScanOptions opt;
        opt.p_min = scan_pmin;
        opt.p_max = scan_pmax;
        opt.seed = c_scan.seed;
        opt.bound = c_scan.bound;
        opt.workers = resolve_workers(c_scan);
        if (scan_policy == "all") {
            opt.policy = hypcert::verify::JPolicy::AllResidues;
        } else if (scan_policy == "list") {
            opt.policy = hypcert::verify::JPolicy::ExplicitList;
            opt.j_list = parse_rational_list(scan_jlist);
        } else {
            opt.policy = hypcert::verify::JPolicy::Random;
            opt.random_count = scan_count;
        }
        reports = hypcert::verify::scan_range(opt);
    } else if (cmd_lemma->parsed()) {
        common = &c_lemma;
        if (suite_id == "list") {
            for (const auto& id : hypcert::verify::suite_ids()) std::cout << id << "\n";
            return 0;
        }
        hypcert::verify::SuiteParams prm;
        prm.p_min = lemma_pmin;
        prm.p_max = lemma_pmax;
        prm.l_cap = lemma_l;
        prm.m_max = lemma_mmax;
        prm.sample_count = lemma_samples;
        prm.seed = c_lemma.seed;
        prm.deep_factorization = lemma_deep;
        prm.bound = c_lemma.bound;
        prm.workers = resolve_workers(c_lemma);
        reports = hypcert::verify::run_lemma_suite(suite_id, prm);
    } else if (cmd_self->parsed()) {
        common = &c_self;
        hypcert::verify::SuiteParams prm;
        prm.p_max = self_pmax;
        prm.seed = c_self.seed;
        prm.bound = c_self.bound;
        prm.workers = resolve_workers(c_self);
        for (const auto& id : hypcert::verify::suite_ids()) {
            auto batch = hypcert::verify::run_lemma_suite(id, prm);
            reports.insert(reports.end(), batch.begin(), batch.end());
        }
        hypcert::verify::ScanOptions opt;
        opt.p_min = 5;
        opt.p_max = self_pmax;
        opt.bound = c_self.bound;
        opt.workers = resolve_workers(c_self);
        auto sweep = hypcert::verify::scan_range(opt);
        reports.insert(reports.end(), sweep.begin(), sweep.end());
    }

    emit(reports, *common);
    return hypcert::verify::gate_exit_code(reports);
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const hypcert::invalid_modulus_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
