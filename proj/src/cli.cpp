#include "maxdet/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "maxdet/bounds.hpp"
#include "maxdet/construct.hpp"
#include "maxdet/determinant.hpp"
#include "maxdet/oracle.hpp"
#include "maxdet/records.hpp"
#include "maxdet/search.hpp"

namespace maxdet::cli {

namespace {

using nlohmann::ordered_json;

// Raised for problems with the invocation's inputs (unreadable file, malformed matrix, ...).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SignMatrix read_input(const std::string& path, std::istream& in) {
    try {
        if (path == "-") {
            std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
            return read_matrix(text);
        }
        return read_matrix_file(path);
    } catch (const ParseError& e) {
        throw UsageError((path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
    } catch (const std::runtime_error& e) {
        throw UsageError(e.what());
    }
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
}

ordered_json matrix_json(const SignMatrix& m) {
    ordered_json j;
    j["n"] = m.size();
    j["rows"] = row_strings(m);
    return j;
}

// Factored form of a determinant, when it matches the published claim for this n.
ordered_json claimed_form(const BigInt& det, std::size_t n) {
    if (auto c = find_claim(n); c && c->det.value() == abs(det)) return c->det.to_string();
    return nullptr;
}

struct SearchArgs {
    std::size_t n = 0;
    std::string seed = "0";
    std::size_t restarts = 10;
    std::size_t workers = 1;
    std::string start;
    std::size_t max_iter = 10000;
    double perturb = 0.05;
    double cooling = 0.9;
    std::size_t stall = 3;
    std::string output;
    bool raw = false;
    bool quiet = false;
};

int run_search(const SearchArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
    SearchConfig cfg;
    cfg.n = a.n;
    if (a.seed == "random") {
        cfg.seed = (static_cast<std::uint64_t>(std::random_device{}()) << 32) ^ std::random_device{}();
    } else {
        try {
            std::size_t used = 0;
            cfg.seed = std::stoull(a.seed, &used);
            if (used != a.seed.size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw UsageError("--seed must be an unsigned integer or \"random\"");
        }
    }
    cfg.restarts = a.restarts;
    cfg.max_iterations = a.max_iter;
    cfg.perturb_strength = a.perturb;
    cfg.cooling = a.cooling;
    cfg.stall_threshold = a.stall;
    if (!a.start.empty()) {
        cfg.start = read_input(a.start, in);
        if (cfg.n == 0) cfg.n = cfg.start->size();
    }
    if (cfg.n == 0) throw UsageError("search: -n is required unless --start is given");
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    ProgressCallback progress;
    if (!a.quiet)
        progress = [&err](const SearchProgress& p) {
            err << "restart " << p.restart << " iter " << p.iteration << " log10|det| " << p.log10_det
                << " fraction " << format_fraction(p.fraction) << '\n';
        };
    const SearchResult r = hill_climb_parallel(cfg, a.workers, progress);

    ordered_json j;
    j["n"] = cfg.n;
    j["seed"] = cfg.seed;
    j["workers"] = a.workers;
    j["best_det"] = BigInt(abs(r.best_det)).get_str();
    j["best_det_factored"] = claimed_form(r.best_det, cfg.n);
    j["fraction"] = format_fraction(r.fraction);
    j["log10_det"] = determinant_log(r.best).log10_magnitude();
    j["iterations_used"] = r.iterations_used;
    j["restarts_used"] = r.restarts_used;
    j["rows"] = row_strings(r.best);
    if (!a.output.empty()) {
        write_file(a.output, serialize(r.best) + "\n");
        write_file(a.output + ".json", j.dump(2) + "\n");
    }
    if (a.raw)
        out << serialize(r.best) << '\n';
    else
        out << j.dump() << '\n';
    return kExitOk;
}

int run_construct(std::size_t n, const std::string& output, bool raw, std::ostream& out) {
    SignMatrix m = [&] {
        try {
            return build_mod16_15(n);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }();
    const BigInt det = determinant_exact(m);
    ordered_json j = matrix_json(m);
    j["det"] = BigInt(abs(det)).get_str();
    j["det_factored"] = claimed_form(det, n);
    j["fraction"] = format_fraction(fraction_of_bound(det, n));
    if (!output.empty()) {
        write_file(output, serialize(m) + "\n");
        ordered_json side = j;
        side.erase("rows");
        write_file(output + ".json", side.dump(2) + "\n");
    }
    if (raw)
        out << serialize(m) << '\n';
    else
        out << j.dump() << '\n';
    return kExitOk;
}

int run_bound(std::size_t n, std::ostream& out) {
    const BoundSquare b = upper_bound_sq(n);
    ordered_json j;
    j["n"] = n;
    j["residue_class"] = b.residue_class;
    j["bound"] = b.floor_bound();
    j["bound_sq"] = b.value_sq.get_str();
    j["ehlich_s"] = b.ehlich_s ? ordered_json(*b.ehlich_s) : ordered_json(nullptr);
    out << j.dump() << '\n';
    return kExitOk;
}

int run_verify(const std::string& file, std::size_t n, bool corpus, std::istream& in, std::ostream& out) {
    if (corpus) {
        ordered_json all = ordered_json::array();
        bool ok = true;
        for (std::size_t dim : corpus_dimensions()) {
            const auto report = verify_record(load_corpus_matrix(dim), *find_claim(dim));
            ok = ok && report.match;
            all.push_back(ordered_json::parse(report.to_json()));
        }
        if (all.empty()) throw UsageError("no corpus matrices found under " + (data_dir() / "records").string());
        out << all.dump() << '\n';
        return ok ? kExitOk : kExitMismatch;
    }
    if (file.empty()) throw UsageError("verify: FILE (or - for stdin) is required unless --corpus is given");
    const SignMatrix m = read_input(file, in);
    if (n != 0 && m.size() != n)
        throw UsageError("verify: matrix has order " + std::to_string(m.size()) + ", expected " + std::to_string(n));
    const auto claim = find_claim(m.size());
    if (!claim) {
        ordered_json j;
        j["n"] = m.size();
        j["match"] = false;
        j["error"] = "no published claim for n = " + std::to_string(m.size());
        j["computed_det"] = determinant_exact(m).get_str();
        out << j.dump() << '\n';
        return kExitMismatch;
    }
    const auto report = verify_record(m, *claim);
    out << report.to_json() << '\n';
    return report.match ? kExitOk : kExitMismatch;
}

int run_excess(const std::string& file, std::optional<std::int64_t> expect, std::istream& in, std::ostream& out) {
    const SignMatrix m = read_input(file, in);
    if (m.size() < 2) throw UsageError("excess: matrix must have order >= 2");
    const SignMatrix sub = delete_row_col(m, 0, 0);
    const std::int64_t sum = excess(sub);
    ordered_json j;
    j["n"] = m.size();
    j["hadamard"] = is_hadamard(sub);
    j["sum"] = sum;
    j["excess"] = sum < 0 ? -sum : sum;
    bool ok = j["hadamard"].get<bool>();
    if (expect) {
        j["expected"] = *expect;
        j["matches"] = ok && j["excess"].get<std::int64_t>() == *expect;
        ok = j["matches"].get<bool>();
    }
    out << j.dump() << '\n';
    return ok ? kExitOk : kExitMismatch;
}

int run_oracle(std::size_t n, bool raw, std::ostream& out) {
    BruteForceResult r = [&] {
        try {
            return brute_force_maxdet(n);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }();
    if (raw) {
        out << serialize(r.witness) << '\n';
        return kExitOk;
    }
    ordered_json j;
    j["n"] = n;
    j["maxdet"] = r.maxdet;
    j["witness"] = row_strings(r.witness);
    out << j.dump() << '\n';
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Search, construct and verify +-1 matrices of large determinant", "maxdet"};
    app.require_subcommand(1);

    SearchArgs search;
    auto* s = app.add_subcommand("search", "Hill-climb for a large determinant");
    s->add_option("-n", search.n, "Dimension")->check(CLI::PositiveNumber);
    s->add_option("--seed", search.seed, "RNG seed (integer) or \"random\"")->capture_default_str();
    s->add_option("--restarts", search.restarts, "Additional runs from random starts")->capture_default_str();
    s->add_option("--workers", search.workers, "Independent parallel climbers")->check(CLI::PositiveNumber);
    s->add_option("--start", search.start, "Starting matrix file (- for stdin)");
    s->add_option("--max-iter", search.max_iter, "Sweeps per run")->capture_default_str();
    s->add_option("--perturb", search.perturb, "Initial flip probability on a stall")->capture_default_str();
    s->add_option("--cooling", search.cooling, "Decay factor for the flip probability")->capture_default_str();
    s->add_option("--stall", search.stall, "Non-improving sweeps before perturbing")->capture_default_str();
    s->add_option("-o", search.output, "Write the matrix to FILE and the report to FILE.json");
    s->add_flag("--raw", search.raw, "Print the +/- matrix instead of JSON");
    s->add_flag("--quiet", search.quiet, "No progress lines on stderr");

    std::size_t construct_n = 0;
    std::string construct_out;
    bool construct_raw = false;
    auto* c = app.add_subcommand("construct", "Conference-matrix construction for n = 15 (mod 16)");
    c->add_option("-n", construct_n, "Dimension")->required();
    c->add_option("-o", construct_out, "Write the matrix to FILE and a JSON sidecar to FILE.json");
    c->add_flag("--raw", construct_raw, "Print the +/- matrix instead of JSON");

    std::size_t bound_n = 0;
    auto* b = app.add_subcommand("bound", "Theoretical upper bound on md(n)");
    b->add_option("-n", bound_n, "Dimension")->required()->check(CLI::PositiveNumber);

    std::string verify_file;
    std::size_t verify_n = 0;
    bool verify_corpus = false;
    auto* v = app.add_subcommand("verify", "Check a matrix against the published claim for its dimension");
    v->add_option("file", verify_file, "Matrix file (+/- text or JSON), - for stdin");
    v->add_option("-n", verify_n, "Expected dimension");
    v->add_flag("--corpus", verify_corpus, "Verify every transcribed matrix under $MAXDET_DATA_DIR/records");

    std::string excess_file;
    std::optional<std::int64_t> excess_expect;
    auto* e = app.add_subcommand("excess", "Excess of the matrix with its first row and column deleted");
    e->add_option("file", excess_file, "Matrix file (+/- text or JSON), - for stdin")->required();
    e->add_option("--expect", excess_expect, "Expected excess");

    std::size_t oracle_n = 0;
    bool oracle_raw = false;
    auto* o = app.add_subcommand("oracle", "Exhaustive md(n) for n <= 6");
    o->add_option("-n", oracle_n, "Dimension")->required();
    o->add_flag("--raw", oracle_raw, "Print the witness as +/- text");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& ex) {
        err << "error: " << ex.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (s->parsed()) return run_search(search, in, out, err);
        if (c->parsed()) return run_construct(construct_n, construct_out, construct_raw, out);
        if (b->parsed()) return run_bound(bound_n, out);
        if (v->parsed()) return run_verify(verify_file, verify_n, verify_corpus, in, out);
        if (e->parsed()) return run_excess(excess_file, excess_expect, in, out);
        if (o->parsed()) return run_oracle(oracle_n, oracle_raw, out);
    } catch (const UsageError& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace maxdet::cli
