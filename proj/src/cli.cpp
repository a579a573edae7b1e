#include "msdecomp/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "msdecomp/bench.hpp"
#include "msdecomp/errors.hpp"
#include "msdecomp/instance_gen.hpp"
#include "msdecomp/oracle.hpp"
#include "msdecomp/polyfactor.hpp"
#include "msdecomp/scoring.hpp"
#include "msdecomp/search.hpp"

namespace msdecomp::cli {

namespace {

using nlohmann::json;

// Input problems detected after argument parsing.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
    const char* env = std::getenv("MSDECOMP_SEED");
    if (env == nullptr || *env == '\0') return 0;
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument(env);
        return v;
    } catch (const std::exception&) {
        throw InputError(std::string("MSDECOMP_SEED is not a non-negative integer: ") + env);
    }
}

json to_json(const Multiset& m) { return m.elements(); }

json to_json(const CoreOutcome& core, const Multiset& target) {
    return std::visit(
        [&](const auto& o) -> json {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, Found>) {
                return {{"outcome", "found"},
                        {"a", to_json(o.a)},
                        {"b", to_json(o.b)},
                        {"divisor", o.divisor},
                        {"iterations", o.iterations},
                        {"total_iterations", o.total_iterations},
                        {"verified", minkowski_sum(o.a, o.b) == target}};
            } else if constexpr (std::is_same_v<T, Irreducible>) {
                return {{"outcome", "irreducible"}, {"proof", to_string(o.proof)}};
            } else {
                return {{"outcome", "probably-irreducible"},
                        {"divisors", o.divisors},
                        {"iterations_per_divisor", o.iterations_per_divisor},
                        {"total_iterations", o.total_iterations}};
            }
        },
        core);
}

json to_json(const DecompositionResult& r, const Multiset& input) {
    if (const auto* shift = std::get_if<TrivialShift>(&r.outcome)) {
        return {{"outcome", "trivial-shift"},
                {"offset", shift->offset},
                {"offset_divisible", shift->offset_divisible},
                {"core", to_json(shift->core)},
                {"core_result", to_json(shift->core_outcome, shift->core)}};
    }
    return to_json(r.core(), input);
}

void print_core(std::ostream& out, const CoreOutcome& core, const Multiset& target, const std::string& indent) {
    std::visit(
        [&](const auto& o) {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, Found>) {
                out << indent << "outcome: found\n"
                    << indent << "A: " << format_multiset(o.a) << '\n'
                    << indent << "B: " << format_multiset(o.b) << '\n'
                    << indent << "divisor: " << o.divisor << '\n'
                    << indent << "iterations: " << o.iterations << '\n'
                    << indent << "verified: " << (minkowski_sum(o.a, o.b) == target ? "yes" : "NO") << '\n';
            } else if constexpr (std::is_same_v<T, Irreducible>) {
                out << indent << "outcome: irreducible (" << to_string(o.proof) << ")\n";
            } else {
                out << indent << "outcome: probably irreducible (" << o.iterations_per_divisor
                    << " iterations for each of " << o.divisors.size() << " divisor"
                    << (o.divisors.size() == 1 ? "" : "s") << ")\n";
            }
        },
        core);
}

void print_result(std::ostream& out, const DecompositionResult& r, const Multiset& input) {
    if (const auto* shift = std::get_if<TrivialShift>(&r.outcome)) {
        out << "outcome: trivial shift\n"
            << "offset: " << shift->offset
            << (shift->offset_divisible ? " (further divisible into unit shifts)" : "") << '\n'
            << "core: " << format_multiset(shift->core) << '\n';
        print_core(out, shift->core_outcome, shift->core, "  ");
        return;
    }
    print_core(out, r.core(), input, "");
}

bool positive(const DecompositionResult& r) { return r.found() != nullptr || r.is_shift(); }

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct DecomposeArgs {
    std::string elements;
    std::string input;
    bool json = false;
    bool exhaustive = false;
    bool random_order = false;
    std::uint64_t limit = kDefaultOracleLimit;
    std::uint64_t cardinality = 0;
    std::string initial;
    std::uint64_t max_iter = 100;
    std::uint64_t seed = 0;
};

int cmd_decompose(const DecomposeArgs& a, std::ostream& out) {
    std::vector<Multiset> inputs;
    if (!a.elements.empty()) {
        inputs.push_back(parse_multiset(a.elements));
    } else {
        std::istringstream file(read_file(a.input));
        inputs = read_instances(file).instances;
        if (inputs.empty()) throw InputError("no multisets in " + a.input);
    }

    SearchConfig config;
    config.max_iterations = a.max_iter;
    config.seed = a.seed;
    config.deterministic_neighbor_order = !a.random_order;
    DecomposeOptions options;
    if (a.cardinality != 0) options.cardinality = a.cardinality;
    if (!a.initial.empty()) options.initial = parse_multiset(a.initial);

    json reports = json::array();
    bool all_positive = true;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        const Multiset& m = inputs[i];
        const DecompositionResult r = a.exhaustive ? decompose_exhaustive(m, a.limit) : decompose(m, config, options);
        all_positive = all_positive && positive(r);
        if (a.json) {
            reports.push_back(to_json(r, m));
            continue;
        }
        if (inputs.size() > 1) out << (i ? "\n" : "") << "instance " << i << ":\n";
        print_result(out, r, m);
    }
    if (a.json) out << (inputs.size() == 1 ? reports.front() : reports).dump(2) << '\n';
    return all_positive ? kExitOk : kExitNegative;
}

struct FactorArgs {
    std::string poly;
    bool complete = false;
    bool json = false;
    std::uint64_t max_iter = 100;
    std::uint64_t seed = 0;
    std::uint64_t max_cardinality = kDefaultPolyCardinalityLimit;
};

json to_json(const std::vector<SparsePolynomial>& factors) {
    json arr = json::array();
    for (const auto& f : factors) arr.push_back(format_polynomial(f));
    return arr;
}

int cmd_factor(const FactorArgs& a, std::ostream& out) {
    const SparsePolynomial p = parse_polynomial(a.poly);
    if (p.is_zero()) throw InputError("the zero polynomial cannot be factored");
    PolyFactOptions options;
    options.search.max_iterations = a.max_iter;
    options.search.seed = a.seed;
    options.max_cardinality = a.max_cardinality;

    std::vector<SparsePolynomial> factors;
    bool proven = true;
    if (a.complete) {
        CompleteFactorization full = factor_completely(p, options);
        factors = std::move(full.factors);
        proven = full.proven;
    } else {
        PolyFactorization split = n_poly_fact(p, options);
        if (split.factors) {
            factors = {split.factors->first, split.factors->second};
            std::sort(factors.begin(), factors.end(), factor_less);
        } else {
            factors = {p};
            proven = split.irreducibility == PolyIrreducibility::Proven;
        }
    }

    const bool reducible = factors.size() > 1;
    std::string status;
    if (!reducible) {
        status = proven ? (p.is_constant() ? "irreducible constant" : "irreducible") : "probably irreducible";
    }
    if (a.json) {
        json report = {{"input", format_polynomial(p)},
                       {"factors", to_json(factors)},
                       {"reducible", reducible},
                       {"complete", a.complete}};
        if (!reducible) report["status"] = status;
        if (a.complete && reducible) report["leaves_proven_irreducible"] = proven;
        out << report.dump(2) << '\n';
    } else if (reducible) {
        out << format_factors(factors) << '\n';
    } else {
        out << format_polynomial(p) << ": " << status << '\n';
    }
    return reducible ? kExitOk : kExitNegative;
}

struct GenArgs {
    std::string structure;
    std::uint64_t range = 0;
    std::uint64_t count = 1;
    std::uint64_t seed = 0;
    std::string out_path;
    std::string factors_path;
};

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
    InstanceSpec spec{parse_structure(a.structure), a.range, a.seed};
    validate(spec);
    if (is_trivial(spec))
        err << "warning: structure " << format_structure(spec.structure)
            << " has fewer than two non-trivial factors; instances are not reducible by construction\n";
    const auto instances = generate_batch(spec, a.count);
    if (a.out_path.empty()) {
        write_instances(out, spec, instances);
    } else {
        std::ofstream file(a.out_path);
        if (!file) throw InputError("cannot write " + a.out_path);
        write_instances(file, spec, instances);
    }
    if (!a.factors_path.empty()) {
        std::ofstream file(a.factors_path);
        if (!file) throw InputError("cannot write " + a.factors_path);
        write_factors(file, spec, instances);
    }
    return kExitOk;
}

struct BenchArgs {
    std::vector<std::string> structures;
    std::uint64_t range = 10000;
    std::uint64_t count = 100;
    std::uint64_t seed = 0;
    std::uint64_t max_iter = 100;
    unsigned threads = 1;
    bool random_order = false;
    std::string out = "csv";
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
    std::vector<BenchRecord> records;
    for (const std::string& s : a.structures) {
        BenchSpec spec;
        spec.instances = {parse_structure(s), a.range, a.seed};
        validate(spec.instances);
        spec.count = a.count;
        spec.max_iterations = a.max_iter;
        spec.threads = a.threads;
        spec.deterministic_neighbor_order = !a.random_order;
        records.push_back(run_bench(spec));
    }
    auto write_csv = [&](std::ostream& o) {
        write_csv_header(o);
        for (const auto& r : records) write_csv_row(o, r);
    };
    if (a.out == "table") {
        write_table(out, records);
    } else if (a.out == "csv") {
        write_csv(out);
    } else {
        std::ofstream file(a.out);
        if (!file) throw InputError("cannot write " + a.out);
        write_csv(file);
    }
    return kExitOk;
}

struct ScoreArgs {
    std::string elements;
    std::string candidate;
    bool json = false;
};

int cmd_score(const ScoreArgs& a, std::ostream& out) {
    const Multiset target = parse_multiset(a.elements);
    const Multiset cand = parse_multiset(a.candidate);
    if (auto why = candidate_violation(target, cand)) throw InputError("invalid candidate: " + *why);
    const PlacementOutcome r = score(target, CandidateSolution::make(target, cand));
    if (a.json) {
        json report = {{"score", r.score}, {"cardinality", target.cardinality()}, {"multipliers", r.multipliers}};
        report["quotient"] = r.quotient ? to_json(*r.quotient) : json(nullptr);
        out << report.dump(2) << '\n';
        return kExitOk;
    }
    out << "score: " << r.score << " / " << target.cardinality() << '\n';
    out << "multipliers: ";
    for (std::size_t i = 0; i < r.multipliers.size(); ++i) out << (i ? "," : "") << r.multipliers[i];
    out << '\n';
    if (r.quotient) out << "quotient: " << format_multiset(*r.quotient) << '\n';
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minkowski sum decomposition of multisets and factoring in N[x]", "msdecomp"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    try {
        seed = default_seed();
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    DecomposeArgs dec;
    dec.seed = seed;
    auto* decompose_cmd = app.add_subcommand("decompose", "Decompose a multiset as a Minkowski sum");
    auto* elements_opt = decompose_cmd->add_option("--elements", dec.elements, "Multiset, e.g. 0,1,2,3 or (0:1),(2:2)");
    auto* input_opt = decompose_cmd->add_option("--input", dec.input, "Instance file, one multiset per line");
    elements_opt->excludes(input_opt);
    decompose_cmd->add_flag("--json", dec.json, "JSON report");
    decompose_cmd->add_flag("--exhaustive", dec.exhaustive, "Use the exhaustive oracle (small inputs only)");
    decompose_cmd->add_option("--limit", dec.limit, "Cardinality limit for --exhaustive")->check(CLI::PositiveNumber);
    decompose_cmd->add_option("--cardinality", dec.cardinality, "Pin the factor cardinality");
    decompose_cmd->add_option("--initial", dec.initial, "Initial candidate (requires --cardinality)");
    decompose_cmd->add_option("--max-iter", dec.max_iter, "Iterations per divisor")->check(CLI::PositiveNumber);
    decompose_cmd->add_option("--seed", dec.seed, "Random seed (default: $MSDECOMP_SEED or 0)");
    decompose_cmd->add_flag("--random-order", dec.random_order, "Shuffle neighbor enumeration");

    FactorArgs fac;
    fac.seed = seed;
    auto* factor_cmd = app.add_subcommand("factor", "Factor a polynomial with non-negative integer coefficients");
    factor_cmd->add_option("--poly", fac.poly, "Polynomial, e.g. \"1 + x + x^2\"")->required();
    factor_cmd->add_flag("--complete", fac.complete, "Split recursively into irreducible factors");
    factor_cmd->add_flag("--json", fac.json, "JSON report");
    factor_cmd->add_option("--max-iter", fac.max_iter, "Iterations per divisor")->check(CLI::PositiveNumber);
    factor_cmd->add_option("--seed", fac.seed, "Random seed (default: $MSDECOMP_SEED or 0)");
    factor_cmd->add_option("--max-cardinality", fac.max_cardinality, "Refuse polynomials with p(1) above this");

    GenArgs gen;
    gen.seed = seed;
    auto* gen_cmd = app.add_subcommand("gen", "Generate reducible benchmark instances");
    gen_cmd->add_option("--structure", gen.structure, "Factor cardinalities, e.g. 5,5 or 2^10")->required();
    gen_cmd->add_option("--range", gen.range, "Values are drawn from [0, range]")->required();
    gen_cmd->add_option("--count", gen.count, "Number of instances");
    gen_cmd->add_option("--seed", gen.seed, "Random seed (default: $MSDECOMP_SEED or 0)");
    gen_cmd->add_option("--out", gen.out_path, "Instance file (default: stdout)");
    gen_cmd->add_option("--factors", gen.factors_path, "Ground-truth factor sidecar file");

    BenchArgs bench;
    bench.seed = seed;
    auto* bench_cmd = app.add_subcommand("bench", "Benchmark the search on generated instances");
    bench_cmd->add_option("--structure", bench.structures, "Structure (repeatable), e.g. 5,5 or 2^10")->required();
    bench_cmd->add_option("--range", bench.range, "Values are drawn from [0, range]");
    bench_cmd->add_option("--count", bench.count, "Instances per structure")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seed", bench.seed, "Random seed (default: $MSDECOMP_SEED or 0)");
    bench_cmd->add_option("--max-iter", bench.max_iter, "Iteration budget")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--threads", bench.threads, "Worker threads")->check(CLI::PositiveNumber);
    bench_cmd->add_flag("--random-order", bench.random_order, "Shuffle neighbor enumeration");
    bench_cmd->add_option("--out", bench.out, "csv, table, or a file path for CSV output");

    ScoreArgs sc;
    auto* score_cmd = app.add_subcommand("score", "Placement score of a candidate factor");
    score_cmd->add_option("--elements", sc.elements, "Target multiset")->required();
    score_cmd->add_option("--candidate", sc.candidate, "Candidate factor")->required();
    score_cmd->add_flag("--json", sc.json, "JSON report");

    std::vector<const char*> argv{"msdecomp"};
    for (const auto& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    try {
        if (decompose_cmd->parsed()) {
            if (dec.elements.empty() && dec.input.empty()) throw InputError("one of --elements or --input is required");
            return cmd_decompose(dec, out);
        }
        if (factor_cmd->parsed()) return cmd_factor(fac, out);
        if (gen_cmd->parsed()) return cmd_gen(gen, out, err);
        if (bench_cmd->parsed()) return cmd_bench(bench, out);
        if (score_cmd->parsed()) return cmd_score(sc, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const ContractError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const LimitError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const OverflowError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}

} // namespace msdecomp::cli
