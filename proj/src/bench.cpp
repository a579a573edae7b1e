#include "msdecomp/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <limits>
#include <numeric>
#include <thread>

#include "msdecomp/errors.hpp"

namespace msdecomp {

std::uint64_t bench_cardinality(const InstanceSpec& spec) {
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (std::uint64_t c : spec.structure) {
        if (c >= 2) best = std::min(best, c);
    }
    return best == std::numeric_limits<std::uint64_t>::max() ? 0 : best;
}

namespace {

BenchRun run_one(const BenchSpec& spec, std::uint64_t index) {
    Rng gen_rng(derive_seed(spec.instances.seed, index));
    const GeneratedInstance g = generate(spec.instances, gen_rng);

    SearchConfig config;
    config.max_iterations = spec.max_iterations;
    config.seed = derive_seed(spec.instances.seed, spec.count + index);
    config.deterministic_neighbor_order = spec.deterministic_neighbor_order;

    DecomposeOptions options;
    const std::uint64_t m = bench_cardinality(spec.instances);
    if (m != 0 && m < g.instance.cardinality()) options.cardinality = m;

    const auto start = std::chrono::steady_clock::now();
    const DecompositionResult result = decompose(g.instance, config, options);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    BenchRun run;
    run.seconds = elapsed.count();
    if (const Found* f = result.found()) {
        run.found = true;
        run.iterations = f->iterations;
    } else {
        run.iterations = spec.max_iterations;
    }
    return run;
}

} // namespace

std::vector<BenchRun> run_bench_instances(const BenchSpec& spec) {
    validate(spec.instances);
    std::vector<BenchRun> runs(spec.count);
    const unsigned workers = std::max(1u, std::min<unsigned>(spec.threads, static_cast<unsigned>(spec.count)));
    if (workers == 1) {
        for (std::uint64_t i = 0; i < spec.count; ++i) runs[i] = run_one(spec, i);
        return runs;
    }
    std::atomic<std::uint64_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::uint64_t i = next++; i < spec.count; i = next++) runs[i] = run_one(spec, i);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return runs;
}

BenchRecord summarize(const BenchSpec& spec, const std::vector<BenchRun>& runs) {
    BenchRecord r;
    r.size = std::accumulate(spec.instances.structure.begin(), spec.instances.structure.end(), std::uint64_t{1},
                             std::multiplies<>());
    r.structure = format_structure(spec.instances.structure);
    r.seed = spec.instances.seed;
    r.instance_count = runs.size();
    if (runs.empty()) return r;

    double iterations = 0, success_iterations = 0, seconds = 0;
    for (const BenchRun& run : runs) {
        iterations += static_cast<double>(run.iterations);
        seconds += run.seconds;
        r.time_max_s = std::max(r.time_max_s, run.seconds);
        if (run.found) {
            ++r.found_count;
            success_iterations += static_cast<double>(run.iterations);
        }
    }
    const double count = static_cast<double>(runs.size());
    r.success_pct = 100.0 * static_cast<double>(r.found_count) / count;
    r.iterations_avg = iterations / count;
    r.iterations_avg_success = r.found_count ? success_iterations / static_cast<double>(r.found_count) : 0.0;
    r.time_avg_s = seconds / count;
    r.time_per_iter_s = r.iterations_avg > 0 ? r.time_avg_s / r.iterations_avg : 0.0;
    r.time_per_size_s = r.size > 0 ? r.time_avg_s / static_cast<double>(r.size) : 0.0;
    return r;
}

BenchRecord run_bench(const BenchSpec& spec) { return summarize(spec, run_bench_instances(spec)); }

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

} // namespace

void write_csv_header(std::ostream& out) { out << kBenchCsvHeader << '\n'; }

void write_csv_row(std::ostream& out, const BenchRecord& r) {
    const auto flags = out.flags();
    const auto precision = out.precision();
    out << r.size << ',' << csv_field(r.structure) << ',' << std::setprecision(6) << r.success_pct << ','
        << r.iterations_avg << ',' << std::setprecision(9) << r.time_avg_s << ',' << r.time_per_iter_s << ','
        << r.time_per_size_s << ',' << r.seed << ',' << r.instance_count << '\n';
    out.flags(flags);
    out.precision(precision);
}

void write_table(std::ostream& out, const std::vector<BenchRecord>& records) {
    const auto flags = out.flags();
    out << std::left << std::setw(8) << "Size" << std::setw(12) << "Structure" << std::right << std::setw(9)
        << "Success" << std::setw(12) << "Iterations" << std::setw(12) << "Iter(ok)" << std::setw(12) << "Time"
        << std::setw(12) << "Time/Iter" << std::setw(12) << "Time/Size" << '\n';
    for (const BenchRecord& r : records) {
        out << std::left << std::setw(8) << r.size << std::setw(12) << r.structure << std::right << std::fixed
            << std::setprecision(1) << std::setw(9) << r.success_pct << std::setprecision(2) << std::setw(12)
            << r.iterations_avg << std::setw(12) << r.iterations_avg_success << std::setprecision(5)
            << std::setw(12) << r.time_avg_s << std::setw(12) << r.time_per_iter_s << std::setw(12)
            << r.time_per_size_s << '\n';
        out.flags(flags);
    }
    out.flags(flags);
}

} // namespace msdecomp
