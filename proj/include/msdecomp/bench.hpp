#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "msdecomp/instance_gen.hpp"
#include "msdecomp/search.hpp"

namespace msdecomp {

struct BenchSpec {
    InstanceSpec instances;
    std::uint64_t count = 100;
    std::uint64_t max_iterations = 100;
    bool deterministic_neighbor_order = true;
    unsigned threads = 1;
};

// One table row. Iterations average over all runs, counting a failed run
// as max_iterations; iterations_avg_success averages successful runs only.
struct BenchRecord {
    std::uint64_t size = 0;
    std::string structure;
    double success_pct = 0;
    double iterations_avg = 0;
    double iterations_avg_success = 0;
    double time_avg_s = 0;
    double time_per_iter_s = 0;
    double time_per_size_s = 0;
    double time_max_s = 0;
    std::uint64_t seed = 0;
    std::uint64_t instance_count = 0;
    std::uint64_t found_count = 0;
};

struct BenchRun {
    bool found = false;
    std::uint64_t iterations = 0;
    double seconds = 0;
};

// Target cardinality the harness pins: the smallest structure entry ≥ 2.
std::uint64_t bench_cardinality(const InstanceSpec& spec);

// Instance i uses derive_seed(seed, i) for generation and
// derive_seed(seed, count + i) for the search.
std::vector<BenchRun> run_bench_instances(const BenchSpec& spec);

BenchRecord summarize(const BenchSpec& spec, const std::vector<BenchRun>& runs);

BenchRecord run_bench(const BenchSpec& spec);

inline constexpr const char* kBenchCsvHeader = "Size,Structure,Success,Iterations,Time,Time/Iter,Time/Size,Seed,Count";

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const BenchRecord& record);
void write_table(std::ostream& out, const std::vector<BenchRecord>& records);

} // namespace msdecomp
