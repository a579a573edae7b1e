#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "msdecomp/multiset.hpp"
#include "msdecomp/random.hpp"

namespace msdecomp {

struct InstanceSpec {
    std::vector<std::uint64_t> structure;  // factor cardinalities
    std::uint64_t range = 0;               // values drawn from [0, range]
    std::uint64_t seed = 0;
};

struct GeneratedInstance {
    Multiset instance;
    std::vector<Multiset> factors;
    InstanceSpec spec;
};

// Throws ContractError for an empty structure or a zero cardinality.
void validate(const InstanceSpec& spec);

// Fewer than two factors of cardinality ≥ 2: the instance is not reducible
// by construction.
bool is_trivial(const InstanceSpec& spec);

// Each factor: c draws uniform on [0, range] with the first overwritten by
// 0. The instance is the Minkowski sum of all factors.
GeneratedInstance generate(const InstanceSpec& spec, Rng& rng);

// Uses Rng(spec.seed).
GeneratedInstance generate(const InstanceSpec& spec);

// `count` instances; instance i is generated from derive_seed(spec.seed, i).
std::vector<GeneratedInstance> generate_batch(const InstanceSpec& spec, std::uint64_t count);

// "5,5", "2^10", "2^3,5". Tokens a^k expand to k copies of a.
std::vector<std::uint64_t> parse_structure(std::string_view text);

// Inverse of parse_structure, compressing runs of three or more: "2^10", "5,5".
std::string format_structure(const std::vector<std::uint64_t>& structure);

// Instance file: header "# structure=5,5 range=10000 seed=42 rng=mt19937_64"
// followed by one multiset per line.
void write_instances(std::ostream& out, const InstanceSpec& spec, const std::vector<GeneratedInstance>& instances);

// Sidecar: same header, then per line the factors of one instance joined by " | ".
void write_factors(std::ostream& out, const InstanceSpec& spec, const std::vector<GeneratedInstance>& instances);

struct InstanceFile {
    std::optional<InstanceSpec> spec;  // absent without a header line
    std::vector<Multiset> instances;
};

// Blank lines and '#' comment lines other than the header are skipped.
InstanceFile read_instances(std::istream& in);

} // namespace msdecomp
