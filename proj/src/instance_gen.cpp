#include "msdecomp/instance_gen.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "msdecomp/errors.hpp"

namespace msdecomp {

void validate(const InstanceSpec& spec) {
    if (spec.structure.empty()) throw ContractError("instance spec: structure is empty");
    for (std::uint64_t c : spec.structure) {
        if (c == 0) throw ContractError("instance spec: factor cardinality must be positive");
    }
}

bool is_trivial(const InstanceSpec& spec) {
    std::size_t nontrivial = 0;
    for (std::uint64_t c : spec.structure) nontrivial += c >= 2;
    return nontrivial < 2;
}

GeneratedInstance generate(const InstanceSpec& spec, Rng& rng) {
    validate(spec);
    GeneratedInstance out{Multiset{0}, {}, spec};
    for (std::uint64_t c : spec.structure) {
        std::vector<std::uint64_t> values(c);
        for (auto& v : values) v = rng.between(0, spec.range);
        values.front() = 0;
        out.factors.push_back(Multiset::from_elements(values));
        out.instance = minkowski_sum(out.instance, out.factors.back());
    }
    return out;
}

GeneratedInstance generate(const InstanceSpec& spec) {
    Rng rng(spec.seed);
    return generate(spec, rng);
}

std::vector<GeneratedInstance> generate_batch(const InstanceSpec& spec, std::uint64_t count) {
    std::vector<GeneratedInstance> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        Rng rng(derive_seed(spec.seed, i));
        out.push_back(generate(spec, rng));
    }
    return out;
}

namespace {

std::uint64_t parse_u64(std::string_view text, std::size_t offset) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw ParseError("expected a non-negative integer, got '" + std::string(text) + "'", offset);
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

std::vector<std::uint64_t> parse_structure(std::string_view text) {
    std::vector<std::uint64_t> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        const std::string_view token = trim(text.substr(start, comma - start));
        if (token.empty()) throw ParseError("empty structure entry", start);
        const std::size_t caret = token.find('^');
        if (caret == std::string_view::npos) {
            out.push_back(parse_u64(token, start));
        } else {
            const std::uint64_t base = parse_u64(trim(token.substr(0, caret)), start);
            const std::uint64_t times = parse_u64(trim(token.substr(caret + 1)), start + caret + 1);
            if (times == 0) throw ParseError("repeat count must be positive", start + caret + 1);
            out.insert(out.end(), times, base);
        }
        start = comma + 1;
    }
    return out;
}

std::string format_structure(const std::vector<std::uint64_t>& structure) {
    std::string out;
    for (std::size_t i = 0; i < structure.size();) {
        std::size_t j = i;
        while (j < structure.size() && structure[j] == structure[i]) ++j;
        const std::size_t run = j - i;
        if (!out.empty()) out += ',';
        if (run >= 3) {
            out += std::to_string(structure[i]) + "^" + std::to_string(run);
        } else {
            for (std::size_t k = 0; k < run; ++k) out += (k ? "," : "") + std::to_string(structure[i]);
        }
        i = j;
    }
    return out;
}

namespace {

void write_header(std::ostream& out, const InstanceSpec& spec) {
    out << "# structure=" << format_structure(spec.structure) << " range=" << spec.range << " seed=" << spec.seed
        << " rng=" << Rng::name << '\n';
}

InstanceSpec parse_header(std::string_view line) {
    InstanceSpec spec;
    std::istringstream words{std::string(line.substr(1))};
    std::string word;
    while (words >> word) {
        const auto eq = word.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = word.substr(0, eq);
        const std::string value = word.substr(eq + 1);
        if (key == "structure") spec.structure = parse_structure(value);
        else if (key == "range") spec.range = parse_u64(value, 0);
        else if (key == "seed") spec.seed = parse_u64(value, 0);
    }
    return spec;
}

} // namespace

void write_instances(std::ostream& out, const InstanceSpec& spec, const std::vector<GeneratedInstance>& instances) {
    write_header(out, spec);
    for (const auto& g : instances) out << format_multiset(g.instance) << '\n';
}

void write_factors(std::ostream& out, const InstanceSpec& spec, const std::vector<GeneratedInstance>& instances) {
    write_header(out, spec);
    for (const auto& g : instances) {
        for (std::size_t i = 0; i < g.factors.size(); ++i) out << (i ? " | " : "") << format_multiset(g.factors[i]);
        out << '\n';
    }
}

InstanceFile read_instances(std::istream& in) {
    InstanceFile file;
    std::string line;
    while (std::getline(in, line)) {
        const std::string_view text = trim(line);
        if (text.empty()) continue;
        if (text.front() == '#') {
            if (!file.spec && text.find("structure=") != std::string_view::npos) file.spec = parse_header(text);
            continue;
        }
        file.instances.push_back(parse_multiset(text));
    }
    return file;
}

} // namespace msdecomp
