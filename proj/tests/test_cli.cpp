#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "msdecomp/cli.hpp"
#include "msdecomp/multiset.hpp"

using namespace msdecomp;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("msdecomp_test_" + name);
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

} // namespace

TEST_CASE("cli decompose") {
    const Run found = invoke({"decompose", "--elements", "0,1,2,3,4,5"});
    CHECK(found.code == cli::kExitOk);
    CHECK(found.out.find("outcome: found") != std::string::npos);
    CHECK(found.out.find("verified: yes") != std::string::npos);

    const Run prime = invoke({"decompose", "--elements", "0,1,3"});
    CHECK(prime.code == cli::kExitNegative);
    CHECK(prime.out.find("prime-cardinality") != std::string::npos);

    const Run shift = invoke({"decompose", "--elements", "2,4,3,4,3,5"});
    CHECK(shift.code == cli::kExitOk);
    CHECK(shift.out.find("trivial shift") != std::string::npos);
}

TEST_CASE("cli decompose json") {
    const Run r = invoke({"decompose", "--elements", "0,1,2,2,3,3,3,3,5,5,5,5,6,7,9,9", "--cardinality", "4",
                       "--initial", "0,1,2,6", "--json"});
    REQUIRE(r.code == cli::kExitOk);
    const json j = json::parse(r.out);
    CHECK(j["outcome"] == "found");
    CHECK(j["verified"] == true);
    const auto a = Multiset::from_elements(j["a"].get<std::vector<std::uint64_t>>());
    const auto b = Multiset::from_elements(j["b"].get<std::vector<std::uint64_t>>());
    CHECK(minkowski_sum(a, b) == parse_multiset("0,1,2,2,3,3,3,3,5,5,5,5,6,7,9,9"));

    const json prime = json::parse(invoke({"decompose", "--elements", "0,1,3", "--json"}).out);
    CHECK(prime["outcome"] == "irreducible");
    CHECK(prime["proof"] == "prime-cardinality");

    const json exhaustive = json::parse(invoke({"decompose", "--elements", "0,1,2,4", "--exhaustive", "--json"}).out);
    CHECK(exhaustive["proof"] == "exhausted-oracle");
}

TEST_CASE("cli input errors") {
    CHECK(invoke({"decompose", "--elements", "0,a"}).code == cli::kExitInputError);
    CHECK(invoke({"decompose"}).code == cli::kExitInputError);
    CHECK(invoke({"decompose", "--elements", "0,1", "--input", "x"}).code == cli::kExitInputError);
    CHECK(invoke({"decompose", "--elements", "0,1,2,3", "--initial", "0,1"}).code == cli::kExitInputError);
    CHECK(invoke({"decompose", "--input", "/nonexistent/file"}).code == cli::kExitInputError);
    CHECK(invoke({"factor", "--poly", "1 - x"}).code == cli::kExitInputError);
    CHECK(invoke({"gen", "--structure", "0", "--range", "5"}).code == cli::kExitInputError);
    CHECK(invoke({"nonsense"}).code == cli::kExitInputError);
    CHECK(invoke({"--help"}).code == cli::kExitOk);
}

TEST_CASE("cli factor") {
    const Run six = invoke({"factor", "--poly", "1 + x + x^2 + x^3 + x^4 + x^5"});
    CHECK(six.code == cli::kExitOk);
    CHECK(six.out.find(")(") != std::string::npos);

    const Run seven = invoke({"factor", "--poly", "7"});
    CHECK(seven.code == cli::kExitNegative);
    CHECK(seven.out.find("irreducible constant") != std::string::npos);

    const Run sq = invoke({"factor", "--poly", "1 + 2x + x^2"});
    CHECK(sq.out.find("(1 + x)(1 + x)") != std::string::npos);

    const json j = json::parse(invoke({"factor", "--poly", "x^2", "--complete", "--json"}).out);
    CHECK(j["factors"] == json::array({"x", "x"}));
    CHECK(j["reducible"] == true);
}

TEST_CASE("cli gen and decompose from file") {
    const auto inst = temp_file("inst.txt");
    const auto facs = temp_file("facs.txt");
    const Run g = invoke({"gen", "--structure", "5,5", "--range", "10000", "--count", "100", "--seed", "42", "--out",
                       inst.string(), "--factors", facs.string()});
    REQUIRE(g.code == cli::kExitOk);
    std::ifstream in(inst);
    std::stringstream buf;
    buf << in.rdbuf();
    const auto lines = lines_of(buf.str());
    REQUIRE(lines.size() == 101);
    CHECK(lines[0] == "# structure=5,5 range=10000 seed=42 rng=mt19937_64");
    for (std::size_t i = 1; i < lines.size(); ++i) REQUIRE(parse_multiset(lines[i]).cardinality() == 25);

    const Run stdout_gen = invoke({"gen", "--structure", "5,5", "--range", "10000", "--count", "100", "--seed", "42"});
    CHECK(stdout_gen.out == buf.str());

    const Run d = invoke({"decompose", "--input", inst.string(), "--json"});
    CHECK(d.code == cli::kExitOk);
    std::filesystem::remove(inst);
    std::filesystem::remove(facs);

    const Run small = invoke({"gen", "--structure", "2,2,2", "--range", "5"});
    REQUIRE(lines_of(small.out).size() == 2);
    CHECK(parse_multiset(lines_of(small.out)[1]).cardinality() == 8);

    const Run trivial = invoke({"gen", "--structure", "3", "--range", "5"});
    CHECK(trivial.code == cli::kExitOk);
    CHECK_FALSE(trivial.err.empty());
}

TEST_CASE("cli bench") {
    const std::vector<std::string> args{"bench", "--structure", "5,5", "--range", "100", "--count", "10", "--seed", "1"};
    const Run a = invoke(args);
    const Run b = invoke(args);
    REQUIRE(a.code == cli::kExitOk);
    const auto la = lines_of(a.out), lb = lines_of(b.out);
    REQUIRE(la.size() == 2);
    CHECK(la[0] == "Size,Structure,Success,Iterations,Time,Time/Iter,Time/Size,Seed,Count");
    // Success and Iterations columns are reproducible; timings are not.
    auto prefix = [](const std::string& row) {
        std::size_t pos = row.find("\",");
        for (int i = 0; i < 3; ++i) pos = row.find(',', pos + 1);
        return row.substr(0, pos);
    };
    CHECK(prefix(la[1]) == prefix(lb[1]));

    const Run table = invoke({"bench", "--structure", "2^3", "--structure", "3,3", "--range", "50", "--count", "5",
                           "--out", "table"});
    CHECK(table.code == cli::kExitOk);
    CHECK(lines_of(table.out).size() == 3);

    const auto csv = temp_file("bench.csv");
    CHECK(invoke({"bench", "--structure", "3,3", "--range", "50", "--count", "3", "--out", csv.string()}).code ==
          cli::kExitOk);
    CHECK(std::filesystem::exists(csv));
    std::filesystem::remove(csv);
}

TEST_CASE("cli score") {
    const std::string m16 = "0,1,2,2,3,3,3,3,5,5,5,5,6,7,9,9";
    const Run exact = invoke({"score", "--elements", m16, "--candidate", "0,2,2,6"});
    CHECK(exact.code == cli::kExitOk);
    CHECK(exact.out.find("score: 16 / 16") != std::string::npos);
    CHECK(exact.out.find("multipliers: 0,1,3,3") != std::string::npos);

    const json j = json::parse(invoke({"score", "--elements", m16, "--candidate", "0,2,2,5", "--json"}).out);
    CHECK(j["score"] == 11);
    CHECK(j["multipliers"] == json::array({0, 1, 3}));
    CHECK(j["quotient"].is_null());

    const Run bad = invoke({"score", "--elements", m16, "--candidate", "0,4"});
    CHECK(bad.code == cli::kExitInputError);
    CHECK(bad.err.find("contain") != std::string::npos);
}

TEST_CASE("cli seed from the environment") {
    ::setenv("MSDECOMP_SEED", "not-a-number", 1);
    CHECK(invoke({"decompose", "--elements", "0,1,1,2"}).code == cli::kExitInputError);
    ::setenv("MSDECOMP_SEED", "5", 1);
    CHECK(invoke({"decompose", "--elements", "0,1,1,2"}).code == cli::kExitOk);
    ::unsetenv("MSDECOMP_SEED");
}
