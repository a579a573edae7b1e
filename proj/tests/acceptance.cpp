// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "msdecomp/bench.hpp"
#include "msdecomp/instance_gen.hpp"
#include "msdecomp/oracle.hpp"
#include "msdecomp/polynomial.hpp"
#include "msdecomp/scoring.hpp"
#include "msdecomp/search.hpp"
#include "test_support.hpp"

using namespace msdecomp;
using testing_support::m16;
using testing_support::m25;
using testing_support::Values;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

Verdict c1_scores() {
    Verdict v;
    auto sc = [](const Multiset& s) { return score(m16(), CandidateSolution::make(m16(), s)); };
    const auto a = sc({0, 2, 2, 6}), b = sc({0, 1, 2, 6}), c = sc({0, 2, 2, 5});
    v.require(a.score == 16 && a.multipliers == std::vector<std::uint64_t>{0, 1, 3, 3}, "score {0,2,2,6}");
    v.require(b.score == 6 && b.multipliers == std::vector<std::uint64_t>{0, 2}, "score {0,1,2,6}");
    v.require(c.score == 11 && c.multipliers == std::vector<std::uint64_t>{0, 1, 3}, "score {0,2,2,5}");
    v.detail = v.pass ? "16, 6, 11" : v.detail;
    return v;
}

Verdict c2_quotients() {
    Verdict v;
    v.require(quotient(m16(), {0, 2, 2, 6}) == Multiset{0, 1, 3, 3}, "quotient {0,2,2,6}");
    v.require(quotient(m16(), {0, 1, 3, 3}) == Multiset{0, 2, 2, 6}, "quotient {0,1,3,3}");
    v.require(!quotient(m16(), {0, 1, 2, 6}).has_value(), "quotient {0,1,2,6} should be absent");
    v.require(!quotient(m16(), {0, 2, 2, 5}).has_value(), "quotient {0,2,2,5} should be absent");
    v.require(quotient({0, 1, 2, 3, 4, 5}, {0, 1, 2}) == Multiset{0, 3}, "quotient of the 6-element set");
    if (v.pass) v.detail = "5 cases";
    return v;
}

Verdict c3_m25() {
    Verdict v;
    const auto t = Clock::now();
    const DecompositionResult r = decompose(m25(), SearchConfig{});
    const double s = seconds_since(t);
    const Found* f = r.found();
    v.require(f != nullptr, "not found");
    if (f) v.require(minkowski_sum(f->a, f->b) == m25(), "product mismatch");
    v.require(s < 1.0, fmt("took %.3f s", s));
    if (v.pass) v.detail = fmt("found in %.0f iteration(s), %.2e s", double(f->iterations), s);
    return v;
}

Verdict bench_check(const InstanceSpec& inst, std::uint64_t count, double min_success, double max_iter,
                    double max_instance_s, std::string& detail) {
    Verdict v;
    BenchSpec spec;
    spec.instances = inst;
    spec.count = count;
    const BenchRecord r = run_bench(spec);
    v.require(r.success_pct >= min_success, fmt("success %.1f%%", r.success_pct));
    v.require(r.iterations_avg <= max_iter, fmt("avg iterations %.2f", r.iterations_avg));
    v.require(r.time_max_s < max_instance_s, fmt("max instance time %.3f s", r.time_max_s));
    detail += format_structure(inst.structure) + "/" + std::to_string(inst.range) +
              fmt(": %.1f%% %.2f it %.2e s/inst; ", r.success_pct, r.iterations_avg, r.time_avg_s);
    return v;
}

Verdict c4_bench_5x5() {
    Verdict v;
    std::string detail;
    const auto t = Clock::now();
    for (std::uint64_t range : {5, 10000}) {
        const Verdict b = bench_check({{5, 5}, range, 0}, 100, 99.0, 5.0, 60.0, detail);
        v.require(b.pass, std::to_string(range) + ": " + b.detail);
    }
    const double s = seconds_since(t);
    v.require(s < 60.0, fmt("total %.1f s", s));
    if (v.pass) v.detail = detail + fmt("total %.2e s", s);
    return v;
}

Verdict c5_bench_2pow10() {
    Verdict v;
    std::string detail;
    for (std::uint64_t range : {5, 10000}) {
        const Verdict b = bench_check({std::vector<std::uint64_t>(10, 2), range, 0}, 20, 100.0, 1.5, 5.0, detail);
        v.require(b.pass, std::to_string(range) + ": " + b.detail);
    }
    if (v.pass) v.detail = detail;
    return v;
}

Verdict c6_small_against_oracle() {
    Verdict v;
    const std::vector<std::vector<std::uint64_t>> structures{{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 3},
                                                             {2, 6}, {3, 4}, {2, 2, 2}, {2, 2, 3}};
    Rng rng(2024);
    SearchConfig config;
    config.max_iterations = 1000;
    int found = 0;
    const int total = 200;
    for (int i = 0; i < total; ++i) {
        const InstanceSpec spec{structures[rng.below(structures.size())], rng.between(1, 20), rng.next()};
        const GeneratedInstance g = generate(spec);
        const DecompositionResult r = decompose(g.instance, config);
        const auto pairs = brute_force_factor_pairs(g.instance);
        v.require(!pairs.empty(), "oracle missed a generated product");
        if (const Found* f = r.found()) {
            ++found;
            v.require(minkowski_sum(f->a, f->b) == g.instance, "unverified product");
            bool listed = false;
            for (const FactorPair& p : pairs) listed |= (p.a == f->a && p.b == f->b) || (p.a == f->b && p.b == f->a);
            v.require(listed, "search pair not in oracle list");
        } else {
            v.require(!std::holds_alternative<Irreducible>(r.outcome), "proved irreducible but oracle disagrees");
        }
    }
    const double rate = 100.0 * found / total;
    v.require(rate >= 99.0, fmt("found rate %.1f%%", rate));
    if (v.pass) v.detail = fmt("found %.0f/%.0f, all verified and listed by the oracle", found, total);
    return v;
}

Verdict c7_polynomials() {
    Verdict v;
    Rng rng(7);
    auto random_poly = [&rng]() {
        std::vector<Term> terms;
        const std::uint64_t degree = rng.between(0, 30);
        for (std::uint64_t e = 0; e <= degree; ++e) terms.push_back({e, rng.between(0, 5)});
        terms.back().coefficient = rng.between(1, 5);
        return SparsePolynomial::from_terms(terms);
    };
    auto dense = [](const SparsePolynomial& p) {
        Values d(p.degree() + 1, 0);
        for (const Term& t : p.terms()) d[t.exponent] = t.coefficient;
        return d;
    };
    for (int i = 0; i < 500; ++i) {
        const SparsePolynomial p = random_poly(), q = random_poly();
        const Multiset a = from_polynomial(p), b = from_polynomial(q);
        v.require(to_polynomial(minkowski_sum(a, b)) == multiply(p, q), "homomorphism");
        v.require(dense(multiply(p, q)) == testing_support::dense_multiply(dense(p), dense(q)), "dense product");
        v.require(to_polynomial(a) == p && from_polynomial(to_polynomial(a)) == a, "round trip");
    }
    if (v.pass) v.detail = "500 pairs";
    return v;
}

Verdict c8_invariants() {
    Verdict v;
    Rng rng(88);
    const int cases = 1000;
    for (int i = 0; i < cases && v.pass; ++i) {
        const Multiset a = testing_support::random_multiset(rng, 2 + rng.below(5), 25, true);
        const Multiset b = testing_support::random_multiset(rng, 1 + rng.below(5), 25, true);
        const Multiset c = testing_support::random_multiset(rng, 1 + rng.below(3), 25, false);
        const Multiset ab = minkowski_sum(a, b);
        v.require(ab.cardinality() == a.cardinality() * b.cardinality(), "cardinality law");
        v.require(ab == minkowski_sum(b, a), "commutativity");
        v.require(minkowski_sum(ab, c) == minkowski_sum(a, minkowski_sum(b, c)), "associativity");
        v.require(minkowski_sum(c, Multiset{0}) == c, "identity");
        v.require(contains(a, ab), "factor containment");
        const Normalized n = normalize(c);
        v.require(n.core.contains_value(0) && shift(n.core, n.offset) == c, "normalize");

        const PlacementOutcome exact = score(ab, CandidateSolution::make(ab, a));
        v.require(exact.score == ab.cardinality() && exact.quotient == b, "product scores fully");

        // A random candidate: score bounds and the reference fill.
        std::vector<std::uint64_t> rest = ab.elements();
        rest.erase(rest.begin());
        for (std::size_t k = rest.size(); k > 1; --k) std::swap(rest[k - 1], rest[rng.below(k)]);
        std::vector<std::uint64_t> s{0};
        s.insert(s.end(), rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(a.cardinality() - 1));
        const Multiset cand = Multiset::from_elements(s);
        const PlacementOutcome o = score(ab, CandidateSolution::make(ab, cand));
        v.require(o.score >= cand.cardinality() && o.score <= ab.cardinality(), "score bounds");
        v.require(o.score == testing_support::reference_score(ab.elements(), cand.elements()), "reference score");
        v.require(o.quotient.has_value() == (o.score == ab.cardinality()), "quotient iff full score");

        const CandidateSolution opt = find_local_opt(ab, CandidateSolution::make(ab, cand));
        v.require(score(ab, opt).score >= o.score, "local opt monotone");
        v.require(opt.elements().contains_value(0) && contains(opt.elements(), ab), "local opt valid");
        v.require(!testing_support::first_improving_neighbor(ab.elements(), opt.elements().elements()),
                  "local opt is a fixpoint");
    }
    if (v.pass) v.detail = std::to_string(cases) + " cases";
    return v;
}

Verdict c9_non_uniqueness() {
    Verdict v;
    const Multiset six{0, 1, 2, 3, 4, 5};
    const auto pairs = brute_force_factor_pairs(six);
    v.require(pairs.size() == 2, "expected two factor pairs");
    if (pairs.size() == 2) {
        v.require(pairs[0] == FactorPair{{0, 1}, {0, 2, 4}}, "pair {0,1}/{0,2,4}");
        v.require(pairs[1] == FactorPair{{0, 3}, {0, 1, 2}}, "pair {0,3}/{0,1,2}");
    }
    const DecompositionResult r = decompose(six, SearchConfig{});
    const Found* f = r.found();
    v.require(f && minkowski_sum(f->a, f->b) == six, "search result");
    if (v.pass) v.detail = "{0,1}+{0,2,4} and {0,3}+{0,1,2}";
    return v;
}

Verdict c10_determinism() {
    Verdict v;
    for (bool ordered : {true, false}) {
        BenchSpec spec;
        spec.instances = {{5, 5}, 10000, 42};
        spec.count = 30;
        spec.deterministic_neighbor_order = ordered;
        const auto x = run_bench_instances(spec);
        spec.threads = 4;
        const auto y = run_bench_instances(spec);
        for (std::size_t i = 0; i < x.size(); ++i)
            v.require(x[i].found == y[i].found && x[i].iterations == y[i].iterations, "bench runs differ");
    }
    const InstanceSpec spec{{5, 5}, 10000, 42};
    std::ostringstream a, b;
    write_instances(a, spec, generate_batch(spec, 50));
    write_instances(b, spec, generate_batch(spec, 50));
    v.require(a.str() == b.str(), "generated files differ");
    if (v.pass) v.detail = "identical outcomes and instance files for equal seeds";
    return v;
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
        {"placement scores on the 16-element example", c1_scores},
        {"quotient values", c2_quotients},
        {"25-element instance decomposes in under 1 s", c3_m25},
        {"{5,5} benchmark: success >= 99%, iterations <= 5, total < 60 s", c4_bench_5x5},
        {"2^10 benchmark: success 100%, iterations <= 1.5, instance < 5 s", c5_bench_2pow10},
        {"small instances agree with the exhaustive oracle", c6_small_against_oracle},
        {"polynomial homomorphism and round trips", c7_polynomials},
        {"invariant suite", c8_invariants},
        {"non-uniqueness witness", c9_non_uniqueness},
        {"seeded determinism", c10_determinism},
    };
    int failed = 0;
    int index = 0;
    for (const auto& [name, check] : criteria) {
        ++index;
        Verdict v;
        try {
            v = check();
        } catch (const std::exception& e) {
            v.pass = false;
            v.detail = std::string("exception: ") + e.what();
        }
        failed += !v.pass;
        std::printf("[%s] %2d %s (%s)\n", v.pass ? "PASS" : "FAIL", index, name, v.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", index - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
