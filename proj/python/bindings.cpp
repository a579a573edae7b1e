#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "msdecomp/bench.hpp"
#include "msdecomp/instance_gen.hpp"
#include "msdecomp/multiset.hpp"
#include "msdecomp/oracle.hpp"
#include "msdecomp/polyfactor.hpp"
#include "msdecomp/polynomial.hpp"
#include "msdecomp/scoring.hpp"
#include "msdecomp/search.hpp"

namespace py = pybind11;
using namespace msdecomp;

namespace {

py::dict core_dict(const CoreOutcome& core) {
    py::dict d;
    std::visit(
        [&](const auto& o) {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, Found>) {
                d["outcome"] = "found";
                d["a"] = o.a;
                d["b"] = o.b;
                d["divisor"] = o.divisor;
                d["iterations"] = o.iterations;
                d["total_iterations"] = o.total_iterations;
            } else if constexpr (std::is_same_v<T, Irreducible>) {
                d["outcome"] = "irreducible";
                d["proof"] = to_string(o.proof);
            } else {
                d["outcome"] = "probably-irreducible";
                d["divisors"] = o.divisors;
                d["iterations_per_divisor"] = o.iterations_per_divisor;
                d["total_iterations"] = o.total_iterations;
            }
        },
        core);
    return d;
}

py::dict result_dict(const DecompositionResult& r) {
    if (const auto* s = std::get_if<TrivialShift>(&r.outcome)) {
        py::dict d;
        d["outcome"] = "trivial-shift";
        d["offset"] = s->offset;
        d["offset_divisible"] = s->offset_divisible;
        d["core"] = s->core;
        d["core_result"] = core_dict(s->core_outcome);
        return d;
    }
    return core_dict(r.core());
}

std::vector<std::string> formatted(const std::vector<SparsePolynomial>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(format_polynomial(p));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Minkowski sum decomposition of multisets of non-negative integers";

    py::class_<Multiset>(m, "Multiset")
        .def(py::init([](const std::vector<std::uint64_t>& values) { return Multiset::from_elements(values); }),
             py::arg("values"))
        .def_static("parse", &parse_multiset, py::arg("text"))
        .def_static(
            "from_entries",
            [](const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs) {
                std::vector<Entry> entries;
                for (auto [v, c] : pairs) entries.push_back({v, c});
                return Multiset::from_entries(std::move(entries));
            },
            py::arg("entries"))
        .def("elements", &Multiset::elements)
        .def("entries",
             [](const Multiset& ms) {
                 std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
                 for (const Entry& e : ms.entries()) out.emplace_back(e.value, e.count);
                 return out;
             })
        .def_property_readonly("cardinality", &Multiset::cardinality)
        .def("multiplicity", &Multiset::multiplicity, py::arg("value"))
        .def("min", &Multiset::min)
        .def("max", &Multiset::max)
        .def("__len__", &Multiset::cardinality)
        .def("__eq__", [](const Multiset& a, const Multiset& b) { return a == b; })
        .def("__str__", [](const Multiset& ms) { return format_multiset(ms); })
        .def("__repr__", [](const Multiset& ms) { return "Multiset([" + format_multiset(ms) + "])"; });

    m.def("minkowski_sum", &minkowski_sum, py::arg("a"), py::arg("b"));
    m.def("minkowski_set_sum", &minkowski_set_sum, py::arg("a"), py::arg("b"));
    m.def("contains", &contains, py::arg("a"), py::arg("b"), "True iff a is a sub-multiset of b.");
    m.def("difference", &difference, py::arg("a"), py::arg("b"));
    m.def(
        "normalize",
        [](const Multiset& ms) {
            Normalized n = normalize(ms);
            return py::make_tuple(n.offset, n.core);
        },
        py::arg("m"));

    m.def(
        "score",
        [](const Multiset& target, const Multiset& candidate) {
            const PlacementOutcome r = score(target, CandidateSolution::make(target, candidate));
            py::dict d;
            d["score"] = r.score;
            d["multipliers"] = r.multipliers;
            d["quotient"] = r.quotient ? py::cast(*r.quotient) : py::none();
            return d;
        },
        py::arg("target"), py::arg("candidate"));
    m.def("quotient", &quotient, py::arg("target"), py::arg("candidate"));

    m.def(
        "decompose",
        [](const Multiset& ms, std::uint64_t max_iterations, std::uint64_t seed, std::optional<std::uint64_t> cardinality,
           bool deterministic) {
            SearchConfig config{max_iterations, seed, deterministic};
            DecomposeOptions options;
            options.cardinality = cardinality;
            DecompositionResult r;
            {
                py::gil_scoped_release release;
                r = decompose(ms, config, options);
            }
            return result_dict(r);
        },
        py::arg("m"), py::arg("max_iterations") = 100, py::arg("seed") = 0, py::arg("cardinality") = py::none(),
        py::arg("deterministic") = true);

    m.def(
        "brute_force_factor_pairs",
        [](const Multiset& ms, std::uint64_t limit) {
            std::vector<std::pair<Multiset, Multiset>> out;
            for (auto& p : brute_force_factor_pairs(ms, limit)) out.emplace_back(p.a, p.b);
            return out;
        },
        py::arg("m"), py::arg("limit") = kDefaultOracleLimit);

    m.def(
        "generate",
        [](const std::vector<std::uint64_t>& structure, std::uint64_t range, std::uint64_t seed) {
            GeneratedInstance g = generate(InstanceSpec{structure, range, seed});
            return py::make_tuple(g.instance, g.factors);
        },
        py::arg("structure"), py::arg("range"), py::arg("seed") = 0);

    m.def(
        "to_polynomial",
        [](const Multiset& ms) { return format_polynomial(to_polynomial(ms)); }, py::arg("m"));
    m.def(
        "from_polynomial", [](const std::string& text) { return from_polynomial(parse_polynomial(text)); },
        py::arg("poly"));
    m.def(
        "factor",
        [](const std::string& text, std::uint64_t max_iterations, std::uint64_t seed) -> py::object {
            PolyFactOptions options;
            options.search = {max_iterations, seed, true};
            PolyFactorization r = n_poly_fact(parse_polynomial(text), options);
            if (!r.factors) return py::none();
            return py::make_tuple(format_polynomial(r.factors->first), format_polynomial(r.factors->second));
        },
        py::arg("poly"), py::arg("max_iterations") = 100, py::arg("seed") = 0);
    m.def(
        "factor_completely",
        [](const std::string& text, std::uint64_t max_iterations, std::uint64_t seed) {
            PolyFactOptions options;
            options.search = {max_iterations, seed, true};
            return formatted(factor_completely(parse_polynomial(text), options).factors);
        },
        py::arg("poly"), py::arg("max_iterations") = 100, py::arg("seed") = 0);

    m.def(
        "bench",
        [](const std::string& structure, std::uint64_t range, std::uint64_t count, std::uint64_t seed,
           std::uint64_t max_iterations) {
            BenchSpec spec;
            spec.instances = {parse_structure(structure), range, seed};
            spec.count = count;
            spec.max_iterations = max_iterations;
            BenchRecord r;
            {
                py::gil_scoped_release release;
                r = run_bench(spec);
            }
            py::dict d;
            d["size"] = r.size;
            d["structure"] = r.structure;
            d["success_pct"] = r.success_pct;
            d["iterations_avg"] = r.iterations_avg;
            d["iterations_avg_success"] = r.iterations_avg_success;
            d["time_avg_s"] = r.time_avg_s;
            d["count"] = r.instance_count;
            return d;
        },
        py::arg("structure"), py::arg("range"), py::arg("count") = 100, py::arg("seed") = 0,
        py::arg("max_iterations") = 100);

#ifdef MSDECOMP_VERSION
    m.attr("__version__") = MSDECOMP_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
