// Python bindings for the main operations. Dict-shaped results reuse the same
// payload builders as the CLI's JSON output, so keys match across surfaces.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gfib/json_io.hpp"

namespace py = pybind11;
using namespace gfib;

namespace {

py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null: return py::none();
        case json::value_t::boolean: return py::bool_(j.get<bool>());
        case json::value_t::number_integer: return py::int_(j.get<int64_t>());
        case json::value_t::number_unsigned: return py::int_(j.get<uint64_t>());
        case json::value_t::number_float: return py::float_(j.get<double>());
        case json::value_t::string: return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
            return out;
        }
        default: return py::none();
    }
}

CensusMode census_mode_from(const std::string& mode) {
    if (mode == "fast") return CensusMode::Fast;
    if (mode == "oracle") return CensusMode::Oracle;
    if (mode == "both") return CensusMode::Both;
    throw std::invalid_argument("mode must be fast, oracle, or both");
}

}  // namespace

PYBIND11_MODULE(gfib, m) {
    m.doc() = "Generalized Fibonacci sequences [P,Q] modulo primes: periods, completeness, census";

    m.def("is_prime", &is_prime, py::arg("n"));
    m.def("legendre", &legendre, py::arg("a"), py::arg("p"));
    m.def(
        "sqrt_mod",
        [](int64_t a, uint64_t p) -> std::optional<uint64_t> {
            const auto r = sqrt_mod(FpElem(a, p));
            if (!r) return std::nullopt;
            return r->value();
        },
        py::arg("a"), py::arg("p"));
    m.def(
        "factorize",
        [](uint64_t n) {
            py::list out;
            for (const auto& [prime, exp] : factorize(n).factors) {
                out.append(py::make_tuple(prime, exp));
            }
            return out;
        },
        py::arg("n"));
    m.def(
        "multiplicative_order",
        [](int64_t x, uint64_t p) { return order_mod(FpElem(x, p), factorize(p - 1)); },
        py::arg("x"), py::arg("p"), "least t with x^t = 1 mod p");
    m.def(
        "is_primitive_root",
        [](int64_t x, uint64_t p) { return is_primitive_root(FpElem(x, p)); },
        py::arg("x"), py::arg("p"));

    m.def(
        "classify",
        [](int64_t P, int64_t Q, uint64_t p) {
            const SeqParams sp = classify(P, Q, p);
            const char* kind = sp.kind == SeqCase::I    ? "I"
                               : sp.kind == SeqCase::II ? "II"
                               : sp.kind == SeqCase::III ? "III"
                                                         : "DegenerateQ0";
            py::dict out;
            out["P"] = sp.p_hat.value();
            out["Q"] = sp.q_hat.value();
            out["p"] = sp.p;
            out["delta"] = sp.delta_hat.value();
            out["case"] = kind;
            return out;
        },
        py::arg("P"), py::arg("Q"), py::arg("p"));
    m.def(
        "iterate_terms",
        [](int64_t P, int64_t Q, uint64_t p, uint64_t count) {
            std::vector<uint64_t> out;
            out.reserve(count);
            for_each_term(classify(P, Q, p), count, [&](uint64_t v) { out.push_back(v); });
            return out;
        },
        py::arg("P"), py::arg("Q"), py::arg("p"), py::arg("count"));
    m.def(
        "nth_term",
        [](int64_t P, int64_t Q, uint64_t p, uint64_t n) {
            const TermPair tp = nth_term(classify(P, Q, p), n);
            return py::make_tuple(tp.f_n.value(), tp.f_n1.value());
        },
        py::arg("P"), py::arg("Q"), py::arg("p"), py::arg("n"),
        "(F_n, F_{n+1}) in O(log n) field operations");
    m.def(
        "binet_eval",
        [](int64_t P, int64_t Q, uint64_t p, uint64_t n) {
            return binet_eval(classify(P, Q, p), n).value();
        },
        py::arg("P"), py::arg("Q"), py::arg("p"), py::arg("n"));
    m.def(
        "repeated_root_term",
        [](int64_t P, int64_t Q, uint64_t p, uint64_t n) {
            return repeated_root_term(classify(P, Q, p), n).value();
        },
        py::arg("P"), py::arg("Q"), py::arg("p"), py::arg("n"));

    m.def(
        "rank_of_apparition",
        [](int64_t P, int64_t Q, uint64_t p) { return rank_of_apparition(classify(P, Q, p)); },
        py::arg("P"), py::arg("Q"), py::arg("p"));
    m.def(
        "pisano_period",
        [](int64_t P, int64_t Q, uint64_t p, bool with_histogram) {
            return json_to_py(to_json(pisano_period(classify(P, Q, p), with_histogram)));
        },
        py::arg("P"), py::arg("Q"), py::arg("p"), py::arg("with_histogram") = true);
    m.def(
        "period_matrix",
        [](int64_t P, int64_t Q, uint64_t p) {
            return json_to_py(to_json(period_matrix(classify(P, Q, p)))["entries"]);
        },
        py::arg("P"), py::arg("Q"), py::arg("p"), "the period matrix as a list of rows");
    m.def(
        "verify_lemma1",
        [](int64_t P, int64_t Q, uint64_t p) {
            return json_to_py(to_json(verify_lemma1(classify(P, Q, p))));
        },
        py::arg("P"), py::arg("Q"), py::arg("p"));

    m.def(
        "is_complete_fast",
        [](int64_t P, int64_t Q, uint64_t p) {
            return json_to_py(to_json(is_complete_fast(classify(P, Q, p))));
        },
        py::arg("P"), py::arg("Q"), py::arg("p"));
    m.def(
        "is_complete_scan",
        [](int64_t P, int64_t Q, uint64_t p) {
            return json_to_py(to_json(is_complete_scan(classify(P, Q, p), true)));
        },
        py::arg("P"), py::arg("Q"), py::arg("p"));
    m.def(
        "verify_uniform1",
        [](int64_t P, int64_t Q, uint64_t p) {
            const Uniform1Report r = verify_uniform1(classify(P, Q, p));
            py::dict out;
            out["branch"] = std::string(1, r.branch);
            out["sub_branch"] = r.sub_branch;
            out["zero_count"] = r.zero_count;
            out["nonzero_count"] = r.nonzero_count;
            out["counts_ok"] = r.counts_ok;
            out["admissible"] = r.admissible;
            out["ok"] = r.all_ok();
            return out;
        },
        py::arg("P"), py::arg("Q"), py::arg("p"));
    m.def(
        "sum_of_squares_check",
        [](int64_t P, int64_t Q, uint64_t p) {
            const SumSquaresReport r = sum_of_squares_check(classify(P, Q, p));
            py::dict out;
            out["sum"] = r.sum;
            out["expected"] = r.expected;
            out["ok"] = r.ok;
            return out;
        },
        py::arg("P"), py::arg("Q"), py::arg("p"));

    m.def(
        "census",
        [](uint64_t p, const std::string& mode, unsigned jobs) {
            return json_to_py(to_json(census(p, census_mode_from(mode), jobs)));
        },
        py::arg("p"), py::arg("mode") = "both", py::arg("jobs") = 1);
    m.def("aladov_sets", &aladov_sets, py::arg("p"));
    m.def(
        "c_q_count",
        [](uint64_t p, uint64_t Q) {
            const CQReport r = c_q_count(p, Q);
            py::dict out;
            out["members"] = r.members;
            out["count"] = r.count;
            out["twice_image"] = r.twice_image;
            out["p0_would_join"] = r.p0_would_join;
            out["two_to_one_ok"] = r.two_to_one_ok;
            return out;
        },
        py::arg("p"), py::arg("Q"));
    m.def(
        "ratio_series",
        [](const std::vector<uint64_t>& primes, const std::string& mode, unsigned jobs) {
            py::list out;
            for (const auto& row : ratio_series(primes, census_mode_from(mode), jobs)) {
                py::dict d;
                d["p"] = row.p;
                d["lambda"] = row.lambda;
                d["den"] = row.den;
                d["ratio"] = row.ratio;
                d["safe_prime_like"] = row.safe_prime_like;
                d["ok"] = row.ok;
                if (!row.ok) d["error"] = row.error;
                out.append(d);
            }
            return out;
        },
        py::arg("primes"), py::arg("mode") = "both", py::arg("jobs") = 1);

    m.def(
        "scan_primes",
        [](int64_t P, int64_t Q, uint64_t lo, uint64_t hi, unsigned jobs) {
            return json_to_py(to_json(scan_primes(P, Q, lo, hi, jobs)));
        },
        py::arg("P"), py::arg("Q"), py::arg("lo"), py::arg("hi"), py::arg("jobs") = 1);
    m.def(
        "build_progression",
        [](int64_t P, int64_t Q) { return json_to_py(to_json(build_progression(P, Q))); },
        py::arg("P"), py::arg("Q"));
    m.def(
        "scan_progression",
        [](int64_t P, int64_t Q, size_t count, uint64_t budget) {
            const ProgressionSpec spec = build_progression(P, Q);
            const ProgressionScanResult r = scan_progression(spec, spec.m, count, budget);
            json payload = to_json(spec);
            payload["primes"] = r.primes;
            payload["candidates_tried"] = r.candidates_tried;
            payload["budget_exhausted"] = r.budget_exhausted;
            return json_to_py(payload);
        },
        py::arg("P"), py::arg("Q"), py::arg("count") = 5, py::arg("budget") = 1'000'000);

    m.attr("__version__") = "1.0.0";
    m.attr("SCHEMA_VERSION") = std::string(kSchemaVersion);
}
