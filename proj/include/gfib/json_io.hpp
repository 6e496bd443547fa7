#pragma once

// JSON payload builders for the CLI and the python module. Uses ordered_json
// so output is byte-stable and fields appear in declaration order.

#include <string>
#include <string_view>

#include "gfib/census.hpp"
#include "gfib/witness.hpp"
#include "json.hpp"

namespace gfib {

using json = nlohmann::ordered_json;

inline constexpr std::string_view kSchemaVersion = "gfib-1";

inline json to_json(const Histogram& h) {
    json out = json::object();
    h.for_each([&](uint64_t r, uint64_t c) { out[std::to_string(r)] = c; });
    return out;
}

inline json to_json(const PeriodProfile& profile) {
    json out{{"rho", profile.rho}, {"pi", profile.pi}, {"ord_q", profile.ord_q},
             {"u", profile.u.value()}};
    if (profile.histogram) out["histogram"] = to_json(*profile.histogram);
    return out;
}

inline json to_json(const PeriodMatrix& m) {
    json rows = json::array();
    for (uint64_t i = 1; i <= m.rows; ++i) {
        json row = json::array();
        for (uint64_t j = 1; j <= m.cols; ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows}, {"cols", m.cols}, {"p", m.p}, {"entries", std::move(rows)}};
}

inline json to_json(const CompletenessVerdict& v) {
    json out{{"complete", v.complete}, {"decided_by", decision_path_name(v.decided_by)}};
    out["profile"] = v.profile ? to_json(*v.profile) : json(nullptr);
    return out;
}

inline json tally_to_json(const std::array<uint64_t, kDecisionPathCount>& tally) {
    json out = json::object();
    for (size_t i = 0; i < kDecisionPathCount; ++i) {
        if (tally[i] != 0) out[std::string(decision_path_name(static_cast<DecisionPath>(i)))] = tally[i];
    }
    return out;
}

inline json to_json(const CensusReport& r) {
    return json{
        {"p", r.p},
        {"lambda_count", r.lambda_count},
        {"ratio", r.ratio_string()},
        {"ratio_decimal", r.ratio()},
        {"a_count", r.a_count},
        {"b_count", r.b_count},
        {"x_count", r.x_count},
        {"y_count", r.y_count},
        {"phi_p_minus_1", r.phi_p_minus_1},
        {"c_counts", r.c_counts},
        {"decided_by_tally", tally_to_json(r.decided_by_tally)},
        {"bound_lower_ok", r.bound_lower_ok},
        {"bound_upper_ok", r.bound_upper_ok},
        {"aladov_ok", r.aladov_ok},
        {"a_phi_ok", r.a_phi_ok},
        {"a_le_b_ok", r.a_le_b_ok},
        {"b_ge_2a_applicable", r.b_ge_2a_applicable},
        {"b_ge_2a_ok", r.b_ge_2a_ok},
        {"bound_violation", r.any_bound_violation()},
    };
}

inline json to_json(const WitnessScan& s) {
    return json{
        {"P", s.P},
        {"Q", s.Q},
        {"lo", s.lo},
        {"hi", s.hi},
        {"hits", s.hits},
        {"primes_scanned", s.primes_scanned},
        {"decided_by_tally", tally_to_json(s.decided_by_tally)},
        {"dichotomy_class", dichotomy_class_name(s.dichotomy)},
    };
}

inline json to_json(const ProgressionSpec& spec) {
    return json{
        {"P", spec.P},         {"Q", spec.Q},
        {"m", spec.m},         {"sign", spec.sign},
        {"X", spec.X},         {"kernel_primes", spec.kernel},
        {"t1", spec.t1},       {"T", spec.T},
        {"modulus", spec.modulus}, {"lemma5", spec.lemma5},
    };
}

inline json to_json(const Lemma1Report& r) {
    return json{
        {"alpha_ok", r.alpha_ok},
        {"beta_ok", r.beta_ok},
        {"divides_ok", r.divides_ok},
        {"odd_quotient_applicable", r.odd_quotient_applicable},
        {"odd_quotient_ok", r.odd_quotient_ok},
        {"pi", r.pi},
        {"ord_q", r.ord_q},
        {"quotient", r.quotient},
    };
}

inline json output_record(std::string_view command, json params, json payload) {
    return json{{"schema_version", kSchemaVersion},
                {"command", command},
                {"params", std::move(params)},
                {"payload", std::move(payload)}};
}

}  // namespace gfib
