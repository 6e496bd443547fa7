// gfib: generalized Fibonacci sequences [P,Q] modulo primes.
// Subcommands: seq, period, matrix, complete, census, witness, progression.
// --format json emits one JSON object per line; --format csv emits RFC-4180
// rows (CRLF). Output is bit-stable for identical inputs. Exit codes:
// 0 success (mathematical findings included), 2 invalid input, 3 matrix cap
// exceeded, 1 other operational failure.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gfib/json_io.hpp"

namespace {

using gfib::json;

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& f) {
    if (f == "json") return Format::Json;
    if (f == "csv") return Format::Csv;
    return Format::Text;
}

void emit_record(std::string_view command, json params, json payload) {
    std::cout << gfib::output_record(command, std::move(params), std::move(payload)).dump() << "\n";
}

// RFC-4180 rows: comma-separated, CRLF terminated (numeric fields, no quoting needed).
void csv_row(const std::vector<std::string>& fields) {
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i) std::cout << ",";
        std::cout << fields[i];
    }
    std::cout << "\r\n";
}

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

struct SeqArgs {
    int64_t P = 0, Q = 0;
    uint64_t p = 0;
    uint64_t count = 0;
    bool full_period = false;
};

int run_seq(const SeqArgs& a, Format fmt) {
    const gfib::SeqParams sp = gfib::classify(a.P, a.Q, a.p);
    uint64_t count = a.count;
    if (a.full_period) count = gfib::pisano_period(sp, false).pi;
    if (count == 0) {
        std::cerr << "seq: provide -n COUNT or --full-period\n";
        return 2;
    }
    const auto terms = gfib::iterate_terms(sp, count);
    switch (fmt) {
        case Format::Text: {
            for (size_t i = 0; i < terms.size(); ++i) {
                if (i) std::cout << " ";
                std::cout << terms[i].value();
            }
            std::cout << "\n";
            break;
        }
        case Format::Json: {
            json values = json::array();
            for (const auto& t : terms) values.push_back(t.value());
            emit_record("seq",
                        {{"P", a.P}, {"Q", a.Q}, {"p", a.p}, {"count", count},
                         {"full_period", a.full_period}},
                        {{"count", count}, {"terms", std::move(values)}});
            break;
        }
        case Format::Csv: {
            csv_row({"n", "F_n"});
            for (size_t i = 0; i < terms.size(); ++i) {
                csv_row({std::to_string(i + 1), std::to_string(terms[i].value())});
            }
            break;
        }
    }
    return 0;
}

int run_period(int64_t P, int64_t Q, uint64_t p, bool with_histogram, Format fmt) {
    const gfib::SeqParams sp = gfib::classify(P, Q, p);
    const gfib::PeriodProfile profile = gfib::pisano_period(sp, with_histogram);
    switch (fmt) {
        case Format::Text:
            std::cout << "rho: " << profile.rho << "\n";
            std::cout << "pi: " << profile.pi << "\n";
            std::cout << "ord_q: " << profile.ord_q << "\n";
            std::cout << "u: " << profile.u.value() << "\n";
            if (profile.histogram) {
                std::cout << "histogram:";
                profile.histogram->for_each(
                    [](uint64_t r, uint64_t c) { std::cout << " " << r << ":" << c; });
                std::cout << "\n";
            }
            break;
        case Format::Json:
            emit_record("period", {{"P", P}, {"Q", Q}, {"p", p}}, gfib::to_json(profile));
            break;
        case Format::Csv:
            csv_row({"rho", "pi", "ord_q", "u"});
            csv_row({std::to_string(profile.rho), std::to_string(profile.pi),
                     std::to_string(profile.ord_q), std::to_string(profile.u.value())});
            break;
    }
    return 0;
}

int run_matrix(int64_t P, int64_t Q, uint64_t p, Format fmt) {
    const gfib::SeqParams sp = gfib::classify(P, Q, p);
    const gfib::PeriodMatrix m = gfib::period_matrix(sp);
    switch (fmt) {
        case Format::Text:
            for (uint64_t i = 1; i <= m.rows; ++i) {
                for (uint64_t j = 1; j <= m.cols; ++j) {
                    if (j > 1) std::cout << " ";
                    std::cout << m.at(i, j);
                }
                std::cout << "\n";
            }
            break;
        case Format::Json:
            emit_record("matrix", {{"P", P}, {"Q", Q}, {"p", p}}, gfib::to_json(m));
            break;
        case Format::Csv:
            for (uint64_t i = 1; i <= m.rows; ++i) {
                std::vector<std::string> row;
                row.reserve(m.cols);
                for (uint64_t j = 1; j <= m.cols; ++j) row.push_back(std::to_string(m.at(i, j)));
                csv_row(row);
            }
            break;
    }
    return 0;
}

int run_complete(int64_t P, int64_t Q, uint64_t p, const std::string& mode, Format fmt) {
    const gfib::SeqParams sp = gfib::classify(P, Q, p);
    gfib::CompletenessVerdict verdict;
    json extra = json::object();
    if (mode == "scan") {
        verdict = gfib::is_complete_scan(sp, /*want_profile=*/true);
    } else if (mode == "both") {
        verdict = gfib::is_complete_fast(sp);
        const gfib::CompletenessVerdict scan = gfib::is_complete_scan(sp);
        extra["scan_complete"] = scan.complete;
        extra["agreement"] = scan.complete == verdict.complete;
    } else {
        verdict = gfib::is_complete_fast(sp);
    }
    switch (fmt) {
        case Format::Text:
            std::cout << "complete: " << (verdict.complete ? "true" : "false") << "\n";
            std::cout << "decided_by: " << gfib::decision_path_name(verdict.decided_by) << "\n";
            if (extra.contains("agreement")) {
                std::cout << "agreement: " << (extra["agreement"].get<bool>() ? "true" : "false")
                          << "\n";
            }
            break;
        case Format::Json: {
            json payload = gfib::to_json(verdict);
            payload.update(extra);
            emit_record("complete", {{"P", P}, {"Q", Q}, {"p", p}, {"mode", mode}},
                        std::move(payload));
            break;
        }
        case Format::Csv:
            csv_row({"complete", "decided_by"});
            csv_row({verdict.complete ? "true" : "false",
                     std::string(gfib::decision_path_name(verdict.decided_by))});
            break;
    }
    return 0;
}

gfib::CensusMode parse_census_mode(const std::string& mode, uint64_t p) {
    if (mode == "fast") return gfib::CensusMode::Fast;
    if (mode == "oracle") return gfib::CensusMode::Oracle;
    if (mode == "both") return gfib::CensusMode::Both;
    // auto: dual census below the validation threshold, fast above
    return p <= 101 ? gfib::CensusMode::Both : gfib::CensusMode::Fast;
}

int run_census(uint64_t p, const std::string& mode, unsigned jobs, Format fmt) {
    const gfib::CensusMode m = parse_census_mode(mode, p);
    const gfib::CensusReport r = gfib::census(p, m, jobs);
    switch (fmt) {
        case Format::Text:
            std::cout << "p: " << r.p << "\n";
            std::cout << "lambda_count: " << r.lambda_count << "\n";
            std::cout << "ratio: " << r.ratio_string() << " = " << fmt_double(r.ratio()) << "\n";
            std::cout << "a_count: " << r.a_count << "\n";
            std::cout << "b_count: " << r.b_count << "\n";
            std::cout << "x_count: " << r.x_count << "\n";
            std::cout << "y_count: " << r.y_count << "\n";
            std::cout << "bound_violation: " << (r.any_bound_violation() ? "true" : "false") << "\n";
            break;
        case Format::Json:
            emit_record("census",
                        {{"p", p}, {"mode", gfib::census_mode_name(m)}, {"jobs", jobs}},
                        gfib::to_json(r));
            break;
        case Format::Csv:
            csv_row({"p", "lambda_count", "ratio", "a_count", "b_count", "x_count", "y_count",
                     "bound_violation"});
            csv_row({std::to_string(r.p), std::to_string(r.lambda_count), fmt_double(r.ratio()),
                     std::to_string(r.a_count), std::to_string(r.b_count),
                     std::to_string(r.x_count), std::to_string(r.y_count),
                     r.any_bound_violation() ? "true" : "false"});
            break;
    }
    return 0;
}

int run_census_series(const std::vector<uint64_t>& primes, const std::string& mode, unsigned jobs,
                      Format fmt) {
    gfib::CensusMode m = gfib::CensusMode::Both;
    if (mode == "fast") m = gfib::CensusMode::Fast;
    if (mode == "oracle") m = gfib::CensusMode::Oracle;
    const auto rows = gfib::ratio_series(primes, m, jobs);
    if (fmt == Format::Csv) csv_row({"p", "lambda", "den", "ratio", "safe_prime_like", "ok"});
    for (const auto& row : rows) {
        switch (fmt) {
            case Format::Text:
                if (row.ok) {
                    std::cout << row.p << " " << row.lambda << "/" << row.den << " "
                              << fmt_double(row.ratio) << (row.safe_prime_like ? " *" : "") << "\n";
                } else {
                    std::cout << row.p << " error: " << row.error << "\n";
                }
                break;
            case Format::Json: {
                json payload{{"p", row.p},
                             {"lambda", row.lambda},
                             {"den", row.den},
                             {"ratio", row.ratio},
                             {"safe_prime_like", row.safe_prime_like},
                             {"ok", row.ok}};
                if (!row.ok) payload["error"] = row.error;
                emit_record("census", {{"series", true}, {"mode", mode}, {"jobs", jobs}},
                            std::move(payload));
                break;
            }
            case Format::Csv:
                csv_row({std::to_string(row.p), std::to_string(row.lambda), std::to_string(row.den),
                         fmt_double(row.ratio), row.safe_prime_like ? "true" : "false",
                         row.ok ? "true" : "false"});
                break;
        }
    }
    return 0;
}

int run_witness(int64_t P, int64_t Q, uint64_t lo, uint64_t hi, unsigned jobs, Format fmt) {
    const gfib::WitnessScan s = gfib::scan_primes(P, Q, lo, hi, jobs);
    switch (fmt) {
        case Format::Text: {
            std::cout << "dichotomy_class: " << gfib::dichotomy_class_name(s.dichotomy) << "\n";
            std::cout << "primes_scanned: " << s.primes_scanned << "\n";
            std::cout << "hits:";
            for (uint64_t h : s.hits) std::cout << " " << h;
            std::cout << "\n";
            break;
        }
        case Format::Json:
            emit_record("witness", {{"P", P}, {"Q", Q}, {"lo", lo}, {"hi", hi}, {"jobs", jobs}},
                        gfib::to_json(s));
            break;
        case Format::Csv:
            csv_row({"hit"});
            for (uint64_t h : s.hits) csv_row({std::to_string(h)});
            break;
    }
    return 0;
}

int run_progression(int64_t P, int64_t Q, size_t count, uint64_t budget, Format fmt) {
    const gfib::ProgressionSpec spec = gfib::build_progression(P, Q);
    const gfib::ProgressionScanResult r = gfib::scan_progression(spec, spec.m, count, budget);
    switch (fmt) {
        case Format::Text: {
            std::cout << "m: " << spec.m << "\n";
            std::cout << "delta_sign: " << spec.sign << "\n";
            std::cout << "X: " << spec.X << "\n";
            std::cout << "kernel:";
            for (uint64_t q : spec.kernel) std::cout << " " << q;
            std::cout << "\n";
            std::cout << "lemma5: " << (spec.lemma5 ? "true" : "false") << "\n";
            if (!spec.lemma5) std::cout << "t1: " << spec.t1 << "\n";
            std::cout << "T: " << spec.T << "\n";
            std::cout << "modulus: " << spec.modulus << "\n";
            std::cout << "primes:";
            for (uint64_t q : r.primes) std::cout << " " << q;
            std::cout << "\n";
            std::cout << "budget_exhausted: " << (r.budget_exhausted ? "true" : "false") << "\n";
            break;
        }
        case Format::Json: {
            json payload = gfib::to_json(spec);
            payload["primes"] = r.primes;
            payload["candidates_tried"] = r.candidates_tried;
            payload["budget_exhausted"] = r.budget_exhausted;
            emit_record("progression", {{"P", P}, {"Q", Q}, {"count", count}}, std::move(payload));
            break;
        }
        case Format::Csv:
            csv_row({"prime"});
            for (uint64_t q : r.primes) csv_row({std::to_string(q)});
            break;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Fibonacci sequences [P,Q] modulo primes: periods, completeness, census"};
    app.require_subcommand(1);

    std::string format = "text";
    unsigned jobs = 1;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--jobs", jobs, "worker count for census/witness")->capture_default_str();

    SeqArgs seq_args;
    auto* seq = app.add_subcommand("seq", "print terms F_1..F_n");
    seq->add_option("-P", seq_args.P, "parameter P")->required();
    seq->add_option("-Q", seq_args.Q, "parameter Q")->required();
    seq->add_option("-p", seq_args.p, "odd prime modulus")->required();
    seq->add_option("-n,--count", seq_args.count, "number of terms");
    seq->add_flag("--full-period", seq_args.full_period, "use the Pisano period as the count");

    int64_t P = 0, Q = 0;
    uint64_t p = 0;
    bool no_histogram = false;
    auto* period = app.add_subcommand("period", "rank of apparition, Pisano period, histogram");
    period->add_option("-P", P, "parameter P")->required();
    period->add_option("-Q", Q, "parameter Q")->required();
    period->add_option("-p", p, "odd prime modulus")->required();
    period->add_flag("--no-histogram", no_histogram, "skip the O(pi) histogram pass");

    auto* matrix = app.add_subcommand("matrix", "the (pi/rho) x rho period matrix");
    matrix->add_option("-P", P, "parameter P")->required();
    matrix->add_option("-Q", Q, "parameter Q")->required();
    matrix->add_option("-p", p, "odd prime modulus")->required();

    std::string mode = "fast";
    auto* complete = app.add_subcommand("complete", "completeness verdict for [P,Q] mod p");
    complete->add_option("-P", P, "parameter P")->required();
    complete->add_option("-Q", Q, "parameter Q")->required();
    complete->add_option("-p", p, "odd prime modulus")->required();
    complete->add_option("--mode", mode, "fast | scan | both")
        ->check(CLI::IsMember({"fast", "scan", "both"}))
        ->capture_default_str();

    std::string census_mode = "auto";
    std::vector<uint64_t> series;
    auto* census = app.add_subcommand("census", "pair census over (P,Q) in {1..p-1}^2");
    census->add_option("-p", p, "odd prime >= 5");
    census->add_option("--mode", census_mode, "fast | oracle | both | auto")
        ->check(CLI::IsMember({"fast", "oracle", "both", "auto"}))
        ->capture_default_str();
    census->add_option("--series", series, "comma-separated primes for a ratio table")
        ->delimiter(',');

    uint64_t lo = 5, hi = 1000;
    auto* witness = app.add_subcommand("witness", "scan primes where [P,Q] is complete");
    witness->add_option("-P", P, "parameter P")->required();
    witness->add_option("-Q", Q, "parameter Q")->required();
    witness->add_option("--lo", lo, "range start (>= 5)")->capture_default_str();
    witness->add_option("--hi", hi, "range end")->capture_default_str();

    size_t count = 5;
    uint64_t budget = 1'000'000;
    auto* progression = app.add_subcommand("progression", "CRT progression and qualifying primes");
    progression->add_option("-P", P, "parameter P")->required();
    progression->add_option("-Q", Q, "parameter Q (a perfect square m^2, m > 1)")->required();
    progression->add_option("--count", count, "primes to return")->capture_default_str();
    progression->add_option("--budget", budget, "candidate budget")->capture_default_str();

    for (CLI::App* sub : {seq, period, matrix, complete, census, witness, progression}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const Format fmt = parse_format(format);
    try {
        if (seq->parsed()) return run_seq(seq_args, fmt);
        if (period->parsed()) return run_period(P, Q, p, !no_histogram, fmt);
        if (matrix->parsed()) return run_matrix(P, Q, p, fmt);
        if (complete->parsed()) return run_complete(P, Q, p, mode, fmt);
        if (census->parsed()) {
            if (!series.empty()) return run_census_series(series, census_mode, jobs, fmt);
            if (p == 0) {
                std::cerr << "census: provide -p PRIME or --series p1,p2,...\n";
                return 2;
            }
            return run_census(p, census_mode, jobs, fmt);
        }
        if (witness->parsed()) return run_witness(P, Q, lo, hi, jobs, fmt);
        if (progression->parsed()) return run_progression(P, Q, count, budget, fmt);
    } catch (const gfib::MatrixCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
