#include "gfib/census.hpp"

#include <stdexcept>
#include <thread>

namespace gfib {

namespace {

// Quadratic-residue table: qr[r] iff r is a nonzero square mod p.
std::vector<bool> residue_table(uint64_t p) {
    std::vector<bool> qr(p, false);
    for (uint64_t x = 1; x < p; ++x) qr[(x * x) % p] = true;
    return qr;
}

}  // namespace

std::string_view census_mode_name(CensusMode m) {
    switch (m) {
        case CensusMode::Fast: return "fast";
        case CensusMode::Oracle: return "oracle";
        case CensusMode::Both: return "both";
    }
    return "?";
}

std::string CensusReport::ratio_string() const {
    return std::to_string(ratio_num()) + "/" + std::to_string(ratio_den());
}

std::pair<std::vector<uint64_t>, std::vector<uint64_t>> aladov_sets(uint64_t p) {
    if (p < 5 || !is_prime(p)) throw std::invalid_argument("aladov_sets: p must be a prime >= 5");
    const std::vector<bool> qr = residue_table(p);
    std::vector<uint64_t> x_set, y_set;
    for (uint64_t v = 2; v < p; ++v) {  // v = 1 excluded: legendre(0) = 0
        if (qr[v] && !qr[v - 1]) x_set.push_back(v);
        if (!qr[v] && qr[v - 1]) y_set.push_back(v);
    }
    return {std::move(x_set), std::move(y_set)};
}

CQReport c_q_count(uint64_t p, uint64_t Q) {
    if (p < 5 || !is_prime(p)) throw std::invalid_argument("c_q_count: p must be a prime >= 5");
    Q %= p;
    if (Q == 0) throw std::invalid_argument("c_q_count: Q must be nonzero mod p");
    const std::vector<bool> qr = residue_table(p);
    CQReport report;
    report.p = p;
    report.q = Q;
    for (uint64_t P = 1; P < p; ++P) {
        const uint64_t d = (P * P + 4 * (p - Q)) % p;
        if (d != 0 && !qr[d]) report.members.push_back(P);
    }
    report.count = report.members.size();

    auto [x_set, y_set] = aladov_sets(p);
    report.twice_image = 2 * (qr[Q] ? x_set.size() : y_set.size());
    const uint64_t minus_4q = (4 * (p - Q)) % p;
    report.p0_would_join = minus_4q != 0 && !qr[minus_4q];
    report.two_to_one_ok = report.count == report.twice_image;
    return report;
}

CensusReport census(uint64_t p, CensusMode mode, unsigned jobs) {
    if (p < 5) throw std::invalid_argument("census: p must be >= 5");
    if (!is_prime(p)) throw std::invalid_argument("census: p must be prime");
    if (jobs == 0) jobs = 1;

    CensusReport report;
    report.p = p;
    const Factorization fac_pm1 = factorize(p - 1);
    report.phi_p_minus_1 = fac_pm1.totient();

    // A_p, B_p by direct order computation.
    for (uint64_t q = 1; q < p; ++q) {
        const uint64_t ord = order_mod(FpElem(static_cast<int64_t>(q), p), fac_pm1);
        if (ord == p - 1) ++report.a_count;
        if (ord == p - 1 || 2 * ord == p - 1) ++report.b_count;
    }

    // C_Q counts via the residue table.
    const std::vector<bool> qr = residue_table(p);
    report.c_counts.assign(p - 1, 0);
    for (uint64_t q = 1; q < p; ++q) {
        uint32_t n = 0;
        for (uint64_t P = 1; P < p; ++P) {
            const uint64_t d = (P * P + 4 * (p - q)) % p;
            if (d != 0 && !qr[d]) ++n;
        }
        report.c_counts[q - 1] = n;
    }

    auto [x_set, y_set] = aladov_sets(p);
    report.x_count = x_set.size();
    report.y_count = y_set.size();

    // Pair scan, partitioned by P-row; partial tallies merge by addition.
    struct Partial {
        uint64_t lambda = 0;
        std::array<uint64_t, kDecisionPathCount> tally{};
        std::string disagreement;
    };
    std::vector<Partial> partials(jobs);
    auto worker = [&](unsigned w) {
        Partial& part = partials[w];
        for (uint64_t P = 1 + w; P < p; P += jobs) {
            for (uint64_t q = 1; q < p; ++q) {
                const SeqParams sp =
                    classify_unchecked(static_cast<int64_t>(P), static_cast<int64_t>(q), p);
                CompletenessVerdict v;
                switch (mode) {
                    case CensusMode::Fast:
                        v = is_complete_fast(sp, fac_pm1);
                        break;
                    case CensusMode::Oracle:
                        v = is_complete_scan(sp);
                        break;
                    case CensusMode::Both: {
                        v = is_complete_fast(sp, fac_pm1);
                        const CompletenessVerdict oracle = is_complete_scan(sp);
                        if (oracle.complete != v.complete && part.disagreement.empty()) {
                            part.disagreement = "fast/oracle disagreement at (P,Q,p)=(" +
                                                std::to_string(P) + "," + std::to_string(q) + "," +
                                                std::to_string(p) + ")";
                        }
                        break;
                    }
                }
                part.lambda += v.complete;
                ++part.tally[static_cast<size_t>(v.decided_by)];
            }
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(jobs);
        for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
        for (auto& t : threads) t.join();
    }
    for (const Partial& part : partials) {
        if (!part.disagreement.empty()) throw std::runtime_error(part.disagreement);
        report.lambda_count += part.lambda;
        for (size_t i = 0; i < kDecisionPathCount; ++i) report.decided_by_tally[i] += part.tally[i];
    }

    report.bound_lower_ok = (p - 3) * report.b_count <= 2 * report.lambda_count;
    report.bound_upper_ok = 2 * report.lambda_count <= p * p - 1;
    report.aladov_ok = 4 * report.x_count >= p - 3 && 4 * report.y_count >= p - 3;
    report.a_phi_ok = report.a_count == report.phi_p_minus_1;
    report.a_le_b_ok = report.a_count <= report.b_count;
    report.b_ge_2a_applicable = p % 4 == 3;
    if (report.b_ge_2a_applicable) report.b_ge_2a_ok = report.b_count >= 2 * report.a_count;
    return report;
}

std::vector<RatioRow> ratio_series(const std::vector<uint64_t>& primes, CensusMode mode,
                                   unsigned jobs) {
    std::vector<RatioRow> rows;
    rows.reserve(primes.size());
    for (uint64_t p : primes) {
        RatioRow row;
        row.p = p;
        try {
            CensusMode effective = mode;
            if (mode == CensusMode::Both && p > 101) effective = CensusMode::Fast;
            const CensusReport report = census(p, effective, jobs);
            row.lambda = report.lambda_count;
            row.den = report.ratio_den();
            row.ratio = report.ratio();
            row.safe_prime_like = p % 4 == 3 && is_prime((p - 1) / 2);
            row.ok = true;
        } catch (const std::exception& e) {
            row.ok = false;
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace gfib
