#include "fareylt/langtrotter.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "fareylt/errors.hpp"
#include "fareylt/quadratic.hpp"

namespace fareylt {

namespace {

void check_hasse(std::int32_t a_p, std::uint64_t p)
{
    if (static_cast<std::int64_t>(a_p) * a_p > 4 * static_cast<std::int64_t>(p))
        throw std::logic_error("Hasse bound violated at p = " + std::to_string(p));
}

AverageReport average(const CurveFamily& family, const TracePredicate& pred, std::uint32_t x, std::uint32_t T,
                      unsigned threads)
{
    if (T == 0 || x == 0)
        throw DomainError("x and T must be positive");
    threads = std::max(threads, 1u);

    std::vector<std::uint32_t> primes;
    for (std::uint32_t p : primes_up_to(x))
        if (p >= 5)
            primes.push_back(p);

    AverageReport report;
    report.family_id = family.id();
    report.x = x;
    report.t_order = T;
    report.per_prime.reserve(primes.size());
    for (std::uint32_t p : primes)
        report.per_prime.push_back({p, 0, 0, 0, 0});

    auto slot = [&](std::uint32_t p) {
        return std::lower_bound(primes.begin(), primes.end(), p) - primes.begin();
    };

    // Direct: for every tau, count the primes it contributes to.
    const auto pairs = enumerate_coprime_pairs(T);
    std::vector<std::vector<std::uint64_t>> direct(threads, std::vector<std::uint64_t>(primes.size(), 0));
    std::vector<std::uint64_t> skipped(threads, 0);
    {
        auto work = [&](unsigned w) {
            for (std::size_t i = w; i < pairs.size(); i += threads) {
                const PrimeScan scan = scan_primes(family, pairs[i], x, pred);
                for (std::uint32_t p : scan.hits)
                    ++direct[w][slot(p)];
                skipped[w] += scan.skipped;
            }
        };
        std::vector<std::jthread> pool;
        for (unsigned w = 1; w < threads; ++w)
            pool.emplace_back(work, w);
        work(0);
    }

    // Swapped: for every prime, weight matching residues by the histogram.
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const std::uint32_t p = primes[i];
        const ResidueHistogram hist = residue_histogram(T, p, threads);
        const TraceTable table = trace_table(family, p, threads);
        auto& row = report.per_prime[i];
        for (unsigned w = 0; w < threads; ++w)
            row.direct += direct[w][i];
        for (std::uint64_t v = 0; v < p; ++v) {
            const auto& entry = table.entries[v];
            if (!entry) {
                ++row.bad_v;
                continue;
            }
            ++row.good_v;
            check_hasse(*entry, p);
            if (pred(*entry, p))
                row.swapped += hist.counts[v];
        }
        report.total_direct += row.direct;
        report.total_swapped += row.swapped;
    }
    for (unsigned w = 0; w < threads; ++w)
        report.skipped_primes += skipped[w];
    report.normalized = static_cast<double>(report.total_direct) / static_cast<double>(count_coprime_pairs(T));
    return report;
}

} // namespace

AverageReport average_pi_a(const CurveFamily& family, std::int64_t a, std::uint32_t x, std::uint32_t T, unsigned threads)
{
    AverageReport report = average(
        family, [a](std::int32_t ap, std::uint64_t) { return ap == a; }, x, T, threads);
    report.mode = AverageMode::Trace;
    report.target = a;
    report.envelope = theorem2_envelope(T, x, a == 0 ? 2 : 1);
    return report;
}

AverageReport average_pi_field(const CurveFamily& family, std::int64_t d, std::uint32_t x, std::uint32_t T,
                               unsigned threads)
{
    (void)field_discriminant(d);
    AverageReport report = average(
        family, [d](std::int32_t ap, std::uint64_t p) { return ap != 0 && frobenius_field(ap, p) == d; }, x, T,
        threads);
    report.mode = AverageMode::Field;
    report.target = d;
    report.envelope = theorem2_envelope(T, x, 3);
    return report;
}

ChebotarevReport chebotarev_counts(const CurveFamily& family, std::uint64_t p, std::uint64_t ell, unsigned threads)
{
    if (!is_prime(ell))
        throw DomainError("ell must be prime, got " + std::to_string(ell));
    if (ell == p)
        throw DomainError("ell must differ from p");
    const TraceTable table = trace_table(family, p, threads);

    ChebotarevReport report;
    report.p = p;
    report.ell = ell;
    report.ell_below_17 = ell < 17;
    report.main_term = static_cast<double>(p) / static_cast<double>(ell);
    for (std::uint64_t r = 0; r < ell; ++r)
        report.counts[r] = 0;
    const auto sell = static_cast<std::int64_t>(ell);
    for (const auto& entry : table.entries) {
        if (!entry)
            continue;
        check_hasse(*entry, p);
        ++report.trace_counts[*entry];
        ++report.counts[static_cast<std::uint64_t>(((*entry % sell) + sell) % sell)];
    }
    for (const auto& [r, c] : report.counts)
        report.max_abs_dev = std::max(report.max_abs_dev, std::abs(static_cast<double>(c) - report.main_term));
    return report;
}

double theorem2_envelope(std::uint64_t T, std::uint64_t x, int part)
{
    const double t = static_cast<double>(T);
    const double xx = static_cast<double>(x);
    switch (part) {
    case 1:
        return t * t * std::pow(xx, 0.75) + t * std::pow(xx, 1.5);
    case 2:
    case 3:
        return t * t * std::cbrt(xx * xx) + t * std::pow(xx, 1.5);
    default:
        throw DomainError("envelope part must be 1, 2 or 3");
    }
}

} // namespace fareylt
