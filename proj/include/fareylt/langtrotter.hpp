#pragma once

// Lang-Trotter counters averaged over Farey fractions.
//
// Every total is computed twice: directly, by scanning primes for each
// fraction tau, and swapped, by summing the residue histogram over the
// matching rows of each prime's trace table. The two must agree exactly.

#include <cstdint>
#include <map>
#include <vector>

#include "fareylt/elliptic.hpp"

namespace fareylt {

enum class AverageMode { Trace, Field };

struct PrimeContribution {
    std::uint32_t p;
    std::uint64_t direct;
    std::uint64_t swapped;
    std::uint64_t good_v;
    std::uint64_t bad_v;

    friend bool operator==(const PrimeContribution&, const PrimeContribution&) = default;
};

struct AverageReport {
    std::uint64_t family_id = 0;
    AverageMode mode = AverageMode::Trace;
    std::int64_t target = 0;  ///< a in trace mode, d in field mode
    std::uint32_t x = 0;
    std::uint32_t t_order = 0;
    std::uint64_t total_direct = 0;
    std::uint64_t total_swapped = 0;
    double normalized = 0.0;  ///< total_direct / #F(T)
    double envelope = 0.0;
    std::uint64_t skipped_primes = 0;  ///< (p, tau) pairs with p | beta
    std::vector<PrimeContribution> per_prime;

    friend bool operator==(const AverageReport&, const AverageReport&) = default;
};

/// Average of Pi_{E(tau)}(a, x) over tau in F(T). The envelope uses the
/// a != 0 shape unless a == 0.
[[nodiscard]] AverageReport average_pi_a(const CurveFamily& family, std::int64_t a, std::uint32_t x, std::uint32_t T,
                                         unsigned threads = 1);

/// Average of Pi_{E(tau)}(Q(sqrt d), x) over tau in F(T).
[[nodiscard]] AverageReport average_pi_field(const CurveFamily& family, std::int64_t d, std::uint32_t x, std::uint32_t T,
                                             unsigned threads = 1);

struct ChebotarevReport {
    std::uint64_t p = 0;
    std::uint64_t ell = 0;
    std::map<std::uint64_t, std::uint64_t> counts;       ///< residue mod ell -> good v
    std::map<std::int32_t, std::uint64_t> trace_counts;  ///< exact a_p -> good v
    double main_term = 0.0;                              ///< p / ell
    double max_abs_dev = 0.0;
    bool ell_below_17 = false;
};

/// Tally good-v traces of trace_table(family, p) by residue mod ell.
[[nodiscard]] ChebotarevReport chebotarev_counts(const CurveFamily& family, std::uint64_t p, std::uint64_t ell,
                                                 unsigned threads = 1);

/// Part 1: T^2 x^{3/4} + T x^{3/2}; parts 2 and 3: T^2 x^{2/3} + T x^{3/2}.
/// The x^{o(1)} factor is taken as 1.
[[nodiscard]] double theorem2_envelope(std::uint64_t T, std::uint64_t x, int part);

} // namespace fareylt
