#pragma once

// Farey fractions of order T and their distribution in residue classes mod p.

#include <cstdint>
#include <span>
#include <vector>

#include "fareylt/arith.hpp"

namespace fareylt {

/// 6/pi^2 in double precision.
inline constexpr double kFareyDensity = 0.60792710185402662866;

/// A reduced fraction alpha/beta.
struct CoprimePair {
    std::uint32_t alpha;
    std::uint32_t beta;

    friend bool operator==(const CoprimePair&, const CoprimePair&) = default;
};

/// counts[v] = number of Farey fractions of order t_order with p not dividing
/// the denominator and alpha/beta = v mod p.
struct ResidueHistogram {
    std::uint64_t p = 0;
    std::uint32_t t_order = 0;
    std::vector<std::uint64_t> counts;

    [[nodiscard]] std::uint64_t total() const;
    /// (6/pi^2) T^2 / p
    [[nodiscard]] double main_term() const;

    friend bool operator==(const ResidueHistogram&, const ResidueHistogram&) = default;
};

/// #F(T) via sum_{d<=T} mu(d) floor(T/d)^2.
[[nodiscard]] std::uint64_t count_coprime_pairs(std::uint32_t T);

/// Calls fn(CoprimePair) for every coprime 1 <= alpha, beta <= T, ordered by
/// (beta, alpha). Coprimality comes from sieving the prime factors of beta.
template <typename Fn>
void for_each_coprime_pair(std::uint32_t T, Fn&& fn);

[[nodiscard]] std::vector<CoprimePair> enumerate_coprime_pairs(std::uint32_t T);

/// Fast histogram: one sieve pass per denominator, inverses from a table.
/// Denominators are split into `threads` contiguous blocks; the result does
/// not depend on the split.
[[nodiscard]] ResidueHistogram residue_histogram(std::uint32_t T, std::uint64_t p, unsigned threads = 1);

/// Brute-force reference: per-pair gcd and Fermat inverses. Refuses T > 10^4.
[[nodiscard]] ResidueHistogram residue_histogram_oracle(std::uint32_t T, std::uint64_t p);

/// M_{W,p,d}(v): pairs 1 <= alpha, beta <= W with d | alpha, d | beta,
/// p not dividing beta and alpha = v beta mod p. Closed form per beta.
[[nodiscard]] std::uint64_t m_count(std::uint64_t W, std::uint64_t p, std::uint64_t d, std::uint64_t v);

/// M_{W,p,1}(v) for every v in [0, p), grouped by denominator residue class.
[[nodiscard]] std::vector<std::uint64_t> m_count_all(std::uint64_t W, std::uint64_t p);

/// Sum over v = 1..p-1 of |values[v] - main_term|; values[0] is ignored.
[[nodiscard]] double l1_deviation(std::span<const double> values, double main_term);

[[nodiscard]] double l1_discrepancy(const ResidueHistogram& hist);
[[nodiscard]] double l1_discrepancy(std::uint32_t T, std::uint64_t p, unsigned threads = 1);

/// sum_{v=1}^{p-1} (M_{W,p,1}(v) - W^2/p)^2. Desk scale only: W <= 1e5, p <= 1e4.
[[nodiscard]] double l2_m_deviation(std::uint64_t W, std::uint64_t p);

// ---------------------------------------------------------------------------

template <typename Fn>
void for_each_coprime_pair(std::uint32_t T, Fn&& fn)
{
    if (T == 0)
        return;
    const SpfSieve sieve(T);
    std::vector<std::uint8_t> blocked(static_cast<std::size_t>(T) + 1, 0);
    for (std::uint32_t beta = 1; beta <= T; ++beta) {
        const auto primes = sieve.distinct_primes(beta);
        for (std::uint32_t q : primes)
            for (std::uint32_t m = q; m <= T; m += q)
                blocked[m] = 1;
        for (std::uint32_t alpha = 1; alpha <= T; ++alpha)
            if (!blocked[alpha])
                fn(CoprimePair{alpha, beta});
        for (std::uint32_t q : primes)
            for (std::uint32_t m = q; m <= T; m += q)
                blocked[m] = 0;
    }
}

} // namespace fareylt
