#include "fareylt/farey.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <thread>

#include "fareylt/errors.hpp"

namespace fareylt {

namespace {

void require_prime(std::uint64_t p)
{
    if (!is_prime(p))
        throw DomainError(std::to_string(p) + " is not prime");
}

// #{1 <= alpha <= W : alpha = c mod p} for c in [0, p).
std::uint64_t count_in_class(std::uint64_t W, std::uint64_t c, std::uint64_t p)
{
    if (c == 0)
        return W / p;
    if (c <= W)
        return (W - c) / p + 1;
    return 0;
}

std::vector<std::uint64_t> inverse_table(std::uint64_t p)
{
    std::vector<std::uint64_t> inv(p, 0);
    if (p > 1)
        inv[1] = 1;
    for (std::uint64_t i = 2; i < p; ++i)
        inv[i] = (p - (p / i) * inv[p % i] % p) % p;
    return inv;
}

} // namespace

std::uint64_t ResidueHistogram::total() const
{
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

double ResidueHistogram::main_term() const
{
    const double t = t_order;
    return kFareyDensity * t * t / static_cast<double>(p);
}

std::uint64_t count_coprime_pairs(std::uint32_t T)
{
    if (T == 0)
        throw DomainError("count_coprime_pairs requires T >= 1");
    const MobiusTable mu(T);
    std::int64_t total = 0;
    for (std::uint32_t d = 1; d <= T; ++d) {
        if (mu[d] == 0)
            continue;
        const std::int64_t q = T / d;
        total += mu[d] * q * q;
    }
    return static_cast<std::uint64_t>(total);
}

std::vector<CoprimePair> enumerate_coprime_pairs(std::uint32_t T)
{
    if (T == 0)
        throw DomainError("enumerate_coprime_pairs requires T >= 1");
    std::vector<CoprimePair> out;
    for_each_coprime_pair(T, [&](CoprimePair c) { out.push_back(c); });
    return out;
}

ResidueHistogram residue_histogram(std::uint32_t T, std::uint64_t p, unsigned threads)
{
    if (T == 0)
        throw DomainError("residue_histogram requires T >= 1");
    require_prime(p);
    if (p >= (1ULL << 32))
        throw DomainError("residue_histogram requires p < 2^32");

    const SpfSieve sieve(T);
    const auto inv = inverse_table(p);
    threads = std::clamp(threads, 1u, T);

    auto work = [&](std::uint32_t beta_lo, std::uint32_t beta_hi, std::vector<std::uint64_t>& counts) {
        std::vector<std::uint8_t> blocked(static_cast<std::size_t>(T) + 1, 0);
        for (std::uint32_t beta = beta_lo; beta < beta_hi; ++beta) {
            const std::uint64_t beta_inv = inv[beta % p];
            if (beta_inv == 0)
                continue;
            const auto primes = sieve.distinct_primes(beta);
            for (std::uint32_t q : primes)
                for (std::uint32_t m = q; m <= T; m += q)
                    blocked[m] = 1;
            std::uint64_t r = 0;
            for (std::uint32_t alpha = 1; alpha <= T; ++alpha) {
                if (++r == p)
                    r = 0;
                if (!blocked[alpha])
                    ++counts[r * beta_inv % p];
            }
            for (std::uint32_t q : primes)
                for (std::uint32_t m = q; m <= T; m += q)
                    blocked[m] = 0;
        }
    };

    std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(p, 0));
    {
        std::vector<std::jthread> pool;
        const std::uint64_t span = (static_cast<std::uint64_t>(T) + threads - 1) / threads;
        for (unsigned w = 0; w < threads; ++w) {
            const auto lo = static_cast<std::uint32_t>(std::min<std::uint64_t>(1 + w * span, T + 1ULL));
            const auto hi = static_cast<std::uint32_t>(std::min<std::uint64_t>(1 + (w + 1) * span, T + 1ULL));
            if (w + 1 == threads)
                work(lo, hi, partial[w]);
            else
                pool.emplace_back(work, lo, hi, std::ref(partial[w]));
        }
    }

    ResidueHistogram hist{p, T, std::move(partial[0])};
    for (unsigned w = 1; w < threads; ++w)
        for (std::uint64_t v = 0; v < p; ++v)
            hist.counts[v] += partial[w][v];
    return hist;
}

ResidueHistogram residue_histogram_oracle(std::uint32_t T, std::uint64_t p)
{
    if (T == 0)
        throw DomainError("residue_histogram_oracle requires T >= 1");
    if (T > 10000)
        throw SizeError("residue_histogram_oracle refuses T > 10000");
    require_prime(p);

    ResidueHistogram hist{p, T, std::vector<std::uint64_t>(p, 0)};
    for (std::uint64_t alpha = 1; alpha <= T; ++alpha) {
        for (std::uint64_t beta = 1; beta <= T; ++beta) {
            if (std::gcd(alpha, beta) != 1 || beta % p == 0)
                continue;
            const std::uint64_t beta_inv = pow_mod(beta, p - 2, p);
            ++hist.counts[mul_mod(alpha, beta_inv, p)];
        }
    }
    return hist;
}

std::uint64_t m_count(std::uint64_t W, std::uint64_t p, std::uint64_t d, std::uint64_t v)
{
    require_prime(p);
    if (d == 0)
        throw DomainError("m_count requires d >= 1");
    if (v >= p)
        throw DomainError("m_count requires v in [0, p)");
    if (d % p == 0)
        return 0;
    const std::uint64_t w = W / d;
    std::uint64_t total = 0;
    for (std::uint64_t beta = 1; beta <= w; ++beta) {
        if (beta % p == 0)
            continue;
        total += count_in_class(w, mul_mod(v, beta, p), p);
    }
    return total;
}

std::vector<std::uint64_t> m_count_all(std::uint64_t W, std::uint64_t p)
{
    require_prime(p);
    if (p >= (1ULL << 32))
        throw DomainError("m_count_all requires p < 2^32");
    // Denominators only matter through their residue b and its multiplicity.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> classes;
    for (std::uint64_t b = 1; b < p && b <= W; ++b)
        classes.emplace_back(b, count_in_class(W, b, p));

    std::vector<std::uint64_t> out(p, 0);
    for (std::uint64_t v = 0; v < p; ++v) {
        std::uint64_t total = 0;
        for (const auto& [b, mult] : classes)
            total += mult * count_in_class(W, v * b % p, p);
        out[v] = total;
    }
    return out;
}

double l1_deviation(std::span<const double> values, double main_term)
{
    double sum = 0.0;
    for (std::size_t v = 1; v < values.size(); ++v)
        sum += std::abs(values[v] - main_term);
    return sum;
}

double l1_discrepancy(const ResidueHistogram& hist)
{
    std::vector<double> values(hist.counts.begin(), hist.counts.end());
    return l1_deviation(values, hist.main_term());
}

double l1_discrepancy(std::uint32_t T, std::uint64_t p, unsigned threads)
{
    return l1_discrepancy(residue_histogram(T, p, threads));
}

double l2_m_deviation(std::uint64_t W, std::uint64_t p)
{
    if (W == 0)
        throw DomainError("l2_m_deviation requires W >= 1");
    if (W > 100000 || p > 10000)
        throw SizeError("l2_m_deviation is limited to W <= 1e5, p <= 1e4");
    const auto m = m_count_all(W, p);
    const double main = static_cast<double>(W) * static_cast<double>(W) / static_cast<double>(p);
    double sum = 0.0;
    for (std::uint64_t v = 1; v < p; ++v) {
        const double dev = static_cast<double>(m[v]) - main;
        sum += dev * dev;
    }
    return sum;
}

} // namespace fareylt
