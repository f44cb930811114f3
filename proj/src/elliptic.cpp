#include "fareylt/elliptic.hpp"

#include <algorithm>
#include <thread>

#include "fareylt/errors.hpp"

namespace fareylt {

namespace {

void require_good_prime(std::uint64_t p)
{
    if (p < 5)
        throw PrimeTooSmall(static_cast<long long>(p));
    if (!is_prime(p))
        throw DomainError(std::to_string(p) + " is not prime");
    if (p >= (1ULL << 31))
        throw DomainError("primes must stay below 2^31");
}

std::uint64_t cubic_rhs(std::uint64_t x, std::uint64_t a4, std::uint64_t a6, std::uint64_t p)
{
    return ((x * x % p + a4) * x + a6) % p;
}

} // namespace

CurveFamily::CurveFamily(IntPolynomial a, IntPolynomial b, IntPolynomial delta)
    : a_(std::move(a)), b_(std::move(b)), delta_(std::move(delta))
{
}

CurveFamily CurveFamily::validate(IntPolynomial a_poly, IntPolynomial b_poly)
{
    const IntPolynomial a_cubed = a_poly * a_poly * a_poly;
    const IntPolynomial disc_core = BigInt(4) * a_cubed + BigInt(27) * (b_poly * b_poly);
    IntPolynomial delta = BigInt(-16) * disc_core;
    if (delta.is_zero())
        throw DeltaIdenticallyZero();
    // j = 6912 A^3 / (4A^3 + 27B^2) is constant iff numerator and denominator are proportional.
    if (poly_pair_dependent(a_cubed, disc_core))
        throw ConstantJInvariant();
    return CurveFamily(std::move(a_poly), std::move(b_poly), std::move(delta));
}

std::string CurveFamily::serialization() const
{
    return "A=" + serialize(a_) + ";B=" + serialize(b_);
}

std::uint64_t CurveFamily::id() const { return fnv1a64(serialization()); }

CurveFamily parse_family(std::string_view text)
{
    const auto semi = text.find(';');
    if (semi == std::string_view::npos)
        throw DomainError("family must look like A=<coeffs>;B=<coeffs>");
    auto a_part = text.substr(0, semi);
    auto b_part = text.substr(semi + 1);
    if (!a_part.starts_with("A=") || !b_part.starts_with("B="))
        throw DomainError("family must look like A=<coeffs>;B=<coeffs>");
    return CurveFamily::validate(parse_polynomial(a_part.substr(2)), parse_polynomial(b_part.substr(2)));
}

QuadraticCharacter::QuadraticCharacter(std::uint64_t p) : p_(p), chi_(p, -1)
{
    chi_[0] = 0;
    for (std::uint64_t y = 1; 2 * y < p + 1; ++y)
        chi_[y * y % p] = 1;
}

std::optional<SpecializedCurve> specialize_mod_p(const CurveFamily& family, std::uint64_t v, std::uint64_t p)
{
    require_good_prime(p);
    if (v >= p)
        throw DomainError("specialization point must lie in [0, p)");
    const auto sv = static_cast<std::int64_t>(v);
    if (poly_eval_mod(family.delta_poly(), sv, p) == 0)
        return std::nullopt;
    return SpecializedCurve{poly_eval_mod(family.a_poly(), sv, p), poly_eval_mod(family.b_poly(), sv, p), p};
}

std::int32_t trace_of_frobenius(const SpecializedCurve& curve, const QuadraticCharacter& chi)
{
    const std::uint64_t p = curve.p;
    std::int64_t sum = 0;
    for (std::uint64_t x = 0; x < p; ++x)
        sum += chi(cubic_rhs(x, curve.a4, curve.a6, p));
    return static_cast<std::int32_t>(-sum);
}

std::int32_t trace_of_frobenius(const SpecializedCurve& curve)
{
    const std::uint64_t p = curve.p;
    require_good_prime(p);
    if (curve.a4 >= p || curve.a6 >= p)
        throw DomainError("curve coefficients must be reduced mod p");
    const std::uint64_t disc = (4 * (curve.a4 * curve.a4 % p) % p * curve.a4 + 27 * (curve.a6 * curve.a6 % p)) % p;
    if (disc == 0)
        throw DomainError("curve is singular mod p");
    return trace_of_frobenius(curve, QuadraticCharacter(p));
}

std::uint64_t TraceTable::good_count() const
{
    return static_cast<std::uint64_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.has_value(); }));
}

TraceTable trace_table(const CurveFamily& family, std::uint64_t p, unsigned threads)
{
    require_good_prime(p);
    const QuadraticCharacter chi(p);
    const auto a_mod = reduce_coeffs(family.a_poly(), p);
    const auto b_mod = reduce_coeffs(family.b_poly(), p);
    const auto d_mod = reduce_coeffs(family.delta_poly(), p);

    TraceTable table{p, family.id(), std::vector<std::optional<std::int32_t>>(p)};
    auto work = [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t v = lo; v < hi; ++v) {
            if (horner_mod(d_mod, v, p) == 0)
                continue;
            const SpecializedCurve curve{horner_mod(a_mod, v, p), horner_mod(b_mod, v, p), p};
            table.entries[v] = trace_of_frobenius(curve, chi);
        }
    };

    threads = static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, p));
    const std::uint64_t block = (p + threads - 1) / threads;
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 1; w < threads; ++w)
            pool.emplace_back(work, std::min(p, w * block), std::min(p, (w + 1) * block));
        work(0, std::min(p, block));
    }
    return table;
}

PrimeScan scan_primes(const CurveFamily& family, CoprimePair tau, std::uint32_t x, const TracePredicate& pred)
{
    PrimeScan scan;
    for (std::uint32_t p : primes_up_to(x)) {
        if (p < 5)
            continue;
        if (tau.beta % p == 0) {
            ++scan.skipped;
            continue;
        }
        const std::uint64_t v = mul_mod(tau.alpha, inverse_mod(tau.beta, p), p);
        const auto curve = specialize_mod_p(family, v, p);
        if (curve && pred(trace_of_frobenius(*curve), p))
            scan.hits.push_back(p);
    }
    return scan;
}

std::uint64_t pi_a(const CurveFamily& family, CoprimePair tau, std::int64_t a, std::uint32_t x)
{
    return scan_primes(family, tau, x, [a](std::int32_t ap, std::uint64_t) { return ap == a; }).hits.size();
}

} // namespace fareylt
