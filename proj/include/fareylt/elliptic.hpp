#pragma once

// One-parameter families E(t): Y^2 = X^3 + A(t) X + B(t), their reductions
// modulo primes, and traces of Frobenius.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fareylt/arith.hpp"
#include "fareylt/farey.hpp"

namespace fareylt {

/// A family with Delta(t) != 0 and non-constant j(t). Only constructible
/// through validate().
class CurveFamily {
public:
    /// Throws DeltaIdenticallyZero or ConstantJInvariant.
    static CurveFamily validate(IntPolynomial a_poly, IntPolynomial b_poly);

    [[nodiscard]] const IntPolynomial& a_poly() const noexcept { return a_; }
    [[nodiscard]] const IntPolynomial& b_poly() const noexcept { return b_; }
    /// -16 (4A^3 + 27B^2)
    [[nodiscard]] const IntPolynomial& delta_poly() const noexcept { return delta_; }

    /// "A=<coeffs>;B=<coeffs>"
    [[nodiscard]] std::string serialization() const;
    /// FNV-1a-64 of serialization().
    [[nodiscard]] std::uint64_t id() const;

private:
    CurveFamily(IntPolynomial a, IntPolynomial b, IntPolynomial delta);

    IntPolynomial a_, b_, delta_;
};

/// Parses "A=<coeffs>;B=<coeffs>" and validates the family.
[[nodiscard]] CurveFamily parse_family(std::string_view text);

/// y^2 = x^3 + a4 x + a6 over F_p, p >= 5, non-singular.
struct SpecializedCurve {
    std::uint64_t a4;
    std::uint64_t a6;
    std::uint64_t p;

    friend bool operator==(const SpecializedCurve&, const SpecializedCurve&) = default;
};

/// Quadratic character of F_p as a lookup table.
class QuadraticCharacter {
public:
    explicit QuadraticCharacter(std::uint64_t p);

    [[nodiscard]] std::uint64_t modulus() const noexcept { return p_; }
    [[nodiscard]] int operator()(std::uint64_t residue) const { return chi_[residue]; }

private:
    std::uint64_t p_;
    std::vector<std::int8_t> chi_;
};

/// Reduction of the family at t = v. std::nullopt marks bad reduction,
/// i.e. Delta(v) = 0 mod p. Throws PrimeTooSmall for p < 5.
[[nodiscard]] std::optional<SpecializedCurve> specialize_mod_p(const CurveFamily& family, std::uint64_t v, std::uint64_t p);

/// a_p = -sum_x (x^3 + a4 x + a6 | p). Validates the curve.
[[nodiscard]] std::int32_t trace_of_frobenius(const SpecializedCurve& curve);
/// Batched form; `chi` must be the character for curve.p. No validation.
[[nodiscard]] std::int32_t trace_of_frobenius(const SpecializedCurve& curve, const QuadraticCharacter& chi);

/// entries[v] = a_p(v), or std::nullopt where Delta(v) = 0 mod p.
struct TraceTable {
    std::uint64_t p = 0;
    std::uint64_t family_id = 0;
    std::vector<std::optional<std::int32_t>> entries;

    [[nodiscard]] std::uint64_t good_count() const;
    [[nodiscard]] std::uint64_t bad_count() const { return entries.size() - good_count(); }

    friend bool operator==(const TraceTable&, const TraceTable&) = default;
};

/// Entries for v in disjoint blocks may be computed by `threads` workers.
[[nodiscard]] TraceTable trace_table(const CurveFamily& family, std::uint64_t p, unsigned threads = 1);

/// Primes 5 <= p <= x at which the specialization E(alpha/beta) satisfies a
/// predicate on (a_p, p). Primes dividing beta are skipped and counted;
/// primes with Delta(alpha/beta) = 0 mod p never match.
struct PrimeScan {
    std::vector<std::uint32_t> hits;
    std::uint64_t skipped = 0;
};

using TracePredicate = std::function<bool(std::int32_t a_p, std::uint64_t p)>;

[[nodiscard]] PrimeScan scan_primes(const CurveFamily& family, CoprimePair tau, std::uint32_t x, const TracePredicate& pred);

/// Pi_{E(tau)}(a, x) with the conventions of scan_primes().
[[nodiscard]] std::uint64_t pi_a(const CurveFamily& family, CoprimePair tau, std::int64_t a, std::uint32_t x);

} // namespace fareylt
