#pragma once

// Imaginary quadratic fields: discriminants, class numbers by reduced forms,
// Frobenius fields, and the polynomial identity relating traces of powers.

#include <cstdint>

#include "fareylt/arith.hpp"

namespace fareylt {

struct ImaginaryQuadraticField {
    std::int64_t d;            ///< squarefree, negative
    std::int64_t disc;         ///< d if d = 1 mod 4, else 4d
    std::uint64_t class_number;
    std::uint32_t unit_count;  ///< 6 for disc -3, 4 for disc -4, else 2

    friend bool operator==(const ImaginaryQuadraticField&, const ImaginaryQuadraticField&) = default;
};

/// Field discriminant of Q(sqrt d) for squarefree d < 0.
[[nodiscard]] std::int64_t field_discriminant(std::int64_t d);

/// Throws DomainError unless d < 0 is squarefree.
[[nodiscard]] ImaginaryQuadraticField field_of(std::int64_t d);

/// Number of reduced primitive positive-definite forms (a, b, c) with
/// b^2 - 4ac = D. Requires D < 0 and D = 0, 1 mod 4.
[[nodiscard]] std::uint64_t class_number(std::int64_t D);

/// P(X) = D_hw(X - 2) + 2, so that (a^hw + b^hw)^2 / (ab)^hw = P((a + b)^2 / (ab)).
[[nodiscard]] IntPolynomial lemma_poly(std::uint32_t hw);

/// Squarefree kernel of a_p^2 - 4p. Throws SupersingularExcluded for a_p = 0
/// and NotImaginary when a_p^2 >= 4p.
[[nodiscard]] std::int64_t frobenius_field(std::int64_t a_p, std::uint64_t p);

/// p^hw * P(a_p^2 / p) == V_hw(a_p, p)^2, evaluated in exact rationals.
/// Requires a_p^2 < 4p.
[[nodiscard]] bool lucas_lemma_check(std::int64_t a_p, std::uint64_t p, std::uint32_t hw);

} // namespace fareylt
