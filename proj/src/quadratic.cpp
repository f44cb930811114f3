#include "fareylt/quadratic.hpp"

#include <cmath>
#include <numeric>

#include "fareylt/errors.hpp"

namespace fareylt {

std::int64_t field_discriminant(std::int64_t d)
{
    if (d >= 0 || !is_squarefree(d))
        throw DomainError("d must be a squarefree negative integer, got " + std::to_string(d));
    // d < 0, so d mod 4 == 1 means d % 4 == -3 in C++.
    return (d % 4 == -3) ? d : 4 * d;
}

ImaginaryQuadraticField field_of(std::int64_t d)
{
    const std::int64_t disc = field_discriminant(d);
    const std::uint32_t w = disc == -3 ? 6 : disc == -4 ? 4 : 2;
    return {d, disc, class_number(disc), w};
}

std::uint64_t class_number(std::int64_t D)
{
    if (D >= 0)
        throw DomainError("class_number requires D < 0");
    const std::int64_t r = ((D % 4) + 4) % 4;
    if (r != 0 && r != 1)
        throw DomainError("class_number requires D = 0 or 1 mod 4");

    const std::int64_t n = -D;
    std::uint64_t h = 0;
    // Reduced forms have 3a^2 <= |D|.
    for (std::int64_t a = 1; 3 * a * a <= n; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            if ((b - D) % 2 != 0)
                continue;
            const std::int64_t num = b * b - D;
            if (num % (4 * a) != 0)
                continue;
            const std::int64_t c = num / (4 * a);
            if (c < a || (c == a && b < 0))
                continue;
            if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1)
                continue;
            ++h;
        }
    }
    return h;
}

IntPolynomial lemma_poly(std::uint32_t hw)
{
    if (hw == 0)
        throw DomainError("lemma_poly requires hw >= 1");
    return dickson_poly(hw).compose(IntPolynomial{-2, 1}) + IntPolynomial{2};
}

std::int64_t frobenius_field(std::int64_t a_p, std::uint64_t p)
{
    if (a_p == 0)
        throw SupersingularExcluded();
    const std::int64_t disc = a_p * a_p - 4 * static_cast<std::int64_t>(p);
    if (disc >= 0)
        throw NotImaginary();
    return squarefree_kernel(disc);
}

bool lucas_lemma_check(std::int64_t a_p, std::uint64_t p, std::uint32_t hw)
{
    if (a_p * a_p >= 4 * static_cast<std::int64_t>(p))
        throw NotImaginary();
    const IntPolynomial poly = lemma_poly(hw);
    const BigInt pp = p;
    const Rational lhs = Rational(boost::multiprecision::pow(pp, hw)) * poly(Rational(BigInt(a_p * a_p), pp));
    const BigInt v = lucas_v(hw, BigInt(a_p), pp);
    return lhs == Rational(v * v);
}

} // namespace fareylt
