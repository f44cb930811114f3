#include <doctest.h>

#include <random>

#include "fareylt/elliptic.hpp"
#include "fareylt/errors.hpp"
#include "fareylt/quadratic.hpp"

using namespace fareylt;

namespace {
Rational rpow(const Rational& x, std::uint32_t n)
{
    Rational r = 1;
    for (std::uint32_t i = 0; i < n; ++i)
        r *= x;
    return r;
}
} // namespace

TEST_CASE("field_of")
{
    CHECK(field_of(-1) == ImaginaryQuadraticField{-1, -4, 1, 4});
    CHECK(field_of(-3) == ImaginaryQuadraticField{-3, -3, 1, 6});
    CHECK(field_of(-23) == ImaginaryQuadraticField{-23, -23, 3, 2});
    CHECK(field_of(-5) == ImaginaryQuadraticField{-5, -20, 2, 2});
    CHECK_THROWS_AS((void)field_of(5), DomainError);
    CHECK_THROWS_AS((void)field_of(-4), DomainError);
    CHECK_THROWS_AS((void)field_of(0), DomainError);
}

TEST_CASE("class_number")
{
    CHECK(class_number(-4) == 1);
    CHECK(class_number(-23) == 3);
    CHECK(class_number(-47) == 5);
    for (std::int64_t D : {-3, -4, -7, -8, -11, -19, -43, -67, -163})
        CHECK(class_number(D) == 1);
    // non-fundamental discriminants count primitive forms only
    CHECK(class_number(-12) == 1);
    CHECK(class_number(-16) == 1);
    CHECK(class_number(-56) == 4);
    CHECK_THROWS_AS((void)class_number(5), DomainError);
    CHECK_THROWS_AS((void)class_number(-5), DomainError);
    CHECK_THROWS_AS((void)class_number(-6), DomainError);
}

TEST_CASE("lemma_poly")
{
    CHECK(lemma_poly(1) == IntPolynomial{0, 1});
    CHECK(lemma_poly(2) == IntPolynomial{4, -4, 1});
    CHECK(lemma_poly(3) == IntPolynomial{0, 9, -6, 1});
    CHECK_THROWS_AS((void)lemma_poly(0), DomainError);

    // (a^n + b^n)^2 / (ab)^n = P((a + b)^2 / (ab)) by direct substitution
    for (std::uint32_t n = 1; n <= 10; ++n) {
        const auto P = lemma_poly(n);
        REQUIRE(P.degree() == static_cast<int>(n));
        REQUIRE(P.leading() == 1);
        for (auto [a, b] : {std::pair<int, int>{1, 2}, {1, 1}, {3, -5}, {7, 4}}) {
            const Rational ra(a), rb(b);
            const Rational ab = ra * rb;
            const Rational sum_pow = rpow(ra, n) + rpow(rb, n);
            const Rational lhs = sum_pow * sum_pow / rpow(ab, n);
            REQUIRE(P((ra + rb) * (ra + rb) / ab) == lhs);
        }
    }
}

TEST_CASE("frobenius_field")
{
    CHECK(frobenius_field(2, 5) == -1);
    CHECK(frobenius_field(-3, 5) == -11);
    CHECK_THROWS_AS((void)frobenius_field(0, 7), SupersingularExcluded);
    CHECK_THROWS_AS((void)frobenius_field(5, 5), NotImaginary);

    for (std::int64_t p : {5, 101, 997})
        for (std::int64_t a = 1; a * a < 4 * p; ++a) {
            const std::int64_t d = frobenius_field(a, p);
            const std::int64_t q = (a * a - 4 * p) / d;
            REQUIRE((a * a - 4 * p) % d == 0);
            const auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(q))));
            REQUIRE(r * r == q);
        }
}

TEST_CASE("lucas_lemma_check")
{
    CHECK(lucas_lemma_check(2, 5, 2));
    CHECK(lucas_lemma_check(1, 7, 1));
    CHECK(lucas_lemma_check(3, 11, 3));
    CHECK_THROWS_AS((void)lucas_lemma_check(5, 5, 2), NotImaginary);

    std::mt19937_64 rng(99);
    const auto primes = primes_up_to(1000);
    std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
    std::uniform_int_distribution<std::uint32_t> hw(1, 12);
    for (int i = 0; i < 100; ++i) {
        const std::int64_t p = primes[pick(rng)];
        const auto bound = static_cast<std::int64_t>(std::floor(std::sqrt(4.0 * p - 1)));
        std::uniform_int_distribution<std::int64_t> ap(-bound, bound);
        const std::int64_t a = ap(rng);
        REQUIRE(a * a < 4 * p);
        REQUIRE(lucas_lemma_check(a, p, hw(rng)));
    }
}

TEST_CASE("ordinary primes split in their Frobenius field")
{
    const auto fam = CurveFamily::validate(IntPolynomial{0, 1}, IntPolynomial{1});
    for (std::uint32_t p : primes_up_to(500)) {
        if (p < 5)
            continue;
        for (const auto& e : trace_table(fam, p).entries) {
            if (!e || *e == 0)
                continue;
            const std::int64_t D = field_discriminant(frobenius_field(*e, p));
            if (D % static_cast<std::int64_t>(p) == 0)
                continue;
            REQUIRE(legendre_symbol(D, p) == 1);
        }
    }
}
