#include <doctest.h>

#include <random>

#include "fareylt/elliptic.hpp"
#include "fareylt/errors.hpp"
#include "oracles.hpp"

using namespace fareylt;

namespace {

CurveFamily t_family() { return CurveFamily::validate(IntPolynomial{0, 1}, IntPolynomial{1}); }

void check_hasse(const TraceTable& table)
{
    const auto bound = 4 * static_cast<std::int64_t>(table.p);
    for (const auto& e : table.entries)
        if (e)
            REQUIRE(static_cast<std::int64_t>(*e) * *e <= bound);
}

} // namespace

TEST_CASE("family_validate")
{
    CHECK_THROWS_AS((void)CurveFamily::validate(IntPolynomial{}, IntPolynomial{}), DeltaIdenticallyZero);
    CHECK_THROWS_AS((void)CurveFamily::validate(IntPolynomial{1}, IntPolynomial{}), ConstantJInvariant);
    CHECK_THROWS_AS((void)CurveFamily::validate(IntPolynomial{}, IntPolynomial{0, 1}), ConstantJInvariant);
    // A = 3t^2, B = 2t^3: j constant although both vary
    CHECK_THROWS_AS((void)CurveFamily::validate(IntPolynomial{0, 0, 3}, IntPolynomial{0, 0, 0, 2}), ConstantJInvariant);

    const auto fam = t_family();
    CHECK(fam.delta_poly() == BigInt(-16) * IntPolynomial{27, 0, 0, 4});
    CHECK(fam.serialization() == "A=0,1;B=1");
    CHECK(fam.id() == fnv1a64("A=0,1;B=1"));

    CHECK(parse_family("A=0,1;B=1").serialization() == "A=0,1;B=1");
    CHECK_THROWS_AS((void)parse_family("A=0,1"), DomainError);
    CHECK_THROWS_AS((void)parse_family("B=1;A=0,1"), DomainError);
    CHECK_THROWS_AS((void)parse_family("A=;B="), DeltaIdenticallyZero);
}

TEST_CASE("specialize_mod_p")
{
    const auto fam = t_family();
    const auto c = specialize_mod_p(fam, 1, 5);
    REQUIRE(c.has_value());
    CHECK(*c == SpecializedCurve{1, 1, 5});
    CHECK_FALSE(specialize_mod_p(fam, 1, 31).has_value());
    CHECK_THROWS_AS((void)specialize_mod_p(fam, 0, 3), PrimeTooSmall);
    CHECK_THROWS_AS((void)specialize_mod_p(fam, 5, 5), DomainError);
}

TEST_CASE("trace_of_frobenius examples")
{
    CHECK(trace_of_frobenius({1, 0, 5}) == 2);
    CHECK(trace_of_frobenius({1, 1, 5}) == -3);
    CHECK(trace_of_frobenius({0, 1, 5}) == 0);
    CHECK_THROWS_AS((void)trace_of_frobenius({0, 0, 7}), DomainError);
    CHECK_THROWS_AS((void)trace_of_frobenius({1, 1, 3}), PrimeTooSmall);
}

TEST_CASE("trace_of_frobenius matches exhaustive point counts")
{
    std::mt19937_64 rng(2024);
    for (std::uint32_t p : primes_up_to(61)) {
        if (p < 5)
            continue;
        std::uniform_int_distribution<std::uint64_t> coef(0, p - 1);
        int done = 0;
        while (done < 20) {
            const std::uint64_t a4 = coef(rng), a6 = coef(rng);
            if ((4 * a4 * a4 * a4 + 27 * a6 * a6) % p == 0)
                continue;
            const auto t = trace_of_frobenius({a4, a6, p});
            REQUIRE(t == oracle::trace(static_cast<std::int64_t>(a4), static_cast<std::int64_t>(a6), p));
            REQUIRE(static_cast<std::int64_t>(t) * t <= 4 * static_cast<std::int64_t>(p));
            ++done;
        }
    }
}

TEST_CASE("supersingular fixture y^2 = x^3 + 1")
{
    for (std::uint32_t p : primes_up_to(200))
        if (p >= 5 && p % 3 == 2)
            REQUIRE(trace_of_frobenius({0, 1, p}) == 0);
}

TEST_CASE("trace_table")
{
    const auto fam = t_family();
    const auto t5 = trace_table(fam, 5);
    CHECK(t5.p == 5);
    CHECK(t5.family_id == fam.id());
    const std::vector<std::optional<std::int32_t>> expected{0, -3, -1, std::nullopt, -2};
    CHECK(t5.entries == expected);
    CHECK(t5.good_count() == 4);
    CHECK(t5.bad_count() == 1);
    check_hasse(t5);

    const auto t7 = trace_table(fam, 7);
    REQUIRE(t7.entries.size() == 7);
    for (std::int64_t v = 0; v < 7; ++v) {
        const bool root = (4 * v * v * v + 27) % 7 == 0;
        CHECK(t7.entries[v].has_value() == !root);
        if (t7.entries[v])
            CHECK(*t7.entries[v] == oracle::trace(v, 1, 7));
    }
    CHECK_THROWS_AS((void)trace_table(fam, 3), PrimeTooSmall);
}

TEST_CASE("trace_table bad set equals the roots of Delta mod p")
{
    const auto fam = CurveFamily::validate(IntPolynomial{-3, 0, 1}, IntPolynomial{5, -2, 0, 1});
    for (std::uint32_t p : primes_up_to(400)) {
        if (p < 5)
            continue;
        const auto table = trace_table(fam, p);
        check_hasse(table);
        for (std::uint64_t v = 0; v < p; ++v)
            REQUIRE(table.entries[v].has_value() == (poly_eval_mod(fam.delta_poly(), static_cast<std::int64_t>(v), p) != 0));
    }
}

TEST_CASE("trace_table is independent of thread partitioning")
{
    const auto fam = t_family();
    const auto base = trace_table(fam, 1009, 1);
    for (unsigned threads : {2u, 3u, 8u, 2000u})
        REQUIRE(trace_table(fam, 1009, threads) == base);
}

TEST_CASE("pi_a")
{
    const auto fam = t_family();
    CHECK(pi_a(fam, {1, 1}, -3, 10) == 1);
    CHECK(pi_a(fam, {1, 1}, 3, 10) == 1);
    CHECK(pi_a(fam, {1, 1}, 0, 4) == 0);
    CHECK(pi_a(fam, {7, 3}, -2, 4) == 0);

    // tau = 1/5 is not 5-integral: p = 5 is skipped and counted
    const auto scan = scan_primes(fam, {1, 5}, 11, [](std::int32_t, std::uint64_t) { return true; });
    CHECK(scan.skipped == 1);
    CHECK(scan.hits == std::vector<std::uint32_t>{7, 11});
}
