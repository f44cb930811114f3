#pragma once

// Exact integer, prime and polynomial primitives.
//
// Coefficients and Lucas values are arbitrary precision. Everything taken
// modulo a prime uses 64-bit words; callers keep p < 2^31 so that a product
// of two residues never overflows.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fareylt {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Integer polynomial, coefficients in ascending degree. The zero polynomial
/// has no coefficients and degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    IntPolynomial(std::initializer_list<long long> coeffs);

    static IntPolynomial monomial(unsigned degree, BigInt coeff = 1);

    [[nodiscard]] const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    [[nodiscard]] BigInt coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt{0}; }
    [[nodiscard]] const BigInt& leading() const { return coeffs_.back(); }

    [[nodiscard]] BigInt operator()(const BigInt& x) const;
    [[nodiscard]] Rational operator()(const Rational& x) const;

    /// f(g(X)).
    [[nodiscard]] IntPolynomial compose(const IntPolynomial& g) const;

    friend IntPolynomial operator+(const IntPolynomial& f, const IntPolynomial& g);
    friend IntPolynomial operator-(const IntPolynomial& f, const IntPolynomial& g);
    friend IntPolynomial operator*(const IntPolynomial& f, const IntPolynomial& g);
    friend IntPolynomial operator*(const BigInt& c, const IntPolynomial& f);
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void canonicalize();

    std::vector<BigInt> coeffs_;
};

/// "27,0,0,4" for 4t^3+27; the empty string is the zero polynomial.
[[nodiscard]] std::string serialize(const IntPolynomial& f);
/// Inverse of serialize(); throws DomainError on malformed input.
[[nodiscard]] IntPolynomial parse_polynomial(std::string_view text);

/// Möbius function values for 1..n.
class MobiusTable {
public:
    explicit MobiusTable(std::uint32_t n);

    [[nodiscard]] std::uint32_t size() const noexcept { return n_; }
    [[nodiscard]] int operator[](std::uint32_t k) const { return values_[k]; }
    /// Values indexed 1..n (the span starts at k = 1).
    [[nodiscard]] std::span<const std::int8_t> values() const { return {values_.data() + 1, n_}; }

private:
    std::uint32_t n_;
    std::vector<std::int8_t> values_;
};

/// Throws DomainError for n = 0.
[[nodiscard]] MobiusTable mobius_table(std::uint32_t n);

/// Smallest-prime-factor sieve over 0..n; spf(0) = spf(1) = 0.
class SpfSieve {
public:
    explicit SpfSieve(std::uint32_t n);

    [[nodiscard]] std::uint32_t limit() const noexcept { return n_; }
    [[nodiscard]] std::uint32_t spf(std::uint32_t k) const { return spf_[k]; }
    /// Distinct prime factors of k, ascending.
    [[nodiscard]] std::vector<std::uint32_t> distinct_primes(std::uint32_t k) const;
    [[nodiscard]] const std::vector<std::uint32_t>& primes() const noexcept { return primes_; }

private:
    std::uint32_t n_;
    std::vector<std::uint32_t> spf_;
    std::vector<std::uint32_t> primes_;
};

[[nodiscard]] std::vector<std::uint32_t> primes_up_to(std::uint32_t n);

/// Deterministic Miller-Rabin, valid for every 64-bit input.
[[nodiscard]] bool is_prime(std::uint64_t n);

[[nodiscard]] std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
[[nodiscard]] std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m);
/// Representative of a in [0, m).
[[nodiscard]] std::uint64_t reduce_mod(std::int64_t a, std::uint64_t m);
[[nodiscard]] std::uint64_t reduce_mod(const BigInt& a, std::uint64_t m);
/// Modular inverse by the extended Euclidean algorithm; DomainError if not invertible.
[[nodiscard]] std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

/// Legendre symbol (a|p) for an odd prime p; DomainError otherwise.
[[nodiscard]] int legendre_symbol(std::int64_t a, std::uint64_t p);

/// Squarefree d with n = d*m^2 and sign(d) = sign(n). Trial division; |n| <= 1e12.
[[nodiscard]] std::int64_t squarefree_kernel(std::int64_t n);
[[nodiscard]] bool is_squarefree(std::int64_t n);

/// V_n(P,Q): V_0 = 2, V_1 = P, V_{k+1} = P V_k - Q V_{k-1}.
[[nodiscard]] BigInt lucas_v(std::uint32_t n, const BigInt& P, const BigInt& Q);

/// Dickson polynomial D_n with x^n + x^-n = D_n(x + 1/x).
[[nodiscard]] IntPolynomial dickson_poly(std::uint32_t n);

/// f(x) mod p by Horner's rule over reduced residues.
[[nodiscard]] std::uint64_t poly_eval_mod(const IntPolynomial& f, std::int64_t x, std::uint64_t p);

/// Coefficients of f reduced into [0, p), ascending.
[[nodiscard]] std::vector<std::uint64_t> reduce_coeffs(const IntPolynomial& f, std::uint64_t p);
[[nodiscard]] std::uint64_t horner_mod(std::span<const std::uint64_t> coeffs, std::uint64_t x, std::uint64_t p);

/// True iff f and g are linearly dependent over Q.
[[nodiscard]] bool poly_pair_dependent(const IntPolynomial& f, const IntPolynomial& g);

[[nodiscard]] std::uint64_t fnv1a64(std::string_view bytes);

} // namespace fareylt
