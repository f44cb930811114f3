#include "fareylt/arith.hpp"

#include <algorithm>
#include <array>
#include <tuple>
#include <utility>

#include "fareylt/errors.hpp"

namespace fareylt {

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { canonicalize(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs)
        coeffs_.emplace_back(c);
    canonicalize();
}

IntPolynomial IntPolynomial::monomial(unsigned degree, BigInt coeff)
{
    std::vector<BigInt> c(degree + 1);
    c[degree] = std::move(coeff);
    return IntPolynomial(std::move(c));
}

void IntPolynomial::canonicalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

BigInt IntPolynomial::operator()(const BigInt& x) const
{
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Rational IntPolynomial::operator()(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + Rational(*it);
    return acc;
}

IntPolynomial IntPolynomial::compose(const IntPolynomial& g) const
{
    IntPolynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * g + IntPolynomial(std::vector<BigInt>{*it});
    return acc;
}

IntPolynomial operator+(const IntPolynomial& f, const IntPolynomial& g)
{
    std::vector<BigInt> c(std::max(f.coeffs_.size(), g.coeffs_.size()));
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = f.coeff(k) + g.coeff(k);
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& f, const IntPolynomial& g)
{
    return f + BigInt(-1) * g;
}

IntPolynomial operator*(const IntPolynomial& f, const IntPolynomial& g)
{
    if (f.is_zero() || g.is_zero())
        return {};
    std::vector<BigInt> c(f.coeffs_.size() + g.coeffs_.size() - 1);
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < g.coeffs_.size(); ++j)
            c[i + j] += f.coeffs_[i] * g.coeffs_[j];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const BigInt& s, const IntPolynomial& f)
{
    std::vector<BigInt> c(f.coeffs_);
    for (auto& x : c)
        x *= s;
    return IntPolynomial(std::move(c));
}

std::string serialize(const IntPolynomial& f)
{
    std::string out;
    for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
        if (k)
            out += ',';
        out += f.coeffs()[k].str();
    }
    return out;
}

IntPolynomial parse_polynomial(std::string_view text)
{
    std::vector<BigInt> c;
    if (text.empty())
        return {};
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        auto tok = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        std::string_view digits = tok;
        if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
            digits.remove_prefix(1);
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
            throw DomainError("malformed polynomial coefficient '" + std::string(tok) + "'");
        if (tok.front() == '+')
            tok.remove_prefix(1);
        c.emplace_back(std::string(tok));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return IntPolynomial(std::move(c));
}

// ---------------------------------------------------------------------------
// Sieves

SpfSieve::SpfSieve(std::uint32_t n) : n_(n), spf_(static_cast<std::size_t>(n) + 1, 0)
{
    for (std::uint32_t i = 2; i <= n; ++i) {
        if (spf_[i] == 0) {
            spf_[i] = i;
            primes_.push_back(i);
        }
        for (std::uint32_t q : primes_) {
            const std::uint64_t m = static_cast<std::uint64_t>(q) * i;
            if (q > spf_[i] || m > n)
                break;
            spf_[m] = q;
        }
    }
}

std::vector<std::uint32_t> SpfSieve::distinct_primes(std::uint32_t k) const
{
    std::vector<std::uint32_t> out;
    while (k > 1) {
        const std::uint32_t q = spf_[k];
        out.push_back(q);
        while (k % q == 0)
            k /= q;
    }
    return out;
}

MobiusTable::MobiusTable(std::uint32_t n) : n_(n), values_(static_cast<std::size_t>(n) + 1, 0)
{
    if (n == 0)
        throw DomainError("mobius_table requires n >= 1");
    const SpfSieve sieve(n);
    values_[1] = 1;
    for (std::uint32_t k = 2; k <= n; ++k) {
        const std::uint32_t q = sieve.spf(k);
        const std::uint32_t rest = k / q;
        values_[k] = (rest % q == 0) ? 0 : static_cast<std::int8_t>(-values_[rest]);
    }
}

MobiusTable mobius_table(std::uint32_t n) { return MobiusTable(n); }

std::vector<std::uint32_t> primes_up_to(std::uint32_t n)
{
    if (n < 2)
        return {};
    return SpfSieve(n).primes();
}

// ---------------------------------------------------------------------------
// Modular arithmetic

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t result = 1 % m;
    base %= m;
    while (e) {
        if (e & 1)
            result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    return result;
}

std::uint64_t reduce_mod(std::int64_t a, std::uint64_t m)
{
    const auto sm = static_cast<std::int64_t>(m);
    std::int64_t r = a % sm;
    return static_cast<std::uint64_t>(r < 0 ? r + sm : r);
}

std::uint64_t reduce_mod(const BigInt& a, std::uint64_t m)
{
    BigInt r = a % m;
    if (r < 0)
        r += m;
    return static_cast<std::uint64_t>(r);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m)
{
    std::int64_t r0 = static_cast<std::int64_t>(m), r1 = static_cast<std::int64_t>(a % m);
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
        std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
    }
    if (r0 != 1)
        throw DomainError("value is not invertible modulo " + std::to_string(m));
    return reduce_mod(s0, m);
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    static constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::uint64_t q : bases) {
        if (n % q == 0)
            return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : bases) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

int legendre_symbol(std::int64_t a, std::uint64_t p)
{
    if (p % 2 == 0 || !is_prime(p))
        throw DomainError("legendre_symbol requires an odd prime, got " + std::to_string(p));
    // Jacobi reciprocity on the reduced residue.
    std::uint64_t x = reduce_mod(a, p), n = p;
    int sign = 1;
    while (x != 0) {
        while ((x & 1) == 0) {
            x >>= 1;
            const std::uint64_t r = n & 7;
            if (r == 3 || r == 5)
                sign = -sign;
        }
        std::swap(x, n);
        if ((x & 3) == 3 && (n & 3) == 3)
            sign = -sign;
        x %= n;
    }
    return n == 1 ? sign : 0;
}

// ---------------------------------------------------------------------------
// Square factors

std::int64_t squarefree_kernel(std::int64_t n)
{
    if (n == 0)
        throw DomainError("squarefree_kernel of 0");
    std::uint64_t m = static_cast<std::uint64_t>(n < 0 ? -n : n);
    std::uint64_t kernel = 1;
    for (std::uint64_t q = 2; q * q <= m; ++q) {
        int e = 0;
        while (m % q == 0) {
            m /= q;
            ++e;
        }
        if (e % 2)
            kernel *= q;
    }
    kernel *= m;
    return n < 0 ? -static_cast<std::int64_t>(kernel) : static_cast<std::int64_t>(kernel);
}

bool is_squarefree(std::int64_t n)
{
    return n != 0 && squarefree_kernel(n) == n;
}

// ---------------------------------------------------------------------------
// Lucas and Dickson

BigInt lucas_v(std::uint32_t n, const BigInt& P, const BigInt& Q)
{
    BigInt prev = 2, cur = P;
    if (n == 0)
        return prev;
    for (std::uint32_t k = 1; k < n; ++k) {
        BigInt next = P * cur - Q * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntPolynomial dickson_poly(std::uint32_t n)
{
    IntPolynomial prev{2}, cur{0, 1};
    if (n == 0)
        return prev;
    const IntPolynomial y{0, 1};
    for (std::uint32_t k = 1; k < n; ++k) {
        IntPolynomial next = y * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// ---------------------------------------------------------------------------
// Modular polynomial evaluation

std::vector<std::uint64_t> reduce_coeffs(const IntPolynomial& f, std::uint64_t p)
{
    std::vector<std::uint64_t> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs())
        out.push_back(reduce_mod(c, p));
    return out;
}

std::uint64_t horner_mod(std::span<const std::uint64_t> coeffs, std::uint64_t x, std::uint64_t p)
{
    std::uint64_t acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = (mul_mod(acc, x, p) + *it) % p;
    return acc;
}

std::uint64_t poly_eval_mod(const IntPolynomial& f, std::int64_t x, std::uint64_t p)
{
    const auto c = reduce_coeffs(f, p);
    return horner_mod(c, reduce_mod(x, p), p);
}

bool poly_pair_dependent(const IntPolynomial& f, const IntPolynomial& g)
{
    const std::size_t n = std::max(f.coeffs().size(), g.coeffs().size());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (f.coeff(i) * g.coeff(j) != f.coeff(j) * g.coeff(i))
                return false;
    return true;
}

std::uint64_t fnv1a64(std::string_view bytes)
{
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace fareylt
