#pragma once

// Shared basics: error types, exact rationals, small number-theory helpers.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace blocklab {

// thrown for malformed user input (corpus files, CLI arguments, bad parameters)
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// thrown when a computation exceeds a configured size cap
struct cap_error : input_error {
    explicit cap_error(const std::string& msg) : input_error(msg) {}
};

// thrown when a self-check fails; indicates corrupted data or a bug
struct internal_error : std::runtime_error {
    explicit internal_error(const std::string& msg) : std::runtime_error(msg) {}
};

using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline long long ipow(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// exponent of p in n
inline int valuation(long long n, long long p) {
    int v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

inline long long p_part(long long n, long long p) {
    long long r = 1;
    while (n % p == 0) { n /= p; r *= p; }
    return r;
}

inline long long pprime_part(long long n, long long p) { return n / p_part(n, p); }

inline std::vector<long long> prime_factors(long long n) {
    std::vector<long long> ps;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

inline long long euler_phi(long long n) {
    long long r = n;
    for (long long p : prime_factors(n)) r = r / p * (p - 1);
    return r;
}

inline long long mod_pow(long long b, long long e, long long m) {
    long long r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) r = (__int128)r * b % m;
        b = (__int128)b * b % m;
        e >>= 1;
    }
    return r;
}

// inverse of a modulo m, gcd(a, m) = 1
inline long long mod_inv(long long a, long long m) {
    long long t = 0, nt = 1, r = m, nr = ((a % m) + m) % m;
    while (nr != 0) {
        long long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw internal_error("mod_inv: not invertible");
    return ((t % m) + m) % m;
}

// multiplicative order of a modulo n (gcd(a, n) = 1); order of anything mod 1 is 1
inline long long mult_order_mod(long long a, long long n) {
    if (n == 1) return 1;
    long long x = ((a % n) + n) % n, acc = x, ord = 1;
    while (acc != 1 % n) {
        acc = (__int128)acc * x % n;
        if (++ord > n) throw internal_error("mult_order_mod: no order (gcd != 1?)");
    }
    return ord;
}

inline std::uint64_t fnv1a64(const void* data, std::size_t n, std::uint64_t h = 1469598103934665603ULL) {
    const unsigned char* b = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= b[i];
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::uint64_t fnv1a64(const std::string& s, std::uint64_t h = 1469598103934665603ULL) {
    return fnv1a64(s.data(), s.size(), h);
}

// reduce an exact rational mod p; denominator must be prime to p
inline long long rational_mod_p(const Rational& r, long long p) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    BigInt bp  = p;
    long long n = static_cast<long long>(((num % bp) + bp) % bp);
    long long d = static_cast<long long>(((den % bp) + bp) % bp);
    if (d == 0) throw internal_error("rational_mod_p: p divides denominator");
    return (__int128)n * mod_inv(d, p) % p;
}

inline bool rational_is_integer(const Rational& r) {
    return boost::multiprecision::denominator(r) == 1;
}

}  // namespace blocklab
