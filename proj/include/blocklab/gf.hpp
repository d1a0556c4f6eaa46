#pragma once

// GF(p^m) with a canonical modulus: the lexicographically smallest primitive
// polynomial of degree m over GF(p) (coefficient vectors ordered as base-p
// integers c_0 + c_1 p + ...).  Elements are codes 0..p^m-1 encoding the
// coefficients of the residue polynomial base p.  The residue of the variable
// is always a multiplicative generator; discrete logs are tabulated.

#include <memory>

#include "common.hpp"

namespace blocklab {

class FiniteField {
public:
    FiniteField(long long p, int m) : p_(p), m_(m), q_(ipow(p, m)) {
        if (!is_prime(p)) throw input_error("field characteristic must be prime");
        if (m < 1 || q_ > (1LL << 26)) throw input_error("field size out of range");
        find_modulus();
        build_tables();
    }

    long long p() const { return p_; }
    int m() const { return m_; }
    long long q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }  // c_0..c_{m-1}, leading 1 implicit
    std::uint32_t generator() const { return gen_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        if (m_ == 1) {
            long long s = (long long)a + b;
            return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
        }
        if (!addt_.empty()) return addt_[static_cast<std::size_t>(a) * q_ + b];
        return add_digitwise(a, b);
    }

    std::uint32_t neg(std::uint32_t a) const {
        if (m_ == 1) return a == 0 ? 0 : static_cast<std::uint32_t>(p_ - a);
        std::uint32_t r = 0;
        long long base = 1;
        for (int d = 0; d < m_; ++d) {
            long long dig = (a / base) % p_;
            r += static_cast<std::uint32_t>(((p_ - dig) % p_) * base);
            base *= p_;
        }
        return r;
    }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        if (m_ == 1) return static_cast<std::uint32_t>((long long)a * b % p_);
        return exp_[log_[a] + log_[b]];
    }

    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw internal_error("field inverse of zero");
        if (a == 1) return 1;
        return exp_[q_ - 1 - log_[a]];
    }

    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

    std::uint32_t pow(std::uint32_t a, long long e) const {
        if (a == 0) {
            if (e == 0) return 1;
            if (e < 0) throw internal_error("field pow: 0^negative");
            return 0;
        }
        long long l = log_[a];
        long long o = q_ - 1;
        long long le = ((l % o) * (e % o) % o + o) % o;
        return exp_[le];
    }

    // n mod p embedded in the prime subfield
    std::uint32_t from_int(long long n) const {
        long long r = n % p_;
        if (r < 0) r += p_;
        return static_cast<std::uint32_t>(r);
    }

    long long dlog(std::uint32_t a) const {
        if (a == 0) throw internal_error("dlog of zero");
        return log_[a];
    }

    long long element_order(std::uint32_t a) const {
        if (a == 0) throw internal_error("element_order of zero");
        long long l = log_[a];
        return (q_ - 1) / std::gcd(q_ - 1, l);
    }

    bool operator==(const FiniteField& o) const { return p_ == o.p_ && m_ == o.m_; }

private:
    long long p_;
    int m_;
    long long q_;
    std::vector<int> modulus_;
    std::uint32_t gen_ = 0;
    std::vector<std::uint32_t> exp_;  // size 2(q-1): exp_[i] = generator^i
    std::vector<std::int32_t> log_;   // size q; log_[0] unused
    std::vector<std::uint32_t> addt_; // q*q addition table when q is small

    std::uint32_t add_digitwise(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t r = 0;
        long long base = 1;
        for (int d = 0; d < m_; ++d) {
            long long s = ((a / base) % p_ + (b / base) % p_) % p_;
            r += static_cast<std::uint32_t>(s * base);
            base *= p_;
        }
        return r;
    }

    // residue-polynomial product of codes, reduced mod modulus (used only for setup)
    std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
        std::vector<long long> prod(2 * m_ - 1, 0);
        std::vector<long long> da(m_), db(m_);
        long long x = a;
        for (int i = 0; i < m_; ++i) { da[i] = x % p_; x /= p_; }
        x = b;
        for (int i = 0; i < m_; ++i) { db[i] = x % p_; x /= p_; }
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        for (int d = 2 * m_ - 2; d >= m_; --d) {
            long long c = prod[d] % p_;
            if (c == 0) continue;
            prod[d] = 0;
            for (int i = 0; i < m_; ++i)
                prod[d - m_ + i] = ((prod[d - m_ + i] - c * modulus_[i]) % p_ + p_) % p_;
        }
        std::uint32_t r = 0;
        long long base = 1;
        for (int i = 0; i < m_; ++i) {
            r += static_cast<std::uint32_t>((prod[i] % p_) * base);
            base *= p_;
        }
        return r;
    }

    long long order_of_code(std::uint32_t a) const {
        std::uint32_t acc = a;
        long long o = 1;
        while (acc != 1) {
            acc = slow_mul(acc, a);
            ++o;
            if (o > q_) throw internal_error("order search runaway");
        }
        return o;
    }

    bool modulus_irreducible() const {
        if (m_ == 1) return true;
        // trial division by monic polynomials of degree 1..m/2
        for (int d = 1; 2 * d <= m_; ++d) {
            long long count = ipow(p_, d);
            for (long long low = 0; low < count; ++low) {
                // divisor = x^d + (digits of low); test by computing modulus mod divisor
                std::vector<long long> div(d + 1);
                long long x = low;
                for (int i = 0; i < d; ++i) { div[i] = x % p_; x /= p_; }
                div[d] = 1;
                std::vector<long long> rem(m_ + 1);
                for (int i = 0; i < m_; ++i) rem[i] = modulus_[i];
                rem[m_] = 1;
                for (int k = m_; k >= d; --k) {
                    long long c = rem[k] % p_;
                    if (c == 0) continue;
                    for (int i = 0; i <= d; ++i)
                        rem[k - d + i] = ((rem[k - d + i] - c * div[i]) % p_ + p_) % p_;
                }
                bool zero = true;
                for (int i = 0; i < d; ++i)
                    if (rem[i] % p_ != 0) zero = false;
                if (zero) return false;
            }
        }
        return true;
    }

    void find_modulus() {
        if (m_ == 1) {
            // x + c with root -c the smallest primitive root mod p
            for (long long c = 1; c < p_; ++c) {
                long long root = (p_ - c) % p_;
                if (root == 0) continue;
                if (mult_order_mod(root, p_) == p_ - 1 || p_ == 2) {
                    modulus_ = {static_cast<int>(c)};
                    gen_ = static_cast<std::uint32_t>(root);
                    return;
                }
            }
            throw internal_error("no primitive root found");
        }
        long long count = q_;  // p^m coefficient choices
        for (long long enc = 0; enc < count; ++enc) {
            modulus_.assign(m_, 0);
            long long x = enc;
            for (int i = 0; i < m_; ++i) { modulus_[i] = static_cast<int>(x % p_); x /= p_; }
            if (!modulus_irreducible()) continue;
            gen_ = static_cast<std::uint32_t>(p_);  // the polynomial "x"
            if (order_of_code(gen_) == q_ - 1) return;
        }
        throw internal_error("no primitive polynomial found");
    }

    void build_tables() {
        exp_.assign(2 * (q_ - 1), 0);
        log_.assign(q_, -1);
        std::uint32_t acc = 1;
        for (long long i = 0; i < q_ - 1; ++i) {
            exp_[i] = acc;
            exp_[i + (q_ - 1)] = acc;
            log_[acc] = static_cast<std::int32_t>(i);
            acc = (m_ == 1) ? static_cast<std::uint32_t>((long long)acc * gen_ % p_) : slow_mul(acc, gen_);
        }
        if (acc != 1) throw internal_error("generator order mismatch");
        if (m_ > 1 && q_ <= 1024) {
            addt_.assign(static_cast<std::size_t>(q_) * q_, 0);
            for (long long a = 0; a < q_; ++a)
                for (long long b = 0; b < q_; ++b)
                    addt_[static_cast<std::size_t>(a) * q_ + b] =
                        add_digitwise(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
        }
    }
};

using FieldPtr = std::shared_ptr<const FiniteField>;

inline FieldPtr field_create(long long p, int m) { return std::make_shared<FiniteField>(p, m); }

}  // namespace blocklab
