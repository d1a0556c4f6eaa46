#pragma once

// Dense univariate polynomials over GF(q), coefficient vectors low-to-high.
// Just enough machinery for characteristic polynomial work: arithmetic,
// gcds, modular powering, root listing by scan, and extraction of one
// irreducible factor of minimal degree (distinct-degree sieve plus
// Cantor-Zassenhaus / trace splitting).

#include <random>

#include "gf.hpp"

namespace blocklab {

using Poly = std::vector<std::uint32_t>;

inline void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int poly_deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline Poly poly_add(const FiniteField& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint32_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        r[i] = F.add(x, y);
    }
    poly_trim(r);
    return r;
}

inline Poly poly_sub(const FiniteField& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint32_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        r[i] = F.sub(x, y);
    }
    poly_trim(r);
    return r;
}

inline Poly poly_scale(const FiniteField& F, const Poly& a, std::uint32_t c) {
    if (c == 0) return {};
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
    return r;
}

inline Poly poly_mul(const FiniteField& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    poly_trim(r);
    return r;
}

// division with remainder; b nonzero
inline std::pair<Poly, Poly> poly_divmod(const FiniteField& F, Poly a, const Poly& b) {
    if (b.empty()) throw internal_error("poly division by zero");
    poly_trim(a);
    int db = poly_deg(b);
    std::uint32_t lead_inv = F.inv(b[db]);
    Poly q;
    if (poly_deg(a) >= db) q.assign(poly_deg(a) - db + 1, 0);
    while (poly_deg(a) >= db) {
        int da = poly_deg(a);
        std::uint32_t c = F.mul(a[da], lead_inv);
        q[da - db] = c;
        for (int i = 0; i <= db; ++i) a[da - db + i] = F.sub(a[da - db + i], F.mul(c, b[i]));
        poly_trim(a);
    }
    return {q, a};
}

inline Poly poly_mod(const FiniteField& F, const Poly& a, const Poly& b) { return poly_divmod(F, a, b).second; }

inline Poly poly_monic(const FiniteField& F, Poly a) {
    poly_trim(a);
    if (a.empty()) return a;
    std::uint32_t li = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, li);
    return a;
}

inline Poly poly_gcd(const FiniteField& F, Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(F, a);
}

inline Poly poly_mulmod(const FiniteField& F, const Poly& a, const Poly& b, const Poly& mod) {
    return poly_mod(F, poly_mul(F, a, b), mod);
}

inline Poly poly_powmod(const FiniteField& F, Poly base, BigInt e, const Poly& mod) {
    Poly r{1};
    base = poly_mod(F, base, mod);
    while (e > 0) {
        if ((e & 1) != 0) r = poly_mulmod(F, r, base, mod);
        base = poly_mulmod(F, base, base, mod);
        e >>= 1;
    }
    return r;
}

inline std::uint32_t poly_eval(const FiniteField& F, const Poly& a, std::uint32_t x) {
    std::uint32_t r = 0;
    for (int i = poly_deg(a); i >= 0; --i) r = F.add(F.mul(r, x), a[i]);
    return r;
}

inline Poly poly_deriv(const FiniteField& F, const Poly& a) {
    Poly r;
    for (std::size_t i = 1; i < a.size(); ++i) {
        std::uint32_t c = a[i];
        std::uint32_t k = F.from_int(static_cast<long long>(i));
        // i * a_i with i reduced into the prime subfield
        std::uint32_t prod = 0;
        prod = F.mul(c, k);
        r.push_back(prod);
    }
    poly_trim(r);
    return r;
}

// all roots in the field, ascending code order (exhaustive scan)
inline std::vector<std::uint32_t> poly_roots(const FiniteField& F, const Poly& a) {
    std::vector<std::uint32_t> roots;
    for (long long x = 0; x < F.q(); ++x)
        if (poly_eval(F, a, static_cast<std::uint32_t>(x)) == 0) roots.push_back(static_cast<std::uint32_t>(x));
    return roots;
}

namespace detail {

// p-th root of a polynomial of the form h(x^p) in GF(p^m)[x]
inline Poly poly_pth_root(const FiniteField& F, const Poly& a) {
    long long p = F.p();
    Poly r;
    for (std::size_t i = 0; i < a.size(); i += static_cast<std::size_t>(p)) {
        std::uint32_t c = a[i];
        // coefficient^(q/p) is the p-th root in GF(q)
        r.push_back(F.pow(c, F.q() / p));
    }
    poly_trim(r);
    return r;
}

inline Poly poly_squarefree_part(const FiniteField& F, Poly f) {
    f = poly_monic(F, f);
    while (true) {
        Poly d = poly_deriv(F, f);
        if (d.empty()) {
            if (poly_deg(f) <= 0) return f;
            f = poly_pth_root(F, f);  // f = h(x^p)
            continue;
        }
        Poly g = poly_gcd(F, f, d);
        if (poly_deg(g) == 0) return f;
        f = poly_divmod(F, f, g).first;
        f = poly_monic(F, f);
    }
}

inline Poly random_poly(const FiniteField& F, int max_deg, std::mt19937_64& rng) {
    Poly r(static_cast<std::size_t>(max_deg) + 1);
    for (auto& c : r) c = static_cast<std::uint32_t>(rng() % static_cast<std::uint64_t>(F.q()));
    poly_trim(r);
    return r;
}

// split a squarefree product of degree-d irreducibles into its factors
inline void edf(const FiniteField& F, const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (poly_deg(g) == d) {
        out.push_back(poly_monic(F, g));
        return;
    }
    for (int attempt = 0; attempt < 200; ++attempt) {
        Poly r = random_poly(F, poly_deg(g) - 1, rng);
        if (poly_deg(r) < 1 && (r.empty() || r[0] == 0)) continue;
        Poly h;
        if (F.p() == 2) {
            // trace splitting: T(r) = r + r^2 + r^4 + ... over GF(2)
            int bits = d * F.m();
            Poly acc = poly_mod(F, r, g), t = acc;
            for (int i = 1; i < bits; ++i) {
                acc = poly_mulmod(F, acc, acc, g);
                t = poly_add(F, t, acc);
            }
            h = t;
        } else {
            BigInt e = (boost::multiprecision::pow(BigInt(F.q()), d) - 1) / 2;
            Poly t = poly_powmod(F, r, e, g);
            h = poly_sub(F, t, Poly{1});
        }
        Poly c = poly_gcd(F, h, g);
        int dc = poly_deg(c);
        if (dc > 0 && dc < poly_deg(g)) {
            edf(F, c, d, rng, out);
            edf(F, poly_monic(F, poly_divmod(F, g, c).first), d, rng, out);
            return;
        }
    }
    throw internal_error("equal-degree factorization failed to split");
}

}  // namespace detail

// One monic irreducible factor of f of minimal degree; canonical for a fixed
// rng stream (and fully canonical when the minimal degree is 1: smallest root).
inline Poly smallest_irreducible_factor(const FiniteField& F, const Poly& f, std::mt19937_64& rng) {
    Poly sf = detail::poly_squarefree_part(F, f);
    if (poly_deg(sf) < 1) throw internal_error("factoring a constant polynomial");
    auto roots = poly_roots(F, sf);
    if (!roots.empty()) return Poly{F.neg(roots[0]), 1};  // x - root
    // distinct-degree sieve: smallest d with gcd(x^{q^d} - x, sf) nontrivial;
    // ascending d means any factor found has degree exactly d
    Poly x{0, 1};
    Poly xq = poly_mod(F, x, sf);
    int half = poly_deg(sf) / 2;
    for (int d = 1; d <= half; ++d) {
        xq = poly_powmod(F, xq, BigInt(F.q()), sf);
        if (d == 1) continue;  // no roots means no degree-1 factors
        Poly g = poly_gcd(F, poly_sub(F, xq, x), sf);
        if (poly_deg(g) > 0) {
            std::vector<Poly> parts;
            detail::edf(F, g, d, rng, parts);
            std::sort(parts.begin(), parts.end());
            return parts[0];
        }
    }
    // sf itself is irreducible
    return poly_monic(F, sf);
}

}  // namespace blocklab
