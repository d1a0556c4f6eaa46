#pragma once

// Exact arithmetic in Q(zeta_e): elements are stored on the power basis
// 1, z, ..., z^{phi(e)-1} modulo the e-th cyclotomic polynomial, with
// rational coefficients.  One fixed conductor (the group exponent) is used
// per run so values stay directly comparable.

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "gf.hpp"

namespace blocklab {

namespace detail {

// integer polynomials, low-to-high
inline std::vector<BigInt> ipoly_exact_div(std::vector<BigInt> num, const std::vector<BigInt>& den) {
    // den monic
    int dn = static_cast<int>(num.size()) - 1, dd = static_cast<int>(den.size()) - 1;
    std::vector<BigInt> q(dn - dd + 1);
    for (int k = dn - dd; k >= 0; --k) {
        BigInt c = num[k + dd];
        q[k] = c;
        if (c != 0)
            for (int j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
    }
    for (auto& v : num)
        if (v != 0) throw internal_error("cyclotomic polynomial division not exact");
    return q;
}

inline const std::vector<BigInt>& cyclo_poly(int n) {
    static std::map<int, std::vector<BigInt>> cache;
    static std::mutex mx;
    std::lock_guard<std::mutex> lk(mx);
    auto compute = [](auto&& self, int m) -> const std::vector<BigInt>& {
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
        std::vector<BigInt> poly(m + 1);
        poly[0] = -1;
        poly[m] = 1;  // x^m - 1
        for (int d = 1; d < m; ++d)
            if (m % d == 0) poly = ipoly_exact_div(std::move(poly), self(self, d));
        return cache.emplace(m, std::move(poly)).first->second;
    };
    return compute(compute, n);
}

}  // namespace detail

struct CycloBasis {
    int e = 1;                                 // conductor
    int d = 1;                                 // phi(e), degree of the basis
    std::vector<BigInt> phi;                   // Phi_e, monic, low-to-high
    std::vector<std::vector<BigInt>> pow_red;  // x^k mod Phi_e for k < max(e, 2d-1)
};

using CycloBasisPtr = std::shared_ptr<const CycloBasis>;

inline CycloBasisPtr cyclo_basis(int e) {
    static std::map<int, CycloBasisPtr> cache;
    static std::mutex mx;
    std::lock_guard<std::mutex> lk(mx);
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    auto B = std::make_shared<CycloBasis>();
    B->e = e;
    B->phi = detail::cyclo_poly(e);
    B->d = static_cast<int>(B->phi.size()) - 1;
    int m = std::max(e, 2 * B->d - 1);
    B->pow_red.resize(m);
    std::vector<BigInt> cur(B->d);  // x^k reduced; starts at x^0
    cur[0] = 1;
    for (int k = 0; k < m; ++k) {
        B->pow_red[k] = cur;
        // multiply by x, fold the top coefficient through Phi_e (monic)
        std::vector<BigInt> nxt(B->d);
        for (int i = 0; i + 1 < B->d; ++i) nxt[i + 1] = cur[i];
        BigInt top = cur[B->d - 1];
        if (top != 0)
            for (int i = 0; i < B->d; ++i) nxt[i] -= top * B->phi[i];
        cur = std::move(nxt);
    }
    cache.emplace(e, B);
    return B;
}

class Cyclotomic {
public:
    Cyclotomic() : c_{Rational(0)} {}
    explicit Cyclotomic(Rational r) : c_{std::move(r)} {}
    explicit Cyclotomic(long long n) : c_{Rational(n)} {}
    Cyclotomic(CycloBasisPtr B, std::vector<Rational> coeffs) : B_(std::move(B)), c_(std::move(coeffs)) {
        if (static_cast<int>(c_.size()) != B_->d) throw internal_error("cyclotomic coefficient length mismatch");
    }

    static Cyclotomic root(const CycloBasisPtr& B, long long k) {
        k %= B->e;
        if (k < 0) k += B->e;
        std::vector<Rational> c(B->d);
        const auto& red = B->pow_red[static_cast<std::size_t>(k)];
        for (int i = 0; i < B->d; ++i) c[i] = Rational(red[i]);
        return Cyclotomic(B, std::move(c));
    }

    int conductor() const { return B_ ? B_->e : 1; }
    const CycloBasisPtr& basis() const { return B_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& v : c_)
            if (v != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }
    Rational rational_value() const {
        if (!is_rational()) throw internal_error("cyclotomic value is irrational");
        return c_[0];
    }
    bool is_integer() const { return is_rational() && rational_is_integer(c_[0]); }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = aligned(a, b);
        for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
        return x;
    }
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = aligned(a, b);
        for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
        return x;
    }
    Cyclotomic operator-() const {
        Cyclotomic r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = aligned(a, b);
        if (!x.B_) return Cyclotomic(x.c_[0] * y.c_[0]);
        const auto& B = *x.B_;
        std::vector<Rational> prod(2 * B.d - 1);
        for (int i = 0; i < B.d; ++i) {
            if (x.c_[i] == 0) continue;
            for (int j = 0; j < B.d; ++j)
                if (y.c_[j] != 0) prod[i + j] += x.c_[i] * y.c_[j];
        }
        std::vector<Rational> out(B.d);
        for (int k = 0; k < 2 * B.d - 1; ++k) {
            if (prod[k] == 0) continue;
            const auto& red = B.pow_red[k];
            for (int i = 0; i < B.d; ++i)
                if (red[i] != 0) out[i] += prod[k] * Rational(red[i]);
        }
        return Cyclotomic(x.B_, std::move(out));
    }
    friend Cyclotomic operator*(const Rational& s, const Cyclotomic& a) {
        Cyclotomic r = a;
        for (auto& v : r.c_) v *= s;
        return r;
    }
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = aligned(a, b);
        return x.c_ == y.c_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // Galois twist z -> z^t, gcd(t, e) = 1
    Cyclotomic galois(long long t) const {
        if (!B_) return *this;
        long long e = B_->e;
        t %= e;
        if (t < 0) t += e;
        if (std::gcd(t, e) != 1) throw internal_error("galois exponent not coprime to conductor");
        std::vector<Rational> out(B_->d);
        for (int i = 0; i < B_->d; ++i) {
            if (c_[i] == 0) continue;
            const auto& red = B_->pow_red[static_cast<std::size_t>((static_cast<long long>(i) * t) % e)];
            for (int j = 0; j < B_->d; ++j)
                if (red[j] != 0) out[j] += c_[i] * Rational(red[j]);
        }
        return Cyclotomic(B_, std::move(out));
    }
    Cyclotomic conjugated() const { return B_ ? galois(B_->e - 1) : *this; }

    // lift into a basis with conductor e2, where conductor() | e2
    Cyclotomic embedded(const CycloBasisPtr& B2) const {
        int e1 = conductor();
        if (B2->e % e1 != 0) throw internal_error("cyclotomic embedding requires divisible conductor");
        int step = B2->e / e1;
        Cyclotomic r(B2, std::vector<Rational>(B2->d));
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) r += c_[i] * root(B2, static_cast<long long>(i) * step);
        return r;
    }

    std::string to_string() const {
        if (is_rational()) {
            std::ostringstream os;
            os << c_[0];
            return os.str();
        }
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            Rational v = c_[i];
            bool neg = v < 0;
            if (neg) v = -v;
            if (first)
                os << (neg ? "-" : "");
            else
                os << (neg ? " - " : " + ");
            first = false;
            bool unit = (v == 1 && i > 0);
            if (!unit) os << v;
            if (i > 0) {
                if (!unit) os << "*";
                os << "z";
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

private:
    CycloBasisPtr B_;          // null = plain rational
    std::vector<Rational> c_;  // length d (or 1 when basis-free)

    static std::pair<Cyclotomic, Cyclotomic> aligned(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.B_ && b.B_) {
            if (a.B_->e != b.B_->e) throw internal_error("conductor mismatch in cyclotomic arithmetic");
            return {a, b};
        }
        if (!a.B_ && !b.B_) return {a, b};
        const CycloBasisPtr& B = a.B_ ? a.B_ : b.B_;
        auto lift = [&](const Cyclotomic& v) {
            std::vector<Rational> c(B->d);
            c[0] = v.c_[0];
            return Cyclotomic(B, std::move(c));
        };
        return {a.B_ ? a : lift(a), b.B_ ? b : lift(b)};
    }
};

// deterministic total order: by coefficient vectors (shorter = rational first
// is impossible after alignment; callers compare values in one conductor)
inline bool cyc_less(const Cyclotomic& a, const Cyclotomic& b) {
    const Cyclotomic diff = a - b;  // forces alignment
    (void)diff;
    auto coeff = [](const Cyclotomic& v, std::size_t i) { return i < v.coeffs().size() ? v.coeffs()[i] : Rational(0); };
    std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
    for (std::size_t i = 0; i < n; ++i) {
        Rational x = coeff(a, i), y = coeff(b, i);
        if (x != y) return x < y;
    }
    return false;
}

// Reduction to GF(q): z_e -> w^{t k} keeps the p'-part of each root of unity
// and kills the p-part, where e' is the p'-part of e, w has order e' in F,
// and t = (e/e')^{-1} mod e'.
struct RootEmbedding {
    FieldPtr F;
    CycloBasisPtr B;  // conductor e of the characteristic-zero side
    int eprime = 1;
    std::uint32_t omega = 1;  // fixed root of order e' in F

    std::uint32_t reduce(const Cyclotomic& v) const {
        const FiniteField& K = *F;
        long long e = B->e, t = eprime == 1 ? 0 : mod_inv((e / eprime) % eprime, eprime);
        std::uint32_t acc = 0;
        const auto& c = v.coeffs();
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) continue;
            std::uint32_t coef = K.from_int(rational_mod_p(c[i], K.p()));
            std::uint32_t rt = K.pow(omega, (static_cast<long long>(i) * t) % eprime);
            acc = K.add(acc, K.mul(coef, rt));
        }
        return acc;
    }

    // inverse of reduce on roots of unity of order dividing e'
    Cyclotomic lift_root(std::uint32_t w) const {
        const FiniteField& K = *F;
        if (w == 0) throw internal_error("cannot lift zero as a root of unity");
        if (eprime == 1) {
            if (w != 1) throw internal_error("lift_root: element is not an e'-th root of unity");
            return Cyclotomic::root(B, 0);
        }
        long long L = K.dlog(w);
        long long step = (static_cast<long long>(K.q()) - 1) / eprime;
        if (L % step != 0) throw internal_error("lift_root: element is not an e'-th root of unity");
        long long s = (L / step) % eprime;
        return Cyclotomic::root(B, s * (B->e / eprime));
    }
};

inline RootEmbedding make_root_embedding(FieldPtr F, CycloBasisPtr B) {
    RootEmbedding R;
    R.F = std::move(F);
    R.B = std::move(B);
    R.eprime = static_cast<int>(pprime_part(R.B->e, R.F->p()));
    if ((static_cast<long long>(R.F->q()) - 1) % R.eprime != 0)
        throw internal_error("field does not contain the required roots of unity");
    R.omega = R.eprime == 1 ? 1 : R.F->pow(R.F->generator(), (static_cast<long long>(R.F->q()) - 1) / R.eprime);
    return R;
}

}  // namespace blocklab
