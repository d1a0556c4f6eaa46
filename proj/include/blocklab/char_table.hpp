#pragma once

// Ordinary character table by eigenvector splitting of the class-sum algebra
// over a prime field GF(l), followed by an exact lift of the values into
// Q(zeta_e) through a discrete Fourier transform on the root-of-unity
// multiplicities.  l is chosen with l = 1 (mod e) and l^2 > 4|G| so that
// degrees and multiplicities are recovered uniquely from their residues.

#include "cyclotomic.hpp"
#include "fq_matrix.hpp"
#include "perm_group.hpp"

namespace blocklab {

struct CharacterTable {
    const PermGroup* G = nullptr;
    CycloBasisPtr basis;                        // conductor = exponent of G
    long long ell = 0;                          // working prime (diagnostic)
    std::vector<std::vector<Cyclotomic>> rows;  // rows[character][class]

    int size() const { return static_cast<int>(rows.size()); }
    const Cyclotomic& value(int chi, int cls) const { return rows[chi][cls]; }

    long long degree(int chi) const {
        const Cyclotomic& v = rows[chi][0];
        if (!v.is_integer()) throw internal_error("character degree is not an integer");
        return static_cast<long long>(numerator(v.rational_value()));
    }

    std::vector<int> linear_indices() const {
        std::vector<int> out;
        for (int i = 0; i < size(); ++i)
            if (degree(i) == 1) out.push_back(i);
        return out;
    }

    int trivial_index() const {
        for (int i = 0; i < size(); ++i) {
            bool all1 = true;
            for (const auto& v : rows[i])
                if (v != Cyclotomic(1)) {
                    all1 = false;
                    break;
                }
            if (all1) return i;
        }
        throw internal_error("trivial character missing from table");
    }

    // omega_chi(class sum) = |C| chi(g_C) / chi(1); always an algebraic integer
    Cyclotomic central_character(int chi, int cls) const {
        Rational s(G->classes()[cls].size, degree(chi));
        Cyclotomic w = s * rows[chi][cls];
        for (const auto& co : w.coeffs())
            if (!rational_is_integer(co)) throw internal_error("central character value is not an algebraic integer");
        return w;
    }

    // <a, b> = (1/|G|) sum over classes |C| a(g) conj(b(g))
    Cyclotomic inner_product(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) const {
        Cyclotomic acc;
        const auto& cls = G->classes();
        for (std::size_t k = 0; k < cls.size(); ++k) acc += Rational(cls[k].size) * (a[k] * b[k].conjugated());
        return Rational(1, G->order()) * acc;
    }
};

inline long long dixon_prime(long long order, long long exponent) {
    for (long long c = exponent + 1;; c += exponent) {
        if (c * c > 4 * order && is_prime(c)) return c;
        if (c > (1LL << 40)) throw internal_error("no splitting prime found");
    }
}

inline std::vector<std::string> orthogonality_violations(const CharacterTable& T) {
    std::vector<std::string> out;
    const PermGroup& G = *T.G;
    if (T.size() != G.num_classes()) {
        out.push_back("character count differs from class count");
        return out;
    }
    for (int i = 0; i < T.size(); ++i)
        for (int j = i; j < T.size(); ++j) {
            Cyclotomic ip = T.inner_product(T.rows[i], T.rows[j]);
            if (ip != Cyclotomic(i == j ? 1 : 0))
                out.push_back("row orthogonality fails at rows " + std::to_string(i) + "," + std::to_string(j) +
                              " (inner product " + ip.to_string() + ")");
        }
    return out;
}

inline void verify_orthogonality(const CharacterTable& T) {
    auto v = orthogonality_violations(T);
    if (!v.empty()) throw internal_error("character table: " + v.front());
}

inline CharacterTable compute_character_table(const PermGroup& G) {
    const int r = G.num_classes();
    const long long n = G.order();
    const long long e = G.exponent();
    const long long ell = dixon_prime(n, e);
    FieldPtr F = field_create(ell, 1);
    const FiniteField& K = *F;

    struct Sp {
        FqMatrix b;
        std::vector<int> piv;
    };
    std::vector<Sp> spaces;
    {
        Sp full{FqMatrix::identity(F, r), {}};
        for (int i = 0; i < r; ++i) full.piv.push_back(i);
        spaces.push_back(std::move(full));
    }

    auto all_split = [&] {
        for (const auto& s : spaces)
            if (s.b.rows() > 1) return false;
        return true;
    };

    for (int i = 1; i < r && !all_split(); ++i) {
        // columns act on row vectors: w B = omega w, B = transpose of (a_ijk)
        auto a = G.class_matrix(i);
        FqMatrix B(F, r, r);
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k) B.at(k, j) = K.from_int(a[j][k]);
        std::vector<Sp> next;
        for (auto& S : spaces) {
            int d = S.b.rows();
            if (d == 1) {
                next.push_back(std::move(S));
                continue;
            }
            FqMatrix R = express_in_rowspace(S.b, S.piv, S.b * B);
            Poly cp = R.charpoly();
            std::vector<std::uint32_t> roots = poly_roots(K, cp);
            int total = 0;
            for (std::uint32_t lam : roots) {
                FqMatrix M = R;
                for (int t = 0; t < d; ++t) M.at(t, t) = K.sub(M.at(t, t), lam);
                FqMatrix ker = M.left_kernel();
                if (ker.rows() == 0) continue;
                Sp part{ker * S.b, {}};
                part.piv = part.b.rref();
                if (static_cast<int>(part.piv.size()) != ker.rows()) throw internal_error("eigenspace basis degenerated");
                total += ker.rows();
                next.push_back(std::move(part));
            }
            if (total != d) throw internal_error("class-sum matrix failed to act semisimply");
        }
        spaces = std::move(next);
    }
    if (!all_split()) throw internal_error("class algebra could not be split into one-dimensional eigenspaces");
    if (static_cast<int>(spaces.size()) != r) throw internal_error("eigenspace count differs from class count");

    // normalized eigenvectors give the central characters mod ell
    const auto& cls = G.classes();
    std::uint32_t u = e == 1 ? 1 : K.pow(K.generator(), (ell - 1) / e);  // fixed primitive e-th root mod ell
    std::uint32_t einv = K.inv(K.from_int(e));
    long long dmax = 1;
    while ((dmax + 1) * (dmax + 1) <= n) ++dmax;

    CharacterTable T;
    T.G = &G;
    T.basis = cyclo_basis(static_cast<int>(e));
    T.ell = ell;

    for (const auto& S : spaces) {
        std::vector<std::uint32_t> w(r);
        std::uint32_t w0inv = K.inv(S.b.at(0, 0));
        for (int k = 0; k < r; ++k) w[k] = K.mul(S.b.at(0, k), w0inv);

        std::uint32_t s = 0;
        for (int k = 0; k < r; ++k)
            s = K.add(s, K.mul(K.mul(w[k], w[G.inverse_class(k)]), K.inv(K.from_int(cls[k].size))));
        std::uint32_t d2 = K.mul(K.from_int(n), K.inv(s));
        long long deg = 0;
        for (long long d = 1; d <= dmax; ++d)
            if (K.mul(K.from_int(d), K.from_int(d)) == d2) {
                deg = d;
                break;
            }
        if (deg == 0) throw internal_error("no character degree matches its residue");

        std::vector<std::uint32_t> c(r);  // chi(g_k) mod ell
        for (int k = 0; k < r; ++k) c[k] = K.mul(K.from_int(deg), K.mul(w[k], K.inv(K.from_int(cls[k].size))));

        std::vector<Cyclotomic> row(r);
        for (int k = 0; k < r; ++k) {
            // multiplicity of zeta^s among the eigenvalues of a representing matrix
            Cyclotomic val;
            long long msum = 0;
            for (long long sx = 0; sx < e; ++sx) {
                std::uint32_t acc = 0;
                for (long long t = 0; t < e; ++t) {
                    std::uint32_t ph = K.pow(u, ((e - sx % e) % e) * t % e);
                    acc = K.add(acc, K.mul(c[G.power_class(k, t)], ph));
                }
                std::uint32_t m = K.mul(einv, acc);
                long long mi = m;  // prime field: code = residue
                if (mi > deg) throw internal_error("eigenvalue multiplicity exceeds degree");
                if (mi) {
                    val += Rational(mi) * Cyclotomic::root(T.basis, sx);
                    msum += mi;
                }
            }
            if (msum != deg) throw internal_error("eigenvalue multiplicities do not sum to the degree");
            row[k] = std::move(val);
        }
        T.rows.push_back(std::move(row));
    }

    std::sort(T.rows.begin(), T.rows.end(), [&](const auto& a, const auto& b) {
        for (int k = 0; k < r; ++k)
            if (a[k] != b[k]) return cyc_less(a[k], b[k]);
        return false;
    });
    verify_orthogonality(T);
    return T;
}

}  // namespace blocklab
