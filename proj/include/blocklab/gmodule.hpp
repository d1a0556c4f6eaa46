#pragma once

// F[G]-modules given by the action of the group generators on row vectors,
// plus the standard machinery: spinning, chopping into irreducibles with
// Norton's criterion as the stopping rule, standard-basis isomorphism
// testing, and Brauer character values lifted through a fixed root embedding.

#include <random>

#include "cyclotomic.hpp"
#include "fq_matrix.hpp"
#include "perm_group.hpp"

namespace blocklab {

struct GModule {
    FieldPtr F;
    int dim = 0;
    std::vector<FqMatrix> gens;  // one matrix per group generator
};

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
    std::uint64_t buf[2] = {a, b};
    return fnv1a64(buf, sizeof buf);
}

// right regular module: basis indexed by group elements, g acts by x -> x g
inline GModule regular_module(const PermGroup& G, FieldPtr F) {
    GModule M;
    M.F = std::move(F);
    M.dim = static_cast<int>(G.order());
    for (std::size_t k = 0; k < G.generators().size(); ++k) {
        int g = G.generator_index(static_cast<int>(k));
        FqMatrix A(M.F, M.dim, M.dim);
        for (int x = 0; x < M.dim; ++x) A.at(x, G.mult(x, g)) = 1;
        M.gens.push_back(std::move(A));
    }
    return M;
}

inline FqMatrix element_matrix(const GModule& M, const PermGroup& G, int x) {
    std::vector<int> path;  // generator indices from the identity out to x
    for (int y = x; y != 0; y = G.word_parent(y)) path.push_back(G.word_gen(y));
    FqMatrix A = FqMatrix::identity(M.F, M.dim);
    for (auto it = path.rbegin(); it != path.rend(); ++it) A = A * M.gens[*it];
    return A;
}

// all element matrices at once (memoized walk of the word tree)
inline std::vector<FqMatrix> all_element_matrices(const GModule& M, const PermGroup& G) {
    const int n = static_cast<int>(G.order());
    std::vector<FqMatrix> mats(n);
    std::vector<char> done(n, 0);
    mats[0] = FqMatrix::identity(M.F, M.dim);
    done[0] = 1;
    for (int x = 0; x < n; ++x) {
        if (done[x]) continue;
        std::vector<int> chain;
        int y = x;
        while (!done[y]) {
            chain.push_back(y);
            y = G.word_parent(y);
        }
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            mats[*it] = mats[G.word_parent(*it)] * M.gens[G.word_gen(*it)];
            done[*it] = 1;
        }
    }
    return mats;
}

// row-reduced basis that keeps rows in insertion order (reduced against each
// other, one pivot column per row)
class EchelonBasis {
public:
    EchelonBasis(FieldPtr F, int width) : F_(std::move(F)), width_(width) {}

    bool add(std::vector<std::uint32_t> v) {
        const FiniteField& F = *F_;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            std::uint32_t c = v[pivot_[i]];
            if (!c) continue;
            for (int j = 0; j < width_; ++j) v[j] = F.sub(v[j], F.mul(c, rows_[i][j]));
        }
        int p = -1;
        for (int j = 0; j < width_; ++j)
            if (v[j]) {
                p = j;
                break;
            }
        if (p == -1) return false;
        std::uint32_t s = F.inv(v[p]);
        for (int j = 0; j < width_; ++j) v[j] = F.mul(v[j], s);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            std::uint32_t c = rows_[i][p];
            if (!c) continue;
            for (int j = 0; j < width_; ++j) rows_[i][j] = F.sub(rows_[i][j], F.mul(c, v[j]));
        }
        rows_.push_back(std::move(v));
        pivot_.push_back(p);
        return true;
    }

    int size() const { return static_cast<int>(rows_.size()); }
    const std::vector<int>& pivots() const { return pivot_; }

    FqMatrix matrix() const {
        FqMatrix B(F_, size(), width_);
        for (int i = 0; i < size(); ++i)
            for (int j = 0; j < width_; ++j) B.at(i, j) = rows_[i][j];
        return B;
    }

private:
    FieldPtr F_;
    int width_;
    std::vector<std::vector<std::uint32_t>> rows_;
    std::vector<int> pivot_;
};

inline std::vector<std::uint32_t> row_times(const FieldPtr& Fp, const std::vector<std::uint32_t>& v, const FqMatrix& A) {
    const FiniteField& F = *Fp;
    std::vector<std::uint32_t> r(A.cols(), 0);
    for (int i = 0; i < A.rows(); ++i) {
        if (!v[i]) continue;
        for (int j = 0; j < A.cols(); ++j) {
            std::uint32_t w = A.at(i, j);
            if (w) r[j] = F.add(r[j], F.mul(v[i], w));
        }
    }
    return r;
}

struct SpinResult {
    FqMatrix basis;  // reduced rows, insertion order
    std::vector<int> pivots;
};

// smallest invariant subspace containing the seed vectors
inline SpinResult spin(const FieldPtr& F, int dim, const std::vector<FqMatrix>& action,
                       const std::vector<std::vector<std::uint32_t>>& seeds) {
    EchelonBasis E(F, dim);
    std::vector<std::vector<std::uint32_t>> work;
    for (const auto& s : seeds)
        if (E.add(s)) work.push_back(s);
    for (std::size_t i = 0; i < work.size() && E.size() < dim; ++i)
        for (const auto& A : action) {
            auto w = row_times(F, work[i], A);
            if (E.add(w)) work.push_back(std::move(w));
            if (E.size() == dim) break;
        }
    return {E.matrix(), E.pivots()};
}

inline GModule submodule(const GModule& M, const FqMatrix& B, const std::vector<int>& piv) {
    GModule S;
    S.F = M.F;
    S.dim = B.rows();
    for (const auto& A : M.gens) S.gens.push_back(express_in_rowspace(B, piv, B * A));
    return S;
}

inline GModule quotient_module(const GModule& M, const FqMatrix& B, const std::vector<int>& piv) {
    const int d = M.dim, b = B.rows();
    std::vector<char> is_piv(d, 0);
    for (int p : piv) is_piv[p] = 1;
    FqMatrix P(M.F, d, d);
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < d; ++j) P.at(i, j) = B.at(i, j);
    int r = b;
    for (int j = 0; j < d; ++j)
        if (!is_piv[j]) P.at(r++, j) = 1;
    FqMatrix Pi = P.inverse();
    GModule Q;
    Q.F = M.F;
    Q.dim = d - b;
    for (const auto& A : M.gens) {
        FqMatrix full = P * A * Pi;
        for (int i = 0; i < b; ++i)
            for (int j = b; j < d; ++j)
                if (full.at(i, j)) throw internal_error("claimed submodule is not invariant");
        FqMatrix T(M.F, d - b, d - b);
        for (int i = b; i < d; ++i)
            for (int j = b; j < d; ++j) T.at(i - b, j - b) = full.at(i, j);
        Q.gens.push_back(std::move(T));
    }
    return Q;
}

inline std::vector<FqMatrix> algebra_words(const std::vector<FqMatrix>& gens, const FieldPtr& F, int dim) {
    std::vector<FqMatrix> W;
    W.push_back(FqMatrix::identity(F, dim));
    for (const auto& A : gens) W.push_back(A);
    for (const auto& A : gens)
        for (const auto& B : gens) W.push_back(A * B);
    return W;
}

inline FqMatrix random_combination(const std::vector<FqMatrix>& W, const FieldPtr& F, int dim, std::mt19937_64& rng) {
    FqMatrix T(F, dim, dim);
    for (const auto& A : W) {
        std::uint32_t c = static_cast<std::uint32_t>(rng() % F->q());
        if (c) T = T + A.scaled(c);
    }
    return T;
}

inline std::vector<std::uint32_t> matrix_row(const FqMatrix& A, int i) {
    std::vector<std::uint32_t> v(A.cols());
    for (int j = 0; j < A.cols(); ++j) v[j] = A.at(i, j);
    return v;
}

namespace detail {

inline void chop_impl(const GModule& M, std::uint64_t seed, std::vector<GModule>& out) {
    if (M.dim == 0) return;
    if (M.dim == 1) {
        out.push_back(M);
        return;
    }
    const FiniteField& F = *M.F;
    auto W = algebra_words(M.gens, M.F, M.dim);
    std::vector<FqMatrix> gens_t;
    for (const auto& A : M.gens) gens_t.push_back(A.transposed());

    auto split = [&](const FqMatrix& basis_in) {
        FqMatrix B = basis_in;
        auto piv = B.rref();
        GModule sub = submodule(M, B, piv);
        GModule quo = quotient_module(M, B, piv);
        chop_impl(sub, mix64(seed, 1), out);
        chop_impl(quo, mix64(seed, 2), out);
    };

    for (int attempt = 0; attempt < 200; ++attempt) {
        std::mt19937_64 rng(mix64(seed, 0x1000 + attempt));
        FqMatrix theta = random_combination(W, M.F, M.dim, rng);
        Poly cp = theta.charpoly();
        Poly f = smallest_irreducible_factor(F, cp, rng);
        FqMatrix Nf = poly_eval_matrix(f, theta).left_kernel();
        if (Nf.rows() == 0) throw internal_error("characteristic factor has trivial kernel");

        SpinResult V = spin(M.F, M.dim, M.gens, {matrix_row(Nf, 0)});
        if (V.basis.rows() < M.dim) {
            split(V.basis);
            return;
        }
        // dual side: a proper spin there yields a submodule as its perp
        FqMatrix Nt = poly_eval_matrix(f, theta.transposed()).left_kernel();
        SpinResult Vt = spin(M.F, M.dim, gens_t, {matrix_row(Nt, 0)});
        if (Vt.basis.rows() < M.dim) {
            split(Vt.basis.transposed().left_kernel());
            return;
        }
        if (poly_deg(f) == Nf.rows()) {  // Norton: both spins full + minimal nullity
            out.push_back(M);
            return;
        }
    }
    throw internal_error("module did not chop after 200 attempts");
}

}  // namespace detail

// composition factors (with multiplicity), deterministic for a fixed seed
inline std::vector<GModule> chop(const GModule& M, std::uint64_t seed) {
    std::vector<GModule> out;
    detail::chop_impl(M, seed, out);
    return out;
}

// raw spin basis: rows are the vectors in discovery order, not reduced
inline FqMatrix standard_basis(const GModule& M, const std::vector<std::uint32_t>& v) {
    EchelonBasis E(M.F, M.dim);
    std::vector<std::vector<std::uint32_t>> raw;
    if (E.add(v)) raw.push_back(v);
    for (std::size_t i = 0; i < raw.size() && static_cast<int>(raw.size()) < M.dim; ++i)
        for (const auto& A : M.gens) {
            auto w = row_times(M.F, raw[i], A);
            if (E.add(w)) raw.push_back(std::move(w));
            if (static_cast<int>(raw.size()) == M.dim) break;
        }
    FqMatrix B(M.F, static_cast<int>(raw.size()), M.dim);
    for (std::size_t i = 0; i < raw.size(); ++i)
        for (int j = 0; j < M.dim; ++j) B.at(static_cast<int>(i), j) = raw[i][j];
    return B;
}

// exact isomorphism test for irreducible modules over the same field
inline bool is_isomorphic(const GModule& M1, const GModule& M2) {
    if (M1.dim != M2.dim || M1.F->q() != M2.F->q() || M1.gens.size() != M2.gens.size()) return false;
    const int d = M1.dim;
    if (d == 1) {
        for (std::size_t k = 0; k < M1.gens.size(); ++k)
            if (!(M1.gens[k] == M2.gens[k])) return false;
        return true;
    }
    const FiniteField& F = *M1.F;
    auto W1 = algebra_words(M1.gens, M1.F, d);
    auto W2 = algebra_words(M2.gens, M2.F, d);
    for (int attempt = 0; attempt < 500; ++attempt) {
        std::mt19937_64 rng(mix64(0x150BA5E5ULL, attempt));
        std::vector<std::uint32_t> coef(W1.size());
        for (auto& c : coef) c = static_cast<std::uint32_t>(rng() % F.q());
        FqMatrix t1(M1.F, d, d), t2(M2.F, d, d);
        for (std::size_t k = 0; k < coef.size(); ++k)
            if (coef[k]) {
                t1 = t1 + W1[k].scaled(coef[k]);
                t2 = t2 + W2[k].scaled(coef[k]);
            }
        Poly cp1 = t1.charpoly();
        bool cp2_done = false;
        for (std::uint32_t lam : poly_roots(F, cp1)) {
            FqMatrix S1 = t1;
            for (int i = 0; i < d; ++i) S1.at(i, i) = F.sub(S1.at(i, i), lam);
            FqMatrix K1 = S1.left_kernel();
            if (K1.rows() != 1) continue;  // need a geometric-multiplicity-one eigenvalue
            if (!cp2_done) {
                if (!(t2.charpoly() == cp1)) return false;
                cp2_done = true;
            }
            FqMatrix S2 = t2;
            for (int i = 0; i < d; ++i) S2.at(i, i) = F.sub(S2.at(i, i), lam);
            FqMatrix K2 = S2.left_kernel();
            if (K2.rows() != 1) return false;
            FqMatrix B1 = standard_basis(M1, matrix_row(K1, 0));
            FqMatrix B2 = standard_basis(M2, matrix_row(K2, 0));
            if (B1.rows() != d || B2.rows() != d)
                throw internal_error("standard basis incomplete on an irreducible module");
            FqMatrix B1i = B1.inverse(), B2i = B2.inverse();
            for (std::size_t k = 0; k < M1.gens.size(); ++k)
                if (!(B1 * M1.gens[k] * B1i == B2 * M2.gens[k] * B2i)) return false;
            return true;
        }
    }
    throw internal_error("isomorphism test found no separating element");
}

// Brauer character on the listed p-regular classes
inline std::vector<Cyclotomic> brauer_character(const GModule& M, const PermGroup& G, const std::vector<int>& reg_classes,
                                                const RootEmbedding& R) {
    const FiniteField& F = *M.F;
    std::vector<Cyclotomic> out;
    out.reserve(reg_classes.size());
    for (int c : reg_classes) {
        long long o = G.classes()[c].element_order;
        if ((static_cast<long long>(F.q()) - 1) % o != 0)
            throw internal_error("field lacks roots of unity for a p-regular element");
        FqMatrix A = element_matrix(M, G, G.classes()[c].representative);
        std::uint32_t omega_o = o == 1 ? 1 : F.pow(F.generator(), (static_cast<long long>(F.q()) - 1) / o);
        Cyclotomic val;
        int total = 0;
        for (long long j = 0; j < o; ++j) {
            std::uint32_t lam = F.pow(omega_o, j);
            FqMatrix S = A;
            for (int i = 0; i < M.dim; ++i) S.at(i, i) = F.sub(S.at(i, i), lam);
            int nul = S.left_kernel().rows();
            if (nul) {
                val += Rational(nul) * R.lift_root(lam);
                total += nul;
            }
        }
        if (total != M.dim) throw internal_error("p-regular element acted non-semisimply");
        out.push_back(std::move(val));
    }
    return out;
}

// twist by a one-dimensional module given as one scalar per generator
inline GModule tensor_with_linear(const GModule& M, const std::vector<std::uint32_t>& scalars) {
    GModule T;
    T.F = M.F;
    T.dim = M.dim;
    for (std::size_t k = 0; k < M.gens.size(); ++k) T.gens.push_back(M.gens[k].scaled(scalars[k]));
    return T;
}

// elements acting as the identity
inline std::vector<int> module_kernel(const GModule& M, const PermGroup& G) {
    auto mats = all_element_matrices(M, G);
    FqMatrix I = FqMatrix::identity(M.F, M.dim);
    std::vector<int> ker;
    for (int x = 0; x < static_cast<int>(mats.size()); ++x)
        if (mats[x] == I) ker.push_back(x);
    return ker;
}

}  // namespace blocklab
