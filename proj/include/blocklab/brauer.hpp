#pragma once

// Brauer characters: chop the regular module over the splitting field,
// group factors into isomorphism classes, and derive the decomposition and
// Cartan matrices by exact rational solves against the ordinary table.

#include "char_table.hpp"
#include "gmodule.hpp"

namespace blocklab {

inline FieldPtr splitting_field(const PermGroup& G, int p) {
    long long eprime = pprime_part(G.exponent(), p);
    long long m = mult_order_mod(p, eprime);
    return field_create(p, static_cast<int>(m));
}

struct BrauerTable {
    const PermGroup* G = nullptr;
    int p = 0;
    FieldPtr F;
    CycloBasisPtr basis;
    RootEmbedding emb;
    std::vector<int> reg_classes;               // p-regular class indices, ascending
    std::vector<GModule> modules;               // one simple per row, canonical order
    std::vector<std::vector<Cyclotomic>> rows;  // values on reg_classes

    int size() const { return static_cast<int>(rows.size()); }
    long long degree(int i) const { return modules[i].dim; }

    int index_of_row(const std::vector<Cyclotomic>& vals) const {
        for (int i = 0; i < size(); ++i)
            if (rows[i] == vals) return i;
        return -1;
    }

    int reg_position(int cls) const {
        for (std::size_t j = 0; j < reg_classes.size(); ++j)
            if (reg_classes[j] == cls) return static_cast<int>(j);
        throw internal_error("class is not p-regular");
    }
};

inline std::vector<int> p_regular_classes(const PermGroup& G, int p) {
    std::vector<int> reg;
    for (int c = 0; c < G.num_classes(); ++c)
        if (G.classes()[c].element_order % p != 0) reg.push_back(c);
    return reg;
}

inline BrauerTable compute_brauer_table(const PermGroup& G, int p, std::uint64_t seed) {
    BrauerTable B;
    B.G = &G;
    B.p = p;
    B.F = splitting_field(G, p);
    B.basis = cyclo_basis(static_cast<int>(G.exponent()));
    B.emb = make_root_embedding(B.F, B.basis);
    B.reg_classes = p_regular_classes(G, p);

    std::vector<GModule> factors = chop(regular_module(G, B.F), seed);
    std::vector<std::pair<std::vector<Cyclotomic>, GModule>> classes;
    for (auto& M : factors) {
        auto row = brauer_character(M, G, B.reg_classes, B.emb);
        int found = -1;
        for (std::size_t i = 0; i < classes.size(); ++i)
            if (classes[i].first == row) {
                found = static_cast<int>(i);
                break;
            }
        if (found >= 0) {
            if (!is_isomorphic(classes[found].second, M))
                throw internal_error("equal Brauer characters on non-isomorphic simple modules");
        } else {
            for (auto& c : classes)
                if (is_isomorphic(c.second, M))
                    throw internal_error("isomorphic simple modules with distinct Brauer characters");
            classes.emplace_back(std::move(row), std::move(M));
        }
    }
    if (classes.size() != B.reg_classes.size())
        throw internal_error("number of simple modules differs from number of p-regular classes");

    std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
        if (a.second.dim != b.second.dim) return a.second.dim < b.second.dim;
        for (std::size_t k = 0; k < a.first.size(); ++k)
            if (a.first[k] != b.first[k]) return cyc_less(a.first[k], b.first[k]);
        return false;
    });
    for (auto& c : classes) {
        B.rows.push_back(std::move(c.first));
        B.modules.push_back(std::move(c.second));
    }
    return B;
}

namespace detail {

// unique exact solution of A x = b; throws when rank-deficient or inconsistent
inline std::vector<Rational> solve_unique(std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
    const int n = static_cast<int>(A.size());
    const int m = n ? static_cast<int>(A[0].size()) : 0;
    std::vector<int> pivcol;
    int r = 0;
    for (int c = 0; c < m && r < n; ++c) {
        int pr = -1;
        for (int i = r; i < n; ++i)
            if (A[i][c] != 0) {
                pr = i;
                break;
            }
        if (pr == -1) continue;
        std::swap(A[pr], A[r]);
        std::swap(b[pr], b[r]);
        Rational s = A[r][c];
        for (int j = c; j < m; ++j) A[r][j] /= s;
        b[r] /= s;
        for (int i = 0; i < n; ++i) {
            if (i == r) continue;
            Rational f = A[i][c];
            if (f == 0) continue;
            for (int j = c; j < m; ++j) A[i][j] -= f * A[r][j];
            b[i] -= f * b[r];
        }
        pivcol.push_back(c);
        ++r;
    }
    if (static_cast<int>(pivcol.size()) != m) throw internal_error("linear system is rank-deficient");
    for (int i = r; i < n; ++i)
        if (b[i] != 0) throw internal_error("linear system is inconsistent");
    std::vector<Rational> x(m);
    for (int k = 0; k < m; ++k) x[pivcol[k]] = b[k];
    return x;
}

}  // namespace detail

struct DecompositionData {
    std::vector<std::vector<long long>> D;  // rows Irr, cols IBr
    std::vector<std::vector<long long>> C;  // Cartan, DT * D
};

inline DecompositionData compute_decomposition(const CharacterTable& T, const BrauerTable& B) {
    const int k = T.size(), l = B.size();
    const int d = B.basis->d;
    const auto& reg = B.reg_classes;

    // one rational equation per (p-regular class, cyclotomic coordinate)
    std::vector<std::vector<Rational>> A(reg.size() * d, std::vector<Rational>(l));
    auto coeff = [&](const Cyclotomic& v, int t) { return t < static_cast<int>(v.coeffs().size()) ? v.coeffs()[t] : Rational(0); };
    for (std::size_t j = 0; j < reg.size(); ++j)
        for (int t = 0; t < d; ++t)
            for (int i = 0; i < l; ++i) A[j * d + t][i] = coeff(B.rows[i][j], t);

    DecompositionData out;
    out.D.assign(k, std::vector<long long>(l, 0));
    for (int chi = 0; chi < k; ++chi) {
        std::vector<Rational> b(reg.size() * d);
        for (std::size_t j = 0; j < reg.size(); ++j)
            for (int t = 0; t < d; ++t) b[j * d + t] = coeff(T.value(chi, reg[j]), t);
        std::vector<Rational> x = detail::solve_unique(A, std::move(b));
        bool nonzero = false;
        for (int i = 0; i < l; ++i) {
            if (!rational_is_integer(x[i]) || x[i] < 0)
                throw internal_error("decomposition entry is not a nonnegative integer");
            out.D[chi][i] = static_cast<long long>(numerator(x[i]));
            nonzero = nonzero || out.D[chi][i] != 0;
        }
        if (!nonzero) throw internal_error("ordinary character decomposes to zero");
    }

    out.C.assign(l, std::vector<long long>(l, 0));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            for (int chi = 0; chi < k; ++chi) out.C[i][j] += out.D[chi][i] * out.D[chi][j];

    long long weighted = 0;
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) weighted += out.C[i][j] * B.degree(i) * B.degree(j);
    if (weighted != T.G->order()) throw internal_error("Cartan degree identity sum C_ij phi_i(1) phi_j(1) = |G| fails");
    return out;
}

// ordinary class function of the projective indecomposable attached to phi
inline std::vector<Cyclotomic> pim_character(const CharacterTable& T, const DecompositionData& dec, int phi) {
    std::vector<Cyclotomic> out(T.G->num_classes());
    for (int chi = 0; chi < T.size(); ++chi) {
        long long m = dec.D[chi][phi];
        if (m) {
            for (int c = 0; c < T.G->num_classes(); ++c) out[c] += Rational(m) * T.value(chi, c);
        }
    }
    return out;
}

// (a,b) over the listed classes only, normalized by |G|
inline Cyclotomic inner_product_on_classes(const PermGroup& G, const std::vector<int>& classes,
                                           const std::vector<Cyclotomic>& a_full, const std::vector<Cyclotomic>& b_full) {
    Cyclotomic acc;
    for (int c : classes) acc += Rational(G.classes()[c].size) * (a_full[c] * b_full[c].conjugated());
    return Rational(1, G.order()) * acc;
}

// same pairing for rows indexed by position in reg_classes
inline Cyclotomic inner_product_regular(const PermGroup& G, const std::vector<int>& reg_classes,
                                        const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) {
    Cyclotomic acc;
    for (std::size_t j = 0; j < reg_classes.size(); ++j)
        acc += Rational(G.classes()[reg_classes[j]].size) * (a[j] * b[j].conjugated());
    return Rational(1, G.order()) * acc;
}

}  // namespace blocklab
