#pragma once

// Subgroups of an enumerated PermGroup, plus the structural operations the
// block machinery needs: generated/normal closures, derived subgroup, the
// largest normal p- and p'-subgroups, upper p-series, quotients, Sylow
// subgroups and assorted predicates.

#include <algorithm>
#include <queue>

#include "perm_group.hpp"

namespace blocklab {

struct Subgroup {
    const PermGroup* parent = nullptr;
    std::vector<int> elems;  // sorted element indices into parent
    std::vector<char> mask;  // size |parent|
    bool normal = false;

    long long order() const { return static_cast<long long>(elems.size()); }
    bool contains(int e) const { return mask[e] != 0; }
    bool operator==(const Subgroup& o) const { return parent == o.parent && elems == o.elems; }
    bool operator!=(const Subgroup& o) const { return !(*this == o); }

    bool contains_subgroup(const Subgroup& o) const {
        for (int e : o.elems)
            if (!mask[e]) return false;
        return true;
    }

    PermGroup as_group() const {
        std::vector<Permutation> ps;
        ps.reserve(elems.size());
        for (int e : elems) ps.push_back(parent->element(e));
        return PermGroup::from_elements(parent->degree(), std::move(ps));
    }
};

inline bool subgroup_is_normal(const Subgroup& S) {
    const PermGroup& G = *S.parent;
    std::vector<int> cgens;
    for (std::size_t k = 0; k < G.generators().size(); ++k) cgens.push_back(G.generator_index(static_cast<int>(k)));
    for (int e : S.elems)
        for (int g : cgens)
            if (!S.mask[G.conj(e, g)]) return false;
    return true;
}

inline Subgroup make_subgroup(const PermGroup& G, std::vector<int> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    Subgroup S;
    S.parent = &G;
    S.mask.assign(G.order(), 0);
    for (int e : elems) S.mask[e] = 1;
    S.elems = std::move(elems);
    S.normal = subgroup_is_normal(S);
    return S;
}

inline Subgroup trivial_subgroup(const PermGroup& G) { return make_subgroup(G, {0}); }

inline Subgroup full_subgroup(const PermGroup& G) {
    std::vector<int> all(G.order());
    for (int i = 0; i < G.order(); ++i) all[i] = i;
    return make_subgroup(G, std::move(all));
}

// Subgroup generated by the given element indices.  With normal_closure the
// seed is first expanded to full conjugacy classes, so the result is the
// smallest normal subgroup containing the seed.
inline Subgroup subgroup_generated(const PermGroup& G, const std::vector<int>& seed, bool normal_closure = false) {
    std::vector<int> gens;
    if (normal_closure) {
        std::vector<char> cseen(G.num_classes(), 0);
        for (int s : seed) {
            int c = G.class_of(s);
            if (!cseen[c]) {
                cseen[c] = 1;
                for (int m : G.classes()[c].members) gens.push_back(m);
            }
        }
    } else {
        gens = seed;
    }
    std::vector<char> mask(G.order(), 0);
    std::vector<int> members{0};
    mask[0] = 1;
    std::queue<int> q;
    q.push(0);
    for (int s : gens)
        if (!mask[s]) {
            mask[s] = 1;
            members.push_back(s);
            q.push(s);
        }
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int s : gens) {
            int y = G.mult(x, s);
            if (!mask[y]) {
                mask[y] = 1;
                members.push_back(y);
                q.push(y);
            }
        }
    }
    return make_subgroup(G, std::move(members));
}

// join of subgroups (equals the product set when both are normal)
inline Subgroup subgroup_join(const Subgroup& A, const Subgroup& B) {
    if (A.parent != B.parent) throw internal_error("subgroup_join: different parents");
    std::vector<int> seed = A.elems;
    seed.insert(seed.end(), B.elems.begin(), B.elems.end());
    return subgroup_generated(*A.parent, seed, false);
}

inline Subgroup subgroup_intersection(const Subgroup& A, const Subgroup& B) {
    if (A.parent != B.parent) throw internal_error("subgroup_intersection: different parents");
    std::vector<int> out;
    for (int e : A.elems)
        if (B.mask[e]) out.push_back(e);
    return make_subgroup(*A.parent, std::move(out));
}

// commutator subgroup: normal closure of commutators of generator pairs
inline Subgroup derived_subgroup(const PermGroup& G) {
    std::vector<int> comms;
    int ng = static_cast<int>(G.generators().size());
    for (int a = 0; a < ng; ++a)
        for (int b = 0; b < ng; ++b) {
            int ia = G.generator_index(a), ib = G.generator_index(b);
            int c = G.mult(G.mult(G.inv(ia), G.inv(ib)), G.mult(ia, ib));
            comms.push_back(c);
        }
    if (comms.empty()) return trivial_subgroup(G);
    return subgroup_generated(G, comms, true);
}

namespace detail {
// normal closures of single class representatives, used by o_p / o_pprime
inline std::vector<Subgroup> class_rep_closures(const PermGroup& G) {
    std::vector<Subgroup> out;
    out.reserve(G.num_classes());
    for (int c = 0; c < G.num_classes(); ++c)
        out.push_back(subgroup_generated(G, {G.classes()[c].representative}, true));
    return out;
}
}  // namespace detail

// largest normal p'-subgroup: join of class-representative normal closures of p'-order
inline Subgroup o_pprime(const PermGroup& G, long long p) {
    std::vector<int> seed{0};
    for (int c = 0; c < G.num_classes(); ++c) {
        Subgroup N = subgroup_generated(G, {G.classes()[c].representative}, true);
        if (N.order() % p != 0) seed.insert(seed.end(), N.elems.begin(), N.elems.end());
    }
    Subgroup S = subgroup_generated(G, seed, false);
    if (!S.normal || S.order() % p == 0) throw internal_error("o_pprime: invariant broken");
    return S;
}

// largest normal p-subgroup: join of class-representative normal closures of p-power order
inline Subgroup o_p(const PermGroup& G, long long p) {
    std::vector<int> seed{0};
    for (int c = 0; c < G.num_classes(); ++c) {
        Subgroup N = subgroup_generated(G, {G.classes()[c].representative}, true);
        if (N.order() == p_part(N.order(), p)) seed.insert(seed.end(), N.elems.begin(), N.elems.end());
    }
    Subgroup S = subgroup_generated(G, seed, false);
    if (!S.normal || S.order() != p_part(S.order(), p)) throw internal_error("o_p: invariant broken");
    return S;
}

// subgroup generated by all p-elements (smallest normal subgroup of p-power index prime to ... )
inline Subgroup o_upper_pprime(const PermGroup& G, long long p) {
    std::vector<int> seed{0};
    for (int i = 0; i < G.order(); ++i)
        if (G.element_order(i) == p_part(G.element_order(i), p)) seed.push_back(i);
    return subgroup_generated(G, seed, false);
}

struct QuotientMap {
    PermGroup Q;
    std::vector<int> proj;  // parent element index -> quotient element index
};

// G acting on cosets of a normal subgroup N by right multiplication
inline QuotientMap quotient(const PermGroup& G, const Subgroup& N) {
    if (N.parent != &G) throw internal_error("quotient: subgroup of a different group");
    if (!N.normal) throw internal_error("quotient: subgroup is not normal");
    const long long n = G.order();
    if (N.order() == n) {
        QuotientMap qm{PermGroup::from_elements(1, {Permutation(1)}), std::vector<int>(n, 0)};
        return qm;
    }
    if (N.order() == 1) {
        QuotientMap qm{G, std::vector<int>(n)};
        for (int i = 0; i < n; ++i) qm.proj[i] = i;
        return qm;
    }
    const int ncosets = static_cast<int>(n / N.order());
    std::vector<int> coset_id(n, -1);
    std::vector<int> reps;
    for (int i = 0; i < n; ++i) {
        if (coset_id[i] != -1) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(i);
        for (int s : N.elems) coset_id[G.mult(i, s)] = c;
    }
    if (static_cast<int>(reps.size()) != ncosets) throw internal_error("quotient: coset count mismatch");

    std::vector<Permutation> images(n, Permutation(ncosets));
    for (int g = 0; g < n; ++g)
        for (int c = 0; c < ncosets; ++c) images[g].img[c] = coset_id[G.mult(reps[c], g)];

    std::vector<Permutation> qelems = images;
    std::sort(qelems.begin(), qelems.end());
    qelems.erase(std::unique(qelems.begin(), qelems.end()), qelems.end());
    std::vector<Permutation> qgens;
    for (std::size_t k = 0; k < G.generators().size(); ++k)
        qgens.push_back(images[G.generator_index(static_cast<int>(k))]);
    QuotientMap qm{PermGroup::from_elements(ncosets, std::move(qelems), std::move(qgens)), std::vector<int>(n)};
    for (int g = 0; g < n; ++g) qm.proj[g] = qm.Q.index_of(images[g]);
    return qm;
}

inline Subgroup preimage(const PermGroup& G, const QuotientMap& qm, const Subgroup& T) {
    std::vector<int> elems;
    for (int g = 0; g < G.order(); ++g)
        if (T.mask[qm.proj[g]]) elems.push_back(g);
    return make_subgroup(G, std::move(elems));
}

// lift a subgroup of S.as_group() back to a subgroup of S.parent
inline Subgroup lift_subgroup(const PermGroup& G, const PermGroup& H, const Subgroup& S_in_H) {
    std::vector<int> elems;
    for (int e : S_in_H.elems) elems.push_back(G.index_of(H.element(e)));
    return make_subgroup(G, std::move(elems));
}

struct UpperPSeries {
    Subgroup lower_pprime;          // O_{p'}(G)
    Subgroup lower_pprime_p;        // O_{p'p}(G)
    Subgroup lower_pprime_p_pprime; // O_{p'pp'}(G)
    bool p_length_one = false;      // O_{p'pp'}(G) == G
};

inline UpperPSeries upper_p_series(const PermGroup& G, long long p) {
    UpperPSeries S;
    S.lower_pprime = o_pprime(G, p);
    QuotientMap q1 = quotient(G, S.lower_pprime);
    S.lower_pprime_p = preimage(G, q1, o_p(q1.Q, p));
    QuotientMap q2 = quotient(G, S.lower_pprime_p);
    S.lower_pprime_p_pprime = preimage(G, q2, o_pprime(q2.Q, p));
    S.p_length_one = (S.lower_pprime_p_pprime.order() == G.order());
    return S;
}

// Sylow p-subgroup: grow a p-subgroup by p-elements of its normalizer until
// the full p-part is reached; the normalizer always supplies the next element.
inline Subgroup sylow_subgroup(const PermGroup& G, long long p) {
    const long long target = p_part(G.order(), p);
    Subgroup P = trivial_subgroup(G);
    while (P.order() < target) {
        // normalizer of P in G
        std::vector<int> norm;
        for (int g = 0; g < G.order(); ++g) {
            bool ok = true;
            for (int s : P.elems)
                if (!P.mask[G.conj(s, g)]) {
                    ok = false;
                    break;
                }
            if (ok) norm.push_back(g);
        }
        int pick = -1;
        for (int g : norm) {
            if (P.mask[g]) continue;
            long long o = G.element_order(g);
            if (o == p_part(o, p) && o > 1) {
                pick = g;
                break;
            }
        }
        if (pick == -1) throw internal_error("sylow_subgroup: stuck below full p-part");
        std::vector<int> seed = P.elems;
        seed.push_back(pick);
        P = subgroup_generated(G, seed, false);
        if (P.order() != p_part(P.order(), p)) throw internal_error("sylow_subgroup: non-p-group step");
    }
    return P;
}

inline bool subgroup_is_abelian(const PermGroup& G, const Subgroup& S) {
    for (int a : S.elems)
        for (int b : S.elems)
            if (G.mult(a, b) != G.mult(b, a)) return false;
    return true;
}

inline bool group_is_abelian(const PermGroup& G) {
    for (std::size_t a = 0; a < G.generators().size(); ++a)
        for (std::size_t b = a + 1; b < G.generators().size(); ++b) {
            int ia = G.generator_index(static_cast<int>(a)), ib = G.generator_index(static_cast<int>(b));
            if (G.mult(ia, ib) != G.mult(ib, ia)) return false;
        }
    return true;
}

struct StructurePredicates {
    bool p_nilpotent = false;       // G / O_{p'}(G) is a p-group
    bool sylow_p_abelian = false;
    long long sylow_order = 1;
};

inline StructurePredicates structure_predicates(const PermGroup& G, long long p) {
    StructurePredicates out;
    Subgroup opp = o_pprime(G, p);
    long long idx = G.order() / opp.order();
    out.p_nilpotent = (idx == p_part(idx, p));
    Subgroup P = sylow_subgroup(G, p);
    out.sylow_order = P.order();
    out.sylow_p_abelian = subgroup_is_abelian(G, P);
    return out;
}

// p-solvable: alternately stripping O_{p'} and O_p reaches the trivial group
inline bool is_p_solvable(const PermGroup& G, long long p) {
    PermGroup cur = G;
    while (cur.order() > 1) {
        Subgroup a = o_pprime(cur, p);
        if (a.order() > 1) {
            cur = quotient(cur, a).Q;
            continue;
        }
        Subgroup b = o_p(cur, p);
        if (b.order() > 1) {
            cur = quotient(cur, b).Q;
            continue;
        }
        return false;
    }
    return true;
}

// order of the coset xN inside G/N (N normal): least t >= 1 with x^t in N
inline long long coset_order(const PermGroup& G, const Subgroup& N, int x) {
    int acc = x;
    long long t = 1;
    while (!N.mask[acc]) {
        acc = G.mult(acc, x);
        ++t;
        if (t > G.order()) throw internal_error("coset_order: runaway");
    }
    return t;
}

}  // namespace blocklab
