#pragma once

// p-blocks: partition of Irr by reduced central characters, attachment of the
// modular side through the decomposition matrix, block dimensions by idempotent
// rank, block kernels, and the twisting action of linear Brauer characters.

#include <map>

#include "brauer.hpp"
#include "subgroup.hpp"

namespace blocklab {

struct Block {
    int id = 0;
    bool principal = false;
    std::vector<int> irr;  // ascending indices into the ordinary table
    std::vector<int> ibr;  // ascending indices into the Brauer table
    int defect = 0;
    long long defect_group_order = 1;
    long long dim_sum = 0;   // sum of chi(1)^2 over the block
    long long dim_rank = -1; // rank of the block idempotent acting on FG
    std::vector<std::vector<long long>> cartan;
};

struct BlockSet {
    std::vector<Block> blocks;
    std::vector<int> block_of_irr;
    std::vector<int> block_of_ibr;
    bool ibr_attached = false;
};

inline std::vector<std::vector<std::uint32_t>> reduced_central_characters(const CharacterTable& T, const RootEmbedding& emb) {
    const int k = T.size(), r = T.G->num_classes();
    std::vector<std::vector<std::uint32_t>> w(k, std::vector<std::uint32_t>(r));
    for (int chi = 0; chi < k; ++chi)
        for (int c = 0; c < r; ++c) w[chi][c] = emb.reduce(T.central_character(chi, c));
    return w;
}

inline BlockSet compute_block_partition(const PermGroup& G, int p, const CharacterTable& T, const RootEmbedding& emb) {
    const int k = T.size();
    auto w = reduced_central_characters(T, emb);
    std::vector<int> assign(k, -1);
    std::vector<std::vector<int>> groups;
    for (int chi = 0; chi < k; ++chi) {
        for (std::size_t b = 0; b < groups.size(); ++b)
            if (w[groups[b][0]] == w[chi]) {
                assign[chi] = static_cast<int>(b);
                break;
            }
        if (assign[chi] == -1) {
            assign[chi] = static_cast<int>(groups.size());
            groups.push_back({});
        }
        groups[assign[chi]].push_back(chi);
    }

    // principal block first, remaining blocks by smallest character index
    const int triv = T.trivial_index();
    std::vector<int> order;
    for (std::size_t b = 0; b < groups.size(); ++b)
        if (static_cast<int>(b) != assign[triv]) order.push_back(static_cast<int>(b));
    std::sort(order.begin(), order.end(), [&](int a, int b) { return groups[a][0] < groups[b][0]; });
    order.insert(order.begin(), assign[triv]);

    BlockSet out;
    out.block_of_irr.assign(k, -1);
    const int nu = valuation(G.order(), p);
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        Block B;
        B.id = static_cast<int>(pos);
        B.principal = pos == 0;
        B.irr = groups[order[pos]];
        int mindeg = nu;
        for (int chi : B.irr) {
            long long d = T.degree(chi);
            mindeg = std::min(mindeg, valuation(d, p));
            B.dim_sum += d * d;
            out.block_of_irr[chi] = B.id;
        }
        B.defect = nu - mindeg;
        B.defect_group_order = ipow(p, B.defect);
        out.blocks.push_back(std::move(B));
    }

    long long total = 0;
    for (auto& B : out.blocks) total += B.dim_sum;
    if (total != G.order()) throw internal_error("block dimensions do not sum to the group order");
    return out;
}

// recomputes the defining property of the partition; catches corrupted block data
inline void check_block_partition(const PermGroup& G, const CharacterTable& T, const RootEmbedding& emb, const BlockSet& BS) {
    auto w = reduced_central_characters(T, emb);
    std::vector<int> seen(T.size(), 0);
    for (auto& B : BS.blocks) {
        if (B.irr.empty()) throw internal_error("empty block");
        for (int chi : B.irr) {
            ++seen[chi];
            if (BS.block_of_irr[chi] != B.id) throw internal_error("block membership index out of sync");
            if (w[chi] != w[B.irr[0]])
                throw internal_error("characters in one block have distinct reduced central characters");
        }
    }
    for (int chi = 0; chi < T.size(); ++chi)
        if (seen[chi] != 1) throw internal_error("blocks do not partition the ordinary characters");
    for (std::size_t a = 0; a < BS.blocks.size(); ++a)
        for (std::size_t b = a + 1; b < BS.blocks.size(); ++b)
            if (w[BS.blocks[a].irr[0]] == w[BS.blocks[b].irr[0]])
                throw internal_error("two blocks share a reduced central character");
    if (!BS.blocks.empty() && !BS.blocks[0].principal) throw internal_error("first block is not the principal block");
    int triv = T.trivial_index();
    if (BS.block_of_irr[triv] != 0) throw internal_error("trivial character is not in the principal block");
}

// partition of Irr generated by shared modular constituents
inline std::vector<int> linkage_partition(const CharacterTable& T, const BrauerTable& B, const DecompositionData& dec) {
    const int k = T.size(), l = B.size();
    std::vector<int> comp(k, -1);
    std::vector<std::vector<int>> chis_of_phi(l);
    for (int chi = 0; chi < k; ++chi)
        for (int phi = 0; phi < l; ++phi)
            if (dec.D[chi][phi]) chis_of_phi[phi].push_back(chi);
    int next = 0;
    for (int start = 0; start < k; ++start) {
        if (comp[start] != -1) continue;
        std::vector<int> stack{start};
        comp[start] = next;
        while (!stack.empty()) {
            int chi = stack.back();
            stack.pop_back();
            for (int phi = 0; phi < l; ++phi) {
                if (!dec.D[chi][phi]) continue;
                for (int other : chis_of_phi[phi])
                    if (comp[other] == -1) {
                        comp[other] = next;
                        stack.push_back(other);
                    }
            }
        }
        ++next;
    }
    return comp;
}

inline void attach_ibr(BlockSet& BS, const CharacterTable& T, const BrauerTable& B, const DecompositionData& dec) {
    const int l = B.size();
    BS.block_of_ibr.assign(l, -1);
    for (auto& blk : BS.blocks) blk.ibr.clear();
    for (int phi = 0; phi < l; ++phi) {
        int b = -1;
        for (int chi = 0; chi < T.size(); ++chi) {
            if (!dec.D[chi][phi]) continue;
            if (b == -1)
                b = BS.block_of_irr[chi];
            else if (b != BS.block_of_irr[chi])
                throw internal_error("modular constituent is shared across distinct blocks");
        }
        if (b == -1) throw internal_error("Brauer character occurs in no ordinary character");
        BS.block_of_ibr[phi] = b;
        BS.blocks[b].ibr.push_back(phi);
    }
    for (auto& blk : BS.blocks)
        if (blk.ibr.empty()) throw internal_error("block without modular characters");

    // the linkage components must reproduce the central-character partition
    auto comp = linkage_partition(T, B, dec);
    for (int a = 0; a < T.size(); ++a)
        for (int c = a + 1; c < T.size(); ++c)
            if ((comp[a] == comp[c]) != (BS.block_of_irr[a] == BS.block_of_irr[c]))
                throw internal_error("decomposition linkage disagrees with the central-character partition");

    for (auto& blk : BS.blocks) {
        const int lb = static_cast<int>(blk.ibr.size());
        blk.cartan.assign(lb, std::vector<long long>(lb, 0));
        for (int i = 0; i < lb; ++i)
            for (int j = 0; j < lb; ++j) blk.cartan[i][j] = dec.C[blk.ibr[i]][blk.ibr[j]];
    }
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            if (dec.C[i][j] && BS.block_of_ibr[i] != BS.block_of_ibr[j])
                throw internal_error("nonzero Cartan entry between distinct blocks");

    for (auto& blk : BS.blocks) {
        if (blk.defect != 0) continue;
        if (blk.irr.size() != 1 || blk.ibr.size() != 1 || blk.cartan[0][0] != 1)
            throw internal_error("defect-zero block is not a matrix block");
        int chi = blk.irr[0], phi = blk.ibr[0];
        for (std::size_t j = 0; j < B.reg_classes.size(); ++j)
            if (B.rows[phi][j] != T.value(chi, B.reg_classes[j]))
                throw internal_error("defect-zero characters disagree on p-regular classes");
    }
    BS.ibr_attached = true;
}

// dimension of the block algebra: rank of right multiplication by the block
// idempotent on the group algebra, with reduction mod p done coefficientwise
inline long long block_dimension_rank(const PermGroup& G, const CharacterTable& T, const RootEmbedding& emb, const Block& blk) {
    const int r = G.num_classes();
    std::vector<std::uint32_t> avals(r);
    for (int c = 0; c < r; ++c) {
        Cyclotomic acc;
        for (int chi : blk.irr) acc += Rational(T.degree(chi)) * T.value(chi, G.inverse_class(c));
        avals[c] = emb.reduce(Rational(1, G.order()) * acc);
    }
    const int n = static_cast<int>(G.order());
    FqMatrix R(emb.F, n, n);
    for (int x = 0; x < n; ++x) {
        int xi = G.inv(x);
        for (int y = 0; y < n; ++y) R.at(x, y) = avals[G.class_of(G.mult(xi, y))];
    }
    if (R * R != R) throw internal_error("block idempotent fails to be idempotent");
    long long rank = R.rank();
    if (rank != blk.dim_sum)
        throw internal_error("block dimension by idempotent rank disagrees with the character-degree sum");
    return rank;
}

inline Subgroup kernel_of_character(const PermGroup& G, const CharacterTable& T, int chi) {
    Cyclotomic deg{Rational(T.degree(chi))};
    std::vector<int> elems;
    for (int c = 0; c < G.num_classes(); ++c)
        if (T.value(chi, c) == deg)
            for (int m : G.classes()[c].members) elems.push_back(m);
    std::sort(elems.begin(), elems.end());
    return make_subgroup(G, elems);
}

inline Subgroup block_kernel(const PermGroup& G, const CharacterTable& T, const Block& blk) {
    Subgroup K = kernel_of_character(G, T, blk.irr[0]);
    for (std::size_t i = 1; i < blk.irr.size(); ++i) K = subgroup_intersection(K, kernel_of_character(G, T, blk.irr[i]));
    return K;
}

inline Subgroup block_kernel_modular(const PermGroup& G, const BrauerTable& B, const Block& blk) {
    Subgroup K = make_subgroup(G, module_kernel(B.modules[blk.ibr[0]], G));
    for (std::size_t i = 1; i < blk.ibr.size(); ++i)
        K = subgroup_intersection(K, make_subgroup(G, module_kernel(B.modules[blk.ibr[i]], G)));
    return K;
}

// the group of linear Brauer characters under pointwise product
struct LbrGroup {
    std::vector<int> ibr_index;                        // ascending positions in the Brauer table
    std::vector<std::vector<std::uint32_t>> scalars;   // value of the module on each generator
    std::vector<int> lift_irr;                         // ordinary row equal to the lifted character
    std::vector<std::vector<Cyclotomic>> lift_values;  // lifted values on all classes
    int identity = -1;
    std::vector<std::vector<int>> mult;
    std::vector<int> inv;

    int size() const { return static_cast<int>(ibr_index.size()); }
};

inline LbrGroup build_lbr(const PermGroup& G, const CharacterTable& T, const BrauerTable& B) {
    LbrGroup L;
    for (int i = 0; i < B.size(); ++i)
        if (B.degree(i) == 1) L.ibr_index.push_back(i);
    const int n = L.size();
    const auto F = B.F;

    std::map<std::vector<std::uint32_t>, int> by_scalars;
    for (int i = 0; i < n; ++i) {
        const GModule& M = B.modules[L.ibr_index[i]];
        std::vector<std::uint32_t> sc;
        for (auto& g : M.gens) sc.push_back(g.at(0, 0));
        if (!by_scalars.emplace(sc, i).second) throw internal_error("two linear Brauer characters with equal scalars");
        L.scalars.push_back(std::move(sc));

        std::vector<Cyclotomic> lift(G.num_classes());
        for (int c = 0; c < G.num_classes(); ++c) {
            FqMatrix m = element_matrix(M, G, G.classes()[c].representative);
            lift[c] = B.emb.lift_root(m.at(0, 0));
        }
        for (std::size_t j = 0; j < B.reg_classes.size(); ++j)
            if (lift[B.reg_classes[j]] != B.rows[L.ibr_index[i]][j])
                throw internal_error("lift of a linear Brauer character disagrees on p-regular classes");
        int row = -1;
        for (int chi = 0; chi < T.size(); ++chi) {
            bool eq = true;
            for (int c = 0; c < G.num_classes() && eq; ++c) eq = T.value(chi, c) == lift[c];
            if (eq) {
                row = chi;
                break;
            }
        }
        if (row == -1) throw internal_error("lifted linear Brauer character is not an ordinary character");
        L.lift_irr.push_back(row);
        L.lift_values.push_back(std::move(lift));
        bool is_id = true;
        for (auto s : L.scalars.back()) is_id = is_id && s == 1;
        if (is_id) L.identity = i;
    }
    if (L.identity == -1) throw internal_error("trivial Brauer character missing");

    L.mult.assign(n, std::vector<int>(n, -1));
    L.inv.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<std::uint32_t> prod(L.scalars[a].size());
            for (std::size_t g = 0; g < prod.size(); ++g) prod[g] = F->mul(L.scalars[a][g], L.scalars[b][g]);
            auto it = by_scalars.find(prod);
            if (it == by_scalars.end()) throw internal_error("linear Brauer characters are not closed under product");
            L.mult[a][b] = it->second;
            if (it->second == L.identity) L.inv[a] = b;
        }
    for (int a = 0; a < n; ++a)
        if (L.inv[a] == -1) throw internal_error("linear Brauer character without inverse");
    return L;
}

// twisting actions: each entry of the table is the index of the image
inline std::vector<std::vector<int>> act_table_on_ibr(const PermGroup& G, const BrauerTable& B, const LbrGroup& L) {
    std::vector<std::vector<int>> act(L.size(), std::vector<int>(B.size(), -1));
    for (int li = 0; li < L.size(); ++li)
        for (int phi = 0; phi < B.size(); ++phi) {
            GModule M2 = tensor_with_linear(B.modules[phi], L.scalars[li]);
            auto row = brauer_character(M2, G, B.reg_classes, B.emb);
            for (std::size_t j = 0; j < row.size(); ++j)
                if (row[j] != B.rows[L.ibr_index[li]][j] * B.rows[phi][j])
                    throw internal_error("Brauer character of a linear twist is not the pointwise product");
            int idx = B.index_of_row(row);
            if (idx == -1) throw internal_error("linear twist of a simple module leaves the Brauer table");
            act[li][phi] = idx;
        }
    return act;
}

inline std::vector<std::vector<int>> act_table_on_irr(const CharacterTable& T, const LbrGroup& L) {
    std::vector<std::vector<int>> act(L.size(), std::vector<int>(T.size(), -1));
    for (int li = 0; li < L.size(); ++li)
        for (int chi = 0; chi < T.size(); ++chi) {
            std::vector<Cyclotomic> prod(T.G->num_classes());
            for (int c = 0; c < T.G->num_classes(); ++c) prod[c] = L.lift_values[li][c] * T.value(chi, c);
            int row = -1;
            for (int other = 0; other < T.size(); ++other) {
                bool eq = true;
                for (int c = 0; c < T.G->num_classes() && eq; ++c) eq = prod[c] == T.value(other, c);
                if (eq) {
                    row = other;
                    break;
                }
            }
            if (row == -1) throw internal_error("linear twist of an ordinary character leaves the table");
            act[li][chi] = row;
        }
    return act;
}

// image block under the twist by L[li]; both character sets must move together
inline int act_on_block(const BlockSet& BS, const std::vector<std::vector<int>>& act_irr,
                        const std::vector<std::vector<int>>& act_ibr, int li, int b) {
    const Block& blk = BS.blocks[b];
    int target = BS.block_of_irr[act_irr[li][blk.irr[0]]];
    std::vector<int> img_irr, img_ibr;
    for (int chi : blk.irr) img_irr.push_back(act_irr[li][chi]);
    for (int phi : blk.ibr) img_ibr.push_back(act_ibr[li][phi]);
    std::sort(img_irr.begin(), img_irr.end());
    std::sort(img_ibr.begin(), img_ibr.end());
    if (img_irr != BS.blocks[target].irr || (BS.ibr_attached && img_ibr != BS.blocks[target].ibr))
        throw internal_error("linear twist does not map a block onto a block");
    return target;
}

struct IbrOrbits {
    std::vector<std::vector<int>> orbits;   // each ascending; ordered by smallest member
    std::vector<int> orbit_of;
    std::vector<long long> stabilizer_size; // per orbit, of any member
};

inline IbrOrbits orbits_on_ibr(const BrauerTable& B, const LbrGroup& L, const std::vector<std::vector<int>>& act) {
    IbrOrbits out;
    out.orbit_of.assign(B.size(), -1);
    for (int phi = 0; phi < B.size(); ++phi) {
        if (out.orbit_of[phi] != -1) continue;
        std::vector<int> orb;
        long long stab = 0;
        for (int li = 0; li < L.size(); ++li) {
            int img = act[li][phi];
            if (img == phi) ++stab;
            if (out.orbit_of[img] == -1) {
                out.orbit_of[img] = static_cast<int>(out.orbits.size());
                orb.push_back(img);
            }
        }
        std::sort(orb.begin(), orb.end());
        if (stab * static_cast<long long>(orb.size()) != L.size())
            throw internal_error("orbit-stabilizer count fails on the Brauer table");
        out.stabilizer_size.push_back(stab);
        out.orbits.push_back(std::move(orb));
    }
    return out;
}

// does some block consist of linear characters only?
inline int block_with_all_irr_linear(const CharacterTable& T, const BlockSet& BS) {
    for (auto& blk : BS.blocks) {
        bool all = true;
        for (int chi : blk.irr) all = all && T.degree(chi) == 1;
        if (all) return blk.id;
    }
    return -1;
}

inline int block_with_all_ibr_linear(const BrauerTable& B, const BlockSet& BS) {
    for (auto& blk : BS.blocks) {
        bool all = true;
        for (int phi : blk.ibr) all = all && B.degree(phi) == 1;
        if (all) return blk.id;
    }
    return -1;
}

}  // namespace blocklab
