#pragma once

// Drives the full computation for one corpus entry: ordinary table, block
// partition, modular side, subgroup landscape.  Self-checks run between every
// stage; the two deliberate fault injection points exist so that the
// negative-control path (a corrupted table or partition must be caught and
// turn into a failing run) stays testable.

#include <memory>
#include <optional>

#include "blocks.hpp"
#include "corpus.hpp"

namespace blocklab {

enum class Fault { none, perturb_char, misassign_block };

inline Fault parse_fault(const std::string& s) {
    if (s.empty()) return Fault::none;
    if (s == "perturb-char") return Fault::perturb_char;
    if (s == "misassign-block") return Fault::misassign_block;
    throw input_error("unknown fault '" + s + "' (expected perturb-char or misassign-block)");
}

struct PipelineOptions {
    std::uint64_t seed = 0;
    long long cap_elements = 2000;  // hard input cap on group order
    long long cap_regular = 360;    // above this the modular side is skipped
    Fault fault = Fault::none;
};

struct GroupData {
    CorpusEntry entry;
    PermGroup G;
    CharacterTable T;
    Subgroup derived;
};

struct PairData {
    int p = 0;
    bool modular = false;
    CharacterTable T;  // local copy; the perturb-char fault edits it
    RootEmbedding emb;
    BlockSet BS;

    Subgroup Opp, Op, H, HOpp;  // O_{p'}(G), O_p(G), G' O^{p'}(G), H O_{p'}(G)
    UpperPSeries series;
    StructurePredicates preds;
    bool p_solvable = false;
    std::vector<Subgroup> ker_b;  // per block, intersection of ordinary kernels

    std::optional<BrauerTable> BT;
    std::optional<DecompositionData> dec;
    std::optional<LbrGroup> L;
    std::vector<std::vector<int>> act_ibr, act_irr;    // [lambda][index] -> image index
    std::optional<IbrOrbits> orbits;
    std::vector<std::vector<Cyclotomic>> pims;         // per Brauer character, all classes
    std::vector<Subgroup> ker_bstar;                   // per block, modular kernels
};

inline std::uint64_t pair_seed(const std::string& name, int p, std::uint64_t user_seed) {
    std::uint64_t h = fnv1a64(name);
    std::uint64_t pp = static_cast<std::uint64_t>(p);
    return fnv1a64(&pp, sizeof pp, h) ^ user_seed;
}

inline std::unique_ptr<GroupData> build_group(const CorpusEntry& e, const PipelineOptions& opts) {
    auto gd = std::make_unique<GroupData>();
    gd->entry = e;
    gd->G = PermGroup::from_generators(e.degree, e.gens, opts.cap_elements);
    gd->T = compute_character_table(gd->G);
    gd->derived = derived_subgroup(gd->G);
    return gd;
}

namespace detail {

// move the last ordinary character into a different (or a fresh) block; the
// partition self-check must notice
inline void misassign_block(BlockSet& BS) {
    int chi = static_cast<int>(BS.block_of_irr.size()) - 1;
    int from = BS.block_of_irr[chi];
    auto& src = BS.blocks[from].irr;
    src.erase(std::remove(src.begin(), src.end(), chi), src.end());
    int to;
    if (BS.blocks.size() > 1) {
        to = (from + 1) % static_cast<int>(BS.blocks.size());
    } else {
        Block fresh;
        fresh.id = static_cast<int>(BS.blocks.size());
        BS.blocks.push_back(std::move(fresh));
        to = BS.blocks.back().id;
    }
    BS.blocks[to].irr.push_back(chi);
    std::sort(BS.blocks[to].irr.begin(), BS.blocks[to].irr.end());
    BS.block_of_irr[chi] = to;
}

}  // namespace detail

inline PairData build_pair(const GroupData& gd, int p, const PipelineOptions& opts) {
    const PermGroup& G = gd.G;
    PairData pd;
    pd.p = p;
    pd.T = gd.T;
    if (opts.fault == Fault::perturb_char) pd.T.rows[0].back() += Cyclotomic(1);
    verify_orthogonality(pd.T);

    pd.emb = make_root_embedding(splitting_field(G, p), pd.T.basis);
    pd.BS = compute_block_partition(G, p, pd.T, pd.emb);
    if (opts.fault == Fault::misassign_block) detail::misassign_block(pd.BS);
    check_block_partition(G, pd.T, pd.emb, pd.BS);

    pd.Opp = o_pprime(G, p);
    pd.Op = o_p(G, p);
    pd.H = subgroup_join(gd.derived, o_upper_pprime(G, p));
    pd.HOpp = subgroup_join(pd.H, pd.Opp);
    pd.series = upper_p_series(G, p);
    pd.preds = structure_predicates(G, p);
    pd.p_solvable = is_p_solvable(G, p);
    for (const auto& blk : pd.BS.blocks) pd.ker_b.push_back(block_kernel(G, pd.T, blk));

    pd.modular = G.order() <= opts.cap_regular;
    if (!pd.modular) return pd;

    pd.BT = compute_brauer_table(G, p, pair_seed(gd.entry.name, p, opts.seed));
    pd.dec = compute_decomposition(pd.T, *pd.BT);
    attach_ibr(pd.BS, pd.T, *pd.BT, *pd.dec);
    for (auto& blk : pd.BS.blocks) blk.dim_rank = block_dimension_rank(G, pd.T, pd.emb, blk);

    pd.L = build_lbr(G, pd.T, *pd.BT);
    if (pd.L->size() * pd.H.order() != G.order())
        throw internal_error("count of linear Brauer characters differs from the index of G' O^{p'}(G)");
    {
        Subgroup K = full_subgroup(G);
        for (int i = 0; i < pd.L->size(); ++i)
            K = subgroup_intersection(K, make_subgroup(G, module_kernel(pd.BT->modules[pd.L->ibr_index[i]], G)));
        if (K != pd.H) throw internal_error("joint kernel of the linear Brauer characters is not G' O^{p'}(G)");
    }
    pd.act_ibr = act_table_on_ibr(G, *pd.BT, *pd.L);
    pd.act_irr = act_table_on_irr(pd.T, *pd.L);
    pd.orbits = orbits_on_ibr(*pd.BT, *pd.L, pd.act_ibr);

    for (int phi = 0; phi < pd.BT->size(); ++phi) pd.pims.push_back(pim_character(pd.T, *pd.dec, phi));
    for (const auto& blk : pd.BS.blocks) pd.ker_bstar.push_back(block_kernel_modular(G, *pd.BT, blk));
    return pd;
}

}  // namespace blocklab
