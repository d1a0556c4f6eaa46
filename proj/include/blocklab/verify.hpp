#pragma once

// The check catalog: every numbered identity the tool certifies, evaluated
// against freshly computed data for one (group, prime) pair.  A check ends in
// one of four states: pass, fail (with a replayable witness), vacuous (its
// hypothesis has no instance for this pair), or skipped (the modular side was
// not computed because the group is above the regular-module cap).

#include <atomic>
#include <thread>

#include "pipeline.hpp"

namespace blocklab {

struct TheoremResult {
    std::string group;
    int p = 0;
    std::string theorem;
    std::string status;   // pass | fail | vacuous | skipped
    std::string witness;  // failure details / informative notes
    long long counts = 0; // instances examined
    bool asserted = true; // false: reported but excluded from the exit code
};

inline const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids{"1.1", "1.2",  "1.3",  "1.4",  "2.1",       "2.2",    "2.3",    "2.4a",
                                              "2.4b", "2.5", "2.6",  "HW",   "bcd1",      "kernel-ids", "eq-2.1", "eq-2.2"};
    return ids;
}

inline bool theorem_needs_modular(const std::string& id) { return id != "2.4a"; }

namespace detail {

inline std::string replay_hint(const std::string& group, const std::string& id) {
    return "; replay: blocklab verify --entry " + group + " --theorem " + id;
}

inline std::string subgroup_desc(const Subgroup& S) { return "order " + std::to_string(S.order()); }

struct CheckScope {
    const GroupData& gd;
    const PairData& pd;
    TheoremResult r;

    CheckScope(const GroupData& g, const PairData& d, const std::string& id) : gd(g), pd(d) {
        r.group = g.entry.name;
        r.p = d.p;
        r.theorem = id;
        r.status = "pass";
    }
    TheoremResult fail(const std::string& why) {
        r.status = "fail";
        r.witness = why + replay_hint(r.group, r.theorem);
        return r;
    }
    TheoremResult vacuous(const std::string& note = "") {
        r.status = "vacuous";
        r.witness = note;
        return r;
    }
    TheoremResult pass(const std::string& note = "") {
        r.status = "pass";
        r.witness = note;
        return r;
    }
};

// projective characters of twisted simples are the twists of projective characters
inline TheoremResult check_1_1(const GroupData& gd, const PairData& pd) {
    CheckScope s(gd, pd, "1.1");
    const auto& L = *pd.L;
    const PermGroup& G = gd.G;
    for (int li = 0; li < L.size(); ++li)
        for (int phi = 0; phi < pd.BT->size(); ++phi) {
            int img = pd.act_ibr[li][phi];
            for (int c = 0; c < G.num_classes(); ++c) {
                Cyclotomic want = L.lift_values[li][c] * pd.pims[phi][c];
                if (pd.pims[img][c] != want)
                    return s.fail("lambda=" + std::to_string(li) + " phi=" + std::to_string(phi) + " class=" +
                                  std::to_string(c) + ": projective value " + pd.pims[img][c].to_string() +
                                  " != twisted value " + want.to_string());
            }
            ++s.r.counts;
        }
    return s.r;
}

// the twists form a group action on the simple modules and on the ordinary characters
inline TheoremResult check_1_2(const GroupData& gd, const PairData& pd) {
    CheckScope s(gd, pd, "1.2");
    const auto& L = *pd.L;
    auto check_action = [&](const std::vector<std::vector<int>>& act, int n, const char* side) -> std::string {
        for (int li = 0; li < L.size(); ++li) {
            std::vector<char> hit(n, 0);
            for (int x = 0; x < n; ++x) {
                if (hit[act[li][x]]) return std::string(side) + ": twist " + std::to_string(li) + " is not injective";
                hit[act[li][x]] = 1;
                ++s.r.counts;
            }
        }
        for (int x = 0; x < n; ++x) {
            if (act[L.identity][x] != x) return std::string(side) + ": identity twist moves index " + std::to_string(x);
            ++s.r.counts;
        }
        for (int a = 0; a < L.size(); ++a)
            for (int b = 0; b < L.size(); ++b)
                for (int x = 0; x < n; ++x) {
                    if (act[L.mult[a][b]][x] != act[a][act[b][x]])
                        return std::string(side) + ": composition law fails at (" + std::to_string(a) + "," +
                               std::to_string(b) + "," + std::to_string(x) + ")";
                    ++s.r.counts;
                }
        return "";
    };
    std::string err = check_action(pd.act_ibr, pd.BT->size(), "simples");
    if (err.empty()) err = check_action(pd.act_irr, pd.T.size(), "ordinary characters");
    if (!err.empty()) return s.fail(err);
    return s.r;
}

// on p-regular classes outside H = G' O^{p'}(G): either the coset order of x
// divides the orbit size of phi, or phi and its projective both vanish at x
inline TheoremResult check_1_3(const GroupData& gd, const PairData& pd) {
    CheckScope s(gd, pd, "1.3");
    const PermGroup& G = gd.G;
    const auto& reg = pd.BT->reg_classes;
    bool any_outside = false;
    for (std::size_t j = 0; j < reg.size(); ++j) {
        int cls = reg[j];
        int x = G.classes()[cls].representative;
        if (pd.H.contains(x)) continue;
        any_outside = true;
        long long o = coset_order(G, pd.H, x);
        for (int phi = 0; phi < pd.BT->size(); ++phi) {
            long long orbit = static_cast<long long>(pd.orbits->orbits[pd.orbits->orbit_of[phi]].size());
            if (orbit % o == 0) {
                ++s.r.counts;
                continue;
            }
            if (!pd.BT->rows[phi][j].is_zero() || !pd.pims[phi][cls].is_zero())
                return s.fail("phi=" + std::to_string(phi) + " class=" + std::to_string(cls) + ": coset order " +
                              std::to_string(o) + " does not divide orbit size " + std::to_string(orbit) +
                              " yet phi(x)=" + pd.BT->rows[phi][j].to_string() + ", projective(x)=" +
                              pd.pims[phi][cls].to_string());
            ++s.r.counts;
        }
    }
    if (!any_outside) return s.vacuous("every p-regular class lies inside G' O^{p'}(G)");
    return s.r;
}

// if the coset order of x does not divide the number of simples (part 1) or is
// coprime to it (part 2), some phi vanishes at x together with its projective
inline TheoremResult check_1_4(const GroupData& gd, const PairData& pd) {
    CheckScope s(gd, pd, "1.4");
    const PermGroup& G = gd.G;
    const auto& reg = pd.BT->reg_classes;
    const long long l = pd.BT->size();
    bool any = false;
    for (std::size_t j = 0; j < reg.size(); ++j) {
        int cls = reg[j];
        int x = G.classes()[cls].representative;
        if (pd.H.contains(x)) continue;
        long long o = coset_order(G, pd.H, x);
        bool part1 = (l % o != 0);
        bool part2 = (std::gcd(o, l) == 1);
        if (part2 && !part1)
            return s.fail("class=" + std::to_string(cls) + ": coset order " + std::to_string(o) +
                          " is coprime to l=" + std::to_string(l) + " but still divides it");
        if (!part1 && !part2) continue;
        any = true;
        bool found = false;
        for (int phi = 0; phi < pd.BT->size() && !found; ++phi)
            found = pd.BT->rows[phi][j].is_zero() && pd.pims[phi][cls].is_zero();
        if (!found)
            return s.fail("class=" + std::to_string(cls) + " coset order " + std::to_string(o) + " l=" +
                          std::to_string(l) + ": no simple vanishes at x together with its projective");
        s.r.counts += (part1 ? 1 : 0) + (part2 ? 1 : 0);
    }
    if (!any) return s.vacuous("no p-regular class outside G' O^{p'}(G) meets either hypothesis");
    return s.r;
}

// position of each member of blk.ibr's image inside the target block
inline std::vector<int> block_image_positions(const PairData& pd, int li, const Block& blk, const Block& target) {
    std::vector<int> pos;
    for (int phi : blk.ibr) {
        int img = pd.act_ibr[li][phi];
        auto it = std::find(target.ibr.begin(), target.ibr.end(), img);
        if (it == target.ibr.end()) throw internal_error("twisted simple left the target block");
        pos.push_back(static_cast<int>(it - target.ibr.begin()));
    }
    return pos;
}

// every twist maps each block onto a block with identical Cartan matrix
inline TheoremResult check_2_1(const GroupData& gd, const PairData& pd) {
    CheckScope s(gd, pd, "2.1");
    const auto& L = *pd.L;
    for (int li = 0; li < L.size(); ++li)
        for (const auto& blk : pd.BS.blocks) {
            int target;
            try {
                target = act_on_block(pd.BS, pd.act_irr, pd.act_ibr, li, blk.id);
            } catch (const internal_error& e) {
                return s.fail("lambda=" + std::to_string(li) + " block=" + std::to_string(blk.id) + ": " + e.what());
            }
            const Block& tb = pd.BS.blocks[target];
            auto pos = block_image_positions(pd, li, blk, tb);
            for (std::size_t i = 0; i < blk.ibr.size(); ++i)
                for (std::size_t j = 0; j < blk.ibr.size(); ++j)
                    if (blk.cartan[i][j] != tb.cartan[pos[i]][pos[j]])
                        return s.fail("lambda=" + std::to_string(li) + " block=" + std::to_string(blk.id) +
                                      ": Cartan entry (" + std::to_string(i) + "," + std::to_string(j) +
                                      ") changes under the twist");
            ++s.r.counts;
        }
    return s.r;
}

// a block containing a linear Brauer character is a twist of the principal block
inline TheoremResult check_2_2(const GroupData& gd, const PairData& pd) {
    CheckScope s(gd, pd, "2.2");
    const auto& L = *pd.L;
    for (const auto& blk : pd.BS.blocks)
        for (int li = 0; li < L.size(); ++li) {
            if (pd.BS.block_of_ibr[L.ibr_index[li]] != blk.id) continue;
            int img;
            try {
                img = act_on_block(pd.BS, pd.act_irr, pd.act_ibr, li, 0);
            } catch (const internal_error& e) {
                return s.fail("lambda=" + std::to_string(li) + ": " + e.what());
            }
            if (img != blk.id)
                return s.fail("lambda=" + std::to_string(li) + " lies in block " + std::to_string(blk.id) +
                              " but twists the principal block to block " + std::to_string(img));
            const Block& b0 = pd.BS.blocks[0];
            auto pos = block_image_positions(pd, li, b0, blk);
            for (std::size_t i = 0; i < b0.ibr.size(); ++i)
                for (std::size_t j = 0; j < b0.ibr.size(); ++j)
                    if (b0.cartan[i][j] != blk.cartan[pos[i]][pos[j]])
                        return s.fail("lambda=" + std::to_string(li) + " block=" + std::to_string(blk.id) +
                                      ": Cartan matrix differs from the principal block under the twist");
            ++s.r.counts;
        }
    return s.r;
}

// when some block has all Brauer characters linear, the modular kernel of the
// principal block is H O_{p'}(G)
inline TheoremResult check_2_3(const GroupData& gd, const PairData& pd) {
    CheckScope s(gd, pd, "2.3");
    if (block_with_all_ibr_linear(*pd.BT, pd.BS) == -1)
        return s.vacuous("no block has all Brauer characters linear");
    ++s.r.counts;
    if (pd.ker_bstar[0] != pd.HOpp)
        return s.fail("modular kernel of the principal block has " + subgroup_desc(pd.ker_bstar[0]) +
                      " but H O_{p'}(G) has " + subgroup_desc(pd.HOpp));
    return s.r;
}

// some block has all ordinary characters linear iff G is p-nilpotent with
// abelian Sylow p-subgroup
inline TheoremResult check_2_4a(const GroupData& gd, const PairData& pd) {
    CheckScope s(gd, pd, "2.4a");
    bool lhs = block_with_all_irr_linear(pd.T, pd.BS) != -1;
    bool rhs = pd.preds.p_nilpotent && pd.preds.sylow_p_abelian;
    ++s.r.counts;
    if (lhs != rhs)
        return s.fail(std::string("all-ordinary-linear block ") + (lhs ? "exists" : "does not exist") +
                      " but p-nilpotent=" + (pd.preds.p_nilpotent ? "true" : "false") +
                      " abelian-sylow=" + (pd.preds.sylow_p_abelian ? "true" : "false"));
    return s.pass(lhs ? "positive instance: both sides hold" : "negative instance: both sides fail");
}

// some block has all Brauer characters linear iff the series O_{p'}(G) <=
// O_{p'p}(G) = H O_{p'}(G) = Ker(B0*) <= O_{p'pp'}(G) = G holds
inline TheoremResult check_2_4b(const GroupData& gd, const PairData& pd) {
    CheckScope s(gd, pd, "2.4b");
    bool lhs = block_with_all_ibr_linear(*pd.BT, pd.BS) != -1;
    if (!pd.series.lower_pprime.normal || !pd.series.lower_pprime_p.normal || !pd.series.lower_pprime_p_pprime.normal)
        return s.fail("a term of the upper p-series is not normal");
    bool rhs = pd.series.lower_pprime_p == pd.HOpp && pd.ker_bstar[0] == pd.HOpp &&
               pd.series.lower_pprime_p_pprime.order() == gd.G.order();
    ++s.r.counts;
    if (lhs != rhs)
        return s.fail(std::string("all-Brauer-linear block ") + (lhs ? "exists" : "does not exist") +
                      " but the series characterization is " + (rhs ? "true" : "false") + " (O_{p'p} " +
                      subgroup_desc(pd.series.lower_pprime_p) + ", H O_{p'} " + subgroup_desc(pd.HOpp) +
                      ", Ker(B0*) " + subgroup_desc(pd.ker_bstar[0]) + ", O_{p'pp'} " +
                      subgroup_desc(pd.series.lower_pprime_p_pprime) + ")");
    return s.pass(lhs ? "positive instance: both sides hold" : "negative instance: both sides fail");
}

inline TheoremResult check_dim_identity(const GroupData& gd, const PairData& pd, const std::string& id) {
    CheckScope s(gd, pd, id);
    for (const auto& blk : pd.BS.blocks) {
        long long sq = 0;
        for (int phi : blk.ibr) sq += pd.BT->degree(phi) * pd.BT->degree(phi);
        if (blk.dim_rank != blk.defect_group_order * sq)
            return s.fail("block=" + std::to_string(blk.id) + ": dimension " + std::to_string(blk.dim_rank) +
                          " != defect group order " + std::to_string(blk.defect_group_order) +
                          " * sum of squared Brauer degrees " + std::to_string(sq));
        ++s.r.counts;
    }
    return s.r;
}

// under the all-Brauer-linear-block hypothesis, every block satisfies
// dim(B) = |D_B| * sum of squared Brauer degrees
inline TheoremResult check_2_5(const GroupData& gd, const PairData& pd) {
    if (block_with_all_ibr_linear(*pd.BT, pd.BS) == -1) {
        CheckScope s(gd, pd, "2.5");
        return s.vacuous("no block has all Brauer characters linear");
    }
    return check_dim_identity(gd, pd, "2.5");
}

// the same identity for every pair of p-length one
inline TheoremResult check_2_6(const GroupData& gd, const PairData& pd) {
    if (!pd.series.p_length_one) {
        CheckScope s(gd, pd, "2.6");
        return s.vacuous("the pair does not have p-length one");
    }
    return check_dim_identity(gd, pd, "2.6");
}

// dim(B) <= l(B) |D_B| sum phi(1)^2, with equality exactly when l(B) = 1;
// asserted only for p-solvable pairs, informative otherwise
inline TheoremResult check_hw(const GroupData& gd, const PairData& pd) {
    CheckScope s(gd, pd, "HW");
    s.r.asserted = pd.p_solvable;
    for (const auto& blk : pd.BS.blocks) {
        long long sq = 0;
        for (int phi : blk.ibr) sq += pd.BT->degree(phi) * pd.BT->degree(phi);
        long long lb = static_cast<long long>(blk.ibr.size());
        long long bound = lb * blk.defect_group_order * sq;
        bool equality_ok = (blk.dim_rank == bound) == (lb == 1);
        if (blk.dim_rank > bound || !equality_ok) {
            TheoremResult r = s.fail("block=" + std::to_string(blk.id) + ": dimension " + std::to_string(blk.dim_rank) +
                                     " vs bound " + std::to_string(bound) + " with l(B)=" + std::to_string(lb));
            if (!r.asserted) r.witness = "informative only (group is not p-solvable): " + r.witness;
            return r;
        }
        ++s.r.counts;
    }
    if (!pd.p_solvable) return s.pass("informative only: group is not p-solvable");
    return s.r;
}

// all Brauer degrees are 1 iff the Sylow p-subgroup is normal with abelian quotient
inline TheoremResult check_bcd1(const GroupData& gd, const PairData& pd) {
    CheckScope s(gd, pd, "bcd1");
    bool lhs = true;
    for (int phi = 0; phi < pd.BT->size(); ++phi) lhs = lhs && pd.BT->degree(phi) == 1;
    bool sylow_normal = pd.Op.order() == p_part(gd.G.order(), pd.p);
    bool rhs = sylow_normal && pd.Op.contains_subgroup(gd.derived);
    ++s.r.counts;
    if (lhs != rhs)
        return s.fail(std::string("Brauer degrees ") + (lhs ? "are" : "are not") + " all 1 but normal-Sylow-" +
                      "with-abelian-quotient is " + (rhs ? "true" : "false"));
    return s.pass(lhs ? "positive instance: both sides hold" : "negative instance: both sides fail");
}

// kernel identities: Ker(B) = O_{p'}(Ker chi) for every chi in B,
// Ker(B*)/Ker(B) = O_p(G/Ker(B)), and the principal specializations
inline TheoremResult check_kernel_ids(const GroupData& gd, const PairData& pd) {
    CheckScope s(gd, pd, "kernel-ids");
    const PermGroup& G = gd.G;
    for (const auto& blk : pd.BS.blocks) {
        const Subgroup& KB = pd.ker_b[blk.id];
        for (int chi : blk.irr) {
            Subgroup kchi = kernel_of_character(G, pd.T, chi);
            PermGroup KG = kchi.as_group();
            Subgroup lifted = lift_subgroup(G, KG, o_pprime(KG, pd.p));
            if (lifted != KB)
                return s.fail("block=" + std::to_string(blk.id) + " chi=" + std::to_string(chi) +
                              ": O_{p'}(Ker chi) has " + subgroup_desc(lifted) + " but Ker(B) has " + subgroup_desc(KB));
            ++s.r.counts;
        }
        QuotientMap qm = quotient(G, KB);
        Subgroup pre = preimage(G, qm, o_p(qm.Q, pd.p));
        if (pre != pd.ker_bstar[blk.id])
            return s.fail("block=" + std::to_string(blk.id) + ": preimage of O_p(G/Ker B) has " + subgroup_desc(pre) +
                          " but Ker(B*) has " + subgroup_desc(pd.ker_bstar[blk.id]));
        ++s.r.counts;
    }
    if (pd.ker_b[0] != pd.Opp)
        return s.fail("Ker(B0) has " + subgroup_desc(pd.ker_b[0]) + " but O_{p'}(G) has " + subgroup_desc(pd.Opp));
    ++s.r.counts;
    QuotientMap qm = quotient(G, pd.Opp);
    Subgroup pre = preimage(G, qm, o_p(qm.Q, pd.p));
    if (pre != pd.ker_bstar[0])
        return s.fail("Ker(B0*) has " + subgroup_desc(pd.ker_bstar[0]) + " but the preimage of O_p(G/O_{p'}(G)) has " +
                      subgroup_desc(pre));
    ++s.r.counts;
    return s.r;
}

// pairings of projective characters are invariant under twisting, agree on
// p-regular classes with the full-group pairing, and equal the Cartan entries
inline TheoremResult check_eq_2_1(const GroupData& gd, const PairData& pd) {
    CheckScope s(gd, pd, "eq-2.1");
    const PermGroup& G = gd.G;
    const auto& reg = pd.BT->reg_classes;
    std::vector<int> all_classes(G.num_classes());
    for (int c = 0; c < G.num_classes(); ++c) all_classes[c] = c;
    for (int li = 0; li < pd.L->size(); ++li)
        for (const auto& blk : pd.BS.blocks)
            for (std::size_t i = 0; i < blk.ibr.size(); ++i)
                for (std::size_t j = i; j < blk.ibr.size(); ++j) {
                    int a = blk.ibr[i], b = blk.ibr[j];
                    int ta = pd.act_ibr[li][a], tb = pd.act_ibr[li][b];
                    Cyclotomic base = inner_product_on_classes(G, reg, pd.pims[a], pd.pims[b]);
                    Cyclotomic twisted = inner_product_on_classes(G, reg, pd.pims[ta], pd.pims[tb]);
                    if (twisted != base)
                        return s.fail("lambda=" + std::to_string(li) + " block=" + std::to_string(blk.id) + " pair=(" +
                                      std::to_string(a) + "," + std::to_string(b) + "): projective pairing " +
                                      base.to_string() + " changes to " + twisted.to_string());
                    Cyclotomic full = inner_product_on_classes(G, all_classes, pd.pims[a], pd.pims[b]);
                    if (full != base)
                        return s.fail("pair=(" + std::to_string(a) + "," + std::to_string(b) +
                                      "): projective pairing differs between p-regular and all classes");
                    if (base != Cyclotomic(pd.dec->C[a][b]))
                        return s.fail("pair=(" + std::to_string(a) + "," + std::to_string(b) +
                                      "): projective pairing " + base.to_string() + " != Cartan entry " +
                                      std::to_string(pd.dec->C[a][b]));
                    ++s.r.counts;
                }
    return s.r;
}

// Brauer character pairings over p-regular classes are invariant under twisting
inline TheoremResult check_eq_2_2(const GroupData& gd, const PairData& pd) {
    CheckScope s(gd, pd, "eq-2.2");
    const PermGroup& G = gd.G;
    const auto& reg = pd.BT->reg_classes;
    for (int li = 0; li < pd.L->size(); ++li)
        for (const auto& blk : pd.BS.blocks)
            for (std::size_t i = 0; i < blk.ibr.size(); ++i)
                for (std::size_t j = i; j < blk.ibr.size(); ++j) {
                    int a = blk.ibr[i], b = blk.ibr[j];
                    int ta = pd.act_ibr[li][a], tb = pd.act_ibr[li][b];
                    Cyclotomic base = inner_product_regular(G, reg, pd.BT->rows[a], pd.BT->rows[b]);
                    Cyclotomic twisted = inner_product_regular(G, reg, pd.BT->rows[ta], pd.BT->rows[tb]);
                    if (twisted != base)
                        return s.fail("lambda=" + std::to_string(li) + " block=" + std::to_string(blk.id) + " pair=(" +
                                      std::to_string(a) + "," + std::to_string(b) + "): p-regular pairing " +
                                      base.to_string() + " changes to " + twisted.to_string());
                    ++s.r.counts;
                }
    return s.r;
}

}  // namespace detail

inline TheoremResult run_one_check(const GroupData& gd, const PairData& pd, const std::string& id) {
    if (!pd.modular && theorem_needs_modular(id)) {
        TheoremResult r{gd.entry.name, pd.p, id, "skipped",
                        "group order exceeds the regular-module cap; modular side not computed", 0, true};
        return r;
    }
    try {
        if (id == "1.1") return detail::check_1_1(gd, pd);
        if (id == "1.2") return detail::check_1_2(gd, pd);
        if (id == "1.3") return detail::check_1_3(gd, pd);
        if (id == "1.4") return detail::check_1_4(gd, pd);
        if (id == "2.1") return detail::check_2_1(gd, pd);
        if (id == "2.2") return detail::check_2_2(gd, pd);
        if (id == "2.3") return detail::check_2_3(gd, pd);
        if (id == "2.4a") return detail::check_2_4a(gd, pd);
        if (id == "2.4b") return detail::check_2_4b(gd, pd);
        if (id == "2.5") return detail::check_2_5(gd, pd);
        if (id == "2.6") return detail::check_2_6(gd, pd);
        if (id == "HW") return detail::check_hw(gd, pd);
        if (id == "bcd1") return detail::check_bcd1(gd, pd);
        if (id == "kernel-ids") return detail::check_kernel_ids(gd, pd);
        if (id == "eq-2.1") return detail::check_eq_2_1(gd, pd);
        if (id == "eq-2.2") return detail::check_eq_2_2(gd, pd);
    } catch (const std::exception& e) {
        TheoremResult r{gd.entry.name, pd.p, id, "fail",
                        std::string("check raised an internal inconsistency: ") + e.what() +
                            detail::replay_hint(gd.entry.name, id),
                        0, true};
        return r;
    }
    throw input_error("unknown check id '" + id + "'");
}

inline std::vector<std::string> selected_ids(const std::string& theorem_filter) {
    if (theorem_filter.empty()) return theorem_ids();
    for (const auto& id : theorem_ids())
        if (id == theorem_filter) return {id};
    throw input_error("unknown check id '" + theorem_filter + "'");
}

// one record per selected check, all marked failed; used when the pipeline
// itself detects corrupted data for a pair
inline std::vector<TheoremResult> fail_all_checks(const std::string& group, int p, const std::vector<std::string>& ids,
                                                  const std::string& msg) {
    std::vector<TheoremResult> out;
    for (const auto& id : ids)
        out.push_back({group, p, id, "fail",
                       "pipeline self-check failed: " + msg + detail::replay_hint(group, id), 0, true});
    return out;
}

struct VerifyRun {
    std::vector<TheoremResult> results;
    std::string corpus_label = "builtin";
    PipelineOptions opts;
};

inline std::vector<TheoremResult> verify_entry(const CorpusEntry& e, const PipelineOptions& opts,
                                               const std::vector<std::string>& ids) {
    std::vector<TheoremResult> out;
    std::unique_ptr<GroupData> gd;
    try {
        gd = build_group(e, opts);
    } catch (const input_error&) {
        throw;
    } catch (const std::exception& ex) {
        for (int p : e.primes) {
            auto f = fail_all_checks(e.name, p, ids, ex.what());
            out.insert(out.end(), f.begin(), f.end());
        }
        return out;
    }
    for (int p : e.primes) {
        try {
            PairData pd = build_pair(*gd, p, opts);
            for (const auto& id : ids) out.push_back(run_one_check(*gd, pd, id));
        } catch (const input_error&) {
            throw;
        } catch (const std::exception& ex) {
            auto f = fail_all_checks(e.name, p, ids, ex.what());
            out.insert(out.end(), f.begin(), f.end());
        }
    }
    return out;
}

inline VerifyRun run_verify(std::vector<CorpusEntry> entries, const PipelineOptions& opts,
                            const std::string& theorem_filter, const std::string& entry_filter,
                            const std::string& corpus_label, unsigned threads = 0) {
    if (!entry_filter.empty()) {
        std::vector<CorpusEntry> kept;
        for (auto& e : entries)
            if (e.name == entry_filter) kept.push_back(std::move(e));
        if (kept.empty()) throw input_error("entry '" + entry_filter + "' not found in the corpus");
        entries = std::move(kept);
    }
    const std::vector<std::string> ids = selected_ids(theorem_filter);

    std::vector<std::vector<TheoremResult>> per_entry(entries.size());
    std::vector<std::exception_ptr> errors(entries.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next.fetch_add(1); i < entries.size(); i = next.fetch_add(1)) {
            try {
                per_entry[i] = verify_entry(entries[i], opts, ids);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    unsigned n = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    n = std::min<unsigned>(n, static_cast<unsigned>(std::max<std::size_t>(entries.size(), 1)));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);

    VerifyRun run;
    run.corpus_label = corpus_label;
    run.opts = opts;
    for (auto& v : per_entry) run.results.insert(run.results.end(), v.begin(), v.end());
    return run;
}

inline int verify_exit_code(const std::vector<TheoremResult>& rs) {
    for (const auto& r : rs)
        if (r.status == "fail" && r.asserted) return 1;
    return 0;
}

}  // namespace blocklab
