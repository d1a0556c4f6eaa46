// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Criteria 2-5 and 7 read a single full verification run over the default
// corpus; 1 and 6 recompute small cases directly; 8 drives the installed
// CLI binary (path in argv[1]) through the fault-injection switches.
#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "blocklab/blocklab.hpp"

using namespace blocklab;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;
std::vector<std::pair<int, std::string>> g_lines;

void report(int n, const std::string& what, bool ok, const std::string& detail = "") {
    std::string line = "criterion " + std::to_string(n) + " (" + what + "): ";
    line += ok ? "pass" : "FAIL";
    if (!ok && !detail.empty()) line += " -- " + detail;
    g_lines.emplace_back(n, std::move(line));
    if (!ok) ++g_failures;
}

void flush_lines() {
    std::sort(g_lines.begin(), g_lines.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [n, line] : g_lines) std::cout << line << "\n";
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

const CorpusEntry& find_entry(const std::vector<CorpusEntry>& es, const std::string& name) {
    for (const auto& e : es)
        if (e.name == name) return e;
    throw std::runtime_error("missing corpus entry " + name);
}

std::vector<const TheoremResult*> select(const VerifyRun& run, const std::string& id) {
    std::vector<const TheoremResult*> out;
    for (const auto& r : run.results)
        if (r.theorem == id) out.push_back(&r);
    return out;
}

// ---- criterion 1: frozen modular data for S4 at p = 3 ----------------------

bool check_s4_frozen(std::string& err) {
    auto es = default_corpus();
    const auto& e = find_entry(es, "S4");
    auto G = PermGroup::from_generators(e.degree, e.gens);
    auto T = compute_character_table(G);
    auto emb = make_root_embedding(splitting_field(G, 3), T.basis);
    auto BS = compute_block_partition(G, 3, T, emb);
    auto B = compute_brauer_table(G, 3, 0);
    auto dec = compute_decomposition(T, B);
    attach_ibr(BS, T, B, dec);

    auto fail = [&](const std::string& m) {
        err = m;
        return false;
    };
    std::vector<long long> degs;
    for (int i = 0; i < T.size(); ++i) degs.push_back(T.degree(i));
    if (degs != std::vector<long long>{1, 1, 2, 3, 3}) return fail("ordinary degrees");
    if (BS.blocks.size() != 3) return fail("block count");
    const Block& b0 = BS.blocks[0];
    if (!b0.principal || b0.irr != std::vector<int>{0, 1, 2} || b0.ibr != std::vector<int>{0, 1})
        return fail("principal block membership");
    if (b0.defect != 1 || b0.defect_group_order != 3) return fail("principal defect");
    if (b0.cartan != std::vector<std::vector<long long>>{{2, 1}, {1, 2}})
        return fail("principal Cartan matrix");
    if (b0.dim_sum != 6 || block_dimension_rank(G, T, emb, b0) != 6)
        return fail("principal block dimension");
    for (int b : {1, 2}) {
        const Block& blk = BS.blocks[b];
        if (blk.defect != 0 || blk.dim_sum != 9 || blk.irr.size() != 1 || blk.ibr.size() != 1)
            return fail("defect-zero block " + std::to_string(b));
        if (block_dimension_rank(G, T, emb, blk) != 9)
            return fail("defect-zero rank " + std::to_string(b));
    }
    if (dec.D != std::vector<std::vector<long long>>{
                     {1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})
        return fail("decomposition matrix");
    return true;
}

// ---- criterion 6: independent oracles on small pairs -----------------------

bool check_oracles(std::string& err) {
    auto es = default_corpus();
    auto fail = [&](const std::string& m) {
        err = m;
        return false;
    };
    for (auto [name, p] : {std::pair<const char*, int>{"S3", 3}, {"S4", 3}, {"SL23", 3},
                           {"A4", 2}, {"C6", 2}}) {
        auto G = PermGroup::from_generators(find_entry(es, name).degree, find_entry(es, name).gens);
        auto T = compute_character_table(G);
        std::string tag = std::string(name) + " mod " + std::to_string(p) + ": ";
        if (!orthogonality_violations(T).empty()) return fail(tag + "orthogonality");
        long long sq = 0;
        for (int i = 0; i < T.size(); ++i) sq += T.degree(i) * T.degree(i);
        if (sq != G.order()) return fail(tag + "degree squares");

        auto emb = make_root_embedding(splitting_field(G, p), T.basis);
        auto BS = compute_block_partition(G, p, T, emb);
        auto B = compute_brauer_table(G, p, 0);
        if (B.size() != static_cast<int>(p_regular_classes(G, p).size()))
            return fail(tag + "simple count");
        auto dec = compute_decomposition(T, B);
        attach_ibr(BS, T, B, dec);

        long long weighted = 0;
        for (const auto& blk : BS.blocks)
            for (std::size_t i = 0; i < blk.ibr.size(); ++i)
                for (std::size_t j = 0; j < blk.ibr.size(); ++j)
                    weighted += B.degree(blk.ibr[i]) * blk.cartan[i][j] * B.degree(blk.ibr[j]);
        if (weighted != G.order()) return fail(tag + "weighted Cartan sum");

        auto comp = linkage_partition(T, B, dec);
        for (int chi = 0; chi < T.size(); ++chi)
            for (int psi = 0; psi < T.size(); ++psi)
                if ((comp[chi] == comp[psi]) != (BS.block_of_irr[chi] == BS.block_of_irr[psi]))
                    return fail(tag + "linkage vs central characters");

        auto M = regular_module(G, B.F);
        auto f1 = chop(M, 7777);
        auto f2 = chop(M, 7777);
        if (f1.size() != f2.size()) return fail(tag + "chop determinism (count)");
        for (std::size_t i = 0; i < f1.size(); ++i)
            for (std::size_t k = 0; k < f1[i].gens.size(); ++k)
                if (!(f1[i].gens[k] == f2[i].gens[k])) return fail(tag + "chop determinism");
    }
    return true;
}

// ---- criterion 8: CLI fault injection --------------------------------------

bool run_cli(const std::string& bin, const std::string& args, int want_exit, std::string& output,
             std::string& err) {
    std::string outfile = "acceptance_cli_out.txt";
    std::string cmd = "\"" + bin + "\" " + args + " > " + outfile + " 2>&1";
    int raw = std::system(cmd.c_str());
    int code = (raw != -1 && WIFEXITED(raw)) ? WEXITSTATUS(raw) : -1;
    std::ifstream f(outfile);
    std::stringstream ss;
    ss << f.rdbuf();
    output = ss.str();
    if (code != want_exit) {
        err = "command '" + args + "' exited " + std::to_string(code) + ", expected " +
              std::to_string(want_exit);
        return false;
    }
    return true;
}

bool check_cli_faults(const std::string& bin, std::string& err) {
    std::string out;
    if (!run_cli(bin, "verify --entry S3", 0, out, err)) return false;
    if (out.find("summary:") == std::string::npos) {
        err = "clean run output lacks a summary line";
        return false;
    }
    for (const char* fault : {"perturb-char", "misassign-block"}) {
        if (!run_cli(bin, std::string("verify --entry S4 --inject-fault ") + fault, 1, out, err))
            return false;
        if (out.find("fail") == std::string::npos || out.find("replay") == std::string::npos) {
            err = std::string(fault) + " output lacks fail/replay markers";
            return false;
        }
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli-binary>\n";
        return 2;
    }
    const std::string cli = argv[1];
    std::string err;

    // criterion 1
    auto t1 = Clock::now();
    bool ok1 = false;
    try {
        ok1 = check_s4_frozen(err);
    } catch (const std::exception& ex) {
        err = ex.what();
    }
    double dt1 = seconds_since(t1);
    if (ok1 && dt1 >= 10.0) {
        ok1 = false;
        err = "took " + std::to_string(dt1) + " s, budget is 10 s";
    }
    report(1, "frozen modular data for S4 at p=3 within 10 s", ok1, err);

    // the shared full run
    auto t0 = Clock::now();
    VerifyRun run;
    bool run_ok = true;
    try {
        run = run_verify(default_corpus(), PipelineOptions{}, "", "", "default", 0);
    } catch (const std::exception& ex) {
        run_ok = false;
        err = ex.what();
    }
    double full_seconds = seconds_since(t0);
    if (!run_ok) {
        for (int n : {2, 3, 4, 5, 7}) report(n, "full corpus run", false, err);
    } else {
        // criterion 2: the two structural equivalences hold with real positive
        // and negative instances on both sides
        {
            bool ok = full_seconds < 300.0;
            std::string detail = ok ? "" : "full run took " + std::to_string(full_seconds) + " s";
            int pos = 0, neg = 0;
            for (const auto& id : {"2.4a", "2.4b"}) {
                for (const TheoremResult* r : select(run, id)) {
                    if (r->status == "fail") {
                        ok = false;
                        detail = r->group + " p=" + std::to_string(r->p) + " " + id;
                    }
                    if (r->witness.find("positive instance") != std::string::npos) ++pos;
                    if (r->witness.find("negative instance") != std::string::npos) ++neg;
                }
            }
            if (pos < 3 || neg < 3) {
                ok = false;
                detail = "instance counts " + std::to_string(pos) + "+/" + std::to_string(neg) + "-";
            }
            report(2, "equivalences 2.4a/2.4b verified with >=3 instances each way", ok, detail);
        }

        // criterion 3: the dimension identities run exactly on the pairs whose
        // p-series closes after one step, and never fail
        {
            bool ok = true;
            std::string detail;
            std::map<std::pair<std::string, int>, bool> plen;
            for (const auto& e : default_corpus()) {
                auto G = PermGroup::from_generators(e.degree, e.gens);
                for (int p : e.primes) plen[{e.name, p}] = upper_p_series(G, p).p_length_one;
            }
            for (const TheoremResult* r : select(run, "2.6")) {
                bool expect = plen.at({r->group, r->p});
                bool ran = r->status != "vacuous" || r->witness.find("p-length") == std::string::npos;
                if (r->status == "fail" || r->status == "skipped") {
                    ok = false;
                    detail = r->group + " p=" + std::to_string(r->p) + " status " + r->status;
                } else if (expect != ran) {
                    ok = false;
                    detail = r->group + " p=" + std::to_string(r->p) + " p-length mismatch";
                }
            }
            for (const TheoremResult* r : select(run, "2.5"))
                if (r->status == "fail") {
                    ok = false;
                    detail = "2.5 fails on " + r->group;
                }
            report(3, "dimension identity 2.6 runs exactly on p-length-one pairs", ok, detail);
        }

        // criterion 4: root-of-unity multiplicity statements
        {
            bool ok = true;
            std::string detail;
            for (const auto& id : {"1.3", "1.4"})
                for (const TheoremResult* r : select(run, id))
                    if (r->status == "fail") {
                        ok = false;
                        detail = r->group + " p=" + std::to_string(r->p) + " " + id;
                    }
            auto status_of = [&](const std::string& id, const std::string& g, int p) {
                for (const TheoremResult* r : select(run, id))
                    if (r->group == g && r->p == p) return r->status;
                return std::string("missing");
            };
            if (status_of("1.4", "S4", 3) != "vacuous") {
                ok = false;
                detail = "S4 p=3 1.4 should be vacuous";
            }
            if (status_of("1.4", "S5", 3) != "pass") {
                ok = false;
                detail = "S5 p=3 1.4 should pass non-vacuously";
            }
            report(4, "order/zero statements 1.3 and 1.4 incl. a live 1.4 witness", ok, detail);
        }

        // criterion 5: twist invariance and kernel identifications
        {
            bool ok = true;
            std::string detail;
            for (const auto& id : {"1.1", "eq-2.1", "eq-2.2", "2.1", "2.2", "2.3", "kernel-ids"})
                for (const TheoremResult* r : select(run, id))
                    if (r->status == "fail" || r->status == "skipped") {
                        ok = false;
                        detail = r->group + " p=" + std::to_string(r->p) + " " + id + " " + r->status;
                    }
            report(5, "twist/kernel checks clean and never skipped", ok, detail);
        }

        // criterion 7: the dimension bound is informative off its hypothesis
        {
            bool ok = true;
            std::string detail;
            int informative = 0;
            for (const TheoremResult* r : select(run, "HW")) {
                bool nonsolvable = r->group == "A5" || r->group == "S5";
                if (r->status == "fail" && r->asserted) {
                    ok = false;
                    detail = "asserted HW failure on " + r->group;
                }
                if (nonsolvable) {
                    ++informative;
                    if (r->asserted || r->witness.find("informative only") == std::string::npos) {
                        ok = false;
                        detail = r->group + " p=" + std::to_string(r->p) + " not informative";
                    }
                } else if (!r->asserted) {
                    ok = false;
                    detail = r->group + " p=" + std::to_string(r->p) + " should be asserted";
                }
            }
            if (informative != 6) {
                ok = false;
                detail = "expected 6 informative rows, saw " + std::to_string(informative);
            }
            report(7, "dimension bound asserted when p-solvable, informative otherwise", ok,
                   detail);
        }
    }

    // criterion 6
    err.clear();
    bool ok6 = false;
    try {
        ok6 = check_oracles(err);
    } catch (const std::exception& ex) {
        err = ex.what();
    }
    report(6, "independent oracles on five small pairs", ok6, err);

    // criterion 8
    err.clear();
    bool ok8 = false;
    try {
        ok8 = check_cli_faults(cli, err);
    } catch (const std::exception& ex) {
        err = ex.what();
    }
    report(8, "CLI fault injection yields exit 1 with replay hints", ok8, err);

    flush_lines();
    std::cout << "full corpus run: " << run.results.size() << " records in " << full_seconds
              << " s\n";
    if (g_failures) {
        std::cout << g_failures << " criteria failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
