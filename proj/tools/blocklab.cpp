// Command line front end.
//
// Exit codes: 0 all requested checks pass (or informational subcommands
// succeed), 1 a check failed (or an internal inconsistency was detected),
// 2 malformed input.

#include <CLI11.hpp>
#include <iostream>

#include <blocklab/blocklab.hpp>

namespace {

using namespace blocklab;

std::vector<CorpusEntry> load_entries(const std::string& corpus_path) {
    return corpus_path.empty() ? default_corpus() : load_corpus_file(corpus_path);
}

CorpusEntry find_entry(const std::string& corpus_path, const std::string& name) {
    for (auto& e : load_entries(corpus_path))
        if (e.name == name) return e;
    throw input_error("entry '" + name + "' not found in the corpus");
}

void print_matrix(const std::vector<std::vector<long long>>& M, const std::string& indent) {
    for (const auto& row : M) {
        std::cout << indent << "[";
        for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "") << row[j];
        std::cout << "]\n";
    }
}

void print_classes(const PermGroup& G) {
    std::cout << "classes (" << G.num_classes() << "):\n";
    for (int c = 0; c < G.num_classes(); ++c) {
        const auto& cl = G.classes()[c];
        std::cout << "  class " << c << ": size " << cl.size << ", element order " << cl.element_order << ", rep "
                  << G.element(cl.representative).to_cycles() << "\n";
    }
}

int cmd_table(const std::string& corpus_path, const std::string& entry_name, const PipelineOptions& opts) {
    auto gd = build_group(find_entry(corpus_path, entry_name), opts);
    const PermGroup& G = gd->G;
    std::cout << "group " << gd->entry.name << ": order " << G.order() << ", exponent " << G.exponent() << "\n";
    print_classes(G);
    std::cout << "ordinary character table (rows sorted by degree, then values):\n";
    for (int i = 0; i < gd->T.size(); ++i) {
        std::cout << "  chi_" << i << " (degree " << gd->T.degree(i) << "):";
        for (int c = 0; c < G.num_classes(); ++c) std::cout << "  " << gd->T.value(i, c).to_string();
        std::cout << "\n";
    }
    return 0;
}

int cmd_blocks(const std::string& corpus_path, const std::string& entry_name, int p, const PipelineOptions& opts) {
    auto gd = build_group(find_entry(corpus_path, entry_name), opts);
    PairData pd = build_pair(*gd, p, opts);
    std::cout << "group " << gd->entry.name << ", p=" << p << ": " << pd.BS.blocks.size() << " block(s)\n";
    for (const auto& blk : pd.BS.blocks) {
        std::cout << "block " << blk.id << (blk.principal ? " (principal)" : "") << ": defect " << blk.defect
                  << ", defect group order " << blk.defect_group_order << ", dimension " << blk.dim_sum << "\n";
        std::cout << "  ordinary characters:";
        for (int chi : blk.irr) std::cout << " chi_" << chi << "(deg " << pd.T.degree(chi) << ")";
        std::cout << "\n";
        if (pd.modular) {
            std::cout << "  Brauer characters:";
            for (int phi : blk.ibr) std::cout << " phi_" << phi << "(deg " << pd.BT->degree(phi) << ")";
            std::cout << "\n  dimension by idempotent rank: " << blk.dim_rank << "\n  Cartan matrix:\n";
            print_matrix(blk.cartan, "    ");
        }
    }
    if (!pd.modular) std::cout << "(modular side skipped: group order exceeds the regular-module cap)\n";
    return 0;
}

int cmd_ibr(const std::string& corpus_path, const std::string& entry_name, int p, const PipelineOptions& opts) {
    auto gd = build_group(find_entry(corpus_path, entry_name), opts);
    PairData pd = build_pair(*gd, p, opts);
    if (!pd.modular) {
        std::cout << "(modular side skipped: group order exceeds the regular-module cap)\n";
        return 0;
    }
    const BrauerTable& B = *pd.BT;
    std::cout << "group " << gd->entry.name << ", p=" << p << ": splitting field GF(" << B.F->q() << "), "
              << B.reg_classes.size() << " p-regular class(es)\n";
    std::cout << "p-regular classes:";
    for (int c : B.reg_classes) std::cout << " " << c;
    std::cout << "\nBrauer character table:\n";
    for (int i = 0; i < B.size(); ++i) {
        std::cout << "  phi_" << i << " (degree " << B.degree(i) << "):";
        for (std::size_t j = 0; j < B.reg_classes.size(); ++j) std::cout << "  " << B.rows[i][j].to_string();
        std::cout << "\n";
    }
    std::cout << "decomposition matrix (rows = ordinary characters):\n";
    print_matrix(pd.dec->D, "  ");
    return 0;
}

int cmd_verify(const std::string& corpus_path, const std::string& theorem, const std::string& entry,
               const std::string& format, const PipelineOptions& opts) {
    VerifyRun run = run_verify(load_entries(corpus_path), opts, theorem, entry,
                               corpus_path.empty() ? std::string("builtin") : corpus_path);
    std::cout << render_report(run, format);
    return verify_exit_code(run.results);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"blocklab: block-theoretic invariants of small permutation groups"};
    app.require_subcommand(1);

    std::string corpus_path, entry_name, theorem_filter, entry_filter, format = "text", fault;
    int p = 0;
    PipelineOptions opts;

    auto* t = app.add_subcommand("table", "print the ordinary character table of a corpus entry");
    t->add_option("entry", entry_name, "corpus entry name")->required();
    t->add_option("--corpus", corpus_path, "corpus file (default: builtin corpus)");

    auto* b = app.add_subcommand("blocks", "print the p-block structure of a corpus entry");
    b->add_option("entry", entry_name, "corpus entry name")->required();
    b->add_option("-p,--prime", p, "prime")->required();
    b->add_option("--corpus", corpus_path, "corpus file (default: builtin corpus)");
    b->add_option("--seed", opts.seed, "base seed for randomized module algorithms");

    auto* i = app.add_subcommand("ibr", "print the Brauer character table of a corpus entry");
    i->add_option("entry", entry_name, "corpus entry name")->required();
    i->add_option("-p,--prime", p, "prime")->required();
    i->add_option("--corpus", corpus_path, "corpus file (default: builtin corpus)");
    i->add_option("--seed", opts.seed, "base seed for randomized module algorithms");

    auto* v = app.add_subcommand("verify", "run the check catalog over a corpus");
    v->add_option("--corpus", corpus_path, "corpus file (default: builtin corpus)");
    v->add_option("--theorem", theorem_filter, "restrict to one check id");
    v->add_option("--entry", entry_filter, "restrict to one corpus entry");
    v->add_option("--format", format, "report format: text, tsv or structured")->default_val("text");
    v->add_option("--seed", opts.seed, "base seed for randomized module algorithms");
    v->add_option("--cap-elements", opts.cap_elements, "largest allowed group order");
    v->add_option("--cap-regular", opts.cap_regular, "largest order for which the modular side runs");
    v->add_option("--inject-fault", fault)->group("");  // negative-control hook, hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        opts.fault = blocklab::parse_fault(fault);
        if (t->parsed()) return cmd_table(corpus_path, entry_name, opts);
        if (b->parsed()) return cmd_blocks(corpus_path, entry_name, p, opts);
        if (i->parsed()) return cmd_ibr(corpus_path, entry_name, p, opts);
        if (v->parsed()) return cmd_verify(corpus_path, theorem_filter, entry_filter, format, opts);
    } catch (const blocklab::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
