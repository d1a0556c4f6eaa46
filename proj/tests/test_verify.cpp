// Corpus parsing, the verification driver, report rendering, exit codes,
// and the fault-injection self-checks.
#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "blocklab/blocklab.hpp"

using namespace blocklab;

namespace {

const CorpusEntry& find_entry(const std::vector<CorpusEntry>& es, const std::string& name) {
    for (const auto& e : es)
        if (e.name == name) return e;
    throw std::runtime_error("missing entry " + name);
}

std::map<std::string, TheoremResult> by_theorem(const std::vector<TheoremResult>& rs,
                                                const std::string& group, int p) {
    std::map<std::string, TheoremResult> out;
    for (const auto& r : rs)
        if (r.group == group && r.p == p) out[r.theorem] = r;
    return out;
}

}  // namespace

TEST_CASE("corpus text parses names, degrees, generators and primes") {
    std::string text =
        "# a comment line\n"
        "\n"
        "S3 | 3 | (0 1), (0 1 2) | 2, 3\n"
        "  K4|4|(0 1)(2 3),(0 2)(1 3)|2\n";
    auto es = load_corpus_text(text);
    REQUIRE(es.size() == 2);
    REQUIRE(es[0].name == "S3");
    REQUIRE(es[0].degree == 3);
    REQUIRE(es[0].gens.size() == 2);
    REQUIRE(es[0].gens[1].to_cycles() == "(0 1 2)");
    REQUIRE(es[0].primes == std::vector<int>{2, 3});
    REQUIRE(es[0].line == 3);
    REQUIRE(es[1].name == "K4");
    REQUIRE(es[1].line == 4);
}

TEST_CASE("corpus parser reports the offending line") {
    auto expect_error = [](const std::string& text, const std::string& fragment) {
        try {
            load_corpus_text(text);
            FAIL("expected input_error for: " << text);
        } catch (const input_error& ex) {
            INFO(ex.what());
            REQUIRE(std::string(ex.what()).find(fragment) != std::string::npos);
        }
    };
    expect_error("just one field\n", "line 1");
    expect_error("A | 2 | (0 1)\n", "line 1");
    expect_error(" | 2 | (0 1) | 2\n", "name");
    expect_error("A | x | (0 1) | 2\n", "degree");
    expect_error("A | 2 | | 2\n", "generator");
    expect_error("A | 2 | (0 5) | 2\n", "degree");
    expect_error("A | 2 | (0 1) | 4\n", "prime");
    expect_error("A | 2 | (0 1) | 2, 2\n", "prime");
    expect_error("A | 2 | (0 1) |\n", "prime");
    expect_error("A | 2 | (0 1) | 2\nA | 2 | (0 1) | 3\n", "duplicate");
    expect_error("A | 2 | (0 1) | 2\n\nB | 1x | (0) | 2\n", "line 3");
}

TEST_CASE("the default corpus is the shipped corpus file") {
    auto es = default_corpus();
    REQUIRE(es.size() == 12);
    int pairs = 0;
    for (const auto& e : es) pairs += static_cast<int>(e.primes.size());
    REQUIRE(pairs == 23);
    REQUIRE(es.front().name == "C2");
    REQUIRE(es.back().name == "S5");

    // the file in data/ must stay in sync with the built-in text
    std::ifstream f(CORPUS_FILE);
    REQUIRE(f.good());
    std::stringstream ss;
    ss << f.rdbuf();
    REQUIRE(ss.str() == default_corpus_text());
}

TEST_CASE("check catalog is fixed and ordered") {
    REQUIRE(theorem_ids() ==
            std::vector<std::string>{"1.1", "1.2", "1.3", "1.4", "2.1", "2.2", "2.3", "2.4a",
                                     "2.4b", "2.5", "2.6", "HW", "bcd1", "kernel-ids", "eq-2.1",
                                     "eq-2.2"});
    REQUIRE(selected_ids("") == theorem_ids());
    REQUIRE(selected_ids("2.4a") == std::vector<std::string>{"2.4a"});
    REQUIRE_THROWS_AS(selected_ids("3.1"), input_error);
    // only the ordinary-side criterion survives without modular data
    for (const auto& id : theorem_ids()) REQUIRE(theorem_needs_modular(id) == (id != "2.4a"));
}

TEST_CASE("verification of S3 and S4, frozen statuses") {
    auto es = default_corpus();
    PipelineOptions opts;
    auto run3 = run_verify({find_entry(es, "S3")}, opts, "", "", "inline", 1);
    REQUIRE(run3.results.size() == 32);  // two primes, sixteen checks

    auto s3p2 = by_theorem(run3.results, "S3", 2);
    REQUIRE(s3p2.at("1.1").status == "pass");
    REQUIRE(s3p2.at("1.1").counts == 2);
    REQUIRE(s3p2.at("1.2").counts == 15);
    REQUIRE(s3p2.at("1.3").status == "vacuous");
    REQUIRE(s3p2.at("1.4").status == "vacuous");
    REQUIRE(s3p2.at("2.4a").witness == "positive instance: both sides hold");
    REQUIRE(s3p2.at("2.4b").witness == "positive instance: both sides hold");
    REQUIRE(s3p2.at("bcd1").witness == "negative instance: both sides fail");
    REQUIRE(s3p2.at("kernel-ids").counts == 7);

    auto s3p3 = by_theorem(run3.results, "S3", 3);
    REQUIRE(s3p3.at("1.2").counts == 35);
    REQUIRE(s3p3.at("1.3").status == "pass");
    REQUIRE(s3p3.at("1.3").counts == 2);
    REQUIRE(s3p3.at("2.4a").witness == "negative instance: both sides fail");
    REQUIRE(s3p3.at("bcd1").witness == "positive instance: both sides hold");
    REQUIRE(s3p3.at("eq-2.1").counts == 6);
    for (const auto& [id, r] : s3p3) {
        INFO(id);
        REQUIRE((r.status == "pass" || r.status == "vacuous"));
        REQUIRE(r.asserted);
    }
    REQUIRE(verify_exit_code(run3.results) == 0);

    auto run4 = run_verify({find_entry(es, "S4")}, opts, "", "", "inline", 1);
    auto s4p2 = by_theorem(run4.results, "S4", 2);
    REQUIRE(s4p2.at("2.3").status == "vacuous");
    REQUIRE(s4p2.at("2.5").status == "vacuous");
    REQUIRE(s4p2.at("2.6").status == "vacuous");
    REQUIRE(s4p2.at("2.6").witness == "the pair does not have p-length one");
    auto s4p3 = by_theorem(run4.results, "S4", 3);
    REQUIRE(s4p3.at("1.3").counts == 8);
    REQUIRE(s4p3.at("1.4").status == "vacuous");
    REQUIRE(s4p3.at("2.5").counts == 3);
    REQUIRE(s4p3.at("2.4b").witness == "positive instance: both sides hold");
}

TEST_CASE("theorem and entry filters restrict the run") {
    auto es = default_corpus();
    PipelineOptions opts;
    auto run = run_verify({find_entry(es, "S3")}, opts, "1.2", "", "inline", 1);
    REQUIRE(run.results.size() == 2);
    for (const auto& r : run.results) REQUIRE(r.theorem == "1.2");

    auto both = run_verify(es, opts, "2.4a", "C6", "inline", 1);
    REQUIRE(both.results.size() == 2);
    for (const auto& r : both.results) {
        REQUIRE(r.group == "C6");
        REQUIRE(r.status == "pass");
        REQUIRE(r.witness == "positive instance: both sides hold");
    }

    REQUIRE_THROWS_AS(run_verify(es, opts, "", "nope", "inline", 1), input_error);
    REQUIRE_THROWS_AS(run_verify(es, opts, "zzz", "", "inline", 1), input_error);
}

TEST_CASE("report formats") {
    auto es = default_corpus();
    PipelineOptions opts;
    opts.seed = 5;
    auto run = run_verify({find_entry(es, "S3")}, opts, "", "", "demo-corpus", 1);

    SECTION("text") {
        auto text = render_report(run, "text");
        REQUIRE(text.find("verification run: corpus=demo-corpus seed=5") != std::string::npos);
        REQUIRE(text.find("S3 p=2 1.1: pass (2 instances)") != std::string::npos);
        REQUIRE(text.find("summary: 32 checks, 0 failures") != std::string::npos);
    }
    SECTION("tsv") {
        auto tsv = render_report(run, "tsv");
        std::istringstream is(tsv);
        std::string line;
        std::getline(is, line);
        REQUIRE(line == "group\tp\ttheorem\tstatus\twitness\tcounts");
        int rows = 0;
        while (std::getline(is, line)) {
            ++rows;
            REQUIRE(std::count(line.begin(), line.end(), '\t') == 5);
        }
        REQUIRE(rows == 32);
    }
    SECTION("structured") {
        auto out = render_report(run, "structured");
        std::istringstream is(out);
        std::string line;
        int rows = 0;
        while (std::getline(is, line)) {
            auto j = nlohmann::ordered_json::parse(line);
            std::vector<std::string> keys;
            for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
            REQUIRE(keys == std::vector<std::string>{"group", "p", "theorem", "status", "witness",
                                                     "counts"});
            REQUIRE(j["group"] == "S3");
            REQUIRE(j["p"].is_number_integer());
            REQUIRE(j["counts"].is_number_integer());
            ++rows;
        }
        REQUIRE(rows == 32);
    }
    SECTION("unknown format") {
        REQUIRE_THROWS_AS(render_report(run, "xml"), input_error);
    }
}

TEST_CASE("exit code logic distinguishes asserted failures") {
    std::vector<TheoremResult> rs;
    rs.push_back({"G", 2, "1.1", "pass", "", 1, true});
    rs.push_back({"G", 2, "1.2", "vacuous", "", 0, true});
    rs.push_back({"G", 2, "1.3", "skipped", "", 0, true});
    REQUIRE(verify_exit_code(rs) == 0);
    rs.push_back({"G", 2, "HW", "fail", "informative only", 1, false});
    REQUIRE(verify_exit_code(rs) == 0);  // unasserted failures do not gate
    rs.push_back({"G", 2, "2.1", "fail", "boom", 1, true});
    REQUIRE(verify_exit_code(rs) == 1);
}

TEST_CASE("fault injection trips the pipeline self-checks") {
    auto es = default_corpus();
    REQUIRE(parse_fault("") == Fault::none);
    REQUIRE(parse_fault("perturb-char") == Fault::perturb_char);
    REQUIRE(parse_fault("misassign-block") == Fault::misassign_block);
    REQUIRE_THROWS_AS(parse_fault("nonsense"), input_error);

    PipelineOptions opts;
    opts.fault = Fault::perturb_char;
    {
        auto gd = build_group(find_entry(es, "S3"), opts);
        REQUIRE_THROWS_AS(build_pair(*gd, 3, opts), internal_error);
        try {
            build_pair(*gd, 3, opts);
        } catch (const internal_error& ex) {
            REQUIRE(std::string(ex.what()).find("character table") != std::string::npos);
        }
    }
    opts.fault = Fault::misassign_block;
    {
        auto gd = build_group(find_entry(es, "S4"), opts);
        REQUIRE_THROWS_AS(build_pair(*gd, 3, opts), internal_error);
    }

    // the driver converts the self-check abort into failed records
    for (const char* fault : {"perturb-char", "misassign-block"}) {
        PipelineOptions fopts;
        fopts.fault = parse_fault(fault);
        auto run = run_verify({find_entry(es, "S4")}, fopts, "", "", "inline", 1);
        REQUIRE(run.results.size() == 32);
        for (const auto& r : run.results) {
            REQUIRE(r.status == "fail");
            REQUIRE(r.asserted);
            REQUIRE(r.witness.find("pipeline self-check failed") != std::string::npos);
            REQUIRE(r.witness.find("replay: blocklab verify --entry S4 --theorem " + r.theorem) !=
                    std::string::npos);
        }
        REQUIRE(verify_exit_code(run.results) == 1);
    }
}

TEST_CASE("group size caps abort with an input error") {
    // S7 would need 5040 elements, far over the cap
    auto es = load_corpus_text("S7 | 7 | (0 1), (0 1 2 3 4 5 6) | 2\n");
    PipelineOptions opts;
    opts.cap_elements = 1000;
    REQUIRE_THROWS_AS(run_verify(es, opts, "", "", "inline", 1), input_error);
}

TEST_CASE("groups over the regular-module cap skip modular checks") {
    auto es = default_corpus();
    PipelineOptions opts;
    opts.cap_regular = 20;  // S4 has 24 elements
    auto run = run_verify({find_entry(es, "S4")}, opts, "", "", "inline", 1);
    for (const auto& r : run.results) {
        if (r.theorem == "2.4a") {
            REQUIRE(r.status == "pass");
        } else {
            REQUIRE(r.status == "skipped");
            REQUIRE(r.witness.find("regular-module cap") != std::string::npos);
        }
    }
    REQUIRE(verify_exit_code(run.results) == 0);
}

TEST_CASE("threaded runs render identically") {
    auto es = default_corpus();
    std::vector<CorpusEntry> subset{find_entry(es, "S3"), find_entry(es, "A4"),
                                    find_entry(es, "SL23"), find_entry(es, "C6")};
    PipelineOptions opts;
    auto a = render_report(run_verify(subset, opts, "", "", "corpus", 4), "structured");
    auto b = render_report(run_verify(subset, opts, "", "", "corpus", 4), "structured");
    REQUIRE(a == b);
    // results arrive in corpus order regardless of thread scheduling
    auto run = run_verify(subset, opts, "", "", "corpus", 3);
    std::vector<std::string> groups;
    for (const auto& r : run.results)
        if (groups.empty() || groups.back() != r.group) groups.push_back(r.group);
    REQUIRE(groups == std::vector<std::string>{"S3", "A4", "SL23", "C6"});
}
