#pragma once

// Corpus files: one group per line,
//   name | degree | generators (cycle notation, comma separated) | primes
// '#' starts a comment, blank lines are skipped.

#include <fstream>
#include <sstream>

#include "permutation.hpp"

namespace blocklab {

struct CorpusEntry {
    std::string name;
    int degree = 0;
    std::vector<Permutation> gens;
    std::vector<int> primes;
    int line = 0;
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace detail

inline std::vector<CorpusEntry> load_corpus_text(const std::string& text) {
    std::vector<CorpusEntry> out;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    auto fail = [&](const std::string& msg) { throw input_error("corpus line " + std::to_string(lineno) + ": " + msg); };
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;

        auto fields = detail::split(line, '|');
        if (fields.size() != 4) fail("expected 4 '|'-separated fields, got " + std::to_string(fields.size()));
        CorpusEntry e;
        e.line = lineno;
        e.name = detail::trim(fields[0]);
        if (e.name.empty()) fail("empty group name");
        for (const auto& prev : out)
            if (prev.name == e.name) fail("duplicate group name '" + e.name + "'");

        try {
            std::size_t used = 0;
            e.degree = std::stoi(detail::trim(fields[1]), &used);
            if (used != detail::trim(fields[1]).size()) throw std::invalid_argument("trailing junk");
        } catch (const std::exception&) {
            fail("degree is not an integer: '" + detail::trim(fields[1]) + "'");
        }
        if (e.degree < 1) fail("degree must be at least 1");

        for (const auto& g : detail::split(fields[2], ',')) {
            std::string gt = detail::trim(g);
            if (gt.empty()) fail("empty generator");
            try {
                e.gens.push_back(parse_cycles(gt, e.degree));
            } catch (const input_error& ex) {
                fail(std::string("bad generator '") + gt + "': " + ex.what());
            }
        }
        if (e.gens.empty()) fail("no generators");

        for (const auto& ps : detail::split(fields[3], ',')) {
            std::string pt = detail::trim(ps);
            if (pt.empty()) fail("empty prime");
            long long p = 0;
            try {
                std::size_t used = 0;
                p = std::stoll(pt, &used);
                if (used != pt.size()) throw std::invalid_argument("trailing junk");
            } catch (const std::exception&) {
                fail("prime is not an integer: '" + pt + "'");
            }
            if (!is_prime(p)) fail("'" + pt + "' is not prime");
            for (int q : e.primes)
                if (q == p) fail("duplicate prime " + pt);
            e.primes.push_back(static_cast<int>(p));
        }
        if (e.primes.empty()) fail("no primes");
        out.push_back(std::move(e));
    }
    return out;
}

inline std::vector<CorpusEntry> load_corpus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open corpus file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_corpus_text(ss.str());
}

// groups exercised by default: every prime dividing each order is listed
inline const char* default_corpus_text() {
    return R"(# default corpus: name | degree | generators | primes
C2     | 2 | (0 1)                            | 2
C6     | 6 | (0 1 2 3 4 5)                    | 2, 3
S3     | 3 | (0 1), (0 1 2)                   | 2, 3
D4     | 4 | (0 1 2 3), (0 2)                 | 2
Q8     | 8 | (0 2 1 3)(4 7 5 6), (0 4 1 5)(2 6 3 7) | 2
A4     | 4 | (0 1 2), (0 1)(2 3)              | 2, 3
S4     | 4 | (0 1), (0 1 2 3)                 | 2, 3
SL23   | 8 | (0 3 6)(1 7 4), (0 5 1 2)(3 6 7 4) | 2, 3
C7sC3  | 7 | (0 1 2 3 4 5 6), (1 2 4)(3 6 5)  | 3, 7
C3xS3  | 6 | (0 1 2), (3 4), (3 4 5)          | 2, 3
A5     | 5 | (0 1 2 3 4), (0 1 2)             | 2, 3, 5
S5     | 5 | (0 1), (0 1 2 3 4)               | 2, 3, 5
)";
}

inline std::vector<CorpusEntry> default_corpus() { return load_corpus_text(default_corpus_text()); }

}  // namespace blocklab
