#pragma once

// Serialize a verification run as text, TSV, or JSON lines.  Output is fully
// determined by the result records, so repeated runs with equal settings
// render byte-identical reports.

#include <json.hpp>

#include "verify.hpp"

namespace blocklab {

namespace detail {

inline std::string sanitize_tsv(std::string s) {
    for (char& c : s)
        if (c == '\t' || c == '\n' || c == '\r') c = ' ';
    return s;
}

}  // namespace detail

inline std::string render_report(const VerifyRun& run, const std::string& format) {
    std::ostringstream os;
    long long failures = 0;
    for (const auto& r : run.results)
        if (r.status == "fail" && r.asserted) ++failures;

    if (format == "text") {
        os << "verification run: corpus=" << run.corpus_label << " seed=" << run.opts.seed
           << " cap-elements=" << run.opts.cap_elements << " cap-regular=" << run.opts.cap_regular << "\n";
        os << "note: a pair (G,p) has p-length one when O_{p'pp'}(G) = G; the block dimension identity is asserted "
              "for all such pairs\n";
        for (const auto& r : run.results) {
            os << r.group << " p=" << r.p << " " << r.theorem << ": " << r.status << " (" << r.counts << " instances)";
            if (!r.witness.empty()) os << " -- " << r.witness;
            os << "\n";
        }
        os << "summary: " << run.results.size() << " checks, " << failures << " failures\n";
        return os.str();
    }
    if (format == "tsv") {
        os << "group\tp\ttheorem\tstatus\twitness\tcounts\n";
        for (const auto& r : run.results)
            os << r.group << "\t" << r.p << "\t" << r.theorem << "\t" << r.status << "\t"
               << detail::sanitize_tsv(r.witness) << "\t" << r.counts << "\n";
        return os.str();
    }
    if (format == "structured") {
        for (const auto& r : run.results) {
            nlohmann::ordered_json j;
            j["group"] = r.group;
            j["p"] = r.p;
            j["theorem"] = r.theorem;
            j["status"] = r.status;
            j["witness"] = r.witness;
            j["counts"] = r.counts;
            os << j.dump() << "\n";
        }
        return os.str();
    }
    throw input_error("unknown report format '" + format + "' (expected text, tsv or structured)");
}

}  // namespace blocklab
