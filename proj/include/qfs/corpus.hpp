#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qfs/jobspec.hpp"

namespace qfs {

// Bundled reference computations with their expected values. "expected" uses
// the verdict grammar of HeightResult::verdict_string(), plus
// "verified-up-to-cap" / "refuted" for fixed-point rows and "check-1" /
// "check-2" for the finite non-splitting criteria.
struct CorpusRow {
    std::string id;
    std::string citation;
    JobSpec job;
    std::string expected;
    // non-height rows: candidate fixed-point ideal generators (fixed-point
    // rows run verify_fixed_point; nonsplit rows run nonsplit_checks)
    enum class Kind { Height, FixedPoint, NonsplitCheck } kind = Kind::Height;
    std::vector<std::string> j_gens;
    int64_t cap = 0;
};

struct CorpusOutcome {
    CorpusRow row;
    std::string got;
    bool ok;
    double elapsed_ms;
};

struct CorpusReport {
    std::string name;
    std::vector<CorpusOutcome> outcomes;
    int passed = 0;
    int failed = 0;
};

std::vector<std::string> corpus_names();
std::vector<CorpusRow> corpus_rows(const std::string& name);
CorpusOutcome run_corpus_row(const CorpusRow& row);
CorpusReport run_corpus(const std::string& name, int jobs = 1);

}  // namespace qfs
