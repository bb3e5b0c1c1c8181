#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qfs/ci.hpp"
#include "qfs/cy.hpp"
#include "qfs/grading.hpp"
#include "qfs/poly.hpp"

namespace qfs {

enum class JobMode { Auto, CY, Graded, Local };

// One height query: ring data, generators, engine selection and knobs.
// Auto mode picks cy for a single homogeneous generator of degree mu, graded
// when all generators are homogeneous, local otherwise.
struct JobSpec {
    uint64_t p = 2;
    std::vector<std::string> vars;
    std::vector<std::vector<int64_t>> weights;  // empty: standard grading
    std::vector<std::string> gens;
    JobMode mode = JobMode::Auto;
    int64_t degree_cap = 0;
    std::optional<int64_t> max_iter;
    bool user_asserted_regular = false;
    bool trace_degrees = false;
};

struct HeightResult {
    enum class Engine { CY, CI } engine;
    JobMode mode_used;
    JobSpec job;
    std::optional<CYHeightResult> cy;
    std::optional<CIHeightResult> ci;
    double elapsed_ms = 0;

    bool decided() const;
    // "n", "inf", or ">=n" rendering of the verdict
    std::string verdict_string() const;
    int exit_code() const;  // 0 decided, 2 lower bound only
};

Grading grading_from_job(const JobSpec& job);
HeightResult run_job(const JobSpec& job);

// JSON round trip for job files and result files (schema 1).
JobSpec job_from_json_text(const std::string& text);
std::string job_to_json_text(const JobSpec& job);
std::string result_to_json_text(const HeightResult& res, bool include_timings = true);

// Independent replay of a result file: recomputes chains and cycles from raw
// polynomial arithmetic, never trusting slice data.
bool verify_result_json_text(const std::string& text, std::string* why = nullptr);

}  // namespace qfs
