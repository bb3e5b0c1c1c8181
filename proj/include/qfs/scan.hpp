#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qfs/jobspec.hpp"

namespace qfs {

// Enumerates F_p assignments to the placeholder coefficients of a template
// polynomial and runs the Calabi-Yau engine on each instance. Placeholders
// are the identifiers of the template that are not (products of) declared
// variables; assignment index i maps to base-p digits of i, first placeholder
// least significant.
struct ScanSpec {
    std::string template_text;
    uint64_t p = 2;
    std::vector<std::string> vars;
    std::vector<std::vector<int64_t>> weights;
    std::vector<std::string> target_heights;  // verdict strings; empty = stream all
    uint64_t start_index = 0;
    std::optional<uint64_t> limit;
    std::optional<int64_t> max_iter;
    int jobs = 1;
};

struct ScanHit {
    uint64_t index;
    std::vector<uint64_t> assignment;
    std::string verdict;  // "n", "inf", ">n", or "skipped-zero"
};

struct ScanInfo {
    std::vector<std::string> placeholders;
    uint64_t total;  // p^(#placeholders)
};

ScanInfo scan_info(const ScanSpec& spec);

// Streams hits in ascending index order; deterministic for a fixed spec.
void run_scan(const ScanSpec& spec, const std::function<void(const ScanHit&)>& emit);

}  // namespace qfs
