#include "qfs/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <map>
#include <mutex>
#include <thread>

#include "qfs/parse.hpp"

namespace qfs {

namespace {

std::vector<std::string> find_placeholders(const ScanSpec& spec) {
    std::vector<std::string> found;
    const std::string& s = spec.template_text;
    for (size_t i = 0; i < s.size();) {
        if (!std::isalpha(uint8_t(s[i]))) {
            ++i;
            continue;
        }
        size_t j = i + 1;
        while (j < s.size() && (std::isalnum(uint8_t(s[j])) || s[j] == '_')) ++j;
        std::string id = s.substr(i, j - i);
        i = j;
        // declared variables, and juxtapositions of them, are not placeholders
        bool splits = true;
        size_t pos = 0;
        while (pos < id.size() && splits) {
            size_t best = 0;
            for (const auto& v : spec.vars)
                if (v.size() > best && id.compare(pos, v.size(), v) == 0) best = v.size();
            if (best == 0) splits = false;
            pos += best;
        }
        if (splits) continue;
        if (std::find(found.begin(), found.end(), id) == found.end()) found.push_back(id);
    }
    return found;
}

}  // namespace

ScanInfo scan_info(const ScanSpec& spec) {
    ScanInfo info;
    info.placeholders = find_placeholders(spec);
    if (info.placeholders.size() > 12)
        throw std::invalid_argument("scan: more than 12 placeholders");
    info.total = 1;
    for (size_t i = 0; i < info.placeholders.size(); ++i) {
        if (info.total > UINT64_MAX / spec.p) throw std::invalid_argument("scan: p^k overflows");
        info.total *= spec.p;
    }
    return info;
}

void run_scan(const ScanSpec& spec, const std::function<void(const ScanHit&)>& emit) {
    ScanInfo info = scan_info(spec);
    size_t k = info.placeholders.size();
    int nring = int(spec.vars.size());
    if (nring + int(k) > kMaxVars)
        throw std::invalid_argument("scan: variables plus placeholders exceed the supported arity");

    Modulus field(spec.p, 1);
    std::vector<std::string> extended = spec.vars;
    extended.insert(extended.end(), info.placeholders.begin(), info.placeholders.end());
    SparsePoly templ = parse_poly(spec.template_text, extended, field);

    Grading ring_grading = spec.weights.empty() ? Grading::standard(nring)
                                                : Grading(nring, spec.weights);
    // template terms must be homogeneous of degree mu in the ring variables
    {
        Mono probe;
        for (const auto& t : templ.terms()) {
            Mono m = t.m;
            for (int i = nring; i < kMaxVars; ++i) m.e[i] = 0;
            if (ring_grading.term_degree(m) != ring_grading.mu())
                throw std::invalid_argument(
                    "scan: template terms must have degree mu in the ring variables");
        }
        (void)probe;
    }

    auto instance = [&](uint64_t index) {
        std::vector<uint64_t> assign(k);
        uint64_t v = index;
        for (size_t i = 0; i < k; ++i) {
            assign[i] = v % spec.p;
            v /= spec.p;
        }
        std::vector<Term> terms;
        for (const auto& t : templ.terms()) {
            uint64_t c = t.c;
            Mono m = t.m;
            for (size_t i = 0; i < k; ++i) {
                c = field.mul(c, field.pow(assign[i], m.e[nring + int(i)]));
                m.e[nring + int(i)] = 0;
            }
            if (c) terms.push_back({m, c});
        }
        return std::make_pair(SparsePoly::from_terms(field, nring, std::move(terms)), assign);
    };

    uint64_t end = info.total;
    if (spec.limit && spec.start_index + *spec.limit < end) end = spec.start_index + *spec.limit;

    auto evaluate = [&](uint64_t index) -> ScanHit {
        auto [f, assign] = instance(index);
        ScanHit hit{index, assign, ""};
        if (f.is_zero()) {
            hit.verdict = "skipped-zero";
            return hit;
        }
        CYOptions opts;
        opts.max_iter = spec.max_iter;
        opts.keep_chain = false;
        CYHeightResult r = cy_height(f, ring_grading, opts);
        switch (r.kind) {
            case CYHeightResult::Finite: hit.verdict = std::to_string(r.n); break;
            case CYHeightResult::Infinite: hit.verdict = "inf"; break;
            case CYHeightResult::LowerBoundAtCap: hit.verdict = ">" + std::to_string(r.n); break;
        }
        return hit;
    };

    auto wanted = [&](const ScanHit& h) {
        if (h.verdict == "skipped-zero") return false;
        if (spec.target_heights.empty()) return true;
        return std::find(spec.target_heights.begin(), spec.target_heights.end(), h.verdict) !=
               spec.target_heights.end();
    };

    int nthreads = std::max(1, spec.jobs);
    if (nthreads == 1) {
        for (uint64_t i = spec.start_index; i < end; ++i) {
            ScanHit h = evaluate(i);
            if (wanted(h)) emit(h);
        }
        return;
    }
    // parallel evaluation, emission strictly ordered by index
    std::mutex mu;
    std::map<uint64_t, ScanHit> ready;
    uint64_t next_emit = spec.start_index;
    std::atomic<uint64_t> next_index{spec.start_index};
    auto worker = [&] {
        while (true) {
            uint64_t i = next_index.fetch_add(1);
            if (i >= end) break;
            ScanHit h = evaluate(i);
            std::lock_guard<std::mutex> lock(mu);
            ready.emplace(i, std::move(h));
            while (!ready.empty() && ready.begin()->first == next_emit) {
                if (wanted(ready.begin()->second)) emit(ready.begin()->second);
                ready.erase(ready.begin());
                ++next_emit;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

}  // namespace qfs
