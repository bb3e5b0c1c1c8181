#include "qfs/jobspec.hpp"

#include <chrono>

#include "qfs/parse.hpp"

namespace qfs {

Grading grading_from_job(const JobSpec& job) {
    int n = int(job.vars.size());
    if (n < 1) throw std::invalid_argument("job: no variables");
    if (job.weights.empty()) return Grading::standard(n);
    return Grading(n, job.weights);
}

namespace {

std::vector<SparsePoly> parse_gens(const JobSpec& job) {
    Modulus field(job.p, 1);
    std::vector<SparsePoly> gens;
    for (const auto& s : job.gens) gens.push_back(parse_poly(s, job.vars, field));
    if (gens.empty()) throw std::invalid_argument("job: no generators");
    return gens;
}

JobMode resolve_mode(const JobSpec& job, const std::vector<SparsePoly>& gens, const Grading& gr) {
    if (job.mode != JobMode::Auto) return job.mode;
    bool all_homog = true;
    for (const auto& g : gens)
        if (!gr.is_homogeneous(g)) all_homog = false;
    if (gens.size() == 1 && all_homog && gr.is_calabi_yau(gens.front())) return JobMode::CY;
    if (all_homog) return JobMode::Graded;
    return JobMode::Local;
}

}  // namespace

bool HeightResult::decided() const {
    if (cy) return cy->kind != CYHeightResult::LowerBoundAtCap;
    return ci->kind != CIHeightResult::LowerBoundAtCap;
}

std::string HeightResult::verdict_string() const {
    if (cy) {
        switch (cy->kind) {
            case CYHeightResult::Finite: return std::to_string(cy->n);
            case CYHeightResult::Infinite: return "inf";
            case CYHeightResult::LowerBoundAtCap: return ">" + std::to_string(cy->n);
        }
    }
    switch (ci->kind) {
        case CIHeightResult::Exact: return std::to_string(ci->n);
        case CIHeightResult::InfiniteByCheck: return "inf";
        case CIHeightResult::LowerBoundAtCap: return ">" + std::to_string(ci->n);
    }
    return "?";
}

int HeightResult::exit_code() const { return decided() ? 0 : 2; }

HeightResult run_job(const JobSpec& job) {
    auto t0 = std::chrono::steady_clock::now();
    Grading gr = grading_from_job(job);
    std::vector<SparsePoly> gens = parse_gens(job);
    JobMode mode = resolve_mode(job, gens, gr);

    HeightResult res;
    res.job = job;
    res.mode_used = mode;
    if (mode == JobMode::CY) {
        if (gens.size() != 1)
            throw std::invalid_argument("job: cy mode expects a single generator");
        CYOptions opts;
        opts.max_iter = job.max_iter;
        res.engine = HeightResult::Engine::CY;
        res.cy = cy_height(gens.front(), gr, opts);
    } else {
        CIInput input{gens, gr, mode == JobMode::Local ? CIMode::Local : CIMode::Graded,
                      job.degree_cap, job.user_asserted_regular};
        res.engine = HeightResult::Engine::CI;
        res.ci = ci_height(input);
    }
    res.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

}  // namespace qfs
