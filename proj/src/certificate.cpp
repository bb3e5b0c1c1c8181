#include <json.hpp>

#include "qfs/frobenius.hpp"
#include "qfs/jobspec.hpp"
#include "qfs/parse.hpp"

namespace qfs {

using nlohmann::ordered_json;

namespace {

std::string hex16(uint64_t h) {
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

const char* mode_name(JobMode m) {
    switch (m) {
        case JobMode::Auto: return "auto";
        case JobMode::CY: return "cy";
        case JobMode::Graded: return "graded";
        case JobMode::Local: return "local";
    }
    return "auto";
}

JobMode mode_from_name(const std::string& s) {
    if (s == "auto") return JobMode::Auto;
    if (s == "cy") return JobMode::CY;
    if (s == "graded") return JobMode::Graded;
    if (s == "local") return JobMode::Local;
    throw std::invalid_argument("unknown mode '" + s + "'");
}

std::string interpretation(const HeightResult& res) {
    if (res.mode_used == JobMode::Local)
        return "quasi-F-split height of the local ring at the origin";
    if (res.job.user_asserted_regular)
        return "quasi-F-split height of the section ring; equals the height of the projective "
               "variety for a projectively normal complete intersection (regular sequence "
               "asserted by caller)";
    return "quasi-F-split height of the graded coordinate ring";
}

ordered_json job_to_json(const JobSpec& job) {
    ordered_json j;
    j["p"] = job.p;
    j["vars"] = job.vars;
    if (!job.weights.empty()) j["weights"] = job.weights;
    j["gens"] = job.gens;
    j["mode"] = mode_name(job.mode);
    if (job.degree_cap > 0) j["cap"] = job.degree_cap;
    if (job.max_iter) j["max_iter"] = *job.max_iter;
    if (job.user_asserted_regular) j["regular_sequence"] = true;
    return j;
}

JobSpec job_from_json(const ordered_json& j) {
    JobSpec job;
    job.p = j.at("p").get<uint64_t>();
    job.vars = j.at("vars").get<std::vector<std::string>>();
    if (j.contains("weights")) job.weights = j.at("weights").get<std::vector<std::vector<int64_t>>>();
    job.gens = j.at("gens").get<std::vector<std::string>>();
    if (j.contains("mode")) job.mode = mode_from_name(j.at("mode").get<std::string>());
    if (j.contains("cap")) job.degree_cap = j.at("cap").get<int64_t>();
    if (j.contains("max_iter")) job.max_iter = j.at("max_iter").get<int64_t>();
    if (j.contains("regular_sequence")) job.user_asserted_regular = j.at("regular_sequence").get<bool>();
    return job;
}

}  // namespace

JobSpec job_from_json_text(const std::string& text) {
    return job_from_json(ordered_json::parse(text));
}

std::string job_to_json_text(const JobSpec& job) {
    ordered_json j = job_to_json(job);
    j["schema"] = 1;
    return j.dump(2);
}

std::string result_to_json_text(const HeightResult& res, bool include_timings) {
    ordered_json j;
    j["schema"] = 1;
    j["job"] = job_to_json(res.job);
    j["job"]["mode"] = mode_name(res.mode_used);
    j["engine"] = res.engine == HeightResult::Engine::CY ? "cy" : "ci";
    j["interpretation"] = interpretation(res);
    j["height"] = res.verdict_string();

    ordered_json v;
    if (res.cy) {
        const CYHeightResult& r = *res.cy;
        switch (r.kind) {
            case CYHeightResult::Finite:
                v["kind"] = "finite";
                v["n"] = r.n;
                break;
            case CYHeightResult::Infinite:
                v["kind"] = "infinite";
                v["cycle_start"] = r.cycle_start;
                v["cycle_len"] = r.cycle_len;
                break;
            case CYHeightResult::LowerBoundAtCap:
                v["kind"] = "lower_bound";
                v["n"] = r.n;
                v["cap"] = r.cap;
                break;
        }
        j["verdict"] = v;
        ordered_json cert;
        if (!r.chain.empty()) {
            cert["g1"] = r.chain.front().serialize(res.job.vars);
            std::vector<std::string> hashes;
            for (const auto& g : r.chain) hashes.push_back(hex16(g.hash()));
            cert["chain_hashes"] = hashes;
            cert["final"] = r.chain.back().serialize(res.job.vars);
            cert["verdict"] = v;
            j["certificate"] = cert;
        }
    } else {
        const CIHeightResult& r = *res.ci;
        switch (r.kind) {
            case CIHeightResult::Exact:
                v["kind"] = "exact";
                v["n"] = r.n;
                break;
            case CIHeightResult::InfiniteByCheck:
                v["kind"] = "infinite_by_check";
                v["check"] = r.which_check;
                break;
            case CIHeightResult::LowerBoundAtCap:
                v["kind"] = "lower_bound";
                v["n"] = r.n;
                v["stabilized"] = r.stabilized;
                break;
        }
        v["cap"] = r.cap;
        j["verdict"] = v;
        j["regularity"] = r.regularity;
        if (r.certificate) {
            ordered_json cert;
            std::vector<std::string> chain;
            for (const auto& a : r.certificate->chain) chain.push_back(a.serialize(res.job.vars));
            cert["chain"] = chain;
            std::vector<std::vector<std::string>> cof;
            for (const auto& row : r.certificate->i1_cofactors) {
                std::vector<std::string> srow;
                for (const auto& c : row) srow.push_back(c.serialize(res.job.vars));
                cof.push_back(std::move(srow));
            }
            cert["i1_cofactors"] = cof;
            cert["final"] = r.certificate->final_escape.serialize(res.job.vars);
            j["certificate"] = cert;
        }
        if (!r.degree_trace.empty() && res.job.trace_degrees) {
            ordered_json tr = ordered_json::array();
            for (const auto& stage : r.degree_trace) {
                ordered_json st = ordered_json::array();
                for (const auto& [deg, dim] : stage) st.push_back({{"degree", deg}, {"rows", dim}});
                tr.push_back(st);
            }
            j["degree_trace"] = tr;
        }
    }
    if (include_timings) j["timings_ms"] = res.elapsed_ms;
    return j.dump(2);
}

bool verify_result_json_text(const std::string& text, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        return fail(std::string("malformed JSON: ") + e.what());
    }
    try {
        if (!j.contains("schema") || j["schema"].get<int>() != 1) return fail("unsupported schema");
        JobSpec job = job_from_json(j.at("job"));
        Modulus field(job.p, 1);
        Grading gr = grading_from_job(job);
        std::vector<SparsePoly> gens;
        for (const auto& s : job.gens) gens.push_back(parse_poly(s, job.vars, field));
        std::string engine = j.at("engine").get<std::string>();
        const ordered_json& v = j.at("verdict");
        std::string kind = v.at("kind").get<std::string>();

        if (engine == "cy") {
            if (gens.size() != 1) return fail("cy certificate needs a single generator");
            if (!j.contains("certificate")) return fail("missing certificate");
            const ordered_json& cert = j.at("certificate");
            auto hashes = cert.at("chain_hashes").get<std::vector<std::string>>();
            SparsePoly f = gens.front();
            uint64_t p = job.p;
            SparsePoly g = f.pow(p - 1);
            if (g.serialize(job.vars) != cert.at("g1").get<std::string>())
                return fail("g1 does not match f^{p-1}");
            std::optional<ThetaOperator> theta;
            std::vector<SparsePoly> chain;
            size_t steps = hashes.size();
            for (size_t i = 0; i < steps; ++i) {
                if (hex16(g.hash()) != hashes[i])
                    return fail("chain hash mismatch at step " + std::to_string(i + 1));
                chain.push_back(g);
                bool is_last = (i + 1 == steps);
                bool u_zero = u_top(g).is_zero();
                if (kind == "finite") {
                    if (is_last && u_zero) return fail("final element has zero u-image");
                    if (!is_last && !u_zero) return fail("premature escape in chain");
                } else if (!u_zero) {
                    return fail("nonzero u-image in a non-finite chain");
                }
                if (!is_last) {
                    if (!theta) theta = ThetaOperator::for_power(f, gr);
                    g = theta->apply(g);
                }
            }
            if (chain.back().serialize(job.vars) != cert.at("final").get<std::string>())
                return fail("final element mismatch");
            if (kind == "finite") {
                if (int(steps) != v.at("n").get<int>()) return fail("chain length differs from n");
            } else if (kind == "infinite") {
                int cs = v.at("cycle_start").get<int>();
                int cl = v.at("cycle_len").get<int>();
                if (cs < 1 || cl < 1 || size_t(cs + cl) != steps)
                    return fail("cycle indices inconsistent with chain length");
                if (chain.back() != chain[size_t(cs - 1)]) return fail("cycle does not close");
            } else if (kind != "lower_bound") {
                return fail("unknown cy verdict kind");
            }
            return true;
        }
        if (engine == "ci") {
            CIMode mode = job.mode == JobMode::Local ? CIMode::Local : CIMode::Graded;
            CIInput input{gens, gr, mode, job.degree_cap, job.user_asserted_regular};
            if (kind == "infinite_by_check") {
                auto chk = nonsplit_checks(input);
                if (!chk) return fail("nonsplit check does not fire");
                if (*chk != v.at("check").get<int>()) return fail("different check fires");
                return true;
            }
            if (kind == "exact") {
                if (!j.contains("certificate")) return fail("missing certificate");
                const ordered_json& cj = j.at("certificate");
                CICertificate cert;
                for (const auto& s : cj.at("chain"))
                    cert.chain.push_back(parse_poly(s.get<std::string>(), job.vars, field));
                for (const auto& row : cj.at("i1_cofactors")) {
                    std::vector<SparsePoly> r;
                    for (const auto& s : row)
                        r.push_back(parse_poly(s.get<std::string>(), job.vars, field));
                    cert.i1_cofactors.push_back(std::move(r));
                }
                cert.final_escape = parse_poly(cj.at("final").get<std::string>(), job.vars, field);
                return replay_ci_certificate(input, cert, v.at("n").get<int>(), why);
            }
            return fail("lower-bound results carry no replayable certificate");
        }
        return fail("unknown engine");
    } catch (const std::exception& e) {
        return fail(std::string("malformed certificate: ") + e.what());
    }
}

}  // namespace qfs
