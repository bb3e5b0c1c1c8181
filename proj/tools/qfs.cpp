#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qfs/corpus.hpp"
#include "qfs/delta.hpp"
#include "qfs/frobenius.hpp"
#include "qfs/jobspec.hpp"
#include "qfs/parse.hpp"
#include "qfs/scan.hpp"
#include "qfs/witt.hpp"

namespace {

using namespace qfs;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(uint8_t(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<std::vector<int64_t>> parse_weights(const std::string& s) {
    // "1,1,1,2" for a single grading; "1 0,1 0,0 1" for multigradings
    std::vector<std::vector<int64_t>> out;
    for (const auto& part : split_commas(s)) {
        std::vector<int64_t> w;
        std::string cur;
        for (char c : part + "_") {
            if (c == '_' || c == ' ') {
                if (!cur.empty()) w.push_back(std::stoll(cur));
                cur.clear();
            } else {
                cur += c;
            }
        }
        out.push_back(std::move(w));
    }
    return out;
}

JobMode mode_from_string(const std::string& s) {
    if (s == "auto") return JobMode::Auto;
    if (s == "cy") return JobMode::CY;
    if (s == "graded") return JobMode::Graded;
    if (s == "local") return JobMode::Local;
    throw CLI::ValidationError("--mode", "expected auto|cy|graded|local");
}

int cmd_height(const std::string& jobfile, JobSpec flags_job, bool have_inline, bool json_out,
               const std::string& out_path) {
    JobSpec job;
    if (!jobfile.empty()) {
        job = job_from_json_text(read_file(jobfile));
        if (have_inline)
            std::cerr << "note: inline flags are ignored when a job file is given\n";
    } else {
        job = std::move(flags_job);
    }
    HeightResult res = run_job(job);
    std::string json = result_to_json_text(res);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << json << "\n";
    }
    if (json_out) {
        std::cout << json << "\n";
    } else {
        std::cout << "height: " << res.verdict_string() << "\n";
        if (res.ci) {
            std::cout << "engine: chain (cap " << res.ci->cap << ", regularity "
                      << res.ci->regularity << ")\n";
        } else {
            std::cout << "engine: calabi-yau orbit\n";
        }
        if (!out_path.empty()) std::cout << "certificate written to " << out_path << "\n";
    }
    return res.exit_code();
}

int cmd_corpus(const std::string& name, int jobs, bool json_out) {
    CorpusReport report = run_corpus(name, jobs);
    if (json_out) {
        std::cout << "{ \"corpus\": \"" << name << "\", \"passed\": " << report.passed
                  << ", \"failed\": " << report.failed << " }\n";
    }
    for (const auto& o : report.outcomes) {
        std::cout << (o.ok ? "ok   " : "FAIL ") << o.row.id << "  expected " << o.row.expected
                  << ", got " << o.got << "  [" << int(o.elapsed_ms) << " ms]";
        if (!o.ok) std::cout << "  (" << o.row.citation << ")";
        std::cout << "\n";
    }
    std::cout << report.passed << "/" << report.passed + report.failed << " rows match\n";
    return report.failed == 0 ? 0 : 1;
}

int cmd_scan(ScanSpec spec) {
    ScanInfo info = scan_info(spec);
    std::cout << "# placeholders:";
    for (const auto& s : info.placeholders) std::cout << " " << s;
    std::cout << "  (" << info.total << " assignments)\n";
    run_scan(spec, [&](const ScanHit& h) {
        std::cout << h.index << "  [";
        for (size_t i = 0; i < h.assignment.size(); ++i)
            std::cout << (i ? "," : "") << h.assignment[i];
        std::cout << "]  height " << h.verdict << "\n";
    });
    return 0;
}

int cmd_verify(const std::string& path) {
    std::string why;
    bool ok = verify_result_json_text(read_file(path), &why);
    if (ok) {
        std::cout << "certificate verifies\n";
        return 0;
    }
    std::cout << "certificate REJECTED: " << why << "\n";
    return 1;
}

int cmd_delta1(uint64_t p, const std::string& vars_csv, const std::string& poly) {
    Modulus field(p, 1);
    auto vars = split_commas(vars_csv);
    SparsePoly a = parse_poly(poly, vars, field);
    std::cout << delta1(a).value.serialize(vars) << "\n";
    return 0;
}

int cmd_witt(uint64_t p, const std::string& vars_csv, int length, const std::string& atext,
             const std::string& btext) {
    Modulus field(p, 1);
    auto vars = split_commas(vars_csv);
    SparsePoly a = parse_poly(atext, vars, field);
    SparsePoly b = parse_poly(btext, vars, field);
    WittVector wa = WittVector::teichmuller(a, length);
    WittVector wb = WittVector::teichmuller(b, length);
    auto show = [&](const char* name, const WittVector& w) {
        std::cout << name << " = (";
        for (int i = 0; i < w.length(); ++i)
            std::cout << (i ? ", " : "") << w[i].serialize(vars);
        std::cout << ")\n  ghosts: (";
        auto gh = w.ghost();
        for (size_t i = 0; i < gh.size(); ++i)
            std::cout << (i ? ", " : "") << gh[i].serialize(vars);
        std::cout << ")\n";
    };
    show("[a]", wa);
    show("[b]", wb);
    show("[a]+[b]", witt_add(wa, wb));
    show("[a]*[b]", witt_mul(wa, wb));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasi-F-split heights of hypersurfaces and complete intersections over F_p"};
    app.require_subcommand(1);

    // height
    auto* h = app.add_subcommand("height", "compute the height of one input");
    std::string jobfile, vars_csv, weights_csv, mode_str = "auto", out_path;
    std::vector<std::string> gens;
    uint64_t p = 2;
    int64_t cap = 0, max_iter = 0;
    bool json_out = false, regular = false, trace = false;
    h->add_option("jobfile", jobfile, "job description (JSON)");
    h->add_option("--p", p, "characteristic");
    h->add_option("--vars", vars_csv, "comma-separated variable names");
    h->add_option("--weights", weights_csv, "weights, e.g. 1,1,1,2 or '1 0,0 1'");
    h->add_option("--poly,--gens", gens, "ideal generators")->take_all();
    h->add_option("--mode", mode_str, "auto|cy|graded|local");
    h->add_option("--cap", cap, "degree cap for the chain engine");
    h->add_option("--max-iter", max_iter, "iteration cap for the orbit engine");
    h->add_flag("--json", json_out, "print the full JSON result");
    h->add_flag("--regular-sequence", regular, "assert that the generators form a regular sequence");
    h->add_flag("--trace-degrees", trace, "include per-degree slice dimensions in the JSON");
    h->add_option("--out", out_path, "write the JSON result to a file");

    // corpus
    auto* c = app.add_subcommand("corpus", "run a bundled reference table");
    std::string corpus_name;
    int jobs = 1;
    c->add_option("name", corpus_name, "rdp|k3-f3|quintic60|fermat|fixed-points|wild-conic|unbounded|all")
        ->required();
    c->add_option("--jobs", jobs, "worker threads");
    c->add_flag("--json", json_out, "print a summary object first");

    // scan
    auto* s = app.add_subcommand("scan", "enumerate placeholder coefficients of a template");
    ScanSpec scan_spec;
    std::string scan_targets, scan_weights;
    uint64_t scan_limit = 0;
    s->add_option("template", scan_spec.template_text, "polynomial with placeholder coefficients")
        ->required();
    s->add_option("--p", scan_spec.p, "characteristic");
    s->add_option("--vars", vars_csv, "comma-separated ring variables")->required();
    s->add_option("--weights", scan_weights, "grading weights");
    s->add_option("--targets", scan_targets, "heights to report, e.g. 2,3,inf (default: all)");
    s->add_option("--start-index", scan_spec.start_index, "resume point");
    s->add_option("--limit", scan_limit, "maximum number of assignments to try");
    s->add_option("--max-iter", max_iter, "iteration cap per instance");
    s->add_option("--jobs", scan_spec.jobs, "worker threads");

    // verify
    auto* v = app.add_subcommand("verify", "replay a result file's certificate");
    std::string verify_path;
    v->add_option("file", verify_path, "result JSON")->required();

    // delta1
    auto* d = app.add_subcommand("delta1", "print the canonical representative of Delta_1");
    std::string d_poly;
    d->add_option("--p", p, "characteristic");
    d->add_option("--vars", vars_csv, "comma-separated variable names")->required();
    d->add_option("poly", d_poly, "polynomial")->required();

    // witt
    auto* w = app.add_subcommand("witt", "Witt-vector sums/products of two Teichmuller lifts");
    std::string w_a, w_b;
    int w_len = 2;
    w->add_option("--p", p, "characteristic");
    w->add_option("--vars", vars_csv, "comma-separated variable names")->required();
    w->add_option("--n", w_len, "Witt length");
    w->add_option("a", w_a, "first polynomial")->required();
    w->add_option("b", w_b, "second polynomial")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(h)) {
            JobSpec job;
            job.p = p;
            job.vars = split_commas(vars_csv);
            if (!weights_csv.empty()) job.weights = parse_weights(weights_csv);
            job.gens = gens;
            job.mode = mode_from_string(mode_str);
            job.degree_cap = cap;
            if (max_iter > 0) job.max_iter = max_iter;
            job.user_asserted_regular = regular;
            job.trace_degrees = trace;
            bool have_inline = !gens.empty();
            return cmd_height(jobfile, std::move(job), have_inline, json_out, out_path);
        }
        if (app.got_subcommand(c)) return cmd_corpus(corpus_name, jobs, json_out);
        if (app.got_subcommand(s)) {
            scan_spec.vars = split_commas(vars_csv);
            if (!scan_weights.empty()) scan_spec.weights = parse_weights(scan_weights);
            if (!scan_targets.empty()) scan_spec.target_heights = split_commas(scan_targets);
            if (scan_limit > 0) scan_spec.limit = scan_limit;
            if (max_iter > 0) scan_spec.max_iter = max_iter;
            return cmd_scan(std::move(scan_spec));
        }
        if (app.got_subcommand(v)) return cmd_verify(verify_path);
        if (app.got_subcommand(d)) return cmd_delta1(p, vars_csv, d_poly);
        if (app.got_subcommand(w)) return cmd_witt(p, vars_csv, w_len, w_a, w_b);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
