#include "qfs/corpus.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "qfs/parse.hpp"

namespace qfs {

namespace {

JobSpec make_job(uint64_t p, std::vector<std::string> vars, std::vector<std::string> gens,
                 JobMode mode) {
    JobSpec j;
    j.p = p;
    j.vars = std::move(vars);
    j.gens = std::move(gens);
    j.mode = mode;
    return j;
}

int ceil_log2(int n) {
    int l = 0;
    while ((1 << l) < n) ++l;
    return l;
}

void add_rdp(std::vector<CorpusRow>& rows) {
    auto push = [&](std::string id, uint64_t p, std::string f, int ht) {
        CorpusRow r;
        r.id = std::move(id);
        r.citation = "rdp height table, p=" + std::to_string(p);
        r.job = make_job(p, {"x", "y", "z"}, {std::move(f)}, JobMode::Local);
        r.expected = std::to_string(ht);
        rows.push_back(std::move(r));
    };
    for (int n = 2; n <= 8; ++n) {
        std::string yn = "y^" + std::to_string(n);
        push("rdp/p2/D" + std::to_string(2 * n) + "^0", 2, "z^2+x^2*y+x*" + yn,
             ceil_log2(n) + 1);
        push("rdp/p2/D" + std::to_string(2 * n + 1) + "^0", 2, "z^2+x^2*y+" + yn + "*z",
             ceil_log2(n) + 1);
        for (int r : {1, n - 1}) {
            if (r < 1) continue;
            std::string ynr = "y^" + std::to_string(n - r);
            push("rdp/p2/D" + std::to_string(2 * n) + "^" + std::to_string(r), 2,
                 "z^2+x^2*y+x*" + yn + "+x*" + ynr + "*z", ceil_log2(n - r) + 1);
            push("rdp/p2/D" + std::to_string(2 * n + 1) + "^" + std::to_string(r), 2,
                 "z^2+x^2*y+" + yn + "*z+x*" + ynr + "*z", ceil_log2(n - r) + 1);
            if (r == n - 1) break;  // n = 2: the two spot checks coincide
        }
    }
    push("rdp/p2/E6^0", 2, "z^2+x^3+y^2*z", 2);
    push("rdp/p2/E6^1", 2, "z^2+x^3+y^2*z+x*y*z", 1);
    push("rdp/p2/E7^0", 2, "z^2+x^3+x*y^3", 4);
    push("rdp/p2/E7^1", 2, "z^2+x^3+x*y^3+x^2*y*z", 3);
    push("rdp/p2/E7^2", 2, "z^2+x^3+x*y^3+y^3*z", 2);
    push("rdp/p2/E7^3", 2, "z^2+x^3+x*y^3+x*y*z", 1);
    push("rdp/p2/E8^0", 2, "z^2+x^3+y^5", 4);
    push("rdp/p2/E8^1", 2, "z^2+x^3+y^5+x*y^3*z", 4);
    push("rdp/p2/E8^2", 2, "z^2+x^3+y^5+x*y^2*z", 3);
    push("rdp/p2/E8^3", 2, "z^2+x^3+y^5+y^3*z", 2);
    push("rdp/p2/E8^4", 2, "z^2+x^3+y^5+x*y*z", 1);
    push("rdp/p3/E6^0", 3, "z^2+x^3+y^4", 2);
    push("rdp/p3/E6^1", 3, "z^2+x^3+y^4+x^2*y^2", 1);
    push("rdp/p3/E7^0", 3, "z^2+x^3+x*y^3", 2);
    push("rdp/p3/E7^1", 3, "z^2+x^3+x*y^3+x^2*y^2", 1);
    push("rdp/p3/E8^0", 3, "z^2+x^3+y^5", 3);
    push("rdp/p3/E8^1", 3, "z^2+x^3+y^5+x^2*y^3", 2);
    push("rdp/p3/E8^2", 3, "z^2+x^3+y^5+x^2*y^2", 1);
    push("rdp/p5/E8^0", 5, "z^2+x^3+y^5", 2);
    push("rdp/p5/E8^1", 5, "z^2+x^3+y^5+x*y^4", 1);
}

void add_k3(std::vector<CorpusRow>& rows) {
    const std::pair<const char*, const char*> table[] = {
        {"1", "x^4+y^4+z^4+2*w^4+x^2*y*w+y*z^2*w"},
        {"2", "x^4+2*y^4+2*z^4+2*w^4+x*y*z^2"},
        {"3", "x^4+y^4+z^4+w^4+x^2*z^2+x*y*z^2+z^3*w"},
        {"4", "x^4+y^4+z^4+w^4+x^2*z^2+x*y*z^2"},
        {"5", "x^4+y^4+z^4+w^4+x^3*z+z^3*w+y*z^2*w+y*z*w^2"},
        {"6", "x^4+y^4+z^4+w^4+x^2*z^2+x^2*y*z"},
        {"7", "x^4+y^4+z^4+w^4+x*y^2*z+x*z^2*w+y*z*w^2+y^2*z*w"},
        {"8", "x^4+x^2*y*z+x^2*y*w+2*x^2*z^2+x*y*w^2+2*y^4+y^3*w+z^4+w^4"},
        {"9", "x^4+y^4+z^4+w^4+x*y^3+y^3*w+z^2*w^2+2*x*y*z^2+y*z*w^2"},
        {"10",
         "x^4+2*x^2*y*z+x^2*y*w+x*y^2*w+y^4+y^3*w+y^2*z^2+2*y^2*z*w+y^2*w^2+y*z^3+y*z^2*w+y*z*w^2+"
         "z^4+z*w^3"},
        {"inf", "x^4+y^4+z^4+w^4"},
    };
    for (const auto& [h, f] : table) {
        CorpusRow r;
        r.id = std::string("k3-f3/h=") + h;
        r.citation = "quartic K3 table over F_3";
        r.job = make_job(3, {"x", "y", "z", "w"}, {f}, JobMode::CY);
        r.expected = h;
        rows.push_back(std::move(r));
    }
}

void add_quintic(std::vector<CorpusRow>& rows) {
    CorpusRow r;
    r.id = "quintic60/h=60";
    r.citation = "quintic threefold over F_2 with Artin-Mazur height 60";
    r.job = make_job(
        2, {"x", "y", "z", "w", "u"},
        {"x^5+y^5+z^5+w^5+u^5+x*z^3*w+y*z*w^3+x^2*z*u^2+y^2*z^2*w+x*y^2*w*u+y*z*w*u^2"},
        JobMode::CY);
    r.expected = "60";
    rows.push_back(std::move(r));
}

void add_fermat(std::vector<CorpusRow>& rows) {
    for (int N : {4, 5, 6, 7}) {
        for (uint64_t p : {2, 3, 5, 7, 11, 13}) {
            CorpusRow r;
            r.id = "fermat/N=" + std::to_string(N) + "/p=" + std::to_string(p);
            r.citation = "Fermat hypersurface rule: height 1 iff p = 1 mod N";
            std::vector<std::string> vars, gens;
            std::string f;
            for (int i = 0; i < N; ++i) {
                vars.push_back("x" + std::to_string(i));
                if (i) f += "+";
                f += "x" + std::to_string(i) + "^" + std::to_string(N);
            }
            r.job = make_job(p, std::move(vars), {f}, JobMode::CY);
            r.expected = p % uint64_t(N) == 1 ? "1" : "inf";
            rows.push_back(std::move(r));
        }
    }
}

void add_fixed_points(std::vector<CorpusRow>& rows) {
    // monomial-ideal intersection computed by pairwise lcms
    {
        CorpusRow r;
        r.id = "fixed-points/cubic-cone-with-w";
        r.citation = "fixed-point ideal certificate for x^3+y^3+z^3+xyzw^2 over F_2";
        r.job = make_job(2, {"x", "y", "z", "w"}, {"x^3+y^3+z^3+x*y*z*w^2"}, JobMode::Local);
        r.kind = CorpusRow::Kind::FixedPoint;
        r.j_gens = {
            // (xy,yz,xz,x^4w,y^4w,z^4w) ^ (x^2,y^2,z^2), expanded by pairwise lcms
            "x^2*y",   "x*y^2",   "x*y*z^2", "x^2*y*z", "y^2*z",   "y*z^2",
            "x^2*z",   "x*z^2",   "x*y^2*z", "x^4*w",   "x^4*y^2*w", "x^4*z^2*w",
            "x^2*y^4*w", "y^4*w", "y^4*z^2*w", "x^2*z^4*w", "y^2*z^4*w", "z^4*w",
            "x^3+y^3+z^3+x*y*z*w^2"};
        r.cap = 20;
        r.expected = "verified-up-to-cap";
        rows.push_back(std::move(r));
    }
    {
        CorpusRow r;
        r.id = "fixed-points/cubic-cone-times-w";
        r.citation = "the same ideal certifies (x^3+y^3+z^3+xyzw^2)w over F_2";
        r.job = make_job(2, {"x", "y", "z", "w"}, {"x^3*w+y^3*w+z^3*w+x*y*z*w^3"}, JobMode::Local);
        r.kind = CorpusRow::Kind::FixedPoint;
        r.j_gens = {
            "x^2*y",   "x*y^2",   "x*y*z^2", "x^2*y*z", "y^2*z",   "y*z^2",
            "x^2*z",   "x*z^2",   "x*y^2*z", "x^4*w",   "x^4*y^2*w", "x^4*z^2*w",
            "x^2*y^4*w", "y^4*w", "y^4*z^2*w", "x^2*z^4*w", "y^2*z^4*w", "z^4*w",
            "x^3+y^3+z^3+x*y*z*w^2"};
        r.cap = 20;
        r.expected = "verified-up-to-cap";
        rows.push_back(std::move(r));
    }
    {
        CorpusRow r;
        r.id = "fixed-points/quartic-sixfold";
        r.citation = "fixed-point ideal for xys^2+zwu^2+y^3w+x^3z over F_2";
        r.job = make_job(2, {"x", "y", "z", "w", "u", "s"},
                         {"x*y*s^2+z*w*u^2+y^3*w+x^3*z"}, JobMode::Graded);
        r.kind = CorpusRow::Kind::FixedPoint;
        r.j_gens = {"y*s^2+x^2*z", "z*u^2+y^3"};
        r.cap = 20;
        r.expected = "verified-up-to-cap";
        rows.push_back(std::move(r));
    }
    {
        CorpusRow r;
        r.id = "fixed-points/adjunction-section";
        r.citation = "hyperplane section (s, g) of the quartic sixfold has height 2";
        r.job = make_job(2, {"x", "y", "z", "w", "u", "s"},
                         {"x*y*s^2+z*w*u^2+y^3*w+x^3*z", "s"}, JobMode::Graded);
        r.expected = "2";
        rows.push_back(std::move(r));
    }
    {
        CorpusRow r;
        r.id = "fixed-points/fano-fermat-p3";
        r.citation = "degree-4 Fermat Fano fourfold over F_3: f^{p-2} lies in m^[p]";
        r.job = make_job(3, {"x0", "x1", "x2", "x3", "x4"},
                         {"x0^4+x1^4+x2^4+x3^4+x4^4"}, JobMode::Graded);
        r.kind = CorpusRow::Kind::NonsplitCheck;
        r.expected = "check-1";
        rows.push_back(std::move(r));
    }
}

void add_conic(std::vector<CorpusRow>& rows) {
    {
        CorpusRow r;
        r.id = "wild-conic/height-2";
        r.citation = "wild conic bundle x0 y0^2 + x1 y1^2 + x2 y2^2 over F_2";
        r.job = make_job(2, {"x0", "x1", "x2", "y0", "y1", "y2"},
                         {"x0*y0^2+x1*y1^2+x2*y2^2"}, JobMode::Graded);
        r.job.weights = {{1, 0}, {1, 0}, {1, 0}, {0, 1}, {0, 1}, {0, 1}};
        r.expected = "2";
        rows.push_back(std::move(r));
    }
    {
        CorpusRow r;
        r.id = "wild-conic/strange-quartic";
        r.citation = "quartic xys^2+zwu^2+z^3u+y^3w+x^3z over F_2 has height 3";
        r.job = make_job(2, {"x", "y", "z", "w", "u", "s"},
                         {"x*y*s^2+z*w*u^2+z^3*u+y^3*w+x^3*z"}, JobMode::Graded);
        r.expected = "3";
        rows.push_back(std::move(r));
    }
}

void add_unbounded(std::vector<CorpusRow>& rows) {
    for (int h = 1; h <= 3; ++h) {
        CorpusRow r;
        r.id = "unbounded/h=" + std::to_string(h);
        r.citation = "characteristic-2 family member with height exactly 2h";
        SparsePoly f = unbounded_family_p2(h);
        auto vars = unbounded_family_vars(h);
        r.job = make_job(2, vars, {f.serialize(vars)}, JobMode::CY);
        r.expected = std::to_string(2 * h);
        rows.push_back(std::move(r));
    }
}

}  // namespace

std::vector<std::string> corpus_names() {
    return {"rdp", "k3-f3", "quintic60", "fermat", "fixed-points", "wild-conic", "unbounded", "all"};
}

std::vector<CorpusRow> corpus_rows(const std::string& name) {
    std::vector<CorpusRow> rows;
    if (name == "rdp" || name == "all") add_rdp(rows);
    if (name == "k3-f3" || name == "all") add_k3(rows);
    if (name == "quintic60" || name == "all") add_quintic(rows);
    if (name == "fermat" || name == "all") add_fermat(rows);
    if (name == "fixed-points" || name == "all") add_fixed_points(rows);
    if (name == "wild-conic" || name == "all") add_conic(rows);
    if (name == "unbounded" || name == "all") add_unbounded(rows);
    if (rows.empty()) throw std::invalid_argument("unknown corpus '" + name + "'");
    return rows;
}

CorpusOutcome run_corpus_row(const CorpusRow& row) {
    auto t0 = std::chrono::steady_clock::now();
    std::string got;
    try {
        switch (row.kind) {
            case CorpusRow::Kind::Height: {
                got = run_job(row.job).verdict_string();
                break;
            }
            case CorpusRow::Kind::FixedPoint: {
                Modulus field(row.job.p, 1);
                Grading gr = grading_from_job(row.job);
                std::vector<SparsePoly> gens, jg;
                for (const auto& s : row.job.gens) gens.push_back(parse_poly(s, row.job.vars, field));
                for (const auto& s : row.j_gens) jg.push_back(parse_poly(s, row.job.vars, field));
                CIInput in{gens, gr,
                           row.job.mode == JobMode::Local ? CIMode::Local : CIMode::Graded, 0, false};
                auto res = verify_fixed_point(in, jg, row.cap);
                got = res.kind == FixedPointResult::VerifiedUpToCap ? "verified-up-to-cap" : "refuted";
                break;
            }
            case CorpusRow::Kind::NonsplitCheck: {
                Modulus field(row.job.p, 1);
                Grading gr = grading_from_job(row.job);
                std::vector<SparsePoly> gens;
                for (const auto& s : row.job.gens) gens.push_back(parse_poly(s, row.job.vars, field));
                CIInput in{gens, gr,
                           row.job.mode == JobMode::Local ? CIMode::Local : CIMode::Graded, 0, false};
                auto chk = nonsplit_checks(in);
                got = chk ? "check-" + std::to_string(*chk) : "none";
                break;
            }
        }
    } catch (const std::exception& e) {
        got = std::string("error: ") + e.what();
    }
    double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return {row, got, got == row.expected, ms};
}

CorpusReport run_corpus(const std::string& name, int jobs) {
    CorpusReport report;
    report.name = name;
    std::vector<CorpusRow> rows = corpus_rows(name);
    report.outcomes.resize(rows.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= rows.size()) break;
            report.outcomes[i] = run_corpus_row(rows[i]);
        }
    };
    int nthreads = std::max(1, jobs);
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const auto& o : report.outcomes) (o.ok ? report.passed : report.failed)++;
    return report;
}

}  // namespace qfs
