#include "qfs/ci.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "qfs/delta.hpp"
#include "qfs/frobenius.hpp"
#include "qfs/linalg.hpp"

namespace qfs {

namespace {

int64_t wdeg(const Grading& g, const SparsePoly& f) { return g.max_total_degree(f); }

// monomials of weighted total degree <= bound, ascending (wdeg, graded-lex)
std::vector<Mono> monomials_up_to(const Grading& g, int64_t bound) {
    std::vector<Mono> out;
    if (bound < 0) return out;
    Mono cur;
    std::function<void(int, int64_t)> rec = [&](int var, int64_t left) {
        if (var == g.nvars()) {
            out.push_back(cur);
            return;
        }
        int64_t w = g.total_weight(var);
        for (int64_t k = 0;; ++k) {
            if (k * w > left && !(w == 0 && k == 0)) break;
            if (k > 0xffff) break;
            if (w == 0 && k > 0) break;  // zero total weight cannot happen (weights nonzero)
            cur.e[var] = uint16_t(k);
            rec(var + 1, left - k * w);
            if (w == 0) break;
        }
        cur.e[var] = 0;
    };
    rec(0, bound);
    std::sort(out.begin(), out.end(), [&](const Mono& a, const Mono& b) {
        int64_t da = g.term_total_degree(a), db = g.term_total_degree(b);
        if (da != db) return da < db;
        return mono_less(a, b);
    });
    return out;
}

void validate_input(const CIInput& in) {
    if (in.gens.empty()) throw std::invalid_argument("ci: no generators");
    const Modulus& mod = in.gens.front().modulus();
    if (!mod.is_field())
        throw std::invalid_argument(
            "ci: coefficients must lie in the prime field F_p (heights are invariant under "
            "base field extension, so prime-field input suffices)");
    for (const auto& g : in.gens) {
        if (g.modulus() != mod || g.nvars() != in.grading.nvars())
            throw std::invalid_argument("ci: generator ring mismatch");
        if (g.is_zero()) throw std::invalid_argument("ci: zero generator");
        if (in.mode == CIMode::Graded && !in.grading.is_homogeneous(g))
            throw std::invalid_argument("ci: graded mode requires homogeneous generators");
        if (in.mode == CIMode::Local && g.coefficient(Mono{}) != 0)
            throw std::invalid_argument("ci: local mode requires generators vanishing at the origin");
    }
}

std::string regularity_label(const CIInput& in) {
    if (in.user_asserted_regular) return "asserted";
    if (int(in.gens.size()) > in.grading.nvars()) return "formula-level";
    for (size_t i = 0; i < in.gens.size(); ++i)
        for (size_t j = i + 1; j < in.gens.size(); ++j) {
            const Mono& a = in.gens[i].leading_term().m;
            const Mono& b = in.gens[j].leading_term().m;
            for (int v = 0; v < in.grading.nvars(); ++v)
                if (a.e[v] && b.e[v]) return "formula-level";
        }
    return "heuristic-pass";
}

}  // namespace

SparsePoly product_of_gens(const std::vector<SparsePoly>& gens) {
    SparsePoly f = gens.front();
    for (size_t i = 1; i < gens.size(); ++i) f = f * gens[i];
    return f;
}

std::vector<SparsePoly> colon_bracket(const std::vector<SparsePoly>& gens, uint64_t s) {
    if (gens.empty()) throw std::invalid_argument("colon: no generators");
    if (s < 1) throw std::invalid_argument("colon: s must be >= 1");
    std::vector<SparsePoly> out;
    out.push_back(product_of_gens(gens).pow(s - 1));
    for (const auto& g : gens) out.push_back(g.pow(s));
    return out;
}

int64_t ci_default_cap(const CIInput& in) {
    const Grading& gr = in.grading;
    uint64_t p = in.gens.front().modulus().p();
    SparsePoly f = product_of_gens(in.gens);
    int64_t df = wdeg(gr, f);
    if (in.mode == CIMode::Local) return 2 * int64_t(p) * df;
    int64_t maxgen = 0;
    for (const auto& g : in.gens) maxgen = std::max(maxgen, wdeg(gr, g));
    return std::max<int64_t>(int64_t(p - 1) * df, int64_t(p) * int64_t(p - 1) * gr.mu_total()) +
           2 * maxgen;
}

bool in_ideal_span(const SparsePoly& h, const std::vector<SparsePoly>& gens,
                   const Grading& grading, int64_t bound) {
    if (h.is_zero()) return true;
    const Modulus& mod = h.modulus();
    bound = std::max(bound, grading.max_total_degree(h));
    Eliminator elim(mod, false);
    std::unordered_map<Mono, uint32_t, MonoHash> cols;
    auto intern = [&](const SparsePoly& q) {
        std::vector<std::pair<uint32_t, uint64_t>> row;
        row.reserve(q.term_count());
        for (const auto& t : q.terms()) {
            auto [it, fresh] = cols.try_emplace(t.m, uint32_t(cols.size()));
            row.push_back({it->second, t.c});
        }
        std::sort(row.begin(), row.end());
        return row;
    };
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        int64_t slack = bound - grading.max_total_degree(g);
        for (const Mono& m : monomials_up_to(grading, slack)) elim.add_row(intern(g.times_monomial(m)));
    }
    return elim.reduce(intern(h)).empty();
}

// ---------------------------------------------------------------------------
// The chain engine. Slices of I_n are handled in Frobenius coordinates: the
// degree-capped part of I_n is exactly { sum c x^{p b + g} gen } over tuples
// (gen, g, b), u acts tuple-wise through the components v_{gen,g} =
// comp_{top-g}(gen), and theta acts through T_{gen,g} = comp_{top-g}(drep*gen).
// A kernel vector of the u-image system is a slice element of ker(u) and its
// theta image is the matching combination of the T columns.
// ---------------------------------------------------------------------------

namespace {

struct GenEntry {
    SparsePoly poly;
    int stage;
    bool is_i1;
    int i1_index = -1;
    // tuples (gen, multiplier monomial, coeff) with theta(sum c x^mult gen) = poly
    struct Tuple {
        uint32_t gen;
        Mono mult;
        uint64_t coeff;
    };
    std::vector<Tuple> kernel_combo;
    std::vector<std::pair<Mono, SparsePoly>> vcomps;  // gamma -> v (nonzero)
    std::vector<std::pair<Mono, SparsePoly>> tcomps;  // gamma -> T (nonzero)
};

struct RowKey {
    int64_t deg;
    uint32_t gen;
    Mono gamma;
    Mono beta;
};

class ChainEngine {
public:
    ChainEngine(const CIInput& in, int64_t cap)
        : in_(in),
          mod_(in.gens.front().modulus()),
          nvars_(in.grading.nvars()),
          cap_(cap),
          f_(product_of_gens(in.gens)),
          theta_(make_theta(f_, in.grading)),
          elim_(mod_, true),
          genspan_(mod_, false) {}

    CIHeightResult run();

private:
    static ThetaOperator make_theta(const SparsePoly& f, const Grading& gr) {
        uint64_t p = f.modulus().p();
        SparsePoly fp1 = f.pow(p - 1);
        if (is_pth_power(fp1))
            return ThetaOperator::with_representative(SparsePoly::zero(f.modulus(), f.nvars()), gr);
        return ThetaOperator::with_representative(delta1(fp1, &gr).value, gr);
    }

    SparseRow intern_poly(const SparsePoly& q) {
        SparseRow row;
        row.reserve(q.term_count());
        for (const auto& t : q.terms()) {
            auto [it, fresh] = cols_.try_emplace(t.m, uint32_t(cols_.size()));
            row.push_back({it->second, t.c});
        }
        std::sort(row.begin(), row.end());
        return row;
    }
    SparseRow intern_gen(const SparsePoly& q) {
        SparseRow row;
        row.reserve(q.term_count());
        for (const auto& t : q.terms()) {
            auto [it, fresh] = gencols_.try_emplace(t.m, uint32_t(gencols_.size()));
            row.push_back({it->second, t.c});
        }
        std::sort(row.begin(), row.end());
        return row;
    }

    // registers a generator; returns false when it is linearly dependent on
    // the existing ones
    bool add_generator(SparsePoly poly, int stage, bool is_i1, int i1_index,
                       std::vector<GenEntry::Tuple> combo);

    void enqueue_rows_for(uint32_t gen_index, std::vector<RowKey>& queue);
    SparsePoly theta_image_of_history(const SparseRow& hist) const;
    std::vector<GenEntry::Tuple> history_to_combo(const SparseRow& hist) const;
    SparsePoly poly_of_combo(const std::vector<GenEntry::Tuple>& combo) const;
    CICertificate build_certificate(const std::vector<GenEntry::Tuple>& final_combo,
                                    const SparsePoly& final_poly, int height) const;

    const CIInput& in_;
    Modulus mod_;
    int nvars_;
    int64_t cap_;
    SparsePoly f_;
    ThetaOperator theta_;
    Eliminator elim_;
    Eliminator genspan_;
    std::unordered_map<Mono, uint32_t, MonoHash> cols_;
    std::unordered_map<Mono, uint32_t, MonoHash> gencols_;
    std::vector<GenEntry> gens_;
    std::vector<std::tuple<uint32_t, Mono, Mono>> row_src_;  // input row -> (gen, gamma, beta)
    std::vector<std::vector<std::pair<int64_t, int64_t>>> trace_;
};

bool ChainEngine::add_generator(SparsePoly poly, int stage, bool is_i1, int i1_index,
                                std::vector<GenEntry::Tuple> combo) {
    if (poly.is_zero()) return false;
    auto res = genspan_.add_row(intern_gen(poly));
    if (res.reduced_to_zero && !is_i1) return false;

    GenEntry e{std::move(poly), stage, is_i1, i1_index, std::move(combo), {}, {}};
    uint32_t p = uint32_t(mod_.p());
    Mono top;
    for (int i = 0; i < nvars_; ++i) top.e[i] = uint16_t(p - 1);
    for (auto& [idx, comp] : decompose(e.poly)) {
        Mono gamma = top / idx;  // gamma = top - idx componentwise
        e.vcomps.push_back({gamma, comp});
    }
    SparsePoly H = theta_.delta_rep() * e.poly;
    for (auto& [idx, comp] : decompose(H)) {
        Mono gamma = top / idx;
        e.tcomps.push_back({gamma, comp});
    }
    gens_.push_back(std::move(e));
    return true;
}

void ChainEngine::enqueue_rows_for(uint32_t gi, std::vector<RowKey>& queue) {
    const Grading& gr = in_.grading;
    const GenEntry& g = gens_[gi];
    int64_t base = wdeg(gr, g.poly);
    int64_t budget = cap_ - base;
    if (budget < 0) return;
    uint64_t p = mod_.p();
    for (const auto& [gamma, v] : g.vcomps) {
        int64_t left = budget - gr.term_total_degree(gamma);
        if (left < 0) continue;
        for (const Mono& beta : monomials_up_to(gr, left / int64_t(p)))
            queue.push_back({base + gr.term_total_degree(gamma) +
                                 int64_t(p) * gr.term_total_degree(beta),
                             gi, gamma, beta});
    }
    for (const auto& [gamma, t] : g.tcomps) {
        bool has_v = false;
        for (const auto& [vg, v] : g.vcomps)
            if (vg == gamma) { has_v = true; break; }
        if (has_v) continue;
        if (gr.term_total_degree(gamma) > budget) continue;
        queue.push_back({base + gr.term_total_degree(gamma), gi, gamma, Mono{}});
    }
}

SparsePoly ChainEngine::theta_image_of_history(const SparseRow& hist) const {
    SparsePoly acc = SparsePoly::zero(mod_, nvars_);
    for (const auto& [row_idx, c] : hist) {
        auto [gi, gamma, beta] = row_src_[row_idx];
        for (const auto& [tg, T] : gens_[gi].tcomps)
            if (tg == gamma) {
                acc = acc + T.times_monomial(beta, c);
                break;
            }
    }
    return acc;
}

std::vector<GenEntry::Tuple> ChainEngine::history_to_combo(const SparseRow& hist) const {
    std::vector<GenEntry::Tuple> combo;
    combo.reserve(hist.size());
    uint32_t p = uint32_t(mod_.p());
    for (const auto& [row_idx, c] : hist) {
        auto [gi, gamma, beta] = row_src_[row_idx];
        combo.push_back({gi, beta.scaled_exponents(p) * gamma, c});
    }
    return combo;
}

SparsePoly ChainEngine::poly_of_combo(const std::vector<GenEntry::Tuple>& combo) const {
    SparsePoly acc = SparsePoly::zero(mod_, nvars_);
    for (const auto& t : combo) acc = acc + gens_[t.gen].poly.times_monomial(t.mult, t.coeff);
    return acc;
}

CICertificate ChainEngine::build_certificate(const std::vector<GenEntry::Tuple>& final_combo,
                                             const SparsePoly& final_poly, int height) const {
    CICertificate cert;
    cert.final_escape = final_poly;
    size_t n_i1 = 0;
    for (const auto& g : gens_)
        if (g.is_i1) ++n_i1;

    uint32_t p = uint32_t(mod_.p());
    std::vector<GenEntry::Tuple> combo = final_combo;
    std::vector<SparsePoly> chain_rev;
    std::vector<std::vector<SparsePoly>> cof_rev;
    while (true) {
        chain_rev.push_back(poly_of_combo(combo));
        std::vector<SparsePoly> cof(n_i1, SparsePoly::zero(mod_, nvars_));
        std::vector<GenEntry::Tuple> next;
        bool any_theta = false;
        for (const auto& t : combo) {
            const GenEntry& g = gens_[t.gen];
            if (g.is_i1) {
                cof[size_t(g.i1_index)] =
                    cof[size_t(g.i1_index)] +
                    SparsePoly::monomial(mod_, nvars_, t.mult, t.coeff);
            } else {
                any_theta = true;
                for (const auto& inner : g.kernel_combo)
                    next.push_back({inner.gen, t.mult.scaled_exponents(p) * inner.mult,
                                    mod_.mul(t.coeff, inner.coeff)});
            }
        }
        cof_rev.push_back(std::move(cof));
        if (!any_theta) break;
        combo = std::move(next);
    }
    // collected from A_{n-1} down to A_1; certificate stores them ascending
    cert.chain.assign(chain_rev.rbegin(), chain_rev.rend());
    cert.i1_cofactors.assign(cof_rev.rbegin(), cof_rev.rend());
    (void)height;
    return cert;
}

CIHeightResult ChainEngine::run() {
    CIHeightResult res;
    res.cap = cap_;
    res.regularity = regularity_label(in_);
    uint64_t p = mod_.p();

    // stage 1: generators of I_1 = (I^[p] : I)
    std::vector<SparsePoly> i1 = colon_bracket(in_.gens, p);
    {
        int64_t fdeg = wdeg(in_.grading, i1.front());
        if (fdeg > cap_)
            throw std::invalid_argument("ci: degree cap " + std::to_string(cap_) +
                                        " below deg f^{p-1} = " + std::to_string(fdeg) +
                                        "; rerun with --cap >= " + std::to_string(fdeg));
    }
    for (size_t i = 0; i < i1.size(); ++i) {
        if (i1[i].escape_term(uint32_t(p))) {
            res.kind = CIHeightResult::Exact;
            res.n = 1;
            CICertificate cert;
            cert.final_escape = i1[i];
            std::vector<SparsePoly> cof(i1.size(), SparsePoly::zero(mod_, nvars_));
            cof[i] = SparsePoly::constant(mod_, nvars_, 1);
            cert.i1_cofactors.push_back(std::move(cof));
            res.certificate = cert;
            return res;
        }
        // principal case: f^p = f * f^{p-1} adds nothing to the ideal
        if (in_.gens.size() == 1 && i == 1) continue;
        add_generator(i1[i], 1, true, int(i), {});
    }

    int stage = 1;
    size_t first_new = 0;  // gens_ index of the first generator of this stage
    while (true) {
        // rows for generators introduced this stage
        std::vector<RowKey> queue;
        for (uint32_t gi = uint32_t(first_new); gi < gens_.size(); ++gi)
            enqueue_rows_for(gi, queue);
        std::stable_sort(queue.begin(), queue.end(), [](const RowKey& a, const RowKey& b) {
            if (a.deg != b.deg) return a.deg < b.deg;
            if (a.gen != b.gen) return a.gen < b.gen;
            int c = mono_cmp(a.gamma, b.gamma);
            if (c) return c < 0;
            return mono_less(a.beta, b.beta);
        });

        // degree trace of this stage's slice rows
        {
            std::map<int64_t, int64_t> dims;
            for (const auto& rk : queue) ++dims[rk.deg];
            trace_.push_back({dims.begin(), dims.end()});
        }

        first_new = gens_.size();
        std::vector<std::pair<SparsePoly, std::vector<GenEntry::Tuple>>> pending;
        for (const auto& rk : queue) {
            const GenEntry& g = gens_[rk.gen];
            SparsePoly v = SparsePoly::zero(mod_, nvars_);
            for (const auto& [vg, vv] : g.vcomps)
                if (vg == rk.gamma) { v = vv; break; }
            row_src_.push_back({rk.gen, rk.gamma, rk.beta});
            auto r = elim_.add_row(intern_poly(v.times_monomial(rk.beta)));
            if (!r.reduced_to_zero) continue;
            SparsePoly img = theta_image_of_history(r.history);
            if (img.is_zero()) continue;
            // dedupe against the span of all current and pending generators
            auto span = genspan_.add_row(intern_gen(img));
            if (span.reduced_to_zero) continue;
            if (auto esc = img.escape_term(uint32_t(p))) {
                res.kind = CIHeightResult::Exact;
                res.n = stage + 1;
                res.certificate = build_certificate(history_to_combo(r.history), img, res.n);
                res.degree_trace = trace_;
                return res;
            }
            pending.push_back({img, history_to_combo(r.history)});
        }
        if (pending.empty()) {
            res.kind = CIHeightResult::LowerBoundAtCap;
            res.n = stage;
            res.stabilized = true;
            res.degree_trace = trace_;
            return res;
        }
        ++stage;
        for (auto& [img, combo] : pending) {
            GenEntry e{std::move(img), stage, false, -1, std::move(combo), {}, {}};
            uint32_t pp = uint32_t(p);
            Mono top;
            for (int i = 0; i < nvars_; ++i) top.e[i] = uint16_t(pp - 1);
            for (auto& [idx, comp] : decompose(e.poly)) e.vcomps.push_back({top / idx, comp});
            SparsePoly H = theta_.delta_rep() * e.poly;
            for (auto& [idx, comp] : decompose(H)) e.tcomps.push_back({top / idx, comp});
            gens_.push_back(std::move(e));
        }
    }
}

}  // namespace

CIHeightResult ci_height(const CIInput& input) {
    validate_input(input);
    int64_t cap = input.degree_cap > 0 ? input.degree_cap : ci_default_cap(input);

    if (auto check = nonsplit_checks(input)) {
        CIHeightResult res;
        res.kind = CIHeightResult::InfiniteByCheck;
        res.which_check = *check;
        res.cap = cap;
        res.regularity = regularity_label(input);
        return res;
    }
    ChainEngine engine(input, cap);
    return engine.run();
}

std::optional<int> nonsplit_checks(const CIInput& input) {
    validate_input(input);
    const Modulus& mod = input.gens.front().modulus();
    uint64_t p = mod.p();
    SparsePoly f = product_of_gens(input.gens);
    if (p >= 3 && f.pow(p - 2).in_m_bracket(uint32_t(p))) return 1;
    if (f.pow(p - 1).in_m_bracket(uint32_t(p))) {
        SparsePoly base = f.pow(p * (p - 2)) * delta1(f).value;
        uint32_t p2 = uint32_t(p * p);
        bool all_in = (f.pow(p - 2) * base).in_m_bracket(p2);
        for (size_t j = 0; all_in && j < input.gens.size(); ++j)
            all_in = (input.gens[j].frobenius_power() * base).in_m_bracket(p2);
        if (all_in) return 2;
    }
    return std::nullopt;
}

FixedPointResult verify_fixed_point(const CIInput& input, const std::vector<SparsePoly>& j_gens,
                                    int64_t cap) {
    validate_input(input);
    if (j_gens.empty()) throw std::invalid_argument("fixed point: empty candidate ideal");
    const Modulus& mod = input.gens.front().modulus();
    uint64_t p = mod.p();
    int nvars = input.grading.nvars();
    const Grading& gr = input.grading;

    // J must sit inside m^[p]; a generator escaping refutes exactly
    for (const auto& g : j_gens)
        if (auto esc = g.escape_term(uint32_t(p)))
            return {FixedPointResult::Refuted, "candidate ideal escapes m^[p]", g};

    // (I^[p] : I) must land in J
    for (const auto& c : colon_bracket(input.gens, p))
        if (!in_ideal_span(c, j_gens, gr, cap))
            return {FixedPointResult::Refuted,
                    "colon-ideal generator not found in the candidate ideal within the cap", c};

    // theta(F_*J ^ ker u) <= J, degreewise up to the cap
    SparsePoly f = product_of_gens(input.gens);
    SparsePoly fp1 = f.pow(p - 1);
    ThetaOperator theta = is_pth_power(fp1)
                              ? ThetaOperator::with_representative(SparsePoly::zero(mod, nvars), gr)
                              : ThetaOperator::with_representative(delta1(fp1, &gr).value, gr);

    Mono top;
    for (int i = 0; i < nvars; ++i) top.e[i] = uint16_t(p - 1);

    struct Col {
        SparsePoly v;  // u(x^gamma g)
        SparsePoly t;  // theta(x^gamma g)
        Mono gamma;
        uint32_t gen;
    };
    std::vector<Col> columns;
    for (uint32_t gi = 0; gi < j_gens.size(); ++gi) {
        auto vcomp = decompose(j_gens[gi]);
        SparsePoly H = theta.delta_rep() * j_gens[gi];
        auto tcomp = decompose(H);
        std::vector<std::pair<Mono, SparsePoly>> vmap, tmap;
        for (auto& [idx, c] : vcomp) vmap.push_back({top / idx, c});
        for (auto& [idx, c] : tcomp) tmap.push_back({top / idx, c});
        for (auto& [gamma, t] : tmap) {
            SparsePoly v = SparsePoly::zero(mod, nvars);
            for (auto& [vg, vv] : vmap)
                if (vg == gamma) { v = vv; break; }
            columns.push_back({v, t, gamma, gi});
        }
        for (auto& [gamma, v] : vmap) {
            bool seen = false;
            for (auto& c : columns)
                if (c.gen == gi && c.gamma == gamma) { seen = true; break; }
            if (!seen) columns.push_back({v, SparsePoly::zero(mod, nvars), gamma, gi});
        }
    }

    Eliminator elim(mod, true);
    std::unordered_map<Mono, uint32_t, MonoHash> colmap;
    auto intern = [&](const SparsePoly& q) {
        SparseRow row;
        for (const auto& t : q.terms()) {
            auto [it, fresh] = colmap.try_emplace(t.m, uint32_t(colmap.size()));
            row.push_back({it->second, t.c});
        }
        std::sort(row.begin(), row.end());
        return row;
    };

    struct RowSrc {
        uint32_t col;
        Mono beta;
    };
    std::vector<RowSrc> sources;
    struct QueueRow {
        int64_t deg;
        uint32_t col;
        Mono beta;
    };
    std::vector<QueueRow> queue;
    for (uint32_t ci = 0; ci < columns.size(); ++ci) {
        int64_t base = wdeg(gr, j_gens[columns[ci].gen]) + gr.term_total_degree(columns[ci].gamma);
        int64_t left = cap - base;
        if (left < 0) continue;
        for (const Mono& beta : monomials_up_to(gr, left / int64_t(p)))
            queue.push_back({base + int64_t(p) * gr.term_total_degree(beta), ci, beta});
    }
    std::stable_sort(queue.begin(), queue.end(), [](const QueueRow& a, const QueueRow& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (a.col != b.col) return a.col < b.col;
        return mono_less(a.beta, b.beta);
    });

    for (const auto& qr : queue) {
        sources.push_back({qr.col, qr.beta});
        auto r = elim.add_row(intern(columns[qr.col].v.times_monomial(qr.beta)));
        if (!r.reduced_to_zero) continue;
        SparsePoly img = SparsePoly::zero(mod, nvars);
        for (const auto& [idx, c] : r.history)
            img = img + columns[sources[idx].col].t.times_monomial(sources[idx].beta, c);
        if (img.is_zero()) continue;
        if (!in_ideal_span(img, j_gens, gr, cap))
            return {FixedPointResult::Refuted,
                    "theta image of a kernel element not found in the candidate ideal within the cap",
                    img};
    }
    return {FixedPointResult::VerifiedUpToCap,
            "closure verified for all kernel elements of weighted degree <= " + std::to_string(cap),
            std::nullopt};
}

TupleCheckResult verify_splitting_tuple(const CIInput& input, const std::vector<SparsePoly>& tuple,
                                        int64_t cap) {
    validate_input(input);
    if (tuple.empty()) return {false, "empty tuple"};
    const Modulus& mod = input.gens.front().modulus();
    uint64_t p = mod.p();
    int n = int(tuple.size());

    if (!tuple[0].escape_term(uint32_t(p)))
        return {false, "condition (1) fails: g_1 lies in m^[p]"};
    for (int i = 1; i < n; ++i)
        if (!in_ker_u(tuple[size_t(i)]))
            return {false, "condition (1) fails: u(F_* g_" + std::to_string(i + 1) + ") != 0"};

    for (int s = 1; s <= n; ++s) {
        std::vector<SparsePoly> ips = bracket_power_ideal_gens(input.gens, [&] {
            uint64_t q = 1;
            for (int i = 0; i < s; ++i) q *= p;
            return q;
        }());
        for (size_t j = 0; j < input.gens.size(); ++j) {
            SparsePoly acc = SparsePoly::zero(mod, input.grading.nvars());
            for (int r = 0; r + s <= n; ++r) {
                SparsePoly dr = r == 0 ? input.gens[j] : delta_n_rep(input.gens[j], r).value;
                acc = acc + u_top_iter(tuple[size_t(r + s - 1)] * dr, uint32_t(r));
            }
            if (!in_ideal_span(acc, ips, input.grading, cap))
                return {false, "condition (2) fails at s = " + std::to_string(s) +
                                   ", generator " + std::to_string(j + 1)};
        }
    }
    return {true, "splitting tuple verified"};
}

// g_1 = theta(A_{n-1}) (the escape), g_i = f^{p^i - p} A_{n+1-i} for i >= 2.
std::vector<SparsePoly> splitting_tuple_from_certificate(const CIInput& input,
                                                         const CICertificate& cert) {
    uint64_t p = input.gens.front().modulus().p();
    SparsePoly f = product_of_gens(input.gens);
    std::vector<SparsePoly> tuple;
    tuple.push_back(cert.final_escape);
    uint64_t pi = p;
    for (size_t k = cert.chain.size(); k-- > 0;) {
        pi *= p;
        tuple.push_back(f.pow(pi - p) * cert.chain[k]);
    }
    return tuple;
}

bool replay_ci_certificate(const CIInput& input, const CICertificate& cert, int n,
                           std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    validate_input(input);
    const Modulus& mod = input.gens.front().modulus();
    uint64_t p = mod.p();
    const Grading& gr = input.grading;
    std::vector<SparsePoly> i1 = colon_bracket(input.gens, p);

    auto i1_combination = [&](const std::vector<SparsePoly>& cof) {
        SparsePoly acc = SparsePoly::zero(mod, gr.nvars());
        for (size_t i = 0; i < cof.size() && i < i1.size(); ++i) acc = acc + cof[i] * i1[i];
        return acc;
    };

    if (n == 1) {
        if (cert.i1_cofactors.size() != 1) return fail("height-1 certificate needs one cofactor row");
        if (i1_combination(cert.i1_cofactors[0]) != cert.final_escape)
            return fail("final element is not the stated I_1 combination");
        if (!cert.final_escape.escape_term(uint32_t(p))) return fail("final element lies in m^[p]");
        return true;
    }
    if (int(cert.chain.size()) != n - 1) return fail("chain length mismatch");
    if (cert.i1_cofactors.size() != cert.chain.size()) return fail("cofactor row count mismatch");

    SparsePoly f = product_of_gens(input.gens);
    SparsePoly fp1 = f.pow(p - 1);
    ThetaOperator theta =
        is_pth_power(fp1)
            ? ThetaOperator::with_representative(SparsePoly::zero(mod, gr.nvars()), gr)
            : ThetaOperator::with_representative(delta1(fp1, &gr).value, gr);

    for (size_t k = 0; k < cert.chain.size(); ++k) {
        if (!in_ker_u(cert.chain[k]))
            return fail("chain element " + std::to_string(k + 1) + " is not in ker(u)");
        SparsePoly expect = i1_combination(cert.i1_cofactors[k]);
        if (k > 0) expect = expect + theta.apply(cert.chain[k - 1]);
        if (cert.chain[k] != expect)
            return fail("chain element " + std::to_string(k + 1) +
                        " does not match theta of its predecessor modulo I_1");
    }
    if (theta.apply(cert.chain.back()) != cert.final_escape)
        return fail("final element is not theta of the last chain element");
    if (!cert.final_escape.escape_term(uint32_t(p))) return fail("final element lies in m^[p]");
    return true;
}

}  // namespace qfs
