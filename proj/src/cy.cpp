#include "qfs/cy.hpp"

#include <unordered_map>

#include "qfs/delta.hpp"
#include "qfs/frobenius.hpp"

namespace qfs {

CYHeightResult cy_height(const SparsePoly& f, const Grading& grading, CYOptions opts) {
    if (!f.modulus().is_field())
        throw std::invalid_argument(
            "cy_height: coefficients must lie in the prime field F_p (heights are invariant "
            "under base field extension, so prime-field input suffices)");
    if (f.is_zero()) throw std::invalid_argument("cy_height: zero polynomial");
    DegreeResult deg = grading.degree(f);
    if (deg.kind != DegreeResult::Homogeneous)
        throw std::invalid_argument("cy_height: input is not homogeneous");
    if (deg.degree != grading.mu())
        throw std::invalid_argument(
            "cy_height: deg f != mu; use the complete-intersection engine for this input");

    uint64_t p = f.modulus().p();
    SparsePoly g = f.pow(p - 1);

    CYHeightResult res;
    res.kind = CYHeightResult::LowerBoundAtCap;
    std::optional<ThetaOperator> theta;  // built lazily; height-1 inputs never need it
    std::unordered_map<uint64_t, std::vector<std::pair<SparsePoly, int>>> seen;

    int i = 1;
    while (true) {
        if (opts.keep_chain) res.chain.push_back(g);
        if (!u_top(g).is_zero()) {
            res.kind = CYHeightResult::Finite;
            res.n = i;
            return res;
        }
        auto& bucket = seen[g.hash()];
        for (const auto& [prev, idx] : bucket) {
            if (prev == g) {
                res.kind = CYHeightResult::Infinite;
                res.cycle_start = idx;
                res.cycle_len = i - idx;
                return res;
            }
        }
        bucket.push_back({g, i});
        if (opts.max_iter && i >= *opts.max_iter) {
            res.kind = CYHeightResult::LowerBoundAtCap;
            res.n = i;
            res.cap = *opts.max_iter;
            return res;
        }
        if (!theta) theta = ThetaOperator::for_power(f, grading);
        g = theta->apply(g);
        ++i;
    }
}

std::vector<bool> cy_height_fn_oracle(const SparsePoly& f, const Grading& grading, int n_max) {
    if (n_max < 1 || n_max > 5) throw std::invalid_argument("fn oracle: n_max must be in [1,5]");
    if (!grading.is_calabi_yau(f)) throw std::invalid_argument("fn oracle: deg f != mu");
    uint64_t p = f.modulus().p();
    int n = f.nvars();
    SparsePoly fp1 = f.pow(p - 1);
    SparsePoly drep = delta1(fp1, &grading).value;

    auto prune = [&](const SparsePoly& a, uint32_t box) {
        std::vector<Term> keep;
        keep.reserve(a.term_count());
        for (const auto& t : a.terms())
            if (t.m.all_below(box + 1)) keep.push_back(t);
        return SparsePoly::from_terms(a.modulus(), a.nvars(), std::move(keep));
    };

    std::vector<bool> out;
    for (int k = 1; k <= n_max; ++k) {
        uint64_t q = 1;
        for (int i = 0; i < k; ++i) q *= p;
        uint32_t box = uint32_t(q - 1);
        SparsePoly fn = prune(fp1, box);
        for (int j = 0; j + 2 <= k; ++j)
            fn = prune(fn * drep.frobenius_power(uint32_t(j)), box);
        Mono target;
        for (int i = 0; i < n; ++i) target.e[i] = uint16_t(q - 1);
        out.push_back(fn.coefficient(target) != 0);
    }
    return out;
}

SparsePoly fermat_poly(int N, uint64_t p) {
    Modulus field(p, 1);
    std::vector<Term> terms;
    for (int i = 0; i < N; ++i) terms.push_back({Mono::var(i, uint16_t(N)), 1});
    return SparsePoly::from_terms(field, N, std::move(terms));
}

CYHeightResult fermat_height(int N, uint64_t p) {
    if (N < 4) throw std::invalid_argument("fermat_height: N must be >= 4");
    CYHeightResult res;
    if (p % uint64_t(N) == 1) {
        res.kind = CYHeightResult::Finite;
        res.n = 1;
    } else {
        res.kind = CYHeightResult::Infinite;
    }
    return res;
}

std::vector<std::string> unbounded_family_vars(int h) {
    int N = (1 << h) + 1;
    std::vector<std::string> vars = {"a", "b", "c"};
    for (int i = 1; i <= N - 3; ++i) vars.push_back("x" + std::to_string(i));
    return vars;
}

// f = a^N + b^N + c^N + x_1^N + ... + x_{N-3}^N + (b+c) g with N = 2^h + 1 and
// g = c^2 x_1...x_{N-3} + x_{N_1}^2...x_{N-3}^2 + x_{N_2}^4...x_{N_1-1}^4 +
//     ... + x_1^{2^{h-1}} x_2^{2^{h-1}},
// where N_0 = N-2 and N_{j-1} - N_j = 2^{h-j}. Every block then has degree
// 2^h = N - 1, so f is homogeneous of degree N.
SparsePoly unbounded_family_p2(int h) {
    if (h < 1) throw std::invalid_argument("unbounded family: h must be >= 1");
    int N = (1 << h) + 1;
    if (N > kMaxVars)
        throw std::invalid_argument("unbounded family: 2^h + 1 variables exceed the supported arity");
    Modulus f2(2, 1);
    int nv = N;  // a=0, b=1, c=2, x_i = 2+i
    std::vector<Term> fterms;
    for (int i = 0; i < nv; ++i) fterms.push_back({Mono::var(i, uint16_t(N)), 1});
    SparsePoly f = SparsePoly::from_terms(f2, nv, std::move(fterms));
    if (h == 1) return f;

    int nx = N - 3;
    std::vector<Term> gterms;
    {
        Mono m = Mono::var(2, 2);  // c^2 x_1 ... x_{N-3}
        for (int i = 1; i <= nx; ++i) m = m * Mono::var(2 + i);
        gterms.push_back({m, 1});
    }
    // blocks x_{N_j}^{2^j} ... x_{N_{j-1}-1}^{2^j}, j = 1..h-1, N_j = N_{j-1} - 2^{h-j}
    int prev = N - 2;
    for (int j = 1; j <= h - 1; ++j) {
        int cur = prev - (1 << (h - j));
        Mono m;
        for (int i = cur; i <= prev - 1; ++i) m = m * Mono::var(2 + i, uint16_t(1 << j));
        gterms.push_back({m, 1});
        prev = cur;
    }
    SparsePoly g = SparsePoly::from_terms(f2, nv, std::move(gterms));
    SparsePoly bc = SparsePoly::variable(f2, nv, 1) + SparsePoly::variable(f2, nv, 2);
    return f + bc * g;
}

}  // namespace qfs
