#include "qfs/theta.hpp"

#include <algorithm>
#include <cmath>

#include "qfs/frobenius.hpp"

namespace qfs {

namespace {

// estimated monomial count of f^k from the composition bound and the dense
// degree bound, whichever is smaller
double power_size_estimate(const SparsePoly& f, uint64_t k) {
    double comp = 1, dense = 1;
    size_t t = f.term_count();
    for (uint64_t i = 1; i < t; ++i) comp = comp * double(k + i) / double(i);
    uint64_t deg = uint64_t(f.max_total_degree()) * k;
    for (int i = 1; i < f.nvars(); ++i) dense = dense * double(deg + i) / double(i);
    return std::min(comp, dense);
}

constexpr double kMaterializeThreshold = 3e6;

}  // namespace

uint64_t multinomial_mod_p(uint64_t p, uint64_t k, const std::vector<uint64_t>& parts) {
    uint64_t sum = 0;
    for (uint64_t x : parts) sum += x;
    if (sum != k) return 0;
    Modulus field(p, 1);
    // factorials of digits
    std::vector<uint64_t> fact(p, 1);
    for (uint64_t i = 2; i < p; ++i) fact[i] = field.mul(fact[i - 1], i);
    uint64_t result = 1;
    std::vector<uint64_t> rem = parts;
    uint64_t krem = k;
    while (krem > 0) {
        uint64_t kd = krem % p;
        uint64_t dsum = 0, num = fact[kd], den = 1;
        for (auto& r : rem) {
            uint64_t d = r % p;
            dsum += d;
            den = field.mul(den, fact[d]);
            r /= p;
        }
        if (dsum != kd) return 0;  // carry: the digit multinomial vanishes mod p
        result = field.mul(result, field.mul(num, field.inv(den)));
        krem /= p;
    }
    return result;
}

ThetaOperator ThetaOperator::with_representative(SparsePoly delta_rep, const Grading& grading) {
    ThetaOperator op(std::move(delta_rep), grading);
    op.build_buckets();
    return op;
}

ThetaOperator ThetaOperator::for_power(const SparsePoly& f, const Grading& grading) {
    uint64_t p = f.modulus().p();
    SparsePoly fp1 = f.pow(p - 1);
    if (is_pth_power(fp1)) {
        // Delta_1(f^{p-1}) lies in F(S); the zero representative is valid on ker(u)
        ThetaOperator op(SparsePoly::zero(f.modulus(), f.nvars()), grading);
        op.zero_rep_ = true;
        return op;
    }

    bool diagonal_ok = p >= 3;
    std::vector<uint16_t> dexp(size_t(f.nvars()), 0);
    std::vector<uint64_t> dcoef(size_t(f.nvars()), 0);
    for (const auto& t : f.terms()) {
        int var = -1;
        for (int i = 0; i < f.nvars(); ++i) {
            if (t.m.e[i] == 0) continue;
            if (var >= 0) { var = -2; break; }
            var = i;
        }
        if (var < 0 || dexp[size_t(var)] != 0 || t.m.e[var] % p == 0) {
            diagonal_ok = false;
            break;
        }
        dexp[size_t(var)] = t.m.e[var];
        dcoef[size_t(var)] = t.c;
    }

    if (diagonal_ok && power_size_estimate(fp1, p) > kMaterializeThreshold) {
        ThetaOperator op(SparsePoly::zero(f.modulus(), f.nvars()), grading);
        op.diagonal_ = Diagonal{std::move(dexp), std::move(dcoef), p * (p - 2), delta1(f).value};
        return op;
    }
    return with_representative(delta1(fp1, &grading).value, grading);
}

void ThetaOperator::build_buckets() {
    uint32_t p = uint32_t(delta_rep_.modulus().p());
    int n = delta_rep_.nvars();
    for (uint32_t i = 0; i < delta_rep_.term_count(); ++i)
        buckets_[delta_rep_.terms()[i].m.mod_class_key(p, n)].push_back(i);
}

SparsePoly ThetaOperator::apply(const SparsePoly& a) const {
    if (zero_rep_) return SparsePoly::zero(a.modulus(), a.nvars());
    if (diagonal_) return apply_diagonal(a);
    return apply_materialized(a);
}

SparsePoly ThetaOperator::apply_materialized(const SparsePoly& a) const {
    const Modulus& mod = a.modulus();
    uint32_t p = uint32_t(mod.p());
    int n = a.nvars();
    std::unordered_map<Mono, uint64_t, MonoHash> acc;
    for (const auto& ta : a.terms()) {
        Mono want;  // class of top - m_a mod p
        for (int i = 0; i < n; ++i)
            want.e[i] = uint16_t((p - 1 + p - ta.m.e[i] % p) % p);
        auto it = buckets_.find(want.mod_class_key(p, n));
        if (it == buckets_.end()) continue;
        for (uint32_t idx : it->second) {
            const Term& td = delta_rep_.terms()[idx];
            Mono out;
            for (int i = 0; i < n; ++i)
                out.e[i] = uint16_t((uint32_t(td.m.e[i]) + ta.m.e[i] - (p - 1)) / p);
            uint64_t& slot = acc[out];
            slot = mod.add(slot, mod.mul(td.c, ta.c));
        }
    }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c) terms.push_back({m, c});
    return SparsePoly::from_terms(mod, n, std::move(terms));
}

// theta(a) = -u(f^{p(p-2)} Delta_1(f) a) with the f-power left implicit: for
// each term of Delta_1(f)*a the congruence pins the exponent pattern of the
// f^{p(p-2)} term mod p, and Lucas' theorem supplies its coefficient.
SparsePoly ThetaOperator::apply_diagonal(const SparsePoly& a) const {
    const Modulus& mod = a.modulus();
    uint64_t p = mod.p();
    Modulus field(p, 1);
    int n = a.nvars();
    const Diagonal& dg = *diagonal_;
    SparsePoly b = dg.small_delta * a;

    std::vector<int> support;
    for (int i = 0; i < n; ++i)
        if (dg.dexp[size_t(i)]) support.push_back(i);
    size_t s = support.size();

    std::unordered_map<Mono, uint64_t, MonoHash> acc;
    std::vector<uint64_t> alpha(s), base(s);
    for (const auto& tb : b.terms()) {
        // residues forced on the support, exact match needed elsewhere
        bool ok = true;
        uint64_t rsum = 0;
        for (int i = 0; i < n && ok; ++i) {
            uint64_t need = (p - 1 + p - tb.m.e[i] % p) % p;
            bool in_support = dg.dexp[size_t(i)] != 0;
            if (!in_support) {
                if (need != 0) ok = false;
            }
        }
        if (!ok) continue;
        for (size_t j = 0; j < s; ++j) {
            int i = support[j];
            uint64_t need = (p - 1 + p - tb.m.e[i] % p) % p;
            uint64_t dinv = field.inv(dg.dexp[size_t(i)] % p);
            base[j] = (need * dinv) % p;
            rsum += base[j];
        }
        if (rsum > dg.power || (dg.power - rsum) % p != 0) continue;
        uint64_t beta_total = (dg.power - rsum) / p;

        // enumerate weak compositions beta of beta_total into s parts
        std::vector<uint64_t> beta(s, 0);
        beta[0] = beta_total;
        while (true) {
            for (size_t j = 0; j < s; ++j) alpha[j] = base[j] + p * beta[j];
            uint64_t coeff = multinomial_mod_p(p, dg.power, alpha);
            if (coeff) {
                uint64_t c = mod.mul(mod.neg(1), mod.mul(coeff, tb.c));
                for (size_t j = 0; j < s; ++j)
                    c = mod.mul(c, mod.pow(dg.dcoef[size_t(support[j])], alpha[j]));
                if (c) {
                    Mono out;
                    bool fits = true;
                    for (int i = 0; i < n; ++i) {
                        uint64_t fexp = 0;
                        for (size_t j = 0; j < s; ++j)
                            if (support[j] == i) fexp = alpha[j] * dg.dexp[size_t(i)];
                        uint64_t e = (fexp + tb.m.e[i] - (p - 1)) / p;
                        if (e > 0xffff) { fits = false; break; }
                        out.e[i] = uint16_t(e);
                    }
                    if (!fits) throw std::overflow_error("theta: exponent overflow");
                    uint64_t& slot = acc[out];
                    slot = mod.add(slot, c);
                }
            }
            if (s <= 1 || beta[s - 1] == beta_total) break;
            size_t pos = 0;
            while (beta[pos] == 0) ++pos;
            if (pos + 1 == s) break;
            uint64_t v = beta[pos];
            beta[pos] = 0;
            beta[0] = v - 1;
            beta[pos + 1] += 1;
        }
    }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c) terms.push_back({m, c});
    return SparsePoly::from_terms(mod, n, std::move(terms));
}

}  // namespace qfs
