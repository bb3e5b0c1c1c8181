#include "qfs/witt.hpp"

#include "qfs/frobenius.hpp"

namespace qfs {

namespace {

constexpr size_t kOracleTermGuard = 64;

Modulus lift_ring(const Modulus& base, int length) {
    return Modulus(base.p(), uint32_t(2 * length));
}

// exact division of every coefficient by p^k inside Z/p^{2n}; divisibility
// failure indicates a precision bug and is treated as an internal error
SparsePoly divide_exact(const SparsePoly& a, uint64_t pk, const Modulus& ring) {
    std::vector<Term> out;
    out.reserve(a.term_count());
    for (const auto& t : a.terms()) {
        if (t.c % pk != 0)
            throw std::logic_error("witt: ghost back-solve hit a non-divisible coefficient");
        uint64_t c = t.c / pk;
        if (c % ring.pe()) out.push_back({t.m, c % ring.pe()});
    }
    return SparsePoly::from_terms(ring, a.nvars(), std::move(out));
}

// back-solve s_m from ghost values: p^m s_m = gamma_m - sum_{i<m} p^i s_i^{p^{m-i}}
std::vector<SparsePoly> ghost_backsolve(const std::vector<SparsePoly>& gamma, const Modulus& base,
                                        int nvars) {
    int n = int(gamma.size());
    Modulus ring = gamma.front().modulus();
    uint64_t p = base.p();
    std::vector<SparsePoly> lifted;  // s_i values in the lift ring
    std::vector<SparsePoly> out;
    for (int m = 0; m < n; ++m) {
        SparsePoly acc = gamma[size_t(m)];
        uint64_t pi = 1;
        for (int i = 0; i < m; ++i) {
            uint64_t q = 1;
            for (int k = 0; k < m - i; ++k) q *= p;
            acc = acc - lifted[size_t(i)].pow(q).scaled(pi);
            pi *= p;
        }
        SparsePoly sm = divide_exact(acc, pi, ring);
        lifted.push_back(sm);
        out.push_back(sm.reduce_mod_p());
    }
    return out;
}

}  // namespace

WittVector::WittVector(Modulus base, int nvars, int length) : base_(base), nvars_(nvars) {
    if (!base.is_field()) throw std::invalid_argument("witt: base must be F_p");
    if (length < 1) throw std::invalid_argument("witt: length must be >= 1");
    lift_ring(base, length);  // validates that p^{2n} fits
    comps_.assign(size_t(length), SparsePoly::zero(base, nvars));
}

WittVector WittVector::teichmuller(const SparsePoly& a, int length) {
    WittVector w(a.modulus(), a.nvars(), length);
    w.comps_[0] = a;
    return w;
}

void WittVector::set(int i, SparsePoly v) {
    if (v.modulus() != base_ || v.nvars() != nvars_)
        throw std::invalid_argument("witt: component ring mismatch");
    comps_[size_t(i)] = std::move(v);
}

bool WittVector::operator==(const WittVector& o) const {
    if (length() != o.length() || nvars_ != o.nvars_ || base_ != o.base_) return false;
    for (int i = 0; i < length(); ++i)
        if (comps_[size_t(i)] != o.comps_[size_t(i)]) return false;
    return true;
}

std::vector<SparsePoly> WittVector::ghost() const {
    int n = length();
    Modulus ring = lift_ring(base_, n);
    uint64_t p = base_.p();
    std::vector<SparsePoly> lifts;
    lifts.reserve(size_t(n));
    for (const auto& c : comps_) lifts.push_back(c.lift_to(ring.e()));
    std::vector<SparsePoly> gh;
    for (int m = 0; m < n; ++m) {
        SparsePoly acc = SparsePoly::zero(ring, nvars_);
        uint64_t pi = 1;
        for (int i = 0; i <= m; ++i) {
            uint64_t q = 1;
            for (int k = 0; k < m - i; ++k) q *= p;
            acc = acc + lifts[size_t(i)].pow(q).scaled(pi);
            pi *= p;
        }
        gh.push_back(acc);
    }
    return gh;
}

WittVector WittVector::V() const {
    WittVector w(base_, nvars_, length() + 1);
    for (int i = 0; i < length(); ++i) w.comps_[size_t(i + 1)] = comps_[size_t(i)];
    return w;
}

WittVector WittVector::F() const {
    WittVector w(base_, nvars_, length());
    for (int i = 0; i < length(); ++i) w.comps_[size_t(i)] = comps_[size_t(i)].frobenius_power();
    return w;
}

WittVector WittVector::R() const {
    if (length() < 2) throw std::invalid_argument("witt: cannot restrict length-1 vector");
    WittVector w(base_, nvars_, length() - 1);
    for (int i = 0; i + 1 < length(); ++i) w.comps_[size_t(i)] = comps_[size_t(i)];
    return w;
}

WittVector WittVector::mul_p() const {
    WittVector shifted = F().V().R();  // VF = p at equal length
    return shifted;
}

namespace {

WittVector from_ghost_op(const WittVector& a, const WittVector& b,
                         SparsePoly (*op)(const SparsePoly&, const SparsePoly&)) {
    if (a.length() != b.length() || a.nvars() != b.nvars() || !(a.base() == b.base()))
        throw std::invalid_argument("witt: operand shape mismatch");
    auto ga = a.ghost(), gb = b.ghost();
    std::vector<SparsePoly> gamma;
    gamma.reserve(ga.size());
    for (size_t i = 0; i < ga.size(); ++i) gamma.push_back(op(ga[i], gb[i]));
    auto comps = ghost_backsolve(gamma, a.base(), a.nvars());
    WittVector w(a.base(), a.nvars(), a.length());
    for (int i = 0; i < a.length(); ++i) w.set(i, comps[size_t(i)]);
    return w;
}

SparsePoly op_add(const SparsePoly& x, const SparsePoly& y) { return x + y; }
SparsePoly op_sub(const SparsePoly& x, const SparsePoly& y) { return x - y; }
SparsePoly op_mul(const SparsePoly& x, const SparsePoly& y) { return x * y; }

}  // namespace

WittVector witt_add(const WittVector& a, const WittVector& b) { return from_ghost_op(a, b, op_add); }
WittVector witt_sub(const WittVector& a, const WittVector& b) { return from_ghost_op(a, b, op_sub); }
WittVector witt_mul(const WittVector& a, const WittVector& b) { return from_ghost_op(a, b, op_mul); }

std::vector<SparsePoly> delta_vec_oracle(const SparsePoly& a, int n) {
    if (a.term_count() > kOracleTermGuard)
        throw std::invalid_argument("witt oracle: term count guard exceeded");
    WittVector w = WittVector::teichmuller(a, n);
    for (const auto& t : a.terms())
        w = witt_sub(w, WittVector::teichmuller(
                            SparsePoly::monomial(a.modulus(), a.nvars(), t.m, t.c), n));
    if (!w[0].is_zero()) throw std::logic_error("witt oracle: nonzero 0-th carry component");
    std::vector<SparsePoly> out;
    for (int i = 1; i < n; ++i) out.push_back(w[i]);
    return out;
}

SparsePoly delta_r_oracle(const SparsePoly& a, int r) {
    if (r < 1) throw std::invalid_argument("witt oracle: r must be >= 1");
    return delta_vec_oracle(a, r + 1)[size_t(r - 1)];
}

SparsePoly Delta_r_oracle(const SparsePoly& a, int r) {
    if (r < 1) throw std::invalid_argument("witt oracle: r must be >= 1");
    // Carry map alpha -> Delta(alpha_0) + shift(alpha), a Witt-vector sum:
    // alpha = [alpha_0] + V(shift(alpha)) and [alpha_0] - sum [terms] =
    // V(Delta(alpha_0)). Each application drops the usable length by one.
    WittVector alpha = WittVector::teichmuller(a, r + 1);
    for (int step = 0; step < r; ++step) {
        int len = alpha.length();
        auto dv = delta_vec_oracle(alpha[0], len);
        WittVector dvec(a.modulus(), a.nvars(), len - 1);
        WittVector shifted(a.modulus(), a.nvars(), len - 1);
        for (int i = 0; i + 1 < len; ++i) {
            dvec.set(i, dv[size_t(i)]);
            shifted.set(i, alpha[i + 1]);
        }
        alpha = witt_add(dvec, shifted);
    }
    return mod_frobenius(alpha[0]);
}

SparsePoly sigma_n_oracle(const std::vector<SparsePoly>& comps) {
    if (comps.empty()) throw std::invalid_argument("sigma: empty vector");
    int n = int(comps.size());
    SparsePoly acc = comps[size_t(n - 1)];
    for (int i = 0; i + 1 < n; ++i) acc = acc + Delta_r_oracle(comps[size_t(i)], n - 1 - i);
    return mod_frobenius(acc);
}

}  // namespace qfs
