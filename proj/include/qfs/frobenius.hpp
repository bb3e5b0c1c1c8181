#pragma once

#include <vector>

#include "qfs/poly.hpp"

namespace qfs {

// Frobenius basis decomposition over F_p:  a = sum_e comp(a,e)^p * x^e with e
// running over {0,...,p-1}^N.  Over the prime field the coefficientwise p-th
// root is the identity, so components are read straight off the terms.

inline void require_frob_index(const SparsePoly& a, const Mono& e) {
    uint32_t p = uint32_t(a.modulus().p());
    if (!a.modulus().is_field()) throw std::invalid_argument("frobenius: expects F_p");
    for (int i = 0; i < a.nvars(); ++i)
        if (e.e[i] >= p) throw std::invalid_argument("frobenius: component index out of range");
    for (int i = a.nvars(); i < kMaxVars; ++i)
        if (e.e[i]) throw std::invalid_argument("frobenius: component index out of range");
}

inline Mono top_index(const SparsePoly& a) {
    Mono e;
    uint16_t q = uint16_t(a.modulus().p() - 1);
    for (int i = 0; i < a.nvars(); ++i) e.e[i] = q;
    return e;
}

// comp(a, e): terms of a congruent to e mod p, with exponents shifted down by
// e and divided by p.
inline SparsePoly component(const SparsePoly& a, const Mono& e) {
    require_frob_index(a, e);
    uint32_t p = uint32_t(a.modulus().p());
    std::vector<Term> out;
    for (const auto& t : a.terms()) {
        if (!t.m.divisible_by(e)) continue;
        Mono d = t.m / e;
        if (!d.all_divisible_by(p)) continue;
        out.push_back({d.divided_exponents(p), t.c});
    }
    return SparsePoly::from_terms(a.modulus(), a.nvars(), std::move(out));
}

// All nonzero components, keyed by index, in graded-lex index order.
inline std::vector<std::pair<Mono, SparsePoly>> decompose(const SparsePoly& a) {
    uint32_t p = uint32_t(a.modulus().p());
    std::vector<std::pair<Mono, std::vector<Term>>> buckets;
    for (const auto& t : a.terms()) {
        Mono e = t.m.mod_exponents(p);
        Mono q = (t.m / e).divided_exponents(p);
        bool found = false;
        for (auto& [idx, terms] : buckets)
            if (idx == e) {
                terms.push_back({q, t.c});
                found = true;
                break;
            }
        if (!found) buckets.push_back({e, {Term{q, t.c}}});
    }
    std::vector<std::pair<Mono, SparsePoly>> out;
    out.reserve(buckets.size());
    for (auto& [e, terms] : buckets)
        out.push_back({e, SparsePoly::from_terms(a.modulus(), a.nvars(), std::move(terms))});
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return mono_less(x.first, y.first); });
    return out;
}

inline SparsePoly reassemble(Modulus mod, int nvars,
                             const std::vector<std::pair<Mono, SparsePoly>>& comps) {
    SparsePoly r = SparsePoly::zero(mod, nvars);
    for (const auto& [e, c] : comps) r = r + c.frobenius_power().times_monomial(e);
    return r;
}

// u, the dual of the basis element F_*(x_1...x_N)^{p-1}; generator of
// Hom(F_*S, S).
inline SparsePoly u_top(const SparsePoly& a) { return component(a, top_index(a)); }

inline SparsePoly u_top_iter(const SparsePoly& a, uint32_t l) {
    SparsePoly r = a;
    for (uint32_t i = 0; i < l; ++i) r = u_top(r);
    return r;
}

inline bool in_ker_u(const SparsePoly& a) { return u_top(a).is_zero(); }

// Normal form modulo the Frobenius image F(S): over F_p the image is spanned
// by the monomials with all exponents divisible by p, so the normal form just
// deletes those terms.
inline SparsePoly mod_frobenius(const SparsePoly& a) {
    uint32_t p = uint32_t(a.modulus().p());
    std::vector<Term> out;
    for (const auto& t : a.terms())
        if (!t.m.all_divisible_by(p)) out.push_back(t);
    return SparsePoly::from_terms(a.modulus(), a.nvars(), std::move(out));
}

inline bool equal_mod_frobenius(const SparsePoly& a, const SparsePoly& b) {
    return mod_frobenius(a) == mod_frobenius(b);
}

inline bool is_pth_power(const SparsePoly& a) {
    uint32_t p = uint32_t(a.modulus().p());
    for (const auto& t : a.terms())
        if (!t.m.all_divisible_by(p)) return false;
    return true;
}

}  // namespace qfs
