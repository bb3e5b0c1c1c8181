#pragma once

#include <map>
#include <random>
#include <vector>

#include "qfs/parse.hpp"
#include "qfs/poly.hpp"

namespace testutil {

using qfs::Modulus;
using qfs::Mono;
using qfs::SparsePoly;

inline SparsePoly P(const std::string& text, uint64_t p, std::vector<std::string> vars,
                    uint32_t e = 1) {
    return qfs::parse_poly(text, vars, Modulus(p, e));
}

inline std::vector<std::string> xyz() { return {"x", "y", "z"}; }
inline std::vector<std::string> xyzw() { return {"x", "y", "z", "w"}; }

// random sparse polynomial: up to max_terms terms, exponents < max_exp
inline SparsePoly random_poly(std::mt19937_64& rng, uint64_t p, int nvars, int max_terms,
                              int max_exp, uint32_t e = 1) {
    Modulus mod(p, e);
    std::uniform_int_distribution<int> nt(0, max_terms);
    std::uniform_int_distribution<int> ex(0, max_exp - 1);
    std::uniform_int_distribution<uint64_t> cf(0, mod.pe() - 1);
    std::vector<qfs::Term> terms;
    int n = nt(rng);
    for (int i = 0; i < n; ++i) {
        Mono m;
        for (int v = 0; v < nvars; ++v) m.e[v] = uint16_t(ex(rng));
        terms.push_back({m, cf(rng)});
    }
    return SparsePoly::from_terms(mod, nvars, std::move(terms));
}

// independent naive polynomial arithmetic over exact integers, used as an
// oracle; monomials are plain exponent vectors
using IntPoly = std::map<std::vector<int>, long long>;

inline IntPoly to_int_poly(const SparsePoly& a) {
    IntPoly r;
    for (const auto& t : a.terms()) {
        std::vector<int> key(size_t(a.nvars()));
        for (int i = 0; i < a.nvars(); ++i) key[size_t(i)] = t.m.e[i];
        r[key] = (long long)t.c;
    }
    return r;
}

inline IntPoly int_mul(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            std::vector<int> m(ma.size());
            for (size_t i = 0; i < ma.size(); ++i) m[i] = ma[i] + mb[i];
            r[m] += ca * cb;
        }
    return r;
}

inline IntPoly int_add(const IntPoly& a, const IntPoly& b) {
    IntPoly r = a;
    for (const auto& [m, c] : b) r[m] += c;
    return r;
}

inline IntPoly int_scale(const IntPoly& a, long long c) {
    IntPoly r;
    for (const auto& [m, v] : a) r[m] = v * c;
    return r;
}

inline IntPoly int_pow(const IntPoly& a, int k) {
    IntPoly r{{std::vector<int>(a.empty() ? 0 : a.begin()->first.size(), 0), 1}};
    for (int i = 0; i < k; ++i) r = int_mul(r, a);
    return r;
}

inline SparsePoly from_int_poly(const IntPoly& a, Modulus mod, int nvars) {
    std::vector<qfs::Term> terms;
    for (const auto& [m, c] : a) {
        long long cc = c % (long long)mod.pe();
        if (cc < 0) cc += (long long)mod.pe();
        if (cc == 0) continue;
        Mono mono;
        for (int i = 0; i < nvars; ++i) mono.e[i] = uint16_t(m[size_t(i)]);
        terms.push_back({mono, (uint64_t)cc});
    }
    return SparsePoly::from_terms(mod, nvars, std::move(terms));
}

}  // namespace testutil
