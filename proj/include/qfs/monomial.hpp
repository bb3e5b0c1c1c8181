#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <stdexcept>

namespace qfs {

inline constexpr int kMaxVars = 12;

// Exponent vector with one slot per variable. The ambient variable count is
// carried by the polynomial; unused slots stay zero so comparison and hashing
// can run over the whole array.
struct Mono {
    std::array<uint16_t, kMaxVars> e{};

    uint32_t total_degree() const {
        uint32_t d = 0;
        for (int i = 0; i < kMaxVars; ++i) d += e[i];
        return d;
    }
    bool is_one() const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i]) return false;
        return true;
    }
    bool operator==(const Mono& o) const { return e == o.e; }
    bool operator!=(const Mono& o) const { return e != o.e; }

    Mono operator*(const Mono& o) const {
        Mono r;
        for (int i = 0; i < kMaxVars; ++i) {
            uint32_t s = uint32_t(e[i]) + o.e[i];
            if (s > 0xffff) throw std::overflow_error("monomial exponent overflow");
            r.e[i] = uint16_t(s);
        }
        return r;
    }
    // componentwise subtraction; caller must ensure o divides *this
    Mono operator/(const Mono& o) const {
        Mono r;
        for (int i = 0; i < kMaxVars; ++i) {
            if (e[i] < o.e[i]) throw std::invalid_argument("monomial not divisible");
            r.e[i] = uint16_t(e[i] - o.e[i]);
        }
        return r;
    }
    bool divisible_by(const Mono& o) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] < o.e[i]) return false;
        return true;
    }
    bool all_below(uint32_t q) const {  // every exponent < q
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] >= q) return false;
        return true;
    }
    bool all_divisible_by(uint32_t q) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] % q) return false;
        return true;
    }
    Mono divided_exponents(uint32_t q) const {  // exponents / q, must be exact
        Mono r;
        for (int i = 0; i < kMaxVars; ++i) {
            if (e[i] % q) throw std::invalid_argument("exponent not divisible");
            r.e[i] = uint16_t(e[i] / q);
        }
        return r;
    }
    Mono scaled_exponents(uint32_t q) const {  // exponents * q
        Mono r;
        for (int i = 0; i < kMaxVars; ++i) {
            uint64_t s = uint64_t(e[i]) * q;
            if (s > 0xffff) throw std::overflow_error("monomial exponent overflow");
            r.e[i] = uint16_t(s);
        }
        return r;
    }
    Mono mod_exponents(uint32_t q) const {
        Mono r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = uint16_t(e[i] % q);
        return r;
    }
    uint64_t mod_class_key(uint32_t p, int nvars) const {
        uint64_t k = 0;
        for (int i = 0; i < nvars; ++i) k = k * p + (e[i] % p);
        return k;
    }

    static Mono var(int i, uint16_t k = 1) {
        Mono m;
        m.e[i] = k;
        return m;
    }
};

// Graded lexicographic order: total degree first, then lexicographic.
inline int mono_cmp(const Mono& a, const Mono& b) {
    uint32_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    for (int i = 0; i < kMaxVars; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
}
inline bool mono_less(const Mono& a, const Mono& b) { return mono_cmp(a, b) < 0; }

struct MonoHash {
    size_t operator()(const Mono& m) const {
        uint64_t h = 1469598103934665603ull;
        for (int i = 0; i < kMaxVars; ++i) {
            h ^= m.e[i];
            h *= 1099511628211ull;
        }
        return size_t(h);
    }
};

}  // namespace qfs
