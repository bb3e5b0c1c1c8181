#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qfs {

// Coefficient ring Z/p^e. e = 1 is the working field F_p; e > 1 carries the
// integer lifts used by the delta computation (e = 2) and the Witt oracle
// (e = 2n for length-n vectors).
class Modulus {
public:
    Modulus(uint64_t p, uint32_t e = 1) : p_(p), e_(e) {
        if (p < 2 || p > (uint64_t(1) << 31))
            throw std::invalid_argument("modulus: p out of range");
        if (!is_prime(p))
            throw std::invalid_argument("modulus: p = " + std::to_string(p) + " is not prime");
        if (e < 1)
            throw std::invalid_argument("modulus: precision exponent must be >= 1");
        pe_ = 1;
        for (uint32_t i = 0; i < e; ++i) {
            if (pe_ > UINT64_MAX / p)
                throw std::invalid_argument("modulus: p^e does not fit in 64 bits");
            pe_ *= p;
        }
    }

    uint64_t p() const { return p_; }
    uint32_t e() const { return e_; }
    uint64_t pe() const { return pe_; }
    bool is_field() const { return e_ == 1; }

    bool operator==(const Modulus& o) const { return p_ == o.p_ && e_ == o.e_; }
    bool operator!=(const Modulus& o) const { return !(*this == o); }

    uint64_t add(uint64_t a, uint64_t b) const {
        uint64_t s = a + b;
        return s >= pe_ ? s - pe_ : s;
    }
    uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + pe_ - b; }
    uint64_t neg(uint64_t a) const { return a == 0 ? 0 : pe_ - a; }
    uint64_t mul(uint64_t a, uint64_t b) const {
        return uint64_t((__uint128_t(a) * b) % pe_);
    }
    uint64_t pow(uint64_t a, uint64_t k) const {
        uint64_t r = 1 % pe_;
        a %= pe_;
        while (k) {
            if (k & 1) r = mul(r, a);
            a = mul(a, a);
            k >>= 1;
        }
        return r;
    }
    // Inverse of a unit; for e = 1 this is the field inverse.
    uint64_t inv(uint64_t a) const {
        if (a % p_ == 0) throw std::invalid_argument("modulus: not a unit");
        if (e_ == 1) return pow(a, p_ - 2);
        // lift the F_p inverse by Newton iteration
        uint64_t x = Modulus(p_, 1).pow(a % p_, p_ - 2);
        for (uint32_t prec = 1; prec < e_; prec *= 2)
            x = mul(x, sub(2 % pe_, mul(a, x)));
        return x;
    }
    uint64_t reduce(int64_t v) const {
        int64_t m = int64_t(pe_);
        int64_t r = v % m;
        if (r < 0) r += m;
        return uint64_t(r);
    }

    static bool is_prime(uint64_t n) {
        if (n < 2) return false;
        for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
            if (n == q) return true;
            if (n % q == 0) return false;
        }
        // deterministic Miller-Rabin, valid far beyond 2^32
        uint64_t d = n - 1;
        int s = 0;
        while ((d & 1) == 0) { d >>= 1; ++s; }
        for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
            uint64_t x = 1, base = a % n, k = d;
            while (k) {
                if (k & 1) x = uint64_t((__uint128_t(x) * base) % n);
                base = uint64_t((__uint128_t(base) * base) % n);
                k >>= 1;
            }
            if (x == 1 || x == n - 1) continue;
            bool witness = true;
            for (int i = 1; i < s; ++i) {
                x = uint64_t((__uint128_t(x) * x) % n);
                if (x == n - 1) { witness = false; break; }
            }
            if (witness) return false;
        }
        return true;
    }

private:
    uint64_t p_;
    uint32_t e_;
    uint64_t pe_;
};

}  // namespace qfs
