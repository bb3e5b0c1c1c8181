#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qfs/modulus.hpp"
#include "qfs/monomial.hpp"

namespace qfs {

struct Term {
    Mono m;
    uint64_t c;  // nonzero, canonical in [0, p^e)
};

// Sparse multivariate polynomial over Z/p^e. Terms are kept in descending
// graded-lex order with no zero coefficients, so equality of values is
// equality of term lists and serialization is canonical.
class SparsePoly {
public:
    SparsePoly(Modulus mod, int nvars) : mod_(mod), nvars_(nvars) { check_nvars(nvars); }
    // default: the zero polynomial of F_2[x]; placeholder for aggregate members
    SparsePoly() : mod_(2, 1), nvars_(1) {}

    static SparsePoly zero(Modulus mod, int nvars) { return SparsePoly(mod, nvars); }
    static SparsePoly constant(Modulus mod, int nvars, uint64_t c);
    static SparsePoly monomial(Modulus mod, int nvars, Mono m, uint64_t c = 1);
    static SparsePoly variable(Modulus mod, int nvars, int i) {
        return monomial(mod, nvars, Mono::var(i));
    }
    // Builds from an arbitrary term list: sorts, merges duplicates, drops zeros.
    static SparsePoly from_terms(Modulus mod, int nvars, std::vector<Term> terms);

    const Modulus& modulus() const { return mod_; }
    int nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const Term& leading_term() const;
    uint32_t max_total_degree() const {  // 0 for the zero polynomial
        return terms_.empty() ? 0 : terms_.front().m.total_degree();
    }

    bool operator==(const SparsePoly& o) const {
        return mod_ == o.mod_ && nvars_ == o.nvars_ && term_lists_equal(o);
    }
    bool operator!=(const SparsePoly& o) const { return !(*this == o); }

    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const;
    SparsePoly operator-() const;
    SparsePoly operator*(const SparsePoly& o) const;
    SparsePoly scaled(uint64_t c) const;
    SparsePoly times_monomial(const Mono& m, uint64_t c = 1) const;
    SparsePoly pow(uint64_t k) const;

    uint64_t coefficient(const Mono& m) const;  // 0 if absent

    // Coefficientwise reduction Z/p^e -> F_p and the canonical termwise lift
    // F_p -> Z/p^e (representatives in {0,...,p-1}).
    SparsePoly reduce_mod_p() const;
    SparsePoly lift_to(uint32_t e) const;

    // Termwise Frobenius power over F_p: exponents scaled by p^k, coefficients
    // unchanged.  Equals pow(p^k) by the freshman identity.
    SparsePoly frobenius_power(uint32_t k = 1) const;

    // Membership in the bracket ideal m^[q] of the maximal monomial ideal:
    // every term must have some exponent >= q.
    bool in_m_bracket(uint32_t q) const;
    // A term with all exponents <= q-1 witnesses escape from m^[q].
    std::optional<Mono> escape_term(uint32_t q) const;

    uint64_t hash() const;

    std::string serialize(const std::vector<std::string>& vars) const;

private:
    static void check_nvars(int n) {
        if (n < 1 || n > kMaxVars)
            throw std::invalid_argument("variable count must be in [1, " +
                                        std::to_string(kMaxVars) + "]");
    }
    void require_compatible(const SparsePoly& o) const {
        if (mod_ != o.mod_) throw std::invalid_argument("modulus mismatch");
        if (nvars_ != o.nvars_) throw std::invalid_argument("variable arity mismatch");
    }
    bool term_lists_equal(const SparsePoly& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].c != o.terms_[i].c || terms_[i].m != o.terms_[i].m) return false;
        return true;
    }
    void normalize();

    Modulus mod_;
    int nvars_;
    std::vector<Term> terms_;
};

// Generators {g^q} of the bracket power I^[q] for q = p^e.
std::vector<SparsePoly> bracket_power_ideal_gens(const std::vector<SparsePoly>& gens, uint64_t q);

}  // namespace qfs
