#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "qfs/delta.hpp"
#include "qfs/grading.hpp"
#include "qfs/poly.hpp"

namespace qfs {

// The transition operator theta(F_*a) = u(F_* Delta_1(f^{p-1}) a) of the
// Fedder-type criteria. On ker(u) the value does not depend on the chosen
// representative of Delta_1(f^{p-1}).
//
// Three evaluation strategies, picked at construction:
//  * materialized: Delta_1(f^{p-1}) stored with its terms bucketed by
//    exponent class mod p, so only the terms contributing to u survive;
//  * zero representative: when f^{p-1} is itself a p-th power,
//    Delta_1(f^{p-1}) lies in F(S) and 0 is a valid representative on ker(u);
//  * diagonal: for f = sum c_i x_i^{d_i} with huge p the identity
//    Delta_1(f^{p-1}) = -f^{p(p-2)} Delta_1(f) mod F(S) is evaluated without
//    materializing f^{p(p-2)}, reading its coefficients off multinomials.
class ThetaOperator {
public:
    // Operator for the hypersurface f (theta uses Delta_1(f^{p-1})).
    static ThetaOperator for_power(const SparsePoly& f, const Grading& grading);
    // Operator with an explicitly provided representative.
    static ThetaOperator with_representative(SparsePoly delta_rep, const Grading& grading);

    SparsePoly apply(const SparsePoly& a) const;

    const SparsePoly& delta_rep() const { return delta_rep_; }
    bool uses_zero_rep() const { return zero_rep_; }
    bool uses_diagonal_path() const { return diagonal_.has_value(); }

private:
    struct Diagonal {
        std::vector<uint16_t> dexp;    // exponent of each variable in f
        std::vector<uint64_t> dcoef;   // coefficient of each term of f
        uint64_t power;                // p(p-2)
        SparsePoly small_delta;        // Delta_1(f)
    };

    explicit ThetaOperator(SparsePoly delta_rep, Grading grading)
        : delta_rep_(std::move(delta_rep)), grading_(std::move(grading)) {}

    void build_buckets();
    SparsePoly apply_materialized(const SparsePoly& a) const;
    SparsePoly apply_diagonal(const SparsePoly& a) const;

    SparsePoly delta_rep_;
    Grading grading_;
    bool zero_rep_ = false;
    std::optional<Diagonal> diagonal_;
    std::unordered_map<uint64_t, std::vector<uint32_t>> buckets_;  // class key -> term indices
};

// Multinomial coefficient (k; parts) mod p by Lucas' theorem.
uint64_t multinomial_mod_p(uint64_t p, uint64_t k, const std::vector<uint64_t>& parts);

}  // namespace qfs
