#pragma once

#include <optional>
#include <vector>

#include "qfs/grading.hpp"
#include "qfs/poly.hpp"

namespace qfs {

// Representative of Delta_1(a) (or Delta_n(a)); well-defined modulo the
// Frobenius image F(S). For homogeneous input of degree d the stored value is
// homogeneous of degree p*d.
struct DeltaRepresentative {
    SparsePoly value;
    std::optional<std::vector<int64_t>> homogeneous_degree;
};

// Production path: with L the termwise lift of a to Z/p^2 and
// P = sum (lift c_i)^p x^{p m_i}, the difference L^p - P is divisible by p
// and Delta_1(a) = (L^p - P)/p mod p.
DeltaRepresentative delta1(const SparsePoly& a, const Grading* grading = nullptr);

// Same computation with caller-chosen lifts of the coefficients (each must
// reduce to the original coefficient mod p); exercises lift-independence.
SparsePoly delta1_with_lifts(const SparsePoly& a, const std::vector<uint64_t>& lifts);

// Independent route: the multinomial formula
//   sum_{0<=alpha_i<=p-1, sum=p} (1/p) binom(p; alpha) prod (c_i M_i)^{alpha_i}.
// Guarded by the composition count; this is the oracle for delta1.
DeltaRepresentative delta1_multinomial(const SparsePoly& a, uint64_t guard = 1000000);

// Delta_n representative via the closed formula Delta_n(a) = a^{p^n - p} Delta_1(a).
DeltaRepresentative delta_n_rep(const SparsePoly& a, int n, const Grading* grading = nullptr);

}  // namespace qfs
