#pragma once

#include <vector>

#include "qfs/poly.hpp"

namespace qfs {

// Truncated Witt vectors W_n(S) over S = F_p[x_1..x_N], oracle-grade.
// Arithmetic lifts entries to Z/p^{2n}, works on ghost components
// phi_m = sum_i p^i X_i^{p^{m-i}}, and back-solves with exact division by
// p^m at each stage. Not on any hot path; the delta module is validated
// against this.
class WittVector {
public:
    WittVector(Modulus base, int nvars, int length);
    static WittVector teichmuller(const SparsePoly& a, int length);

    int length() const { return int(comps_.size()); }
    int nvars() const { return nvars_; }
    const Modulus& base() const { return base_; }
    const SparsePoly& operator[](int i) const { return comps_[size_t(i)]; }
    void set(int i, SparsePoly v);

    bool operator==(const WittVector& o) const;

    // Ghost components over the lift ring Z/p^{2n}.
    std::vector<SparsePoly> ghost() const;

    WittVector V() const;            // shift, length + 1
    WittVector F() const;            // componentwise p-th power
    WittVector R() const;            // drop the last component
    WittVector mul_p() const;        // multiplication by p = VF = FV

private:
    Modulus base_;  // F_p
    int nvars_;
    std::vector<SparsePoly> comps_;
};

WittVector witt_add(const WittVector& a, const WittVector& b);
WittVector witt_sub(const WittVector& a, const WittVector& b);
WittVector witt_mul(const WittVector& a, const WittVector& b);

// delta vector of a: the tuple (delta_1(a), ..., delta_{n-1}(a)) defined by
// [a] - sum_i [c_i M_i] = (0, delta_1(a), delta_2(a), ...) in W_n, using the
// term decomposition of a as its p-monomial decomposition. Entries are raw
// representatives, well-defined modulo F(S).
std::vector<SparsePoly> delta_vec_oracle(const SparsePoly& a, int n);

// delta_r(a) as a representative (r < n enforced via n = r+1 internally).
SparsePoly delta_r_oracle(const SparsePoly& a, int r);

// Delta_r(a): 0-th component of the r-fold iterate of the carry map on [a];
// returned in mod-F(S) normal form.
SparsePoly Delta_r_oracle(const SparsePoly& a, int r);

// sigma_n((a_0,...,a_{n-1})) = Delta_{n-1}(a_0) + ... + a_{n-1}, the explicit
// splitting of V^{n-1}; returned in mod-F(S) normal form.
SparsePoly sigma_n_oracle(const std::vector<SparsePoly>& comps);

}  // namespace qfs
