#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qfs/grading.hpp"
#include "qfs/poly.hpp"
#include "qfs/theta.hpp"

namespace qfs {

// Height of a Calabi-Yau hypersurface f (homogeneous, deg f = mu): the least
// n with u(theta^{n-1}(f^{p-1})) != 0. theta is F_p-linear on the
// finite-dimensional degree-(p-1)mu slice, so a revisited orbit state proves
// the u-images stay zero forever and the height is infinite.
struct CYHeightResult {
    enum Kind { Finite, Infinite, LowerBoundAtCap } kind;
    int n = 0;            // Finite: the height; LowerBound: height > n
    int cycle_start = 0;  // Infinite: 1-based index with g_{start+len} = g_{start}
    int cycle_len = 0;
    int64_t cap = 0;      // LowerBound: the iteration cap that was hit
    std::vector<SparsePoly> chain;  // g_1, g_2, ..., g_last
};

struct CYOptions {
    std::optional<int64_t> max_iter;  // user cap; absent = run to cycle
    bool keep_chain = true;
};

CYHeightResult cy_height(const SparsePoly& f, const Grading& grading, CYOptions opts = {});

// Independent route: whether the coefficient of (x_1...x_N)^{p^n - 1} in
// f_n = f^{p-1} Delta_1(f^{p-1})^{1+p+...+p^{n-2}} is nonzero, for n up to
// n_max. Products are pruned to the box [0, p^n-1]^N, which cannot change the
// watched coefficient.
std::vector<bool> cy_height_fn_oracle(const SparsePoly& f, const Grading& grading, int n_max);

// Closed form for the degree-N Fermat hypersurface in N variables (N >= 4):
// height 1 iff p = 1 mod N, otherwise infinity.
CYHeightResult fermat_height(int N, uint64_t p);

// The explicit characteristic-2 family with height exactly 2h: a degree-N
// form in N = 2^h + 1 variables a, b, c, x_1, ..., x_{N-3}.
SparsePoly unbounded_family_p2(int h);
std::vector<std::string> unbounded_family_vars(int h);

SparsePoly fermat_poly(int N, uint64_t p);

}  // namespace qfs
