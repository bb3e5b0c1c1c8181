#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qfs/grading.hpp"
#include "qfs/poly.hpp"
#include "qfs/theta.hpp"

namespace qfs {

enum class CIMode { Graded, Local };

// Regular sequence f_1,...,f_m; regularity is the caller's responsibility,
// checked heuristically (pairwise coprime leading monomials) for reporting.
struct CIInput {
    std::vector<SparsePoly> gens;
    Grading grading;
    CIMode mode = CIMode::Graded;
    int64_t degree_cap = 0;  // 0: default cap
    bool user_asserted_regular = false;
};

// Replayable witness for an exact height: a chain A_1,...,A_{n-1} of kernel
// elements with A_1 and each A_k - theta(A_{k-1}) expressed over the
// generators of I_1 = (I^[p] : I), and theta(A_{n-1}) escaping m^[p].
// Replay needs only raw polynomial arithmetic.
struct CICertificate {
    std::vector<SparsePoly> chain;
    std::vector<std::vector<SparsePoly>> i1_cofactors;  // n-1 rows (1 row when n = 1, for final)
    SparsePoly final_escape;
};

struct CIHeightResult {
    enum Kind { Exact, LowerBoundAtCap, InfiniteByCheck } kind = LowerBoundAtCap;
    int n = 0;        // Exact: the height; LowerBound: chain verified in m^[p] through stage n
    int64_t cap = 0;  // degree cap in force
    int which_check = 0;  // 1 or 2 for InfiniteByCheck
    bool stabilized = false;  // LowerBound: chain reached a fixed point under the cap
    std::string regularity;   // "asserted" | "heuristic-pass" | "formula-level"
    std::optional<CICertificate> certificate;
    // per-stage (weighted degree, dimension) of the computed slices
    std::vector<std::vector<std::pair<int64_t, int64_t>>> degree_trace;
};

// Generators {f^{s-1}} + {f_j^s} of the colon ideal (I_s : I) for a regular
// sequence.
std::vector<SparsePoly> colon_bracket(const std::vector<SparsePoly>& gens, uint64_t s);

int64_t ci_default_cap(const CIInput& input);

CIHeightResult ci_height(const CIInput& input);

// The finite sufficient conditions for height infinity: (i) f^{p-2} in m^[p];
// (ii) f^{p-1} in m^[p] and (f^{p-2}, I^[p]) f^{p(p-2)} Delta_1(f) in m^[p^2].
std::optional<int> nonsplit_checks(const CIInput& input);

// Checks a candidate fixed-point ideal J: containment J >= theta(F_*J ^ ker u)
// + (I^[p] : I) degreewise up to the cap, plus J <= m^[p]. Verification is
// evidence up to the cap; a witness outside m^[p] refutes exactly.
struct FixedPointResult {
    enum Kind { VerifiedUpToCap, Refuted } kind;
    std::string detail;
    std::optional<SparsePoly> witness;
};
FixedPointResult verify_fixed_point(const CIInput& input, const std::vector<SparsePoly>& j_gens,
                                    int64_t cap);

// Checks a splitting tuple (g_1,...,g_n): g_1 outside m^[p], u(F_*g_i) = 0 for
// i >= 2, and for every s and every generator f_j
//   sum_{r=0}^{n-s} u^r(F^r_* g_{r+s} Delta_r(f_j)) in I^[p^s],
// with Delta_r realized as f_j^{p^r-p} Delta_1(f_j).
struct TupleCheckResult {
    bool ok;
    std::string detail;
};
TupleCheckResult verify_splitting_tuple(const CIInput& input, const std::vector<SparsePoly>& tuple,
                                        int64_t cap);

// Extracts a splitting tuple (g_1,...,g_n) from an exact certificate:
// g_1 = final escape, g_i = f^{p^i - p} A_{n+1-i}.
std::vector<SparsePoly> splitting_tuple_from_certificate(const CIInput& input,
                                                         const CICertificate& cert);

// Replays an exact certificate from raw polynomial arithmetic.
bool replay_ci_certificate(const CIInput& input, const CICertificate& cert, int n,
                           std::string* why = nullptr);

SparsePoly product_of_gens(const std::vector<SparsePoly>& gens);

// Membership of h in the ideal generated by gens, decided by linear algebra
// over the span of monomial multiples of weighted degree <= bound (exact for
// homogeneous data, cap-limited otherwise).
bool in_ideal_span(const SparsePoly& h, const std::vector<SparsePoly>& gens,
                   const Grading& grading, int64_t bound);

}  // namespace qfs
