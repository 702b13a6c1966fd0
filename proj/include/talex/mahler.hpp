#pragma once

#include <optional>

#include "talex/family.hpp"

namespace talex {

struct MahlerEstimate {
    double value = 0.0;
    double error_bound = 0.0;  // heuristic
    std::string method;        // jensen-roots | lawton(K) | quadrature
};

struct MahlerOptions {
    unsigned seed = 0x5eed;
    // Lawton exponent bases stepped through until consecutive estimates agree
    std::vector<long> lawton_bases = {10, 30, 100};
    double lawton_tol = 1e-4;
    int quadrature_points = 2048;  // fibers for the outer torus integral
};

// Jensen's formula: |lead| * prod max(1, |root|). Roots by Aberth iteration
// in double precision; roots near the unit circle are re-polished at
// escalating precision until the max(1,|r|) decision is stable.
MahlerEstimate mahler_univariate(const LaurentPoly& p, const MahlerOptions& opt = {});

enum class MahlerMethod { automatic, lawton, quadrature };

// Multivariate Mahler measure. Lawton: specialize t_i -> t^{K^i} for growing
// K and take the stabilized univariate value. Quadrature (d = 2): outer
// trapezoid over t1 on the unit circle with the inner integral evaluated
// exactly per fiber via Jensen on the complex-coefficient fiber polynomial.
MahlerEstimate mahler_multivariate(const LaurentPoly& p,
                                   MahlerMethod method = MahlerMethod::automatic,
                                   const MahlerOptions& opt = {});

MahlerEstimate mahler(const LaurentPoly& p, MahlerMethod method = MahlerMethod::automatic,
                      const MahlerOptions& opt = {});

// Mahler measure of a rational function f/g as M(f)/M(g).
MahlerEstimate mahler_rational(const LaurentPoly& num, const LaurentPoly& den,
                               const MahlerOptions& opt = {});

struct SweepRow {
    long q = 0;
    LaurentPoly delta;   // canonical family member
    double mahler = 0.0;
    double gap = 0.0;    // |mahler - target| (after the 1/q normalization, if any)
};

struct FamilySweep {
    std::vector<SweepRow> rows;
    double target = 0.0;          // M(Delta_L) or M(P1)
    std::string target_source;    // "multivariate invariant" | "leading coefficient"
    bool normalized_by_q = false; // rows carry M((1/q) Delta) for zero-linking families
    bool tail_monotone = false;   // |gap| non-increasing over the last quarter
};

// Theorem-2 style experiment for a nonzero-linking surgery family: per-q
// Mahler measures via the substitution route against the multivariate target.
FamilySweep family_mahler_sweep(const SurgerySpec& spec, long q_min, long q_max,
                                const MahlerOptions& opt = {});

// Zero-linking version: emits M((1/q) Delta_{L(q)}) -> M(P1).
FamilySweep zero_linking_sweep(const SurgerySpec& spec, long q_min, long q_max,
                               const MahlerOptions& opt = {});

// Torsion order of the n-fold cyclic branched cover of a knot with Alexander
// polynomial delta: b_n = |prod_{j<n} delta(zeta^j)| = |res(delta, t^n - 1)|,
// computed exactly. Returns 0 when some delta(zeta) = 0 (infinite homology).
Int cyclic_cover_torsion(const LaurentPoly& delta, int n);

}  // namespace talex
