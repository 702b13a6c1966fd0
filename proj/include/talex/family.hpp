#pragma once

#include <optional>

#include "talex/twisted.hpp"

namespace talex {

// A 1/q twist family: surgery on one component of a link diagram, untwisted
// or twisted by a permutation representation that kills the surgery
// component's meridians. q runs through r*q' in the twisted case, where r is
// the order of rho(longitude).
struct SurgerySpec {
    const LinkDiagram* diagram = nullptr;
    int surgery_component = -1;  // -1: last component
    std::optional<PermutationRep> rep;

    int component() const;
};

struct TwistFamilyResult {
    QPoly P;                    // family polynomial (division conventions applied)
    LaurentPoly modified_det;   // modified-matrix determinant, same conventions
    LaurentPoly limit_poly;     // the limit invariant (one more d>1 division, untwisted)
    bool constant = false;      // q-degree of P is 0
    int r = 1;                  // twist multiplier: order of rho(longitude)
    int q_degree_bound = 1;     // 1 untwisted, N twisted
    std::vector<std::pair<long, LaurentPoly>> per_q;  // canonical Delta at sampled q
};

// Presentation used by the family machinery; reps for twisted families must
// be enumerated against this presentation's generator numbering.
WirtingerPresentation family_presentation(const SurgerySpec& spec);

// Appends the concrete surgery relator lambda^q x_n.
WirtingerPresentation surgery_presentation(const WirtingerPresentation& p, long q);

// Index (into p.relators) of the redundant relator: the Wirtinger relation at
// the crossing completing the surgery component's meridian cycle back to x_n.
// Returns -1 when the surgery component never passes under (free loop):
// nothing needs dropping, the system is already square.
int redundant_relator_index(const WirtingerPresentation& p);

// Symbolic twist family. Untwisted path requires zero linking between the
// surgery component and the rest; twisted additionally a representation
// killing the surgery meridians. Per-q values are sampled for q (or q') in
// 1..sample_count.
TwistFamilyResult twist_family_polynomial(const SurgerySpec& spec, int sample_count = 5);

// The family limit computed two ways (leading q-coefficient of P, and the
// modified-matrix determinant) with exact agreement asserted.
LaurentPoly limit_polynomial(const SurgerySpec& spec);

bool is_constant_family(const SurgerySpec& spec);

// Canonical Delta of the concrete 1/q surgery from its own presentation: the
// oracle route for the symbolic machinery. Works for any linking numbers.
LaurentPoly concrete_surgery_delta(const SurgerySpec& spec, long q);

struct SubstitutionRow {
    long q = 0;
    LaurentPoly value;  // canonical
};

// Nonzero-linking family via the substitution route: computes the
// (d+1)-variable invariant of L once, substitutes
// t_{d+1} -> (prod_j t_j^{-lk_j})^{rq}, and (untwisted) divides by the
// constant surplus factor prod_j t_j^{lk_j} - 1, after which the values agree
// with the presentation route up to units. Twisted values are returned raw
// (the surplus is q-dependent but has Mahler measure 1).
std::vector<SubstitutionRow> substitution_family(const SurgerySpec& spec, long q_min, long q_max);

// Sum_{i=0}^{r-1} rho(lambda)^i as an integer matrix over R_d constants.
PolyMatrix longitude_period_sum(const Perm& lambda_image, int vars);

}  // namespace talex
