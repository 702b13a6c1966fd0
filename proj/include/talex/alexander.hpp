#pragma once

#include "talex/link.hpp"
#include "talex/matrix.hpp"

namespace talex {

// Standard augmentation for a presentation. Meridians of the i-th non-surgery
// component map to t_{i+1}. The surgery component's meridians map to the
// prescribed monomial: trivial for the symbolic zero-linking family, or
// (prod t_j^{-lk_j})^q for a concrete 1/q-surgery, or t_{d+1} when the full
// (d+1)-variable invariant of the unsurgered link is wanted.
enum class SurgeryImage { none, trivial, full_variable };

Augmentation standard_augmentation(const WirtingerPresentation& p,
                                   SurgeryImage mode = SurgeryImage::none);

// Surgery-component meridians map to (prod_j t_j^{-lk_j})^q.
Augmentation surgery_augmentation(const WirtingerPresentation& p, long q);

// Alexander matrix of the presentation: rows = relators, columns x1..xn
// (the x0 column is omitted). Entries eps(d r_i / d x_j).
PolyMatrix alexander_matrix(const WirtingerPresentation& p, const Augmentation& eps);

// Matrix of arbitrary relator words over the presentation's generators.
PolyMatrix fox_matrix(const std::vector<Word>& relators, int generator_count,
                      const Augmentation& eps, bool drop_first_column = true);

// k-th Alexander polynomial: canonical gcd of the (n-k)-minors of the
// Alexander matrix, divided by (t1 - 1) when d > 1. k >= n gives 1.
LaurentPoly alexander_polynomial(const WirtingerPresentation& p, const Augmentation& eps,
                                 int k = 0);

// Applies the d>1 division convention to a raw minor gcd / determinant.
LaurentPoly apply_divide_convention(const LaurentPoly& raw, int vars);
QPoly apply_divide_convention(const QPoly& raw, int vars);

// Alexander polynomial of a link diagram under the standard all-components
// augmentation (no surgery designated).
LaurentPoly link_alexander_polynomial(const LinkDiagram& d);

}  // namespace talex
