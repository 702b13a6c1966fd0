#pragma once

#include <optional>

#include "talex/alexander.hpp"

namespace talex {

// Assignment of permutations of {1..N} to the presentation's generators.
// Valid when every relator maps to the identity.
struct PermutationRep {
    int N = 1;
    std::vector<Perm> images;  // indexed by generator

    Perm word_image(const Word& w) const;
    bool is_trivial() const;
    // true when the image subgroup acts transitively on the N symbols
    bool is_transitive() const;
    PermutationRep conjugate(const Perm& s) const;
};

// Indices of relators violated by the assignment; empty means valid.
std::vector<int> validate_rep(const WirtingerPresentation& p, const PermutationRep& rho);

struct RepSearchOptions {
    int max_results = 64;
    bool transitive_only = false;
    bool fix_surgery_trivial = false;  // force identity on surgery-component meridians
    bool skip_trivial = false;
};

// Backtracking search over generator images with relator propagation;
// deterministic order.
std::vector<PermutationRep> enumerate_permutation_reps(const WirtingerPresentation& p, int N,
                                                       const RepSearchOptions& opt = {});

// Twisted Alexander matrix: N x N blocks (eps ⊗ rho)(d r_i / d x_j) with the
// x0 block-column omitted, flattened to an (rN) x (nN) matrix.
PolyMatrix twisted_matrix(const WirtingerPresentation& p, const Augmentation& eps,
                          const PermutationRep& rho);
PolyMatrix twisted_fox_matrix(const std::vector<Word>& relators, int generator_count,
                              const Augmentation& eps, const PermutationRep& rho,
                              bool drop_first_column = true);

// Alexander-Lin polynomial D: canonical gcd of the maximal minors of the
// twisted Alexander matrix (the determinant in the square case).
LaurentPoly alexander_lin_D(const WirtingerPresentation& p, const Augmentation& eps,
                            const PermutationRep& rho);

struct WadaInvariant {
    LaurentPoly numerator;    // D
    LaurentPoly denominator;  // det(I - t1 rho(x0))
};

WadaInvariant wada(const WirtingerPresentation& p, const Augmentation& eps,
                   const PermutationRep& rho);

// det(I - t1 * rho(x0)): the Wada denominator, a product of cyclotomics in t1.
LaurentPoly wada_denominator(const Augmentation& eps, const PermutationRep& rho, int x0_gen);

// Order Delta_0 of H_0: canonical gcd of the N x N minors of the stacked
// block column [(eps ⊗ rho)(x_j) - I] over all generators j.
LaurentPoly order_of_H0(const WirtingerPresentation& p, const Augmentation& eps,
                        const PermutationRep& rho);

// Twisted Alexander polynomial Delta^rho = D * Delta_0 / det(I - t1 rho(x0)).
// Throws ConventionError when the division is not exact.
LaurentPoly twisted_alexander_poly(const WirtingerPresentation& p, const Augmentation& eps,
                                   const PermutationRep& rho);

// Permutation text form: `x0=(1 2 3); x2=(1 3)` — unlisted generators are the
// identity. Cycle entries are 1-based symbols.
PermutationRep parse_rep(const std::string& text, int generator_count, int N);
std::string to_string(const PermutationRep& rho);

}  // namespace talex
