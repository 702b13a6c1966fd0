#include "talex/family.hpp"

#include <algorithm>

namespace talex {

int SurgerySpec::component() const {
    if (!diagram) throw std::invalid_argument("SurgerySpec: no diagram");
    return surgery_component < 0 ? diagram->component_count() - 1 : surgery_component;
}

WirtingerPresentation family_presentation(const SurgerySpec& spec) {
    return wirtinger(*spec.diagram, spec.component());
}

WirtingerPresentation surgery_presentation(const WirtingerPresentation& p, long q) {
    if (p.surgery_component < 0)
        throw std::invalid_argument("surgery_presentation: no surgery component");
    Word lam = longitude_word(*p.diagram, p.surgery_component);
    // translate arcs to generator indices
    std::vector<Word::Letter> letters;
    for (const auto& [arc, s] : lam.letters()) letters.push_back({p.arc_gen[arc], s});
    Word lam_gen = Word(letters);
    WirtingerPresentation out = p;
    // with this library's crossing-sign convention, q positive full twists
    // come from the relator lambda^{-q} x_n
    out.relators.push_back(lam_gen.pow(-q) * Word::generator(p.distinguished_meridian));
    out.relator_crossing.push_back(-1);
    return out;
}

namespace {

Word longitude_in_generators(const WirtingerPresentation& p) {
    Word lam = longitude_word(*p.diagram, p.surgery_component);
    std::vector<Word::Letter> letters;
    for (const auto& [arc, s] : lam.letters()) letters.push_back({p.arc_gen[arc], s});
    return Word(letters);
}

bool zero_linking(const WirtingerPresentation& p) {
    auto lk = linking_matrix(*p.diagram);
    for (int c = 0; c < p.diagram->component_count(); ++c)
        if (c != p.surgery_component && lk[c][p.surgery_component] != 0) return false;
    return true;
}

}  // namespace

int redundant_relator_index(const WirtingerPresentation& p) {
    if (p.surgery_component < 0)
        throw std::invalid_argument("redundant_relator_index: no surgery component");
    const LinkDiagram& d = *p.diagram;
    if (d.is_free_loop(p.surgery_component)) return -1;
    const auto& cyc = d.components()[p.surgery_component];
    // the last arc of the cycle (started at x_n's arc) ends at the crossing
    // that expresses x_n in terms of the previous meridian
    int last_arc = cyc.back();
    int target = d.ending_crossing(last_arc);
    for (int i = 0; i < static_cast<int>(p.relators.size()); ++i)
        if (p.relator_crossing[i] == target) return i;
    throw ConventionError("redundant_relator_index: cycle-completing relator was the omitted one");
}

PolyMatrix longitude_period_sum(const Perm& lambda_image, int vars) {
    const int N = lambda_image.size();
    PolyMatrix s(N, N, LaurentPoly(vars));
    Perm cur = Perm::identity(N);
    int r = lambda_image.order();
    for (int i = 0; i < r; ++i) {
        for (int a = 0; a < N; ++a) s.at(a, cur.img[a]) += LaurentPoly::constant(vars, 1);
        cur = cur.then(lambda_image);
    }
    return s;
}

namespace {

struct FamilyMatrices {
    QPolyMatrix a_flat;       // square system with symbolic q surgery row(s)
    PolyMatrix modified;      // q-part only, identity block zeroed, q = 1
    int vars = 1;
    int r = 1;
    int N = 1;
};

FamilyMatrices build_family_matrices(const SurgerySpec& spec, const WirtingerPresentation& p) {
    FamilyMatrices fm;
    if (!zero_linking(p))
        throw std::invalid_argument(
            "twist_family_polynomial: surgery component has nonzero linking; use "
            "substitution_family");
    Augmentation eps = standard_augmentation(p, SurgeryImage::trivial);
    fm.vars = eps.vars;
    Word lam = longitude_in_generators(p);

    const bool twisted = spec.rep && spec.rep->N > 1;
    const int N = twisted ? spec.rep->N : 1;
    fm.N = N;
    PermutationRep rho;
    if (twisted) {
        rho = *spec.rep;
        auto bad = validate_rep(p, rho);
        if (!bad.empty())
            throw std::invalid_argument("twist family: representation violates relators");
        for (int g = 0; g < p.generator_count; ++g)
            if (p.gen_component[g] == p.surgery_component && !rho.images[g].is_identity())
                throw std::invalid_argument(
                    "twist family: representation must kill surgery-component meridians");
        fm.r = rho.word_image(lam).order();
    } else {
        rho.N = 1;
        rho.images.assign(p.generator_count, Perm::identity(1));
        fm.r = 1;
    }

    // retained base relators
    int drop = redundant_relator_index(p);
    std::vector<Word> base;
    for (int i = 0; i < static_cast<int>(p.relators.size()); ++i)
        if (i != drop) base.push_back(p.relators[i]);

    PolyMatrix base_m = twisted_fox_matrix(base, p.generator_count, eps, rho, true);

    // surgery row-block for the relator lambda^{-rq} x_n in closed form:
    // -q * S * (eps ⊗ rho)(d lambda / d x_j), plus the identity block in the
    // x_n column (the (eps ⊗ rho)-image of lambda^{-rq} is the identity).
    PolyMatrix S = longitude_period_sum(rho.word_image(lam), eps.vars);
    const int cols = p.generator_count - 1;
    const int rows = base_m.rows() / N;
    QPolyMatrix a(rows * N + N, cols * N, QPoly(eps.vars));
    for (int i = 0; i < base_m.rows(); ++i)
        for (int j = 0; j < base_m.cols(); ++j) a.at(i, j) = QPoly(base_m.at(i, j));
    PolyMatrix modified(rows * N + N, cols * N, LaurentPoly(eps.vars));
    for (int i = 0; i < base_m.rows(); ++i)
        for (int j = 0; j < base_m.cols(); ++j) modified.at(i, j) = base_m.at(i, j);

    for (int j = 0; j < cols; ++j) {
        int gen = j + 1;
        PolyMatrix blk = eps_rho_apply(fox_derivative(lam, gen), eps, rho.images, N);
        // q-linear part: S * blk
        for (int aa = 0; aa < N; ++aa)
            for (int bb = 0; bb < N; ++bb) {
                LaurentPoly entry(eps.vars);
                for (int k = 0; k < N; ++k) entry += S.at(aa, k) * blk.at(k, bb);
                if (!entry.is_zero()) {
                    a.at(rows * N + aa, j * N + bb) += QPoly::q_times(-entry);
                    modified.at(rows * N + aa, j * N + bb) -= entry;
                }
            }
        if (gen == p.distinguished_meridian)
            for (int aa = 0; aa < N; ++aa)
                a.at(rows * N + aa, j * N + aa) += QPoly(LaurentPoly::constant(eps.vars, 1));
    }
    fm.a_flat = std::move(a);
    fm.modified = std::move(modified);
    return fm;
}

}  // namespace

TwistFamilyResult twist_family_polynomial(const SurgerySpec& spec, int sample_count) {
    WirtingerPresentation p = family_presentation(spec);
    FamilyMatrices fm = build_family_matrices(spec, p);
    const bool twisted = fm.N > 1;

    TwistFamilyResult res;
    res.r = fm.r;
    res.q_degree_bound = twisted ? fm.N : 1;

    QPoly raw = determinant(fm.a_flat);
    LaurentPoly raw_mod = determinant(fm.modified);

    if (raw.degree() > res.q_degree_bound)
        throw ConventionError("twist family: q-degree exceeds the structural bound");
    // leading q-coefficient agrees with the modified determinant exactly
    if (!(raw.coeff(res.q_degree_bound) == raw_mod))
        throw ConventionError(
            "twist family: leading q-coefficient differs from the modified determinant");

    if (!twisted) {
        res.P = apply_divide_convention(raw, fm.vars);
        res.modified_det = apply_divide_convention(raw_mod, fm.vars);
        res.limit_poly = apply_divide_convention(res.modified_det, fm.vars);
    } else {
        res.P = raw;
        res.modified_det = canonical_form(raw_mod);
        res.limit_poly = res.modified_det;
    }
    res.constant = res.P.degree() <= 0;
    if (res.constant) res.limit_poly = LaurentPoly(fm.vars);  // limit of (1/q)P vanishes
    for (long q = 1; q <= sample_count; ++q)
        res.per_q.push_back({q, canonical_form(res.P.evaluate(q))});
    return res;
}

LaurentPoly limit_polynomial(const SurgerySpec& spec) {
    return twist_family_polynomial(spec, 0).limit_poly;
}

bool is_constant_family(const SurgerySpec& spec) {
    return twist_family_polynomial(spec, 0).constant;
}

LaurentPoly concrete_surgery_delta(const SurgerySpec& spec, long q) {
    WirtingerPresentation p = family_presentation(spec);
    const bool twisted = spec.rep && spec.rep->N > 1;
    int r = 1;
    if (twisted) r = spec.rep->word_image(longitude_in_generators(p)).order();
    WirtingerPresentation sp = surgery_presentation(p, twisted ? r * q : q);
    Augmentation eps = zero_linking(p) ? standard_augmentation(p, SurgeryImage::trivial)
                                       : surgery_augmentation(p, twisted ? r * q : q);

    int drop = redundant_relator_index(p);
    std::vector<Word> rel;
    for (int i = 0; i < static_cast<int>(sp.relators.size()); ++i)
        if (i != drop) rel.push_back(sp.relators[i]);

    if (!twisted) {
        PolyMatrix m = fox_matrix(rel, p.generator_count, eps, true);
        LaurentPoly det = determinant(m);
        return apply_divide_convention(det, eps.vars);
    }
    PermutationRep rho = *spec.rep;
    PolyMatrix m = twisted_fox_matrix(rel, p.generator_count, eps, rho, true);
    return canonical_form(determinant(m));
}

std::vector<SubstitutionRow> substitution_family(const SurgerySpec& spec, long q_min, long q_max) {
    WirtingerPresentation p = family_presentation(spec);
    if (zero_linking(p))
        throw std::invalid_argument(
            "substitution_family: surgery component has zero linking; use "
            "twist_family_polynomial");
    if (q_min < 1 || q_max < q_min)
        throw std::invalid_argument("substitution_family: bad q range");
    Augmentation eps = standard_augmentation(p, SurgeryImage::full_variable);
    const int dp1 = eps.vars;
    const int d = dp1 - 1;

    const bool twisted = spec.rep && spec.rep->N > 1;
    PermutationRep rho;
    int r = 1;
    if (twisted) {
        rho = *spec.rep;
        auto bad = validate_rep(p, rho);
        if (!bad.empty())
            throw std::invalid_argument("substitution_family: representation violates relators");
        r = rho.word_image(longitude_in_generators(p)).order();
    } else {
        rho.N = 1;
        rho.images.assign(p.generator_count, Perm::identity(1));
    }

    // (d+1)-variable invariant of L, computed once
    PolyMatrix m = twisted_fox_matrix(p.relators, p.generator_count, eps, rho, true);
    LaurentPoly D = determinant(m);

    // linking exponents of the non-surgery components, in variable order
    auto lk = linking_matrix(*p.diagram);
    Exps lam(dp1, 0);
    {
        int v = 0;
        for (int c = 0; c < p.diagram->component_count(); ++c)
            if (c != p.surgery_component) lam[v++] = lk[c][p.surgery_component];
    }
    // surplus factor prod t_j^{lk_j} - 1 in the d-variable ring (untwisted)
    Exps lam_d(lam.begin(), lam.begin() + d);
    LaurentPoly surplus = LaurentPoly::monomial(d, lam_d, 1) - LaurentPoly::constant(d, 1);

    std::vector<SubstitutionRow> out;
    for (long q = q_min; q <= q_max; ++q) {
        Exps image(dp1, 0);
        for (int v = 0; v < d; ++v) image[v] = lam[v];
        LaurentPoly sub = substitute_monomial(D, d, image, r * q);
        LaurentPoly val = drop_var(sub, d);
        if (!twisted) {
            if (!divides(surplus, val))
                throw ConventionError(
                    "substitution_family: surplus factor does not divide the substituted "
                    "invariant");
            val = apply_divide_convention(exact_div(val, surplus), d);
        }
        out.push_back({q, canonical_form(val)});
    }
    return out;
}

}  // namespace talex
