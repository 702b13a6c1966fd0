#include "talex/alexander.hpp"

#include <algorithm>

namespace talex {

namespace {

// non-surgery components in order, mapped to variable indices 0..d-1
std::vector<int> component_vars(const WirtingerPresentation& p, int* d_out) {
    const LinkDiagram& d = *p.diagram;
    std::vector<int> var_of(d.component_count(), -1);
    int v = 0;
    for (int c = 0; c < d.component_count(); ++c)
        if (c != p.surgery_component) var_of[c] = v++;
    *d_out = v;
    return var_of;
}

}  // namespace

Augmentation standard_augmentation(const WirtingerPresentation& p, SurgeryImage mode) {
    if (!p.diagram) throw std::invalid_argument("augmentation: presentation has no diagram");
    int d = 0;
    auto var_of = component_vars(p, &d);
    Augmentation eps;
    if (p.surgery_component < 0 || mode == SurgeryImage::none) {
        // all components get their own variable
        eps.vars = p.diagram->component_count();
        for (int g = 0; g < p.generator_count; ++g) {
            Exps e(eps.vars, 0);
            e[p.gen_component[g]] = 1;
            eps.images.push_back(e);
        }
        return eps;
    }
    if (mode == SurgeryImage::full_variable) {
        eps.vars = d + 1;
        for (int g = 0; g < p.generator_count; ++g) {
            Exps e(eps.vars, 0);
            int c = p.gen_component[g];
            e[c == p.surgery_component ? d : var_of[c]] = 1;
            eps.images.push_back(e);
        }
        return eps;
    }
    // trivial image on the surgery component
    eps.vars = d;
    for (int g = 0; g < p.generator_count; ++g) {
        Exps e(eps.vars, 0);
        int c = p.gen_component[g];
        if (c != p.surgery_component) e[var_of[c]] = 1;
        eps.images.push_back(e);
    }
    return eps;
}

Augmentation surgery_augmentation(const WirtingerPresentation& p, long q) {
    if (p.surgery_component < 0)
        throw std::invalid_argument("surgery_augmentation: no surgery component designated");
    int d = 0;
    auto var_of = component_vars(p, &d);
    auto lk = linking_matrix(*p.diagram);
    Augmentation eps;
    eps.vars = d;
    // the surgery relator lambda^{-q} x_n forces eps(x_n) = eps(lambda)^{q}
    Exps surg(d, 0);
    for (int c = 0; c < p.diagram->component_count(); ++c)
        if (c != p.surgery_component)
            surg[var_of[c]] = static_cast<int>(lk[c][p.surgery_component] * q);
    for (int g = 0; g < p.generator_count; ++g) {
        Exps e(d, 0);
        int c = p.gen_component[g];
        if (c == p.surgery_component)
            e = surg;
        else
            e[var_of[c]] = 1;
        eps.images.push_back(e);
    }
    return eps;
}

PolyMatrix fox_matrix(const std::vector<Word>& relators, int generator_count,
                      const Augmentation& eps, bool drop_first_column) {
    const int cols = generator_count - (drop_first_column ? 1 : 0);
    PolyMatrix m(static_cast<int>(relators.size()), cols, LaurentPoly(eps.vars));
    for (int i = 0; i < static_cast<int>(relators.size()); ++i)
        for (int j = 0; j < cols; ++j) {
            int gen = j + (drop_first_column ? 1 : 0);
            m.at(i, j) = augment(fox_derivative(relators[i], gen), eps);
        }
    return m;
}

PolyMatrix alexander_matrix(const WirtingerPresentation& p, const Augmentation& eps) {
    if (!eps.is_epimorphism())
        throw std::invalid_argument("alexander_matrix: augmentation is not onto Z^d");
    return fox_matrix(p.relators, p.generator_count, eps, true);
}

LaurentPoly apply_divide_convention(const LaurentPoly& raw, int vars) {
    if (vars <= 1 || raw.is_zero()) return canonical_form(raw);
    LaurentPoly t1m1 = LaurentPoly::variable(vars, 0) - LaurentPoly::constant(vars, 1);
    LaurentPoly q(vars);
    if (!divides(t1m1, raw))
        throw ConventionError("d>1 division rule: (t1-1) does not divide " + to_string(raw));
    return canonical_form(exact_div(raw, t1m1));
}

QPoly apply_divide_convention(const QPoly& raw, int vars) {
    if (vars <= 1 || raw.is_zero()) return raw;
    LaurentPoly t1m1 = LaurentPoly::variable(vars, 0) - LaurentPoly::constant(vars, 1);
    std::vector<LaurentPoly> out;
    out.reserve(raw.coeffs().size());
    for (const auto& c : raw.coeffs()) {
        if (c.is_zero()) {
            out.push_back(c);
            continue;
        }
        if (!divides(t1m1, c))
            throw ConventionError("d>1 division rule: (t1-1) does not divide q-coefficient " +
                                  to_string(c));
        out.push_back(exact_div(c, t1m1));
    }
    return QPoly(std::move(out), raw.vars());
}

LaurentPoly alexander_polynomial(const WirtingerPresentation& p, const Augmentation& eps,
                                 int k) {
    const int n = p.generator_count - 1;  // columns of the matrix
    if (k >= n) return LaurentPoly::constant(eps.vars, 1);
    PolyMatrix m = alexander_matrix(p, eps);
    if (m.rows() < n - k) return LaurentPoly(eps.vars);  // not enough relators: ideal is 0
    LaurentPoly g = minors_gcd(m, n - k);
    return apply_divide_convention(g, eps.vars);
}

LaurentPoly link_alexander_polynomial(const LinkDiagram& d) {
    auto p = wirtinger(d);
    auto eps = standard_augmentation(p);
    return alexander_polynomial(p, eps, 0);
}

}  // namespace talex
