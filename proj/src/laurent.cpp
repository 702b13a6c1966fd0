#include "talex/laurent.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <sstream>

namespace talex {

namespace {

Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

Exps add_exps(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Exps sub_exps(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

}  // namespace

LaurentPoly::LaurentPoly(int vars) : vars_(vars) {
    if (vars < 1) throw std::invalid_argument("LaurentPoly: vars must be >= 1");
}

LaurentPoly LaurentPoly::constant(int vars, Int c) {
    LaurentPoly p(vars);
    if (c != 0) p.terms_[Exps(vars, 0)] = std::move(c);
    return p;
}

LaurentPoly LaurentPoly::monomial(int vars, const Exps& e, Int c) {
    if (static_cast<int>(e.size()) != vars)
        throw std::invalid_argument("LaurentPoly::monomial: exponent size mismatch");
    LaurentPoly p(vars);
    if (c != 0) p.terms_[e] = std::move(c);
    return p;
}

LaurentPoly LaurentPoly::variable(int vars, int v) {
    Exps e(vars, 0);
    e.at(v) = 1;
    return monomial(vars, e, 1);
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const Exps& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

bool LaurentPoly::is_unit() const {
    if (terms_.size() != 1) return false;
    const Int& c = terms_.begin()->second;
    return c == 1 || c == -1;
}

bool LaurentPoly::is_one() const {
    return is_constant() && !terms_.empty() && terms_.begin()->second == 1;
}

void LaurentPoly::add_term(const Exps& e, const Int& c) {
    if (c == 0) return;
    if (static_cast<int>(e.size()) != vars_)
        throw std::invalid_argument("LaurentPoly::add_term: exponent size mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int LaurentPoly::min_exp(int v) const {
    int m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e[v] < m) m = e[v];
        first = false;
    }
    return m;
}

int LaurentPoly::max_exp(int v) const {
    int m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e[v] > m) m = e[v];
        first = false;
    }
    return m;
}

bool LaurentPoly::depends_on(int v) const {
    for (const auto& [e, c] : terms_)
        if (e[v] != 0) return true;
    return false;
}

Int LaurentPoly::coefficient(const Exps& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

Int LaurentPoly::content() const {
    Int g = 0;
    for (const auto& [e, c] : terms_) {
        g = int_gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (vars_ != o.vars_) throw std::invalid_argument("LaurentPoly: mixed variable counts");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (vars_ != o.vars_) throw std::invalid_argument("LaurentPoly: mixed variable counts");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.vars_ != b.vars_) throw std::invalid_argument("LaurentPoly: mixed variable counts");
    LaurentPoly r(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(add_exps(ea, eb), ca * cb);
    return r;
}

LaurentPoly canonical_form(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    Exps shift(p.vars());
    for (int v = 0; v < p.vars(); ++v) shift[v] = -p.min_exp(v);
    LaurentPoly r(p.vars());
    for (const auto& [e, c] : p.terms()) r.add_term(add_exps(e, shift), c);
    // Sign fix: lex-smallest monomial gets a positive coefficient.
    if (r.terms().begin()->second < 0) r = -r;
    return r;
}

bool canon_eq(const LaurentPoly& a, const LaurentPoly& b) {
    return canonical_form(a) == canonical_form(b);
}

// ------------------------------------------------------------------ division

namespace {

// Multivariate long division by a single divisor, both with nonnegative
// exponents; lex-leading terms. A single divisor generates its ideal's
// Groebner basis, so a nonzero remainder certifies non-divisibility and the
// first stuck leading term may abort the division.
bool ordinary_exact_div(const LaurentPoly& p, const LaurentPoly& r, LaurentPoly* quot) {
    const int d = p.vars();
    LaurentPoly q(d);
    LaurentPoly rem = p;
    const auto& rlead = *r.terms().rbegin();
    while (!rem.is_zero()) {
        const auto& lead = *rem.terms().rbegin();
        Exps de(d);
        for (int v = 0; v < d; ++v) {
            de[v] = lead.first[v] - rlead.first[v];
            if (de[v] < 0) return false;
        }
        if (lead.second % rlead.second != 0) return false;
        Int qc = lead.second / rlead.second;
        LaurentPoly qt = LaurentPoly::monomial(d, de, qc);
        q += qt;
        rem -= qt * r;
    }
    if (quot) *quot = std::move(q);
    return true;
}

// Splits p into unit-normalized part and the exponent shift that was removed.
LaurentPoly normalize_exps(const LaurentPoly& p, Exps* shift_out) {
    Exps shift(p.vars(), 0);
    for (int v = 0; v < p.vars(); ++v) shift[v] = p.min_exp(v);
    LaurentPoly r(p.vars());
    for (const auto& [e, c] : p.terms()) r.add_term(sub_exps(e, shift), c);
    if (shift_out) *shift_out = shift;
    return r;
}

}  // namespace

bool try_exact_div_impl(const LaurentPoly& p, const LaurentPoly& r, LaurentPoly* quot) {
    if (r.is_zero()) return false;
    if (p.is_zero()) {
        if (quot) *quot = LaurentPoly(p.vars());
        return true;
    }
    Exps sp, sr;
    LaurentPoly np = normalize_exps(p, &sp);
    LaurentPoly nr = normalize_exps(r, &sr);
    LaurentPoly q(p.vars());
    if (!ordinary_exact_div(np, nr, &q)) return false;
    LaurentPoly shifted(p.vars());
    for (const auto& [e, c] : q.terms()) shifted.add_term(add_exps(e, sub_exps(sp, sr)), c);
    if (quot) *quot = std::move(shifted);
    return true;
}

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& r) {
    if (r.is_zero()) throw DivisionError("exact_div: division by zero");
    LaurentPoly q(p.vars());
    if (!try_exact_div_impl(p, r, &q))
        throw DivisionError("exact_div: " + to_string(r) + " does not divide " + to_string(p));
    return q;
}

bool divides(const LaurentPoly& r, const LaurentPoly& p) {
    if (r.is_zero()) return p.is_zero();
    return try_exact_div_impl(p, r, nullptr);
}

// ----------------------------------------------------------------------- gcd

namespace {

// All helpers below operate on polynomials with nonnegative exponents.

int deg_in(const LaurentPoly& p, int v) { return p.is_zero() ? -1 : p.max_exp(v); }

// Coefficient of t_v^k as a polynomial with the t_v slot zeroed.
LaurentPoly coeff_of(const LaurentPoly& p, int v, int k) {
    LaurentPoly r(p.vars());
    for (const auto& [e, c] : p.terms()) {
        if (e[v] == k) {
            Exps e2 = e;
            e2[v] = 0;
            r.add_term(e2, c);
        }
    }
    return r;
}

LaurentPoly shift_var(const LaurentPoly& p, int v, int k) {
    LaurentPoly r(p.vars());
    for (const auto& [e, c] : p.terms()) {
        Exps e2 = e;
        e2[v] += k;
        r.add_term(e2, c);
    }
    return r;
}

LaurentPoly gcd_ordinary(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly content_in(const LaurentPoly& p, int v) {
    LaurentPoly g(p.vars());
    for (int k = 0; k <= deg_in(p, v); ++k) {
        LaurentPoly c = coeff_of(p, v, k);
        if (!c.is_zero()) g = gcd_ordinary(g, c);
        if (g.is_one()) break;
    }
    return g;
}

// Full pseudo-remainder: lc(g)^{deg f - deg g + 1} f  mod  g, in variable v.
LaurentPoly prem(LaurentPoly f, const LaurentPoly& g, int v) {
    const int dg = deg_in(g, v);
    const LaurentPoly lcg = coeff_of(g, v, dg);
    int e = deg_in(f, v) - dg + 1;
    while (!f.is_zero() && deg_in(f, v) >= dg) {
        const int df = deg_in(f, v);
        LaurentPoly lcf = coeff_of(f, v, df);
        f = lcg * f - shift_var(lcf * g, v, df - dg);
        --e;
    }
    if (e > 0) {
        LaurentPoly s = LaurentPoly::constant(f.vars(), 1);
        for (int i = 0; i < e; ++i) s *= lcg;
        f = s * f;
    }
    return f;
}

LaurentPoly pow_poly(const LaurentPoly& p, int n) {
    LaurentPoly r = LaurentPoly::constant(p.vars(), 1);
    for (int i = 0; i < n; ++i) r *= p;
    return r;
}

// Subresultant pseudo-remainder sequence GCD in the main variable v;
// inputs primitive with respect to v.
LaurentPoly gcd_prs(LaurentPoly f, LaurentPoly g, int v) {
    if (deg_in(f, v) < deg_in(g, v)) std::swap(f, g);
    LaurentPoly gg = LaurentPoly::constant(f.vars(), 1);
    LaurentPoly h = gg;
    for (;;) {
        const int delta = deg_in(f, v) - deg_in(g, v);
        LaurentPoly r = prem(f, g, v);
        if (r.is_zero()) break;
        if (deg_in(r, v) == 0) {
            // gcd has no v-part and the inputs are v-primitive
            return LaurentPoly::constant(f.vars(), 1);
        }
        r = exact_div(r, gg * pow_poly(h, delta));
        f = std::move(g);
        g = std::move(r);
        gg = coeff_of(f, v, deg_in(f, v));
        if (delta > 0) h = exact_div(pow_poly(gg, delta), pow_poly(h, delta - 1));
    }
    LaurentPoly cont = content_in(g, v);
    return exact_div(g, cont);
}

LaurentPoly gcd_ordinary(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int v = -1;
    for (int i = a.vars() - 1; i >= 0; --i) {
        if (a.depends_on(i) || b.depends_on(i)) {
            v = i;
            break;
        }
    }
    if (v < 0) {
        Int g = int_gcd(a.terms().begin()->second, b.terms().begin()->second);
        return LaurentPoly::constant(a.vars(), g);
    }
    LaurentPoly ca = content_in(a, v);
    LaurentPoly cb = content_in(b, v);
    LaurentPoly pa = exact_div(a, ca);
    LaurentPoly pb = exact_div(b, cb);
    LaurentPoly cont = gcd_ordinary(ca, cb);
    if (!a.depends_on(v))
        return cont * gcd_prs(pb, pa, v);  // pa constant in v; prs handles via deg order
    if (!b.depends_on(v)) return cont * gcd_prs(pa, pb, v);
    return cont * gcd_prs(pa, pb, v);
}

}  // namespace

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.vars() != b.vars()) throw std::invalid_argument("gcd: mixed variable counts");
    if (a.is_zero()) return canonical_form(b);
    if (b.is_zero()) return canonical_form(a);
    LaurentPoly na = normalize_exps(a, nullptr);
    LaurentPoly nb = normalize_exps(b, nullptr);
    // degenerate main-variable cases are handled inside gcd_ordinary except
    // when one input does not depend on the chosen variable at all: prs
    // requires deg >= 0 on both, so treat those via contents.
    if (na.is_constant() || nb.is_constant()) {
        Int g = int_gcd(na.content(), nb.content());
        return canonical_form(LaurentPoly::constant(a.vars(), g));
    }
    return canonical_form(gcd_ordinary(na, nb));
}

// -------------------------------------------------------------- substitution

LaurentPoly substitute_monomial(const LaurentPoly& p, int v, const Exps& image, long scale) {
    if (v < 0 || v >= p.vars()) throw std::invalid_argument("substitute_monomial: bad variable");
    if (static_cast<int>(image.size()) != p.vars())
        throw std::invalid_argument("substitute_monomial: image size mismatch");
    if (image[v] != 0)
        throw std::invalid_argument("substitute_monomial: image may not involve the substituted variable");
    LaurentPoly r(p.vars());
    for (const auto& [e, c] : p.terms()) {
        Exps e2 = e;
        long k = static_cast<long>(e[v]) * scale;
        e2[v] = 0;
        for (int i = 0; i < p.vars(); ++i) e2[i] += static_cast<int>(k * image[i]);
        r.add_term(e2, c);
    }
    return r;
}

LaurentPoly drop_var(const LaurentPoly& p, int v) {
    if (p.vars() == 1) throw std::invalid_argument("drop_var: cannot drop the last variable");
    if (p.depends_on(v)) throw std::invalid_argument("drop_var: variable still present");
    LaurentPoly r(p.vars() - 1);
    for (const auto& [e, c] : p.terms()) {
        Exps e2;
        e2.reserve(e.size() - 1);
        for (int i = 0; i < static_cast<int>(e.size()); ++i)
            if (i != v) e2.push_back(e[i]);
        r.add_term(e2, c);
    }
    return r;
}

LaurentPoly specialize_exponents(const LaurentPoly& p, const std::vector<long>& ks) {
    if (static_cast<int>(ks.size()) != p.vars())
        throw std::invalid_argument("specialize_exponents: size mismatch");
    LaurentPoly r(1);
    for (const auto& [e, c] : p.terms()) {
        long k = 0;
        for (int i = 0; i < p.vars(); ++i) k += static_cast<long>(e[i]) * ks[i];
        r.add_term({static_cast<int>(k)}, c);
    }
    return r;
}

Int evaluate_at_one(const LaurentPoly& p) {
    Int s = 0;
    for (const auto& [e, c] : p.terms()) s += c;
    return s;
}

// ---------------------------------------------------------------- cyclotomic

const LaurentPoly& cyclotomic(int n) {
    static std::map<int, LaurentPoly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // t^n - 1 divided by all lower cyclotomic factors.
    LaurentPoly f(1);
    f.add_term({n}, 1);
    f.add_term({0}, -1);
    for (int d = 1; d < n; ++d)
        if (n % d == 0) f = exact_div(f, cyclotomic(d));
    return cache.emplace(n, std::move(f)).first->second;
}

namespace {

int euler_phi(int n) {
    int r = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

// Greedy exact removal of cyclotomic factors of a univariate polynomial in
// canonical form. Returns true when the residue is the constant 1.
bool strip_cyclotomics_univariate(LaurentPoly& f, std::vector<int>* indices) {
    const int degmax = f.max_exp(0);
    for (int n = 1; n <= 2 * degmax * degmax + 1 && !f.is_constant(); ++n) {
        if (euler_phi(n) > f.max_exp(0)) continue;
        for (;;) {
            LaurentPoly q(1);
            if (!try_exact_div_impl(f, cyclotomic(n), &q)) break;
            f = canonical_form(q);
            if (indices) indices->push_back(n);
        }
    }
    return f.is_one();
}

// Writes p's support as base + k * dir with dir primitive; fails if the
// support is not collinear.
bool collinear_support(const LaurentPoly& p, Exps* dir_out, LaurentPoly* uni_out) {
    const int d = p.vars();
    const Exps& base = p.terms().begin()->first;
    Exps dir(d, 0);
    bool have_dir = false;
    for (const auto& [e, c] : p.terms()) {
        Exps delta = sub_exps(e, base);
        bool zero = std::all_of(delta.begin(), delta.end(), [](int x) { return x == 0; });
        if (zero) continue;
        if (!have_dir) {
            int g = 0;
            for (int x : delta) g = static_cast<int>(int_gcd(g, x < 0 ? -x : x).convert_to<long>());
            for (int i = 0; i < d; ++i) dir[i] = delta[i] / g;
            // orient so the first nonzero entry is positive
            for (int i = 0; i < d; ++i) {
                if (dir[i] != 0) {
                    if (dir[i] < 0)
                        for (int j = 0; j < d; ++j) dir[j] = -dir[j];
                    break;
                }
            }
            have_dir = true;
        }
    }
    if (!have_dir) return false;
    LaurentPoly uni(1);
    for (const auto& [e, c] : p.terms()) {
        Exps delta = sub_exps(e, base);
        // delta must be an integer multiple of dir
        int k = 0;
        for (int i = 0; i < d; ++i) {
            if (dir[i] != 0) {
                if (delta[i] % dir[i] != 0) return false;
                k = delta[i] / dir[i];
                break;
            }
        }
        for (int i = 0; i < d; ++i)
            if (delta[i] != k * dir[i]) return false;
        uni.add_term({k}, c);
    }
    if (dir_out) *dir_out = dir;
    if (uni_out) *uni_out = canonical_form(uni);
    return true;
}

// Builds Phi_n evaluated at the monomial t^dir inside the d-variable ring.
LaurentPoly cyclotomic_at_monomial(int n, const Exps& dir, int d) {
    LaurentPoly r(d);
    for (const auto& [e, c] : cyclotomic(n).terms()) {
        Exps e2(d, 0);
        for (int i = 0; i < d; ++i) e2[i] = e[0] * dir[i];
        r.add_term(e2, c);
    }
    return r;
}

}  // namespace

CycloCheck is_generalized_cyclotomic_product(const LaurentPoly& p) {
    CycloCheck out;
    if (p.is_zero()) throw std::invalid_argument("is_generalized_cyclotomic_product: zero input");
    LaurentPoly f = canonical_form(p);
    if (f.is_constant()) {
        out.verdict = f.is_one() ? CycloCheck::Verdict::yes : CycloCheck::Verdict::no;
        if (out.verdict == CycloCheck::Verdict::no) out.note = "nonunit constant";
        return out;
    }

    Exps dir;
    LaurentPoly uni(1);
    if (collinear_support(f, &dir, &uni)) {
        std::vector<int> idx;
        if (strip_cyclotomics_univariate(uni, &idx)) {
            out.verdict = CycloCheck::Verdict::yes;
            Exps full_dir = (f.vars() == 1) ? Exps{1} : dir;
            if (f.vars() == 1 && !dir.empty()) full_dir = dir;
            for (int n : idx) out.factors.emplace_back(n, full_dir);
        } else {
            out.verdict = CycloCheck::Verdict::no;  // exact: support on a line
            out.note = "residue " + to_string(uni) + " has no cyclotomic factorization";
        }
        return out;
    }

    // Genuinely multivariate support: greedily peel cyclotomic factors at
    // candidate monomial directions taken from support differences.
    std::set<Exps> dirs;
    const auto& terms = f.terms();
    for (auto it1 = terms.begin(); it1 != terms.end(); ++it1) {
        for (auto it2 = std::next(it1); it2 != terms.end(); ++it2) {
            Exps delta = sub_exps(it2->first, it1->first);
            int g = 0;
            for (int x : delta) g = static_cast<int>(int_gcd(g, x < 0 ? -x : x).convert_to<long>());
            if (g == 0) continue;
            for (auto& x : delta) x /= g;
            for (int i = 0; i < f.vars(); ++i) {
                if (delta[i] != 0) {
                    if (delta[i] < 0)
                        for (auto& x : delta) x = -x;
                    break;
                }
            }
            dirs.insert(delta);
        }
    }
    int degcap = 0;
    for (int v = 0; v < f.vars(); ++v) degcap = std::max(degcap, f.max_exp(v));
    bool progress = true;
    while (progress && !f.is_constant()) {
        progress = false;
        for (const Exps& d2 : dirs) {
            for (int n = 1; n <= 2 * degcap * degcap + 1; ++n) {
                if (euler_phi(n) > degcap) continue;
                LaurentPoly cp = cyclotomic_at_monomial(n, d2, f.vars());
                LaurentPoly q(f.vars());
                while (try_exact_div_impl(f, cp, &q)) {
                    f = canonical_form(q);
                    out.factors.emplace_back(n, d2);
                    progress = true;
                }
            }
        }
        if (f.is_constant()) break;
        LaurentPoly col_uni(1);
        Exps col_dir;
        if (collinear_support(f, &col_dir, &col_uni)) {
            std::vector<int> idx;
            if (strip_cyclotomics_univariate(col_uni, &idx)) {
                for (int n : idx) out.factors.emplace_back(n, col_dir);
                out.verdict = CycloCheck::Verdict::yes;
                return out;
            }
            out.verdict = CycloCheck::Verdict::no;
            out.note = "line residue " + to_string(col_uni) + " not cyclotomic";
            out.factors.clear();
            return out;
        }
    }
    if (f.is_constant()) {
        if (f.is_one()) {
            out.verdict = CycloCheck::Verdict::yes;
            return out;
        }
        out.verdict = CycloCheck::Verdict::no;
        out.note = "nonunit constant residue";
        out.factors.clear();
        return out;
    }

    // Negative semi-decision by Lawton specialization: images of generalized
    // cyclotomic products stay cyclotomic products.
    for (long K : {7L, 13L, 31L}) {
        std::vector<long> ks(f.vars());
        long k = 1;
        for (int i = 0; i < f.vars(); ++i, k *= K) ks[i] = k;
        LaurentPoly s = canonical_form(specialize_exponents(f, ks));
        if (s.is_zero()) continue;
        LaurentPoly s2 = s;
        if (!strip_cyclotomics_univariate(s2, nullptr)) {
            out.verdict = CycloCheck::Verdict::no;
            out.note = "specialization t_i -> t^" + std::to_string(K) + "^i is not a cyclotomic product";
            out.factors.clear();
            return out;
        }
    }
    out.verdict = CycloCheck::Verdict::unknown;
    out.note = "multivariate semi-decision inconclusive";
    out.factors.clear();
    return out;
}

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest lex term first for readability
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        Int a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool allzero = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        if (a != 1 || allzero) {
            os << a;
            if (!allzero) os << "*";
        }
        bool firstvar = true;
        for (int v = 0; v < p.vars(); ++v) {
            if (e[v] == 0) continue;
            if (!firstvar) os << "*";
            firstvar = false;
            os << "t" << (v + 1);
            if (e[v] != 1) os << "^" << e[v];
        }
    }
    return os.str();
}

}  // namespace talex
