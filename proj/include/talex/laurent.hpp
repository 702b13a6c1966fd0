#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <vector>

#include "talex/errors.hpp"

namespace talex {

using Int = boost::multiprecision::cpp_int;

// Exponent vector of a monomial t1^e[0] ... td^e[d-1].
using Exps = std::vector<int>;

// Element of R_d = Z[t1^{±1},...,td^{±1}]. Terms are kept in a map ordered
// lexicographically by exponent vector; zero coefficients are never stored,
// so ring equality is map equality.
class LaurentPoly {
public:
    using TermMap = std::map<Exps, Int>;

    LaurentPoly() : vars_(1) {}
    explicit LaurentPoly(int vars);

    static LaurentPoly constant(int vars, Int c);
    static LaurentPoly monomial(int vars, const Exps& e, Int c = 1);
    static LaurentPoly variable(int vars, int v);  // t_{v+1}, 0-based v

    int vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_unit() const;  // ±(monomial)
    bool is_one() const;
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    // Adds c * t^e, erasing the term if the sum cancels.
    void add_term(const Exps& e, const Int& c);

    // Degree of t_v across the support; zero for the zero polynomial.
    int min_exp(int v) const;
    int max_exp(int v) const;
    int degree_in(int v) const { return max_exp(v); }
    bool depends_on(int v) const;

    Int coefficient(const Exps& e) const;
    Int content() const;  // gcd of coefficients, nonnegative

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

private:
    int vars_;
    TermMap terms_;
};

// The unique associate with minimum exponent 0 in every variable of the
// support and positive coefficient on the lex-smallest monomial.
LaurentPoly canonical_form(const LaurentPoly& p);

// a ≐ b : equality up to units of R_d.
bool canon_eq(const LaurentPoly& a, const LaurentPoly& b);

// GCD in R_d, returned in canonical form. gcd(p, 0) = canonical_form(p).
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

// Exact quotient p / r; throws DivisionError (with a remainder witness in the
// message) when r does not divide p, and when r = 0.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& r);
bool divides(const LaurentPoly& r, const LaurentPoly& p);

// Ring homomorphism t_v -> (t^image)^scale, other variables fixed.
// image is an exponent vector in the same ring with image[v] == 0.
// The result still lives in the d-variable ring with t_v absent.
LaurentPoly substitute_monomial(const LaurentPoly& p, int v, const Exps& image, long scale);

// Reindexes away variable v (which must be absent from the support),
// producing an element of R_{d-1}.
LaurentPoly drop_var(const LaurentPoly& p, int v);

// Lawton substitution t_i -> t^{ks[i]}: univariate image.
LaurentPoly specialize_exponents(const LaurentPoly& p, const std::vector<long>& ks);

// Evaluates every variable at integer arguments.
Int evaluate_at_one(const LaurentPoly& p);

// n-th cyclotomic polynomial as a univariate element of R_1.
const LaurentPoly& cyclotomic(int n);

struct CycloCheck {
    enum class Verdict { yes, no, unknown };
    Verdict verdict = Verdict::unknown;
    // (cyclotomic index, monomial exponent vector) pairs multiplying to the
    // input up to a unit, when verdict == yes.
    std::vector<std::pair<int, Exps>> factors;
    std::string note;
};

// Is p a unit times a product of cyclotomic polynomials evaluated at
// monomials?  Exact for univariate support (including multivariate support
// on a line); for genuinely multivariate input a greedy division plus Lawton
// specializations give a semi-decision and "unknown" when inconclusive.
CycloCheck is_generalized_cyclotomic_product(const LaurentPoly& p);

std::string to_string(const LaurentPoly& p);

}  // namespace talex
