#pragma once

#include <vector>

#include "talex/laurent.hpp"

namespace talex {

// Polynomial in the formal twist parameter q with coefficients in R_d:
// coeffs[k] is the coefficient of q^k. Trailing zero coefficients trimmed.
class QPoly {
public:
    QPoly() : vars_(1) {}
    explicit QPoly(int vars) : vars_(vars) {}
    explicit QPoly(LaurentPoly c0) : vars_(c0.vars()) {
        coeffs_.push_back(std::move(c0));
        trim();
    }
    QPoly(std::vector<LaurentPoly> coeffs, int vars) : vars_(vars), coeffs_(std::move(coeffs)) {
        trim();
    }

    static QPoly q_times(const LaurentPoly& c) {
        QPoly r(c.vars());
        r.coeffs_ = {LaurentPoly(c.vars()), c};
        r.trim();
        return r;
    }

    int vars() const { return vars_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    const std::vector<LaurentPoly>& coeffs() const { return coeffs_; }
    LaurentPoly coeff(int k) const;
    LaurentPoly leading() const;

    LaurentPoly evaluate(long q) const;

    QPoly operator-() const;
    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend bool operator==(const QPoly& a, const QPoly& b) {
        return a.vars_ == b.vars_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

private:
    void trim();
    int vars_;
    std::vector<LaurentPoly> coeffs_;
};

// Exact quotient in R_d[q]; synthetic division from the top with exact
// coefficient division at each step. Throws DivisionError when not exact.
QPoly exact_div(const QPoly& p, const QPoly& r);

// Divides every q-coefficient by the R_d element c, exactly.
QPoly exact_div(const QPoly& p, const LaurentPoly& c);

std::string to_string(const QPoly& p);

}  // namespace talex
