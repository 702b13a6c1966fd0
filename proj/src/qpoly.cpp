#include "talex/qpoly.hpp"

#include <sstream>

namespace talex {

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

LaurentPoly QPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return LaurentPoly(vars_);
    return coeffs_[k];
}

LaurentPoly QPoly::leading() const {
    if (coeffs_.empty()) return LaurentPoly(vars_);
    return coeffs_.back();
}

LaurentPoly QPoly::evaluate(long q) const {
    LaurentPoly r(vars_);
    Int qk = 1;
    for (const auto& c : coeffs_) {
        LaurentPoly scaled(vars_);
        for (const auto& [e, cc] : c.terms()) scaled.add_term(e, cc * qk);
        r += scaled;
        qk *= q;
    }
    return r;
}

QPoly QPoly::operator-() const {
    QPoly r(vars_);
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) r.coeffs_.push_back(-c);
    return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (vars_ != o.vars_) throw std::invalid_argument("QPoly: mixed variable counts");
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), LaurentPoly(vars_));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (vars_ != o.vars_) throw std::invalid_argument("QPoly: mixed variable counts");
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), LaurentPoly(vars_));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.vars_ != b.vars_) throw std::invalid_argument("QPoly: mixed variable counts");
    QPoly r(a.vars_);
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, LaurentPoly(a.vars_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    r.trim();
    return r;
}

QPoly exact_div(const QPoly& p, const QPoly& r) {
    if (r.is_zero()) throw DivisionError("QPoly exact_div: division by zero");
    if (p.is_zero()) return QPoly(p.vars());
    if (p.degree() < r.degree())
        throw DivisionError("QPoly exact_div: degree of divisor exceeds dividend");
    std::vector<LaurentPoly> rem = p.coeffs();
    const auto& rc = r.coeffs();
    const LaurentPoly& rl = rc.back();
    const int dq = p.degree() - r.degree();
    std::vector<LaurentPoly> quot(dq + 1, LaurentPoly(p.vars()));
    for (int k = dq; k >= 0; --k) {
        LaurentPoly c = exact_div(rem[k + r.degree()], rl);
        quot[k] = c;
        for (int j = 0; j <= r.degree(); ++j) rem[k + j] -= c * rc[j];
    }
    for (const auto& c : rem)
        if (!c.is_zero()) throw DivisionError("QPoly exact_div: nonzero remainder");
    return QPoly(std::move(quot), p.vars());
}

QPoly exact_div(const QPoly& p, const LaurentPoly& c) {
    std::vector<LaurentPoly> out;
    out.reserve(p.coeffs().size());
    for (const auto& ck : p.coeffs()) out.push_back(exact_div(ck, c));
    return QPoly(std::move(out), p.vars());
}

std::string to_string(const QPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        if (p.coeffs()[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0) {
            os << "(" << to_string(p.coeffs()[k]) << ")";
        } else {
            os << "(" << to_string(p.coeffs()[k]) << ")*q";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

}  // namespace talex
