#pragma once

#include <functional>
#include <vector>

#include "talex/laurent.hpp"
#include "talex/qpoly.hpp"

namespace talex {

// Dense rectangular matrix over R_d or R_d[q].
template <class R>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols, const R& fill)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    R& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const R& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    Mat submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
    Mat drop_row(int r) const;
    Mat transpose() const;

private:
    int rows_, cols_;
    std::vector<R> data_;
};

using PolyMatrix = Mat<LaurentPoly>;
using QPolyMatrix = Mat<QPoly>;

// Exact determinant by fraction-free Bareiss elimination with full pivoting
// (pivot preference: fewer terms, then smaller exponent span, then row-major
// order — deterministic). Falls back to cofactor expansion if an exact pivot
// division fails, which does not happen over an integral domain.
LaurentPoly determinant(const PolyMatrix& m);
QPoly determinant(const QPolyMatrix& m);

// Plain cofactor expansion; the independent oracle used by tests.
LaurentPoly determinant_cofactor(const PolyMatrix& m);
QPoly determinant_cofactor(const QPolyMatrix& m);

// Canonical gcd of all k x k minors; zero when all minors vanish.
LaurentPoly minors_gcd(const PolyMatrix& m, int k);

PolyMatrix evaluate_q(const QPolyMatrix& m, long q);

std::string to_string(const PolyMatrix& m);

}  // namespace talex
