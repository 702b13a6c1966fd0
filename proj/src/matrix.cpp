#include "talex/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace talex {

namespace {

// Pivot complexity: monomials beat general entries, then fewer terms, then
// smaller exponent span.
long complexity(const LaurentPoly& p) {
    long span = 0;
    for (int v = 0; v < p.vars(); ++v) span += p.max_exp(v) - p.min_exp(v);
    return (p.term_count() > 1 ? 1000000L : 0L) + static_cast<long>(p.term_count()) * 1000 + span;
}

long complexity(const QPoly& p) {
    long s = static_cast<long>(p.degree() + 1) * 1000000L;
    for (const auto& c : p.coeffs()) s += complexity(c);
    return s;
}

template <class R>
R ring_one(const R& like);

template <>
LaurentPoly ring_one(const LaurentPoly& like) {
    return LaurentPoly::constant(like.vars(), 1);
}

template <>
QPoly ring_one(const QPoly& like) {
    return QPoly(LaurentPoly::constant(like.vars(), 1));
}

template <class R>
R bareiss(Mat<R> m) {
    const int n = m.rows();
    if (n == 0) return ring_one(R(1));
    int sign = 1;
    R prev = ring_one(m.at(0, 0));
    for (int k = 0; k + 1 < n; ++k) {
        // full pivot search over the trailing block
        int pi = -1, pj = -1;
        long best = 0;
        for (int i = k; i < n; ++i) {
            for (int j = k; j < n; ++j) {
                if (m.at(i, j).is_zero()) continue;
                long c = complexity(m.at(i, j));
                if (pi < 0 || c < best) {
                    pi = i;
                    pj = j;
                    best = c;
                }
            }
        }
        if (pi < 0) return R(m.at(0, 0).vars());  // zero block -> zero determinant
        if (pi != k) {
            for (int j = 0; j < n; ++j) std::swap(m.at(pi, j), m.at(k, j));
            sign = -sign;
        }
        if (pj != k) {
            for (int i = 0; i < n; ++i) std::swap(m.at(i, pj), m.at(i, k));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                R num = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = exact_div(num, prev);
            }
            m.at(i, k) = R(m.at(0, 0).vars());
        }
        prev = m.at(k, k);
        if (prev.is_zero()) return R(m.at(0, 0).vars());
    }
    R det = m.at(n - 1, n - 1);
    if (sign < 0) det = -det;
    return det;
}

template <class R>
R cofactor_det(const Mat<R>& m) {
    const int n = m.rows();
    if (n == 0) return ring_one(R(1));
    if (n == 1) return m.at(0, 0);
    R acc(m.at(0, 0).vars());
    std::vector<int> cols;
    for (int j = 1; j < n; ++j) cols.push_back(j);
    std::vector<int> rows;
    for (int i = 1; i < n; ++i) rows.push_back(i);
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        std::vector<int> subcols;
        for (int c = 0; c < n; ++c)
            if (c != j) subcols.push_back(c);
        R sub = cofactor_det(m.submatrix(rows, subcols));
        R term = m.at(0, j) * sub;
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

}  // namespace

template <class R>
Mat<R> Mat<R>::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    Mat<R> r(static_cast<int>(rows.size()), static_cast<int>(cols.size()),
             data_.empty() ? R() : R(data_[0].vars()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) r.at(static_cast<int>(i), static_cast<int>(j)) = at(rows[i], cols[j]);
    return r;
}

template <class R>
Mat<R> Mat<R>::drop_row(int rdrop) const {
    std::vector<int> rows, cols;
    for (int i = 0; i < rows_; ++i)
        if (i != rdrop) rows.push_back(i);
    for (int j = 0; j < cols_; ++j) cols.push_back(j);
    return submatrix(rows, cols);
}

template <class R>
Mat<R> Mat<R>::transpose() const {
    Mat<R> r(cols_, rows_, data_.empty() ? R() : R(data_[0].vars()));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

template class Mat<LaurentPoly>;
template class Mat<QPoly>;

LaurentPoly determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square matrix");
    if (m.rows() == 0) return LaurentPoly::constant(1, 1);
    return bareiss(m);
}

QPoly determinant(const QPolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square matrix");
    if (m.rows() == 0) return QPoly(LaurentPoly::constant(1, 1));
    return bareiss(m);
}

LaurentPoly determinant_cofactor(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square matrix");
    if (m.rows() == 0) return LaurentPoly::constant(1, 1);
    return cofactor_det(m);
}

QPoly determinant_cofactor(const QPolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square matrix");
    if (m.rows() == 0) return QPoly(LaurentPoly::constant(1, 1));
    return cofactor_det(m);
}

namespace {

void combinations(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

LaurentPoly minors_gcd(const PolyMatrix& m, int k) {
    if (k < 0 || k > std::min(m.rows(), m.cols()))
        throw std::invalid_argument("minors_gcd: order out of range");
    if (k == 0) return LaurentPoly::constant(m.rows() && m.cols() ? m.at(0, 0).vars() : 1, 1);
    const int vars = m.at(0, 0).vars();
    LaurentPoly g(vars);
    combinations(m.rows(), k, [&](const std::vector<int>& rows) {
        combinations(m.cols(), k, [&](const std::vector<int>& cols) {
            if (g.is_one()) return;
            LaurentPoly d = determinant(m.submatrix(rows, cols));
            if (!d.is_zero()) g = gcd(g, d);
        });
    });
    return canonical_form(g);
}

PolyMatrix evaluate_q(const QPolyMatrix& m, long q) {
    const int vars = (m.rows() && m.cols()) ? m.at(0, 0).vars() : 1;
    PolyMatrix r(m.rows(), m.cols(), LaurentPoly(vars));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).evaluate(q);
    return r;
}

std::string to_string(const PolyMatrix& m) {
    std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
    std::vector<std::size_t> w(m.cols(), 0);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            cells[i][j] = to_string(m.at(i, j));
            w[j] = std::max(w[j], cells[i][j].size());
        }
    std::ostringstream os;
    for (int i = 0; i < m.rows(); ++i) {
        os << "[ ";
        for (int j = 0; j < m.cols(); ++j) {
            os << cells[i][j];
            os << std::string(w[j] - cells[i][j].size() + (j + 1 < m.cols() ? 2 : 0), ' ');
        }
        os << "]\n";
    }
    return os.str();
}

}  // namespace talex
