#include "ptri/linear.hpp"

#include <stdexcept>
#include <utility>

namespace ptri {

Matrix::Matrix(RingSpec ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(ring)) {}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("dimension mismatch in Matrix::apply");
    std::vector<Scalar> y(rows_, Scalar::zero(ring_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!(*this)(r, c).is_zero() && !x[c].is_zero()) y[r] += (*this)(r, c) * x[c];
    return y;
}

namespace {

// In-place reduced row echelon form; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
        const Scalar inv = m(row, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c)
            if (!m(row, c).is_zero()) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            const Scalar f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

LinearSolution solve_linear(const Matrix& a, const std::vector<Scalar>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("dimension mismatch in solve_linear");
    const RingSpec ring = a.ring();
    Matrix aug(ring, a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    auto pivots = rref(aug);

    LinearSolution out;
    bool consistent = true;
    if (!pivots.empty() && pivots.back() == a.cols()) {
        consistent = false;
        pivots.pop_back();
    }
    out.rank = pivots.size();

    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;

    if (consistent) {
        std::vector<Scalar> x(a.cols(), Scalar::zero(ring));
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
        out.particular = std::move(x);
    }
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(a.cols(), Scalar::zero(ring));
        v[free] = Scalar::one(ring);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -aug(i, free);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

std::vector<std::vector<Scalar>> null_space(const Matrix& a) {
    return solve_linear(a, std::vector<Scalar>(a.rows(), Scalar::zero(a.ring()))).kernel;
}

std::size_t rank_of(const Matrix& a) {
    Matrix m = a;
    return rref(m).size();
}

Scalar determinant(Matrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    Scalar det = Scalar::one(m.ring());
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && m(sel, col).is_zero()) ++sel;
        if (sel == n) return Scalar::zero(m.ring());
        if (sel != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m(sel, c), m(col, c));
            det = -det;
        }
        det *= m(col, col);
        const Scalar inv = m(col, col).inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col).is_zero()) continue;
            const Scalar f = m(r, col) * inv;
            for (std::size_t c = col; c < n; ++c)
                if (!m(col, c).is_zero()) m(r, c) -= f * m(col, c);
        }
    }
    return det;
}

mpz_class integer_determinant(const std::vector<std::vector<long>>& in) {
    const std::size_t n = in.size();
    if (n == 0) return 1;
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (in[i].size() != n) throw std::invalid_argument("integer_determinant: non-square");
        for (std::size_t j = 0; j < n; ++j) m[i][j] = in[i][j];
    }
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t sel = k + 1;
            while (sel < n && m[sel][k] == 0) ++sel;
            if (sel == n) return 0;
            std::swap(m[sel], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]);
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

std::optional<std::size_t> SparseRowReducer::insert(Row row) {
    for (auto it = row.begin(); it != row.end();)
        it = it->second.is_zero() ? row.erase(it) : std::next(it);
    while (!row.empty()) {
        auto lead = std::prev(row.end());
        auto piv = pivots_.find(lead->first);
        if (piv == pivots_.end()) {
            const Scalar inv = lead->second.inverse();
            for (auto& [col, v] : row) v *= inv;
            const auto key = lead->first;
            pivots_.emplace(key, std::move(row));
            return key;
        }
        const Scalar f = lead->second;
        for (const auto& [col, v] : piv->second) {
            auto [slot, inserted] = row.try_emplace(col, Scalar::zero(ring_));
            slot->second -= f * v;
            if (slot->second.is_zero()) row.erase(slot);
        }
    }
    return std::nullopt;
}

std::vector<std::vector<Scalar>> sparse_null_space(RingSpec ring, const std::vector<SparseRowReducer::Row>& rows,
                                                   std::size_t cols) {
    SparseRowReducer red(ring);
    for (const auto& r : rows) red.add(r);
    const auto& piv = red.pivot_rows();
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (piv.count(f)) continue;
        std::vector<Scalar> x(cols, Scalar::zero(ring));
        x[f] = Scalar::one(ring);
        // rows only involve columns below their lead, so solve leads in increasing order
        for (const auto& [lead, row] : piv) {
            Scalar s = Scalar::zero(ring);
            for (const auto& [c, v] : row)
                if (c != lead) s += v * x[c];
            x[lead] = -s;
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace ptri
