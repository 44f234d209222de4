#include "logbundle/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace logbundle {

namespace {

using IntRow = std::vector<mpz_class>;

void make_primitive(IntRow& row) {
    mpz_class g = 0;
    for (const auto& x : row) {
        if (sgn(x) == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) return;
    }
    if (g <= 1) return;
    for (auto& x : row) {
        if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
}

IntRow to_integer_row(const Rational* begin, std::size_t n) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < n; ++j) {
        const auto& q = begin[j].raw();
        if (sgn(q) != 0 && q.get_den() != 1) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        }
    }
    IntRow row(n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto& q = begin[j].raw();
        if (sgn(q) == 0) continue;
        if (l == 1) {
            row[j] = q.get_num();
        } else {
            mpz_divexact(row[j].get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
            row[j] *= q.get_num();
        }
    }
    make_primitive(row);
    return row;
}

std::vector<std::size_t> nonzero_positions(const IntRow& row, std::size_t from) {
    std::vector<std::size_t> nz;
    for (std::size_t j = from; j < row.size(); ++j) {
        if (sgn(row[j]) != 0) nz.push_back(j);
    }
    return nz;
}

// target <- a*target - b*pivot with a, b chosen to cancel column col, then
// the row is divided by its content. Fraction-free: no rationals appear.
void eliminate(IntRow& target, const IntRow& pivot, const std::vector<std::size_t>& pivot_nz,
               std::size_t col, mpz_class& g, mpz_class& a, mpz_class& b) {
    mpz_gcd(g.get_mpz_t(), pivot[col].get_mpz_t(), target[col].get_mpz_t());
    mpz_divexact(a.get_mpz_t(), pivot[col].get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), target[col].get_mpz_t(), g.get_mpz_t());
    if (a != 1) {
        for (auto& x : target) {
            if (sgn(x) != 0) x *= a;
        }
    }
    for (const std::size_t j : pivot_nz) {
        mpz_submul(target[j].get_mpz_t(), b.get_mpz_t(), pivot[j].get_mpz_t());
    }
    make_primitive(target);
}

struct Echelon {
    std::vector<IntRow> rows;  // first `pivots.size()` rows are the echelon rows
    std::vector<std::size_t> pivots;
};

std::size_t count_nonzero(const IntRow& row) {
    return static_cast<std::size_t>(
        std::count_if(row.begin(), row.end(), [](const mpz_class& x) { return sgn(x) != 0; }));
}

// Row echelon form. Among the rows with a nonzero entry in the current
// column the sparsest one (then the one with the smallest entry, then the
// lowest index) becomes the pivot: a deterministic choice that only
// affects intermediate growth, never the reduced form.
Echelon forward_eliminate(std::vector<IntRow> rows, std::size_t cols) {
    Echelon e;
    mpz_class g, a, b;
    std::vector<std::size_t> nnz(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) nnz[i] = count_nonzero(rows[i]);
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
        std::size_t sel = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i) {
            if (sgn(rows[i][col]) == 0) continue;
            if (sel == rows.size() || nnz[i] < nnz[sel] ||
                (nnz[i] == nnz[sel] && mpz_cmpabs(rows[i][col].get_mpz_t(), rows[sel][col].get_mpz_t()) < 0)) {
                sel = i;
            }
        }
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        std::swap(nnz[r], nnz[sel]);
        if (sgn(rows[r][col]) < 0) {
            for (auto& x : rows[r]) x = -x;
        }
        const auto nz = nonzero_positions(rows[r], col);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (sgn(rows[i][col]) != 0) {
                eliminate(rows[i], rows[r], nz, col, g, a, b);
                nnz[i] = count_nonzero(rows[i]);
            }
        }
        e.pivots.push_back(col);
        ++r;
    }
    rows.resize(r);
    e.rows = std::move(rows);
    return e;
}

void back_substitute(Echelon& e) {
    mpz_class g, a, b;
    for (std::size_t k = e.pivots.size(); k-- > 0;) {
        const std::size_t pc = e.pivots[k];
        const auto nz = nonzero_positions(e.rows[k], pc);
        for (std::size_t i = 0; i < k; ++i) {
            if (sgn(e.rows[i][pc]) != 0) eliminate(e.rows[i], e.rows[k], nz, pc, g, a, b);
        }
    }
}

std::vector<IntRow> integer_rows(const Matrix& m) {
    std::vector<IntRow> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        rows.push_back(m.cols() == 0 ? IntRow{} : to_integer_row(&m(i, 0), m.cols()));
    }
    return rows;
}

Echelon gauss_jordan(const Matrix& m) {
    Echelon e = forward_eliminate(integer_rows(m), m.cols());
    back_substitute(e);
    return e;
}

}  // namespace

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
    if (rows.empty()) return {};
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
        std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * m.cols_));
    }
    return m;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Vector Matrix::row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("dimension mismatch in Matrix::apply");
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
        }
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch in matrix product");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

RrefResult rref(const Matrix& m) {
    const Echelon e = gauss_jordan(m);
    RrefResult out{Matrix(m.rows(), m.cols()), e.pivots, e.pivots.size()};
    for (std::size_t k = 0; k < e.pivots.size(); ++k) {
        const mpz_class& p = e.rows[k][e.pivots[k]];
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (sgn(e.rows[k][j]) != 0) out.reduced(k, j) = Rational(e.rows[k][j], p);
        }
    }
    return out;
}

std::size_t rank(const Matrix& m) { return forward_eliminate(integer_rows(m), m.cols()).pivots.size(); }

std::vector<Vector> nullspace(const Matrix& m) {
    const Echelon e = gauss_jordan(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (const auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols());
        v[f] = 1;
        for (std::size_t k = 0; k < e.pivots.size(); ++k) {
            const auto& entry = e.rows[k][f];
            if (sgn(entry) != 0) v[e.pivots[k]] = -Rational(entry, e.rows[k][e.pivots[k]]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("dimension mismatch in solve");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    const RrefResult r = rref(aug);
    if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
    Vector x(m.cols());
    for (std::size_t k = 0; k < r.rank; ++k) x[r.pivots[k]] = r.reduced(k, m.cols());
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const RrefResult r = rref(aug);
    if (r.rank < n || r.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
    return inv;
}

Rational determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    Matrix a = m;
    const std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c).is_zero()) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c).is_zero()) continue;
            const Rational factor = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j) a(i, j) -= factor * a(c, j);
        }
    }
    return det;
}

std::vector<mpz_class> RowSpace::reduce(const Vector& v) const {
    if (v.size() != dim_) throw std::invalid_argument("dimension mismatch in RowSpace");
    IntRow row = dim_ == 0 ? IntRow{} : to_integer_row(v.data(), dim_);
    mpz_class g, a, b;
    for (const auto& r : rows_) {
        if (sgn(row[r.pivot]) == 0) continue;
        eliminate(row, r.entries, r.nonzero, r.pivot, g, a, b);
    }
    return row;
}

bool RowSpace::insert(const Vector& v) {
    IntRow row = reduce(v);
    const auto it = std::find_if(row.begin(), row.end(), [](const mpz_class& x) { return sgn(x) != 0; });
    if (it == row.end()) return false;
    const auto pivot = static_cast<std::size_t>(it - row.begin());
    const auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                                      [](const Row& r, std::size_t p) { return r.pivot < p; });
    auto nz = nonzero_positions(row, pivot);
    rows_.insert(pos, Row{pivot, std::move(row), std::move(nz)});
    return true;
}

bool RowSpace::contains(const Vector& v) const {
    const IntRow row = reduce(v);
    return std::all_of(row.begin(), row.end(), [](const mpz_class& x) { return sgn(x) == 0; });
}

}  // namespace logbundle
