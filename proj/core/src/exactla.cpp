#include "jc/exactla.hpp"

#include <algorithm>
#include <stdexcept>

namespace jc::la {

std::string toCanonicalString(Rational q) {
    q.canonicalize();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parseRational(const std::string& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0) {
        throw std::invalid_argument("not a rational number: '" + text + "'");
    }
    if (q.get_den() == 0) {
        throw std::invalid_argument("zero denominator: '" + text + "'");
    }
    q.canonicalize();
    return q;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

SparseMatrix SparseMatrix::identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

SparseMatrix SparseMatrix::fromDense(const std::vector<Vector>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    SparseMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("ragged dense matrix");
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

void SparseMatrix::checkIndex(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("SparseMatrix index out of range");
}

void SparseMatrix::set(std::size_t r, std::size_t c, const Rational& value) {
    checkIndex(r, c);
    // mpq_class(n, d) does not reduce; GMP arithmetic assumes reduced operands.
    Rational q = value;
    q.canonicalize();
    if (q == 0) {
        entries_.erase({r, c});
    } else {
        entries_[{r, c}] = std::move(q);
    }
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
    checkIndex(r, c);
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Rational(0) : it->second;
}

SparseMatrix SparseMatrix::transposed() const {
    SparseMatrix t(cols_, rows_);
    for (const auto& [rc, v] : entries_) t.entries_[{rc.second, rc.first}] = v;
    return t;
}

SparseMatrix SparseMatrix::operator-() const { return scaled(-1); }

SparseMatrix SparseMatrix::scaled(const Rational& s) const {
    SparseMatrix out(rows_, cols_);
    if (s == 0) return out;
    for (const auto& [rc, v] : entries_) out.entries_[rc] = v * s;
    return out;
}

std::vector<Vector> SparseMatrix::toDense() const {
    std::vector<Vector> d(rows_, Vector(cols_, Rational(0)));
    for (const auto& [rc, v] : entries_) d[rc.first][rc.second] = v;
    return d;
}

Vector SparseMatrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("dimension mismatch in apply");
    Vector out(rows_, Rational(0));
    for (const auto& [rc, a] : entries_) out[rc.first] += a * v[rc.second];
    return out;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch in product");
    // Row-indexed view of b; iteration order is fixed by std::map.
    std::vector<std::vector<std::pair<std::size_t, Rational>>> bRows(b.rows_);
    for (const auto& [rc, v] : b.entries_) bRows[rc.first].emplace_back(rc.second, v);
    std::map<std::pair<std::size_t, std::size_t>, Rational> acc;
    for (const auto& [rc, av] : a.entries_) {
        for (const auto& [c, bv] : bRows[rc.second]) acc[{rc.first, c}] += av * bv;
    }
    SparseMatrix out(a.rows_, b.cols_);
    for (auto& [rc, v] : acc) {
        if (v != 0) out.entries_.emplace(rc, std::move(v));
    }
    return out;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw std::invalid_argument("dimension mismatch in sum");
    }
    SparseMatrix out = a;
    for (const auto& [rc, v] : b.entries_) out.set(rc.first, rc.second, out.at(rc.first, rc.second) + v);
    return out;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return a + (-b); }

std::vector<std::size_t> rowReduce(std::vector<Vector>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < rows.size(); ++c) {
        std::size_t p = lead;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[lead], rows[p]);
        const Rational inv = 1 / rows[lead][c];
        for (auto& x : rows[lead]) x *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == lead || rows[r][c] == 0) continue;
            const Rational f = rows[r][c];
            for (std::size_t j = c; j < cols; ++j) rows[r][j] -= f * rows[lead][j];
        }
        pivots.push_back(c);
        ++lead;
    }
    rows.resize(lead);
    return pivots;
}

Subspace Subspace::span(std::size_t ambientDim, const std::vector<Vector>& vectors) {
    Subspace s(ambientDim);
    std::vector<Vector> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (v.size() != ambientDim) throw std::invalid_argument("vector length differs from ambient dimension");
        rows.push_back(v);
    }
    rowReduce(rows, ambientDim);
    s.basis_ = std::move(rows);
    return s;
}

Subspace Subspace::full(std::size_t ambientDim) {
    std::vector<Vector> unit;
    for (std::size_t i = 0; i < ambientDim; ++i) {
        Vector v(ambientDim, Rational(0));
        v[i] = 1;
        unit.push_back(std::move(v));
    }
    return span(ambientDim, unit);
}

std::vector<std::size_t> Subspace::pivotColumns() const {
    std::vector<std::size_t> out;
    for (const auto& row : basis_) {
        auto it = std::find_if(row.begin(), row.end(), [](const Rational& x) { return x != 0; });
        out.push_back(static_cast<std::size_t>(it - row.begin()));
    }
    return out;
}

bool Subspace::contains(const Vector& v) const {
    if (v.size() != ambient_) return false;
    Vector r = v;
    const auto piv = pivotColumns();
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (r[piv[i]] == 0) continue;
        const Rational f = r[piv[i]];
        for (std::size_t j = 0; j < ambient_; ++j) r[j] -= f * basis_[i][j];
    }
    return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
}

bool Subspace::isCanonical() const {
    std::vector<Vector> copy = basis_;
    rowReduce(copy, ambient_);
    return copy == basis_;
}

Subspace kernel(const SparseMatrix& m) {
    std::vector<Vector> rows = m.toDense();
    const auto pivots = rowReduce(rows, m.cols());
    std::vector<bool> isPivot(m.cols(), false);
    for (auto c : pivots) isPivot[c] = true;

    std::vector<Vector> generators;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (isPivot[free]) continue;
        Vector v(m.cols(), Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
        generators.push_back(std::move(v));
    }
    return Subspace::span(m.cols(), generators);
}

Subspace image(const SparseMatrix& m) {
    return Subspace::span(m.rows(), m.transposed().toDense());
}

Subspace cokernelBasis(const SparseMatrix& m) {
    const Subspace img = image(m);
    std::vector<bool> isPivot(m.rows(), false);
    for (auto c : img.pivotColumns()) isPivot[c] = true;
    std::vector<Vector> unit;
    for (std::size_t j = 0; j < m.rows(); ++j) {
        if (isPivot[j]) continue;
        Vector v(m.rows(), Rational(0));
        v[j] = 1;
        unit.push_back(std::move(v));
    }
    return Subspace::span(m.rows(), unit);
}

std::size_t rank(const SparseMatrix& m) {
    std::vector<Vector> rows = m.toDense();
    return rowReduce(rows, m.cols()).size();
}

}  // namespace jc::la
