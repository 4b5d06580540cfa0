#include "deforma/matrix.hpp"

#include "deforma/errors.hpp"

namespace deforma {

Vec RatMatrix::apply(const Vec& x) const {
    if (x.size() != cols_) throw LengthMismatch("matrix apply: size mismatch");
    Vec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational acc;
        for (std::size_t j = 0; j < cols_; ++j) {
            const Rational& e = (*this)(i, j);
            if (!e.is_zero() && !x[j].is_zero()) acc += e * x[j];
        }
        out[i] = acc;
    }
    return out;
}

std::pair<RatMatrix, std::vector<std::size_t>> rref(RatMatrix m) {
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        // topmost row with a nonzero entry in this column
        std::size_t sel = pivot_row;
        while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != pivot_row)
            for (std::size_t j = col; j < m.cols(); ++j)
                std::swap(m(pivot_row, j), m(sel, j));
        Rational inv = Rational(1) / m(pivot_row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(pivot_row, j) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == pivot_row || m(r, col).is_zero()) continue;
            Rational factor = m(r, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m(r, j) -= factor * m(pivot_row, j);
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const RatMatrix& m) { return rref(m).second.size(); }

SubspaceBasis make_subspace(std::size_t ambient_dim, const std::vector<Vec>& spanning) {
    RatMatrix m(spanning.size(), ambient_dim);
    for (std::size_t i = 0; i < spanning.size(); ++i) {
        if (spanning[i].size() != ambient_dim)
            throw LengthMismatch("make_subspace: vector length != ambient dimension");
        for (std::size_t j = 0; j < ambient_dim; ++j) m(i, j) = spanning[i][j];
    }
    auto [r, pivots] = rref(std::move(m));
    SubspaceBasis basis;
    basis.ambient_dim = ambient_dim;
    basis.pivot_cols = pivots;
    basis.vectors.reserve(pivots.size());
    for (std::size_t i = 0; i < pivots.size(); ++i) basis.vectors.push_back(r.row(i));
    return basis;
}

bool SubspaceBasis::contains(const Vec& v) const {
    if (v.size() != ambient_dim)
        throw LengthMismatch("SubspaceBasis::contains: length mismatch");
    Vec rem = v;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        const Rational& c = rem[pivot_cols[i]];
        if (!c.is_zero()) add_scaled(rem, -c, vectors[i]);
    }
    return is_zero(rem);
}

SubspaceBasis kernel(const RatMatrix& m) {
    auto [r, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v(m.cols());
        v[free_col] = Rational(1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -r(i, free_col);
        basis.push_back(std::move(v));
    }
    return make_subspace(m.cols(), basis);
}

SubspaceBasis image(const RatMatrix& m) {
    std::vector<Vec> cols;
    cols.reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Vec c(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i) c[i] = m(i, j);
        cols.push_back(std::move(c));
    }
    return make_subspace(m.rows(), cols);
}

std::optional<Vec> solve_particular(const RatMatrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw LengthMismatch("solve_particular: rhs length != rows");
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto [r, pivots] = rref(std::move(aug));
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Vec x(m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r(i, m.cols());
    return x;
}

QuotientBasis quotient_basis(const SubspaceBasis& sub, const SubspaceBasis& super) {
    if (sub.ambient_dim != super.ambient_dim)
        throw LengthMismatch("quotient_basis: ambient dimensions differ");
    for (const auto& v : sub.vectors)
        if (!super.contains(v))
            throw SubspaceNotContained("quotient_basis: sub is not contained in super");

    // Complete sub to a basis of super by adding those of super's echelon
    // vectors that are independent of what was accumulated so far. The working
    // set is kept in echelon form (distinct leading columns) so each test is a
    // single reduction pass.
    std::vector<std::pair<std::size_t, Vec>> echelon; // (leading column, normalized row)
    auto reduce_insert = [&echelon](Vec v) -> bool {
        for (const auto& [lead, row] : echelon)
            if (!v[lead].is_zero()) add_scaled(v, -v[lead], row);
        std::size_t lead = 0;
        while (lead < v.size() && v[lead].is_zero()) ++lead;
        if (lead == v.size()) return false;
        Rational inv = Rational(1) / v[lead];
        for (auto& x : v) x *= inv;
        echelon.emplace_back(lead, std::move(v));
        return true;
    };
    for (const auto& v : sub.vectors) reduce_insert(v);
    std::vector<Vec> reps;
    for (const auto& v : super.vectors)
        if (reduce_insert(v)) reps.push_back(v);

    // Coordinates with respect to [sub | reps]: solve B^T x = v.
    std::size_t total = sub.dim() + reps.size();
    RatMatrix bt(super.ambient_dim, total);
    for (std::size_t j = 0; j < sub.dim(); ++j)
        for (std::size_t i = 0; i < super.ambient_dim; ++i) bt(i, j) = sub.vectors[j][i];
    for (std::size_t j = 0; j < reps.size(); ++j)
        for (std::size_t i = 0; i < super.ambient_dim; ++i)
            bt(i, sub.dim() + j) = reps[j][i];

    std::size_t sub_dim = sub.dim();
    QuotientBasis q;
    q.representatives = reps;
    q.coords_of = [bt, sub_dim, total](const Vec& v) -> Vec {
        auto x = solve_particular(bt, v);
        if (!x) throw SubspaceNotContained("coords_of: vector outside super");
        return Vec(x->begin() + sub_dim, x->begin() + total);
    };
    return q;
}

} // namespace deforma
