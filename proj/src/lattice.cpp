#include "normsurf/lattice.hpp"

#include <utility>

namespace normsurf {

IntersectionMatrix::IntersectionMatrix(std::vector<std::vector<Rational>> rows) {
    n_ = static_cast<int>(rows.size());
    entries_.reserve(static_cast<std::size_t>(n_) * n_);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n_)
            throw Error(ErrorCode::DimensionMismatch, "intersection matrix is not square");
        for (const auto& e : row) entries_.push_back(e);
    }
    for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j) {
            if (at(i, j) != at(j, i))
                throw Error(ErrorCode::InvalidArgument, "intersection matrix is not symmetric");
            if (at(i, j).sign() < 0)
                throw Error(ErrorCode::InvalidArgument,
                            "negative off-diagonal intersection number");
        }
    }
}

IntersectionMatrix IntersectionMatrix::diagonal(const std::vector<Rational>& diag) {
    std::vector<std::vector<Rational>> rows(diag.size(), std::vector<Rational>(diag.size()));
    for (std::size_t i = 0; i < diag.size(); ++i) rows[i][i] = diag[i];
    return IntersectionMatrix(std::move(rows));
}

Rational pairing(const Vec& u, const Vec& v, const IntersectionMatrix& m) {
    const int n = m.size();
    if (static_cast<int>(u.size()) != n || static_cast<int>(v.size()) != n)
        throw Error(ErrorCode::DimensionMismatch, "pairing: vector length does not match lattice");
    Rational total;
    for (int i = 0; i < n; ++i) {
        if (u[i].is_zero()) continue;
        Rational row;
        for (int j = 0; j < n; ++j) {
            if (v[j].is_zero()) continue;
            row += m.at(i, j) * v[j];
        }
        total += u[i] * row;
    }
    return total;
}

Vec mat_vec(const IntersectionMatrix& m, const Vec& v) {
    const int n = m.size();
    if (static_cast<int>(v.size()) != n)
        throw Error(ErrorCode::DimensionMismatch, "apply: vector length does not match lattice");
    Vec out(n);
    for (int i = 0; i < n; ++i) {
        Rational s;
        for (int j = 0; j < n; ++j) {
            if (v[j].is_zero()) continue;
            s += m.at(i, j) * v[j];
        }
        out[i] = s;
    }
    return out;
}

bool is_negative_definite(const IntersectionMatrix& m) {
    const int n = m.size();
    if (n == 0) return true;
    // Eliminate on -M without row exchanges; every pivot equals the ratio of
    // consecutive leading principal minors, so -M is positive definite iff
    // all pivots stay positive.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = -m.at(i, j);
    for (int k = 0; k < n; ++k) {
        if (a[k][k].sign() <= 0) return false;
        for (int i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            Rational f = a[i][k] / a[k][k];
            for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return true;
}

Vec solve(const IntersectionMatrix& m, const Vec& b) {
    const int n = m.size();
    if (static_cast<int>(b.size()) != n)
        throw Error(ErrorCode::DimensionMismatch, "solve: vector length does not match lattice");
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
        a[i][n] = b[i];
    }
    for (int k = 0; k < n; ++k) {
        int pivot = k;
        Rational best = a[k][k].abs();
        for (int r = k + 1; r < n; ++r) {
            Rational cand = a[r][k].abs();
            if (cand > best) {
                best = cand;
                pivot = r;
            }
        }
        if (best.is_zero()) throw Error(ErrorCode::SingularMatrix, "solve: singular matrix");
        if (pivot != k) std::swap(a[pivot], a[k]);
        for (int i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            Rational f = a[i][k] / a[k][k];
            for (int j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    Vec x(n);
    for (int i = n - 1; i >= 0; --i) {
        Rational s = a[i][n];
        for (int j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    return x;
}

} // namespace normsurf
