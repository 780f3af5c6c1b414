#pragma once

#include <vector>

#include "normsurf/rational.hpp"

namespace normsurf {

/// Coefficient vector over a fixed curve basis.
using Vec = std::vector<Rational>;

/// Symmetric intersection form on a finite curve lattice. Off-diagonal
/// entries are non-negative (distinct prime divisors meet non-negatively).
class IntersectionMatrix {
public:
    IntersectionMatrix() : n_(0) {}
    explicit IntersectionMatrix(std::vector<std::vector<Rational>> rows);

    static IntersectionMatrix diagonal(const std::vector<Rational>& diag);

    int size() const { return n_; }
    const Rational& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }

    friend bool operator==(const IntersectionMatrix& a, const IntersectionMatrix& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

private:
    int n_;
    std::vector<Rational> entries_; // row-major
};

/// u^T M v, exactly. Throws on dimension mismatch.
Rational pairing(const Vec& u, const Vec& v, const IntersectionMatrix& m);

/// M v as a vector of pairings. Throws on dimension mismatch.
Vec mat_vec(const IntersectionMatrix& m, const Vec& v);

/// True iff -M is positive definite, decided by the signs of the leading
/// principal minors in exact arithmetic.
bool is_negative_definite(const IntersectionMatrix& m);

/// Exact solution of M x = b by rational Gaussian elimination with partial
/// pivoting on entry magnitude (ties broken by lowest row index).
/// Throws Error(SingularMatrix) when M is singular.
Vec solve(const IntersectionMatrix& m, const Vec& b);

} // namespace normsurf
