#include "normsurf/zariski.hpp"

#include <algorithm>
#include <set>

namespace normsurf {

CurveLattice::CurveLattice(std::vector<std::string> ids, IntersectionMatrix form)
    : ids_(std::move(ids)), form_(std::move(form)) {
    if (static_cast<int>(ids_.size()) != form_.size())
        throw Error(ErrorCode::DimensionMismatch, "curve ids do not match the matrix size");
    std::set<std::string> seen;
    for (const auto& id : ids_) {
        if (id.empty() || !seen.insert(id).second)
            throw Error(ErrorCode::InvalidArgument, "curve ids must be unique and nonempty");
    }
}

int CurveLattice::index_of(const std::string& id) const {
    for (int i = 0; i < size(); ++i)
        if (ids_[i] == id) return i;
    throw Error(ErrorCode::InvalidArgument, "unknown curve id '" + id + "'");
}

DivisorClass DivisorClass::from_pairings(Vec pairings, std::optional<Rational> d2) {
    DivisorClass d;
    d.pairings_ = std::move(pairings);
    d.d2_ = std::move(d2);
    return d;
}

DivisorClass DivisorClass::from_coeffs(const CurveLattice& lattice, Vec coeffs) {
    DivisorClass d;
    d.pairings_ = mat_vec(lattice.form(), coeffs);
    d.d2_ = pairing(coeffs, coeffs, lattice.form());
    d.coeffs_ = std::move(coeffs);
    return d;
}

namespace {

IntersectionMatrix submatrix(const IntersectionMatrix& m, const std::vector<int>& idx) {
    std::vector<std::vector<Rational>> rows(idx.size(), std::vector<Rational>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) rows[i][j] = m.at(idx[i], idx[j]);
    return IntersectionMatrix(std::move(rows));
}

} // namespace

ZariskiDecomposition zariski_decompose(const DivisorClass& d, const CurveLattice& lattice,
                                       std::vector<std::vector<int>>* support_trace) {
    const int n = lattice.size();
    if (static_cast<int>(d.pairings().size()) != n)
        throw Error(ErrorCode::DimensionMismatch, "divisor pairings do not match the lattice");
    const IntersectionMatrix& m = lattice.form();

    std::vector<bool> in_support(n, false);
    Vec ncoeffs(n);
    Vec npair(n); // (M N)_i
    for (int round = 0; round <= n; ++round) {
        bool grew = false;
        for (int i = 0; i < n; ++i) {
            if (!in_support[i] && d.pairings()[i] - npair[i] < Rational(0)) {
                in_support[i] = true;
                grew = true;
            }
        }
        if (!grew) break;
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (in_support[i]) idx.push_back(i);
        if (support_trace) support_trace->push_back(idx);
        IntersectionMatrix sub = submatrix(m, idx);
        if (!is_negative_definite(sub))
            throw Error(ErrorCode::NotNegativeDefinite,
                        "no Zariski decomposition over this lattice: support is not "
                        "negative definite");
        Vec rhs(idx.size());
        for (std::size_t k = 0; k < idx.size(); ++k) rhs[k] = d.pairings()[idx[k]];
        Vec sol = solve(sub, rhs);
        std::fill(ncoeffs.begin(), ncoeffs.end(), Rational(0));
        for (std::size_t k = 0; k < idx.size(); ++k) ncoeffs[idx[k]] = sol[k];
        npair = mat_vec(m, ncoeffs);
    }

    ZariskiDecomposition z;
    z.n_coeffs = ncoeffs;
    z.p_pairings.resize(n);
    for (int i = 0; i < n; ++i) {
        z.p_pairings[i] = d.pairings()[i] - npair[i];
        if (z.p_pairings[i].sign() < 0)
            throw Error(ErrorCode::Internal, "nef part pairs negatively after fixpoint");
        if (ncoeffs[i].sign() < 0)
            throw Error(ErrorCode::Internal, "negative part acquired a negative coefficient");
        if (!ncoeffs[i].is_zero()) z.support.push_back(i);
    }
    if (d.d2()) {
        // P^2 = D^2 - 2 D.N + N^2
        Rational dn;
        for (int i = 0; i < n; ++i) dn += ncoeffs[i] * d.pairings()[i];
        Rational n2 = pairing(ncoeffs, ncoeffs, m);
        z.p2 = *d.d2() - dn - dn + n2;
    }
    return z;
}

bool verify_decomposition(const DivisorClass& d, const ZariskiDecomposition& z,
                          const CurveLattice& lattice) {
    const int n = lattice.size();
    if (static_cast<int>(d.pairings().size()) != n ||
        static_cast<int>(z.n_coeffs.size()) != n ||
        static_cast<int>(z.p_pairings.size()) != n)
        throw Error(ErrorCode::DimensionMismatch, "decomposition does not match the lattice");

    // N effective
    for (const auto& c : z.n_coeffs)
        if (c.sign() < 0) return false;
    // P nef on the lattice and P + N reproducing D's pairings
    Vec npair = mat_vec(lattice.form(), z.n_coeffs);
    Rational pn;
    for (int i = 0; i < n; ++i) {
        if (z.p_pairings[i].sign() < 0) return false;
        if (z.p_pairings[i] + npair[i] != d.pairings()[i]) return false;
        pn += z.n_coeffs[i] * z.p_pairings[i];
    }
    // P.N = 0
    if (!pn.is_zero()) return false;
    // support matches N and is negative definite
    std::vector<int> support;
    for (int i = 0; i < n; ++i)
        if (!z.n_coeffs[i].is_zero()) support.push_back(i);
    if (support != z.support) return false;
    if (!is_negative_definite(submatrix(lattice.form(), support))) return false;
    return true;
}

} // namespace normsurf
