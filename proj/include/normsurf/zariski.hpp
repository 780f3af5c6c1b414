#pragma once

#include <optional>
#include <string>
#include <vector>

#include "normsurf/lattice.hpp"

namespace normsurf {

/// Finite set of declared curve classes with their exact intersection form.
/// All decompositions are relative to the declared curves; curves of the
/// ambient surface outside the lattice are invisible to this module.
class CurveLattice {
public:
    CurveLattice(std::vector<std::string> ids, IntersectionMatrix form);

    int size() const { return form_.size(); }
    const std::vector<std::string>& ids() const { return ids_; }
    const IntersectionMatrix& form() const { return form_; }
    int index_of(const std::string& id) const; // throws if unknown

private:
    std::vector<std::string> ids_;
    IntersectionMatrix form_;
};

/// A divisor class known through its pairings with the declared curves,
/// optionally with its self-intersection, and optionally as an explicit
/// coefficient vector over the lattice. The abstract form is primary: the
/// classes of interest (pullbacks f*D) are not supported on the lattice.
class DivisorClass {
public:
    static DivisorClass from_pairings(Vec pairings, std::optional<Rational> d2 = std::nullopt);
    static DivisorClass from_coeffs(const CurveLattice& lattice, Vec coeffs);

    const Vec& pairings() const { return pairings_; }
    const std::optional<Rational>& d2() const { return d2_; }
    const std::optional<Vec>& coeffs() const { return coeffs_; }

private:
    Vec pairings_;
    std::optional<Rational> d2_;
    std::optional<Vec> coeffs_;
};

struct ZariskiDecomposition {
    Vec n_coeffs;                // negative part N, over the lattice
    Vec p_pairings;              // P . C_i for every declared curve
    std::optional<Rational> p2;  // present when D^2 was supplied
    std::vector<int> support;    // indices with nonzero N coefficient
};

/// D = P + N with P nef on the lattice, N effective with negative definite
/// support and P.N = 0. Iterates by adding every violating curve to the
/// support and re-solving until P pairs non-negatively with all curves.
/// Throws Error(NotNegativeDefinite) when a support set fails the
/// definiteness requirement ("no Zariski decomposition over this lattice").
/// When given, `support_trace` receives the support set of every round.
ZariskiDecomposition zariski_decompose(const DivisorClass& d, const CurveLattice& lattice,
                                       std::vector<std::vector<int>>* support_trace = nullptr);

/// Independent checker: the four decomposition invariants plus P + N
/// reproducing D's pairings.
bool verify_decomposition(const DivisorClass& d, const ZariskiDecomposition& z,
                          const CurveLattice& lattice);

} // namespace normsurf
