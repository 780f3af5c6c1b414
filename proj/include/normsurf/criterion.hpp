#pragma once

#include <map>
#include <string>
#include <vector>

#include "normsurf/cycles.hpp"
#include "normsurf/zariski.hpp"

namespace normsurf {

/// Numeric data of a divisor near the point: its self-intersection and its
/// pairings with the declared curve classes.
struct DivisorData {
    Rational d2;
    std::map<std::string, Rational> pairings;
};

/// A nonzero effective combination of declared curves that survives the
/// exclusion inequalities, i.e. a candidate obstruction to freeness.
struct ExclusionWitness {
    std::vector<long long> coeffs; // over the through-x curve list
    Rational de;
    Rational e2;
};

enum class FreenessKind { Free, PossiblyNotFree };

struct Verdict {
    FreenessKind kind = FreenessKind::Free;
    std::vector<ExclusionWitness> witnesses; // sorted by coefficient vector
    std::vector<std::string> through_x;
    long long bound = 0;
    std::string caveat; // bounded search over declared curves only
};

/// The exclusion system for a divisor class E: all of
///   0 <= DE < delta/2,   DE - delta/4 <= E^2 <= (DE)^2 / D^2,
///   and E^2 < 0 when DE = 0.
/// Requires the theorem hypothesis D^2 > delta.
bool check_exclusion(const Rational& d2, const Rational& de, const Rational& e2,
                     const Rational& delta);

/// Searches all nonzero effective integer combinations of the through-x
/// curves with coefficients up to `bound` for exclusion witnesses. A point
/// that is not log terminal is free unconditionally. Requires D nef on the
/// declared curves and D^2 > delta_x.
Verdict freeness_verdict(const SingularityClass& point, const DivisorData& d,
                         const CurveLattice& curves,
                         const std::vector<std::string>& through_x, long long bound = 10);

/// Ample A, integer t: |K + tA| is free when t >= 3, or when t = 2 and
/// A^2 > 1. Pure arithmetic; ampleness is asserted by the caller.
bool corollary1_check(const DivisorData& a, long long t);

/// True iff D^2 > delta and every declared pairing is at least delta/2.
bool corollary2_check(const Rational& delta, const DivisorData& d);

/// True iff every coefficient of the fundamental cycle is at least 2.
/// Requires an ADE graph (all weights 2, negative definite).
bool corollary4_check(const DualGraph& g);

} // namespace normsurf
