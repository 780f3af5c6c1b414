#include "normsurf/criterion.hpp"

#include <algorithm>

namespace normsurf {

bool check_exclusion(const Rational& d2, const Rational& de, const Rational& e2,
                     const Rational& delta) {
    if (d2 <= delta)
        throw Error(ErrorCode::HypothesisViolation,
                    "theorem needs D^2 > delta_x (got D^2 = " + d2.str() +
                        ", delta_x = " + delta.str() + ")");
    const Rational two(2), four(4);
    if (de.sign() < 0) return false;
    if (de >= delta / two) return false;
    if (e2 < de - delta / four) return false;
    if (e2 > de * de / d2) return false;
    if (de.is_zero() && e2.sign() >= 0) return false;
    return true;
}

Verdict freeness_verdict(const SingularityClass& point, const DivisorData& d,
                         const CurveLattice& curves,
                         const std::vector<std::string>& through_x, long long bound) {
    if (bound < 1) throw Error(ErrorCode::InvalidArgument, "bound must be positive");
    for (const auto& [id, value] : d.pairings) {
        if (value.sign() < 0)
            throw Error(ErrorCode::InvalidArgument,
                        "D is not nef on the declared curves (D." + id + " = " + value.str() +
                            ")");
    }
    const Rational& delta = point.delta_x;
    if (d.d2 <= delta)
        throw Error(ErrorCode::HypothesisViolation,
                    "theorem inapplicable: D^2 = " + d.d2.str() + " is not above delta_x = " +
                        delta.str());

    Verdict v;
    v.through_x = through_x;
    v.bound = bound;
    v.caveat = "relative to the declared curves and coefficient bound " + std::to_string(bound);

    if (point.kind == SingularityKind::NotLogTerminal) return v; // free unconditionally

    const int k = static_cast<int>(through_x.size());
    std::vector<int> idx(k);
    Vec dpair(k);
    for (int i = 0; i < k; ++i) {
        idx[i] = curves.index_of(through_x[i]);
        auto it = d.pairings.find(through_x[i]);
        if (it == d.pairings.end())
            throw Error(ErrorCode::InvalidArgument,
                        "no pairing declared for curve '" + through_x[i] + "'");
        dpair[i] = it->second;
    }

    std::vector<long long> c(k, 0);
    for (;;) {
        // next multi-index in lexicographic order
        int pos = k - 1;
        while (pos >= 0 && c[pos] == bound) {
            c[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++c[pos];

        Rational de, e2;
        for (int i = 0; i < k; ++i) {
            if (c[i] == 0) continue;
            de += Rational(c[i]) * dpair[i];
            for (int j = 0; j < k; ++j) {
                if (c[j] == 0) continue;
                e2 += Rational(c[i]) * Rational(c[j]) *
                      curves.form().at(idx[i], idx[j]);
            }
        }
        if (check_exclusion(d.d2, de, e2, delta))
            v.witnesses.push_back({c, de, e2});
    }
    std::sort(v.witnesses.begin(), v.witnesses.end(),
              [](const ExclusionWitness& a, const ExclusionWitness& b) {
                  return a.coeffs < b.coeffs;
              });
    v.kind = v.witnesses.empty() ? FreenessKind::Free : FreenessKind::PossiblyNotFree;
    return v;
}

bool corollary1_check(const DivisorData& a, long long t) {
    if (t <= 0) throw Error(ErrorCode::InvalidArgument, "t must be positive");
    if (a.d2.sign() <= 0)
        throw Error(ErrorCode::InvalidArgument, "A is not ample: A^2 <= 0");
    for (const auto& [id, value] : a.pairings)
        if (value.sign() <= 0)
            throw Error(ErrorCode::InvalidArgument, "A is not ample: A." + id + " <= 0");
    if (t >= 3) return true;
    return t == 2 && a.d2 > Rational(1);
}

bool corollary2_check(const Rational& delta, const DivisorData& d) {
    if (d.d2 <= delta) return false;
    Rational half_delta = delta / Rational(2);
    for (const auto& [id, value] : d.pairings) {
        (void)id;
        if (value < half_delta) return false;
    }
    return true;
}

bool corollary4_check(const DualGraph& g) {
    for (const auto& v : g.vertices())
        if (v.weight != 2 || v.genus != 0)
            throw Error(ErrorCode::InvalidArgument,
                        "not an ADE configuration: all curves must be (-2)-curves");
    if (!is_negative_definite(g.intersection_matrix()))
        throw Error(ErrorCode::InvalidArgument, "not an ADE configuration: not contractible");
    Cycle z = fundamental_cycle(g);
    for (const auto& c : z.coeffs)
        if (c < Rational(2)) return false;
    return true;
}

} // namespace normsurf
