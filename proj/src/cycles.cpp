#include "normsurf/cycles.hpp"

namespace normsurf {

const char* kind_name(SingularityKind k) {
    switch (k) {
    case SingularityKind::Smooth: return "Smooth";
    case SingularityKind::RationalDoublePoint: return "RationalDoublePoint";
    case SingularityKind::LogTerminal: return "LogTerminal";
    case SingularityKind::NotLogTerminal: return "NotLogTerminal";
    }
    return "unknown";
}

namespace {

void require_contractible(const DualGraph& g) {
    if (!is_negative_definite(g.intersection_matrix()))
        throw Error(ErrorCode::NotNegativeDefinite,
                    "not a contractible exceptional configuration");
}

} // namespace

Cycle fundamental_cycle(const DualGraph& g) {
    require_contractible(g);
    const int n = g.size();
    const IntersectionMatrix& m = g.intersection_matrix();
    std::vector<long long> z(n, 1);
    auto pair_with = [&](int i) {
        // integral row dot; matrix entries of a dual graph are integers
        Rational s;
        for (int j = 0; j < n; ++j) s += m.at(i, j) * Rational(z[j]);
        return s;
    };
    long long guard = 0;
    for (;;) {
        int hit = -1;
        for (int i = 0; i < n; ++i) {
            if (pair_with(i).sign() > 0) {
                hit = i;
                break;
            }
        }
        if (hit < 0) break;
        ++z[hit];
        if (++guard > 1000000)
            throw Error(ErrorCode::Internal, "fundamental cycle iteration did not terminate");
    }
    Cycle out;
    out.coeffs.reserve(n);
    for (int i = 0; i < n; ++i) out.coeffs.emplace_back(z[i]);
    return out;
}

Cycle discrepancy(const DualGraph& g) {
    require_contractible(g);
    const int n = g.size();
    Vec rhs(n);
    for (int i = 0; i < n; ++i)
        rhs[i] = Rational(2 - g.vertex(i).weight - 2 * g.vertex(i).genus);
    Cycle d{solve(g.intersection_matrix(), rhs)};
    if (!d.is_effective())
        throw Error(ErrorCode::Internal, "discrepancy divisor is not effective");
    return d;
}

SingularityClass classify_smooth() {
    SingularityClass s;
    s.kind = SingularityKind::Smooth;
    s.delta_x = Rational(4);
    return s;
}

SingularityClass classify(const DualGraph& g) {
    require_contractible(g);
    SingularityClass s;
    s.discrepancy = discrepancy(g);
    s.fundamental_cycle = fundamental_cycle(g);

    if (s.discrepancy.is_zero()) {
        s.kind = SingularityKind::RationalDoublePoint;
        s.delta_x = Rational(2);
        return s;
    }

    bool coeffs_below_one = true;
    for (const auto& a : s.discrepancy.coeffs)
        if (a >= Rational(1)) coeffs_below_one = false;

    // Log terminal needs a simple normal crossing tree of rational curves
    // with all discrepancy coefficients below 1.
    if (!coeffs_below_one || g.has_positive_genus() || g.has_multi_edge() || !g.is_tree()) {
        s.kind = SingularityKind::NotLogTerminal;
        s.delta_x = Rational(0);
        return s;
    }

    s.kind = SingularityKind::LogTerminal;
    Vec diff(g.size());
    for (int i = 0; i < g.size(); ++i)
        diff[i] = s.discrepancy.coeffs[i] - s.fundamental_cycle.coeffs[i];
    s.delta_x = -pairing(diff, diff, g.intersection_matrix());
    if (s.delta_x.sign() <= 0 || s.delta_x > Rational(2))
        throw Error(ErrorCode::Internal, "log terminal delta_x outside (0, 2]");
    return s;
}

Rational delta_x(const DualGraph& g) {
    return classify(g).delta_x;
}

} // namespace normsurf
