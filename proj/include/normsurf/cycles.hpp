#pragma once

#include "normsurf/graph.hpp"

namespace normsurf {

/// Formal Q-linear combination of the exceptional curves of a graph,
/// indexed like the graph's vertex list.
struct Cycle {
    Vec coeffs;

    bool is_zero() const {
        for (const auto& c : coeffs)
            if (!c.is_zero()) return false;
        return true;
    }
    bool is_effective() const {
        for (const auto& c : coeffs)
            if (c.sign() < 0) return false;
        return true;
    }
};

enum class SingularityKind { Smooth, RationalDoublePoint, LogTerminal, NotLogTerminal };

const char* kind_name(SingularityKind k);

struct SingularityClass {
    SingularityKind kind = SingularityKind::Smooth;
    Rational delta_x;
    Cycle discrepancy;       // empty for Smooth
    Cycle fundamental_cycle; // empty for Smooth
};

/// Minimal nonzero effective integral cycle Z with Z.C_i <= 0 for all i.
/// Computed by the standard sequence: start from the reduced cycle and add
/// the lowest-index curve whose pairing is still positive. Requires a
/// negative definite graph.
Cycle fundamental_cycle(const DualGraph& g);

/// The effective Q-divisor D with D.C_i = C_i^2 + 2 - 2 g_i for every i,
/// i.e. the opposite of the log discrepancies on the minimal resolution.
Cycle discrepancy(const DualGraph& g);

/// Classification of the singular point with dual graph g. Throws
/// Error(NotNegativeDefinite) when g is not a contractible configuration.
SingularityClass classify(const DualGraph& g);

/// Classification of a smooth point (delta_x = 4).
SingularityClass classify_smooth();

Rational delta_x(const DualGraph& g);

} // namespace normsurf
