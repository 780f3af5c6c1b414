#pragma once

#include <array>
#include <cstdint>

#include "normsurf/cycles.hpp"

namespace normsurf::smallsolve {

// Integer fast path for the enumeration harness. Bounded so that Bareiss
// minors fit in int64 (Hadamard bound for n <= 10, weights <= 9) and all
// intermediate products fit in __int128. Trees with simple edges and genus
// zero only; everything else goes through the generic rational path.
constexpr int kMaxVertices = 10;
constexpr int kMaxWeight = 9;

struct SmallGraph {
    int n = 0;
    std::array<int, kMaxVertices> weight{};
    int edge_count = 0;
    std::array<std::pair<std::int8_t, std::int8_t>, kMaxVertices> edge{};
};

struct SmallResult {
    bool contractible = false;
    SingularityKind kind = SingularityKind::NotLogTerminal;
    long long delta_num = 0; // delta_x, reduced, den > 0
    long long delta_den = 1;
    std::array<int, kMaxVertices> z{};          // fundamental cycle
    std::array<long long, kMaxVertices> disc{}; // discrepancy numerators over disc_den
    long long disc_den = 1;
};

bool applicable(const SmallGraph& g);

/// Full pipeline on the integer fast path: negative-definiteness, the
/// discrepancy solve, the fundamental cycle and delta_x. Agrees with the
/// generic classify() on its domain (property-tested).
SmallResult classify_small(const SmallGraph& g);

SmallGraph from_dual_graph(const DualGraph& g);

} // namespace normsurf::smallsolve
