#include "normsurf/smallsolve.hpp"

#include <numeric>

namespace normsurf::smallsolve {

namespace {

using i128 = __int128;

long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace

bool applicable(const SmallGraph& g) {
    if (g.n < 1 || g.n > kMaxVertices) return false;
    if (g.edge_count != g.n - 1) return false; // trees only
    for (int i = 0; i < g.n; ++i)
        if (g.weight[i] < 2 || g.weight[i] > kMaxWeight) return false;
    return true;
}

SmallGraph from_dual_graph(const DualGraph& g) {
    SmallGraph s;
    if (g.size() > kMaxVertices || g.edges().size() > static_cast<std::size_t>(kMaxVertices) ||
        g.has_positive_genus())
        return s; // inapplicable
    s.n = g.size();
    for (int i = 0; i < g.size(); ++i) s.weight[i] = g.vertex(i).weight;
    s.edge_count = static_cast<int>(g.edges().size());
    for (std::size_t k = 0; k < g.edges().size(); ++k)
        s.edge[k] = {static_cast<std::int8_t>(g.edges()[k].first),
                     static_cast<std::int8_t>(g.edges()[k].second)};
    return s;
}

SmallResult classify_small(const SmallGraph& g) {
    SmallResult out;
    const int n = g.n;

    // A = -M augmented with b_i = w_i - 2, so the discrepancy solves A a = b.
    long long a[kMaxVertices][kMaxVertices + 1] = {};
    for (int i = 0; i < n; ++i) {
        a[i][i] = g.weight[i];
        a[i][n] = g.weight[i] - 2;
    }
    for (int k = 0; k < g.edge_count; ++k) {
        a[g.edge[k].first][g.edge[k].second] = -1;
        a[g.edge[k].second][g.edge[k].first] = -1;
    }

    // Bareiss: pivots are ratios of consecutive leading principal minors.
    long long prev = 1;
    for (int k = 0; k < n; ++k) {
        if (a[k][k] <= 0) return out; // -M not positive definite
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j <= n; ++j) {
                i128 t = (i128)a[i][j] * a[k][k] - (i128)a[i][k] * a[k][j];
                a[i][j] = static_cast<long long>(t / prev);
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    out.contractible = true;
    const long long det = a[n - 1][n - 1]; // det(-M) > 0

    // Integer back-substitution with common denominator det (Cramer).
    long long p[kMaxVertices] = {};
    for (int i = n - 1; i >= 0; --i) {
        i128 acc = (i128)a[i][n] * det;
        for (int j = i + 1; j < n; ++j) acc -= (i128)a[i][j] * p[j];
        p[i] = static_cast<long long>(acc / a[i][i]);
    }
    for (int i = 0; i < n; ++i) out.disc[i] = p[i];
    out.disc_den = det;

    // Fundamental cycle: pairings maintained incrementally.
    int z[kMaxVertices];
    long long s[kMaxVertices];
    for (int i = 0; i < n; ++i) {
        z[i] = 1;
        s[i] = -g.weight[i];
    }
    for (int k = 0; k < g.edge_count; ++k) {
        s[g.edge[k].first] += 1;
        s[g.edge[k].second] += 1;
    }
    for (;;) {
        int hit = -1;
        for (int i = 0; i < n; ++i) {
            if (s[i] > 0) {
                hit = i;
                break;
            }
        }
        if (hit < 0) break;
        ++z[hit];
        s[hit] -= g.weight[hit];
        for (int k = 0; k < g.edge_count; ++k) {
            if (g.edge[k].first == hit) s[g.edge[k].second] += 1;
            else if (g.edge[k].second == hit) s[g.edge[k].first] += 1;
        }
    }
    for (int i = 0; i < n; ++i) out.z[i] = z[i];

    bool all_zero = true, below_one = true;
    for (int i = 0; i < n; ++i) {
        if (p[i] != 0) all_zero = false;
        if (p[i] >= det) below_one = false;
    }
    if (all_zero) {
        out.kind = SingularityKind::RationalDoublePoint;
        out.delta_num = 2;
        out.delta_den = 1;
        return out;
    }
    if (!below_one) {
        out.kind = SingularityKind::NotLogTerminal;
        out.delta_num = 0;
        out.delta_den = 1;
        return out;
    }

    // delta = -(D - Z)^2 contracted against the integer pairings
    // (D - Z).C_i = (2 - w_i) - Z.C_i.
    out.kind = SingularityKind::LogTerminal;
    i128 num = 0;
    for (int i = 0; i < n; ++i) {
        long long t = (2 - g.weight[i]) - s[i];
        num -= (i128)(p[i] - (i128)z[i] * det) * t;
    }
    // num / det with num computed over a common denominator det
    long long nn = static_cast<long long>(num);
    long long dd = det;
    long long gg = gcd_ll(nn, dd);
    if (gg > 1) {
        nn /= gg;
        dd /= gg;
    }
    out.delta_num = nn;
    out.delta_den = dd;
    return out;
}

} // namespace normsurf::smallsolve
