#include <doctest.h>

#include <random>

#include "normsurf/cycles.hpp"

using namespace normsurf;

namespace {

Vec rat(std::vector<long long> nums, long long den = 1) {
    Vec v;
    for (long long n : nums) v.emplace_back(n, den);
    return v;
}

// Brute-force oracle: componentwise minimum over every nonzero effective
// integral cycle with coefficients <= cap that pairs non-positively with all
// curves. Independent of the production algorithm.
std::vector<long long> minimal_antinef_cycle(const DualGraph& g, int cap) {
    const int n = g.size();
    const IntersectionMatrix& m = g.intersection_matrix();
    std::vector<long long> c(n, 0), best;
    auto antinef = [&]() {
        for (int i = 0; i < n; ++i) {
            Rational s;
            for (int j = 0; j < n; ++j) s += m.at(i, j) * Rational(c[j]);
            if (s.sign() > 0) return false;
        }
        return true;
    };
    for (;;) {
        int pos = n - 1;
        while (pos >= 0 && c[pos] == cap) {
            c[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++c[pos];
        if (!antinef()) continue;
        if (best.empty()) {
            best = c;
        } else {
            for (int i = 0; i < n; ++i) best[i] = std::min(best[i], c[i]);
        }
    }
    REQUIRE(!best.empty());
    // the componentwise minimum of anti-nef cycles is anti-nef; re-check it
    std::vector<long long> saved = c;
    c = best;
    REQUIRE(antinef());
    return best;
}

// Laufer with randomized choice among the violating curves; the fundamental
// cycle does not depend on the tie-break.
Vec randomized_laufer(const DualGraph& g, std::mt19937_64& rng) {
    const int n = g.size();
    const IntersectionMatrix& m = g.intersection_matrix();
    std::vector<long long> z(n, 1);
    for (;;) {
        std::vector<int> violating;
        for (int i = 0; i < n; ++i) {
            Rational s;
            for (int j = 0; j < n; ++j) s += m.at(i, j) * Rational(z[j]);
            if (s.sign() > 0) violating.push_back(i);
        }
        if (violating.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, violating.size() - 1);
        ++z[violating[pick(rng)]];
    }
    Vec out;
    for (long long v : z) out.emplace_back(v);
    return out;
}

} // namespace

TEST_CASE("fundamental cycle of chains is reduced") {
    for (const auto& weights :
         {std::vector<int>{2}, {5}, {2, 2, 2}, {3, 2, 4}, {6, 6, 6, 6, 6}}) {
        DualGraph g = make_an(weights);
        Cycle z = fundamental_cycle(g);
        for (const auto& c : z.coeffs) CHECK(c == Rational(1));
    }
}

TEST_CASE("fundamental cycle of D_n with heavy fork vertex is reduced") {
    // C_{n-2}^2 <= -3: Z = sum of all curves
    DualGraph g = make_dn({2, 2, 3}, 2, 2);
    Cycle z = fundamental_cycle(g);
    for (const auto& c : z.coeffs) CHECK(c == Rational(1));
}

TEST_CASE("fundamental cycle of a D_n-ii instance doubles the tail") {
    // chain (2,3,2,2) with j = 2: Z = C1 + C2 + 2 C3 + 2 C4 + C1' + C1''
    DualGraph g = make_dn({2, 3, 2, 2}, 2, 2);
    Cycle z = fundamental_cycle(g);
    CHECK(z.coeffs == rat({1, 1, 2, 2, 1, 1}));
}

TEST_CASE("fundamental cycle of E_8") {
    // all-(-2) star with arms (4, 2, 1); every coefficient is at least 2
    DualGraph e8 = make_en({8, 2});
    Cycle z = fundamental_cycle(e8);
    CHECK(z.coeffs[e8.index_of("C0")] == Rational(6));
    CHECK(z.coeffs[e8.index_of("C1")] == Rational(2));
    CHECK(z.coeffs[e8.index_of("C2")] == Rational(3));
    CHECK(z.coeffs[e8.index_of("C3")] == Rational(4));
    CHECK(z.coeffs[e8.index_of("C4")] == Rational(5));
    CHECK(z.coeffs[e8.index_of("C1'")] == Rational(2));
    CHECK(z.coeffs[e8.index_of("C2'")] == Rational(4));
    CHECK(z.coeffs[e8.index_of("C1''")] == Rational(3));
    for (const auto& c : z.coeffs) CHECK(c >= Rational(2));
}

TEST_CASE("fundamental cycle needs a contractible graph") {
    DualGraph bad = parse_graph(
        R"({"vertices":[{"id":"A","weight":2},{"id":"B","weight":2}],
            "edges":[["A","B"],["A","B"]]})");
    CHECK_THROWS_AS(fundamental_cycle(bad), Error);
}

TEST_CASE("Laufer equals the brute-force minimal anti-nef cycle") {
    std::vector<DualGraph> graphs;
    graphs.push_back(make_an({2, 2, 2, 2}));
    graphs.push_back(make_an({2, 3, 2}));
    graphs.push_back(make_dn({2, 2}, 2, 2));
    graphs.push_back(make_dn({2, 2, 2}, 2, 2));
    graphs.push_back(make_dn({3, 2}, 2, 2));
    graphs.push_back(make_star3(2, {2}, {2, 2}, {2}));
    graphs.push_back(make_star3(3, {3}, {2, 2}, {2}));
    graphs.push_back(make_star3(2, {3}, {3}, {3}));
    for (const auto& g : graphs) {
        Cycle z = fundamental_cycle(g);
        std::vector<long long> oracle = minimal_antinef_cycle(g, 6);
        REQUIRE(z.coeffs.size() == oracle.size());
        for (std::size_t i = 0; i < oracle.size(); ++i)
            CHECK(z.coeffs[i] == Rational(oracle[i]));
    }
}

TEST_CASE("Laufer output does not depend on the tie-break") {
    std::mt19937_64 rng(2024);
    std::vector<DualGraph> graphs;
    graphs.push_back(make_en({8, 2}));
    graphs.push_back(make_en({12, 2}));
    graphs.push_back(make_dn({2, 3, 2, 2}, 2, 2));
    graphs.push_back(make_an({2, 2, 3, 2}));
    for (const auto& g : graphs) {
        Cycle z = fundamental_cycle(g);
        for (int trial = 0; trial < 25; ++trial) CHECK(randomized_laufer(g, rng) == z.coeffs);
    }
}

TEST_CASE("discrepancy of ADE graphs vanishes") {
    CHECK(discrepancy(make_an({2, 2, 2})).is_zero());
    CHECK(discrepancy(make_dn({2, 2, 2}, 2, 2)).is_zero());
    CHECK(discrepancy(make_en({8, 2})).is_zero()); // E_8
    CHECK(discrepancy(make_en({4, 2})).is_zero()); // E_7
    CHECK(discrepancy(make_en({1, 2})).is_zero()); // E_6
}

TEST_CASE("discrepancy closed forms") {
    for (int w = 3; w <= 9; ++w) {
        Cycle a = discrepancy(make_an({w}));
        CHECK(a.coeffs == Vec{Rational(w - 2, w)}); // 1 - 2/w
    }
    CHECK(discrepancy(make_an({3, 3})).coeffs == rat({1, 1}, 2));
}

TEST_CASE("discrepancy with genus shifts the adjunction term") {
    DualGraph elliptic = parse_graph(R"({"vertices":[{"id":"E","weight":2,"genus":1}]})");
    CHECK(discrepancy(elliptic).coeffs == Vec{Rational(1)});
}

TEST_CASE("discrepancy is effective on random families") {
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<int> w(2, 6), len(1, 6);
    for (int trial = 0; trial < 150; ++trial) {
        std::vector<int> weights;
        int n = len(rng);
        for (int i = 0; i < n; ++i) weights.push_back(w(rng));
        Cycle a = discrepancy(make_an(weights));
        CHECK(a.is_effective());
        for (const auto& c : a.coeffs) CHECK(c < Rational(1));
    }
}

TEST_CASE("classification of the named examples") {
    SingularityClass smooth = classify_smooth();
    CHECK(smooth.kind == SingularityKind::Smooth);
    CHECK(smooth.delta_x == Rational(4));
    CHECK(smooth.discrepancy.coeffs.empty());

    SingularityClass a1 = classify(make_an({2}));
    CHECK(a1.kind == SingularityKind::RationalDoublePoint);
    CHECK(a1.delta_x == Rational(2));

    for (int w = 3; w <= 9; ++w) {
        SingularityClass s = classify(make_an({w}));
        CHECK(s.kind == SingularityKind::LogTerminal);
        CHECK(s.delta_x == Rational(4, w));
    }

    CHECK(delta_x(make_an({3, 3})) == Rational(1));
}

TEST_CASE("non log terminal configurations") {
    // multiple edge
    DualGraph tacnode = parse_graph(
        R"({"vertices":[{"id":"A","weight":2},{"id":"B","weight":3}],
            "edges":[["A","B"],["A","B"]]})");
    CHECK(classify(tacnode).kind == SingularityKind::NotLogTerminal);
    CHECK(classify(tacnode).delta_x == Rational(0));

    // cycle of rational curves: discrepancy coefficients are all 1
    DualGraph triangle = parse_graph(
        R"({"vertices":[{"id":"A","weight":3},{"id":"B","weight":3},{"id":"C","weight":3}],
            "edges":[["A","B"],["B","C"],["A","C"]]})");
    SingularityClass cusp = classify(triangle);
    CHECK(cusp.kind == SingularityKind::NotLogTerminal);
    for (const auto& c : cusp.discrepancy.coeffs) CHECK(c == Rational(1));

    // positive genus
    DualGraph elliptic = parse_graph(R"({"vertices":[{"id":"E","weight":2,"genus":1}]})");
    CHECK(classify(elliptic).kind == SingularityKind::NotLogTerminal);

    // tree with a discrepancy coefficient reaching 1
    DualGraph cone = make_star3(2, {3}, {3}, {3});
    SingularityClass s = classify(cone);
    CHECK(s.kind == SingularityKind::NotLogTerminal);
    CHECK(s.discrepancy.coeffs[cone.index_of("C0")] == Rational(1));
}

TEST_CASE("contractible graphs with a cycle always reach a coefficient >= 1") {
    // The reduced cycle D0 on any closed loop of rational curves satisfies
    // D0.C_i = C_i^2 + 2 there, which pins the discrepancy at 1 on plain
    // loops and pushes it above 1 once anything else is attached; so the
    // conservative "cycles are never log terminal" rule never overrides a
    // sub-1 coefficient vector in practice.
    std::mt19937_64 rng(4096);
    std::uniform_int_distribution<int> nd(3, 7), wd(2, 7), extra(0, 2);
    int seen = 0;
    while (seen < 80) {
        int n = nd(rng);
        std::vector<Vertex> vs;
        for (int i = 0; i < n; ++i) vs.push_back({"V" + std::to_string(i), wd(rng), 0});
        std::vector<std::pair<int, int>> edges;
        int loop = 3 + static_cast<int>(rng() % static_cast<unsigned>(n - 2));
        for (int i = 0; i < loop; ++i) edges.emplace_back(i, (i + 1) % loop);
        for (int i = loop; i < n; ++i) {
            std::uniform_int_distribution<int> parent(0, i - 1);
            edges.emplace_back(parent(rng), i);
        }
        DualGraph g(vs, edges);
        if (!is_negative_definite(g.intersection_matrix())) continue;
        ++seen;
        Cycle a = discrepancy(g);
        bool reaches_one = false;
        for (const auto& c : a.coeffs)
            if (c >= Rational(1)) reaches_one = true;
        CHECK(reaches_one);
        CHECK(classify(g).kind == SingularityKind::NotLogTerminal);
    }
}

TEST_CASE("classify requires a contractible configuration") {
    DualGraph bad = parse_graph(
        R"({"vertices":[{"id":"A","weight":2},{"id":"B","weight":2}],
            "edges":[["A","B"],["A","B"]]})");
    try {
        classify(bad);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotNegativeDefinite);
    }
}

TEST_CASE("A_n pairs Delta - Z to (1, 0, ..., 0, 1)") {
    std::mt19937_64 rng(1123);
    std::uniform_int_distribution<int> w(2, 9), len(2, 8);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<int> weights;
        int n = len(rng);
        for (int i = 0; i < n; ++i) weights.push_back(w(rng));
        DualGraph g = make_an(weights);
        Cycle a = discrepancy(g);
        Cycle z = fundamental_cycle(g);
        Vec diff(n);
        for (int i = 0; i < n; ++i) diff[i] = a.coeffs[i] - z.coeffs[i];
        Vec t = mat_vec(g.intersection_matrix(), diff);
        CHECK(t.front() == Rational(1));
        CHECK(t.back() == Rational(1));
        for (int i = 1; i + 1 < n; ++i) CHECK(t[i] == Rational(0));
    }
}

TEST_CASE("A_n law: delta_x = 2 - a_1 - a_n") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> w(2, 6), len(1, 8);
    for (int trial = 0; trial < 120; ++trial) {
        std::vector<int> weights;
        int n = len(rng);
        for (int i = 0; i < n; ++i) weights.push_back(w(rng));
        DualGraph g = make_an(weights);
        SingularityClass s = classify(g);
        if (s.kind == SingularityKind::RationalDoublePoint) {
            CHECK(s.delta_x == Rational(2));
            continue;
        }
        REQUIRE(s.kind == SingularityKind::LogTerminal);
        Rational a1 = s.discrepancy.coeffs.front();
        Rational an = s.discrepancy.coeffs.back();
        CHECK(s.delta_x == Rational(2) - a1 - an);
    }
}

TEST_CASE("D_n-ii laws: delta_x = 2 - a_1, flat tail, Lemma 6 chain") {
    for (int n = 4; n <= 8; ++n) {
        for (int j = 1; j <= n - 2; ++j) {
            for (int wj = 3; wj <= 6; ++wj) {
                std::vector<int> chain(n - 2, 2);
                chain[j - 1] = wj;
                DualGraph g = make_dn(chain, 2, 2);
                SingularityClass s = classify(g);
                REQUIRE(s.kind == SingularityKind::LogTerminal);
                const Vec& a = s.discrepancy.coeffs;
                if (j >= 2) CHECK(s.delta_x == Rational(2) - a[0]);
                // flatness a_j = ... = a_{n-2}
                for (int i = j; i + 1 <= n - 2; ++i) CHECK(a[i - 1] == a[i]);
                // Lemma 6: a_1 < ... < a_{j-1} <= 2 a_j - 1
                for (int i = 1; i + 1 <= j - 1; ++i) CHECK(a[i - 1] < a[i]);
                if (j >= 2)
                    CHECK(a[j - 2] <= Rational(2) * a[j - 1] - Rational(1));
            }
        }
    }
}

TEST_CASE("E-type mu=2 pairs Z - Delta against the published vectors") {
    struct Golden {
        int type;
        std::vector<std::pair<const char*, Rational>> entries;
    };
    std::vector<Golden> golds = {
        {2,
         {{"C0", Rational(4, 3)},
          {"C1", Rational(7, 9)},
          {"C2", Rational(14, 9)},
          {"C1'", Rational(4, 9)},
          {"C1''", Rational(2, 3)}}},
        {5,
         {{"C0", Rational(6, 5)},
          {"C1", Rational(4, 5)},
          {"C2", Rational(8, 5)},
          {"C3", Rational(7, 5)},
          {"C1'", Rational(2, 5)},
          {"C1''", Rational(3, 5)}}},
        {9,
         {{"C0", Rational(12, 11)},
          {"C1", Rational(9, 11)},
          {"C2", Rational(18, 11)},
          {"C3", Rational(16, 11)},
          {"C4", Rational(14, 11)},
          {"C1'", Rational(4, 11)},
          {"C1''", Rational(6, 11)}}},
        {12,
         {{"C0", Rational(15, 7)},
          {"C1", Rational(3, 7)},
          {"C2", Rational(9, 7)},
          {"C1'", Rational(5, 7)},
          {"C2'", Rational(10, 7)},
          {"C1''", Rational(11, 7)}}},
    };
    for (const auto& gold : golds) {
        DualGraph g = make_en({gold.type, 2});
        SingularityClass s = classify(g);
        for (const auto& [id, value] : gold.entries) {
            int i = g.index_of(id);
            CHECK(s.fundamental_cycle.coeffs[i] - s.discrepancy.coeffs[i] == value);
        }
    }
}

TEST_CASE("Proposition 1 on a small family sample") {
    std::mt19937_64 rng(808);
    std::uniform_int_distribution<int> w(2, 4), len(1, 4);
    auto check_graph = [&](const DualGraph& g) {
        if (!is_negative_definite(g.intersection_matrix())) return;
        SingularityClass s = classify(g);
        if (s.kind == SingularityKind::NotLogTerminal) return;
        bool all_two = true;
        for (const auto& v : g.vertices())
            if (v.weight != 2) all_two = false;
        CHECK(s.delta_x <= Rational(2));
        CHECK((s.delta_x == Rational(2)) == all_two);
    };
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> a, b, c;
        for (int i = 0, n = len(rng); i < n; ++i) a.push_back(w(rng));
        for (int i = 0, n = len(rng); i < n; ++i) b.push_back(w(rng));
        for (int i = 0, n = len(rng); i < n; ++i) c.push_back(w(rng));
        check_graph(make_an(a));
        check_graph(make_dn(a, b[0], c[0]));
        check_graph(make_star3(w(rng), a, b, c));
    }
}
