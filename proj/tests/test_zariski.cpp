#include <doctest.h>

#include <algorithm>
#include <random>

#include "normsurf/zariski.hpp"

using namespace normsurf;

namespace {

IntersectionMatrix mat(std::vector<std::vector<long long>> rows) {
    std::vector<std::vector<Rational>> r;
    for (auto& row : rows) {
        std::vector<Rational> out;
        for (long long v : row) out.emplace_back(v);
        r.push_back(std::move(out));
    }
    return IntersectionMatrix(std::move(r));
}

std::vector<std::string> names(int n) {
    std::vector<std::string> ids;
    for (int i = 0; i < n; ++i) ids.push_back("C" + std::to_string(i + 1));
    return ids;
}

// Exhaustive oracle: solve (D - N).C_i = 0 on every negative definite subset,
// keep the candidates satisfying all invariants, and demand that they agree.
Vec oracle_negative_part(const DivisorClass& d, const CurveLattice& lattice) {
    const int n = lattice.size();
    std::vector<Vec> found;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) idx.push_back(i);
        std::vector<std::vector<Rational>> rows(idx.size(),
                                                std::vector<Rational>(idx.size()));
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < idx.size(); ++j)
                rows[i][j] = lattice.form().at(idx[i], idx[j]);
        IntersectionMatrix sub(std::move(rows));
        if (!is_negative_definite(sub)) continue;
        Vec ncoeff(n);
        if (!idx.empty()) {
            Vec rhs;
            for (int i : idx) rhs.push_back(d.pairings()[i]);
            Vec sol = solve(sub, rhs);
            bool nonneg = true;
            for (const auto& s : sol)
                if (s.sign() < 0) nonneg = false;
            if (!nonneg) continue;
            for (std::size_t k = 0; k < idx.size(); ++k) ncoeff[idx[k]] = sol[k];
        }
        Vec npair = mat_vec(lattice.form(), ncoeff);
        bool nef = true;
        for (int i = 0; i < n; ++i)
            if (d.pairings()[i] - npair[i] < Rational(0)) nef = false;
        if (!nef) continue;
        found.push_back(ncoeff);
    }
    REQUIRE(!found.empty());
    for (const auto& f : found) REQUIRE(f == found.front());
    return found.front();
}

} // namespace

TEST_CASE("already nef divisors decompose trivially") {
    CurveLattice lattice(names(2), mat({{-2, 1}, {1, -2}}));
    DivisorClass d = DivisorClass::from_pairings({Rational(1), Rational(0)}, Rational(5));
    ZariskiDecomposition z = zariski_decompose(d, lattice);
    for (const auto& c : z.n_coeffs) CHECK(c.is_zero());
    CHECK(z.support.empty());
    CHECK(z.p_pairings == d.pairings());
    CHECK(*z.p2 == Rational(5));
    CHECK(verify_decomposition(d, z, lattice));
}

TEST_CASE("a negative curve is its own negative part") {
    CurveLattice lattice(names(1), mat({{-3}}));
    DivisorClass d = DivisorClass::from_coeffs(lattice, {Rational(1)});
    ZariskiDecomposition z = zariski_decompose(d, lattice);
    CHECK(z.n_coeffs == Vec{Rational(1)});
    CHECK(z.p_pairings == Vec{Rational(0)});
    CHECK(*z.p2 == Rational(0));
    CHECK(z.support == std::vector<int>{0});
    CHECK(verify_decomposition(d, z, lattice));
}

TEST_CASE("two-curve worked example") {
    // D.C1 = -1, D.C2 = 1 on the A_2 lattice: only C1 enters the support,
    // N = (1/2) C1, and P pairs to (0, 1/2).
    CurveLattice lattice(names(2), mat({{-2, 1}, {1, -2}}));
    DivisorClass d = DivisorClass::from_pairings({Rational(-1), Rational(1)});
    ZariskiDecomposition z = zariski_decompose(d, lattice);
    CHECK(z.n_coeffs == Vec{Rational(1, 2), Rational(0)});
    CHECK(z.p_pairings == Vec{Rational(0), Rational(1, 2)});
    CHECK(z.support == std::vector<int>{0});
    CHECK(verify_decomposition(d, z, lattice));

    // the same pairings forced onto both curves give P.N != 0; the checker
    // rejects that pair
    ZariskiDecomposition wrong;
    wrong.n_coeffs = {Rational(2, 3), Rational(1, 3)};
    wrong.p_pairings = {Rational(0), Rational(1)};
    wrong.support = {0, 1};
    CHECK_FALSE(verify_decomposition(d, wrong, lattice));
}

TEST_CASE("checker rejects a non-nef P") {
    CurveLattice lattice(names(1), mat({{-2}}));
    DivisorClass d = DivisorClass::from_pairings({Rational(-1)});
    ZariskiDecomposition claim;
    claim.n_coeffs = {Rational(0)};
    claim.p_pairings = {Rational(-1)};
    CHECK_FALSE(verify_decomposition(d, claim, lattice));
}

TEST_CASE("no decomposition when the needed support is not negative definite") {
    CurveLattice lattice({"C"}, mat({{1}}));
    DivisorClass d = DivisorClass::from_pairings({Rational(-1)});
    try {
        zariski_decompose(d, lattice);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotNegativeDefinite);
    }
}

TEST_CASE("coefficient-vector divisors work through the same pipeline") {
    CurveLattice lattice(names(2), mat({{-2, 1}, {1, -2}}));
    DivisorClass d = DivisorClass::from_coeffs(lattice, {Rational(1), Rational(0)});
    CHECK(d.pairings() == Vec{Rational(-2), Rational(1)});
    CHECK(*d.d2() == Rational(-2));
    ZariskiDecomposition z = zariski_decompose(d, lattice);
    CHECK(z.n_coeffs == Vec{Rational(1), Rational(0)});
    CHECK(verify_decomposition(d, z, lattice));
}

TEST_CASE("randomized lattices match the exhaustive-subset oracle") {
    std::mt19937_64 rng(0xC0FFEE);
    std::uniform_int_distribution<int> nd(1, 5), wd(2, 6), pair_num(-6, 6), pair_den(1, 3);
    std::uniform_int_distribution<int> extra(0, 2);
    int done = 0;
    while (done < 120) {
        int n = nd(rng);
        std::vector<std::vector<long long>> rows(n, std::vector<long long>(n, 0));
        for (int i = 0; i < n; ++i) rows[i][i] = -wd(rng);
        for (int i = 1; i < n; ++i) {
            std::uniform_int_distribution<int> parent(0, i - 1);
            int p = parent(rng);
            rows[p][i] = rows[i][p] = 1;
        }
        if (n > 1 && extra(rng) == 0) {
            std::uniform_int_distribution<int> v(0, n - 1);
            int a = v(rng), b = v(rng);
            if (a != b) {
                rows[a][b] += 1;
                rows[b][a] += 1;
            }
        }
        IntersectionMatrix m = mat(rows);
        if (!is_negative_definite(m)) continue;
        CurveLattice lattice(names(n), m);
        Vec pairings;
        for (int i = 0; i < n; ++i) pairings.emplace_back(pair_num(rng), pair_den(rng));
        DivisorClass d = DivisorClass::from_pairings(pairings, Rational(25));
        std::vector<std::vector<int>> trace;
        ZariskiDecomposition z = zariski_decompose(d, lattice, &trace);

        // the support set only grows and settles within n rounds
        CHECK(trace.size() <= static_cast<std::size_t>(n));
        for (std::size_t r = 1; r < trace.size(); ++r) {
            CHECK(trace[r].size() > trace[r - 1].size());
            CHECK(std::includes(trace[r].begin(), trace[r].end(), trace[r - 1].begin(),
                                trace[r - 1].end()));
        }
        CHECK(verify_decomposition(d, z, lattice));
        CHECK(z.n_coeffs == oracle_negative_part(d, lattice));
        // P^2 = D^2 - N^2 >= D^2
        Rational n2 = pairing(z.n_coeffs, z.n_coeffs, lattice.form());
        CHECK(*z.p2 == Rational(25) - n2);
        CHECK(*z.p2 >= Rational(25));
        // Lemma 2 analogue: P.C > 0 forces C out of the support
        for (int i = 0; i < n; ++i)
            if (z.p_pairings[i].sign() > 0)
                CHECK(std::find(z.support.begin(), z.support.end(), i) == z.support.end());
        ++done;
    }
}
