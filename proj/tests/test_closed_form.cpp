#include <bredon/closed_form.hpp>
#include <bredon/davis.hpp>
#include <bredon/error.hpp>

#include <doctest.h>

#include "support/oracles.hpp"

using namespace bredon;

namespace {

constexpr long long inf = 0;

CoxeterMatrix triangle(long long p, long long q, long long r) {
    return CoxeterMatrix::parse({{1, p, r}, {p, 1, q}, {r, q, 1}});
}

HomologyProfile chain_profile(const CoxeterMatrix& w) {
    HomologyProfile p;
    p.method = Method::Chain;
    for (const auto& [d, g] : davis_chain_complex(w).homology()) {
        p.groups[d] = g;
    }
    return p;
}

HomologyProfile z(std::size_t h0, std::size_t h1 = 0) {
    HomologyProfile p;
    p.groups[0] = FgAbGroup(h0);
    if (h1 > 0) {
        p.groups[1] = FgAbGroup(h1);
    }
    return p;
}

// Block-diagonal matrix of two systems with all cross entries 2.
CoxeterMatrix product(const CoxeterMatrix& a, const CoxeterMatrix& b) {
    const auto ra = a.to_raw();
    const auto rb = b.to_raw();
    const std::size_t n = ra.size() + rb.size();
    std::vector<std::vector<long long>> raw(n, std::vector<long long>(n, 2));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i < ra.size() && j < ra.size()) {
                raw[i][j] = ra[i][j];
            } else if (i >= ra.size() && j >= ra.size()) {
                raw[i][j] = rb[i - ra.size()][j - ra.size()];
            }
        }
    }
    return CoxeterMatrix::parse(raw);
}

}  // namespace

TEST_CASE("right-angled examples") {
    CHECK(right_angled_homology(CoxeterMatrix::parse({{1, inf}, {inf, 1}})).same_groups(z(3)));
    CHECK(right_angled_homology(CoxeterMatrix::parse({{1, 2, inf}, {2, 1, 2}, {inf, 2, 1}})).same_groups(z(6)));
    const auto cube = CoxeterMatrix::parse({{1, 2, 2}, {2, 1, 2}, {2, 2, 1}});
    CHECK(right_angled_homology(cube).same_groups(z(8)));
    CHECK(finite_group_homology(cube).same_groups(z(8)));
    CHECK_THROWS_AS(right_angled_homology(triangle(2, 4, 4)), PreconditionError);
}

TEST_CASE("even examples") {
    CHECK(even_homology(triangle(2, 4, 4)).same_groups(z(9)));
    const auto dd = CoxeterMatrix::parse({{1, inf, 2, 2}, {inf, 1, 2, 2}, {2, 2, 1, inf}, {2, 2, inf, 1}});
    CHECK(even_homology(dd).same_groups(z(9)));
    CHECK_THROWS_AS(even_homology(triangle(3, 3, 3)), PreconditionError);
}

TEST_CASE("even formula collapses to the subset count on right-angled input") {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        const auto w = oracle::random_coxeter_matrix(rng, 1 + trial % 5, {2, 0});
        CHECK(even_homology(w).same_groups(right_angled_homology(w)));
    }
}

TEST_CASE("relative cell formula") {
    const auto one = CoxeterMatrix::parse({{1}});
    CHECK(relative_cell_formula(one, one.all()) == FgAbGroup(1));
    const auto i24 = CoxeterMatrix::parse({{1, 4}, {4, 1}});
    CHECK(relative_cell_formula(i24, i24.all()) == FgAbGroup(2));
    const auto i24c2 = CoxeterMatrix::parse({{1, 4, 2}, {4, 1, 2}, {2, 2, 1}});
    CHECK(relative_cell_formula(i24c2, i24c2.all()) == FgAbGroup(2));
    CHECK_THROWS_AS(relative_cell_formula(triangle(3, 3, 3), GeneratorSubset{0, 1}), PreconditionError);
}

TEST_CASE("relative cell formula matches relative chain homology on even spherical subsets") {
    const std::vector<std::vector<std::vector<long long>>> examples = {
        {{1, 4}, {4, 1}},
        {{1, 6}, {6, 1}},
        {{1, 4, 2}, {4, 1, 2}, {2, 2, 1}},
        {{1, 2, 2}, {2, 1, 2}, {2, 2, 1}},
        {{1, 2, 2}, {2, 1, 6}, {2, 6, 1}},
        {{1, 6, 2, 2}, {6, 1, 2, 2}, {2, 2, 1, 2}, {2, 2, 2, 1}},
    };
    for (const auto& raw : examples) {
        const auto w = CoxeterMatrix::parse(raw);
        const auto h = relative_complex(davis_chain_complex(w), w.rank()).homology();
        CHECK(h.at(0) == relative_cell_formula(w, w.all()));
        for (const auto& [d, g] : h) {
            if (d > 0) {
                CHECK(g.is_zero());
            }
        }
    }
}

TEST_CASE("rank-2 cell formulas") {
    CHECK(odd_dihedral_cell_formula(3).same_groups(z(1, 1)));
    CHECK(odd_dihedral_cell_formula(5).same_groups(z(2, 1)));
    CHECK(even_dihedral_cell_formula(4).same_groups(z(2)));
    CHECK(even_dihedral_cell_formula(6).same_groups(z(3)));
    CHECK_THROWS_AS(odd_dihedral_cell_formula(2), PreconditionError);
    CHECK_THROWS_AS(even_dihedral_cell_formula(5), PreconditionError);
}

TEST_CASE("low-rank catalog examples") {
    CHECK(lowrank_catalog(triangle(3, 3, 3)).same_groups(z(5, 1)));
    CHECK(lowrank_catalog(triangle(3, 4, inf)).same_groups(z(6)));
    CHECK(lowrank_catalog(triangle(inf, inf, inf)).same_groups(z(4)));
    CHECK(lowrank_catalog(CoxeterMatrix::parse({{1, inf}, {inf, 1}})).same_groups(z(3)));
    CHECK(lowrank_catalog(triangle(2, 4, 4)).same_groups(z(9)));
}

TEST_CASE("closed forms agree with the chain path") {
    std::mt19937 rng(4242);
    int even = 0;
    int lowrank = 0;
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t rank = 2 + trial % 3;
        const auto w = oracle::random_coxeter_matrix(rng, rank, {2, 3, 4, 5, 6, 0});
        const auto chain = chain_profile(w);
        if (w.is_even()) {
            ++even;
            CHECK(even_homology(w).same_groups(chain));
        }
        if (w.is_right_angled()) {
            CHECK(right_angled_homology(w).same_groups(chain));
        }
        if (rank <= 3) {
            ++lowrank;
            CHECK(lowrank_catalog(w).same_groups(chain));
        }
        if (const auto closed = closed_form_homology(w)) {
            CHECK(closed->same_groups(chain));
        }
    }
    CHECK(even > 0);
    CHECK(lowrank > 0);
}

TEST_CASE("every triangle group with entries up to 6 matches the catalog") {
    const long long values[] = {2, 3, 4, 5, 6, inf};
    for (long long p : values) {
        for (long long q : values) {
            for (long long r : values) {
                const auto w = triangle(p, q, r);
                if (is_spherical(w, w.all()).spherical) {
                    continue;
                }
                CAPTURE(p);
                CAPTURE(q);
                CAPTURE(r);
                CHECK(lowrank_catalog(w).same_groups(chain_profile(w)));
            }
        }
    }
}

TEST_CASE("Kunneth product examples") {
    const auto d = z(3);
    CHECK(kunneth_product(d, d).same_groups(z(9)));
    HomologyProfile two;
    two.groups[0] = FgAbGroup(0, {2});
    const auto sq = kunneth_product(two, two);
    CHECK(sq.at(0) == FgAbGroup(0, {2}));
    CHECK(sq.at(1) == FgAbGroup(0, {2}));
    CHECK(tor(FgAbGroup(4), FgAbGroup(5)).is_zero());
    CHECK(tensor(FgAbGroup(2, {6}), FgAbGroup(1, {4})) == FgAbGroup(2, {2, 4, 4, 6}));
    CHECK(tor(FgAbGroup(0, {6}), FgAbGroup(0, {4})) == FgAbGroup(0, {2}));
}

TEST_CASE("Kunneth over factors equals the chain path on block-diagonal products") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = oracle::random_coxeter_matrix(rng, 1 + trial % 2, {2, 3, 4, 5, 6, 0});
        const auto b = oracle::random_coxeter_matrix(rng, 1 + (trial / 2) % 2, {2, 3, 4, 5, 6, 0});
        const auto ab = product(a, b);
        const auto pa = chain_profile(a);
        const auto pb = chain_profile(b);
        CHECK(kunneth_product(pa, pb).same_groups(chain_profile(ab)));
    }
    const auto dinf = CoxeterMatrix::parse({{1, inf}, {inf, 1}});
    const auto dd = product(dinf, dinf);
    const auto k = kunneth_homology(dd);
    REQUIRE(k.has_value());
    CHECK(k->method == Method::Kunneth);
    CHECK(k->same_groups(z(9)));
}

TEST_CASE("K-homology under collapse") {
    const auto even = k_homology(even_homology(triangle(2, 4, 4)), true);
    CHECK(even.decided);
    CHECK(even.k0 == FgAbGroup(9));
    CHECK(even.k1.is_zero());

    const auto odd = k_homology(lowrank_catalog(triangle(3, 3, 3)), true);
    CHECK(odd.decided);
    CHECK(odd.k0 == FgAbGroup(5));
    CHECK(odd.k1 == FgAbGroup(1));

    HomologyProfile high = z(2);
    high.groups[2] = FgAbGroup(1);
    const auto undecided = k_homology(high, true);
    CHECK_FALSE(undecided.decided);
    CHECK_FALSE(undecided.reason.empty());

    CHECK_FALSE(k_homology(z(3), false).decided);
}

TEST_CASE("class counts") {
    CHECK(dihedral_class_count(2) == 4);
    CHECK(dihedral_class_count(3) == 3);
    CHECK(dihedral_class_count(4) == 5);
    const auto h3 = CoxeterMatrix::parse({{1, 5, 2}, {5, 1, 3}, {2, 3, 1}});
    CHECK(class_count(h3, h3.all()) == 10);
    const auto a1i25 = CoxeterMatrix::parse({{1, 2, 2}, {2, 1, 5}, {2, 5, 1}});
    CHECK(class_count(a1i25, a1i25.all()) == 2 * 4);
}
