#include <bredon/closed_form.hpp>
#include <bredon/davis.hpp>
#include <bredon/error.hpp>

#include <doctest.h>

#include "support/oracles.hpp"

using namespace bredon;

namespace {

constexpr long long inf = 0;

std::vector<std::string> cell_strings(const std::vector<QuotientCell>& cells) {
    std::vector<std::string> out;
    for (const auto& c : cells) {
        out.push_back(c.to_string());
    }
    return out;
}

std::vector<std::size_t> dimension_sizes(const CellsByDimension& cells) {
    std::vector<std::size_t> out;
    for (const auto& d : cells) {
        out.push_back(d.size());
    }
    return out;
}

// Relative homology of the pair (top skeleton, next skeleton down) of the
// complex of w, degree by degree.
std::map<std::size_t, FgAbGroup> relative_homology(const CoxeterMatrix& w, std::size_t n) {
    return relative_complex(davis_chain_complex(w), n).homology();
}

std::map<std::size_t, FgAbGroup> nonzero(const std::map<std::size_t, FgAbGroup>& h) {
    std::map<std::size_t, FgAbGroup> out;
    for (const auto& [d, g] : h) {
        if (!g.is_zero()) {
            out.emplace(d, g);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("cells of the infinite dihedral group") {
    const auto poset = enumerate_spherical(CoxeterMatrix::parse({{1, inf}, {inf, 1}}));
    const auto cells = build_cells(poset);
    REQUIRE(cells.size() == 2);
    CHECK(cell_strings(cells[0]) == std::vector<std::string>{"({})", "({0})", "({1})"});
    CHECK(cell_strings(cells[1]) == std::vector<std::string>{"({} < {0})", "({} < {1})"});
}

TEST_CASE("cells of a single generator") {
    const auto cells = build_cells(enumerate_spherical(CoxeterMatrix::parse({{1}})));
    REQUIRE(cells.size() == 2);
    CHECK(cell_strings(cells[0]) == std::vector<std::string>{"({})", "({0})"});
    CHECK(cell_strings(cells[1]) == std::vector<std::string>{"({} < {0})"});
}

TEST_CASE("cells of the (2,4,4) triangle group") {
    const auto w = CoxeterMatrix::parse({{1, 2, 4}, {2, 1, 4}, {4, 4, 1}});
    const auto cells = build_cells(enumerate_spherical(w));
    CHECK(dimension_sizes(cells) == std::vector<std::size_t>{7, 12, 6});
    const auto cx = davis_chain_complex(w);
    REQUIRE(cx.degree_count() == 3);
    CHECK(cx.degree(2).blocks.size() == 18);
    for (std::size_t cell = 0; cell < 6; ++cell) {
        std::size_t faces = 0;
        for (const auto& b : cx.degree(2).blocks) {
            faces += b.cell == cell ? 1 : 0;
        }
        CHECK(faces == 3);
    }
}

TEST_CASE("cell counts match brute-force chain enumeration") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const auto w = oracle::random_coxeter_matrix(rng, 1 + trial % 4, {2, 3, 4, 5, 6, 0});
        CHECK(dimension_sizes(build_cells(enumerate_spherical(w))) ==
              oracle::chain_counts(oracle::spherical_subsets(w)));
    }
}

TEST_CASE("max_top_rank truncates chains") {
    const auto poset = enumerate_spherical(CoxeterMatrix::parse({{1, 3, 2}, {3, 1, 3}, {2, 3, 1}}));
    const auto cells = build_cells(poset, 1);
    for (const auto& dim : cells) {
        for (const auto& c : dim) {
            CHECK(c.top().size() <= 1);
        }
    }
    CHECK(dimension_sizes(cells) == std::vector<std::size_t>{4, 3});
}

TEST_CASE("rank-one differential: identity to the free vertex, induction to the reflection vertex") {
    const auto cx = davis_chain_complex(CoxeterMatrix::parse({{1}}));
    // Degree 0 coordinates: ({}) -> 0, ({0}) -> rho1, rho2.
    CHECK(cx.differential(1).to_dense() == std::vector<std::vector<Integer>>{{1}, {-1}, {-1}});
    const auto& blocks = cx.degree(1).blocks;
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].deleted == 1);
    CHECK(blocks[0].sign == -1);
    CHECK(blocks[1].deleted == 2);
    CHECK(blocks[1].sign == 1);
    CHECK(cx.differential(0).rows() == 0);
}

TEST_CASE("boundary maps compose to zero on random systems") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const auto w = oracle::random_coxeter_matrix(rng, 1 + trial % 4, {2, 3, 4, 5, 6, 0});
        CHECK(davis_chain_complex(w).boundary_squares_to_zero());
    }
}

TEST_CASE("relative complexes of low rank cells") {
    const auto c2 = CoxeterMatrix::parse({{1}});
    const auto zero = relative_complex(davis_chain_complex(c2), 0);
    REQUIRE(zero.degree_count() == 1);
    CHECK(zero.degree(0).cells.size() == 1);
    CHECK(zero.homology(0) == FgAbGroup(1));

    const auto one = relative_complex(davis_chain_complex(c2), 1);
    CHECK(cell_strings(one.degree(0).cells) == std::vector<std::string>{"({0})"});
    CHECK(cell_strings(one.degree(1).cells) == std::vector<std::string>{"({} < {0})"});
    CHECK(one.homology(0) == FgAbGroup(1));
    CHECK(one.homology(1).is_zero());

    const auto expect = [](long long m, std::size_t h0, std::size_t h1) {
        CAPTURE(m);
        const auto w = CoxeterMatrix::parse({{1, m}, {m, 1}});
        const auto h = relative_homology(w, 2);
        CHECK(h.at(0) == FgAbGroup(h0));
        CHECK(h.at(1) == FgAbGroup(h1));
        CHECK(h.at(2).is_zero());
    };
    expect(2, 1, 0);
    expect(3, 1, 1);
    expect(4, 2, 0);
    expect(5, 2, 1);
    expect(6, 3, 0);
    expect(7, 3, 1);
}

TEST_CASE("relative dihedral homology matches the closed formulas") {
    for (int m = 2; m <= 12; ++m) {
        CAPTURE(m);
        const auto w = CoxeterMatrix::parse({{1, m}, {m, 1}});
        const auto formula = m % 2 == 0 ? even_dihedral_cell_formula(m) : odd_dihedral_cell_formula(m);
        const auto h = relative_homology(w, 2);
        for (std::size_t d = 0; d < 3; ++d) {
            CHECK(h.at(d) == formula.at(d));
        }
    }
}

TEST_CASE("edge induction matrix of an even dihedral cell has rank 3") {
    for (int n = 2; n <= 10; n += 2) {
        const auto w = CoxeterMatrix::parse({{1, n}, {n, 1}});
        const SpecialSubgroup l(w, w.all());
        const SpecialSubgroup a(w, GeneratorSubset{0});
        const SpecialSubgroup b(w, GeneratorSubset{1});
        const auto ia = induction_matrix(a, l);
        const auto ib = induction_matrix(b, l);
        IntegerMatrix d(ia.rows(), 4);
        for (std::size_t r = 0; r < ia.rows(); ++r) {
            for (std::size_t c = 0; c < 2; ++c) {
                d.add(r, c, ia(r, c));
                d.add(r, c + 2, ib(r, c));
            }
        }
        CHECK(smith_normal_form(d).rank == 3);
    }
}

TEST_CASE("skeleton pairs split over the spherical subsets of top rank") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 30; ++trial) {
        const auto w = oracle::random_coxeter_matrix(rng, 2 + trial % 3, {2, 3, 4, 5, 6, 0});
        const auto poset = enumerate_spherical(w);
        const auto full = davis_chain_complex(w);
        for (std::size_t n = 0; n <= poset.max_rank(); ++n) {
            std::map<std::size_t, FgAbGroup> sum;
            for (auto t : poset.of_rank(n)) {
                for (const auto& [d, g] : relative_homology(w.restricted(t), n)) {
                    auto [it, inserted] = sum.try_emplace(d, g);
                    if (!inserted) {
                        it->second = fgab_direct_sum(it->second, g);
                    }
                }
            }
            CHECK(nonzero(relative_complex(full, n).homology()) == nonzero(sum));
        }
    }
}

TEST_CASE("finite groups have the representation ring in degree zero") {
    const std::vector<std::vector<std::vector<long long>>> examples = {
        {{1, 3}, {3, 1}},
        {{1, 5, 2}, {5, 1, 3}, {2, 3, 1}},
        {{1, 4, 2}, {4, 1, 3}, {2, 3, 1}},
        {{1, 2, 2}, {2, 1, 2}, {2, 2, 1}},
        {{1, 3, 2, 2}, {3, 1, 3, 3}, {2, 3, 1, 2}, {2, 3, 2, 1}},
    };
    for (const auto& raw : examples) {
        const auto w = CoxeterMatrix::parse(raw);
        const auto h = davis_chain_complex(w).homology();
        CHECK(h.at(0) == FgAbGroup(oracle::matrix_group_class_count(w, w.all())));
        for (const auto& [d, g] : h) {
            if (d > 0) {
                CHECK(g.is_zero());
            }
        }
    }
}

TEST_CASE("subgroup tables respect the order cap") {
    const auto w = CoxeterMatrix::parse({{1, 5, 2}, {5, 1, 3}, {2, 3, 1}});
    CHECK_THROWS_AS(davis_chain_complex(w, 100), ResourceError);
}
