#include <bredon/error.hpp>
#include <bredon/homology.hpp>

#include <doctest.h>

#include "support/oracles.hpp"

using namespace bredon;

TEST_CASE("Smith form examples") {
    const auto row = smith_normal_form(IntegerMatrix{{1, 1, 1, 1}});
    CHECK(row.rank == 1);
    CHECK(row.diagonal == std::vector<Integer>{1});

    const auto zero = smith_normal_form(IntegerMatrix(3, 4));
    CHECK(zero.rank == 0);
    CHECK(zero.diagonal.empty());

    const auto diag = smith_normal_form(IntegerMatrix{{2, 0}, {0, 3}});
    CHECK(diag.diagonal == std::vector<Integer>{1, 6});

    const auto mixed = smith_normal_form(IntegerMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    CHECK(mixed.diagonal == std::vector<Integer>{2, 6, 12});
}

TEST_CASE("Smith form handles entries beyond machine words") {
    IntegerMatrix m(2, 2);
    const Integer big("123456789012345678901234567890");
    m.add(0, 0, big);
    m.add(1, 1, big * 2);
    const auto s = smith_normal_form(m);
    CHECK(s.diagonal == std::vector<Integer>{big, big * 2});
}

TEST_CASE("homology_at examples") {
    CHECK(homology_at(IntegerMatrix(0, 1), IntegerMatrix{{2}}) == FgAbGroup(0, {2}));
    CHECK(homology_at(IntegerMatrix{{0, 0}}, IntegerMatrix{{1}, {1}}) == FgAbGroup(1));
    CHECK(homology_at(IntegerMatrix(0, 3), IntegerMatrix(3, 0)) == FgAbGroup(3));
}

TEST_CASE("homology_at rejects inconsistent input") {
    CHECK_THROWS_AS(homology_at(IntegerMatrix(0, 2), IntegerMatrix(3, 1)), PreconditionError);
    CHECK_THROWS_AS(homology_at(IntegerMatrix{{1, 1}}, IntegerMatrix{{1}, {0}}), PreconditionError);
}

TEST_CASE("finitely generated abelian group arithmetic") {
    CHECK(fgab_direct_sum(FgAbGroup(2), FgAbGroup(3)) == FgAbGroup(5));
    const auto twos = fgab_direct_sum(FgAbGroup(0, {2}), FgAbGroup(0, {2}));
    CHECK(twos.torsion() == std::vector<Integer>{2, 2});
    const auto six = fgab_direct_sum(FgAbGroup(0, {2}), FgAbGroup(0, {3}));
    CHECK(six.torsion() == std::vector<Integer>{6});
    CHECK(fgab_equal(six, FgAbGroup(0, {6})));
    CHECK(FgAbGroup(0, {1, 1}).is_zero());
    CHECK(FgAbGroup(1, {2}).to_string() == "Z + Z/2");
    CHECK(FgAbGroup(3).to_string() == "Z^3");
    CHECK(FgAbGroup().to_string() == "0");
}

TEST_CASE("Smith diagonal products equal gcds of minors") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = oracle::random_dense(rng, 2 + trial % 4, 2 + (trial / 4) % 4, -6, 6);
        const auto s = smith_normal_form(oracle::to_sparse(a));
        Integer product = 1;
        const std::size_t limit = std::min(a.size(), a[0].size());
        for (std::size_t k = 1; k <= limit; ++k) {
            const Integer g = oracle::minor_gcd(a, k);
            if (k <= s.rank) {
                product *= s.diagonal[k - 1];
                CHECK(product == g);
            } else {
                CHECK(g == 0);
            }
        }
    }
}

TEST_CASE("Smith form agrees with dense elimination") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = oracle::random_dense(rng, 1 + trial % 7, 1 + (trial / 7) % 7, -20, 20);
        const auto s = smith_normal_form(oracle::to_sparse(a));
        const auto d = oracle::dense_smith(a);
        CHECK(s.rank == d.rank);
        std::vector<Integer> factors;
        for (const auto& v : s.diagonal) {
            if (v != 1) {
                factors.push_back(v);
            }
        }
        CHECK(factors == d.factors);
    }
}

TEST_CASE("homology_at agrees with an explicit kernel basis") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 80; ++trial) {
        // Build d_out * d_in = 0 by choosing d_in = K * X with K spanning
        // (a multiple of) part of the kernel of a random d_out.
        const std::size_t n = 3 + trial % 4;
        const std::size_t rows = 1 + trial % 2;
        auto d_out = oracle::random_dense(rng, rows, n, -3, 3);
        // Integer kernel vectors via cofactors of a rows x (rows + 1) minor.
        oracle::DenseMatrix d_in(n, std::vector<Integer>(2, 0));
        for (int col = 0; col < 2; ++col) {
            std::vector<std::size_t> pick;
            for (std::size_t c = col; pick.size() < rows + 1; c = (c + 1) % n) {
                pick.push_back(c);
            }
            for (std::size_t j = 0; j <= rows; ++j) {
                oracle::DenseMatrix minor;
                for (std::size_t r = 0; r < rows; ++r) {
                    std::vector<Integer> row;
                    for (std::size_t i = 0; i <= rows; ++i) {
                        if (i != j) {
                            row.push_back(d_out[r][pick[i]]);
                        }
                    }
                    minor.push_back(std::move(row));
                }
                const Integer scale = 1 + trial % 3;
                d_in[pick[j]][col] += (j % 2 == 0 ? scale : Integer(-scale)) * oracle::determinant(minor);
            }
        }
        const auto expected = oracle::kernel_basis_homology(d_out, d_in, n);
        CHECK(homology_at(oracle::to_sparse(d_out), oracle::to_sparse(d_in)) == expected);
    }
}
