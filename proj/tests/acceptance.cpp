// Acceptance run: one PASS/FAIL line per criterion, with wall time against
// its budget. Exit status is nonzero if any criterion fails.

#include <bredon/closed_form.hpp>
#include <bredon/davis.hpp>

#include "support/oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace bredon;

namespace {

constexpr long long inf = 0;

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            detail << (detail.tellp() > 0 ? "; " : "") << what;
        }
    }
};

struct Criterion {
    int id;
    std::string title;
    double budget_ms;
    std::function<void(Outcome&)> body;
};

// Number of conjugacy classes of the dihedral group of order 2n.
std::size_t c_dihedral(int n) { return n % 2 == 0 ? n / 2 + 3 : (n - 1) / 2 + 2; }

CoxeterMatrix triangle(long long p, long long q, long long r) {
    return CoxeterMatrix::parse({{1, p, r}, {p, 1, q}, {r, q, 1}});
}

std::map<std::size_t, FgAbGroup> chain_homology(const CoxeterMatrix& w) { return davis_chain_complex(w).homology(); }

FgAbGroup at(const std::map<std::size_t, FgAbGroup>& h, std::size_t d) {
    auto it = h.find(d);
    return it == h.end() ? FgAbGroup{} : it->second;
}

bool vanishes_from(const std::map<std::size_t, FgAbGroup>& h, std::size_t first) {
    for (const auto& [d, g] : h) {
        if (d >= first && !g.is_zero()) {
            return false;
        }
    }
    return true;
}

HomologyProfile as_profile(const std::map<std::size_t, FgAbGroup>& h) {
    HomologyProfile p;
    p.method = Method::Chain;
    p.groups = h;
    return p;
}

std::string show(const std::map<std::size_t, FgAbGroup>& h) {
    std::string out;
    for (const auto& [d, g] : h) {
        out += (out.empty() ? "" : ", ") + std::string("H_") + std::to_string(d) + "=" + g.to_string();
    }
    return out;
}

void skeleton_decomposition(const CoxeterMatrix& w, Outcome& o) {
    const auto poset = enumerate_spherical(w);
    const auto full = davis_chain_complex(w);
    for (std::size_t n = 0; n <= poset.max_rank(); ++n) {
        std::map<std::size_t, FgAbGroup> sum;
        for (auto t : poset.of_rank(n)) {
            for (const auto& [d, g] : relative_complex(davis_chain_complex(w.restricted(t)), n).homology()) {
                auto [it, inserted] = sum.try_emplace(d, g);
                if (!inserted) {
                    it->second = fgab_direct_sum(it->second, g);
                }
            }
        }
        const auto rel = relative_complex(full, n).homology();
        for (std::size_t d = 0; d < std::max(rel.size(), sum.size()) + 1; ++d) {
            o.expect(at(rel, d) == at(sum, d), "skeleton pair n=" + std::to_string(n) + " degree " + std::to_string(d));
        }
    }
}

std::vector<Criterion> criteria() {
    std::vector<Criterion> list;

    list.push_back({1, "infinite dihedral: chain H_0 = Z^3, K_0 = Z^3, K_1 = 0", 1000, [](Outcome& o) {
                        const auto h = chain_homology(CoxeterMatrix::parse({{1, inf}, {inf, 1}}));
                        o.expect(at(h, 0) == FgAbGroup(3), "H_0 " + at(h, 0).to_string());
                        o.expect(vanishes_from(h, 1), "higher homology " + show(h));
                        const auto k = k_homology(as_profile(h), true);
                        o.expect(k.decided && k.k0 == FgAbGroup(3) && k.k1.is_zero(), "K-homology");
                    }});

    list.push_back({2, "triangle (3,3,3): chain H_0 = Z^5, H_1 = Z, K_1 = Z", 5000, [](Outcome& o) {
                        const auto h = chain_homology(triangle(3, 3, 3));
                        const std::size_t formula = 3 * c_dihedral(3) - 4;
                        o.expect(formula == 5, "odd triangle formula");
                        o.expect(at(h, 0) == FgAbGroup(formula), "H_0 " + at(h, 0).to_string());
                        o.expect(at(h, 1) == FgAbGroup(1), "H_1 " + at(h, 1).to_string());
                        o.expect(vanishes_from(h, 2), "H_>=2 " + show(h));
                        const auto k = k_homology(as_profile(h), true);
                        o.expect(k.decided && k.k0 == FgAbGroup(5) && k.k1 == FgAbGroup(1), "K-homology");
                    }});

    list.push_back({3, "triangle (2,4,4): chain, even formula and triangle formula give Z^9", 5000, [](Outcome& o) {
                        const auto w = triangle(2, 4, 4);
                        const auto h = chain_homology(w);
                        const std::size_t triangle_formula = c_dihedral(2) + 2 * c_dihedral(4) - 5;
                        // 1 (empty) + 3 (singletons) + 1 + 2 + 2 (pairs with m = 2, 4, 4)
                        const std::size_t even_sum = 1 + 3 + (1 + 2 + 2);
                        o.expect(triangle_formula == 9 && even_sum == 9, "formula arithmetic");
                        o.expect(at(h, 0) == FgAbGroup(9), "chain H_0 " + at(h, 0).to_string());
                        o.expect(vanishes_from(h, 1), "chain higher " + show(h));
                        o.expect(even_homology(w).same_groups(as_profile(h)), "even formula");
                        o.expect(lowrank_catalog(w).same_groups(as_profile(h)), "triangle catalog");
                    }});

    list.push_back({4, "triangle (3,4,inf): chain H_0 = Z^6", 5000, [](Outcome& o) {
                        const auto h = chain_homology(triangle(3, 4, inf));
                        o.expect(c_dihedral(3) + c_dihedral(4) - 2 == 6, "formula arithmetic");
                        o.expect(at(h, 0) == FgAbGroup(6), "H_0 " + at(h, 0).to_string());
                        o.expect(vanishes_from(h, 1), "higher " + show(h));
                    }});

    list.push_back({5, "triangle (inf,inf,inf): chain H_0 = Z^4", 1000, [](Outcome& o) {
                        const auto h = chain_homology(triangle(inf, inf, inf));
                        o.expect(at(h, 0) == FgAbGroup(4), "H_0 " + at(h, 0).to_string());
                        o.expect(vanishes_from(h, 1), "higher " + show(h));
                    }});

    list.push_back({6, "relative rank-2 cells I2(4), I2(6), I2(3), I2(5) match the cell formulas", 4000, [](Outcome& o) {
                        struct Case {
                            int m;
                            std::size_t h0;
                            std::size_t h1;
                        };
                        for (const Case c : {Case{4, 2, 0}, Case{6, 3, 0}, Case{3, 1, 1}, Case{5, 2, 1}}) {
                            const auto start = std::chrono::steady_clock::now();
                            const auto w = CoxeterMatrix::parse({{1, c.m}, {c.m, 1}});
                            const auto h = relative_complex(davis_chain_complex(w), 2).homology();
                            const auto formula =
                                c.m % 2 == 0 ? even_dihedral_cell_formula(c.m) : odd_dihedral_cell_formula(c.m);
                            const std::string tag = "I2(" + std::to_string(c.m) + ")";
                            o.expect(at(h, 0) == FgAbGroup(c.h0) && at(h, 1) == FgAbGroup(c.h1) && vanishes_from(h, 2),
                                     tag + " chain " + show(h));
                            o.expect(formula.same_groups(as_profile(h)), tag + " formula");
                            const double ms = std::chrono::duration<double, std::milli>(
                                                  std::chrono::steady_clock::now() - start)
                                                  .count();
                            o.expect(ms < 1000, tag + " over 1 s");
                        }
                    }});

    list.push_back({7, "right-angled path: chain and subset count give Z^6", 1000, [](Outcome& o) {
                        const auto w = CoxeterMatrix::parse({{1, 2, inf}, {2, 1, 2}, {inf, 2, 1}});
                        const auto h = chain_homology(w);
                        o.expect(at(h, 0) == FgAbGroup(6), "chain H_0 " + at(h, 0).to_string());
                        o.expect(vanishes_from(h, 1), "higher " + show(h));
                        o.expect(right_angled_homology(w).same_groups(as_profile(h)), "right-angled formula");
                    }});

    list.push_back({8, "D_inf x D_inf: chain, even formula and Kunneth give Z^9", 5000, [](Outcome& o) {
                        const auto w = CoxeterMatrix::parse(
                            {{1, inf, 2, 2}, {inf, 1, 2, 2}, {2, 2, 1, inf}, {2, 2, inf, 1}});
                        const auto h = chain_homology(w);
                        HomologyProfile factor;
                        factor.groups[0] = FgAbGroup(3);
                        o.expect(at(h, 0) == FgAbGroup(9), "chain H_0 " + at(h, 0).to_string());
                        o.expect(vanishes_from(h, 1), "higher " + show(h));
                        o.expect(even_homology(w).same_groups(as_profile(h)), "even formula");
                        o.expect(kunneth_product(factor, factor).same_groups(as_profile(h)), "Kunneth product");
                    }});

    list.push_back({9, "H3: chain H_0 = Z^c with c from the generic path and class enumeration", 60000, [](Outcome& o) {
                        const auto w = CoxeterMatrix::parse({{1, 5, 2}, {5, 1, 3}, {2, 3, 1}});
                        const SpecialSubgroup g(w, w.all());
                        const std::size_t c = g.table().character_count();
                        const auto model = realize_group(w, w.all());
                        o.expect(model.order() == 120, "order " + std::to_string(model.order()));
                        o.expect(conjugacy_classes(model).count() == c, "class enumeration");
                        o.expect(oracle::matrix_group_class_count(w, w.all()) == c, "matrix-group oracle");
                        const auto h = chain_homology(w);
                        o.expect(at(h, 0) == FgAbGroup(c), "chain H_0 " + at(h, 0).to_string());
                        o.expect(vanishes_from(h, 1), "higher " + show(h));
                        o.detail << (o.ok ? "c = " + std::to_string(c) : "");
                    }});

    list.push_back({10, "property suite on 30 random systems of rank <= 4", 600000, [](Outcome& o) {
                        std::mt19937 rng(1979);
                        for (int trial = 0; trial < 30; ++trial) {
                            const auto w =
                                oracle::random_coxeter_matrix(rng, 1 + trial % 4, {2, 3, 4, 5, 6, 0});
                            const std::string tag = "system " + std::to_string(trial);
                            o.expect(davis_chain_complex(w).boundary_squares_to_zero(), tag + " boundary");
                            skeleton_decomposition(w, o);
                            for (GeneratorSubset::Mask bits = 0; bits < (GeneratorSubset::Mask{1} << w.rank());
                                 ++bits) {
                                const GeneratorSubset t(bits);
                                o.expect(is_spherical(w, t).spherical == numeric_finiteness_check(w, t),
                                         tag + " classification " + t.to_string());
                            }
                            const auto poset = enumerate_spherical(w);
                            const SubgroupTables tables(w, poset);
                            for (auto l : poset.all()) {
                                const auto& gl = tables.subgroup(l);
                                o.expect(orthogonality_defect(gl.table()) < kCharacterTolerance,
                                         tag + " orthogonality " + l.to_string());
                                for (auto k : poset.all()) {
                                    if (k == l || !k.is_subset_of(l)) {
                                        continue;
                                    }
                                    const auto& gk = tables.subgroup(k);
                                    o.expect(restriction_matrix(gk.table(), gl.table(), fusion_map(gk, gl)) ==
                                                 tables.induction(k, l).transposed(),
                                             tag + " reciprocity " + k.to_string() + " < " + l.to_string());
                                }
                            }
                        }
                    }});

    list.push_back({11, "Smith form of 100 random 5x5 matrices matches gcds of minors", 30000, [](Outcome& o) {
                        std::mt19937 rng(271828);
                        for (int trial = 0; trial < 100; ++trial) {
                            const auto a = oracle::random_dense(rng, 5, 5, -9, 9);
                            const auto s = smith_normal_form(oracle::to_sparse(a));
                            Integer product = 1;
                            for (std::size_t k = 1; k <= 5; ++k) {
                                const Integer g = oracle::minor_gcd(a, k);
                                if (k <= s.rank) {
                                    product *= s.diagonal[k - 1];
                                    o.expect(product == g, "matrix " + std::to_string(trial) + " k=" + std::to_string(k));
                                } else {
                                    o.expect(g == 0, "matrix " + std::to_string(trial) + " rank");
                                }
                            }
                        }
                    }});
    return list;
}

}  // namespace

int main() {
    int failed = 0;
    for (const auto& c : criteria()) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(o);
        } catch (const std::exception& e) {
            o.expect(false, std::string("exception: ") + e.what());
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        o.expect(ms < c.budget_ms, "over time budget");
        failed += o.ok ? 0 : 1;
        std::printf("%s %2d  %-78s %9.1f ms / %.0f ms%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.title.c_str(), ms,
                    c.budget_ms, o.detail.tellp() > 0 ? "  " : "", o.detail.str().c_str());
    }
    std::printf("%d of 11 criteria passed\n", 11 - failed);
    return failed == 0 ? 0 : 1;
}
