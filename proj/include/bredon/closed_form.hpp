#pragma once

#include <bredon/coxeter.hpp>
#include <bredon/group.hpp>
#include <bredon/homology.hpp>

#include <map>
#include <optional>
#include <string>

namespace bredon {

enum class Method { Chain, ClosedForm, Kunneth };

std::string method_name(Method m);

/// Bredon homology H_i(W; R) by degree; absent degrees are zero.
struct HomologyProfile {
    std::map<std::size_t, FgAbGroup> groups;
    Method method = Method::Chain;
    /// Which formula produced the profile (closed forms only).
    std::string rule;

    FgAbGroup at(std::size_t degree) const;
    /// Highest degree with a nonzero group, or nullopt if all vanish.
    std::optional<std::size_t> top_degree() const;
    /// Degree-by-degree equality, ignoring the method tag.
    bool same_groups(const HomologyProfile& other) const;
};

/// c(D_n): n/2 + 3 for even n, (n-1)/2 + 2 for odd n.
std::size_t dihedral_class_count(int n);

/// Number of conjugacy classes of W_T. A1 and I2(m) components use the
/// closed counts; other components are realized (subject to order_cap).
std::size_t class_count(const CoxeterMatrix& w, GeneratorSubset t, const Integer& order_cap = kDefaultOrderCap);

/// H_0 = Z^s with s the number of spherical subsets (including the empty one).
HomologyProfile right_angled_homology(const CoxeterMatrix& w);

/// H_0 = Z^r, r = sum over spherical T of prod_{i<j in T} m_ij / 2.
HomologyProfile even_homology(const CoxeterMatrix& w);

/// H_0 of the Coxeter-cell pair of an even spherical W_T: Z^{prod m_ij/2}.
FgAbGroup relative_cell_formula(const CoxeterMatrix& w, GeneratorSubset t);

/// Relative homology of the rank-2 cell of I2(m), m odd: H_0 = Z^{(m-1)/2}, H_1 = Z.
HomologyProfile odd_dihedral_cell_formula(int m);

/// Relative homology of the rank-2 cell of I2(m), m even: H_0 = Z^{m/2}.
HomologyProfile even_dihedral_cell_formula(int m);

/// Finite W: a point is a model, so H_0 = Z^{c(W)}.
HomologyProfile finite_group_homology(const CoxeterMatrix& w, const Integer& order_cap = kDefaultOrderCap);

/// Rank <= 3 catalog (D_inf, triangle groups), finite groups via the point model.
HomologyProfile lowrank_catalog(const CoxeterMatrix& w, const Integer& order_cap = kDefaultOrderCap);

FgAbGroup tensor(const FgAbGroup& a, const FgAbGroup& b);
FgAbGroup tor(const FgAbGroup& a, const FgAbGroup& b);

/// Split Kunneth sequence for a direct product of groups.
HomologyProfile kunneth_product(const HomologyProfile& g, const HomologyProfile& h);

/// First applicable closed form (finite, right-angled, even, low rank), or
/// nullopt when none applies.
std::optional<HomologyProfile> closed_form_homology(const CoxeterMatrix& w, const Integer& order_cap = kDefaultOrderCap);

/// Kunneth over the irreducible factors of the diagram, each factor by a
/// closed form. nullopt when W is irreducible or some factor has no closed form.
std::optional<HomologyProfile> kunneth_homology(const CoxeterMatrix& w, const Integer& order_cap = kDefaultOrderCap);

struct KHomology {
    bool decided = false;
    FgAbGroup k0;
    FgAbGroup k1;
    /// Why the verdict is undecided (empty when decided).
    std::string reason;
};

/// K_0 = H_0, K_1 = H_1 when H_i = 0 for all i >= 2; otherwise undecided.
/// `complete` says whether every degree of the profile was computed.
KHomology k_homology(const HomologyProfile& h, bool complete = true);

}  // namespace bredon
