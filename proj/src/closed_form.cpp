#include <bredon/closed_form.hpp>
#include <bredon/error.hpp>

#include <numeric>

namespace bredon {

std::string method_name(Method m) {
    switch (m) {
        case Method::Chain: return "chain";
        case Method::ClosedForm: return "closed-form";
        case Method::Kunneth: return "kunneth";
    }
    return "?";
}

FgAbGroup HomologyProfile::at(std::size_t degree) const {
    auto it = groups.find(degree);
    return it == groups.end() ? FgAbGroup{} : it->second;
}

std::optional<std::size_t> HomologyProfile::top_degree() const {
    std::optional<std::size_t> top;
    for (const auto& [d, g] : groups) {
        if (!g.is_zero()) {
            top = d;
        }
    }
    return top;
}

bool HomologyProfile::same_groups(const HomologyProfile& other) const {
    std::size_t limit = 0;
    if (!groups.empty()) {
        limit = std::max(limit, groups.rbegin()->first + 1);
    }
    if (!other.groups.empty()) {
        limit = std::max(limit, other.groups.rbegin()->first + 1);
    }
    for (std::size_t d = 0; d < limit; ++d) {
        if (at(d) != other.at(d)) {
            return false;
        }
    }
    return true;
}

namespace {

HomologyProfile degree0(std::size_t rank, std::string rule) {
    HomologyProfile p;
    p.method = Method::ClosedForm;
    p.rule = std::move(rule);
    p.groups[0] = FgAbGroup(rank);
    return p;
}

std::size_t to_size(const Integer& v) {
    if (!v.fits_ulong_p()) {
        throw ResourceError("free rank " + v.get_str() + " does not fit in a machine word");
    }
    return v.get_ui();
}

}  // namespace

std::size_t dihedral_class_count(int n) {
    if (n < 2) {
        throw PreconditionError("dihedral group D_n needs n >= 2");
    }
    return n % 2 == 0 ? static_cast<std::size_t>(n / 2 + 3) : static_cast<std::size_t>((n - 1) / 2 + 2);
}

std::size_t class_count(const CoxeterMatrix& w, GeneratorSubset t, const Integer& order_cap) {
    const FiniteTypeLabel label = classify(w, t);
    if (!label.finite()) {
        throw PreconditionError("class_count requires a spherical subset, got " + t.to_string());
    }
    std::size_t count = 1;
    for (const auto& c : label.components) {
        switch (c.type.family) {
            case CoxeterFamily::I2: count *= dihedral_class_count(c.type.m); break;
            case CoxeterFamily::A:
                if (c.type.rank == 1) {
                    count *= 2;
                    break;
                }
                [[fallthrough]];
            default: count *= conjugacy_classes(realize_group(w, c.generators, order_cap)).count(); break;
        }
    }
    return count;
}

HomologyProfile right_angled_homology(const CoxeterMatrix& w) {
    if (!w.is_right_angled()) {
        throw PreconditionError("right_angled_homology requires every m_ij in {2, inf}");
    }
    return degree0(enumerate_spherical(w).total(), "right-angled: number of spherical subsets");
}

HomologyProfile even_homology(const CoxeterMatrix& w) {
    if (!w.is_even()) {
        throw PreconditionError("even_homology requires every finite m_ij to be even");
    }
    Integer r = 0;
    for (GeneratorSubset t : enumerate_spherical(w).all()) {
        Integer product = 1;
        const auto members = t.members();
        for (std::size_t a = 0; a < members.size(); ++a) {
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                product *= w(members[a], members[b]) / 2;
            }
        }
        r += product;
    }
    return degree0(to_size(r), "even: sum over spherical T of prod m_ij/2");
}

FgAbGroup relative_cell_formula(const CoxeterMatrix& w, GeneratorSubset t) {
    if (!is_spherical(w, t).spherical) {
        throw PreconditionError("relative_cell_formula requires a spherical subset, got " + t.to_string());
    }
    Integer product = 1;
    const auto members = t.members();
    for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
            const int m = w(members[a], members[b]);
            if (m % 2 != 0) {
                throw PreconditionError("relative_cell_formula requires even m_ij on " + t.to_string());
            }
            product *= m / 2;
        }
    }
    return FgAbGroup(to_size(product));
}

HomologyProfile odd_dihedral_cell_formula(int m) {
    if (m < 3 || m % 2 == 0) {
        throw PreconditionError("odd_dihedral_cell_formula requires odd m >= 3, got " + std::to_string(m));
    }
    HomologyProfile p = degree0(static_cast<std::size_t>((m - 1) / 2), "rank-2 Coxeter cell, m odd");
    p.groups[1] = FgAbGroup(1);
    return p;
}

HomologyProfile even_dihedral_cell_formula(int m) {
    if (m < 2 || m % 2 != 0) {
        throw PreconditionError("even_dihedral_cell_formula requires even m >= 2, got " + std::to_string(m));
    }
    return degree0(static_cast<std::size_t>(m / 2), "rank-2 Coxeter cell, m even");
}

HomologyProfile finite_group_homology(const CoxeterMatrix& w, const Integer& order_cap) {
    if (!is_spherical(w, w.all()).spherical) {
        throw PreconditionError("finite_group_homology requires a finite Coxeter group");
    }
    return degree0(class_count(w, w.all(), order_cap), "finite group: number of conjugacy classes");
}

HomologyProfile lowrank_catalog(const CoxeterMatrix& w, const Integer& order_cap) {
    const std::size_t n = w.rank();
    if (n > 3) {
        throw PreconditionError("lowrank_catalog requires rank <= 3");
    }
    if (is_spherical(w, w.all()).spherical) {
        return finite_group_homology(w, order_cap);
    }
    if (n == 2) {
        return degree0(3, "infinite dihedral");
    }
    // Triangle group <a,b,c | (ab)^p, (bc)^q, (ca)^r>.
    const int entries[3] = {w(0, 1), w(1, 2), w(2, 0)};
    std::vector<int> finite;
    for (int m : entries) {
        if (!is_infinite(m)) {
            finite.push_back(m);
        }
    }
    switch (finite.size()) {
        case 0: return degree0(4, "triangle group (inf,inf,inf)");
        case 1: return degree0(dihedral_class_count(finite[0]) + 1, "triangle group (p,inf,inf)");
        case 2:
            return degree0(dihedral_class_count(finite[0]) + dihedral_class_count(finite[1]) - 2,
                           "triangle group (p,q,inf)");
        default: break;
    }
    const bool all_odd = std::all_of(finite.begin(), finite.end(), [](int m) { return m % 2 != 0; });
    std::size_t c = 0;
    for (int m : finite) {
        c += dihedral_class_count(m);
    }
    HomologyProfile p = degree0(c - (all_odd ? 4 : 5), "triangle group (p,q,r)");
    if (all_odd) {
        p.groups[1] = FgAbGroup(1);
    }
    return p;
}

// ---------------------------------------------------------------------------

namespace {

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

}  // namespace

FgAbGroup tensor(const FgAbGroup& a, const FgAbGroup& b) {
    std::vector<Integer> torsion;
    for (std::size_t i = 0; i < b.free_rank(); ++i) {
        torsion.insert(torsion.end(), a.torsion().begin(), a.torsion().end());
    }
    for (std::size_t i = 0; i < a.free_rank(); ++i) {
        torsion.insert(torsion.end(), b.torsion().begin(), b.torsion().end());
    }
    for (const auto& d : a.torsion()) {
        for (const auto& e : b.torsion()) {
            torsion.push_back(gcd(d, e));
        }
    }
    return FgAbGroup(a.free_rank() * b.free_rank(), std::move(torsion));
}

FgAbGroup tor(const FgAbGroup& a, const FgAbGroup& b) {
    std::vector<Integer> torsion;
    for (const auto& d : a.torsion()) {
        for (const auto& e : b.torsion()) {
            torsion.push_back(gcd(d, e));
        }
    }
    return FgAbGroup(0, std::move(torsion));
}

HomologyProfile kunneth_product(const HomologyProfile& g, const HomologyProfile& h) {
    HomologyProfile out;
    out.method = Method::Kunneth;
    auto accumulate = [&](std::size_t degree, const FgAbGroup& piece) {
        auto [it, inserted] = out.groups.try_emplace(degree, piece);
        if (!inserted) {
            it->second = fgab_direct_sum(it->second, piece);
        }
    };
    for (const auto& [i, gi] : g.groups) {
        for (const auto& [j, hj] : h.groups) {
            accumulate(i + j, tensor(gi, hj));
            accumulate(i + j + 1, tor(gi, hj));
        }
    }
    // Keep degree 0 present; drop vanishing higher degrees.
    for (auto it = out.groups.begin(); it != out.groups.end();) {
        if (it->first > 0 && it->second.is_zero()) {
            it = out.groups.erase(it);
        } else {
            ++it;
        }
    }
    return out;
}

std::optional<HomologyProfile> closed_form_homology(const CoxeterMatrix& w, const Integer& order_cap) {
    if (is_spherical(w, w.all()).spherical) {
        return finite_group_homology(w, order_cap);
    }
    if (w.is_right_angled()) {
        return right_angled_homology(w);
    }
    if (w.is_even()) {
        return even_homology(w);
    }
    if (w.rank() <= 3) {
        return lowrank_catalog(w, order_cap);
    }
    return std::nullopt;
}

std::optional<HomologyProfile> kunneth_homology(const CoxeterMatrix& w, const Integer& order_cap) {
    const auto factors = components(w, w.all());
    if (factors.size() < 2) {
        return std::nullopt;
    }
    std::optional<HomologyProfile> acc;
    std::string rule = "kunneth over factors";
    for (GeneratorSubset f : factors) {
        auto factor = closed_form_homology(w.restricted(f), order_cap);
        if (!factor) {
            return std::nullopt;
        }
        rule += " " + f.to_string();
        acc = acc ? kunneth_product(*acc, *factor) : *factor;
    }
    acc->method = Method::Kunneth;
    acc->rule = rule;
    return acc;
}

KHomology k_homology(const HomologyProfile& h, bool complete) {
    KHomology k;
    if (!complete) {
        k.reason = "homology above the computed degree range is unknown";
        return k;
    }
    for (const auto& [d, g] : h.groups) {
        if (d >= 2 && !g.is_zero()) {
            k.reason = "H_" + std::to_string(d) + " = " + g.to_string() +
                       " is nonzero; the Atiyah-Hirzebruch spectral sequence need not collapse";
            return k;
        }
    }
    k.decided = true;
    k.k0 = h.at(0);
    k.k1 = h.at(1);
    return k;
}

}  // namespace bredon
