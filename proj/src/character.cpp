#include <bredon/character.hpp>
#include <bredon/error.hpp>

#include <cmath>
#include <deque>
#include <numbers>

namespace bredon {

double orthogonality_defect(const CharacterTable& table) {
    double worst = 0.0;
    const double n = static_cast<double>(table.group_order);
    for (std::size_t i = 0; i < table.character_count(); ++i) {
        for (std::size_t k = 0; k < table.character_count(); ++k) {
            Complex sum = 0.0;
            for (std::size_t c = 0; c < table.class_count(); ++c) {
                sum += static_cast<double>(table.classes[c].size) * table(i, c) * std::conj(table(k, c));
            }
            sum /= n;
            worst = std::max(worst, std::abs(sum - Complex(i == k ? 1.0 : 0.0)));
        }
    }
    return worst;
}

void validate_table(const CharacterTable& table) {
    if (table.character_count() != table.class_count()) {
        throw InternalError("character table has " + std::to_string(table.character_count()) + " characters but " +
                            std::to_string(table.class_count()) + " classes");
    }
    long square_sum = 0;
    std::size_t class_total = 0;
    for (long d : table.degrees) {
        square_sum += d * d;
    }
    for (const auto& c : table.classes) {
        class_total += c.size;
    }
    if (square_sum != static_cast<long>(table.group_order) || class_total != table.group_order) {
        throw InternalError("character degrees or class sizes do not match the group order " +
                            std::to_string(table.group_order));
    }
    const double defect = orthogonality_defect(table);
    if (defect > kCharacterTolerance) {
        throw InternalError("character table fails orthogonality (defect " + std::to_string(defect) + ")");
    }
}

namespace {

std::vector<ClassInfo> class_infos(const FiniteGroupModel& g, const ConjugacyClasses& classes) {
    std::vector<ClassInfo> out;
    for (std::size_t c = 0; c < classes.count(); ++c) {
        out.push_back({g.word(classes.representative[c]), classes.size[c]});
    }
    return out;
}

}  // namespace

CharacterTable trivial_table() {
    CharacterTable t;
    t.group_order = 1;
    t.classes = {{Word{}, 1}};
    t.names = {"1"};
    t.degrees = {1};
    t.values = {{Complex(1.0)}};
    return t;
}

CharacterTable cyclic2_table(const FiniteGroupModel& g, const ConjugacyClasses& classes) {
    if (g.order() != 2 || classes.count() != 2) {
        throw PreconditionError("cyclic2_table requires a group of order 2");
    }
    CharacterTable t;
    t.group_order = 2;
    t.classes = class_infos(g, classes);
    t.names = {"rho1", "rho2"};
    t.degrees = {1, 1};
    t.values = {{1.0, 1.0}, {1.0, -1.0}};
    return t;
}

CharacterTable dihedral_table(const FiniteGroupModel& g, const ConjugacyClasses& classes) {
    if (g.generators().size() != 2 || g.order() % 2 != 0) {
        throw PreconditionError("dihedral_table requires a two-generator group");
    }
    const std::size_t n = g.order() / 2;
    const std::size_t a = g.generator_element(g.generators()[0]);
    const std::size_t b = g.generator_element(g.generators()[1]);
    const std::size_t ab = g.multiply(a, b);

    // Parametrize every element as (ab)^k or b(ab)^k.
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> exponent(g.order(), unset);
    std::vector<bool> reflection(g.order(), false);
    std::size_t power = FiniteGroupModel::identity();
    for (std::size_t k = 0; k < n; ++k) {
        exponent[power] = k;
        const std::size_t refl = g.multiply(b, power);
        exponent[refl] = k;
        reflection[refl] = true;
        power = g.multiply(power, ab);
    }
    if (power != FiniteGroupModel::identity()) {
        throw InternalError("(ab)^n is not the identity in the dihedral model");
    }

    CharacterTable t;
    t.group_order = g.order();
    t.classes = class_infos(g, classes);
    const bool even = n % 2 == 0;
    const std::size_t r = classes.count();
    auto add = [&](std::string name, long degree, auto value) {
        std::vector<Complex> row(r);
        for (std::size_t c = 0; c < r; ++c) {
            const std::size_t rep = classes.representative[c];
            if (exponent[rep] == unset) {
                throw InternalError("dihedral parametrization is incomplete");
            }
            row[c] = value(static_cast<long>(exponent[rep]), reflection[rep]);
        }
        t.names.push_back(std::move(name));
        t.degrees.push_back(degree);
        t.values.push_back(std::move(row));
    };
    auto sign = [](long k) { return k % 2 == 0 ? 1.0 : -1.0; };
    add("chi1", 1, [](long, bool) { return Complex(1.0); });
    add("chi2", 1, [](long, bool refl) { return Complex(refl ? -1.0 : 1.0); });
    if (even) {
        add("chi3", 1, [&](long k, bool) { return Complex(sign(k)); });
        add("chi4", 1, [&](long k, bool refl) { return Complex(refl ? sign(k + 1) : sign(k)); });
    }
    // phi_{n/2} would be chi3 + chi4 for even n, so l stops below n/2.
    const std::size_t l_max = even ? n / 2 - 1 : (n - 1) / 2;
    for (std::size_t l = 1; l <= l_max; ++l) {
        add("phi" + std::to_string(l), 2, [&](long k, bool refl) {
            if (refl) {
                return Complex(0.0);
            }
            return Complex(2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(l) * static_cast<double>(k) /
                                          static_cast<double>(n)));
        });
    }
    return t;
}

CharacterTable tensor_table(const CharacterTable& p, const CharacterTable& q) {
    CharacterTable t;
    t.group_order = p.group_order * q.group_order;
    for (const auto& cp : p.classes) {
        for (const auto& cq : q.classes) {
            Word w = cp.representative;
            w.insert(w.end(), cq.representative.begin(), cq.representative.end());
            t.classes.push_back({std::move(w), cp.size * cq.size});
        }
    }
    for (std::size_t i = 0; i < p.character_count(); ++i) {
        for (std::size_t j = 0; j < q.character_count(); ++j) {
            t.names.push_back(p.names[i] + "*" + q.names[j]);
            t.degrees.push_back(p.degrees[i] * q.degrees[j]);
            std::vector<Complex> row;
            row.reserve(t.classes.size());
            for (std::size_t a = 0; a < p.class_count(); ++a) {
                for (std::size_t b = 0; b < q.class_count(); ++b) {
                    row.push_back(p(i, a) * q(j, b));
                }
            }
            t.values.push_back(std::move(row));
        }
    }
    return t;
}

namespace {

CharacterTable irreducible_table(const FiniteGroupModel& g, const ConjugacyClasses& classes,
                                 const IrreducibleType& type) {
    switch (type.family) {
        case CoxeterFamily::A:
            if (type.rank == 1) {
                return cyclic2_table(g, classes);
            }
            break;
        case CoxeterFamily::I2: return dihedral_table(g, classes);
        case CoxeterFamily::Infinite: throw PreconditionError("no character table for an infinite group");
        default: break;
    }
    return dixon_table(g, classes);
}

Word project(const Word& w, GeneratorSubset onto) {
    Word out;
    for (int s : w) {
        if (onto.contains(s)) {
            out.push_back(s);
        }
    }
    return out;
}

}  // namespace

CharacterTable character_table(const FiniteGroupModel& g, const ConjugacyClasses& classes,
                               const FiniteTypeLabel& label) {
    if (label.components.empty()) {
        if (g.order() != 1) {
            throw PreconditionError("empty type label for a nontrivial group");
        }
        return trivial_table();
    }
    if (label.components.size() == 1) {
        CharacterTable t = irreducible_table(g, classes, label.components.front().type);
        validate_table(t);
        return t;
    }

    // Direct product: factor tables on submodels, tensored, then columns
    // reordered to match g's classes.
    std::vector<FiniteGroupModel> factors;
    std::vector<ConjugacyClasses> factor_classes;
    CharacterTable product;
    for (std::size_t f = 0; f < label.components.size(); ++f) {
        const auto& comp = label.components[f];
        factors.push_back(subgroup_model(g, comp.generators));
        factor_classes.push_back(conjugacy_classes(factors.back()));
        CharacterTable ft = irreducible_table(factors.back(), factor_classes.back(), comp.type);
        validate_table(ft);
        product = f == 0 ? std::move(ft) : tensor_table(product, ft);
    }
    if (product.class_count() != classes.count()) {
        throw InternalError("tensor table class count differs from the group's class count");
    }
    std::vector<std::size_t> column(classes.count());
    for (std::size_t c = 0; c < classes.count(); ++c) {
        const Word& rep = g.word(classes.representative[c]);
        std::size_t idx = 0;
        for (std::size_t f = 0; f < factors.size(); ++f) {
            const std::size_t local =
                factor_classes[f].class_of[factors[f].evaluate(project(rep, label.components[f].generators))];
            idx = idx * factor_classes[f].count() + local;
        }
        column[c] = idx;
    }
    CharacterTable t;
    t.group_order = product.group_order;
    t.classes = class_infos(g, classes);
    t.names = product.names;
    t.degrees = product.degrees;
    for (const auto& row : product.values) {
        std::vector<Complex> reordered(classes.count());
        for (std::size_t c = 0; c < classes.count(); ++c) {
            reordered[c] = row[column[c]];
        }
        t.values.push_back(std::move(reordered));
    }
    validate_table(t);
    return t;
}

// ---------------------------------------------------------------------------

InductionMatrix InductionMatrix::operator*(const InductionMatrix& rhs) const {
    if (cols_ != rhs.rows_) {
        throw PreconditionError("induction matrix dimensions do not compose");
    }
    InductionMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const long v = (*this)(i, k);
            if (v == 0) {
                continue;
            }
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                out(i, j) += v * rhs(k, j);
            }
        }
    }
    return out;
}

InductionMatrix InductionMatrix::transposed() const {
    InductionMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out(j, i) = (*this)(i, j);
        }
    }
    return out;
}

namespace {

long round_multiplicity(Complex v, const char* what) {
    const double r = std::round(v.real());
    if (std::abs(v - Complex(r)) > kCharacterTolerance || r < 0) {
        throw InternalError(std::string(what) + " multiplicity " + std::to_string(v.real()) + "+" +
                            std::to_string(v.imag()) + "i is not a non-negative integer");
    }
    return static_cast<long>(r);
}

void check_fusion(const CharacterTable& k, const CharacterTable& l, const std::vector<std::size_t>& fusion) {
    if (fusion.size() != k.class_count()) {
        throw PreconditionError("fusion map size differs from the subgroup's class count");
    }
    for (std::size_t f : fusion) {
        if (f >= l.class_count()) {
            throw PreconditionError("fusion map points outside the larger group's classes");
        }
    }
    if (l.group_order % k.group_order != 0) {
        throw PreconditionError("subgroup order does not divide the group order");
    }
}

}  // namespace

InductionMatrix induction_matrix(const CharacterTable& k, const CharacterTable& l,
                                 const std::vector<std::size_t>& fusion) {
    check_fusion(k, l, fusion);
    const double ko = static_cast<double>(k.group_order);
    const double lo = static_cast<double>(l.group_order);
    InductionMatrix out(l.character_count(), k.character_count());
    for (std::size_t j = 0; j < k.character_count(); ++j) {
        // Ind chi(c) = |L| / (|K| |c|) * sum over K-classes fusing into c of |kappa| chi(kappa)
        std::vector<Complex> induced(l.class_count(), 0.0);
        for (std::size_t kc = 0; kc < k.class_count(); ++kc) {
            induced[fusion[kc]] += static_cast<double>(k.classes[kc].size) * k(j, kc);
        }
        for (std::size_t c = 0; c < l.class_count(); ++c) {
            induced[c] *= lo / (ko * static_cast<double>(l.classes[c].size));
        }
        for (std::size_t i = 0; i < l.character_count(); ++i) {
            Complex inner = 0.0;
            for (std::size_t c = 0; c < l.class_count(); ++c) {
                inner += static_cast<double>(l.classes[c].size) * induced[c] * std::conj(l(i, c));
            }
            out(i, j) = round_multiplicity(inner / lo, "induction");
        }
    }
    return out;
}

InductionMatrix restriction_matrix(const CharacterTable& k, const CharacterTable& l,
                                   const std::vector<std::size_t>& fusion) {
    check_fusion(k, l, fusion);
    const double ko = static_cast<double>(k.group_order);
    InductionMatrix out(k.character_count(), l.character_count());
    for (std::size_t i = 0; i < l.character_count(); ++i) {
        for (std::size_t j = 0; j < k.character_count(); ++j) {
            Complex inner = 0.0;
            for (std::size_t kc = 0; kc < k.class_count(); ++kc) {
                inner += static_cast<double>(k.classes[kc].size) * l(i, fusion[kc]) * std::conj(k(j, kc));
            }
            out(j, i) = round_multiplicity(inner / ko, "restriction");
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

SpecialSubgroup::SpecialSubgroup(const CoxeterMatrix& w, GeneratorSubset t, const Integer& order_cap)
    : generators_(t),
      label_(classify(w, t)),
      model_(realize_group(w, t, order_cap)),
      classes_(conjugacy_classes(model_)),
      table_(character_table(model_, classes_, label_)) {}

std::vector<std::size_t> fusion_map(const SpecialSubgroup& k, const SpecialSubgroup& l) {
    if (!k.generators().is_subset_of(l.generators())) {
        throw PreconditionError("fusion requires " + k.generators().to_string() + " to be contained in " +
                                l.generators().to_string());
    }
    std::vector<std::size_t> out;
    for (const auto& c : k.table().classes) {
        out.push_back(l.class_of_word(c.representative));
    }
    return out;
}

InductionMatrix induction_matrix(const SpecialSubgroup& k, const SpecialSubgroup& l) {
    return induction_matrix(k.table(), l.table(), fusion_map(k, l));
}

}  // namespace bredon
