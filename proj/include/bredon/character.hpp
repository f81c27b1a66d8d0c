#pragma once

#include <bredon/coxeter.hpp>
#include <bredon/group.hpp>

#include <complex>
#include <string>
#include <vector>

namespace bredon {

using Complex = std::complex<double>;

/// Tolerance for rounding character inner products to integers.
inline constexpr double kCharacterTolerance = 1e-6;

struct ClassInfo {
    Word representative;
    std::size_t size = 0;
};

/// Complex character table; rows are irreducible characters, columns classes.
/// Rows form the Z-basis of the representation ring R_C(G) in this order.
struct CharacterTable {
    std::size_t group_order = 1;
    std::vector<ClassInfo> classes;
    std::vector<std::string> names;
    std::vector<long> degrees;
    std::vector<std::vector<Complex>> values;

    std::size_t class_count() const { return classes.size(); }
    std::size_t character_count() const { return values.size(); }
    const Complex& operator()(std::size_t character, std::size_t cls) const { return values[character][cls]; }
};

/// Largest deviation of the row orthogonality relations from the identity.
double orthogonality_defect(const CharacterTable& table);

/// Throws InternalError unless orthogonality (1e-6), the degree-square sum and
/// squareness hold.
void validate_table(const CharacterTable& table);

CharacterTable trivial_table();

/// Closed-form table of C2 = <s>: rho1, rho2.
CharacterTable cyclic2_table(const FiniteGroupModel& g, const ConjugacyClasses& classes);

/// Closed-form table of the dihedral group <a,b> of order 2n (a the smaller
/// generator index): chi1, chi2, chi3, chi4 (n even only), phi_l.
CharacterTable dihedral_table(const FiniteGroupModel& g, const ConjugacyClasses& classes);

struct DixonOptions {
    /// Upper bound on the prime searched for the modular eigenvector step.
    long prime_bound = 1L << 30;
};

/// Burnside-Dixon: class-algebra structure constants, simultaneous
/// eigenvectors over F_p, lift of values to C through a fixed root of unity.
CharacterTable dixon_table(const FiniteGroupModel& g, const ConjugacyClasses& classes, const DixonOptions& options = {});

/// Product table: classes are pairs (p outer, q inner), values are products.
CharacterTable tensor_table(const CharacterTable& p, const CharacterTable& q);

/// Table of g with columns in the order of `classes`. Dispatches on the label:
/// closed forms for C2 and I2(m), tensor products over components, and
/// Burnside-Dixon for the remaining irreducible types.
CharacterTable character_table(const FiniteGroupModel& g, const ConjugacyClasses& classes,
                               const FiniteTypeLabel& label);

/// Non-negative integer matrix; rows index irreducibles of the larger group,
/// columns those of the smaller one.
class InductionMatrix {
public:
    InductionMatrix() = default;
    InductionMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    long& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    long operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    InductionMatrix operator*(const InductionMatrix& rhs) const;
    InductionMatrix transposed() const;
    bool operator==(const InductionMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<long> data_;
};

/// Induction R(K) -> R(L) from the induced-character formula and the inner
/// product with L's irreducibles. fusion[c] is the L-class containing K-class c.
InductionMatrix induction_matrix(const CharacterTable& k, const CharacterTable& l, const std::vector<std::size_t>& fusion);

/// Multiplicities of K's irreducibles in restrictions of L's irreducibles,
/// evaluated directly on K's classes. Rows index K, columns L.
InductionMatrix restriction_matrix(const CharacterTable& k, const CharacterTable& l, const std::vector<std::size_t>& fusion);

/// W_T realized with its conjugacy classes and character table.
class SpecialSubgroup {
public:
    SpecialSubgroup(const CoxeterMatrix& w, GeneratorSubset t, const Integer& order_cap = kDefaultOrderCap);

    GeneratorSubset generators() const { return generators_; }
    const FiniteTypeLabel& label() const { return label_; }
    const FiniteGroupModel& model() const { return model_; }
    const ConjugacyClasses& classes() const { return classes_; }
    const CharacterTable& table() const { return table_; }

    std::size_t class_of_word(const Word& w) const { return classes_.class_of[model_.evaluate(w)]; }

private:
    GeneratorSubset generators_;
    FiniteTypeLabel label_;
    FiniteGroupModel model_;
    ConjugacyClasses classes_;
    CharacterTable table_;
};

/// L-class of every K-class, by evaluating K's class representatives in L's model.
std::vector<std::size_t> fusion_map(const SpecialSubgroup& k, const SpecialSubgroup& l);

InductionMatrix induction_matrix(const SpecialSubgroup& k, const SpecialSubgroup& l);

}  // namespace bredon
