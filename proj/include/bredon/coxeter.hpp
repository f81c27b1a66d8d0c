#pragma once

#include <bredon/integer.hpp>

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bredon {

/// Internal sentinel for m_ij = infinity. File formats use 0 instead.
inline constexpr int kInfiniteOrder = std::numeric_limits<int>::max();

inline bool is_infinite(int m) { return m == kInfiniteOrder; }

/// A set of generator indices, stored as a bitmask (rank is limited to 64).
class GeneratorSubset {
public:
    using Mask = std::uint64_t;

    GeneratorSubset() = default;
    explicit GeneratorSubset(Mask bits) : bits_(bits) {}
    GeneratorSubset(std::initializer_list<int> members);
    static GeneratorSubset from_members(const std::vector<int>& members);
    static GeneratorSubset first_n(std::size_t n);

    Mask bits() const { return bits_; }
    bool empty() const { return bits_ == 0; }
    std::size_t size() const;
    bool contains(int i) const { return (bits_ >> i) & 1U; }
    bool is_subset_of(GeneratorSubset other) const { return (bits_ & ~other.bits_) == 0; }
    GeneratorSubset with(int i) const { return GeneratorSubset(bits_ | (Mask{1} << i)); }
    GeneratorSubset without(int i) const { return GeneratorSubset(bits_ & ~(Mask{1} << i)); }
    GeneratorSubset intersect(GeneratorSubset o) const { return GeneratorSubset(bits_ & o.bits_); }

    /// Members in increasing order.
    std::vector<int> members() const;
    /// Largest member, or -1 for the empty set.
    int max_member() const;
    std::string to_string() const;

    bool operator==(const GeneratorSubset&) const = default;

private:
    Mask bits_ = 0;
};

/// Rank first, then lexicographic on the sorted member lists.
bool poset_order_less(GeneratorSubset a, GeneratorSubset b);

struct GeneratorSubsetHash {
    std::size_t operator()(GeneratorSubset t) const { return std::hash<std::uint64_t>{}(t.bits()); }
};

/// Symmetric matrix of orders m_ij of a Coxeter system.
class CoxeterMatrix {
public:
    /// Validates a raw integer matrix in which 0 encodes infinity.
    static CoxeterMatrix parse(const std::vector<std::vector<long long>>& raw);

    std::size_t rank() const { return rank_; }
    int operator()(int i, int j) const { return m_[static_cast<std::size_t>(i) * rank_ + j]; }
    GeneratorSubset all() const { return GeneratorSubset::first_n(rank_); }

    /// Coxeter matrix of the special subsystem on t, generators relabeled 0..|t|-1
    /// in increasing order.
    CoxeterMatrix restricted(GeneratorSubset t) const;

    /// Raw form with 0 for infinity.
    std::vector<std::vector<long long>> to_raw() const;

    bool is_right_angled() const;
    bool is_even() const;

    bool operator==(const CoxeterMatrix&) const = default;

private:
    CoxeterMatrix() = default;
    std::size_t rank_ = 0;
    std::vector<int> m_;
};

CoxeterMatrix parse_matrix(const std::vector<std::vector<long long>>& raw);

enum class CoxeterFamily { A, B, D, E, F, H, I2, Infinite };

/// Type of a connected Coxeter diagram.
struct IrreducibleType {
    CoxeterFamily family = CoxeterFamily::Infinite;
    int rank = 0;
    int m = 0;  // only for I2

    bool finite() const { return family != CoxeterFamily::Infinite; }
    std::string name() const;
    /// Group order; requires finite().
    Integer order() const;

    bool operator==(const IrreducibleType&) const = default;
};

struct FiniteTypeLabel {
    struct Component {
        IrreducibleType type;
        GeneratorSubset generators;
    };
    std::vector<Component> components;

    bool finite() const;
    /// "A1 x I2(4)", "1" for the empty set, "Infinite" when any component is.
    std::string name() const;
    Integer order() const;
};

/// Connected components of the diagram induced on t (edges where m_ij >= 3,
/// including infinity), each component ordered by its smallest member.
std::vector<GeneratorSubset> components(const CoxeterMatrix& w, GeneratorSubset t);

/// Throws PreconditionError if the induced diagram on t is not connected.
IrreducibleType classify_irreducible(const CoxeterMatrix& w, GeneratorSubset t);

FiniteTypeLabel classify(const CoxeterMatrix& w, GeneratorSubset t);

struct SphericalCheck {
    bool spherical = false;
    Integer order;  // 0 when infinite
};

SphericalCheck is_spherical(const CoxeterMatrix& w, GeneratorSubset t);

/// Positive-definiteness of the cosine form restricted to t, by leading
/// principal minors in floating point (tolerance 1e-9). Test oracle only.
bool numeric_finiteness_check(const CoxeterMatrix& w, GeneratorSubset t);

/// All spherical subsets graded by rank.
class SphericalPoset {
public:
    SphericalPoset() = default;

    std::size_t max_rank() const { return by_rank_.empty() ? 0 : by_rank_.size() - 1; }
    /// Subsets of cardinality n in lexicographic order; empty for n > max_rank().
    const std::vector<GeneratorSubset>& of_rank(std::size_t n) const;
    /// s(n)
    std::size_t count(std::size_t n) const { return of_rank(n).size(); }
    std::size_t total() const;
    /// Every spherical subset, ordered by rank then lexicographically.
    std::vector<GeneratorSubset> all() const;
    bool contains(GeneratorSubset t) const { return info_.contains(t.bits()); }
    const Integer& order_of(GeneratorSubset t) const;
    const FiniteTypeLabel& label_of(GeneratorSubset t) const;

private:
    friend SphericalPoset enumerate_spherical(const CoxeterMatrix& w);
    struct Info {
        Integer order;
        FiniteTypeLabel label;
    };
    std::vector<std::vector<GeneratorSubset>> by_rank_;
    std::map<GeneratorSubset::Mask, Info> info_;
};

SphericalPoset enumerate_spherical(const CoxeterMatrix& w);

}  // namespace bredon
