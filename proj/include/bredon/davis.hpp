#pragma once

#include <bredon/character.hpp>
#include <bredon/coxeter.hpp>
#include <bredon/homology.hpp>

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace bredon {

/// Orbit of simplices of the Davis complex: a strictly increasing chain
/// T_1 < ... < T_n of spherical subsets. Dimension n - 1, stabilizer W_{T_1}.
struct QuotientCell {
    std::vector<GeneratorSubset> chain;

    std::size_t dimension() const { return chain.size() - 1; }
    GeneratorSubset stabilizer() const { return chain.front(); }
    GeneratorSubset top() const { return chain.back(); }
    std::string to_string() const;

    bool operator==(const QuotientCell&) const = default;
};

using CellsByDimension = std::vector<std::vector<QuotientCell>>;

/// All chains whose top element has rank <= max_top_rank, per dimension, in
/// lexicographic order of poset positions.
CellsByDimension build_cells(const SphericalPoset& poset, std::optional<std::size_t> max_top_rank = std::nullopt);

/// Character tables of every spherical subgroup and induction matrices for
/// every spherical pair K < L.
class SubgroupTables {
public:
    /// Throws ResourceError if some spherical |W_T| exceeds order_cap.
    SubgroupTables(const CoxeterMatrix& w, const SphericalPoset& poset, const Integer& order_cap = kDefaultOrderCap);

    const SpecialSubgroup& subgroup(GeneratorSubset t) const;
    /// c(W_T), the rank of R_C(W_T).
    std::size_t class_count(GeneratorSubset t) const { return subgroup(t).table().class_count(); }
    const InductionMatrix& induction(GeneratorSubset k, GeneratorSubset l) const;
    std::vector<GeneratorSubset> subsets() const;

private:
    std::map<GeneratorSubset::Mask, SpecialSubgroup> groups_;
    std::map<std::pair<GeneratorSubset::Mask, GeneratorSubset::Mask>, InductionMatrix> induction_;
};

/// Differential block of one cell against one codimension-1 face.
struct DifferentialBlock {
    std::size_t cell = 0;
    std::size_t face = 0;
    int sign = 1;
    /// Position k (1-based) of the deleted chain member; k = 1 means induction.
    std::size_t deleted = 1;
};

class BredonChainComplex {
public:
    struct Degree {
        std::vector<QuotientCell> cells;
        std::vector<std::size_t> block_size;  // c(W_{T_1}) per cell
        std::vector<std::size_t> offset;
        std::size_t rank = 0;
        /// d_d : C_d -> C_{d-1}; rows are degree d-1 coordinates.
        IntegerMatrix differential;
        std::vector<DifferentialBlock> blocks;
    };

    std::size_t degree_count() const { return degrees_.size(); }
    const Degree& degree(std::size_t d) const { return degrees_.at(d); }
    /// Rank of the free abelian group C_d (0 beyond the top degree).
    std::size_t rank(std::size_t d) const { return d < degrees_.size() ? degrees_[d].rank : 0; }
    const IntegerMatrix& differential(std::size_t d) const { return degrees_.at(d).differential; }

    FgAbGroup homology(std::size_t d) const;
    /// H_d for d = 0 .. degree_count() - 1.
    std::map<std::size_t, FgAbGroup> homology() const;
    /// Every composition d_{d-1} d_d vanishes.
    bool boundary_squares_to_zero() const;

private:
    friend BredonChainComplex assemble_differentials(const CellsByDimension&, const SubgroupTables&);
    friend BredonChainComplex relative_complex(const BredonChainComplex&, std::size_t);
    std::vector<Degree> degrees_;
};

/// Face deleting T_k carries (-1)^k; k >= 2 gives +-identity on R(W_{T_1}),
/// k = 1 gives +-Ind from W_{T_1} to W_{T_2}.
BredonChainComplex assemble_differentials(const CellsByDimension& cells, const SubgroupTables& tables);

/// Quotient complex of the skeleton pair: cells whose top chain member has rank n.
BredonChainComplex relative_complex(const BredonChainComplex& full, std::size_t n);

/// Convenience: poset, tables, cells and differentials for w.
BredonChainComplex davis_chain_complex(const CoxeterMatrix& w, const Integer& order_cap = kDefaultOrderCap);

}  // namespace bredon
