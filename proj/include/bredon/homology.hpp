#pragma once

#include <bredon/integer.hpp>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace bredon {

/// Sparse integer matrix with arbitrary-precision entries, stored by rows.
class IntegerMatrix {
public:
    using Entry = std::pair<std::size_t, Integer>;  // (column, nonzero value)
    using Row = std::vector<Entry>;                  // sorted by column

    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}
    IntegerMatrix(std::initializer_list<std::initializer_list<long>> dense);
    static IntegerMatrix from_dense(const std::vector<std::vector<long>>& dense);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    std::size_t nonzeros() const;

    Integer at(std::size_t r, std::size_t c) const;
    /// Adds v to entry (r, c).
    void add(std::size_t r, std::size_t c, const Integer& v);
    const Row& row(std::size_t r) const { return rows_[r]; }

    IntegerMatrix operator*(const IntegerMatrix& rhs) const;
    bool is_zero() const;
    /// Rows in `keep_rows`, columns in `keep_cols`, in the given order.
    IntegerMatrix submatrix(const std::vector<std::size_t>& keep_rows, const std::vector<std::size_t>& keep_cols) const;
    std::vector<std::vector<Integer>> to_dense() const;

    bool operator==(const IntegerMatrix&) const = default;

private:
    std::size_t cols_ = 0;
    std::vector<Row> rows_;
};

/// Finitely generated abelian group Z^free_rank + Z/d_1 + ... with d_1 | d_2 | ...
class FgAbGroup {
public:
    FgAbGroup() = default;
    explicit FgAbGroup(std::size_t free_rank, std::vector<Integer> torsion = {});

    std::size_t free_rank() const { return free_rank_; }
    /// Invariant factors, each >= 2, in divisibility order.
    const std::vector<Integer>& torsion() const { return torsion_; }
    bool is_zero() const { return free_rank_ == 0 && torsion_.empty(); }
    bool is_free() const { return torsion_.empty(); }

    /// "0", "Z^3", "Z + Z/2", ...
    std::string to_string() const;

    bool operator==(const FgAbGroup&) const = default;

private:
    std::size_t free_rank_ = 0;
    std::vector<Integer> torsion_;
};

/// Invariant factors of arbitrary positive integers (1s dropped).
std::vector<Integer> invariant_factors(std::vector<Integer> diagonal);

bool fgab_equal(const FgAbGroup& a, const FgAbGroup& b);
FgAbGroup fgab_direct_sum(const FgAbGroup& a, const FgAbGroup& b);

struct SmithForm {
    /// Nonzero diagonal entries d_1 | d_2 | ... (all positive).
    std::vector<Integer> diagonal;
    std::size_t rank = 0;
};

/// Exact elimination with pivots of minimal absolute value (ties: smallest
/// row, then column).
SmithForm smith_normal_form(const IntegerMatrix& a);

/// ker(d_out) / im(d_in). d_out: C -> C', d_in: C'' -> C. Throws
/// PreconditionError if the composition is nonzero or dimensions disagree.
FgAbGroup homology_at(const IntegerMatrix& d_out, const IntegerMatrix& d_in);

/// Same quotient from precomputed Smith forms of d_out and d_in, where C has
/// rank `ambient`. Lets a chain complex reduce each differential once.
FgAbGroup homology_from_forms(std::size_t ambient, const SmithForm& out_form, const SmithForm& in_form);

}  // namespace bredon
