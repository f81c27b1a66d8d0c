#include <bredon/error.hpp>
#include <bredon/homology.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace bredon {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> dense) {
    rows_.resize(dense.size());
    std::size_t r = 0;
    for (const auto& row : dense) {
        if (r == 0) {
            cols_ = row.size();
        } else if (row.size() != cols_) {
            throw PreconditionError("ragged initializer for IntegerMatrix");
        }
        std::size_t c = 0;
        for (long v : row) {
            if (v != 0) {
                rows_[r].emplace_back(c, Integer(v));
            }
            ++c;
        }
        ++r;
    }
}

IntegerMatrix IntegerMatrix::from_dense(const std::vector<std::vector<long>>& dense) {
    IntegerMatrix m(dense.size(), dense.empty() ? 0 : dense.front().size());
    for (std::size_t r = 0; r < dense.size(); ++r) {
        if (dense[r].size() != m.cols_) {
            throw PreconditionError("ragged dense matrix");
        }
        for (std::size_t c = 0; c < m.cols_; ++c) {
            if (dense[r][c] != 0) {
                m.rows_[r].emplace_back(c, Integer(dense[r][c]));
            }
        }
    }
    return m;
}

std::size_t IntegerMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : rows_) {
        n += r.size();
    }
    return n;
}

namespace {

using Row = IntegerMatrix::Row;

Row::const_iterator find_column(const Row& row, std::size_t c) {
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::size_t col) { return e.first < col; });
    return (it != row.end() && it->first == c) ? it : row.end();
}

/// target += factor * source, dropping zeros.
void axpy(Row& target, const Integer& factor, const Row& source) {
    Row out;
    out.reserve(target.size() + source.size());
    auto a = target.begin();
    auto b = source.begin();
    while (a != target.end() || b != source.end()) {
        if (b == source.end() || (a != target.end() && a->first < b->first)) {
            out.push_back(std::move(*a));
            ++a;
        } else if (a == target.end() || b->first < a->first) {
            out.emplace_back(b->first, factor * b->second);
            ++b;
        } else {
            Integer v = a->second + factor * b->second;
            if (v != 0) {
                out.emplace_back(a->first, std::move(v));
            }
            ++a;
            ++b;
        }
    }
    target.swap(out);
}

}  // namespace

Integer IntegerMatrix::at(std::size_t r, std::size_t c) const {
    auto it = find_column(rows_.at(r), c);
    return it == rows_[r].end() ? Integer(0) : it->second;
}

void IntegerMatrix::add(std::size_t r, std::size_t c, const Integer& v) {
    if (r >= rows_.size() || c >= cols_) {
        throw PreconditionError("IntegerMatrix index out of range");
    }
    if (v == 0) {
        return;
    }
    Row& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::size_t col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        it->second += v;
        if (it->second == 0) {
            row.erase(it);
        }
    } else {
        row.insert(it, {c, v});
    }
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
    if (cols_ != rhs.rows()) {
        throw PreconditionError("matrix product dimension mismatch: " + std::to_string(cols_) + " vs " +
                                std::to_string(rhs.rows()));
    }
    IntegerMatrix out(rows(), rhs.cols());
    for (std::size_t r = 0; r < rows(); ++r) {
        Row acc;
        for (const auto& [k, v] : rows_[r]) {
            axpy(acc, v, rhs.rows_[k]);
        }
        out.rows_[r] = std::move(acc);
    }
    return out;
}

bool IntegerMatrix::is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const Row& r) { return r.empty(); });
}

IntegerMatrix IntegerMatrix::submatrix(const std::vector<std::size_t>& keep_rows,
                                       const std::vector<std::size_t>& keep_cols) const {
    std::vector<std::size_t> new_col(cols_, static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < keep_cols.size(); ++i) {
        new_col.at(keep_cols[i]) = i;
    }
    IntegerMatrix out(keep_rows.size(), keep_cols.size());
    for (std::size_t i = 0; i < keep_rows.size(); ++i) {
        Row& dst = out.rows_[i];
        for (const auto& [c, v] : rows_.at(keep_rows[i])) {
            if (new_col[c] != static_cast<std::size_t>(-1)) {
                dst.emplace_back(new_col[c], v);
            }
        }
        std::sort(dst.begin(), dst.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    return out;
}

std::vector<std::vector<Integer>> IntegerMatrix::to_dense() const {
    std::vector<std::vector<Integer>> out(rows(), std::vector<Integer>(cols_, 0));
    for (std::size_t r = 0; r < rows(); ++r) {
        for (const auto& [c, v] : rows_[r]) {
            out[r][c] = v;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

std::vector<Integer> invariant_factors(std::vector<Integer> d) {
    for (auto& v : d) {
        v = abs(v);
        if (v == 0) {
            throw PreconditionError("invariant_factors expects nonzero entries");
        }
    }
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            Integer g;
            Integer l;
            mpz_gcd(g.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
            mpz_lcm(l.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
            d[i] = g;
            d[j] = l;
        }
    }
    std::vector<Integer> out;
    for (auto& v : d) {
        if (v != 1) {
            out.push_back(std::move(v));
        }
    }
    return out;
}

FgAbGroup::FgAbGroup(std::size_t free_rank, std::vector<Integer> torsion)
    : free_rank_(free_rank), torsion_(invariant_factors(std::move(torsion))) {}

std::string FgAbGroup::to_string() const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    if (free_rank_ > 0) {
        os << "Z";
        if (free_rank_ > 1) {
            os << '^' << free_rank_;
        }
        first = false;
    }
    for (const auto& t : torsion_) {
        os << (first ? "" : " + ") << "Z/" << t.get_str();
        first = false;
    }
    return os.str();
}

bool fgab_equal(const FgAbGroup& a, const FgAbGroup& b) { return a == b; }

FgAbGroup fgab_direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
    std::vector<Integer> torsion = a.torsion();
    torsion.insert(torsion.end(), b.torsion().begin(), b.torsion().end());
    return FgAbGroup(a.free_rank() + b.free_rank(), std::move(torsion));
}

SmithForm smith_normal_form(const IntegerMatrix& a) {
    std::vector<Row> rows(a.rows());
    // Rows that may hold an entry in each column. Entries can go stale after
    // cancellation; lookups confirm with find_column.
    std::vector<std::vector<std::size_t>> column_rows(a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        rows[r] = a.row(r);
        for (const auto& e : rows[r]) {
            column_rows[e.first].push_back(r);
        }
    }
    std::vector<Integer> diagonal;

    auto eliminate = [&](std::size_t r, const Integer& factor, std::size_t source) {
        Row& target = rows[r];
        Row out;
        out.reserve(target.size() + rows[source].size());
        auto x = target.begin();
        auto y = rows[source].begin();
        while (x != target.end() || y != rows[source].end()) {
            if (y == rows[source].end() || (x != target.end() && x->first < y->first)) {
                out.push_back(std::move(*x));
                ++x;
            } else if (x == target.end() || y->first < x->first) {
                out.emplace_back(y->first, factor * y->second);
                column_rows[y->first].push_back(r);
                ++y;
            } else {
                Integer v = x->second + factor * y->second;
                if (v != 0) {
                    out.emplace_back(x->first, std::move(v));
                }
                ++x;
                ++y;
            }
        }
        target.swap(out);
    };

    std::size_t first_live = 0;
    while (true) {
        // Pivot: minimal |value|, ties broken by smallest row then column.
        while (first_live < rows.size() && rows[first_live].empty()) {
            ++first_live;
        }
        std::size_t pr = 0;
        std::size_t pc = 0;
        const Integer* best = nullptr;
        for (std::size_t r = first_live; r < rows.size(); ++r) {
            for (const auto& [c, v] : rows[r]) {
                if (best == nullptr || mpz_cmpabs(v.get_mpz_t(), best->get_mpz_t()) < 0) {
                    best = &v;
                    pr = r;
                    pc = c;
                }
            }
            if (best != nullptr && mpz_cmpabs_ui(best->get_mpz_t(), 1) == 0) {
                break;
            }
        }
        if (best == nullptr) {
            break;
        }
        const Integer pivot = *best;

        bool clean = true;
        Integer q;
        std::vector<std::size_t> candidates;
        candidates.swap(column_rows[pc]);
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (std::size_t r : candidates) {
            if (r == pr) {
                continue;
            }
            auto it = find_column(rows[r], pc);
            if (it == rows[r].end()) {
                continue;
            }
            mpz_tdiv_q(q.get_mpz_t(), it->second.get_mpz_t(), pivot.get_mpz_t());
            if (q == 0) {
                clean = false;
                column_rows[pc].push_back(r);
                continue;
            }
            eliminate(r, -q, pr);
            if (find_column(rows[r], pc) != rows[r].end()) {
                clean = false;
                column_rows[pc].push_back(r);
            }
        }
        column_rows[pc].push_back(pr);
        if (!clean) {
            continue;
        }
        // Column pc is now zero outside the pivot row, so column operations
        // only touch the pivot row.
        Row reduced;
        for (auto& [c, v] : rows[pr]) {
            if (c == pc) {
                continue;
            }
            Integer rem;
            mpz_tdiv_r(rem.get_mpz_t(), v.get_mpz_t(), pivot.get_mpz_t());
            if (rem != 0) {
                clean = false;
                reduced.emplace_back(c, std::move(rem));
            }
        }
        if (!clean) {
            reduced.emplace_back(pc, pivot);
            std::sort(reduced.begin(), reduced.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            rows[pr] = std::move(reduced);
            continue;
        }
        diagonal.push_back(abs(pivot));
        rows[pr].clear();
    }

    SmithForm out;
    out.rank = diagonal.size();
    const std::size_t units = diagonal.size();
    std::vector<Integer> factors = invariant_factors(std::move(diagonal));
    out.diagonal.assign(units - factors.size(), Integer(1));
    out.diagonal.insert(out.diagonal.end(), factors.begin(), factors.end());
    return out;
}

FgAbGroup homology_at(const IntegerMatrix& d_out, const IntegerMatrix& d_in) {
    if (d_out.cols() != d_in.rows()) {
        throw PreconditionError("homology_at: d_out has " + std::to_string(d_out.cols()) + " columns but d_in has " +
                                std::to_string(d_in.rows()) + " rows");
    }
    if (!(d_out * d_in).is_zero()) {
        throw PreconditionError("homology_at: d_out * d_in is not zero");
    }
    return homology_from_forms(d_out.cols(), smith_normal_form(d_out), smith_normal_form(d_in));
}

FgAbGroup homology_from_forms(std::size_t ambient, const SmithForm& out_form, const SmithForm& in_form) {
    // ker(d_out) is a direct summand of C because im(d_out) is free, so the
    // torsion of H equals the torsion of coker(d_in).
    std::vector<Integer> torsion;
    for (const auto& v : in_form.diagonal) {
        if (v != 1) {
            torsion.push_back(v);
        }
    }
    if (out_form.rank + in_form.rank > ambient) {
        throw InternalError("homology_at: ranks exceed the ambient dimension");
    }
    return FgAbGroup(ambient - out_form.rank - in_form.rank, std::move(torsion));
}

}  // namespace bredon
