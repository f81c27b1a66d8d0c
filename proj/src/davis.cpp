#include <bredon/davis.hpp>
#include <bredon/error.hpp>

#include <algorithm>
#include <functional>

namespace bredon {

std::string QuotientCell::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < chain.size(); ++i) {
        out += (i ? " < " : "") + chain[i].to_string();
    }
    return out + ")";
}

CellsByDimension build_cells(const SphericalPoset& poset, std::optional<std::size_t> max_top_rank) {
    const std::vector<GeneratorSubset> elements = poset.all();
    const std::size_t limit = max_top_rank.value_or(poset.max_rank());
    CellsByDimension out;
    std::vector<GeneratorSubset> chain;
    std::function<void(std::size_t)> extend = [&](std::size_t last) {
        const std::size_t dim = chain.size() - 1;
        if (out.size() <= dim) {
            out.resize(dim + 1);
        }
        out[dim].push_back({chain});
        for (std::size_t next = last + 1; next < elements.size(); ++next) {
            const GeneratorSubset t = elements[next];
            if (t.size() > limit || t.size() == chain.back().size() || !chain.back().is_subset_of(t)) {
                continue;
            }
            chain.push_back(t);
            extend(next);
            chain.pop_back();
        }
    };
    for (std::size_t start = 0; start < elements.size(); ++start) {
        if (elements[start].size() > limit) {
            continue;
        }
        chain = {elements[start]};
        extend(start);
    }
    // Depth-first emission already yields lexicographic order within each
    // dimension because poset positions increase along every chain.
    return out;
}

// ---------------------------------------------------------------------------

SubgroupTables::SubgroupTables(const CoxeterMatrix& w, const SphericalPoset& poset, const Integer& order_cap) {
    const auto all = poset.all();
    for (GeneratorSubset t : all) {
        if (poset.order_of(t) > order_cap) {
            throw ResourceError("spherical subgroup W_T for T = " + t.to_string() + " has order " +
                                poset.order_of(t).get_str() + ", above the order cap " + Integer(order_cap).get_str());
        }
    }
    for (GeneratorSubset t : all) {
        groups_.emplace(t.bits(), SpecialSubgroup(w, t, order_cap));
    }
    for (GeneratorSubset l : all) {
        for (GeneratorSubset k : all) {
            if (k == l || !k.is_subset_of(l)) {
                continue;
            }
            induction_.emplace(std::pair{k.bits(), l.bits()}, induction_matrix(subgroup(k), subgroup(l)));
        }
    }
}

const SpecialSubgroup& SubgroupTables::subgroup(GeneratorSubset t) const {
    auto it = groups_.find(t.bits());
    if (it == groups_.end()) {
        throw PreconditionError("no character table for T = " + t.to_string());
    }
    return it->second;
}

const InductionMatrix& SubgroupTables::induction(GeneratorSubset k, GeneratorSubset l) const {
    auto it = induction_.find({k.bits(), l.bits()});
    if (it == induction_.end()) {
        throw PreconditionError("no induction matrix for " + k.to_string() + " < " + l.to_string());
    }
    return it->second;
}

std::vector<GeneratorSubset> SubgroupTables::subsets() const {
    std::vector<GeneratorSubset> out;
    for (const auto& [bits, g] : groups_) {
        out.push_back(GeneratorSubset(bits));
    }
    std::sort(out.begin(), out.end(), poset_order_less);
    return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<GeneratorSubset::Mask> chain_key(const std::vector<GeneratorSubset>& chain) {
    std::vector<GeneratorSubset::Mask> key;
    for (auto t : chain) {
        key.push_back(t.bits());
    }
    return key;
}

}  // namespace

BredonChainComplex assemble_differentials(const CellsByDimension& cells, const SubgroupTables& tables) {
    BredonChainComplex cx;
    cx.degrees_.resize(cells.size());
    std::vector<std::map<std::vector<GeneratorSubset::Mask>, std::size_t>> index(cells.size());
    for (std::size_t d = 0; d < cells.size(); ++d) {
        auto& deg = cx.degrees_[d];
        deg.cells = cells[d];
        for (std::size_t i = 0; i < deg.cells.size(); ++i) {
            const std::size_t size = tables.class_count(deg.cells[i].stabilizer());
            deg.offset.push_back(deg.rank);
            deg.block_size.push_back(size);
            deg.rank += size;
            index[d].emplace(chain_key(deg.cells[i].chain), i);
        }
    }
    for (std::size_t d = 0; d < cells.size(); ++d) {
        auto& deg = cx.degrees_[d];
        if (d == 0) {
            deg.differential = IntegerMatrix(0, deg.rank);
            continue;
        }
        const auto& lower = cx.degrees_[d - 1];
        deg.differential = IntegerMatrix(lower.rank, deg.rank);
        for (std::size_t i = 0; i < deg.cells.size(); ++i) {
            const auto& chain = deg.cells[i].chain;
            for (std::size_t k = 1; k <= chain.size(); ++k) {
                std::vector<GeneratorSubset> face_chain = chain;
                face_chain.erase(face_chain.begin() + static_cast<std::ptrdiff_t>(k - 1));
                auto it = index[d - 1].find(chain_key(face_chain));
                if (it == index[d - 1].end()) {
                    throw PreconditionError("face " + QuotientCell{face_chain}.to_string() + " of cell " +
                                            deg.cells[i].to_string() + " is missing from the cell list");
                }
                const std::size_t face = it->second;
                const int sign = k % 2 == 0 ? 1 : -1;
                deg.blocks.push_back({i, face, sign, k});
                const std::size_t row0 = lower.offset[face];
                const std::size_t col0 = deg.offset[i];
                if (k >= 2) {
                    for (std::size_t c = 0; c < deg.block_size[i]; ++c) {
                        deg.differential.add(row0 + c, col0 + c, sign);
                    }
                } else {
                    const InductionMatrix& ind = tables.induction(chain[0], chain[1]);
                    for (std::size_t r = 0; r < ind.rows(); ++r) {
                        for (std::size_t c = 0; c < ind.cols(); ++c) {
                            if (ind(r, c) != 0) {
                                deg.differential.add(row0 + r, col0 + c, sign * ind(r, c));
                            }
                        }
                    }
                }
            }
        }
    }
    return cx;
}

FgAbGroup BredonChainComplex::homology(std::size_t d) const {
    if (d >= degrees_.size()) {
        return FgAbGroup{};
    }
    const IntegerMatrix incoming =
        d + 1 < degrees_.size() ? degrees_[d + 1].differential : IntegerMatrix(degrees_[d].rank, 0);
    return homology_at(degrees_[d].differential, incoming);
}

std::map<std::size_t, FgAbGroup> BredonChainComplex::homology() const {
    if (!boundary_squares_to_zero()) {
        throw PreconditionError("boundary maps do not compose to zero");
    }
    // One reduction per differential; each is shared by two degrees.
    std::vector<SmithForm> forms;
    for (const auto& deg : degrees_) {
        forms.push_back(smith_normal_form(deg.differential));
    }
    std::map<std::size_t, FgAbGroup> out;
    for (std::size_t d = 0; d < degrees_.size(); ++d) {
        out.emplace(d, homology_from_forms(degrees_[d].rank, forms[d], d + 1 < degrees_.size() ? forms[d + 1] : SmithForm{}));
    }
    return out;
}

bool BredonChainComplex::boundary_squares_to_zero() const {
    for (std::size_t d = 2; d < degrees_.size(); ++d) {
        if (!(degrees_[d - 1].differential * degrees_[d].differential).is_zero()) {
            return false;
        }
    }
    return true;
}

BredonChainComplex relative_complex(const BredonChainComplex& full, std::size_t n) {
    BredonChainComplex rel;
    rel.degrees_.resize(full.degrees_.size());
    std::vector<std::vector<std::size_t>> kept_coords(full.degrees_.size());
    std::vector<std::vector<std::size_t>> new_index(full.degrees_.size());
    for (std::size_t d = 0; d < full.degrees_.size(); ++d) {
        const auto& src = full.degrees_[d];
        auto& dst = rel.degrees_[d];
        new_index[d].assign(src.cells.size(), static_cast<std::size_t>(-1));
        for (std::size_t i = 0; i < src.cells.size(); ++i) {
            if (src.cells[i].top().size() != n) {
                continue;
            }
            new_index[d][i] = dst.cells.size();
            dst.cells.push_back(src.cells[i]);
            dst.block_size.push_back(src.block_size[i]);
            dst.offset.push_back(dst.rank);
            dst.rank += src.block_size[i];
            for (std::size_t c = 0; c < src.block_size[i]; ++c) {
                kept_coords[d].push_back(src.offset[i] + c);
            }
        }
    }
    for (std::size_t d = 0; d < full.degrees_.size(); ++d) {
        auto& dst = rel.degrees_[d];
        if (d == 0) {
            dst.differential = IntegerMatrix(0, dst.rank);
            continue;
        }
        dst.differential = full.degrees_[d].differential.submatrix(kept_coords[d - 1], kept_coords[d]);
        for (const auto& b : full.degrees_[d].blocks) {
            const std::size_t cell = new_index[d][b.cell];
            const std::size_t face = new_index[d - 1][b.face];
            if (cell != static_cast<std::size_t>(-1) && face != static_cast<std::size_t>(-1)) {
                dst.blocks.push_back({cell, face, b.sign, b.deleted});
            }
        }
    }
    // Drop trailing empty degrees.
    while (rel.degrees_.size() > 1 && rel.degrees_.back().cells.empty()) {
        rel.degrees_.pop_back();
    }
    return rel;
}

BredonChainComplex davis_chain_complex(const CoxeterMatrix& w, const Integer& order_cap) {
    const SphericalPoset poset = enumerate_spherical(w);
    const SubgroupTables tables(w, poset, order_cap);
    return assemble_differentials(build_cells(poset), tables);
}

}  // namespace bredon
