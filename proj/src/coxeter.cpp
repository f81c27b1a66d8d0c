#include <bredon/coxeter.hpp>
#include <bredon/error.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>

namespace bredon {

GeneratorSubset::GeneratorSubset(std::initializer_list<int> members) {
    for (int i : members) {
        bits_ |= Mask{1} << i;
    }
}

GeneratorSubset GeneratorSubset::from_members(const std::vector<int>& members) {
    Mask bits = 0;
    for (int i : members) {
        if (i < 0 || i >= 64) {
            throw InputError("generator index " + std::to_string(i) + " out of range");
        }
        bits |= Mask{1} << i;
    }
    return GeneratorSubset(bits);
}

GeneratorSubset GeneratorSubset::first_n(std::size_t n) {
    return GeneratorSubset(n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1);
}

std::size_t GeneratorSubset::size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<int> GeneratorSubset::members() const {
    std::vector<int> out;
    for (Mask b = bits_; b != 0; b &= b - 1) {
        out.push_back(std::countr_zero(b));
    }
    return out;
}

int GeneratorSubset::max_member() const { return bits_ == 0 ? -1 : 63 - std::countl_zero(bits_); }

std::string GeneratorSubset::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int i : members()) {
        os << (first ? "" : ",") << i;
        first = false;
    }
    os << '}';
    return os.str();
}

bool poset_order_less(GeneratorSubset a, GeneratorSubset b) {
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    return a.members() < b.members();
}

// ---------------------------------------------------------------------------

CoxeterMatrix CoxeterMatrix::parse(const std::vector<std::vector<long long>>& raw) {
    const std::size_t n = raw.size();
    if (n == 0) {
        throw InputError("Coxeter matrix must have rank at least 1");
    }
    if (n > 64) {
        throw InputError("Coxeter matrix rank " + std::to_string(n) + " exceeds the supported maximum of 64");
    }
    auto where = [](std::size_t i, std::size_t j) {
        return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    };
    CoxeterMatrix w;
    w.rank_ = n;
    w.m_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (raw[i].size() != n) {
            throw InputError("Coxeter matrix is not square: row " + std::to_string(i + 1) + " has " +
                             std::to_string(raw[i].size()) + " entries, expected " + std::to_string(n));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const long long v = raw[i][j];
            if (i == j) {
                if (v != 1) {
                    throw InputError("diagonal entry " + std::to_string(v) + " at " + where(i, j) + " must be 1");
                }
                w.m_[i * n + j] = 1;
                continue;
            }
            if (v != raw[j][i]) {
                throw InputError("matrix is not symmetric: entry " + std::to_string(v) + " at " + where(i, j) +
                                 " differs from " + std::to_string(raw[j][i]) + " at " + where(j, i));
            }
            if (v == 1 || v < 0) {
                throw InputError("off-diagonal entry " + std::to_string(v) + " at " + where(i, j) +
                                 " must be >= 2 or 0 (infinity)");
            }
            if (v >= kInfiniteOrder) {
                throw InputError("entry " + std::to_string(v) + " at " + where(i, j) + " is too large");
            }
            w.m_[i * n + j] = v == 0 ? kInfiniteOrder : static_cast<int>(v);
        }
    }
    return w;
}

CoxeterMatrix parse_matrix(const std::vector<std::vector<long long>>& raw) { return CoxeterMatrix::parse(raw); }

CoxeterMatrix CoxeterMatrix::restricted(GeneratorSubset t) const {
    const auto idx = t.members();
    CoxeterMatrix w;
    w.rank_ = idx.size();
    w.m_.resize(idx.size() * idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a) {
        for (std::size_t b = 0; b < idx.size(); ++b) {
            w.m_[a * idx.size() + b] = (*this)(idx[a], idx[b]);
        }
    }
    return w;
}

std::vector<std::vector<long long>> CoxeterMatrix::to_raw() const {
    std::vector<std::vector<long long>> out(rank_, std::vector<long long>(rank_));
    for (std::size_t i = 0; i < rank_; ++i) {
        for (std::size_t j = 0; j < rank_; ++j) {
            const int v = (*this)(static_cast<int>(i), static_cast<int>(j));
            out[i][j] = is_infinite(v) ? 0 : v;
        }
    }
    return out;
}

bool CoxeterMatrix::is_right_angled() const {
    for (std::size_t i = 0; i < rank_; ++i) {
        for (std::size_t j = i + 1; j < rank_; ++j) {
            const int v = m_[i * rank_ + j];
            if (v != 2 && !is_infinite(v)) {
                return false;
            }
        }
    }
    return true;
}

bool CoxeterMatrix::is_even() const {
    for (std::size_t i = 0; i < rank_; ++i) {
        for (std::size_t j = i + 1; j < rank_; ++j) {
            const int v = m_[i * rank_ + j];
            if (!is_infinite(v) && v % 2 != 0) {
                return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------

namespace {

Integer factorial(int n) {
    Integer r = 1;
    for (int i = 2; i <= n; ++i) {
        r *= i;
    }
    return r;
}

bool connected_edge(const CoxeterMatrix& w, int i, int j) { return w(i, j) >= 3; }

}  // namespace

std::string IrreducibleType::name() const {
    switch (family) {
        case CoxeterFamily::A: return "A" + std::to_string(rank);
        case CoxeterFamily::B: return "B" + std::to_string(rank);
        case CoxeterFamily::D: return "D" + std::to_string(rank);
        case CoxeterFamily::E: return "E" + std::to_string(rank);
        case CoxeterFamily::F: return "F" + std::to_string(rank);
        case CoxeterFamily::H: return "H" + std::to_string(rank);
        case CoxeterFamily::I2: return "I2(" + std::to_string(m) + ")";
        case CoxeterFamily::Infinite: return "Infinite";
    }
    return "?";
}

Integer IrreducibleType::order() const {
    switch (family) {
        case CoxeterFamily::A: return factorial(rank + 1);
        case CoxeterFamily::B: {
            Integer p;
            mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(rank));
            return p * factorial(rank);
        }
        case CoxeterFamily::D: {
            Integer p;
            mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(rank - 1));
            return p * factorial(rank);
        }
        case CoxeterFamily::E:
            if (rank == 6) return 51840;
            if (rank == 7) return 2903040;
            return 696729600;
        case CoxeterFamily::F: return 1152;
        case CoxeterFamily::H: return rank == 3 ? 120 : 14400;
        case CoxeterFamily::I2: return 2 * m;
        case CoxeterFamily::Infinite: break;
    }
    throw PreconditionError("order requested for an infinite Coxeter group");
}

bool FiniteTypeLabel::finite() const {
    return std::all_of(components.begin(), components.end(), [](const Component& c) { return c.type.finite(); });
}

std::string FiniteTypeLabel::name() const {
    if (components.empty()) {
        return "1";
    }
    if (!finite()) {
        return "Infinite";
    }
    std::string out;
    for (const auto& c : components) {
        if (!out.empty()) {
            out += " x ";
        }
        out += c.type.name();
    }
    return out;
}

Integer FiniteTypeLabel::order() const {
    Integer r = 1;
    for (const auto& c : components) {
        r *= c.type.order();
    }
    return r;
}

std::vector<GeneratorSubset> components(const CoxeterMatrix& w, GeneratorSubset t) {
    std::vector<GeneratorSubset> out;
    GeneratorSubset remaining = t;
    while (!remaining.empty()) {
        const int seed = remaining.members().front();
        GeneratorSubset comp({seed});
        std::vector<int> stack{seed};
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int u : remaining.members()) {
                if (!comp.contains(u) && connected_edge(w, v, u)) {
                    comp = comp.with(u);
                    stack.push_back(u);
                }
            }
        }
        out.push_back(comp);
        remaining = GeneratorSubset(remaining.bits() & ~comp.bits());
    }
    return out;
}

IrreducibleType classify_irreducible(const CoxeterMatrix& w, GeneratorSubset t) {
    const auto nodes = t.members();
    const int n = static_cast<int>(nodes.size());
    if (n == 0 || components(w, t).size() != 1) {
        throw PreconditionError("classify_irreducible requires a connected nonempty diagram, got " + t.to_string());
    }
    const IrreducibleType infinite{};
    if (n == 1) {
        return {CoxeterFamily::A, 1, 0};
    }
    if (n == 2) {
        const int m = w(nodes[0], nodes[1]);
        if (is_infinite(m)) {
            return infinite;
        }
        return {CoxeterFamily::I2, 2, m};
    }

    // Rank >= 3: must be a tree with labels in {3,4,5}.
    std::vector<std::vector<int>> adj(n);
    int edge_count = 0;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            const int m = w(nodes[a], nodes[b]);
            if (m < 3) {
                continue;
            }
            if (m > 5) {
                return infinite;
            }
            adj[a].push_back(b);
            adj[b].push_back(a);
            ++edge_count;
        }
    }
    if (edge_count != n - 1) {
        return infinite;
    }
    auto label = [&](int a, int b) { return w(nodes[a], nodes[b]); };

    std::vector<int> branch_points;
    for (int a = 0; a < n; ++a) {
        if (adj[a].size() > 3) {
            return infinite;
        }
        if (adj[a].size() == 3) {
            branch_points.push_back(a);
        }
    }

    if (branch_points.empty()) {
        // Path: read the label sequence from one end.
        int start = 0;
        while (adj[start].size() != 1) {
            ++start;
        }
        std::vector<int> labels;
        int prev = -1;
        int cur = start;
        while (true) {
            int next = -1;
            for (int v : adj[cur]) {
                if (v != prev) {
                    next = v;
                }
            }
            if (next < 0) {
                break;
            }
            labels.push_back(label(cur, next));
            prev = cur;
            cur = next;
        }
        const auto count = [&](int v) { return std::count(labels.begin(), labels.end(), v); };
        const auto c4 = count(4);
        const auto c5 = count(5);
        const bool end4 = labels.front() == 4 || labels.back() == 4;
        const bool end5 = labels.front() == 5 || labels.back() == 5;
        if (c4 == 0 && c5 == 0) {
            return {CoxeterFamily::A, n, 0};
        }
        if (c4 == 1 && c5 == 0 && end4) {
            return {CoxeterFamily::B, n, 0};
        }
        if (n == 4 && labels[1] == 4 && labels[0] == 3 && labels[2] == 3) {
            return {CoxeterFamily::F, 4, 0};
        }
        if (c5 == 1 && c4 == 0 && end5 && (n == 3 || n == 4)) {
            return {CoxeterFamily::H, n, 0};
        }
        return infinite;
    }

    if (branch_points.size() > 1) {
        return infinite;
    }
    for (int a = 0; a < n; ++a) {
        for (int b : adj[a]) {
            if (label(a, b) != 3) {
                return infinite;
            }
        }
    }
    const int center = branch_points.front();
    std::vector<int> arms;
    for (int first : adj[center]) {
        int length = 1;
        int prev = center;
        int cur = first;
        while (adj[cur].size() == 2) {
            const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = next;
            ++length;
        }
        arms.push_back(length);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) {
        return {CoxeterFamily::D, n, 0};
    }
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
        return {CoxeterFamily::E, n, 0};
    }
    return infinite;
}

FiniteTypeLabel classify(const CoxeterMatrix& w, GeneratorSubset t) {
    FiniteTypeLabel label;
    for (GeneratorSubset c : components(w, t)) {
        label.components.push_back({classify_irreducible(w, c), c});
    }
    return label;
}

SphericalCheck is_spherical(const CoxeterMatrix& w, GeneratorSubset t) {
    const FiniteTypeLabel label = classify(w, t);
    if (!label.finite()) {
        return {false, 0};
    }
    return {true, label.order()};
}

bool numeric_finiteness_check(const CoxeterMatrix& w, GeneratorSubset t) {
    const auto nodes = t.members();
    const std::size_t n = nodes.size();
    std::vector<double> b(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const int m = w(nodes[i], nodes[j]);
            if (i == j) {
                b[i * n + j] = 1.0;
            } else if (is_infinite(m)) {
                b[i * n + j] = -1.0;
            } else {
                b[i * n + j] = -std::cos(std::numbers::pi / m);
            }
        }
    }
    constexpr double tol = 1e-9;
    for (std::size_t k = 1; k <= n; ++k) {
        // Determinant of the leading k x k block by partial-pivot elimination.
        std::vector<double> a(k * k);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                a[i * k + j] = b[i * n + j];
            }
        }
        double det = 1.0;
        for (std::size_t c = 0; c < k; ++c) {
            std::size_t piv = c;
            for (std::size_t r = c + 1; r < k; ++r) {
                if (std::abs(a[r * k + c]) > std::abs(a[piv * k + c])) {
                    piv = r;
                }
            }
            if (a[piv * k + c] == 0.0) {
                det = 0.0;
                break;
            }
            if (piv != c) {
                for (std::size_t j = 0; j < k; ++j) {
                    std::swap(a[piv * k + j], a[c * k + j]);
                }
                det = -det;
            }
            det *= a[c * k + c];
            for (std::size_t r = c + 1; r < k; ++r) {
                const double f = a[r * k + c] / a[c * k + c];
                for (std::size_t j = c; j < k; ++j) {
                    a[r * k + j] -= f * a[c * k + j];
                }
            }
        }
        if (det <= tol) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------

const std::vector<GeneratorSubset>& SphericalPoset::of_rank(std::size_t n) const {
    static const std::vector<GeneratorSubset> empty;
    return n < by_rank_.size() ? by_rank_[n] : empty;
}

std::size_t SphericalPoset::total() const { return info_.size(); }

std::vector<GeneratorSubset> SphericalPoset::all() const {
    std::vector<GeneratorSubset> out;
    for (const auto& level : by_rank_) {
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

const Integer& SphericalPoset::order_of(GeneratorSubset t) const {
    auto it = info_.find(t.bits());
    if (it == info_.end()) {
        throw PreconditionError("subset " + t.to_string() + " is not spherical");
    }
    return it->second.order;
}

const FiniteTypeLabel& SphericalPoset::label_of(GeneratorSubset t) const {
    auto it = info_.find(t.bits());
    if (it == info_.end()) {
        throw PreconditionError("subset " + t.to_string() + " is not spherical");
    }
    return it->second.label;
}

SphericalPoset enumerate_spherical(const CoxeterMatrix& w) {
    SphericalPoset poset;
    const int n = static_cast<int>(w.rank());
    poset.by_rank_.push_back({GeneratorSubset{}});
    poset.info_[0] = {1, FiniteTypeLabel{}};
    for (int r = 1; r <= n; ++r) {
        std::vector<GeneratorSubset> level;
        for (GeneratorSubset base : poset.by_rank_[r - 1]) {
            for (int j = base.max_member() + 1; j < n; ++j) {
                const GeneratorSubset cand = base.with(j);
                // Downward closure: every facet must already be spherical.
                bool facets_ok = true;
                for (int i : base.members()) {
                    if (!poset.info_.contains(cand.without(i).bits())) {
                        facets_ok = false;
                        break;
                    }
                }
                if (!facets_ok) {
                    continue;
                }
                FiniteTypeLabel label = classify(w, cand);
                if (!label.finite()) {
                    continue;
                }
                Integer order = label.order();
                poset.info_[cand.bits()] = {std::move(order), std::move(label)};
                level.push_back(cand);
            }
        }
        if (level.empty()) {
            break;
        }
        poset.by_rank_.push_back(std::move(level));
    }
    return poset;
}

}  // namespace bredon
