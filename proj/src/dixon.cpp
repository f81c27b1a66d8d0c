#include <bredon/character.hpp>
#include <bredon/error.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace bredon {

namespace {

using Residue = std::int64_t;

struct PrimeField {
    Residue p;

    Residue reduce(Residue a) const {
        a %= p;
        return a < 0 ? a + p : a;
    }
    Residue mul(Residue a, Residue b) const { return (a * b) % p; }
    Residue pow(Residue base, std::int64_t e) const {
        Residue r = 1;
        base = reduce(base);
        while (e > 0) {
            if (e & 1) {
                r = mul(r, base);
            }
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    Residue inv(Residue a) const { return pow(a, p - 2); }
};

bool is_prime(std::int64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

Residue primitive_root(const PrimeField& f) {
    std::vector<std::int64_t> factors;
    std::int64_t m = f.p - 1;
    for (std::int64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            factors.push_back(d);
            while (m % d == 0) {
                m /= d;
            }
        }
    }
    if (m > 1) {
        factors.push_back(m);
    }
    for (Residue g = 2; g < f.p; ++g) {
        bool ok = true;
        for (std::int64_t q : factors) {
            if (f.pow(g, (f.p - 1) / q) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            return g;
        }
    }
    return 1;  // p = 2
}

using ModVector = std::vector<Residue>;

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<ModVector>& rows, const PrimeField& f) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) {
        return pivots;
    }
    const std::size_t cols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0) {
            ++sel;
        }
        if (sel == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[sel]);
        const Residue inv = f.inv(rows[r][c]);
        for (auto& v : rows[r]) {
            v = f.mul(v, inv);
        }
        for (std::size_t o = 0; o < rows.size(); ++o) {
            if (o == r || rows[o][c] == 0) {
                continue;
            }
            const Residue factor = rows[o][c];
            for (std::size_t j = 0; j < cols; ++j) {
                rows[o][j] = f.reduce(rows[o][j] - f.mul(factor, rows[r][j]));
            }
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

/// Basis of the null space of a (rows x cols) matrix.
std::vector<ModVector> null_space(std::vector<ModVector> m, std::size_t cols, const PrimeField& f) {
    const auto pivots = row_reduce(m, f);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) {
        is_pivot[c] = true;
    }
    std::vector<ModVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        ModVector v(cols, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = f.reduce(-m[r][free]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Class-algebra structure constants a[i][j][k] = #{x in C_i : x^-1 g_k in C_j}.
std::vector<std::vector<std::vector<std::int64_t>>> structure_constants(const FiniteGroupModel& g,
                                                                          const ConjugacyClasses& cc) {
    const std::size_t r = cc.count();
    std::vector<std::vector<std::vector<std::int64_t>>> a(
        r, std::vector<std::vector<std::int64_t>>(r, std::vector<std::int64_t>(r, 0)));
    for (std::size_t k = 0; k < r; ++k) {
        const std::size_t z = cc.representative[k];
        for (std::size_t x = 0; x < g.order(); ++x) {
            const std::size_t y = g.multiply(g.inverse(x), z);
            ++a[cc.class_of[x]][cc.class_of[y]][k];
        }
    }
    return a;
}

/// Splits each subspace of `spaces` into eigenspaces of the linear map m.
/// Subspaces are kept as bases in reduced row echelon form.
std::vector<std::vector<ModVector>> split(const std::vector<std::vector<ModVector>>& spaces,
                                          const std::vector<std::vector<Residue>>& m, const PrimeField& f) {
    const std::size_t n = m.size();
    std::vector<std::vector<ModVector>> out;
    for (auto basis : spaces) {
        const std::size_t d = basis.size();
        if (d == 1) {
            out.push_back(std::move(basis));
            continue;
        }
        const auto pivots = row_reduce(basis, f);
        // Restricted operator: column a holds the coordinates of m * basis[a],
        // read off at the pivot positions.
        std::vector<std::vector<Residue>> restricted(d, std::vector<Residue>(d));
        for (std::size_t a = 0; a < d; ++a) {
            ModVector image(n, 0);
            for (std::size_t i = 0; i < n; ++i) {
                Residue s = 0;
                for (std::size_t j = 0; j < n; ++j) {
                    s += f.mul(m[i][j], basis[a][j]);
                }
                image[i] = f.reduce(s);
            }
            for (std::size_t b = 0; b < d; ++b) {
                restricted[b][a] = image[pivots[b]];
            }
        }
        std::size_t found = 0;
        for (Residue lambda = 0; lambda < f.p && found < d; ++lambda) {
            std::vector<ModVector> shifted = restricted;
            for (std::size_t b = 0; b < d; ++b) {
                shifted[b][b] = f.reduce(shifted[b][b] - lambda);
            }
            const auto coords = null_space(shifted, d, f);
            if (coords.empty()) {
                continue;
            }
            std::vector<ModVector> eigen;
            for (const auto& c : coords) {
                ModVector v(n, 0);
                for (std::size_t a = 0; a < d; ++a) {
                    if (c[a] == 0) {
                        continue;
                    }
                    for (std::size_t j = 0; j < n; ++j) {
                        v[j] = f.reduce(v[j] + f.mul(c[a], basis[a][j]));
                    }
                }
                eigen.push_back(std::move(v));
            }
            found += eigen.size();
            out.push_back(std::move(eigen));
        }
        if (found != d) {
            throw InternalError("class matrix is not diagonalizable over F_" + std::to_string(f.p));
        }
    }
    return out;
}

}  // namespace

CharacterTable dixon_table(const FiniteGroupModel& g, const ConjugacyClasses& cc, const DixonOptions& options) {
    const std::size_t r = cc.count();
    const auto order = static_cast<std::int64_t>(g.order());

    std::vector<std::size_t> element_order(r);
    std::int64_t exponent = 1;
    for (std::size_t k = 0; k < r; ++k) {
        element_order[k] = g.element_order(cc.representative[k]);
        exponent = std::lcm(exponent, static_cast<std::int64_t>(element_order[k]));
    }

    // Smallest prime p = 1 mod exponent with p > 2 sqrt|G| and p not dividing |G|.
    const double bound = 2.0 * std::sqrt(static_cast<double>(order));
    std::int64_t p = exponent + 1;
    while (p <= bound || !is_prime(p) || order % p == 0) {
        p += exponent;
        if (p > options.prime_bound) {
            throw ResourceError("no admissible prime below " + std::to_string(options.prime_bound) +
                                " for a group of order " + std::to_string(order));
        }
    }
    const PrimeField f{p};

    const auto a = structure_constants(g, cc);
    std::vector<std::size_t> inverse_class(r);
    for (std::size_t k = 0; k < r; ++k) {
        inverse_class[k] = cc.class_of[g.inverse(cc.representative[k])];
    }

    // Common eigenvectors of M_i[j][k] = a[i][j][k].
    std::vector<std::vector<ModVector>> spaces(1);
    for (std::size_t i = 0; i < r; ++i) {
        ModVector e(r, 0);
        e[i] = 1;
        spaces[0].push_back(std::move(e));
    }
    for (std::size_t i = 0; i < r; ++i) {
        const bool done = std::all_of(spaces.begin(), spaces.end(), [](const auto& s) { return s.size() == 1; });
        if (done) {
            break;
        }
        std::vector<std::vector<Residue>> m(r, std::vector<Residue>(r));
        for (std::size_t j = 0; j < r; ++j) {
            for (std::size_t k = 0; k < r; ++k) {
                m[j][k] = f.reduce(a[i][j][k]);
            }
        }
        spaces = split(spaces, m, f);
    }
    if (spaces.size() != r) {
        throw InternalError("simultaneous eigenspaces did not separate into " + std::to_string(r) + " lines");
    }

    // Powers g_k^j by class, for the lift to complex values.
    std::vector<std::vector<std::size_t>> power_class(r);
    for (std::size_t k = 0; k < r; ++k) {
        std::size_t x = FiniteGroupModel::identity();
        for (std::size_t j = 0; j < element_order[k]; ++j) {
            power_class[k].push_back(cc.class_of[x]);
            x = g.multiply(x, cc.representative[k]);
        }
    }
    const Residue root = f.pow(primitive_root(f), (p - 1) / exponent);

    struct Row {
        long degree;
        std::vector<Complex> values;
    };
    std::vector<Row> rows;
    const auto max_degree = static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<double>(order))));
    for (const auto& space : spaces) {
        ModVector w = space.front();
        if (w[0] == 0) {
            throw InternalError("central character vanishes on the identity class");
        }
        const Residue scale = f.inv(w[0]);
        for (auto& v : w) {
            v = f.mul(v, scale);
        }
        // d^2 = |G| / sum_k w_k w_{k^-1} / |C_k|
        Residue denom = 0;
        for (std::size_t k = 0; k < r; ++k) {
            denom = f.reduce(denom + f.mul(f.mul(w[k], w[inverse_class[k]]), f.inv(f.reduce(cc.size[k]))));
        }
        if (denom == 0) {
            throw InternalError("degenerate norm in Dixon degree recovery");
        }
        const Residue d2 = f.mul(f.reduce(order), f.inv(denom));
        std::int64_t degree = 0;
        for (std::int64_t d = 1; d <= max_degree; ++d) {
            if (order % d == 0 && f.reduce(d * d) == d2) {
                degree = d;
                break;
            }
        }
        if (degree == 0) {
            throw InternalError("no character degree matches its modular square");
        }
        ModVector modular(r);
        for (std::size_t k = 0; k < r; ++k) {
            modular[k] = f.mul(f.mul(degree, w[k]), f.inv(f.reduce(cc.size[k])));
        }

        Row row{degree, std::vector<Complex>(r)};
        for (std::size_t k = 0; k < r; ++k) {
            // chi(g) = sum_l m_l zeta_o^l, eigenvalue multiplicities m_l recovered mod p.
            const auto o = static_cast<std::int64_t>(element_order[k]);
            const Residue z = f.pow(root, exponent / o);
            const Residue inv_o = f.inv(o);
            std::int64_t total = 0;
            Complex value = 0.0;
            for (std::int64_t l = 0; l < o; ++l) {
                Residue s = 0;
                for (std::int64_t j = 0; j < o; ++j) {
                    s = f.reduce(s + f.mul(modular[power_class[k][j]], f.pow(z, (o - (j * l) % o) % o)));
                }
                const Residue mult = f.mul(s, inv_o);
                if (mult > degree) {
                    throw InternalError("eigenvalue multiplicity out of range in Dixon lift");
                }
                total += mult;
                const double angle = 2.0 * std::numbers::pi * static_cast<double>(l) / static_cast<double>(o);
                value += static_cast<double>(mult) * Complex(std::cos(angle), std::sin(angle));
            }
            if (total != degree) {
                throw InternalError("eigenvalue multiplicities do not sum to the degree in Dixon lift");
            }
            row.values[k] = value;
        }
        rows.push_back(std::move(row));
    }

    // Deterministic order: degree, then values descending (trivial character first).
    auto key = [](const Complex& c) {
        return std::pair{std::round(c.real() * 1e8), std::round(c.imag() * 1e8)};
    };
    std::sort(rows.begin(), rows.end(), [&](const Row& x, const Row& y) {
        if (x.degree != y.degree) {
            return x.degree < y.degree;
        }
        for (std::size_t k = 0; k < x.values.size(); ++k) {
            const auto kx = key(x.values[k]);
            const auto ky = key(y.values[k]);
            if (kx != ky) {
                return kx > ky;
            }
        }
        return false;
    });

    CharacterTable t;
    t.group_order = g.order();
    for (std::size_t k = 0; k < r; ++k) {
        t.classes.push_back({g.word(cc.representative[k]), cc.size[k]});
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        t.names.push_back("X" + std::to_string(i + 1));
        t.degrees.push_back(rows[i].degree);
        t.values.push_back(std::move(rows[i].values));
    }
    return t;
}

}  // namespace bredon
