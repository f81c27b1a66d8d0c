#include <bredon/error.hpp>
#include <bredon/group.hpp>

#include <cmath>
#include <deque>
#include <numbers>
#include <sstream>

namespace bredon {

std::string word_to_string(const Word& w) {
    if (w.empty()) {
        return "1";
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        os << (i ? "." : "") << 's' << w[i];
    }
    return os.str();
}

std::size_t FiniteGroupModel::multiply(std::size_t a, std::size_t b) const {
    const Permutation& pa = elements_[a];
    const Permutation& pb = elements_[b];
    Permutation c(pa.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = pa[pb[i]];
    }
    auto it = index_.find(c);
    if (it == index_.end()) {
        throw InternalError("group model is not closed under multiplication");
    }
    return it->second;
}

std::size_t FiniteGroupModel::generator_element(int generator) const {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (generators_[i] == generator) {
            return generator_elements_[i];
        }
    }
    throw PreconditionError("s" + std::to_string(generator) + " is not a generator of this group model");
}

std::size_t FiniteGroupModel::evaluate(const Word& w) const {
    if (w.empty()) {
        return identity();
    }
    Permutation acc = elements_[generator_element(w.front())];
    Permutation tmp(acc.size());
    for (std::size_t k = 1; k < w.size(); ++k) {
        const Permutation& s = elements_[generator_element(w[k])];
        for (std::size_t i = 0; i < acc.size(); ++i) {
            tmp[i] = acc[s[i]];
        }
        acc.swap(tmp);
    }
    auto it = index_.find(acc);
    if (it == index_.end()) {
        throw InternalError("word " + word_to_string(w) + " evaluates outside the group model");
    }
    return it->second;
}

std::optional<std::size_t> FiniteGroupModel::find(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::size_t FiniteGroupModel::element_order(std::size_t a) const {
    std::size_t k = 1;
    std::size_t x = a;
    while (x != identity()) {
        x = multiply(x, a);
        ++k;
    }
    return k;
}

FiniteGroupModel realize_group(const CoxeterMatrix& w, GeneratorSubset t, const Integer& order_cap) {
    const SphericalCheck check = is_spherical(w, t);
    if (!check.spherical) {
        throw PreconditionError("cannot realize W_T for non-spherical T = " + t.to_string());
    }
    if (check.order > order_cap) {
        throw ResourceError("group order " + check.order.get_str() + " of W_T for T = " + t.to_string() +
                            " exceeds the order cap " + Integer(order_cap).get_str());
    }

    FiniteGroupModel g;
    g.generators_ = t.members();
    const std::size_t d = g.generators_.size();

    // Cosine form on the simple roots of T.
    std::vector<double> form(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const int m = w(g.generators_[i], g.generators_[j]);
            form[i * d + j] = i == j ? 1.0 : -std::cos(std::numbers::pi / m);
        }
    }
    auto reflect = [&](std::size_t i, const std::vector<double>& v) {
        double pairing = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
            pairing += form[i * d + j] * v[j];
        }
        std::vector<double> out = v;
        out[i] -= 2.0 * pairing;
        return out;
    };

    constexpr double tol = 1e-9;
    std::vector<std::vector<double>> roots;
    auto locate = [&](const std::vector<double>& v) -> std::optional<std::size_t> {
        for (std::size_t r = 0; r < roots.size(); ++r) {
            bool same = true;
            for (std::size_t j = 0; j < d && same; ++j) {
                same = std::abs(roots[r][j] - v[j]) < tol;
            }
            if (same) {
                return r;
            }
        }
        return std::nullopt;
    };
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<double> e(d, 0.0);
        e[i] = 1.0;
        roots.push_back(std::move(e));
    }
    std::vector<std::vector<std::uint32_t>> images(d);
    for (std::size_t r = 0; r < roots.size(); ++r) {
        for (std::size_t i = 0; i < d; ++i) {
            std::vector<double> img = reflect(i, roots[r]);
            auto found = locate(img);
            if (!found) {
                roots.push_back(std::move(img));
                found = roots.size() - 1;
            }
            images[i].push_back(static_cast<std::uint32_t>(*found));
        }
    }
    g.root_count_ = roots.size();

    for (std::size_t i = 0; i < d; ++i) {
        const Permutation& s = images[i];
        for (std::size_t r = 0; r < s.size(); ++r) {
            if (s[s[r]] != r) {
                throw InternalError("reflection s" + std::to_string(g.generators_[i]) +
                                    " is not an involution on the computed root set");
            }
        }
    }

    Permutation id(g.root_count_);
    for (std::size_t r = 0; r < id.size(); ++r) {
        id[r] = static_cast<std::uint32_t>(r);
    }
    g.elements_.push_back(id);
    g.words_.push_back({});
    g.index_.emplace(id, 0);
    const unsigned long cap = check.order.get_ui();
    for (std::size_t e = 0; e < g.elements_.size(); ++e) {
        for (std::size_t i = 0; i < d; ++i) {
            Permutation next(g.root_count_);
            const Permutation& cur = g.elements_[e];
            for (std::size_t r = 0; r < next.size(); ++r) {
                next[r] = cur[images[i][r]];
            }
            if (g.index_.contains(next)) {
                continue;
            }
            if (g.elements_.size() >= cap) {
                throw InternalError("closure of W_T for T = " + t.to_string() + " exceeds the classified order " +
                                    check.order.get_str());
            }
            Word word = g.words_[e];
            word.push_back(g.generators_[i]);
            g.index_.emplace(next, g.elements_.size());
            g.elements_.push_back(std::move(next));
            g.words_.push_back(std::move(word));
        }
    }
    if (g.elements_.size() != cap) {
        throw InternalError("closure of W_T for T = " + t.to_string() + " reached " +
                            std::to_string(g.elements_.size()) + " elements, expected " + check.order.get_str());
    }

    for (std::size_t i = 0; i < d; ++i) {
        g.generator_elements_.push_back(g.index_.at(images[i]));
    }
    g.inverse_.resize(g.elements_.size());
    for (std::size_t e = 0; e < g.elements_.size(); ++e) {
        const Permutation& p = g.elements_[e];
        Permutation inv(p.size());
        for (std::size_t r = 0; r < p.size(); ++r) {
            inv[p[r]] = static_cast<std::uint32_t>(r);
        }
        g.inverse_[e] = g.index_.at(inv);
    }
    return g;
}

FiniteGroupModel subgroup_model(const FiniteGroupModel& g, GeneratorSubset t) {
    FiniteGroupModel h;
    h.generators_ = t.members();
    h.root_count_ = g.root_count();
    std::vector<const Permutation*> gens;
    for (int s : h.generators_) {
        gens.push_back(&g.element(g.generator_element(s)));
    }
    h.elements_.push_back(g.element(FiniteGroupModel::identity()));
    h.words_.push_back({});
    h.index_.emplace(h.elements_.front(), 0);
    for (std::size_t e = 0; e < h.elements_.size(); ++e) {
        for (std::size_t i = 0; i < gens.size(); ++i) {
            Permutation next(h.root_count_);
            const Permutation& cur = h.elements_[e];
            for (std::size_t r = 0; r < next.size(); ++r) {
                next[r] = cur[(*gens[i])[r]];
            }
            if (h.index_.contains(next)) {
                continue;
            }
            Word word = h.words_[e];
            word.push_back(h.generators_[i]);
            h.index_.emplace(next, h.elements_.size());
            h.elements_.push_back(std::move(next));
            h.words_.push_back(std::move(word));
        }
    }
    for (const Permutation* p : gens) {
        h.generator_elements_.push_back(h.index_.at(*p));
    }
    h.inverse_.resize(h.elements_.size());
    for (std::size_t e = 0; e < h.elements_.size(); ++e) {
        const Permutation& p = h.elements_[e];
        Permutation inv(p.size());
        for (std::size_t r = 0; r < p.size(); ++r) {
            inv[p[r]] = static_cast<std::uint32_t>(r);
        }
        h.inverse_[e] = h.index_.at(inv);
    }
    return h;
}

ConjugacyClasses conjugacy_classes(const FiniteGroupModel& g) {
    constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
    ConjugacyClasses cc;
    cc.class_of.assign(g.order(), unassigned);
    std::vector<std::size_t> gens;
    for (int s : g.generators()) {
        gens.push_back(g.generator_element(s));
    }
    for (std::size_t e = 0; e < g.order(); ++e) {
        if (cc.class_of[e] != unassigned) {
            continue;
        }
        const std::size_t id = cc.count();
        cc.representative.push_back(e);
        std::size_t size = 0;
        std::deque<std::size_t> queue{e};
        cc.class_of[e] = id;
        while (!queue.empty()) {
            const std::size_t x = queue.front();
            queue.pop_front();
            ++size;
            for (std::size_t s : gens) {
                const std::size_t y = g.multiply(g.multiply(s, x), s);
                if (cc.class_of[y] == unassigned) {
                    cc.class_of[y] = id;
                    queue.push_back(y);
                }
            }
        }
        cc.size.push_back(size);
    }
    return cc;
}

}  // namespace bredon
