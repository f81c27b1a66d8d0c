#pragma once

#include <bredon/coxeter.hpp>

#include <cstdint>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace bredon {

/// Word in global generator indices.
using Word = std::vector<int>;

/// Permutation of a finite root set: root i is sent to root perm[i].
using Permutation = std::vector<std::uint32_t>;

inline constexpr long kDefaultOrderCap = 14400;

std::string word_to_string(const Word& w);

/// A finite special subgroup W_T realized as permutations of its root system.
///
/// Elements are numbered in breadth-first order from the identity (index 0),
/// extending words on the right by generators in increasing index order, so
/// every stored word is the shortlex-least word for its element.
class FiniteGroupModel {
public:
    const std::vector<int>& generators() const { return generators_; }
    GeneratorSubset generator_set() const { return GeneratorSubset::from_members(generators_); }
    std::size_t order() const { return elements_.size(); }
    std::size_t root_count() const { return root_count_; }

    const Permutation& element(std::size_t i) const { return elements_[i]; }
    const Word& word(std::size_t i) const { return words_[i]; }
    static constexpr std::size_t identity() { return 0; }

    /// Product a*b (apply b first, as linear maps).
    std::size_t multiply(std::size_t a, std::size_t b) const;
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    std::size_t generator_element(int generator) const;
    /// Element of a word; every letter must be a generator of this model.
    std::size_t evaluate(const Word& w) const;
    std::optional<std::size_t> find(const Permutation& p) const;
    std::size_t element_order(std::size_t a) const;

private:
    friend FiniteGroupModel realize_group(const CoxeterMatrix&, GeneratorSubset, const Integer&);
    friend FiniteGroupModel subgroup_model(const FiniteGroupModel&, GeneratorSubset);

    struct PermHash {
        std::size_t operator()(const Permutation& p) const {
            return std::hash<std::string_view>{}(
                std::string_view(reinterpret_cast<const char*>(p.data()), p.size() * sizeof(p[0])));
        }
    };

    std::vector<int> generators_;
    std::vector<std::size_t> generator_elements_;
    std::size_t root_count_ = 0;
    std::vector<Permutation> elements_;
    std::vector<Word> words_;
    std::vector<std::size_t> inverse_;
    std::unordered_map<Permutation, std::size_t, PermHash> index_;
};

/// Builds the permutation model of W_T by closing the simple roots under the
/// reflections of the cosine form. Throws PreconditionError when t is not
/// spherical, ResourceError when |W_T| exceeds order_cap.
FiniteGroupModel realize_group(const CoxeterMatrix& w, GeneratorSubset t, const Integer& order_cap = kDefaultOrderCap);

/// Subgroup generated by the generators in t inside g, as permutations of g's
/// roots. Elements and words follow the same breadth-first convention.
FiniteGroupModel subgroup_model(const FiniteGroupModel& g, GeneratorSubset t);

struct ConjugacyClasses {
    /// Element index of each class representative (smallest BFS index in the class).
    std::vector<std::size_t> representative;
    std::vector<std::size_t> size;
    /// Class index of every element.
    std::vector<std::size_t> class_of;

    std::size_t count() const { return representative.size(); }
};

/// Classes are numbered in order of their representatives, so class 0 is {1}.
ConjugacyClasses conjugacy_classes(const FiniteGroupModel& g);

}  // namespace bredon
