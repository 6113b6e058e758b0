#pragma once

// Permutation groups small enough to enumerate: closure of generators,
// conjugacy classes with power maps, and the regular and fixed-point
// characters.

#include "lambdachar/group.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lambdachar {

class Permutation {
public:
    Permutation() = default;
    // Throws InputError unless images is a bijection of {0..n-1}.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int degree);

    // Cycle notation such as "(0 1)(2 3)" or "()" on the given number of
    // points. Throws InputError on malformed text or repeated points.
    static Permutation parse_cycles(std::string_view text, int degree);

    // Smallest degree that fits every point mentioned in cycle notation.
    static int max_point(std::string_view text);

    int degree() const { return static_cast<int>(images_.size()); }
    const std::vector<int>& images() const { return images_; }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }

    // (p * q)(i) = p(q(i)): q acts first.
    friend Permutation operator*(const Permutation& p, const Permutation& q);
    Permutation inverse() const;
    Permutation pow(long e) const;
    int order() const;
    int fixed_points() const;
    std::string to_cycles() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const;
};

struct GeneratedGroup {
    int degree = 0;
    std::vector<Permutation> generators;
    std::vector<Permutation> elements;
    std::unordered_map<Permutation, int, PermutationHash> element_index;

    long order() const { return static_cast<long>(elements.size()); }
    // Position of p in elements; throws std::out_of_range if absent.
    int index_of(const Permutation& p) const { return element_index.at(p); }
};

inline constexpr std::size_t default_enumeration_cap = 20000;

// Breadth-first closure under left multiplication by the generators. The
// identity comes first, then each layer sorted lexicographically by images.
// Throws CapExceeded once more than cap elements are found.
GeneratedGroup enumerate(const std::vector<Permutation>& generators, std::size_t cap = default_enumeration_cap,
                         int degree = -1);

struct ConjugacyClasses {
    ClassDataPtr data;
    std::vector<int> representatives; // element index of each class's lexicographically least member
    std::vector<int> class_of;        // class index of each element
};

// Classes sorted by (order, size, least member), named C1..Ck, with power
// maps for every prime up to the exponent.
ConjugacyClasses conjugacy_classes(const GeneratedGroup& g);

ClassData class_data(const GeneratedGroup& g);

struct StandardCharacters {
    ClassFunction regular;
    ClassFunction natural;
};

StandardCharacters standard_characters(const GeneratedGroup& g, const ConjugacyClasses& cc);

// A bijection m with target class c corresponding to model class m[c] that
// preserves sizes, orders, inversion, and all prime power maps; nullopt
// when none exists.
std::optional<std::vector<int>> match_class_data(const ClassData& target, const ClassData& model);

} // namespace lambdachar
