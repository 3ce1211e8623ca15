#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nzsh/errors.hpp"

namespace nzsh {

// Elements are plain indices in [0, v); index 0 is always the identity.
// All groups are written additively, non-abelian ones included, so every
// construction formula can be evaluated with add/neg directly.
using Elem = int;

struct GroupSpec {
    enum class Kind { Cyclic, Product, Elementary2, Cayley };
    Kind kind = Kind::Cyclic;
    int cyclic_order = 1;                     // Cyclic
    std::vector<int> factor_orders;           // Product (each >= 2)
    int rank = 0;                             // Elementary2
    std::vector<std::vector<Elem>> table;     // Cayley: v x v index table
    std::string source;                       // display/serialization string

    static GroupSpec cyclic(int v);
    static GroupSpec product(std::vector<int> orders);
    static GroupSpec elementary2(int r);
    static GroupSpec cayley(std::vector<std::vector<Elem>> table);
};

// Spec text syntax: "z:7", "prod:3x2x2", "e2:4", "cayley:<path>".
GroupSpec parse_group_spec(const std::string& text);

class FiniteGroup {
public:
    explicit FiniteGroup(GroupSpec spec);

    int order() const { return v_; }
    bool abelian() const { return abelian_; }
    const GroupSpec& spec() const { return spec_; }
    const std::string& name() const { return spec_.source; }

    Elem add(Elem x, Elem y) const {
        switch (spec_.kind) {
        case GroupSpec::Kind::Cyclic: {
            int s = x + y;
            return s >= v_ ? s - v_ : s;
        }
        case GroupSpec::Kind::Cayley:
            return spec_.table[x][y];
        default:
            return add_mixed(x, y);
        }
    }

    Elem neg(Elem x) const { return neg_[x]; }
    Elem zero() const { return 0; }

    bool is_involution(Elem x) const { return x != 0 && neg_[x] == x; }
    const std::vector<Elem>& involution_set() const { return involutions_; }

    // least d >= 1 with d*x = 0
    int element_order(Elem x) const;

private:
    Elem add_mixed(Elem x, Elem y) const; // Product / Elementary2 via mixed radix

    GroupSpec spec_;
    int v_;
    bool abelian_;
    std::vector<Elem> neg_;
    std::vector<Elem> involutions_;
    std::vector<int> radices_; // mixed-radix strides for product kinds
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr build_group(GroupSpec spec);

struct Subgroup {
    std::vector<Elem> elements; // sorted, contains 0
    int t() const { return static_cast<int>(elements.size()); }
    bool contains(Elem x) const;
};

Subgroup trivial_subgroup();

// Deterministic subgroup of order t: the unique one for cyclic groups, the
// lexicographically least closed subset found by generator search otherwise
// (full backtracking fallback for t <= 16). Throws NoSubgroup if none.
Subgroup subgroup_of_order(const FiniteGroup& g, int t);

// Left cosets x+J in deterministic order; part 0 is J itself.
std::vector<std::vector<Elem>> coset_partition(const FiniteGroup& g, const Subgroup& j);

// Index of the coset of x within coset_partition's ordering.
std::vector<int> coset_index_map(const FiniteGroup& g, const Subgroup& j);

// x, y in G\J with x+y != y+x and y not in {x, -x}; nullopt for abelian G.
std::optional<std::pair<Elem, Elem>> find_noncommuting_pair(const FiniteGroup& g, const Subgroup& j);

// some x in G\J with x != -x, or nullopt if every element of G\J is an involution
std::optional<Elem> find_noninvolution(const FiniteGroup& g, const Subgroup& j);

// complement G\J in ascending index order
std::vector<Elem> complement_of(const FiniteGroup& g, const Subgroup& j);

} // namespace nzsh
