#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "tga/errors.hpp"

namespace tga {

// Raw description of a finite groupoid: element ids, declared units, range and
// source assignments, and the list of composition triples a*b = c.
struct GroupoidSpec {
    std::vector<std::string> elements;
    std::vector<std::string> units;
    std::map<std::string, std::string> range;
    std::map<std::string, std::string> source;
    std::vector<std::array<std::string, 3>> compose;
};

// A validated finite groupoid with discrete topology. Elements are indexed
// 0..n-1 in lexicographic id order; that order fixes every matrix basis
// downstream. Immutable after construction.
class FiniteGroupoid {
public:
    int size() const { return static_cast<int>(ids_.size()); }
    const std::vector<std::string>& ids() const { return ids_; }
    const std::string& id(int e) const { return ids_[e]; }
    int index_of(const std::string& id) const; // throws UnknownElement

    bool is_unit(int e) const { return is_unit_[e] != 0; }
    const std::vector<int>& units() const { return units_; }
    int range(int e) const { return range_[e]; }
    int source(int e) const { return source_[e]; }
    int inverse(int e) const { return inverse_[e]; }

    bool composable(int a, int b) const { return source_[a] == range_[b]; }
    // product a*b; throws NonComposable if source(a) != range(b)
    int compose(int a, int b) const;

    // source fiber G_u = { e : source(e) = u }, in canonical element order
    const std::vector<int>& source_fiber(int u) const; // throws UnknownUnit

    friend FiniteGroupoid build_groupoid(const GroupoidSpec& spec);

private:
    std::vector<std::string> ids_;
    std::map<std::string, int> index_;
    std::vector<int> range_, source_, inverse_;
    std::vector<char> is_unit_;
    std::vector<int> units_;
    std::vector<int> table_; // n*n, -1 where not composable
    std::map<int, std::vector<int>> fibers_;
};

// A subset of a parent groupoid closed under composition and inverse.
struct SubGroupoid {
    const FiniteGroupoid* parent = nullptr;
    std::vector<char> member; // indexed by parent element
    std::vector<int> members; // canonical order

    bool contains(int e) const { return member[e] != 0; }
};

// Validates every groupoid axiom exhaustively and returns the groupoid.
FiniteGroupoid build_groupoid(const GroupoidSpec& spec);

// Iso(G) = { g : range(g) = source(g) }.
SubGroupoid isotropy(const FiniteGroupoid& g);

// Topological interior of Iso(G). The topology is discrete, so this equals
// isotropy(g); the operation exists so downstream formulas can be stated
// against the interior, as in the general theory.
SubGroupoid interior_isotropy(const FiniteGroupoid& g);

// The isotropy group at u as a one-unit groupoid, together with the map from
// its element indices back to parent indices.
struct IsotropyGroup {
    FiniteGroupoid group;
    std::vector<int> to_parent; // group element index -> parent element index
};
IsotropyGroup isotropy_group(const FiniteGroupoid& g, int unit);

// Orbit partition of the unit space; parts are sorted canonically.
std::vector<std::vector<int>> orbits(const FiniteGroupoid& g);

bool is_minimal(const FiniteGroupoid& g);
bool is_effective(const FiniteGroupoid& g);

// Checks that the subset is closed under compose/inverse and contains the
// units touched by its elements; throws NotASubgroupoid otherwise.
SubGroupoid make_subgroupoid(const FiniteGroupoid& g, const std::vector<int>& members);

// --- fixture factories -------------------------------------------------

// Pair groupoid on points 1..n, element ids "i.j".
FiniteGroupoid pair_groupoid(int n);

// Principal groupoid of the equivalence relation whose classes are the given
// blocks of point labels; element ids "i.j" for related points.
FiniteGroupoid relation_groupoid(const std::vector<std::vector<int>>& blocks);

// One-unit groupoid from a group multiplication table. table[a][b] gives the
// index of a*b in `labels`. Group axioms are checked; throws BadTable.
FiniteGroupoid group_as_groupoid(const std::vector<std::string>& labels,
                                 const std::vector<std::vector<int>>& table);

// Disjoint union with id prefixes to keep element names unique.
FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b,
                              const std::string& prefix_a = "a.",
                              const std::string& prefix_b = "b.");

// Transformation groupoid of a group action on points 1..num_points.
// action[g][x-1] = g*x; elements are pairs "g.x" with source x and range g*x.
// Throws BadAction if the table is not a genuine action.
FiniteGroupoid transformation_groupoid(const std::vector<std::string>& group_labels,
                                       const std::vector<std::vector<int>>& group_table,
                                       int num_points,
                                       const std::vector<std::vector<int>>& action);

} // namespace tga
