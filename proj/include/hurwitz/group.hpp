#pragma once

// Finite groups as exact multiplication tables, with the subgroup/quotient/
// automorphism machinery the Hurwitz-data and cohomology layers consume.
// Identity is always element 0; all values are immutable after construction.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/errors.hpp"

namespace hurwitz {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A permutation given as a list of cycles over 1-based points.
using Cycles = std::vector<std::vector<int>>;

class FiniteGroup {
public:
    // Validates the table: identity at 0, Latin square, associativity,
    // two-sided inverses.  Orders above 512 are rejected.
    static GroupPtr from_table(std::vector<std::vector<int>> table,
                               std::vector<std::string> labels = {},
                               std::vector<int> generators = {});

    // Closure of permutation generators (degree <= 16), breadth-first with
    // lexicographic tie-break inside each BFS level.
    static GroupPtr from_permutations(const std::vector<Cycles>& gens);

    int order() const { return order_; }
    int mul(int a, int b) const { return mul_[size_t(a) * order_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int conj(int g, int x) const { return mul(mul(inv(g), x), g); } // g^-1 x g

    int element_order(int a) const;
    bool is_abelian() const;

    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<int>& generators() const { return generators_; }

    std::vector<int> conjugacy_class(int a) const;
    std::vector<std::vector<int>> table() const;

private:
    FiniteGroup() = default;
    int order_ = 0;
    std::vector<int> mul_;
    std::vector<int> inv_;
    std::vector<std::string> labels_;
    std::vector<int> generators_;
};

GroupPtr make_group_from_table(std::vector<std::vector<int>> table,
                               std::vector<std::string> labels = {});
GroupPtr make_group_from_permutations(const std::vector<Cycles>& gens);

GroupPtr cyclic_group(int n);
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);
// <x, y | x^n = 1, y^m = x^s, y^-1 x y = x^t>; requires t^m = 1 and
// s(t-1) = 0 mod n.  Covers dihedral, dicyclic, semidihedral, modular types.
GroupPtr metacyclic_group(int n, int m, int s, int t);

struct Subgroup {
    GroupPtr ambient;
    std::vector<int> members; // sorted, contains 0

    int order() const { return int(members.size()); }
    bool contains(int g) const;
    bool operator==(const Subgroup& o) const { return members == o.members; }
};

// Validates closure under multiplication and inverse.
Subgroup make_subgroup(const GroupPtr& g, std::vector<int> members);
Subgroup subgroup_generated(const GroupPtr& g, const std::vector<int>& gens);
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup full_subgroup(const GroupPtr& g);
Subgroup cyclic_subgroup(const GroupPtr& g, int a);

bool subgroup_is_cyclic(const Subgroup& h);
// smallest-index member generating the cyclic subgroup; throws if none
int cyclic_generator(const Subgroup& h);

// returns a conjugation witness (h, g) with g^-1 h g outside H, if any
std::optional<std::pair<int, int>> normality_witness(const Subgroup& h);
bool is_normal(const Subgroup& h);
bool subgroup_is_abelian(const Subgroup& h);

Subgroup center(const GroupPtr& g);

struct GroupMap {
    GroupPtr domain;
    GroupPtr codomain;
    std::vector<int> image; // image[a] in codomain

    int operator()(int a) const { return image[a]; }
    bool operator==(const GroupMap& o) const { return image == o.image; }
};

GroupMap make_group_map(const GroupPtr& dom, const GroupPtr& cod, std::vector<int> image);
GroupMap identity_map(const GroupPtr& g);
GroupMap compose(const GroupMap& outer, const GroupMap& inner);
GroupMap inverse_automorphism(const GroupMap& psi);
GroupMap inner_automorphism(const GroupPtr& g, int by); // x -> by * x * by^-1
bool is_homomorphism(const GroupMap& f);

struct QuotientData {
    GroupPtr total;     // G
    Subgroup kernel;    // H, normal
    GroupPtr quotient;  // P = G/H
    GroupMap projection;
    std::vector<int> section; // per P-element the minimal-index coset representative
};

// Throws validation_error carrying a conjugation witness if H is not normal.
QuotientData quotient(const GroupPtr& g, const Subgroup& h);

// Subgroup reindexed as a standalone group, with the index dictionary.
struct SubgroupAsGroup {
    GroupPtr group;
    std::vector<int> to_ambient;   // new index -> ambient index
    std::vector<int> from_ambient; // ambient index -> new index or -1
};
SubgroupAsGroup subgroup_as_group(const Subgroup& h);

struct AutBudget {
    long long max_candidates = 40'000'000;
    long long max_results = 1'000'000;
};

// All automorphisms, ordered lexicographically by image array.
// Generator-image backtracking with order matching; |G| <= 64.
std::vector<GroupMap> automorphisms(const GroupPtr& g, const AutBudget& budget = {});

// Deterministic irredundant generating sequence (greedy by index).
std::vector<int> generating_sequence(const GroupPtr& g);

// Backtracking search for an isomorphism between two groups.
std::optional<GroupMap> find_isomorphism(const GroupPtr& a, const GroupPtr& b,
                                         const AutBudget& budget = {});

struct RelativeAutData {
    QuotientData quot;
    std::vector<GroupMap> aut_g;          // Aut(G)
    std::vector<GroupMap> aut_g_h;        // Aut(G; H): psi(H) = H
    std::vector<GroupMap> aut_rel;        // Aut_{G/H}(G; H): identity on G/H
    std::vector<GroupMap> aut_h;          // Aut(H)
    std::vector<GroupMap> aut_p;          // Aut(G/H)
    std::vector<int> restriction_to_h;    // aut_rel index -> aut_h index
    std::vector<int> induced_on_quotient; // aut_g_h index -> aut_p index
    bool kernel_is_aut_rel = false;       // ker(Aut(G;H) -> Aut(G/H)) == Aut_{G/H}(G;H)
};

RelativeAutData aut_relative(const GroupPtr& g, const Subgroup& h, const AutBudget& budget = {});

std::vector<Subgroup> all_subgroups(const GroupPtr& g);

} // namespace hurwitz
