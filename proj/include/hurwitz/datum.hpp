#pragma once

// Hurwitz data: indexed families of (cyclic isotropy subgroup, primitive
// character) pairs carrying a compatible G-action on the index set.
// Characters take values in Z/N written additively, N the ambient group
// order, with an abstract primitive N-th root fixed once as residue 1.

#include <optional>
#include <vector>

#include "hurwitz/group.hpp"
#include "hurwitz/zlin.hpp"

namespace hurwitz {

struct RootCharacter {
    GroupPtr ambient;
    Subgroup support;          // cyclic subgroup the character lives on
    ll modulus = 1;            // N
    std::vector<ll> exponents; // aligned with support.members

    ll value(int element) const;
    bool operator==(const RootCharacter& o) const {
        return support.members == o.support.members && modulus == o.modulus &&
               exponents == o.exponents;
    }
};

// Builds chi with chi(generator) = gen_exponent on the minimal-index
// generator of the support; validates additivity and primitivity.
RootCharacter make_root_character(const GroupPtr& g, const Subgroup& support, ll modulus,
                                  ll gen_exponent);
// Validates an explicitly given exponent table.
RootCharacter make_root_character_table(const GroupPtr& g, const Subgroup& support, ll modulus,
                                        std::vector<ll> exponents);

struct DatumEntry {
    Subgroup isotropy;
    RootCharacter character;
    bool operator==(const DatumEntry& o) const {
        return isotropy.members == o.isotropy.members && character == o.character;
    }
};

struct HurwitzDatum {
    GroupPtr group;
    int quotient_genus = 0;
    std::vector<DatumEntry> entries;
    // action[i][g]: index set carries a right G-action, act(act(i,a),b) = act(i, ab);
    // compatibility reads G(act(i,g)) = g^-1 G(i) g.
    std::vector<std::vector<int>> action;

    int size() const { return int(entries.size()); }
    int act(int i, int g) const { return action[i][g]; }
};

struct ValidityIssue {
    std::string what;
    int index = -1;
    int gamma = -1;
    int element = -1;
};

struct ValidityReport {
    bool valid = true;            // action law, cyclic nontrivial isotropy,
                                  // primitive characters, conjugation compatibility
    bool genus_consistent = true; // the Hurwitz formula yields an integer g >= 0
    std::vector<ValidityIssue> issues;
};

ValidityReport validate_datum(const HurwitzDatum& d);
void require_valid(const HurwitzDatum& d);

// orbits of the index set, each sorted, ordered by minimal element
std::vector<std::vector<int>> index_orbits(const HurwitzDatum& d);
// stabilizer {g : act(i,g) = i}
std::vector<int> index_stabilizer(const HurwitzDatum& d, int i);
// true when every index stabilizer equals its isotropy group (the
// configuration realizable by an actual cover)
bool is_geometric(const HurwitzDatum& d);

long long euler_phi(long long n);

int genus_total(const HurwitzDatum& d);
long long ramification_degree(const HurwitzDatum& d);
bool is_normal_datum(const HurwitzDatum& d);

HurwitzDatum restrict_datum(const HurwitzDatum& d, const Subgroup& h);
HurwitzDatum corestrict_datum(const HurwitzDatum& d, const Subgroup& h);

struct PEtaleReport {
    std::vector<int> indices; // {i : 1 != G_i <= H}
    bool has_point = false;
    // filled when |H| is prime:
    bool prime_case = false;
    bool isotropy_equals_h = false; // G_i = H on all returned indices
    bool p_action_free = false;     // H fixes the indices and P acts freely
};

PEtaleReport p_etale_indices(const HurwitzDatum& d, const Subgroup& h);
bool has_p_etale_point(const HurwitzDatum& d, const Subgroup& h);

HurwitzDatum aut_twist(const HurwitzDatum& d, const GroupMap& psi);

// relabel index i -> sigma[i]
HurwitzDatum relabel_datum(const HurwitzDatum& d, const std::vector<int>& sigma);

// Canonical representative of the class of d under G-equivariant
// relabelings of the index set (lexicographically minimal serialization).
struct DatumClass {
    HurwitzDatum representative;
    std::vector<int> witness; // relabeling from the input to the representative
};

DatumClass datum_class(const HurwitzDatum& d);
bool same_datum_class(const HurwitzDatum& a, const HurwitzDatum& b);
bool datum_equal(const HurwitzDatum& a, const HurwitzDatum& b);

enum class StabilizerMode { Strict, UpToClass };

struct AutStabilizers {
    std::vector<GroupMap> aut_fixing_datum;     // Aut_datum(G)
    std::vector<GroupMap> aut_rel_fixing_datum; // intersection with Aut_{G/H}(G;H)
};

AutStabilizers aut_stabilizers(const HurwitzDatum& d, const Subgroup& h,
                               StabilizerMode mode = StabilizerMode::Strict,
                               const AutBudget& budget = {});

// One transitive piece: index set = right cosets U\..., entry over the coset
// of delta is (delta^-1 C delta, chi o conj_delta).  U must fix (C, chi).
HurwitzDatum make_transitive_datum(const GroupPtr& g, const Subgroup& c, ll gen_exponent,
                                   const Subgroup& stabilizer, int quotient_genus);
// Geometric orbit: stabilizer = C itself.
HurwitzDatum make_orbit_datum(const GroupPtr& g, const Subgroup& c, ll gen_exponent,
                              int quotient_genus);
HurwitzDatum concat_datum(const HurwitzDatum& a, const HurwitzDatum& b);
HurwitzDatum empty_datum(const GroupPtr& g, int quotient_genus);

} // namespace hurwitz
