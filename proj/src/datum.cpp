#include "hurwitz/datum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace hurwitz {

ll RootCharacter::value(int element) const {
    auto it = std::lower_bound(support.members.begin(), support.members.end(), element);
    if (it == support.members.end() || *it != element)
        throw validation_error("character evaluated outside its support");
    return exponents[it - support.members.begin()];
}

namespace {

void check_character(const RootCharacter& chi) {
    const auto& g = chi.ambient;
    const auto& mem = chi.support.members;
    if (!subgroup_is_cyclic(chi.support))
        throw validation_error("character support is not cyclic");
    if (chi.modulus < 1) throw validation_error("character modulus must be positive");
    if (chi.exponents.size() != mem.size())
        throw validation_error("character exponent table length mismatch");
    for (ll e : chi.exponents)
        if (e < 0 || e >= chi.modulus) throw validation_error("character exponent out of range");
    for (int a : mem)
        for (int b : mem)
            if (pos_mod(chi.value(a) + chi.value(b), chi.modulus) != chi.value(g->mul(a, b)))
                throw validation_error("character is not additive");
    // primitive: the generator exponent has additive order |C| in Z/N
    int gen = cyclic_generator(chi.support);
    ll e = chi.value(gen);
    ll c = chi.support.order();
    if (chi.modulus % c != 0 || chi.modulus / std::gcd(e, chi.modulus) != c)
        throw validation_error("character is not primitive");
}

} // namespace

RootCharacter make_root_character(const GroupPtr& g, const Subgroup& support, ll modulus,
                                  ll gen_exponent) {
    int gen = cyclic_generator(support);
    std::vector<ll> exps(support.members.size(), 0);
    int x = 0;
    ll e = 0;
    do {
        auto it = std::lower_bound(support.members.begin(), support.members.end(), x);
        exps[it - support.members.begin()] = pos_mod(e, modulus);
        x = g->mul(x, gen);
        e += gen_exponent;
    } while (x != 0);
    RootCharacter chi{g, support, modulus, std::move(exps)};
    check_character(chi);
    return chi;
}

RootCharacter make_root_character_table(const GroupPtr& g, const Subgroup& support, ll modulus,
                                        std::vector<ll> exponents) {
    RootCharacter chi{g, support, modulus, std::move(exponents)};
    check_character(chi);
    return chi;
}

ValidityReport validate_datum(const HurwitzDatum& d) {
    ValidityReport rep;
    auto fail = [&](std::string what, int i = -1, int gamma = -1, int h = -1) {
        rep.valid = false;
        rep.issues.push_back(ValidityIssue{std::move(what), i, gamma, h});
    };
    const auto& g = d.group;
    const int n = g->order();
    const int m = d.size();
    if (int(d.action.size()) != m) {
        fail("action table size does not match index count");
        return rep;
    }
    for (int i = 0; i < m; ++i) {
        if (int(d.action[i].size()) != n) {
            fail("action table row length mismatch", i);
            return rep;
        }
        for (int a = 0; a < n; ++a)
            if (d.action[i][a] < 0 || d.action[i][a] >= m) {
                fail("action table entry out of range", i, a);
                return rep;
            }
    }
    for (int i = 0; i < m; ++i)
        if (d.act(i, 0) != i) fail("identity does not fix the index set", i, 0);
    for (int i = 0; i < m; ++i)
        for (int a = 0; a < n && rep.valid; ++a)
            for (int b = 0; b < n; ++b)
                if (d.act(d.act(i, a), b) != d.act(i, g->mul(a, b))) {
                    fail("index action violates the composition law", i, a, b);
                    break;
                }
    if (!rep.valid) return rep;

    for (int i = 0; i < m; ++i) {
        const auto& e = d.entries[i];
        if (e.isotropy.order() <= 1) fail("isotropy group is trivial", i);
        if (!subgroup_is_cyclic(e.isotropy)) fail("isotropy group is not cyclic", i);
        if (e.character.modulus != n) fail("character modulus differs from the group order", i);
        if (e.character.support.members != e.isotropy.members)
            fail("character support differs from the isotropy group", i);
        try {
            check_character(e.character);
        } catch (const validation_error&) {
            fail("character fails additivity or primitivity", i);
        }
    }
    if (!rep.valid) return rep;

    // compatibility: G(act(i,g)) = g^-1 G(i) g and chi_{act(i,g)}(g^-1 h g) = chi_i(h)
    for (int i = 0; i < m; ++i)
        for (int a = 0; a < n; ++a) {
            int j = d.act(i, a);
            std::vector<int> conj;
            conj.reserve(d.entries[i].isotropy.members.size());
            for (int x : d.entries[i].isotropy.members) conj.push_back(g->conj(a, x));
            std::sort(conj.begin(), conj.end());
            if (conj != d.entries[j].isotropy.members) {
                fail("conjugated isotropy group mismatch", i, a);
                continue;
            }
            for (int x : d.entries[i].isotropy.members)
                if (d.entries[j].character.value(g->conj(a, x)) != d.entries[i].character.value(x)) {
                    fail("conjugated character mismatch", i, a, x);
                    break;
                }
        }
    if (!rep.valid) return rep;

    // Riemann-Hurwitz integrality is tracked separately: the compatibility
    // equations can hold while no genus fits
    ll rhs = ll(n) * (2LL * d.quotient_genus - 2);
    for (const auto& e : d.entries) rhs += e.isotropy.order() - 1;
    if (rhs % 2 != 0 || rhs + 2 < 0) {
        rep.genus_consistent = false;
        rep.issues.push_back(ValidityIssue{"Hurwitz formula yields no admissible genus"});
    }
    return rep;
}

void require_valid(const HurwitzDatum& d) {
    auto rep = validate_datum(d);
    if (!rep.valid || !rep.genus_consistent) {
        std::string msg = "invalid Hurwitz datum";
        if (!rep.issues.empty()) msg += ": " + rep.issues.front().what;
        throw validation_error(msg);
    }
}

std::vector<std::vector<int>> index_orbits(const HurwitzDatum& d) {
    std::vector<bool> seen(d.size(), false);
    std::vector<std::vector<int>> orbits;
    for (int i = 0; i < d.size(); ++i) {
        if (seen[i]) continue;
        std::set<int> orbit;
        for (int a = 0; a < d.group->order(); ++a) orbit.insert(d.act(i, a));
        std::vector<int> o(orbit.begin(), orbit.end());
        for (int x : o) seen[x] = true;
        orbits.push_back(std::move(o));
    }
    return orbits;
}

std::vector<int> index_stabilizer(const HurwitzDatum& d, int i) {
    std::vector<int> stab;
    for (int a = 0; a < d.group->order(); ++a)
        if (d.act(i, a) == i) stab.push_back(a);
    return stab;
}

bool is_geometric(const HurwitzDatum& d) {
    for (int i = 0; i < d.size(); ++i)
        if (index_stabilizer(d, i) != d.entries[i].isotropy.members) return false;
    return true;
}

long long euler_phi(long long n) {
    long long result = n, p = 2;
    while (p * p <= n) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
        ++p;
    }
    if (n > 1) result -= result / n;
    return result;
}

int genus_total(const HurwitzDatum& d) {
    ll rhs = ll(d.group->order()) * (2LL * d.quotient_genus - 2);
    for (const auto& e : d.entries) rhs += e.isotropy.order() - 1;
    if (rhs % 2 != 0)
        throw validation_error("Hurwitz formula gives a non-integral genus");
    ll g = (rhs + 2) / 2;
    if (g < 0) throw validation_error("Hurwitz formula gives a negative genus");
    return int(g);
}

long long ramification_degree(const HurwitzDatum& d) {
    ll total = 0;
    for (const auto& e : d.entries) total += euler_phi(e.isotropy.order());
    return total;
}

bool is_normal_datum(const HurwitzDatum& d) {
    for (int i = 0; i < d.size(); ++i)
        for (int a = 0; a < d.group->order(); ++a)
            if (!(d.entries[d.act(i, a)] == d.entries[i])) return false;
    return true;
}

HurwitzDatum restrict_datum(const HurwitzDatum& d, const Subgroup& h) {
    require_valid(d);
    if (!is_normal(h)) throw validation_error("restriction requires a normal subgroup");
    const auto& g = d.group;
    const ll index = g->order() / h.order();

    auto hg = subgroup_as_group(h);
    std::vector<int> j_set;
    for (int i = 0; i < d.size(); ++i) {
        bool meets = false;
        for (int x : d.entries[i].isotropy.members)
            if (x != 0 && h.contains(x)) meets = true;
        if (meets) j_set.push_back(i);
    }
    std::vector<int> pos(d.size(), -1);
    for (size_t k = 0; k < j_set.size(); ++k) pos[j_set[k]] = int(k);

    HurwitzDatum out;
    out.group = hg.group;
    out.entries.reserve(j_set.size());
    out.action.assign(j_set.size(), std::vector<int>(hg.group->order()));
    for (size_t k = 0; k < j_set.size(); ++k) {
        int i = j_set[k];
        std::vector<int> inter;
        for (int x : d.entries[i].isotropy.members)
            if (h.contains(x)) inter.push_back(hg.from_ambient[x]);
        std::sort(inter.begin(), inter.end());
        Subgroup hi = make_subgroup(hg.group, inter);
        std::vector<ll> exps(hi.members.size());
        for (size_t t = 0; t < hi.members.size(); ++t) {
            ll e = d.entries[i].character.value(hg.to_ambient[hi.members[t]]);
            if (e % index != 0)
                throw consistency_error("character restriction does not rescale exactly");
            exps[t] = pos_mod(e / index, h.order());
        }
        out.entries.push_back(
            DatumEntry{hi, make_root_character_table(hg.group, hi, h.order(), std::move(exps))});
        for (int a = 0; a < hg.group->order(); ++a) {
            int target = d.act(i, hg.to_ambient[a]);
            if (pos[target] < 0)
                throw consistency_error("restricted index set is not closed under the subgroup");
            out.action[k][a] = pos[target];
        }
    }

    // quotient genus of the restricted cover keeps the same total genus
    ll two_g_minus_2 = ll(g->order()) * (2LL * d.quotient_genus - 2);
    for (const auto& e : d.entries) two_g_minus_2 += e.isotropy.order() - 1;
    ll sum_h = 0;
    for (const auto& e : out.entries) sum_h += e.isotropy.order() - 1;
    ll num = two_g_minus_2 - sum_h;
    if (num % h.order() != 0)
        throw consistency_error("restricted datum has no consistent quotient genus");
    ll two_gc_minus_2 = num / h.order();
    if ((two_gc_minus_2 + 2) % 2 != 0 || two_gc_minus_2 + 2 < 0)
        throw consistency_error("restricted datum has no consistent quotient genus");
    out.quotient_genus = int((two_gc_minus_2 + 2) / 2);
    return out;
}

HurwitzDatum corestrict_datum(const HurwitzDatum& d, const Subgroup& h) {
    require_valid(d);
    if (!is_normal(h)) throw validation_error("corestriction requires a normal subgroup");
    const auto& g = d.group;
    auto q = quotient(g, h);
    const auto& p = q.quotient;

    // indices kept: isotropy not contained in H; collapse H-orbits
    std::vector<int> keep(d.size(), 0);
    for (int i = 0; i < d.size(); ++i) {
        for (int x : d.entries[i].isotropy.members)
            if (!h.contains(x)) keep[i] = 1;
    }
    std::vector<int> h_orbit_rep(d.size(), -1);
    for (int i = 0; i < d.size(); ++i) {
        if (!keep[i] || h_orbit_rep[i] != -1) continue;
        std::set<int> orbit;
        for (int x : h.members) orbit.insert(d.act(i, x));
        int rep = *orbit.begin();
        for (int j : orbit) h_orbit_rep[j] = rep;
    }
    std::vector<int> reps;
    for (int i = 0; i < d.size(); ++i)
        if (keep[i] && h_orbit_rep[i] == i) reps.push_back(i);
    std::vector<int> pos(d.size(), -1);
    for (size_t k = 0; k < reps.size(); ++k) pos[reps[k]] = int(k);

    HurwitzDatum out;
    out.group = p;
    out.action.assign(reps.size(), std::vector<int>(p->order()));
    for (size_t k = 0; k < reps.size(); ++k) {
        int i = reps[k];
        const auto& gi = d.entries[i].isotropy;
        ll m_h = 0;
        std::set<int> image;
        for (int x : gi.members) {
            if (h.contains(x)) ++m_h;
            image.insert(q.projection(x));
        }
        Subgroup pi = make_subgroup(p, std::vector<int>(image.begin(), image.end()));
        std::vector<ll> exps(pi.members.size());
        for (size_t t = 0; t < pi.members.size(); ++t) {
            int target = pi.members[t];
            int pre = -1;
            for (int x : gi.members)
                if (q.projection(x) == target) {
                    pre = x;
                    break;
                }
            ll num = d.entries[i].character.value(pre) * m_h;
            if (num % h.order() != 0)
                throw consistency_error("character corestriction does not rescale exactly");
            exps[t] = pos_mod(num / h.order(), p->order());
        }
        out.entries.push_back(
            DatumEntry{pi, make_root_character_table(p, pi, p->order(), std::move(exps))});
        for (int a = 0; a < p->order(); ++a) {
            int target = h_orbit_rep[d.act(i, q.section[a])];
            if (target < 0 || pos[target] < 0)
                throw consistency_error("corestricted index set is not closed");
            out.action[k][a] = pos[target];
        }
    }

    // genus bookkeeping: the corestricted datum describes C = E/H over D
    ll two_g_minus_2 = ll(g->order()) * (2LL * d.quotient_genus - 2);
    for (const auto& e : d.entries) two_g_minus_2 += e.isotropy.order() - 1;
    ll sum_res = 0;
    for (int i = 0; i < d.size(); ++i) {
        ll inter = 0;
        for (int x : d.entries[i].isotropy.members)
            if (h.contains(x)) ++inter;
        sum_res += inter - 1;
    }
    if ((two_g_minus_2 - sum_res) % h.order() != 0)
        throw consistency_error("corestriction genus bookkeeping failed");
    ll two_gc_minus_2 = (two_g_minus_2 - sum_res) / h.order();
    ll sum_p = 0;
    for (const auto& e : out.entries) sum_p += e.isotropy.order() - 1;
    ll num = two_gc_minus_2 - sum_p;
    if (num % p->order() != 0)
        throw consistency_error("corestriction genus bookkeeping failed");
    ll two_gp_minus_2 = num / p->order();
    if ((two_gp_minus_2 + 2) % 2 != 0 || two_gp_minus_2 + 2 < 0)
        throw consistency_error("corestriction genus bookkeeping failed");
    out.quotient_genus = int((two_gp_minus_2 + 2) / 2);
    return out;
}

PEtaleReport p_etale_indices(const HurwitzDatum& d, const Subgroup& h) {
    PEtaleReport rep;
    for (int i = 0; i < d.size(); ++i) {
        bool inside = true;
        for (int x : d.entries[i].isotropy.members)
            if (!h.contains(x)) inside = false;
        if (inside && d.entries[i].isotropy.order() > 1) rep.indices.push_back(i);
    }
    rep.has_point = !rep.indices.empty();

    // prime order: the contained isotropy groups must be H itself, and the
    // action on these indices must factor through a free P-action
    ll ph = h.order();
    bool prime = ph > 1;
    for (ll t = 2; t * t <= ph; ++t)
        if (ph % t == 0) prime = false;
    rep.prime_case = prime;
    if (prime) {
        rep.isotropy_equals_h = true;
        rep.p_action_free = true;
        for (int i : rep.indices) {
            if (d.entries[i].isotropy.members != h.members) rep.isotropy_equals_h = false;
            if (index_stabilizer(d, i) != h.members) rep.p_action_free = false;
        }
    }
    return rep;
}

bool has_p_etale_point(const HurwitzDatum& d, const Subgroup& h) {
    return p_etale_indices(d, h).has_point;
}

HurwitzDatum aut_twist(const HurwitzDatum& d, const GroupMap& psi) {
    if (psi.domain.get() != d.group.get() || psi.codomain.get() != d.group.get())
        throw validation_error("twisting automorphism must live on the datum's group");
    if (!is_homomorphism(psi)) throw validation_error("twist by a non-homomorphism");
    GroupMap inv = inverse_automorphism(psi);
    const auto& g = d.group;

    HurwitzDatum out;
    out.group = g;
    out.quotient_genus = d.quotient_genus;
    out.action.assign(d.size(), std::vector<int>(g->order()));
    for (int i = 0; i < d.size(); ++i) {
        std::vector<int> mem;
        for (int x : d.entries[i].isotropy.members) mem.push_back(psi(x));
        std::sort(mem.begin(), mem.end());
        Subgroup gi = make_subgroup(g, mem);
        std::vector<ll> exps(gi.members.size());
        for (size_t t = 0; t < gi.members.size(); ++t)
            exps[t] = d.entries[i].character.value(inv(gi.members[t]));
        out.entries.push_back(DatumEntry{
            gi, make_root_character_table(g, gi, d.entries[i].character.modulus, std::move(exps))});
        for (int a = 0; a < g->order(); ++a) out.action[i][a] = d.act(i, inv(a));
    }
    return out;
}

HurwitzDatum relabel_datum(const HurwitzDatum& d, const std::vector<int>& sigma) {
    HurwitzDatum out;
    out.group = d.group;
    out.quotient_genus = d.quotient_genus;
    out.entries.resize(d.size());
    out.action.assign(d.size(), std::vector<int>(d.group->order()));
    for (int i = 0; i < d.size(); ++i) {
        out.entries[sigma[i]] = d.entries[i];
        for (int a = 0; a < d.group->order(); ++a) out.action[sigma[i]][a] = sigma[d.act(i, a)];
    }
    return out;
}

namespace {

std::vector<ll> datum_key(const HurwitzDatum& d) {
    std::vector<ll> key;
    key.push_back(d.quotient_genus);
    for (const auto& e : d.entries) {
        key.push_back(-1);
        for (int x : e.isotropy.members) key.push_back(x);
        key.push_back(-2);
        for (ll v : e.character.exponents) key.push_back(v);
    }
    key.push_back(-3);
    for (const auto& row : d.action)
        for (int v : row) key.push_back(v);
    return key;
}

} // namespace

bool datum_equal(const HurwitzDatum& a, const HurwitzDatum& b) {
    return a.group.get() == b.group.get() && datum_key(a) == datum_key(b);
}

DatumClass datum_class(const HurwitzDatum& d) {
    const int m = d.size();
    if (m > 8) throw budget_error("datum class canonicalization limited to 8 indices");
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best_perm = perm;
    std::vector<ll> best_key = datum_key(d);
    std::vector<int> sigma(m);
    do {
        for (int i = 0; i < m; ++i) sigma[i] = perm[i];
        HurwitzDatum r = relabel_datum(d, sigma);
        auto key = datum_key(r);
        if (key < best_key) {
            best_key = key;
            best_perm = sigma;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return DatumClass{relabel_datum(d, best_perm), best_perm};
}

bool same_datum_class(const HurwitzDatum& a, const HurwitzDatum& b) {
    if (a.group.get() != b.group.get() || a.size() != b.size()) return false;
    if (a.quotient_genus != b.quotient_genus) return false;
    return datum_key(datum_class(a).representative) == datum_key(datum_class(b).representative);
}

AutStabilizers aut_stabilizers(const HurwitzDatum& d, const Subgroup& h, StabilizerMode mode,
                               const AutBudget& budget) {
    require_valid(d);
    AutStabilizers out;
    auto rel = aut_relative(d.group, h, budget);
    auto fixes = [&](const GroupMap& psi) {
        HurwitzDatum t = aut_twist(d, psi);
        if (mode == StabilizerMode::Strict) return datum_equal(t, d);
        return same_datum_class(t, d);
    };
    for (const auto& psi : rel.aut_g)
        if (fixes(psi)) out.aut_fixing_datum.push_back(psi);
    for (const auto& psi : rel.aut_rel)
        if (fixes(psi)) out.aut_rel_fixing_datum.push_back(psi);
    return out;
}

HurwitzDatum make_transitive_datum(const GroupPtr& g, const Subgroup& c, ll gen_exponent,
                                   const Subgroup& stabilizer, int quotient_genus) {
    if (c.order() <= 1) throw validation_error("isotropy group must be nontrivial");
    RootCharacter chi = make_root_character(g, c, g->order(), gen_exponent);
    // the stabilizer must fix (C, chi) under conjugation
    for (int u : stabilizer.members) {
        std::vector<int> conj;
        for (int x : c.members) conj.push_back(g->mul(g->mul(u, x), g->inv(u)));
        std::sort(conj.begin(), conj.end());
        if (conj != c.members)
            throw validation_error("piece stabilizer does not normalize the isotropy group");
        for (int x : c.members)
            if (chi.value(g->mul(g->mul(u, x), g->inv(u))) != chi.value(x))
                throw validation_error("piece stabilizer does not fix the character");
    }

    // right cosets U\G, labeled by minimal members
    const int n = g->order();
    std::vector<int> coset_min(n, -1);
    for (int a = 0; a < n; ++a) {
        if (coset_min[a] != -1) continue;
        std::vector<int> coset;
        for (int u : stabilizer.members) coset.push_back(g->mul(u, a));
        int mn = *std::min_element(coset.begin(), coset.end());
        for (int x : coset) coset_min[x] = mn;
    }
    std::vector<int> reps;
    for (int a = 0; a < n; ++a)
        if (coset_min[a] == a) reps.push_back(a);
    std::vector<int> rep_pos(n, -1);
    for (size_t k = 0; k < reps.size(); ++k) rep_pos[reps[k]] = int(k);

    HurwitzDatum d;
    d.group = g;
    d.quotient_genus = quotient_genus;
    d.action.assign(reps.size(), std::vector<int>(n));
    for (size_t k = 0; k < reps.size(); ++k) {
        int delta = reps[k];
        std::vector<int> mem;
        for (int x : c.members) mem.push_back(g->conj(delta, x)); // delta^-1 x delta
        std::sort(mem.begin(), mem.end());
        Subgroup gi = make_subgroup(g, mem);
        std::vector<ll> exps(gi.members.size());
        for (size_t t = 0; t < gi.members.size(); ++t) {
            int y = gi.members[t]; // y = delta^-1 x delta; chi_i(y) = chi(delta y delta^-1)
            int x = g->mul(g->mul(delta, y), g->inv(delta));
            exps[t] = chi.value(x);
        }
        d.entries.push_back(
            DatumEntry{gi, make_root_character_table(g, gi, g->order(), std::move(exps))});
        for (int a = 0; a < n; ++a) d.action[k][a] = rep_pos[coset_min[g->mul(delta, a)]];
    }
    return d;
}

HurwitzDatum make_orbit_datum(const GroupPtr& g, const Subgroup& c, ll gen_exponent,
                              int quotient_genus) {
    return make_transitive_datum(g, c, gen_exponent, c, quotient_genus);
}

HurwitzDatum concat_datum(const HurwitzDatum& a, const HurwitzDatum& b) {
    if (a.group.get() != b.group.get())
        throw validation_error("concatenated data must share a group");
    if (a.quotient_genus != b.quotient_genus)
        throw validation_error("concatenated data must share the quotient genus");
    HurwitzDatum out = a;
    for (int i = 0; i < b.size(); ++i) {
        out.entries.push_back(b.entries[i]);
        std::vector<int> row(b.group->order());
        for (int g = 0; g < b.group->order(); ++g) row[g] = a.size() + b.act(i, g);
        out.action.push_back(std::move(row));
    }
    return out;
}

HurwitzDatum empty_datum(const GroupPtr& g, int quotient_genus) {
    HurwitzDatum d;
    d.group = g;
    d.quotient_genus = quotient_genus;
    return d;
}

} // namespace hurwitz
