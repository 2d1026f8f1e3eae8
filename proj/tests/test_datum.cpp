#include "doctest.h"

#include <numeric>

#include "hurwitz/datum.hpp"

using namespace hurwitz;

namespace {

GroupPtr s3() { return make_group_from_permutations({{{1, 2}}, {{1, 2, 3}}}); }

Subgroup transposition_subgroup(const GroupPtr& g) {
    for (int i = 1; i < g->order(); ++i)
        if (g->element_order(i) == 2) return cyclic_subgroup(g, i);
    throw std::logic_error("no involution");
}

Subgroup three_cycle_subgroup(const GroupPtr& g) {
    for (int i = 1; i < g->order(); ++i)
        if (g->element_order(i) == 3) return cyclic_subgroup(g, i);
    throw std::logic_error("no 3-cycle");
}

// Z/2 datum with k order-2 points over genus-0
HurwitzDatum z2_datum(int k) {
    auto g = cyclic_group(2);
    auto d = empty_datum(g, 0);
    auto piece = make_orbit_datum(g, full_subgroup(g), 1, 0);
    for (int i = 0; i < k; ++i) d = concat_datum(d, piece);
    return d;
}

// the S3 example: a transposition orbits + b three-cycle orbits
HurwitzDatum s3_datum(const GroupPtr& g, int a, int b, ll exp3 = 2) {
    auto d = empty_datum(g, 0);
    auto t = make_orbit_datum(g, transposition_subgroup(g), 3, 0); // exponent 3 = N/2
    for (int i = 0; i < a; ++i) d = concat_datum(d, t);
    auto u = make_orbit_datum(g, three_cycle_subgroup(g), exp3, 0); // additive order 3 mod 6
    for (int i = 0; i < b; ++i) d = concat_datum(d, u);
    return d;
}

} // namespace

TEST_CASE("root characters: primitivity enforced") {
    auto g = cyclic_group(4);
    auto c = full_subgroup(g);
    CHECK_NOTHROW(make_root_character(g, c, 4, 1));
    CHECK_NOTHROW(make_root_character(g, c, 4, 3));
    CHECK_THROWS_AS(make_root_character(g, c, 4, 2), validation_error); // order 2, not 4
    auto h = make_subgroup(g, {0, 2});
    CHECK_NOTHROW(make_root_character(g, h, 4, 2));
    CHECK_THROWS_AS(make_root_character(g, h, 4, 1), validation_error); // |C| must divide orders
}

TEST_CASE("validate: S3 transposition orbit is a valid datum") {
    auto g = s3();
    auto d = make_orbit_datum(g, transposition_subgroup(g), 3, 0);
    CHECK(d.size() == 3); // three conjugate transposition subgroups
    auto rep = validate_datum(d);
    CHECK(rep.valid);
    CHECK_FALSE(rep.genus_consistent); // 2g-2 = -12 + 3 is odd
    CHECK(is_geometric(d));

    // breaking one character gives an invalid datum with a witness
    HurwitzDatum bad = d;
    // swap the character exponents on index 0's two nontrivial slots? order 2
    // subgroups carry a unique character, so instead move index 1's entry to index 0
    bad.entries[0] = d.entries[1];
    auto rep2 = validate_datum(bad);
    CHECK_FALSE(rep2.valid);
    CHECK_FALSE(rep2.issues.empty());
}

TEST_CASE("validate: abelian datum with per-orbit constant entries") {
    auto g = cyclic_group(4);
    auto d = concat_datum(concat_datum(make_orbit_datum(g, full_subgroup(g), 1, 0),
                                       make_orbit_datum(g, full_subgroup(g), 1, 0)),
                          make_orbit_datum(g, make_subgroup(g, {0, 2}), 2, 0));
    auto rep = validate_datum(d);
    CHECK(rep.valid);
    CHECK(rep.genus_consistent); // 2g-2 = -8 + 3 + 3 + 2
}

TEST_CASE("genus_total matches the Hurwitz formula examples") {
    CHECK(genus_total(z2_datum(6)) == 2);

    auto g = s3();
    auto d = s3_datum(g, 2, 1);
    REQUIRE(validate_datum(d).valid);
    CHECK(d.size() == 8); // 3 + 3 + 2 indices
    CHECK(genus_total(d) == 0); // 2g-2 = -12 + 10

    auto e = empty_datum(cyclic_group(3), 1);
    CHECK(genus_total(e) == 1); // 2g-2 = 3*(0)
    auto e0 = empty_datum(cyclic_group(3), 0);
    CHECK_THROWS_AS(genus_total(e0), validation_error); // negative genus
}

TEST_CASE("ramification_degree via the Euler function") {
    CHECK(ramification_degree(z2_datum(6)) == 6);
    auto g = s3();
    auto u = make_orbit_datum(g, three_cycle_subgroup(g), 2, 0);
    CHECK(ramification_degree(u) == 4); // two indices, phi(3) = 2 each
    CHECK(ramification_degree(empty_datum(g, 0)) == 0);
}

TEST_CASE("normality: abelian always, conjugate transpositions never, central implies") {
    auto z4 = cyclic_group(4);
    auto d1 = concat_datum(make_orbit_datum(z4, full_subgroup(z4), 1, 0),
                           make_orbit_datum(z4, make_subgroup(z4, {0, 2}), 2, 0));
    CHECK(validate_datum(d1).valid);
    CHECK(is_normal_datum(d1));

    auto g = s3();
    CHECK_FALSE(is_normal_datum(make_orbit_datum(g, transposition_subgroup(g), 3, 0)));

    // central isotropy in D4: the center is of order 2
    auto d4 = metacyclic_group(4, 2, 0, 3);
    auto z = center(d4);
    REQUIRE(z.order() == 2);
    auto dz = make_orbit_datum(d4, z, 4, 0); // exponent N/2 = 4
    CHECK(validate_datum(dz).valid);
    CHECK(is_normal_datum(dz));
}

TEST_CASE("restrict: Z/6 full-isotropy point to Z/3") {
    auto g = cyclic_group(6);
    auto d = concat_datum(make_orbit_datum(g, full_subgroup(g), 1, 0),
                          make_orbit_datum(g, full_subgroup(g), 5, 0));
    REQUIRE(validate_datum(d).valid);
    auto h = make_subgroup(g, {0, 2, 4});
    auto r = restrict_datum(d, h);
    CHECK(r.group->order() == 3);
    REQUIRE(r.size() == 2);
    CHECK(r.entries[0].isotropy.order() == 3);
    // zeta_6^2 = zeta_3: generator exponent 1 mod 6 restricts to 1 mod 3
    int gen = cyclic_generator(r.entries[0].isotropy);
    CHECK(r.entries[0].character.value(gen) == 1);
    CHECK(validate_datum(r).valid);
    CHECK(genus_total(r) == genus_total(d));
}

TEST_CASE("restrict: etale cases") {
    auto g = s3();
    auto d = make_orbit_datum(g, transposition_subgroup(g), 3, 0);
    auto d2 = concat_datum(concat_datum(d, d), concat_datum(d, d)); // g = 1
    std::vector<int> a3;
    for (int i = 0; i < 6; ++i)
        if (g->element_order(i) != 2) a3.push_back(i);
    auto h = make_subgroup(g, a3);
    auto r = restrict_datum(d2, h);
    CHECK(r.size() == 0); // transpositions meet A3 trivially

    auto rg = restrict_datum(d2, full_subgroup(g));
    CHECK(rg.size() == d2.size());
    CHECK(genus_total(rg) == genus_total(d2));
    CHECK(rg.quotient_genus == d2.quotient_genus);
}

TEST_CASE("corestrict: Z/6 to P = Z/2") {
    auto g = cyclic_group(6);
    auto d = concat_datum(make_orbit_datum(g, full_subgroup(g), 1, 0),
                          make_orbit_datum(g, full_subgroup(g), 5, 0));
    auto h = make_subgroup(g, {0, 2, 4});
    auto c = corestrict_datum(d, h);
    CHECK(c.group->order() == 2);
    REQUIRE(c.size() == 2);
    CHECK(c.entries[0].isotropy.order() == 2);
    CHECK(c.entries[0].character.value(1) == 1); // b = 1*3/3 = 1 mod 2
    CHECK(validate_datum(c).valid);
}

TEST_CASE("corestrict: trivial and full kernels") {
    auto g = s3();
    auto d = s3_datum(g, 2, 1);
    auto c1 = corestrict_datum(d, trivial_subgroup(g));
    CHECK(c1.size() == d.size());
    CHECK(genus_total(c1) == genus_total(d));

    auto cg = corestrict_datum(d, full_subgroup(g));
    CHECK(cg.size() == 0);
    CHECK(cg.group->order() == 1);
    CHECK(cg.quotient_genus == 0);

    // all isotropy inside H: empty corestriction
    auto z4 = cyclic_group(4);
    auto piece = make_orbit_datum(z4, make_subgroup(z4, {0, 2}), 2, 0);
    auto dh = concat_datum(concat_datum(piece, piece), concat_datum(piece, piece)); // g = 1
    auto ch = corestrict_datum(dh, make_subgroup(z4, {0, 2}));
    CHECK(ch.size() == 0);
}

TEST_CASE("corestrict: S3 datum over A3 collapses transposition orbits") {
    auto g = s3();
    auto d = s3_datum(g, 2, 1);
    std::vector<int> a3;
    for (int i = 0; i < 6; ++i)
        if (g->element_order(i) != 2) a3.push_back(i);
    auto h = make_subgroup(g, a3);
    auto c = corestrict_datum(d, h);
    CHECK(c.group->order() == 2);
    CHECK(c.size() == 2); // each transposition orbit collapses to one point of C
    CHECK(validate_datum(c).valid);
    // C = E/A3 has genus 0 here; Hurwitz formula on the P-side must agree
    CHECK(genus_total(c) == 0);
    CHECK(c.quotient_genus == 0);
}

TEST_CASE("p-etale indices and the prime-order checks") {
    auto g = s3();
    std::vector<int> a3;
    for (int i = 0; i < 6; ++i)
        if (g->element_order(i) != 2) a3.push_back(i);
    auto h = make_subgroup(g, a3);

    auto with3 = s3_datum(g, 2, 1);
    auto rep = p_etale_indices(with3, h);
    CHECK(rep.has_point);
    CHECK(rep.indices.size() == 2); // one orbit of two indices
    CHECK(rep.prime_case);
    CHECK(rep.isotropy_equals_h);
    CHECK(rep.p_action_free);

    auto onlyt = s3_datum(g, 2, 0);
    CHECK_FALSE(has_p_etale_point(onlyt, h));

    auto all = p_etale_indices(with3, full_subgroup(g));
    CHECK(int(all.indices.size()) == with3.size());
}

TEST_CASE("aut_twist: identity, inner relabeling, Z/4 inversion") {
    auto g = s3();
    auto d = s3_datum(g, 2, 1);
    CHECK(datum_equal(aut_twist(d, identity_map(g)), d));

    // inner twist lands in the same datum class
    auto inn = inner_automorphism(g, 3);
    auto t = aut_twist(d, inn);
    CHECK(validate_datum(t).valid);
    CHECK(same_datum_class(t, d));

    auto z4 = cyclic_group(4);
    auto dz = make_orbit_datum(z4, full_subgroup(z4), 1, 0);
    auto invmap = automorphisms(z4)[1];
    auto tz = aut_twist(dz, invmap);
    CHECK(tz.entries[0].character.value(1) == 3);
    auto stab = aut_stabilizers(concat_datum(dz, dz), make_subgroup(z4, {0, 2}));
    CHECK(stab.aut_fixing_datum.size() == 1); // inversion moved the character
}

TEST_CASE("aut_twist is a left group action") {
    auto g = s3();
    auto d = s3_datum(g, 2, 1);
    auto auts = automorphisms(g);
    for (const auto& psi : auts)
        for (const auto& phi : auts) {
            auto two_step = aut_twist(aut_twist(d, psi), phi);
            auto one_step = aut_twist(d, compose(phi, psi));
            CHECK(datum_equal(two_step, one_step));
        }
}

TEST_CASE("validity is stable under relabeling by group elements") {
    auto g = s3();
    auto d = s3_datum(g, 2, 1);
    REQUIRE(validate_datum(d).valid);
    for (int gamma = 0; gamma < g->order(); ++gamma) {
        std::vector<int> sigma(d.size());
        for (int i = 0; i < d.size(); ++i) sigma[i] = d.act(i, gamma);
        auto r = relabel_datum(d, sigma);
        CHECK(validate_datum(r).valid);
        CHECK(same_datum_class(r, d));
    }
}

TEST_CASE("restrict/corestrict functoriality in towers") {
    // G = Z/12 > H' = <2> (order 6) > H = <4> (order 3); compare
    // cores by H' with cores by H followed by cores of the image of H'/H
    auto g = cyclic_group(12);
    auto d = concat_datum(make_orbit_datum(g, full_subgroup(g), 1, 0),
                          make_orbit_datum(g, full_subgroup(g), 11, 0));
    REQUIRE(validate_datum(d).valid);
    auto h6 = make_subgroup(g, {0, 2, 4, 6, 8, 10});
    auto h3 = make_subgroup(g, {0, 4, 8});

    auto one_step = corestrict_datum(d, h6);

    auto step1 = corestrict_datum(d, h3); // over Z/4
    auto p = step1.group;
    // image of h6 in P = Z/4
    auto qd = quotient(g, h3);
    std::vector<int> img;
    for (int x : h6.members) img.push_back(qd.projection(x));
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    auto step2 = corestrict_datum(step1, make_subgroup(p, img));

    REQUIRE(one_step.size() == step2.size());
    CHECK(one_step.group->order() == step2.group->order());
    for (int i = 0; i < one_step.size(); ++i) {
        CHECK(one_step.entries[i].isotropy.order() == step2.entries[i].isotropy.order());
        CHECK(one_step.entries[i].character.exponents == step2.entries[i].character.exponents);
    }
    CHECK(one_step.quotient_genus == step2.quotient_genus);
}

TEST_CASE("datum class canonicalization is invariant on relabelings") {
    auto g = s3();
    auto d = s3_datum(g, 2, 1);
    std::vector<int> sigma(d.size());
    std::iota(sigma.begin(), sigma.end(), 0);
    std::rotate(sigma.begin(), sigma.begin() + 1, sigma.end());
    auto r = relabel_datum(d, sigma);
    CHECK(same_datum_class(d, r));
    CHECK(datum_equal(datum_class(d).representative, datum_class(r).representative));
}
