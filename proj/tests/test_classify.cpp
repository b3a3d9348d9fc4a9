#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hk/classify.hpp"
#include "hk/construct.hpp"
#include "hk/core.hpp"
#include "hk/fixtures.hpp"

using namespace hk;

namespace {

TablePtr pxp() {
    static TablePtr t = product(fixtures::p().table, fixtures::p().table, "pxp");
    return t;
}

ElemSet sset(const TablePtr& H, const std::string& s) { return parse_element_list(*H, s); }

// Re-evaluation of a reported witness against the defining condition.
bool prime_witness_violates(const HyperringTable& H, const ElemSet& Q,
                            const std::vector<Elem>& t) {
    if (!Q.contains(H.mul(t))) return false;
    for (Elem e : t)
        if (Q.contains(e)) return false;
    return true;
}

bool positional_witness_violates(const HyperringTable& H, const ElemSet& E,
                                 const Morphism* theta, const ElemSet& target,
                                 const std::vector<Elem>& t, int pos) {
    if (!E.contains(H.mul(t))) return false;
    if (E.contains(t[pos - 1])) return false;
    std::vector<Elem> sub = t;
    sub[pos - 1] = *H.one;
    Elem prod = H.mul(sub);
    if (theta) prod = theta->map[prod];
    return !target.contains(prod);
}

}  // namespace

TEST_CASE("prime") {
    TablePtr s4 = fixtures::s4().table;
    ClassificationVerdict v = is_prime(s4, sset(s4, "0"));
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness.has_value());
    CHECK(prime_witness_violates(*s4, sset(s4, "0"), v.witness->elements));
    // the published violating tuple is genuine too
    std::vector<Elem> published{*s4->index_of("1"), *s4->index_of("2"), *s4->index_of("3"),
                                *s4->index_of("3")};
    CHECK(prime_witness_violates(*s4, sset(s4, "0"), published));

    CHECK(is_prime(s4, sset(s4, "0,1")).holds);
    CHECK_FALSE(is_prime(s4, sset(s4, "0,2")).holds);
    CHECK(is_prime(fixtures::p().table, sset(fixtures::p().table, "0")).holds);
    CHECK_THROWS_AS(is_prime(s4, ElemSet::full(4)), Error);
    CHECK_THROWS_AS(is_prime(s4, sset(s4, "0,3")), Error);  // not even a hyperideal
}

TEST_CASE("primary") {
    TablePtr p = fixtures::p().table;
    CHECK(is_primary(p, sset(p, "0")).holds);
    TablePtr s4 = fixtures::s4().table;
    CHECK(is_primary(s4, sset(s4, "0,2")).holds);

    // zero of the square is the meet of two primes with different
    // radicals, hence not primary: (1,0)*(0,1) = 0 defeats every clause
    ClassificationVerdict v = is_primary(pxp(), sset(pxp(), "(0,0)"));
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness.has_value());
    ElemSet rad = radical(*pxp(), sset(pxp(), "(0,0)"));
    CHECK(rad == sset(pxp(), "(0,0)"));
    CHECK(positional_witness_violates(*pxp(), sset(pxp(), "(0,0)"), nullptr, rad,
                                      v.witness->elements, v.witness->position));

    CHECK(is_primary(pxp(), sset(pxp(), "(0,0),(0,1),(0,u),(0,v),(0,w)")).holds);
    CHECK_THROWS_AS(is_primary(fixtures::s4_no_one().table, sset(fixtures::s4_no_one().table, "0")),
                    Error);
}

TEST_CASE("endo-prime") {
    TablePtr s4 = fixtures::s4().table;
    for (const auto& theta : enumerate_endomorphisms(s4)) {
        CHECK(is_endo_prime(s4, sset(s4, "0"), theta).holds);
        CHECK(is_endo_prime(s4, sset(s4, "0,2"), theta).holds);
    }

    Morphism sw = swap_endo(pxp(), 5);
    ClassificationVerdict v = is_endo_prime(pxp(), sset(pxp(), "(0,0)"), sw);
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness.has_value());
    CHECK(positional_witness_violates(*pxp(), sset(pxp(), "(0,0)"), &sw, sset(pxp(), "(0,0)"),
                                      v.witness->elements, v.witness->position));
    std::vector<Elem> published{*pxp()->index_of("(1,0)"), *pxp()->index_of("(0,1)")};
    CHECK(positional_witness_violates(*pxp(), sset(pxp(), "(0,0)"), &sw, sset(pxp(), "(0,0)"),
                                      published, 1));
    // theta stabilizes the ideal even though the ideal is not endo-prime
    CHECK(sw.image_of(sset(pxp(), "(0,0)")).subset_of(sset(pxp(), "(0,0)")));

    // primes stable under theta are endo-prime
    for (TablePtr t : {fixtures::p().table, fixtures::g().table, s4, pxp()}) {
        for (const auto& theta : enumerate_endomorphisms(t)) {
            for (const auto& ideal : enumerate_hyperideals(t)) {
                if (!ideal.proper() || !is_prime_set(*t, ideal.members)) continue;
                if (!theta.image_of(ideal.members).subset_of(ideal.members)) continue;
                CHECK(is_endo_prime(t, ideal.members, theta).holds);
            }
        }
    }
    CHECK_THROWS_AS(is_endo_prime(fixtures::s4_no_one().table,
                                  sset(fixtures::s4_no_one().table, "0"),
                                  identity_morphism(fixtures::s4_no_one().table)),
                    Error);
}

TEST_CASE("for binary multiplication and the identity, endo-prime is prime") {
    for (TablePtr t : {fixtures::p().table, fixtures::g().table, pxp()}) {
        Morphism id = identity_morphism(t);
        for (const auto& ideal : enumerate_hyperideals(t)) {
            if (!ideal.proper()) continue;
            CHECK(is_endo_prime(t, ideal.members, id).holds ==
                  is_prime(t, ideal.members).holds);
        }
    }
}

TEST_CASE("endo-primary") {
    TablePtr s4 = fixtures::s4().table;
    CHECK(is_endo_primary(s4, sset(s4, "0,2"), identity_morphism(s4)).holds);
    CHECK(is_endo_primary(fixtures::p().table, sset(fixtures::p().table, "0"),
                          identity_morphism(fixtures::p().table))
              .holds);

    // endo-prime implies endo-primary on every corpus instance
    for (TablePtr t : {fixtures::p().table, fixtures::g().table, s4, pxp()}) {
        for (const auto& theta : enumerate_endomorphisms(t)) {
            for (const auto& ideal : enumerate_hyperideals(t)) {
                if (!ideal.proper()) continue;
                if (is_endo_prime(t, ideal.members, theta).holds)
                    CHECK(is_endo_primary(t, ideal.members, theta).holds);
            }
        }
    }
}

TEST_CASE("strongly endo-prime") {
    TablePtr p = fixtures::p().table;
    CHECK(is_strongly_endo_prime(p, sset(p, "0"), identity_morphism(p)).holds);

    Morphism sw = swap_endo(pxp(), 5);
    ClassificationVerdict v = is_strongly_endo_prime(pxp(), sset(pxp(), "(0,0)"), sw);
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->ideals.size() == 2);

    // strongly endo-prime implies endo-prime on every corpus instance
    for (TablePtr t : {p, fixtures::g().table, fixtures::s4().table, pxp()}) {
        for (const auto& theta : enumerate_endomorphisms(t)) {
            for (const auto& ideal : enumerate_hyperideals(t)) {
                if (!ideal.proper()) continue;
                if (is_strongly_endo_prime(t, ideal.members, theta).holds)
                    CHECK(is_endo_prime(t, ideal.members, theta).holds);
            }
        }
    }
}

TEST_CASE("domains") {
    CHECK(is_hyperintegral_domain(fixtures::g().table).holds);
    CHECK(is_hyperintegral_domain(fixtures::p().table).holds);
    ClassificationVerdict v = is_hyperintegral_domain(fixtures::s4().table);
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness.has_value());
    CHECK(prime_witness_violates(*fixtures::s4().table,
                                 ElemSet::single(4, fixtures::s4().table->zero),
                                 v.witness->elements));
    CHECK_FALSE(is_hyperintegral_domain(pxp()).holds);

    TablePtr s4 = fixtures::s4().table;
    CHECK(is_theta_domain(s4, identity_morphism(s4)).holds);
    CHECK_FALSE(is_theta_domain(pxp(), swap_endo(pxp(), 5)).holds);
}

TEST_CASE("implication ladder on corpus instances") {
    for (TablePtr t :
         {fixtures::p().table, fixtures::g().table, fixtures::s4().table, pxp()}) {
        auto endos = enumerate_endomorphisms(t);
        for (const auto& ideal : enumerate_hyperideals(t)) {
            if (!ideal.proper()) continue;
            bool prime = is_prime(t, ideal.members).holds;
            bool primary = is_primary(t, ideal.members).holds;
            if (prime) CHECK(primary);
            ElemSet rad_set = radical(*t, ideal.members);
            for (const auto& theta : endos) {
                // the endo flavors follow once theta respects the target set
                if (primary && theta.image_of(rad_set).subset_of(rad_set))
                    CHECK(is_endo_primary(t, ideal.members, theta).holds);
                if (prime && theta.image_of(ideal.members).subset_of(ideal.members))
                    CHECK(is_endo_prime(t, ideal.members, theta).holds);
            }
        }
    }
}

TEST_CASE("witness soundness across a full sweep") {
    for (TablePtr t : {fixtures::p().table, fixtures::g().table, fixtures::s4().table, pxp()}) {
        auto endos = enumerate_endomorphisms(t);
        for (const auto& ideal : enumerate_hyperideals(t)) {
            if (!ideal.proper()) continue;
            ClassificationVerdict pv = is_prime(t, ideal.members);
            if (!pv.holds)
                CHECK(prime_witness_violates(*t, ideal.members, pv.witness->elements));
            ElemSet rad_set = radical(*t, ideal.members);
            ClassificationVerdict prv = is_primary(t, ideal.members);
            if (!prv.holds)
                CHECK(positional_witness_violates(*t, ideal.members, nullptr, rad_set,
                                                  prv.witness->elements, prv.witness->position));
            for (const auto& theta : endos) {
                ClassificationVerdict ev = is_endo_prime(t, ideal.members, theta);
                if (!ev.holds)
                    CHECK(positional_witness_violates(*t, ideal.members, &theta, ideal.members,
                                                      ev.witness->elements, ev.witness->position));
                ClassificationVerdict eq = is_endo_primary(t, ideal.members, theta);
                if (!eq.holds)
                    CHECK(positional_witness_violates(*t, ideal.members, &theta, rad_set,
                                                      eq.witness->elements, eq.witness->position));
            }
        }
    }
}
