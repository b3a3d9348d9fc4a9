#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hk/construct.hpp"
#include "hk/core.hpp"
#include "hk/fixtures.hpp"
#include "hk/ideal.hpp"
#include "hk/morphism.hpp"

using namespace hk;

namespace {

TablePtr pxp() {
    static TablePtr t = product(fixtures::p().table, fixtures::p().table, "pxp");
    return t;
}

// filter over all |H|^|H| maps, independent of the backtracking search
std::vector<std::vector<Elem>> endos_bruteforce(TablePtr H) {
    const int N = H->size();
    std::vector<std::vector<Elem>> out;
    std::vector<Elem> map(N, 0);
    while (true) {
        if (verify_morphism(map, H, H).ok) out.push_back(map);
        int i = N - 1;
        for (; i >= 0; --i) {
            if (++map[i] < N) break;
            map[i] = 0;
        }
        if (i < 0) break;
    }
    return out;
}

}  // namespace

TEST_CASE("morphism verification on hand-checked maps") {
    TablePtr p = fixtures::p().table;
    CHECK(swap_endo(pxp(), 5).verified);
    CHECK(verify_morphism(identity_morphism(p).map, p, p).ok);

    // u -> w, v -> v, w -> u fixing 0 and 1 preserves both tables
    std::vector<Elem> inv{0, 1, *p->index_of("w"), *p->index_of("v"), *p->index_of("u")};
    CHECK(verify_morphism(inv, p, p).ok);

    // collapsing all nonzero elements onto 1 breaks hyperaddition at (1,v)
    std::vector<Elem> collapse{0, 1, 1, 1, 1};
    MorphismCheck check = verify_morphism(collapse, p, p);
    CHECK_FALSE(check.ok);
    CHECK(check.condition == "additive");
    REQUIRE(check.witness.elements.size() == 2);
    CHECK(check.witness.elements[0] == *p->index_of("1"));
    CHECK(check.witness.elements[1] == *p->index_of("v"));
}

TEST_CASE("endomorphism enumeration matches the exhaustive filter") {
    for (const auto* f :
         {&fixtures::p(), &fixtures::g(), &fixtures::s4(), &fixtures::s4_no_one()}) {
        auto fast = enumerate_endomorphisms(f->table);
        auto slow = endos_bruteforce(f->table);
        REQUIRE(fast.size() == slow.size());
        for (size_t i = 0; i < fast.size(); ++i) CHECK(fast[i].map == slow[i]);
    }
}

TEST_CASE("the hyperfield has exactly the identity and the inversion") {
    TablePtr p = fixtures::p().table;
    auto endos = enumerate_endomorphisms(p);
    REQUIRE(endos.size() == 2);
    CHECK(endos[0].is_identity());
    std::vector<Elem> inv{0, 1, *p->index_of("w"), *p->index_of("v"), *p->index_of("u")};
    CHECK(endos[1].map == inv);
}

TEST_CASE("enumeration basics") {
    auto s4 = enumerate_endomorphisms(fixtures::s4().table);
    bool has_id = false;
    for (const auto& e : s4) {
        CHECK(e.map[fixtures::s4().table->zero] == fixtures::s4().table->zero);
        if (e.is_identity()) has_id = true;
    }
    CHECK(has_id);
    CHECK(enumerate_endomorphisms(fixtures::s4_no_one().table).size() == 4);
    CHECK(enumerate_endomorphisms(pxp()).size() == 8);
    CHECK_THROWS_AS(enumerate_endomorphisms(fixtures::p().table, 1), Error);
}

TEST_CASE("enumerated endomorphisms are closed under composition") {
    for (TablePtr t : {fixtures::p().table, fixtures::g().table, fixtures::s4().table,
                       fixtures::s4_no_one().table, pxp()}) {
        auto endos = enumerate_endomorphisms(t);
        for (const auto& f : endos) {
            for (const auto& g : endos) {
                Morphism fg = compose(f, g);
                bool found = false;
                for (const auto& h : endos)
                    if (h.map == fg.map) found = true;
                CHECK(found);
            }
        }
    }
}

TEST_CASE("kernels") {
    TablePtr p = fixtures::p().table;
    CHECK(kernel(identity_morphism(p)) == ElemSet::single(p->size(), p->zero));
    CHECK(kernel(swap_endo(pxp(), 5)) == ElemSet::single(pxp()->size(), pxp()->zero));

    TablePtr s4n = fixtures::s4_no_one().table;
    QuotientStructure q = quotient(s4n, parse_element_list(*s4n, "0,1"));
    CHECK(kernel(q.projection) == parse_element_list(*s4n, "0,1"));
}

TEST_CASE("preimages and images of hyperideals") {
    TablePtr s4n = fixtures::s4_no_one().table;
    QuotientStructure q = quotient(s4n, parse_element_list(*s4n, "0,1"));

    ElemSet zero_class = ElemSet::single(q.table->size(), q.table->zero);
    CHECK(preimage_ideal(q.projection, zero_class).members == parse_element_list(*s4n, "0,1"));

    Morphism sw = swap_endo(pxp(), 5);
    ElemSet zcol(pxp()->size());
    for (int j = 0; j < 5; ++j) zcol.insert(j);  // {0} x P under row-major order
    ElemSet zrow(pxp()->size());
    for (int i = 0; i < 5; ++i) zrow.insert(i * 5);  // P x {0}
    CHECK(preimage_ideal(sw, zcol).members == zrow);

    Morphism id = identity_morphism(s4n);
    for (const auto& ideal : enumerate_hyperideals(s4n))
        CHECK(preimage_ideal(id, ideal.members).members == ideal.members);

    CHECK(image_ideal(q.projection, parse_element_list(*s4n, "0,1")).members == zero_class);
    CHECK(image_ideal(q.projection, ElemSet::full(s4n->size())).members ==
          ElemSet::full(q.table->size()));
    CHECK(image_ideal(identity_morphism(s4n), ElemSet::single(s4n->size(), s4n->zero)).members ==
          ElemSet::single(s4n->size(), s4n->zero));

    // preconditions: epimorphism, kernel containment
    auto s4_endos = enumerate_endomorphisms(fixtures::s4().table);
    REQUIRE_FALSE(s4_endos[0].is_surjective());
    CHECK_THROWS_AS(
        image_ideal(s4_endos[0], ElemSet::full(fixtures::s4().table->size())), Error);
    CHECK_THROWS_AS(
        image_ideal(q.projection, ElemSet::single(s4n->size(), s4n->zero)), Error);
}

TEST_CASE("preimage is monotone and preserves hyperideals") {
    for (TablePtr t : {fixtures::p().table, fixtures::g().table, fixtures::s4().table, pxp()}) {
        auto ideals = enumerate_hyperideals(t);
        for (const auto& f : enumerate_endomorphisms(t)) {
            for (const auto& a : ideals) {
                Hyperideal pa = preimage_ideal(f, a.members);
                CHECK(is_hyperideal(*t, pa.members).ok);
                for (const auto& b : ideals) {
                    if (!a.members.subset_of(b.members)) continue;
                    CHECK(pa.members.subset_of(preimage_ideal(f, b.members).members));
                }
            }
        }
    }
}

TEST_CASE("commuting squares") {
    TablePtr p = fixtures::p().table;
    Morphism id_p = identity_morphism(p);
    CHECK(commutes(id_p, id_p, id_p));

    // first projection of the square against the swap fails at (0,1)
    std::vector<Elem> proj(pxp()->size());
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) proj[i * 5 + j] = i;
    Morphism pi1 = make_morphism(pxp(), p, proj);
    Morphism sw = swap_endo(pxp(), 5);
    Morphism id_sq = identity_morphism(pxp());
    CHECK(commutes(pi1, id_sq, id_p));
    Elem witness = -1;
    CHECK_FALSE(commutes(pi1, sw, id_p, &witness));
    CHECK(witness == *pxp()->index_of("(0,1)"));
}
