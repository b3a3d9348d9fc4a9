#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hk/core.hpp"
#include "hk/fixtures.hpp"

using namespace hk;

namespace {

ElemSet set_of(const HyperringTable& H, std::initializer_list<const char*> labels) {
    ElemSet s(H.size());
    for (const char* l : labels) s.insert(*H.index_of(l));
    return s;
}

std::vector<Elem> tup(const HyperringTable& H, std::initializer_list<const char*> labels) {
    std::vector<Elem> t;
    for (const char* l : labels) t.push_back(*H.index_of(l));
    return t;
}

HyperringTable copy_of(const TablePtr& p) { return *p; }

}  // namespace

TEST_CASE("fixtures parse and satisfy the axioms") {
    const auto& p = fixtures::p();
    const auto& g = fixtures::g();
    const auto& s4 = fixtures::s4();
    const auto& s4n = fixtures::s4_no_one();

    AxiomReport rp = verify_axioms(*p.table);
    CHECK(rp.passed);
    CHECK(rp.warnings.empty());

    AxiomReport rg = verify_axioms(*g.table);
    CHECK(rg.passed);
    CHECK(rg.warnings.empty());

    AxiomReport rs = verify_axioms(*s4.table);
    CHECK(rs.passed);
    REQUIRE(rs.warnings.size() == 1);
    CHECK(rs.warnings[0].id == "one-not-neutral");

    AxiomReport rn = verify_axioms(*s4n.table);
    CHECK(rn.passed);
    CHECK(rn.warnings.empty());
}

TEST_CASE("iterated hyperaddition") {
    const auto& s4 = *fixtures::s4().table;
    CHECK(iterated_add(s4, 1, tup(s4, {"1", "1"})) == set_of(s4, {"0", "1"}));
    CHECK(iterated_add(s4, 2, tup(s4, {"2", "3", "1"})) == set_of(s4, {"0", "1"}));

    for (const auto* f : {&fixtures::p(), &fixtures::g(), &fixtures::s4()}) {
        const auto& H = *f->table;
        for (Elem u = 0; u < H.size(); ++u) {
            std::vector<Elem> t{u, H.zero};
            CHECK(iterated_add(H, 1, t) == ElemSet::single(H.size(), u));
        }
    }

    CHECK_THROWS_AS(iterated_add(s4, 1, tup(s4, {"1", "1", "1"})), Error);
    CHECK_THROWS_AS(iterated_add(s4, 2, tup(s4, {"1", "1"})), Error);
    std::vector<Elem> out_of_range{0, 9};
    CHECK_THROWS_AS(iterated_add(s4, 1, out_of_range), Error);
}

TEST_CASE("iterated multiplication") {
    const auto& s4 = *fixtures::s4().table;
    CHECK(iterated_mul(s4, 1, tup(s4, {"2", "3", "3", "2"})) == *s4.index_of("2"));
    CHECK(iterated_mul(s4, 1, tup(s4, {"1", "2", "3", "3"})) == *s4.index_of("0"));
    CHECK(iterated_mul(s4, 2, tup(s4, {"2", "2", "2", "2", "2", "2", "2"})) ==
          *s4.index_of("2"));
    CHECK_THROWS_AS(iterated_mul(s4, 1, tup(s4, {"2", "3"})), Error);
}

TEST_CASE("powers") {
    const auto& s4 = *fixtures::s4().table;
    const auto& s4n = *fixtures::s4_no_one().table;
    const auto& p = *fixtures::p().table;

    CHECK(power(s4, *s4.index_of("2"), 2) == *s4.index_of("0"));
    CHECK(power(s4, *s4.index_of("2"), 4) == *s4.index_of("2"));
    for (Elem u = 0; u < p.size(); ++u) CHECK(power(p, u, 1) == u);

    CHECK(power(s4n, *s4n.index_of("2"), 4) == *s4n.index_of("2"));
    CHECK_THROWS_AS(power(s4n, *s4n.index_of("2"), 2), Error);
    CHECK_THROWS_AS(power(s4, *s4.index_of("2"), 6), Error);  // 6 != l*3+1
    CHECK(power(s4, *s4.index_of("2"), 7) == *s4.index_of("2"));

    // exponent n two ways: direct table against the l=1 fold
    for (const auto* f : {&fixtures::p(), &fixtures::g(), &fixtures::s4(), &fixtures::s4_no_one()}) {
        const auto& H = *f->table;
        for (Elem u = 0; u < H.size(); ++u) {
            std::vector<Elem> t(H.n, u);
            CHECK(power(H, u, H.n) == iterated_mul(H, 1, t));
        }
    }
}

TEST_CASE("power sequence membership") {
    const auto& s4 = *fixtures::s4().table;
    const auto& s4n = *fixtures::s4_no_one().table;
    const auto& p = *fixtures::p().table;

    CHECK(power_sequence_members(s4, *s4.index_of("1"), set_of(s4, {"0"})));
    CHECK_FALSE(power_sequence_members(s4n, *s4n.index_of("2"), set_of(s4n, {"0"})));
    CHECK(power_sequence_members(p, *p.index_of("0"), set_of(p, {"0"})));
}

TEST_CASE("axiom verifier is deterministic") {
    const auto& s4 = *fixtures::s4().table;
    std::string a = render_axiom_report(s4, verify_axioms(s4));
    std::string b = render_axiom_report(s4, verify_axioms(s4));
    CHECK(a == b);
}

TEST_CASE("constructed negative: broken inverse") {
    HyperringTable H = copy_of(fixtures::s4().table);
    std::vector<Elem> t22 = tup(H, {"2", "2"});
    H.add_table[H.rank(t22)] = set_of(H, {"1"});
    AxiomReport r = verify_axioms(H);
    CHECK_FALSE(r.passed);
    CHECK(r.has_violation("add-inverse"));
}

namespace {

struct Mutation {
    std::string describe;
    HyperringTable table;
};

// Single-entry mutations of P: canonical (both orders at once) and
// ordered (one cell, breaking the symmetric storage claim).
std::vector<Mutation> p_mutations() {
    const HyperringTable& base = *fixtures::p().table;
    const int N = base.size();
    std::vector<Mutation> out;
    std::vector<Elem> t(2);
    for (Elem i = 0; i < N; ++i) {
        for (Elem j = 0; j < N; ++j) {
            t = {i, j};
            size_t rij = base.rank(t);
            t = {j, i};
            size_t rji = base.rank(t);
            for (int mask = 1; mask < (1 << N); ++mask) {
                ElemSet s(N);
                for (int b = 0; b < N; ++b)
                    if (mask & (1 << b)) s.insert(b);
                if (s == base.add_table[rij]) continue;
                if (i <= j) {
                    Mutation m{"add canonical (" + base.labels[i] + "," + base.labels[j] + ")",
                               base};
                    m.table.add_table[rij] = s;
                    m.table.add_table[rji] = s;
                    out.push_back(std::move(m));
                }
                if (i != j) {
                    Mutation m{"add ordered (" + base.labels[i] + "," + base.labels[j] + ")", base};
                    m.table.add_table[rij] = s;
                    out.push_back(std::move(m));
                }
            }
            for (Elem v = 0; v < N; ++v) {
                if (v == base.mul_table[rij]) continue;
                if (i <= j) {
                    Mutation m{"mul canonical (" + base.labels[i] + "," + base.labels[j] + ")",
                               base};
                    m.table.mul_table[rij] = v;
                    m.table.mul_table[rji] = v;
                    out.push_back(std::move(m));
                }
                if (i != j) {
                    Mutation m{"mul ordered (" + base.labels[i] + "," + base.labels[j] + ")", base};
                    m.table.mul_table[rij] = v;
                    out.push_back(std::move(m));
                }
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("every axiom check is reachable by a single-entry mutation of p") {
    std::vector<Mutation> muts = p_mutations();
    for (const std::string& axiom : axiom_ids()) {
        bool reachable = false;
        size_t best_extra = SIZE_MAX;
        for (const auto& m : muts) {
            AxiomReport r = verify_axioms(m.table);
            if (!r.has_violation(axiom)) continue;
            reachable = true;
            best_extra = std::min(best_extra, r.violations.size() - 1);
        }
        INFO("axiom ", axiom, " min extra violations ", best_extra);
        CHECK(reachable);
    }
}
