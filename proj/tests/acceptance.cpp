// Acceptance suite: one pass/fail line per criterion, exit code equals
// the number of failing criteria. Expected total runtime is a few
// seconds; the slowest step is the 2^24-candidate subset filter that
// cross-checks hyperideal enumeration on the 25-element square.

#include <iostream>
#include <sstream>
#include <vector>

#include "hk/classify.hpp"
#include "hk/construct.hpp"
#include "hk/core.hpp"
#include "hk/fixtures.hpp"
#include "hk/format.hpp"
#include "hk/ideal.hpp"
#include "hk/morphism.hpp"
#include "hk/theorems.hpp"

using namespace hk;

namespace {

int g_failures = 0;
std::ostringstream g_detail;

void criterion(int n, const std::string& what, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what << "\n";
    if (!ok) {
        ++g_failures;
        std::cout << g_detail.str();
    }
    g_detail.str("");
    g_detail.clear();
}

bool note(bool ok, const std::string& what) {
    if (!ok) g_detail << "  - " << what << "\n";
    return ok;
}

ElemSet sset(const TablePtr& H, const std::string& s) { return parse_element_list(*H, s); }

TablePtr pxp() {
    static TablePtr t = product(fixtures::p().table, fixtures::p().table, "pxp");
    return t;
}

Morphism swap_on_pxp() { return swap_endo(pxp(), fixtures::p().table->size()); }

std::vector<CorpusEntry> corpus() {
    std::vector<CorpusEntry> out;
    out.push_back(make_corpus_entry(fixtures::p().table));
    out.push_back(make_corpus_entry(fixtures::g().table));
    out.push_back(make_corpus_entry(fixtures::s4_no_one().table));
    out.push_back(make_corpus_entry(pxp()));
    TablePtr s4n = fixtures::s4_no_one().table;
    QuotientStructure q = quotient(s4n, sset(s4n, "0,1"));
    out.push_back(make_corpus_entry(q.table));
    Restriction diag = restrict_structure(
        pxp(), sset(pxp(), "(0,0),(1,1),(u,u),(v,v),(w,w)"), swap_on_pxp(), "diag");
    out.push_back(make_corpus_entry(diag.table));
    return out;
}

// ------------------------------------------------------------------
// criterion 1: axiom verification and mutation sensitivity

struct Mutation {
    std::string describe;
    HyperringTable table;
};

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
                    Mutation m{"add (" + base.labels[i] + "," + base.labels[j] + ") -> " +
                                   base.label_set(s),
                               base};
                    m.table.add_table[rij] = s;
                    m.table.add_table[rji] = s;
                    out.push_back(std::move(m));
                }
                if (i != j) {
                    Mutation m{"ordered add (" + base.labels[i] + "," + base.labels[j] + ") -> " +
                                   base.label_set(s),
                               base};
                    m.table.add_table[rij] = s;
                    out.push_back(std::move(m));
                }
            }
            for (Elem v = 0; v < N; ++v) {
                if (v == base.mul_table[rij]) continue;
                if (i <= j) {
                    Mutation m{"mul (" + base.labels[i] + "," + base.labels[j] + ") -> " +
                                   base.labels[v],
                               base};
                    m.table.mul_table[rij] = v;
                    m.table.mul_table[rji] = v;
                    out.push_back(std::move(m));
                }
                if (i != j) {
                    Mutation m{"ordered mul (" + base.labels[i] + "," + base.labels[j] + ") -> " +
                                   base.labels[v],
                               base};
                    m.table.mul_table[rij] = v;
                    out.push_back(std::move(m));
                }
            }
        }
    }
    return out;
}

bool criterion1() {
    bool ok = true;
    AxiomReport rp = verify_axioms(*fixtures::p().table);
    ok &= note(rp.passed && rp.warnings.empty(), "p passes with zero warnings");
    AxiomReport rg = verify_axioms(*fixtures::g().table);
    ok &= note(rg.passed && rg.warnings.empty(), "g passes with zero warnings");
    AxiomReport rs = verify_axioms(*fixtures::s4().table);
    ok &= note(rs.passed, "s4 passes the core axioms");
    ok &= note(rs.warnings.size() == 1 && rs.warnings[0].id == "one-not-neutral",
               "s4 carries exactly the one-not-neutral warning");

    // Every axiom check must be flipped by some single-entry mutation of
    // p. The chosen mutation per axiom is the deterministic first one
    // with the fewest collateral violations (a mutation confined to one
    // entry still invalidates every axiom that reads that entry, so
    // fully isolated flips do not exist; see the bundled report).
    std::vector<Mutation> muts = p_mutations();
    for (const std::string& axiom : axiom_ids()) {
        size_t best = SIZE_MAX;
        const Mutation* chosen = nullptr;
        std::vector<std::string> chosen_violations;
        for (const auto& m : muts) {
            AxiomReport r = verify_axioms(m.table);
            if (!r.has_violation(axiom)) continue;
            if (r.violations.size() < best) {
                best = r.violations.size();
                chosen = &m;
                chosen_violations.clear();
                for (const auto& v : r.violations) chosen_violations.push_back(v.axiom);
            }
        }
        bool flipped = chosen != nullptr;
        ok &= note(flipped, "axiom " + axiom + " is flipped by a single-entry mutation");
        if (flipped) {
            std::cout << "  mutation for " << axiom << ": " << chosen->describe << " violates [";
            for (size_t i = 0; i < chosen_violations.size(); ++i)
                std::cout << (i ? " " : "") << chosen_violations[i];
            std::cout << "]\n";
        }
    }
    return ok;
}

// ------------------------------------------------------------------
// criterion 2: bundled example reproduction

bool prime_violation(const HyperringTable& H, const ElemSet& Q, const std::vector<Elem>& t) {
    if (!Q.contains(H.mul(t))) return false;
    for (Elem e : t)
        if (Q.contains(e)) return false;
    return true;
}

bool endo_prime_violation(const HyperringTable& H, const ElemSet& E, const Morphism& theta,
                          const std::vector<Elem>& t) {
    if (!E.contains(H.mul(t))) return false;
    for (int i = 0; i < H.n; ++i) {
        if (E.contains(t[i])) continue;
        std::vector<Elem> sub = t;
        sub[i] = *H.one;
        if (!E.contains(theta.map[H.mul(sub)])) return true;
    }
    return false;
}

bool criterion2() {
    bool ok = true;
    TablePtr s4 = fixtures::s4().table;
    ElemSet zero4 = sset(s4, "0");
    ClassificationVerdict pv = is_prime(s4, zero4);
    ok &= note(!pv.holds, "is_prime(s4,{0}) is false");
    std::vector<Elem> published_tuple{*s4->index_of("1"), *s4->index_of("2"), *s4->index_of("3"),
                                  *s4->index_of("3")};
    ok &= note(prime_violation(*s4, zero4, published_tuple),
               "(1,2,3,3) witnesses the prime failure");
    ok &= note(pv.witness && prime_violation(*s4, zero4, pv.witness->elements),
               "the reported witness re-validates");

    for (const auto& theta : enumerate_endomorphisms(s4))
        ok &= note(is_endo_prime(s4, zero4, theta).holds,
                   "is_endo_prime(s4,{0},theta) for theta = " + endo_display_name(theta));

    Morphism sw = swap_on_pxp();
    ElemSet zsq = sset(pxp(), "(0,0)");
    ClassificationVerdict ev = is_endo_prime(pxp(), zsq, sw);
    ok &= note(!ev.holds, "is_endo_prime(pxp,{(0,0)},swap) is false");
    std::vector<Elem> published_pair{*pxp()->index_of("(1,0)"), *pxp()->index_of("(0,1)")};
    ok &= note(endo_prime_violation(*pxp(), zsq, sw, published_pair),
               "((1,0),(0,1)) witnesses the endo-prime failure");
    ok &= note(ev.witness && endo_prime_violation(*pxp(), zsq, sw, ev.witness->elements),
               "the reported witness re-validates");
    ok &= note(sw.image_of(zsq).subset_of(zsq), "swap stabilizes {(0,0)}");

    ok &= note(is_hyperintegral_domain(fixtures::g().table).holds,
               "g is a hyperintegral domain");
    return ok;
}

// ------------------------------------------------------------------
// criterion 3: oracle equivalence

bool criterion3() {
    bool ok = true;
    struct Case {
        TablePtr table;
        size_t expect;
    };
    std::vector<Case> cases = {{fixtures::s4().table, 4},
                               {fixtures::p().table, 2},
                               {fixtures::g().table, 2},
                               {pxp(), 4}};
    for (const auto& c : cases) {
        auto fast = enumerate_hyperideals(c.table);
        auto slow = all_hyperideals_bruteforce(*c.table);
        ok &= note(fast.size() == c.expect,
                   c.table->name + " has " + std::to_string(c.expect) + " hyperideals");
        bool agree = fast.size() == slow.size();
        for (size_t i = 0; agree && i < fast.size(); ++i)
            agree = fast[i].members == slow[i];
        ok &= note(agree, c.table->name + " enumeration agrees with the subset filter");
    }

    TablePtr p = fixtures::p().table;
    auto endos = enumerate_endomorphisms(p);
    ok &= note(endos.size() == 2, "p has exactly two endomorphisms");
    if (endos.size() == 2) {
        std::vector<Elem> inversion{0, 1, *p->index_of("w"), *p->index_of("v"),
                                    *p->index_of("u")};
        ok &= note(endos[0].is_identity() && endos[1].map == inversion,
                   "they are the identity and the inversion");
    }
    return ok;
}

// ------------------------------------------------------------------
// criterion 4: radical consistency

bool criterion4() {
    bool ok = true;
    for (const auto& entry : corpus()) {
        for (const auto& ideal : enumerate_hyperideals(entry.table)) {
            bool has_containing_prime = false;
            for (const auto& q : enumerate_hyperideals(entry.table))
                if (q.proper() && is_prime_set(*entry.table, q.members) &&
                    ideal.members.subset_of(q.members))
                    has_containing_prime = true;
            if (!has_containing_prime) continue;
            ok &= note(radical(*entry.table, ideal.members) ==
                           prime_radical(entry.table, ideal.members),
                       entry.name + ": exponent radical of " +
                           entry.table->label_set(ideal.members) +
                           " equals the prime intersection");
        }
    }
    TablePtr s4n = fixtures::s4_no_one().table;
    ElemSet expected = sset(s4n, "0,1");
    ok &= note(radical(*s4n, sset(s4n, "0")) == expected,
               "s4 without one: radical({0}) = {0,1}");
    ok &= note(prime_radical(s4n, sset(s4n, "0")) == expected,
               "s4 without one: prime_radical({0}) = {0,1}");
    return ok;
}

// ------------------------------------------------------------------
// criterion 5: theorem suite

bool criterion5() {
    bool ok = true;
    auto reports = run_suite(corpus());
    ok &= note(reports.size() == theorem_catalog().size(), "all twenty theorems ran");
    long violations = 0;
    for (const auto& rep : reports) {
        violations += static_cast<long>(rep.violations.size());
        for (const auto& v : rep.violations)
            note(false, rep.id + " violated on " + v.structure + ": " + v.detail);
        bool skip_s4 = false, skip_q = false;
        for (const auto& s : rep.skips) {
            if (s.rfind("s4_no_one ", 0) == 0) skip_s4 = true;
            if (s.rfind("s4_no_one_mod_0+1 ", 0) == 0) skip_q = true;
        }
        ok &= note(skip_s4 && skip_q,
                   rep.id + " records skips for the identity-less structures");
    }
    ok &= note(violations == 0, "zero violations across T1..T20");
    return ok;
}

// ------------------------------------------------------------------
// criterion 6: degenerate-case identities

bool criterion6() {
    bool ok = true;
    for (TablePtr t : {fixtures::p().table, pxp()}) {
        Morphism id = identity_morphism(t);
        for (const auto& ideal : enumerate_hyperideals(t)) {
            if (!ideal.proper()) continue;
            ok &= note(is_endo_prime(t, ideal.members, id).holds ==
                           is_prime(t, ideal.members).holds,
                       t->name + ": endo-prime with the identity equals prime on " +
                           t->label_set(ideal.members));
        }
    }
    for (const auto& entry : corpus()) {
        Morphism id = identity_morphism(entry.table);
        for (const auto& ideal : enumerate_hyperideals(entry.table))
            ok &= note(theta_radical(*entry.table, ideal.members, id) ==
                           radical(*entry.table, ideal.members),
                       entry.name + ": identity theta-radical equals the radical on " +
                           entry.table->label_set(ideal.members));
    }
    for (const auto& entry : corpus()) {
        TablePtr H = entry.table;
        QuotientStructure q = quotient(H, ElemSet::single(H->size(), H->zero));
        bool same = q.table->m == H->m && q.table->n == H->n && q.table->labels == H->labels &&
                    q.table->zero == H->zero && q.table->one == H->one &&
                    q.table->add_table == H->add_table && q.table->mul_table == H->mul_table;
        ok &= note(same, entry.name + ": quotient by {0} reproduces the labeled table");
    }
    return ok;
}

// ------------------------------------------------------------------
// criterion 7: round trips

bool criterion7() {
    bool ok = true;
    struct Fx {
        const char* name;
        std::string_view text;
    };
    std::vector<Fx> fxs = {{"p", fixtures::p_text()},
                           {"g", fixtures::g_text()},
                           {"s4", fixtures::s4_text()},
                           {"s4_no_one", fixtures::s4_no_one_text()}};
    for (const auto& fx : fxs) {
        StructureFile f = parse_structure(fx.text);
        ok &= note(serialize(*f.table, f.endos) == fx.text,
                   std::string(fx.name) + ".hkr survives serialize after parse byte for byte");
    }

    // printed witnesses re-parse through the element-list grammar
    auto reparse_tuple = [&](const TablePtr& H, const std::vector<Elem>& tuple) {
        std::string printed = H->label_tuple(tuple);
        std::string inner = printed.substr(1, printed.size() - 2);
        ElemSet parsed = parse_element_list(*H, inner);
        ElemSet expect(H->size());
        for (Elem e : tuple) expect.insert(e);
        return parsed == expect;
    };
    TablePtr s4 = fixtures::s4().table;
    ClassificationVerdict pv = is_prime(s4, sset(s4, "0"));
    ok &= note(pv.witness && reparse_tuple(s4, pv.witness->elements),
               "the s4 prime witness re-parses");
    ClassificationVerdict ev = is_endo_prime(pxp(), sset(pxp(), "(0,0)"), swap_on_pxp());
    ok &= note(ev.witness && reparse_tuple(pxp(), ev.witness->elements),
               "the pxp endo-prime witness re-parses");
    ElemSet col = sset(pxp(), "(0,0),(0,1),(0,u),(0,v),(0,w)");
    ok &= note(parse_element_list(*pxp(), pxp()->label_set(col)) == col,
               "a printed hyperideal re-parses");
    return ok;
}

}  // namespace

int main() {
    criterion(1, "axiom verification and mutation sensitivity", criterion1());
    criterion(2, "bundled example reproduction", criterion2());
    criterion(3, "oracle equivalence for enumerations", criterion3());
    criterion(4, "exponent radical equals prime-intersection radical", criterion4());
    criterion(5, "theorem suite reports zero violations", criterion5());
    criterion(6, "degenerate-case identities", criterion6());
    criterion(7, "round trips", criterion7());
    std::cout << (g_failures == 0 ? "acceptance: all criteria hold\n"
                                  : "acceptance: criteria failed\n");
    return g_failures;
}
