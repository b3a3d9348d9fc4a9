#include "hk/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "hk/core.hpp"

namespace hk {

namespace {

struct Ctx {
    const CorpusEntry* entry = nullptr;
    TablePtr H;
    bool has_one = false;
    std::vector<Hyperideal> ideals;
    std::vector<ElemSet> rad;        // exponent radical per ideal
    std::vector<bool> prime;         // per ideal (proper ones only; H -> false)
    std::vector<bool> primary;       // per ideal, when has_one
    std::vector<std::vector<bool>> ep;      // [ideal][endo]
    std::vector<std::vector<bool>> eprim;   // [ideal][endo]
    std::vector<std::vector<bool>> strong;  // [ideal][endo]

    int find_ideal(const ElemSet& s) const {
        for (size_t i = 0; i < ideals.size(); ++i)
            if (ideals[i].members == s) return static_cast<int>(i);
        return -1;
    }
    bool proper(int i) const { return ideals[i].proper(); }
    const ElemSet& set(int i) const { return ideals[i].members; }
    const Morphism& endo(int t) const { return entry->endos[t]; }
    int endo_count() const { return static_cast<int>(entry->endos.size()); }
    const std::string& endo_name(int t) const { return entry->endo_names[t]; }

    // conclusion helper: "the set is an endo-prime hyperideal w.r.t. theta"
    bool ep_of_set(const ElemSet& s, int t) const {
        int i = find_ideal(s);
        if (i < 0) return false;  // not even a hyperideal
        if (!proper(i)) return false;
        return ep[i][t];
    }
    bool eprim_of_set(const ElemSet& s, int t) const {
        int i = find_ideal(s);
        if (i < 0 || !proper(i)) return false;
        return eprim[i][t];
    }
};

Ctx build_ctx(const CorpusEntry& entry) {
    Ctx c;
    c.entry = &entry;
    c.H = entry.table;
    c.has_one = entry.table->has_one();
    c.ideals = enumerate_hyperideals(entry.table);
    const int I = static_cast<int>(c.ideals.size());
    const int T = static_cast<int>(entry.endos.size());
    c.rad.reserve(I);
    for (int i = 0; i < I; ++i) c.rad.push_back(radical(*c.H, c.set(i)));
    c.prime.assign(I, false);
    for (int i = 0; i < I; ++i)
        c.prime[i] = c.proper(i) && is_prime_set(*c.H, c.set(i));
    if (c.has_one) {
        c.primary.assign(I, false);
        c.ep.assign(I, std::vector<bool>(T, false));
        c.eprim.assign(I, std::vector<bool>(T, false));
        c.strong.assign(I, std::vector<bool>(T, false));
        for (int i = 0; i < I; ++i) {
            if (!c.proper(i)) continue;
            c.primary[i] = is_primary(c.H, c.set(i)).holds;
            for (int t = 0; t < T; ++t) {
                c.ep[i][t] = is_endo_prime(c.H, c.set(i), c.endo(t)).holds;
                c.eprim[i][t] = is_endo_primary(c.H, c.set(i), c.endo(t)).holds;
                c.strong[i][t] = is_strongly_endo_prime(c.H, c.set(i), c.endo(t)).holds;
            }
        }
    }
    return c;
}

struct Outcome {
    TheoremReport* rep;
    const Ctx* ctx;

    void instance(bool hypothesis, bool conclusion, const std::string& detail) {
        ++rep->checked;
        if (!hypothesis) {
            ++rep->vacuous;
        } else if (conclusion) {
            ++rep->passed;
        } else {
            rep->violations.push_back({ctx->entry->name, detail});
        }
    }
};

std::string ideal_tag(const Ctx& c, int i) { return c.H->label_set(c.set(i)); }
std::string set_tag(const Ctx& c, const ElemSet& s) { return c.H->label_set(s); }

// ---------------------------------------------------------------- T1
void t1(const Ctx& c, Outcome out) {
    for (size_t i = 0; i < c.ideals.size(); ++i) {
        if (!c.proper(i)) continue;
        for (int t = 0; t < c.endo_count(); ++t) {
            bool hyp = c.ep[i][t];
            bool con = !hyp || c.ep_of_set(c.rad[i], t);
            out.instance(hyp, con,
                         "rad(" + ideal_tag(c, i) + ") = " + set_tag(c, c.rad[i]) +
                             " is not endo-prime for theta = " + c.endo_name(t));
        }
    }
}

// ---------------------------------------------------------------- T2
void t2(const Ctx& c, Outcome out) {
    for (size_t i = 0; i < c.ideals.size(); ++i) {
        if (!c.proper(i)) continue;
        for (int t = 0; t < c.endo_count(); ++t) {
            bool hyp = c.ep[i][t];
            bool con = !hyp || c.endo(t).image_of(c.set(i)).subset_of(c.set(i));
            out.instance(hyp, con,
                         "theta(" + ideal_tag(c, i) + ") escapes it for theta = " + c.endo_name(t));
        }
    }
}

// ---------------------------------------------------------------- T3
std::vector<ElemSet> colon_test_family(const Ctx& c) {
    const int N = c.H->size();
    std::vector<ElemSet> family;
    auto push = [&](const ElemSet& s) {
        for (const auto& f : family)
            if (f == s) return;
        family.push_back(s);
    };
    if (N <= 12) {
        const uint64_t top = uint64_t(1) << N;
        for (uint64_t mask = 0; mask < top; ++mask) {
            ElemSet s(N);
            for (int i = 0; i < N; ++i)
                if (mask & (uint64_t(1) << i)) s.insert(i);
            push(s);
        }
    } else {
        push(ElemSet(N));
        for (int i = 0; i < N; ++i) push(ElemSet::single(N, i));
        for (const auto& ideal : c.ideals) push(ideal.members);
        push(ElemSet::full(N));
    }
    return family;
}

void t3(const Ctx& c, Outcome out) {
    const ElemSet full = ElemSet::full(c.H->size());
    std::vector<ElemSet> subsets = colon_test_family(c);
    for (size_t i = 0; i < c.ideals.size(); ++i) {
        if (!c.proper(i)) continue;
        for (int t = 0; t < c.endo_count(); ++t) {
            bool hyp = c.ep[i][t];
            const Morphism& theta = c.endo(t);
            if (!hyp) {
                out.instance(false, true, "");
                continue;
            }
            // (1) preimage of E under theta
            ElemSet pre(c.H->size());
            for (int u = 0; u < c.H->size(); ++u)
                if (c.set(i).contains(theta.map[u])) pre.insert(u);
            bool c1 = c.ep_of_set(pre, t);
            // (2) colon against every test subset
            bool c2 = true;
            ElemSet bad_a(c.H->size());
            for (const ElemSet& a : subsets) {
                ElemSet q = colon(*c.H, c.set(i), a);
                if (q == full) continue;
                if (!c.ep_of_set(q, t)) {
                    c2 = false;
                    bad_a = a;
                    break;
                }
            }
            // (3) members of rad(E) have theta-image in E
            bool c3 = true;
            c.rad[i].for_each([&](Elem u) {
                if (!c.set(i).contains(theta.map[u])) c3 = false;
            });
            // (4) theta(u) in rad(E) forces theta^2(u) in E
            bool c4 = true;
            for (int u = 0; u < c.H->size(); ++u)
                if (c.rad[i].contains(theta.map[u]) &&
                    !c.set(i).contains(theta.map[theta.map[u]]))
                    c4 = false;
            std::string why;
            if (!c1) why = "theta-preimage " + set_tag(c, pre) + " not endo-prime";
            else if (!c2) why = "colon by " + set_tag(c, bad_a) + " not endo-prime";
            else if (!c3) why = "radical member escapes under theta";
            else if (!c4) why = "theta-power clause fails";
            out.instance(true, c1 && c2 && c3 && c4,
                         "E = " + ideal_tag(c, i) + ", theta = " + c.endo_name(t) + ": " + why);
        }
    }
}

// ---------------------------------------------------------------- T4
void t4(const Ctx& c, Outcome out) {
    const HyperringTable& H = *c.H;
    const Elem one = *H.one;
    const ElemSet full = ElemSet::full(H.size());
    for (size_t i = 0; i < c.ideals.size(); ++i) {
        if (!c.proper(i)) continue;
        const ElemSet& E = c.set(i);
        for (int t = 0; t < c.endo_count(); ++t) {
            const Morphism& theta = c.endo(t);
            bool c1 = c.ep[i][t];
            bool c2 = true;
            for (Elem u = 0; u < H.size() && c2; ++u) {
                PrincipalResult gen = principal(H, u);
                if (gen.members.subset_of(E)) continue;
                ElemSet q = colon(H, E, ElemSet::single(H.size(), u));
                if (!theta.image_of(q).subset_of(E)) c2 = false;
            }
            bool c3 = c.strong[i][t];
            bool c4 = true;
            {
                std::vector<Elem> others(H.n - 1, 0);
                std::vector<Elem> sub(H.n);
                do {
                    for (int pos = 0; pos < H.n && c4; ++pos) {
                        int at = 0;
                        for (int j = 0; j < H.n; ++j)
                            if (j != pos) sub[j] = others[at++];
                        sub[pos] = one;
                        Elem prod = H.mul(sub);
                        if (E.contains(theta.map[prod])) continue;
                        if (colon(H, E, ElemSet::single(H.size(), prod)) != E) c4 = false;
                    }
                    if (!c4) break;
                } while (next_tuple(others, H.size()));
            }
            bool agree = (c1 == c2) && (c2 == c3) && (c3 == c4);
            std::ostringstream why;
            why << "E = " << ideal_tag(c, i) << ", theta = " << c.endo_name(t)
                << ": conditions (1..4) = " << c1 << c2 << c3 << c4;
            out.instance(true, agree, why.str());
        }
    }
}

// ---------------------------------------------------------------- T5
void collect_chains(const std::vector<std::vector<int>>& covers, int at,
                    std::vector<int>& path, std::vector<std::vector<int>>& out) {
    if (covers[at].empty()) {
        out.push_back(path);
        return;
    }
    for (int next : covers[at]) {
        path.push_back(next);
        collect_chains(covers, next, path, out);
        path.pop_back();
    }
}

void t5(const Ctx& c, Outcome out) {
    const int I = static_cast<int>(c.ideals.size());
    // covers: j covers i when i < j strictly with nothing between
    std::vector<std::vector<int>> covers(I);
    for (int i = 0; i < I; ++i) {
        for (int j = 0; j < I; ++j) {
            if (i == j) continue;
            if (!c.set(i).subset_of(c.set(j)) || c.set(i) == c.set(j)) continue;
            bool direct = true;
            for (int k = 0; k < I && direct; ++k) {
                if (k == i || k == j) continue;
                if (c.set(i).subset_of(c.set(k)) && c.set(k).subset_of(c.set(j)) &&
                    c.set(k) != c.set(i) && c.set(k) != c.set(j))
                    direct = false;
            }
            if (direct) covers[i].push_back(j);
        }
    }
    int bottom = 0;
    for (int i = 0; i < I; ++i)
        if (c.set(i).subset_of(c.set(bottom))) bottom = i;
    std::vector<std::vector<int>> chains;
    std::vector<int> path{bottom};
    collect_chains(covers, bottom, path, chains);

    for (const auto& chain : chains) {
        for (int t = 0; t < c.endo_count(); ++t) {
            ElemSet inter = ElemSet::full(c.H->size());
            bool any = false;
            for (int idx : chain) {
                if (c.proper(idx) && c.ep[idx][t]) {
                    inter.intersect(c.set(idx));
                    any = true;
                }
            }
            bool con = !any || c.ep_of_set(inter, t);
            out.instance(any, con,
                         "chain intersection " + set_tag(c, inter) +
                             " not endo-prime for theta = " + c.endo_name(t));
        }
    }
}

// ---------------------------------------------------------------- T6
void t6(const Ctx& c, Outcome out) {
    for (size_t i = 0; i < c.ideals.size(); ++i) {
        if (!c.proper(i)) continue;
        for (int t = 0; t < c.endo_count(); ++t) {
            bool hyp = c.ep[i][t];
            bool con = true;
            std::string why;
            if (hyp) {
                const Morphism& theta = c.endo(t);
                ElemSet thE = theta.image_of(c.set(i));
                for (const auto& q : minimal_primes_over(c.H, c.set(i))) {
                    ElemSet thQ = theta.image_of(q.members);
                    if (!thQ.subset_of(c.set(i))) {
                        con = false;
                        why = "theta(Q) escapes E for Q = " + set_tag(c, q.members);
                        break;
                    }
                    // corollary chain theta(E) <= theta(Q) <= E <= Q
                    if (!thE.subset_of(thQ) || !c.set(i).subset_of(q.members)) {
                        con = false;
                        why = "containment chain fails for Q = " + set_tag(c, q.members);
                        break;
                    }
                }
            }
            out.instance(hyp, con,
                         "E = " + ideal_tag(c, i) + ", theta = " + c.endo_name(t) + ": " + why);
        }
    }
}

// ---------------------------------------------------------------- T7
void t7(const Ctx& c, Outcome out) {
    for (int t = 0; t < c.endo_count(); ++t) {
        bool fixes_primes = true;
        for (size_t i = 0; i < c.ideals.size(); ++i)
            if (c.prime[i] && c.endo(t).image_of(c.set(i)) != c.set(i)) fixes_primes = false;
        for (size_t i = 0; i < c.ideals.size(); ++i) {
            if (!c.proper(i)) continue;
            bool hyp = fixes_primes;
            bool con = !hyp || (c.ep[i][t] == c.prime[i]);
            out.instance(hyp, con,
                         "E = " + ideal_tag(c, i) + ", theta = " + c.endo_name(t) +
                             ": endo-prime and prime disagree");
        }
    }
}

// ---------------------------------------------------------------- T8
void t8(const Ctx& c, Outcome out) {
    ElemSet nil = nilpotents(*c.H);
    for (size_t i = 0; i < c.ideals.size(); ++i) {
        if (!c.proper(i)) continue;
        for (int t = 0; t < c.endo_count(); ++t) {
            bool hyp = c.ep[i][t];
            bool con = true;
            if (hyp) {
                con = c.endo(t).image_of(c.rad[i]).subset_of(c.set(i)) &&
                      c.endo(t).image_of(nil).subset_of(c.set(i));
            }
            out.instance(hyp, con,
                         "theta(rad(" + ideal_tag(c, i) + ")) escapes for theta = " +
                             c.endo_name(t));
        }
    }
}

// ---------------------------------------------------------------- T9
void t9(const Ctx& c, Outcome out) {
    for (int e = 0; e < c.endo_count(); ++e) {
        const Morphism& eta = c.endo(e);
        for (int t = 0; t < c.endo_count(); ++t) {
            if (!commutes(eta, c.endo(t), c.endo(t))) continue;
            for (size_t i = 0; i < c.ideals.size(); ++i) {
                if (!c.proper(i)) continue;
                bool hyp = c.ep[i][t];
                bool con = true;
                ElemSet pre(c.H->size());
                if (hyp) {
                    for (int u = 0; u < c.H->size(); ++u)
                        if (c.set(i).contains(eta.map[u])) pre.insert(u);
                    con = c.ep_of_set(pre, t);
                }
                out.instance(hyp, con,
                             "preimage " + set_tag(c, pre) + " of " + ideal_tag(c, i) +
                                 " under eta = " + c.endo_name(e) +
                                 " not endo-prime for theta = " + c.endo_name(t));
            }
        }
    }
}

// ---------------------------------------------------------------- T10
void t10(const Ctx& c, Outcome out) {
    for (int t = 0; t < c.endo_count(); ++t) {
        ElemSet ker = kernel(c.endo(t));
        ElemSet inter = ElemSet::full(c.H->size());
        for (size_t i = 0; i < c.ideals.size(); ++i)
            if (c.proper(i) && c.ep[i][t]) inter.intersect(c.set(i));
        out.instance(true, ker.subset_of(inter),
                     "kernel " + set_tag(c, ker) + " escapes the intersection " +
                         set_tag(c, inter) + " for theta = " + c.endo_name(t));
    }
}

// ---------------------------------------------------------------- T11
void t11(const Ctx& c, Outcome out) {
    bool domain = is_prime_set(*c.H, ElemSet::single(c.H->size(), c.H->zero));
    for (int t = 0; t < c.endo_count(); ++t) {
        ElemSet inter = ElemSet::full(c.H->size());
        for (size_t i = 0; i < c.ideals.size(); ++i)
            if (c.proper(i) && c.ep[i][t]) inter.intersect(c.set(i));
        ElemSet niltheta = theta_nilpotents(*c.H, c.endo(t));
        out.instance(domain, !domain || niltheta == inter,
                     "theta-nilpotents " + set_tag(c, niltheta) + " differ from " +
                         set_tag(c, inter) + " for theta = " + c.endo_name(t));
        // corollary: theta-radical of E = intersection of endo-primes over E
        for (size_t i = 0; i < c.ideals.size(); ++i) {
            ElemSet over = ElemSet::full(c.H->size());
            for (size_t j = 0; j < c.ideals.size(); ++j)
                if (c.proper(j) && c.ep[j][t] && c.set(i).subset_of(c.set(j)))
                    over.intersect(c.set(j));
            ElemSet tr = theta_radical(*c.H, c.set(i), c.endo(t));
            out.instance(domain, !domain || tr == over,
                         "theta-radical of " + ideal_tag(c, i) + " differs from " +
                             set_tag(c, over) + " for theta = " + c.endo_name(t));
        }
    }
}

// ---------------------------------------------------------------- T12
void t12(const Ctx& c, Outcome out) {
    for (size_t i = 0; i < c.ideals.size(); ++i) {
        if (!c.proper(i)) continue;
        QuotientStructure q = quotient(c.H, c.set(i));
        for (int t = 0; t < c.endo_count(); ++t) {
            const Morphism& theta = c.endo(t);
            if (!theta.image_of(c.set(i)).subset_of(c.set(i))) {
                out.instance(false, true, "");  // theta_E undefined; hypothesis unreachable
                continue;
            }
            Morphism induced = induced_endo(theta, q);
            bool qdomain = is_theta_domain(q.table, induced).holds;
            bool strong = c.strong[i][t];
            out.instance(strong, !strong || qdomain,
                         "quotient by " + ideal_tag(c, i) +
                             " is not a theta-domain though E is strongly endo-prime, theta = " +
                             c.endo_name(t));
            out.instance(qdomain, !qdomain || c.ep[i][t],
                         "quotient by " + ideal_tag(c, i) +
                             " is a theta-domain but E is not endo-prime, theta = " +
                             c.endo_name(t));
        }
    }
}

// ---------------------------------------------------------------- T13
void t13(const Ctx& c, Outcome out) {
    const int N = c.H->size();
    // (1)+(2) through every quotient projection with a stabilizing theta
    for (size_t f = 0; f < c.ideals.size(); ++f) {
        if (!c.proper(f)) continue;
        QuotientStructure q = quotient(c.H, c.set(f));
        for (int t = 0; t < c.endo_count(); ++t) {
            const Morphism& theta = c.endo(t);
            if (!theta.image_of(c.set(f)).subset_of(c.set(f))) continue;
            Morphism down = induced_endo(theta, q);
            std::vector<Hyperideal> qideals = enumerate_hyperideals(q.table);
            // (1) preimages of endo-prime hyperideals of the quotient
            for (const auto& e2 : qideals) {
                if (!e2.proper()) continue;
                bool hyp = is_endo_prime(q.table, e2.members, down).holds;
                bool con = true;
                ElemSet pre(N);
                if (hyp) {
                    for (int u = 0; u < N; ++u)
                        if (e2.members.contains(q.class_of[u])) pre.insert(u);
                    con = c.ep_of_set(pre, t);
                }
                out.instance(hyp, con,
                             "projection preimage of " + q.table->label_set(e2.members) +
                                 " (mod " + ideal_tag(c, f) + ") not endo-prime, theta = " +
                                 c.endo_name(t));
            }
            // (2) images of endo-prime hyperideals containing the kernel
            for (size_t i = 0; i < c.ideals.size(); ++i) {
                if (!c.proper(i)) continue;
                if (!c.set(f).subset_of(c.set(i))) continue;
                bool hyp = c.ep[i][t];
                bool con = true;
                if (hyp) {
                    ElemSet img(q.table->size());
                    c.set(i).for_each([&](Elem u) { img.insert(q.class_of[u]); });
                    if (img.count() == q.table->size()) con = false;
                    else con = is_endo_prime(q.table, img, down).holds;
                }
                out.instance(hyp, con,
                             "projection image of " + ideal_tag(c, i) + " (mod " +
                                 ideal_tag(c, f) + ") not endo-prime, theta = " + c.endo_name(t));
            }
        }
    }
}

// subhyperrings closed strictly under both tables (with zero, one,
// inverses); used by the restriction corollary of T13
std::vector<ElemSet> strict_subhyperrings(const Ctx& c) {
    const HyperringTable& H = *c.H;
    const int N = H.size();
    auto closure = [&](ElemSet s) {
        s.insert(H.zero);
        if (H.has_one()) s.insert(*H.one);
        for (int round = 0; round <= N + 1; ++round) {
            ElemSet next = s;
            s.for_each([&](Elem u) {
                Elem inv = additive_inverse(H, u);
                if (inv >= 0) next.insert(inv);
            });
            std::vector<Elem> members = s.members();
            std::vector<int> idx(H.m, 0);
            std::vector<Elem> t(H.m);
            while (true) {
                for (int i = 0; i < H.m; ++i) t[i] = members[idx[i]];
                next.unite(H.add(t));
                int i = H.m - 1;
                for (; i >= 0; --i) {
                    if (++idx[i] < static_cast<int>(members.size())) break;
                    idx[i] = 0;
                }
                if (i < 0) break;
            }
            idx.assign(H.n, 0);
            t.assign(H.n, 0);
            while (true) {
                for (int i = 0; i < H.n; ++i) t[i] = members[idx[i]];
                next.insert(H.mul(t));
                int i = H.n - 1;
                for (; i >= 0; --i) {
                    if (++idx[i] < static_cast<int>(members.size())) break;
                    idx[i] = 0;
                }
                if (i < 0) break;
            }
            if (next == s) break;
            s = next;
        }
        return s;
    };
    std::vector<ElemSet> family;
    auto push = [&](const ElemSet& s) {
        for (const auto& f : family)
            if (f == s) return false;
        family.push_back(s);
        return true;
    };
    push(closure(ElemSet(N)));
    for (int u = 0; u < N; ++u) push(closure(ElemSet::single(N, u)));
    bool grew = true;
    while (grew) {
        grew = false;
        const size_t count = family.size();
        for (size_t i = 0; i < count; ++i)
            for (size_t j = i + 1; j < count; ++j) {
                ElemSet joined = family[i];
                joined.unite(family[j]);
                grew |= push(closure(joined));
            }
    }
    std::sort(family.begin(), family.end(), ElemSet::card_lex_less);
    return family;
}

void t13b(const Ctx& c, Outcome out) {
    // restriction corollary
    for (const ElemSet& G : strict_subhyperrings(c)) {
        if (G.count() < 2) continue;
        for (int t = 0; t < c.endo_count(); ++t) {
            const Morphism& theta = c.endo(t);
            if (!theta.image_of(G).subset_of(G)) continue;
            Restriction r = restrict_structure(c.H, G, theta);
            for (size_t i = 0; i < c.ideals.size(); ++i) {
                if (!c.proper(i)) continue;
                bool hyp = c.ep[i][t];
                bool con = true;
                if (hyp) {
                    ElemSet cut(r.table->size());
                    for (size_t s = 0; s < r.embedding.size(); ++s)
                        if (c.set(i).contains(r.embedding[s])) cut.insert(static_cast<Elem>(s));
                    if (cut.count() < r.table->size()) {
                        IdealCheck chk = is_hyperideal(*r.table, cut);
                        con = chk.ok && is_endo_prime(r.table, cut, r.endo).holds;
                    }
                }
                out.instance(hyp, con,
                             "restricted " + ideal_tag(c, i) + " to subhyperring " +
                                 set_tag(c, G) + " not endo-prime, theta = " + c.endo_name(t));
            }
        }
    }
    // kernel-quotient corollary
    for (int t = 0; t < c.endo_count(); ++t) {
        const Morphism& theta = c.endo(t);
        ElemSet ker = kernel(theta);
        if (ker.count() == c.H->size()) continue;
        QuotientStructure q = quotient(c.H, ker);
        Morphism down = induced_endo(theta, q);
        for (size_t i = 0; i < c.ideals.size(); ++i) {
            if (!c.proper(i) || !ker.subset_of(c.set(i))) continue;
            ElemSet img(q.table->size());
            c.set(i).for_each([&](Elem u) { img.insert(q.class_of[u]); });
            bool below = img.count() < q.table->size() &&
                         is_endo_prime(q.table, img, down).holds;
            out.instance(true, c.ep[i][t] == below,
                         "E = " + ideal_tag(c, i) + " and E mod ker(theta) disagree, theta = " +
                             c.endo_name(t));
        }
    }
}

// ---------------------------------------------------------------- T14
// Product instances are bounded by the dense-table footprint N^max(m,n)
// of the constructed product, not just its carrier; a (2,4)-structure
// cubes to a 64-element carrier whose multiplication table alone has
// sixteen million entries.
bool product_fits(long carrier, int m, int n, long budget) {
    long entries = 1;
    for (int i = 0; i < std::max(m, n); ++i) {
        if (entries > budget / carrier) return false;
        entries *= carrier;
    }
    return entries <= budget;
}

void t14(const std::vector<Ctx>& ctxs, TheoremReport& rep) {
    constexpr long kTableBudget = 200'000;
    auto product_check = [&](const Ctx& a, const Ctx& b) {
        TablePtr prod = product(a.H, b.H);
        const int NB = b.H->size();
        std::vector<Hyperideal> pideals = enumerate_hyperideals(prod);
        for (int ta = 0; ta < a.endo_count(); ++ta) {
            for (int tb = 0; tb < b.endo_count(); ++tb) {
                Morphism pe = product_endo(prod, a.endo(ta), b.endo(tb));
                std::vector<ElemSet> lhs;
                for (const auto& e : pideals)
                    if (e.proper() && is_endo_prime(prod, e.members, pe).holds)
                        lhs.push_back(e.members);
                std::vector<ElemSet> rhs;
                for (size_t i = 0; i < a.ideals.size(); ++i) {
                    if (!a.proper(i) || !a.ep[i][ta]) continue;
                    ElemSet s(prod->size());
                    for (int x = 0; x < a.H->size(); ++x)
                        if (a.set(i).contains(x))
                            for (int y = 0; y < NB; ++y) s.insert(x * NB + y);
                    rhs.push_back(std::move(s));
                }
                for (size_t j = 0; j < b.ideals.size(); ++j) {
                    if (!b.proper(j) || !b.ep[j][tb]) continue;
                    ElemSet s(prod->size());
                    for (int x = 0; x < a.H->size(); ++x)
                        for (int y = 0; y < NB; ++y)
                            if (b.set(j).contains(y)) s.insert(x * NB + y);
                    rhs.push_back(std::move(s));
                }
                std::sort(lhs.begin(), lhs.end(), ElemSet::card_lex_less);
                std::sort(rhs.begin(), rhs.end(), ElemSet::card_lex_less);
                ++rep.checked;
                if (lhs == rhs) {
                    ++rep.passed;
                } else {
                    rep.violations.push_back(
                        {a.entry->name + "x" + b.entry->name,
                         "endo-prime hyperideals of the product do not match the "
                         "factorwise characterization for theta = " +
                             a.endo_name(ta) + " x " + b.endo_name(tb)});
                }
            }
        }
    };
    for (const Ctx& a : ctxs) {
        if (!a.has_one) continue;
        for (const Ctx& b : ctxs) {
            if (!b.has_one) continue;
            if (a.H->m != b.H->m || a.H->n != b.H->n) continue;
            long pair = static_cast<long>(a.H->size()) * b.H->size();
            if (pair > 32 || !product_fits(pair, a.H->m, a.H->n, kTableBudget)) continue;
            product_check(a, b);
        }
    }
    // t-fold corollary on the first factor small enough for a cube
    for (const Ctx& a : ctxs) {
        if (!a.has_one) continue;
        long cube = static_cast<long>(a.H->size()) * a.H->size() * a.H->size();
        if (cube > 64 || !product_fits(cube, a.H->m, a.H->n, kTableBudget)) continue;
        TablePtr sq = product(a.H, a.H);
        TablePtr cu = product(sq, a.H);
        std::vector<Hyperideal> cideals = enumerate_hyperideals(cu);
        const int NA = a.H->size();
        for (int t1 = 0; t1 < a.endo_count(); ++t1)
            for (int t2 = 0; t2 < a.endo_count(); ++t2)
                for (int t3 = 0; t3 < a.endo_count(); ++t3) {
                    Morphism pe = product_endo(cu, product_endo(sq, a.endo(t1), a.endo(t2)),
                                               a.endo(t3));
                    std::vector<ElemSet> lhs;
                    for (const auto& e : cideals)
                        if (e.proper() && is_endo_prime(cu, e.members, pe).holds)
                            lhs.push_back(e.members);
                    std::vector<ElemSet> rhs;
                    int ts[3] = {t1, t2, t3};
                    for (int slot = 0; slot < 3; ++slot) {
                        for (size_t i = 0; i < a.ideals.size(); ++i) {
                            if (!a.proper(i) || !a.ep[i][ts[slot]]) continue;
                            ElemSet s(cu->size());
                            for (int x = 0; x < NA; ++x)
                                for (int y = 0; y < NA; ++y)
                                    for (int z = 0; z < NA; ++z) {
                                        int coord[3] = {x, y, z};
                                        if (a.set(i).contains(coord[slot]))
                                            s.insert((x * NA + y) * NA + z);
                                    }
                            rhs.push_back(std::move(s));
                        }
                    }
                    std::sort(lhs.begin(), lhs.end(), ElemSet::card_lex_less);
                    std::sort(rhs.begin(), rhs.end(), ElemSet::card_lex_less);
                    ++rep.checked;
                    if (lhs == rhs) ++rep.passed;
                    else
                        rep.violations.push_back(
                            {a.entry->name + "^3",
                             "three-fold product characterization fails"});
                }
        break;
    }
}

// ---------------------------------------------------------------- T15
void t15(const Ctx& c, Outcome out) {
    for (size_t i = 0; i < c.ideals.size(); ++i) {
        if (!c.proper(i)) continue;
        for (int t = 0; t < c.endo_count(); ++t) {
            bool hyp = c.eprim[i][t];
            bool con = !hyp || c.ep_of_set(c.rad[i], t);
            out.instance(hyp, con,
                         "rad(" + ideal_tag(c, i) + ") = " + set_tag(c, c.rad[i]) +
                             " not endo-prime though E is endo-primary, theta = " +
                             c.endo_name(t));
        }
    }
}

// ---------------------------------------------------------------- T16
void t16(const Ctx& c, Outcome out) {
    for (size_t i = 0; i < c.ideals.size(); ++i) {
        if (!c.proper(i)) continue;
        for (int t = 0; t < c.endo_count(); ++t) {
            bool hyp = c.eprim[i][t];
            bool con = true;
            if (hyp) {
                con = c.endo(t).image_of(c.set(i)).subset_of(c.rad[i]);
                c.rad[i].for_each([&](Elem u) {
                    if (!c.set(i).contains(u) && !c.rad[i].contains(c.endo(t).map[u]))
                        con = false;
                });
            }
            out.instance(hyp, con,
                         "E = " + ideal_tag(c, i) + ", theta = " + c.endo_name(t) +
                             ": theta image or power clause escapes rad(E)");
        }
    }
}

// ---------------------------------------------------------------- T17
void t17(const Ctx& c, Outcome out) {
    ElemSet zero = ElemSet::single(c.H->size(), c.H->zero);
    std::vector<Hyperideal> maxes = max_spectrum(c.H);
    for (int t = 0; t < c.endo_count(); ++t) {
        bool zmax = is_theta_maximal(c.H, zero, c.endo(t)).holds;
        ElemSet ker = kernel(c.endo(t));
        bool single = maxes.size() == 1 && maxes[0].members == ker;
        out.instance(true, zmax == single,
                     "zero theta-maximal = " + std::string(zmax ? "yes" : "no") +
                         " but Max(H) = {ker theta} = " + std::string(single ? "yes" : "no") +
                         " for theta = " + c.endo_name(t));
    }
}

// ---------------------------------------------------------------- T18
void t18(const Ctx& c, Outcome out) {
    for (size_t i = 0; i < c.ideals.size(); ++i) {
        if (!c.proper(i)) continue;
        for (size_t j = i; j < c.ideals.size(); ++j) {
            if (!c.proper(j)) continue;
            bool same_rad = c.rad[i] == c.rad[j];
            ElemSet inter = c.set(i);
            inter.intersect(c.set(j));
            for (int t = 0; t < c.endo_count(); ++t) {
                bool hyp = same_rad && c.eprim[i][t] && c.eprim[j][t];
                bool con = !hyp || c.eprim_of_set(inter, t);
                out.instance(hyp, con,
                             "intersection " + set_tag(c, inter) +
                                 " not endo-primary, theta = " + c.endo_name(t));
            }
            // plain primary corollary
            bool hyp = same_rad && c.primary[i] && c.primary[j];
            bool con = true;
            if (hyp) {
                int k = c.find_ideal(inter);
                con = k >= 0 && c.proper(k) && c.primary[k];
            }
            out.instance(hyp, con,
                         "intersection " + set_tag(c, inter) + " not primary");
        }
    }
}

// ---------------------------------------------------------------- T19
void t19(const Ctx& c, Outcome out) {
    const ElemSet full = ElemSet::full(c.H->size());
    for (size_t i = 0; i < c.ideals.size(); ++i) {
        if (!c.proper(i)) continue;
        for (int t = 0; t < c.endo_count(); ++t) {
            bool hyp = c.eprim[i][t];
            bool con = true;
            std::string why;
            if (hyp) {
                for (Elem u = 0; u < c.H->size() && con; ++u) {
                    ElemSet q = colon(*c.H, c.set(i), ElemSet::single(c.H->size(), u));
                    if (c.set(i).contains(u)) {
                        if (q != full) { con = false; why = "(E:u) != H for u in E"; }
                    } else if (!c.rad[i].contains(c.endo(t).map[u])) {
                        if (q != c.set(i)) { con = false; why = "(E:u) != E off the radical"; }
                    }
                }
            }
            out.instance(hyp, con,
                         "E = " + ideal_tag(c, i) + ", theta = " + c.endo_name(t) + ": " + why);
        }
    }
}

// ---------------------------------------------------------------- T20
void t20(const Ctx& c, Outcome out) {
    ElemSet zero = ElemSet::single(c.H->size(), c.H->zero);
    for (size_t i = 0; i < c.ideals.size(); ++i) {
        if (!c.proper(i)) continue;
        for (int t = 0; t < c.endo_count(); ++t) {
            bool tmax = is_theta_maximal(c.H, c.set(i), c.endo(t)).holds;
            out.instance(tmax, !tmax || c.ep[i][t],
                         "theta-maximal " + ideal_tag(c, i) + " is not endo-prime, theta = " +
                             c.endo_name(t));
            int r = c.find_ideal(c.rad[i]);
            bool rad_tmax = r >= 0 && c.proper(r) &&
                            is_theta_maximal(c.H, c.set(r), c.endo(t)).holds;
            out.instance(rad_tmax, !rad_tmax || c.eprim[i][t],
                         "E = " + ideal_tag(c, i) +
                             " with theta-maximal radical is not endo-primary, theta = " +
                             c.endo_name(t));
        }
    }
}

}  // namespace

const std::vector<std::pair<std::string, std::string>>& theorem_catalog() {
    static const std::vector<std::pair<std::string, std::string>> cat = {
        {"T1", "radical of an endo-prime hyperideal is endo-prime"},
        {"T2", "endo-prime hyperideals absorb their theta image"},
        {"T3", "theta-preimage, colon, and power clauses of an endo-prime hyperideal"},
        {"T4", "four equivalent characterizations of endo-prime"},
        {"T5", "chains of endo-prime hyperideals intersect to an endo-prime hyperideal"},
        {"T6", "endo-prime hyperideals contain theta of their minimal primes"},
        {"T7", "when theta fixes every prime, endo-prime equals prime"},
        {"T8", "theta of the radical and of the nilpotents stays inside"},
        {"T9", "preimage under a commuting homomorphism is endo-prime"},
        {"T10", "the kernel of theta lies in every endo-prime hyperideal"},
        {"T11", "in a hyperintegral domain the theta-nilpotents are the intersection"},
        {"T12", "quotient is a theta-domain iff the hyperideal is endo-prime (two directions)"},
        {"T13", "transfer along projections, subhyperrings, and the kernel quotient"},
        {"T14", "endo-prime hyperideals of products factor through one coordinate"},
        {"T15", "radical of an endo-primary hyperideal is endo-prime"},
        {"T16", "endo-primary hyperideals push theta into the radical"},
        {"T17", "zero is theta-maximal iff the kernel is the only maximal hyperideal"},
        {"T18", "intersections of endo-primary hyperideals with equal radicals"},
        {"T19", "colon behavior of endo-primary hyperideals"},
        {"T20", "theta-maximal implies endo-prime; theta-maximal radical implies endo-primary"},
    };
    return cat;
}

static std::vector<CorpusEntry> with_endo_names(const std::vector<CorpusEntry>& corpus) {
    std::vector<CorpusEntry> out = corpus;
    for (auto& entry : out) {
        if (entry.endo_names.size() == entry.endos.size()) continue;
        entry.endo_names.clear();
        for (const auto& e : entry.endos) entry.endo_names.push_back(endo_display_name(e));
    }
    return out;
}

std::vector<TheoremReport> run_suite(const std::vector<CorpusEntry>& corpus,
                                     const std::vector<std::string>& only) {
    for (const auto& id : only) {
        bool known = false;
        for (const auto& [cat_id, title] : theorem_catalog())
            if (cat_id == id) known = true;
        if (!known) throw Error(ErrorKind::Precondition, "unknown theorem id '" + id + "'");
    }
    std::vector<CorpusEntry> named = with_endo_names(corpus);
    std::vector<Ctx> ctxs;
    ctxs.reserve(named.size());
    for (const auto& entry : named) ctxs.push_back(build_ctx(entry));

    auto selected = [&](const std::string& id) {
        if (only.empty()) return true;
        return std::find(only.begin(), only.end(), id) != only.end();
    };

    using PerStructure = std::function<void(const Ctx&, Outcome)>;
    std::map<std::string, PerStructure> runners = {
        {"T1", t1},   {"T2", t2},   {"T3", t3},   {"T4", t4},   {"T5", t5},
        {"T6", t6},   {"T7", t7},   {"T8", t8},   {"T9", t9},   {"T10", t10},
        {"T11", t11}, {"T12", t12}, {"T13", [](const Ctx& c, Outcome o) { t13(c, o); t13b(c, o); }},
        {"T15", t15}, {"T16", t16}, {"T17", t17}, {"T18", t18}, {"T19", t19},
        {"T20", t20},
    };

    std::vector<TheoremReport> reports;
    for (const auto& [id, title] : theorem_catalog()) {
        if (!selected(id)) continue;
        TheoremReport rep;
        rep.id = id;
        rep.title = title;
        auto start = std::chrono::steady_clock::now();
        if (id == "T14") {
            // cross-structure; skips recorded for identity-less entries
            for (const auto& c : ctxs)
                if (!c.has_one)
                    rep.skips.push_back(c.entry->name + " (no declared scalar identity)");
            t14(ctxs, rep);
        } else {
            auto it = runners.find(id);
            for (const auto& c : ctxs) {
                if (!c.has_one) {
                    rep.skips.push_back(c.entry->name + " (no declared scalar identity)");
                    continue;
                }
                it->second(c, Outcome{&rep, &c});
            }
        }
        rep.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        reports.push_back(std::move(rep));
    }
    return reports;
}

std::vector<SearchHit> search(const std::vector<CorpusEntry>& corpus,
                              const std::string& property) {
    if (property != "endo-prime-not-prime" && property != "theta-stable-not-endo-prime" &&
        property != "endo-primary-not-endo-prime")
        throw Error(ErrorKind::Precondition, "unknown search property '" + property + "'");
    std::vector<SearchHit> hits;
    std::vector<CorpusEntry> named = with_endo_names(corpus);
    for (const auto& entry : named) {
        if (!entry.table->has_one()) continue;
        Ctx c = build_ctx(entry);
        for (size_t i = 0; i < c.ideals.size(); ++i) {
            if (!c.proper(i)) continue;
            for (int t = 0; t < c.endo_count(); ++t) {
                bool hit = false;
                if (property == "endo-prime-not-prime")
                    hit = c.ep[i][t] && !c.prime[i];
                else if (property == "theta-stable-not-endo-prime")
                    hit = c.endo(t).image_of(c.set(i)).subset_of(c.set(i)) && !c.ep[i][t];
                else
                    hit = c.eprim[i][t] && !c.ep[i][t];
                if (hit) hits.push_back({entry.name, c.set(i), c.endo_name(t)});
            }
        }
    }
    return hits;
}

std::string render_suite(const std::vector<TheoremReport>& reports, bool timings) {
    std::ostringstream os;
    long total_violations = 0;
    for (const auto& rep : reports) {
        os << "theorem: " << rep.id << " " << rep.title << "\n";
        os << "checked: " << rep.checked << "\n";
        os << "passed: " << rep.passed << "\n";
        os << "vacuous: " << rep.vacuous << "\n";
        os << "violations: " << rep.violations.size() << "\n";
        for (const auto& v : rep.violations)
            os << "violation: structure=" << v.structure << " detail=" << v.detail << "\n";
        for (const auto& s : rep.skips) os << "skip: " << s << "\n";
        if (timings) os << "elapsed: " << rep.elapsed_seconds << "\n";
        total_violations += static_cast<long>(rep.violations.size());
    }
    os << "total-violations: " << total_violations << "\n";
    return os.str();
}

CorpusEntry make_corpus_entry(TablePtr table, long cap) {
    CorpusEntry entry;
    entry.name = table->name;
    entry.table = table;
    entry.endos = enumerate_endomorphisms(table, cap);
    for (const auto& e : entry.endos) entry.endo_names.push_back(endo_display_name(e));
    return entry;
}

}  // namespace hk
