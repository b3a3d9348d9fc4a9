#include "hk/ideal.hpp"

#include <algorithm>
#include <cassert>

#include "hk/core.hpp"

namespace hk {

IdealCheck is_hyperideal(const HyperringTable& H, const ElemSet& S) {
    const int N = H.size();
    if (S.empty()) return {false, {}, "empty set"};
    if (!S.contains(H.zero)) return {false, Witness{{H.zero}, -1, {}}, "does not contain zero"};

    for (Elem u = 0; u < N; ++u) {
        if (!S.contains(u)) continue;
        Elem inv = additive_inverse(H, u);
        if (inv < 0 || !S.contains(inv))
            return {false, Witness{{u}, -1, {}},
                    "additive inverse of " + H.labels[u] + " not in the set"};
    }

    // m-ary subhypergroup: images of member tuples stay inside
    {
        std::vector<Elem> members = S.members();
        std::vector<int> idx(H.m, 0);
        std::vector<Elem> t(H.m);
        while (true) {
            for (int i = 0; i < H.m; ++i) t[i] = members[idx[i]];
            if (!H.add(t).subset_of(S))
                return {false, Witness{t, -1, {}},
                        "h" + H.label_tuple(t) + " = " + H.label_set(H.add(t)) +
                            " leaves the set"};
            int i = H.m - 1;
            for (; i >= 0; --i) {
                if (++idx[i] < static_cast<int>(members.size())) break;
                idx[i] = 0;
            }
            if (i < 0) break;
        }
    }

    // absorption in every position
    {
        std::vector<Elem> others(H.n - 1, 0);
        std::vector<Elem> t(H.n);
        do {
            for (int pos = 0; pos < H.n; ++pos) {
                int at = 0;
                for (int j = 0; j < H.n; ++j)
                    if (j != pos) t[j] = others[at++];
                for (Elem s = 0; s < N; ++s) {
                    if (!S.contains(s)) continue;
                    t[pos] = s;
                    if (!S.contains(H.mul(t)))
                        return {false, Witness{t, pos + 1, {}},
                                "k" + H.label_tuple(t) + " = " + H.labels[H.mul(t)] +
                                    " leaves the set"};
                }
            }
        } while (next_tuple(others, N));
    }

    return {true, {}, ""};
}

Hyperideal make_ideal(TablePtr H, ElemSet S) {
    IdealCheck check = is_hyperideal(*H, S);
    if (!check.ok)
        throw Error(ErrorKind::Precondition,
                    H->name + ": set " + H->label_set(S) + " is not a hyperideal: " + check.detail);
    return Hyperideal{std::move(H), std::move(S)};
}

Hyperideal ideal_closure(TablePtr Hp, const ElemSet& S) {
    const HyperringTable& H = *Hp;
    const int N = H.size();
    ElemSet cur = S;
    cur.insert(H.zero);
    for (int round = 0; round <= N + 1; ++round) {
        ElemSet next = cur;
        for (Elem u = 0; u < N; ++u) {
            if (!cur.contains(u)) continue;
            Elem inv = additive_inverse(H, u);
            if (inv >= 0) next.insert(inv);
        }
        {
            std::vector<Elem> members = cur.members();
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
        }
        {
            std::vector<Elem> others(H.n - 1, 0);
            std::vector<Elem> t(H.n);
            do {
                for (int pos = 0; pos < H.n; ++pos) {
                    int at = 0;
                    for (int j = 0; j < H.n; ++j)
                        if (j != pos) t[j] = others[at++];
                    cur.for_each([&](Elem s) {
                        t[pos] = s;
                        next.insert(H.mul(t));
                    });
                }
            } while (next_tuple(others, N));
        }
        if (next == cur) break;
        cur = next;
    }
    return Hyperideal{Hp, cur};
}

PrincipalResult principal(const HyperringTable& H, Elem u) {
    H.require_element(u);
    Elem one = H.one_or_throw();
    std::vector<Elem> t(H.n, one);
    t[0] = u;
    PrincipalResult out;
    out.members = ElemSet(H.size());
    for (Elem v = 0; v < H.size(); ++v) {
        t[1] = v;
        out.members.insert(H.mul(t));
    }
    IdealCheck check = is_hyperideal(H, out.members);
    if (!check.ok) {
        out.is_ideal = false;
        out.warning = "principal set of " + H.labels[u] + " is not a hyperideal: " + check.detail;
    }
    return out;
}

ElemSet colon(const HyperringTable& H, const ElemSet& I, const ElemSet& A) {
    Elem one = H.one_or_throw();
    if (A.empty()) return ElemSet::full(H.size());
    ElemSet out(H.size());
    std::vector<Elem> t(H.n, one);
    for (Elem v = 0; v < H.size(); ++v) {
        bool all = true;
        t[1] = v;
        A.for_each([&](Elem u) {
            if (!all) return;
            t[0] = u;
            if (!I.contains(H.mul(t))) all = false;
        });
        if (all) out.insert(v);
    }
    return out;
}

std::vector<Hyperideal> enumerate_hyperideals(TablePtr Hp) {
    const HyperringTable& H = *Hp;
    const int N = H.size();
    std::vector<ElemSet> family;
    auto add_new = [&](const ElemSet& s) {
        for (const auto& f : family)
            if (f == s) return false;
        family.push_back(s);
        return true;
    };
    add_new(ideal_closure(Hp, ElemSet(N)).members);
    for (Elem u = 0; u < N; ++u) add_new(ideal_closure(Hp, ElemSet::single(N, u)).members);
    bool grew = true;
    while (grew) {
        grew = false;
        const size_t count = family.size();
        for (size_t i = 0; i < count; ++i) {
            for (size_t j = i + 1; j < count; ++j) {
                ElemSet joined = family[i];
                joined.unite(family[j]);
                grew |= add_new(ideal_closure(Hp, joined).members);
            }
        }
    }
    std::sort(family.begin(), family.end(), ElemSet::card_lex_less);

#ifndef NDEBUG
    if (N <= 12) {
        std::vector<ElemSet> brute = all_hyperideals_bruteforce(H);
        assert(brute == family && "closure enumeration disagrees with subset filtering");
    }
#endif

    std::vector<Hyperideal> out;
    out.reserve(family.size());
    for (auto& s : family) out.push_back(Hyperideal{Hp, std::move(s)});
    return out;
}

std::vector<ElemSet> all_hyperideals_bruteforce(const HyperringTable& H) {
    const int N = H.size();
    if (N > 26)
        throw Error(ErrorKind::Precondition, "subset filtering supports at most 26 elements");

    // Per-element absorption closure: everything k can reach with the
    // element in one slot and arbitrary other arguments.
    std::vector<uint64_t> absorb(N, 0);
    {
        std::vector<Elem> others(H.n - 1, 0);
        std::vector<Elem> t(H.n);
        do {
            for (int pos = 0; pos < H.n; ++pos) {
                int at = 0;
                for (int j = 0; j < H.n; ++j)
                    if (j != pos) t[j] = others[at++];
                for (Elem s = 0; s < N; ++s) {
                    t[pos] = s;
                    absorb[s] |= uint64_t(1) << H.mul(t);
                }
            }
        } while (next_tuple(others, N));
    }
    std::vector<Elem> inv(N);
    for (Elem u = 0; u < N; ++u) inv[u] = additive_inverse(H, u);

    // Pairwise hyperaddition masks drive the m=2 fast path; the general
    // case walks member tuples directly.
    std::vector<std::vector<uint64_t>> addmask;
    if (H.m == 2) {
        addmask.assign(N, std::vector<uint64_t>(N, 0));
        std::vector<Elem> t(2);
        for (t[0] = 0; t[0] < N; ++t[0])
            for (t[1] = 0; t[1] < N; ++t[1]) {
                uint64_t m = 0;
                H.add(t).for_each([&](Elem e) { m |= uint64_t(1) << e; });
                addmask[t[0]][t[1]] = m;
            }
    }

    std::vector<ElemSet> out;
    const uint64_t top = uint64_t(1) << N;
    for (uint64_t mask = 0; mask < top; ++mask) {
        if (!(mask & (uint64_t(1) << H.zero))) continue;
        bool ok = true;
        for (int u = 0; u < N && ok; ++u) {
            if (!(mask & (uint64_t(1) << u))) continue;
            if (inv[u] < 0 || !(mask & (uint64_t(1) << inv[u]))) ok = false;
            else if (absorb[u] & ~mask) ok = false;
        }
        if (!ok) continue;
        if (H.m == 2) {
            for (int u = 0; u < N && ok; ++u) {
                if (!(mask & (uint64_t(1) << u))) continue;
                for (int v = u; v < N && ok; ++v) {
                    if (!(mask & (uint64_t(1) << v))) continue;
                    if ((addmask[u][v] | addmask[v][u]) & ~mask) ok = false;
                }
            }
        } else {
            std::vector<Elem> members;
            for (int u = 0; u < N; ++u)
                if (mask & (uint64_t(1) << u)) members.push_back(u);
            std::vector<int> idx(H.m, 0);
            std::vector<Elem> t(H.m);
            while (ok) {
                for (int i = 0; i < H.m; ++i) t[i] = members[idx[i]];
                uint64_t img = 0;
                H.add(t).for_each([&](Elem e) { img |= uint64_t(1) << e; });
                if (img & ~mask) ok = false;
                int i = H.m - 1;
                for (; i >= 0; --i) {
                    if (++idx[i] < static_cast<int>(members.size())) break;
                    idx[i] = 0;
                }
                if (i < 0) break;
            }
        }
        if (!ok) continue;
        ElemSet s(N);
        for (int u = 0; u < N; ++u)
            if (mask & (uint64_t(1) << u)) s.insert(u);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), ElemSet::card_lex_less);
    return out;
}

ElemSet radical(const HyperringTable& H, const ElemSet& I) {
    ElemSet out(H.size());
    for (Elem u = 0; u < H.size(); ++u)
        if (power_sequence_members(H, u, I)) out.insert(u);
    return out;
}

bool is_prime_set(const HyperringTable& H, const ElemSet& Q) {
    if (Q.count() >= H.size()) return false;
    std::vector<Elem> t(H.n, 0);
    do {
        if (!Q.contains(H.mul(t))) continue;
        bool some = false;
        for (Elem e : t)
            if (Q.contains(e)) { some = true; break; }
        if (!some) return false;
    } while (next_tuple(t, H.size()));
    return true;
}

ElemSet prime_radical(TablePtr Hp, const ElemSet& I) {
    ElemSet out = ElemSet::full(Hp->size());
    for (const auto& ideal : enumerate_hyperideals(Hp)) {
        if (!ideal.proper()) continue;
        if (!I.subset_of(ideal.members)) continue;
        if (is_prime_set(*Hp, ideal.members)) out.intersect(ideal.members);
    }
    return out;
}

ElemSet theta_radical(const HyperringTable& H, const ElemSet& E, const Morphism& theta) {
    if (!theta.verified) throw Error(ErrorKind::Precondition, "theta must be verified");
    ElemSet out(H.size());
    for (Elem u = 0; u < H.size(); ++u) {
        bool in = false;
        if (H.has_one()) {
            for (int r = 1; r < H.n && !in; ++r)
                if (E.contains(theta.map[power(H, u, r)])) in = true;
        }
        if (!in) {
            std::vector<Elem> tuple(H.n, u);
            Elem p = H.mul(tuple);
            ElemSet seen(H.size());
            while (true) {
                if (E.contains(theta.map[p])) { in = true; break; }
                if (seen.contains(p)) break;
                seen.insert(p);
                tuple[0] = p;
                p = H.mul(tuple);
            }
        }
        if (in) out.insert(u);
    }
    return out;
}

bool is_maximal(TablePtr Hp, const ElemSet& I) {
    Hyperideal ideal = make_ideal(Hp, I);
    if (!ideal.proper())
        throw Error(ErrorKind::Precondition, Hp->name + ": maximality is asked of proper hyperideals");
    for (const auto& other : enumerate_hyperideals(Hp)) {
        if (!other.proper()) continue;
        if (I.subset_of(other.members) && other.members != I) return false;
    }
    return true;
}

std::vector<Hyperideal> max_spectrum(TablePtr Hp) {
    std::vector<Hyperideal> ideals = enumerate_hyperideals(Hp);
    std::vector<Hyperideal> out;
    for (const auto& i : ideals) {
        if (!i.proper()) continue;
        bool maximal = true;
        for (const auto& j : ideals) {
            if (!j.proper() || j.members == i.members) continue;
            if (i.members.subset_of(j.members)) { maximal = false; break; }
        }
        if (maximal) out.push_back(i);
    }
    return out;
}

ClassificationVerdict is_theta_maximal(TablePtr Hp, const ElemSet& M, const Morphism& theta) {
    if (!theta.verified) throw Error(ErrorKind::Precondition, "theta must be verified");
    Hyperideal ideal = make_ideal(Hp, M);
    if (!ideal.proper())
        throw Error(ErrorKind::Precondition, Hp->name + ": theta-maximality is asked of proper hyperideals");
    ClassificationVerdict v{"theta-maximal", true, {}, {}};
    for (const auto& E : enumerate_hyperideals(Hp)) {
        if (!M.subset_of(E.members)) continue;
        if (!E.proper()) continue;  // E = H satisfies the disjunction
        bool inside = true;
        Elem bad = -1;
        E.members.for_each([&](Elem u) {
            if (inside && !M.contains(theta.map[u])) { inside = false; bad = u; }
        });
        if (!inside) {
            v.holds = false;
            v.witness = Witness{{bad}, -1, {E.members}};
            return v;
        }
    }
    return v;
}

bool is_invertible(const HyperringTable& H, Elem u) {
    H.require_element(u);
    Elem one = H.one_or_throw();
    std::vector<Elem> t(H.n, one);
    t[0] = u;
    for (Elem v = 0; v < H.size(); ++v) {
        t[1] = v;
        if (H.mul(t) == one) return true;
    }
    return false;
}

std::vector<Hyperideal> minimal_primes_over(TablePtr Hp, const ElemSet& E) {
    std::vector<Hyperideal> primes;
    for (const auto& ideal : enumerate_hyperideals(Hp)) {
        if (!ideal.proper()) continue;
        if (!E.subset_of(ideal.members)) continue;
        if (is_prime_set(*Hp, ideal.members)) primes.push_back(ideal);
    }
    std::vector<Hyperideal> out;
    for (const auto& p : primes) {
        bool minimal = true;
        for (const auto& q : primes) {
            if (q.members == p.members) continue;
            if (q.members.subset_of(p.members)) { minimal = false; break; }
        }
        if (minimal) out.push_back(p);
    }
    return out;
}

Hyperideal preimage_ideal(const Morphism& f, const ElemSet& E2) {
    if (!f.verified) throw Error(ErrorKind::Precondition, "preimage through an unverified morphism");
    ElemSet pre(f.source->size());
    for (int u = 0; u < f.source->size(); ++u)
        if (E2.contains(f.map[u])) pre.insert(u);
    return make_ideal(f.source, pre);
}

Hyperideal image_ideal(const Morphism& f, const ElemSet& E1) {
    if (!f.verified) throw Error(ErrorKind::Precondition, "image through an unverified morphism");
    if (!f.is_surjective())
        throw Error(ErrorKind::Precondition, "image of a hyperideal needs an epimorphism");
    if (!kernel(f).subset_of(E1))
        throw Error(ErrorKind::Precondition, "kernel not contained in the hyperideal");
    ElemSet img(f.target->size());
    E1.for_each([&](Elem u) { img.insert(f.map[u]); });
    return make_ideal(f.target, img);
}

}  // namespace hk
