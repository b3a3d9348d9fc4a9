#include "hk/construct.hpp"

#include <algorithm>

#include "hk/core.hpp"

namespace hk {

TablePtr product(TablePtr A, TablePtr B, std::string name) {
    if (A->m != B->m || A->n != B->n)
        throw Error(ErrorKind::Arity, "product factors must share m and n");
    const int NA = A->size(), NB = B->size(), N = NA * NB;

    HyperringTable P;
    P.name = name.empty() ? A->name + "x" + B->name : std::move(name);
    P.m = A->m;
    P.n = A->n;
    P.labels.reserve(N);
    for (int i = 0; i < NA; ++i)
        for (int j = 0; j < NB; ++j)
            P.labels.push_back("(" + A->labels[i] + "," + B->labels[j] + ")");
    P.zero = A->zero * NB + B->zero;
    if (A->has_one() && B->has_one()) P.one = *A->one * NB + *B->one;
    P.commutative_add = A->commutative_add && B->commutative_add;
    P.commutative_mul = A->commutative_mul && B->commutative_mul;

    std::vector<Elem> t(P.m, 0), ta(P.m), tb(P.m);
    size_t total = 1;
    for (int i = 0; i < P.m; ++i) total *= N;
    P.add_table.reserve(total);
    do {
        for (int i = 0; i < P.m; ++i) ta[i] = t[i] / NB, tb[i] = t[i] % NB;
        const ElemSet& sa = A->add(std::span<const Elem>(ta.data(), P.m));
        const ElemSet& sb = B->add(std::span<const Elem>(tb.data(), P.m));
        ElemSet s(N);
        sa.for_each([&](Elem x) { sb.for_each([&](Elem y) { s.insert(x * NB + y); }); });
        P.add_table.push_back(std::move(s));
    } while (next_tuple(t, N));

    t.assign(P.n, 0);
    ta.assign(P.n, 0);
    tb.assign(P.n, 0);
    total = 1;
    for (int i = 0; i < P.n; ++i) total *= N;
    P.mul_table.reserve(total);
    do {
        for (int i = 0; i < P.n; ++i) ta[i] = t[i] / NB, tb[i] = t[i] % NB;
        P.mul_table.push_back(A->mul(std::span<const Elem>(ta.data(), P.n)) * NB +
                              B->mul(std::span<const Elem>(tb.data(), P.n)));
    } while (next_tuple(t, N));

    P.validate();
    return std::make_shared<HyperringTable>(std::move(P));
}

Morphism product_endo(TablePtr prod, const Morphism& ta, const Morphism& tb) {
    const int NA = ta.source->size(), NB = tb.source->size();
    if (prod->size() != NA * NB)
        throw Error(ErrorKind::Precondition, "product table does not match the factor sizes");
    std::vector<Elem> map(prod->size());
    for (int i = 0; i < NA; ++i)
        for (int j = 0; j < NB; ++j) map[i * NB + j] = ta.map[i] * NB + tb.map[j];
    return make_morphism(prod, prod, std::move(map));
}

Morphism swap_endo(TablePtr prod, int factor_size) {
    const int N = factor_size;
    if (prod->size() != N * N)
        throw Error(ErrorKind::Precondition, "swap needs the product of a structure with itself");
    std::vector<Elem> map(prod->size());
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) map[i * N + j] = j * N + i;
    return make_morphism(prod, prod, std::move(map));
}

namespace {

bool add_is_commutative(const HyperringTable& H) {
    std::vector<Elem> t(H.m, 0);
    do {
        std::vector<Elem> sorted = t;
        std::sort(sorted.begin(), sorted.end());
        if (H.add(t) != H.add(sorted)) return false;
    } while (next_tuple(t, H.size()));
    return true;
}

}  // namespace

QuotientStructure quotient(TablePtr Hp, const ElemSet& E, std::string name) {
    const HyperringTable& H = *Hp;
    const int N = H.size();
    Hyperideal ideal = make_ideal(Hp, E);
    if (!ideal.proper())
        throw Error(ErrorKind::Precondition, H.name + ": quotient needs a proper hyperideal");
    if (!add_is_commutative(H))
        throw Error(ErrorKind::Precondition,
                    H.name + ": quotient needs a commutative hyperaddition");

    // class(u) = union over e in E of h(u, e, 0^(m-2))
    std::vector<ElemSet> classes;
    std::vector<Elem> class_of(N, -1);
    for (Elem u = 0; u < N; ++u) {
        if (class_of[u] >= 0) continue;
        ElemSet cls(N);
        std::vector<Elem> t(H.m, H.zero);
        t[0] = u;
        E.for_each([&](Elem e) {
            t[1] = e;
            cls.unite(H.add(t));
        });
        for (size_t c = 0; c < classes.size(); ++c) {
            if (classes[c] == cls)
                throw Error(ErrorKind::Construction,
                            H.name + ": coset of " + H.labels[u] + " repeats a class");
        }
        if (!cls.contains(u))
            throw Error(ErrorKind::Construction,
                        H.name + ": coset of " + H.labels[u] + " misses its representative");
        int idx = static_cast<int>(classes.size());
        bool overlap = false;
        cls.for_each([&](Elem x) {
            if (class_of[x] >= 0) overlap = true;
            class_of[x] = idx;
        });
        if (overlap)
            throw Error(ErrorKind::Construction,
                        H.name + ": cosets do not partition the carrier (ideal " +
                            H.label_set(E) + ")");
        classes.push_back(std::move(cls));
    }
    const int K = static_cast<int>(classes.size());

    HyperringTable Q;
    Q.name = name.empty() ? H.name + "_mod_" + [&] {
        std::string s;
        E.for_each([&](Elem e) {
            if (!s.empty()) s += "+";
            s += H.labels[e];
        });
        return s;
    }() : std::move(name);
    Q.m = H.m;
    Q.n = H.n;
    for (const ElemSet& cls : classes) {
        std::string label;
        cls.for_each([&](Elem e) {
            if (!label.empty()) label += "+";
            label += H.labels[e];
        });
        Q.labels.push_back(std::move(label));
    }
    Q.zero = class_of[H.zero];
    if (H.has_one()) Q.one = class_of[*H.one];
    Q.commutative_add = H.commutative_add;
    Q.commutative_mul = H.commutative_mul;

    // class operations, checked for representative independence
    std::vector<std::vector<Elem>> reps(K);
    for (int c = 0; c < K; ++c) reps[c] = classes[c].members();

    std::vector<Elem> ct(Q.m, 0);
    do {
        ElemSet expected(K);
        bool first = true;
        std::vector<int> idx(Q.m, 0);
        std::vector<Elem> t(Q.m);
        while (true) {
            for (int i = 0; i < Q.m; ++i) t[i] = reps[ct[i]][idx[i]];
            ElemSet got(K);
            H.add(t).for_each([&](Elem x) { got.insert(class_of[x]); });
            if (first) {
                expected = got;
                first = false;
            } else if (got != expected) {
                throw Error(ErrorKind::Construction,
                            H.name + ": class hyperaddition depends on representatives at " +
                                H.label_tuple(t));
            }
            int i = Q.m - 1;
            for (; i >= 0; --i) {
                if (++idx[i] < static_cast<int>(reps[ct[i]].size())) break;
                idx[i] = 0;
            }
            if (i < 0) break;
        }
        Q.add_table.push_back(std::move(expected));
    } while (next_tuple(ct, K));

    ct.assign(Q.n, 0);
    do {
        Elem expected = -1;
        std::vector<int> idx(Q.n, 0);
        std::vector<Elem> t(Q.n);
        while (true) {
            for (int i = 0; i < Q.n; ++i) t[i] = reps[ct[i]][idx[i]];
            Elem got = class_of[H.mul(t)];
            if (expected < 0) {
                expected = got;
            } else if (got != expected) {
                throw Error(ErrorKind::Construction,
                            H.name + ": class multiplication depends on representatives at " +
                                H.label_tuple(t));
            }
            int i = Q.n - 1;
            for (; i >= 0; --i) {
                if (++idx[i] < static_cast<int>(reps[ct[i]].size())) break;
                idx[i] = 0;
            }
            if (i < 0) break;
        }
        Q.mul_table.push_back(expected);
    } while (next_tuple(ct, K));

    Q.validate();
    TablePtr table = std::make_shared<HyperringTable>(std::move(Q));
    Morphism projection = make_morphism(Hp, table, class_of);

    QuotientStructure out{Hp, std::move(ideal), std::move(classes), table, std::move(projection),
                          std::move(class_of)};
    return out;
}

Morphism induced_endo(const Morphism& theta, const QuotientStructure& q) {
    if (!theta.verified) throw Error(ErrorKind::Precondition, "theta must be verified");
    if (theta.source.get() != q.base.get())
        throw Error(ErrorKind::Precondition, "theta does not act on the quotient base");
    Elem bad = -1;
    q.ideal.members.for_each([&](Elem e) {
        if (bad < 0 && !q.ideal.members.contains(theta.map[e])) bad = e;
    });
    if (bad >= 0)
        throw Error(ErrorKind::Precondition,
                    "theta does not stabilize the ideal: theta(" + q.base->labels[bad] +
                        ") = " + q.base->labels[theta.map[bad]] + " escapes " +
                        q.base->label_set(q.ideal.members));

    const int K = q.table->size();
    std::vector<Elem> map(K, -1);
    for (int c = 0; c < K; ++c) {
        Elem target = -1;
        bool consistent = true;
        q.classes[c].for_each([&](Elem x) {
            Elem tc = q.class_of[theta.map[x]];
            if (target < 0) target = tc;
            else if (target != tc) consistent = false;
        });
        if (!consistent)
            throw Error(ErrorKind::Construction,
                        "induced map is not well defined on class " + q.table->labels[c]);
        map[c] = target;
    }
    return make_morphism(q.table, q.table, std::move(map));
}

Restriction restrict_structure(TablePtr Hp, const ElemSet& G, const Morphism& theta,
                               std::string name) {
    const HyperringTable& H = *Hp;
    if (!theta.verified || theta.source.get() != Hp.get() || theta.target.get() != Hp.get())
        throw Error(ErrorKind::Precondition, "theta must be a verified endomorphism");
    if (!G.contains(H.zero))
        throw Error(ErrorKind::Precondition, H.name + ": subcarrier must contain zero");
    if (H.has_one() && !G.contains(*H.one))
        throw Error(ErrorKind::Precondition, H.name + ": subcarrier must contain one");
    {
        Elem bad = -1;
        G.for_each([&](Elem x) {
            if (bad < 0 && !G.contains(theta.map[x])) bad = x;
        });
        if (bad >= 0)
            throw Error(ErrorKind::Precondition,
                        H.name + ": theta(" + H.labels[bad] + ") leaves the subcarrier");
    }
    std::vector<Elem> members = G.members();
    const int K = static_cast<int>(members.size());
    std::vector<Elem> to_sub(H.size(), -1);
    for (int i = 0; i < K; ++i) to_sub[members[i]] = i;

    for (Elem u : members) {
        Elem inv = additive_inverse(H, u);
        if (inv < 0 || !G.contains(inv))
            throw Error(ErrorKind::Precondition,
                        H.name + ": additive inverse of " + H.labels[u] +
                            " leaves the subcarrier");
    }

    HyperringTable R;
    R.name = name.empty() ? H.name + "_sub" + std::to_string(K) : std::move(name);
    R.m = H.m;
    R.n = H.n;
    for (Elem u : members) R.labels.push_back(H.labels[u]);
    R.zero = to_sub[H.zero];
    if (H.has_one()) R.one = to_sub[*H.one];
    R.commutative_add = H.commutative_add;
    R.commutative_mul = H.commutative_mul;

    std::vector<Elem> st(R.m, 0), t(H.m);
    do {
        for (int i = 0; i < R.m; ++i) t[i] = members[st[i]];
        ElemSet trace(K);
        H.add(t).for_each([&](Elem x) {
            if (G.contains(x)) trace.insert(to_sub[x]);
        });
        if (trace.empty())
            throw Error(ErrorKind::Precondition,
                        H.name + ": induced hyperaddition is empty at " + H.label_tuple(t));
        R.add_table.push_back(std::move(trace));
    } while (next_tuple(st, K));

    st.assign(R.n, 0);
    t.assign(H.n, 0);
    do {
        for (int i = 0; i < R.n; ++i) t[i] = members[st[i]];
        Elem prod = H.mul(t);
        if (!G.contains(prod))
            throw Error(ErrorKind::Precondition,
                        H.name + ": multiplication leaves the subcarrier at " + H.label_tuple(t));
        R.mul_table.push_back(to_sub[prod]);
    } while (next_tuple(st, K));

    R.validate();
    TablePtr table = std::make_shared<HyperringTable>(std::move(R));
    AxiomReport axioms = verify_axioms(*table);
    if (!axioms.passed)
        throw Error(ErrorKind::Construction,
                    H.name + ": induced substructure fails axiom " + axioms.violations[0].axiom);

    std::vector<Elem> restricted(K);
    for (int i = 0; i < K; ++i) restricted[i] = to_sub[theta.map[members[i]]];
    Morphism endo = make_morphism(table, table, std::move(restricted));

    return Restriction{table, std::move(endo), std::move(members)};
}

}  // namespace hk
