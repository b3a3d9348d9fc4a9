#include "hk/classify.hpp"

#include <algorithm>

#include "hk/core.hpp"

namespace hk {

namespace {

Hyperideal proper_ideal(TablePtr H, const ElemSet& S, const char* kind) {
    Hyperideal ideal = make_ideal(H, S);
    if (!ideal.proper())
        throw Error(ErrorKind::Precondition,
                    std::string(kind) + " is asked of proper hyperideals only");
    return ideal;
}

void check_theta(const Morphism& theta, const TablePtr& H) {
    if (!theta.verified) throw Error(ErrorKind::Precondition, "theta must be verified");
    if (theta.source.get() != H.get() || theta.target.get() != H.get())
        throw Error(ErrorKind::Precondition, "theta must be an endomorphism of the structure");
}

// Shared scan for the element-tuple predicates. theta == nullptr mixes
// in no endomorphism (plain primary), target is where the substituted
// product must land (E itself for the prime flavors, rad(E) otherwise).
ClassificationVerdict scan_tuples(const char* kind, const HyperringTable& H, const ElemSet& E,
                                  const Morphism* theta, const ElemSet& target) {
    ClassificationVerdict v{kind, true, {}, {}};
    Elem one = H.one_or_throw();
    std::vector<Elem> t(H.n, 0);
    std::vector<Elem> sub(H.n);
    do {
        if (!E.contains(H.mul(t))) continue;
        for (int i = 0; i < H.n; ++i) {
            if (E.contains(t[i])) continue;
            std::copy(t.begin(), t.end(), sub.begin());
            sub[i] = one;
            Elem prod = H.mul(sub);
            if (theta) prod = theta->map[prod];
            if (target.contains(prod)) continue;
            v.holds = false;
            v.witness = Witness{t, i + 1, {}};
            return v;
        }
    } while (next_tuple(t, H.size()));
    return v;
}

}  // namespace

ClassificationVerdict is_prime(TablePtr Hp, const ElemSet& Q) {
    const HyperringTable& H = *Hp;
    proper_ideal(Hp, Q, "prime");
    ClassificationVerdict v{"prime", true, {}, {}};
    std::vector<Elem> t(H.n, 0);
    do {
        if (!Q.contains(H.mul(t))) continue;
        bool some = false;
        for (Elem e : t)
            if (Q.contains(e)) { some = true; break; }
        if (!some) {
            v.holds = false;
            v.witness = Witness{t, -1, {}};
            return v;
        }
    } while (next_tuple(t, H.size()));
    return v;
}

ClassificationVerdict is_primary(TablePtr Hp, const ElemSet& P) {
    proper_ideal(Hp, P, "primary");
    ElemSet rad = radical(*Hp, P);
    return scan_tuples("primary", *Hp, P, nullptr, rad);
}

ClassificationVerdict is_endo_prime(TablePtr Hp, const ElemSet& E, const Morphism& theta) {
    check_theta(theta, Hp);
    proper_ideal(Hp, E, "endo-prime");
    return scan_tuples("endo-prime", *Hp, E, &theta, E);
}

ClassificationVerdict is_endo_primary(TablePtr Hp, const ElemSet& E, const Morphism& theta) {
    check_theta(theta, Hp);
    proper_ideal(Hp, E, "endo-primary");
    ElemSet rad = radical(*Hp, E);
    return scan_tuples("endo-primary", *Hp, E, &theta, rad);
}

ClassificationVerdict is_strongly_endo_prime(TablePtr Hp, const ElemSet& E,
                                             const Morphism& theta) {
    const HyperringTable& H = *Hp;
    check_theta(theta, Hp);
    proper_ideal(Hp, E, "strongly-endo-prime");
    Elem one = H.one_or_throw();

    std::vector<Hyperideal> ideals = enumerate_hyperideals(Hp);
    const int count = static_cast<int>(ideals.size());
    ElemSet one_set = ElemSet::single(H.size(), one);

    // image of k over a tuple of element sets
    auto mul_image = [&](const std::vector<const ElemSet*>& slots) {
        ElemSet out(H.size());
        std::vector<std::vector<Elem>> members(H.n);
        for (int i = 0; i < H.n; ++i) members[i] = slots[i]->members();
        std::vector<int> idx(H.n, 0);
        std::vector<Elem> t(H.n);
        while (true) {
            for (int i = 0; i < H.n; ++i) t[i] = members[i][idx[i]];
            out.insert(H.mul(t));
            int i = H.n - 1;
            for (; i >= 0; --i) {
                if (++idx[i] < static_cast<int>(members[i].size())) break;
                idx[i] = 0;
            }
            if (i < 0) break;
        }
        return out;
    };

    ClassificationVerdict v{"strongly-endo-prime", true, {}, {}};
    std::vector<int> pick(H.n, 0);
    std::vector<const ElemSet*> slots(H.n);
    do {
        for (int i = 0; i < H.n; ++i) slots[i] = &ideals[pick[i]].members;
        if (!mul_image(slots).subset_of(E)) continue;
        for (int i = 0; i < H.n; ++i) {
            if (slots[i]->subset_of(E)) continue;
            std::vector<const ElemSet*> sub = slots;
            sub[i] = &one_set;
            if (theta.image_of(mul_image(sub)).subset_of(E)) continue;
            v.holds = false;
            Witness w;
            w.position = i + 1;
            for (int j = 0; j < H.n; ++j) w.ideals.push_back(*slots[j]);
            v.witness = std::move(w);
            return v;
        }
    } while (next_tuple(pick, count));
    return v;
}

ClassificationVerdict is_hyperintegral_domain(TablePtr Hp) {
    ElemSet zero = ElemSet::single(Hp->size(), Hp->zero);
    if (Hp->size() < 2)
        throw Error(ErrorKind::Precondition, Hp->name + ": domain check needs a nontrivial carrier");
    ClassificationVerdict v = is_prime(Hp, zero);
    v.kind = "domain";
    return v;
}

ClassificationVerdict is_theta_domain(TablePtr Hp, const Morphism& theta) {
    ElemSet zero = ElemSet::single(Hp->size(), Hp->zero);
    if (Hp->size() < 2)
        throw Error(ErrorKind::Precondition, Hp->name + ": domain check needs a nontrivial carrier");
    ClassificationVerdict v = is_endo_prime(Hp, zero, theta);
    v.kind = "theta-domain";
    return v;
}

}  // namespace hk
