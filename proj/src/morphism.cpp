#include "hk/morphism.hpp"

#include <algorithm>
#include <sstream>

#include "hk/ideal.hpp"

namespace hk {

MorphismCheck verify_morphism(const std::vector<Elem>& map, TablePtr source, TablePtr target) {
    const HyperringTable& A = *source;
    const HyperringTable& B = *target;
    if (map.size() != static_cast<size_t>(A.size()))
        throw Error(ErrorKind::Domain, "morphism map is not total on " + A.name);
    for (Elem e : map)
        if (e < 0 || e >= B.size())
            throw Error(ErrorKind::Domain, "morphism image outside " + B.name);
    if (A.m != B.m || A.n != B.n)
        throw Error(ErrorKind::Arity, "arity mismatch between " + A.name + " and " + B.name);

    if (map[A.zero] != B.zero)
        return {false, "zero", Witness{{A.zero}, -1, {}}};
    if (A.has_one() && B.has_one() && map[*A.one] != *B.one)
        return {false, "one", Witness{{*A.one}, -1, {}}};

    std::vector<Elem> t(A.m, 0);
    std::vector<Elem> ft(A.m);
    do {
        for (int i = 0; i < A.m; ++i) ft[i] = map[t[i]];
        ElemSet lhs(B.size());
        A.add(t).for_each([&](Elem e) { lhs.insert(map[e]); });
        if (lhs != B.add(ft)) return {false, "additive", Witness{t, -1, {}}};
    } while (next_tuple(t, A.size()));

    t.assign(A.n, 0);
    ft.assign(A.n, 0);
    do {
        for (int i = 0; i < A.n; ++i) ft[i] = map[t[i]];
        if (map[A.mul(t)] != B.mul(ft)) return {false, "multiplicative", Witness{t, -1, {}}};
    } while (next_tuple(t, A.size()));

    return {true, "", {}};
}

Morphism make_morphism(TablePtr source, TablePtr target, std::vector<Elem> map) {
    MorphismCheck check = verify_morphism(map, source, target);
    if (!check.ok)
        throw Error(ErrorKind::Precondition,
                    "map " + source->name + " -> " + target->name + " fails the " +
                        check.condition + " condition at " +
                        source->label_tuple(check.witness.elements));
    return Morphism{std::move(source), std::move(target), std::move(map), true};
}

Morphism identity_morphism(TablePtr H) {
    std::vector<Elem> map(H->size());
    for (int i = 0; i < H->size(); ++i) map[i] = i;
    return Morphism{H, H, std::move(map), true};
}

Morphism compose(const Morphism& f, const Morphism& g) {
    if (f.source.get() != g.target.get())
        throw Error(ErrorKind::Precondition, "composition domain mismatch");
    std::vector<Elem> map(g.map.size());
    for (size_t i = 0; i < map.size(); ++i) map[i] = f.map[g.map[i]];
    return make_morphism(g.source, f.target, std::move(map));
}

namespace {

class EndoSearch {
public:
    EndoSearch(TablePtr H, long cap) : ptr_(std::move(H)), H_(*ptr_), cap_(cap) {}

    std::vector<Morphism> run() {
        const int N = H_.size();
        image_.assign(N, -1);
        // All m-tuples / n-tuples grouped by their maximal element, so a
        // new assignment only triggers the checks it completes.
        collect_tuples();
        descend(0);
        std::sort(found_.begin(), found_.end());
        std::vector<Morphism> out;
        out.reserve(found_.size());
        for (auto& map : found_) out.push_back(Morphism{ptr_, ptr_, map, true});
        return out;
    }

private:
    void collect_tuples() {
        const int N = H_.size();
        add_by_max_.assign(N, {});
        mul_by_max_.assign(N, {});
        std::vector<Elem> t(H_.m, 0);
        do {
            add_by_max_[*std::max_element(t.begin(), t.end())].push_back(t);
        } while (next_tuple(t, N));
        t.assign(H_.n, 0);
        do {
            mul_by_max_[*std::max_element(t.begin(), t.end())].push_back(t);
        } while (next_tuple(t, N));
    }

    bool consistent_after(Elem x) {
        std::vector<Elem> ft(std::max(H_.m, H_.n));
        for (const auto& t : add_by_max_[x]) {
            for (int i = 0; i < H_.m; ++i) ft[i] = image_[t[i]];
            const ElemSet& rhs = H_.add(std::span<const Elem>(ft.data(), H_.m));
            const ElemSet& img = H_.add(t);
            bool all_assigned = true;
            ElemSet mapped(H_.size());
            bool bad = false;
            img.for_each([&](Elem e) {
                if (image_[e] < 0) {
                    all_assigned = false;
                } else {
                    if (!rhs.contains(image_[e])) bad = true;
                    mapped.insert(image_[e]);
                }
            });
            if (bad) return false;
            if (all_assigned && mapped != rhs) return false;
        }
        for (const auto& t : mul_by_max_[x]) {
            for (int i = 0; i < H_.n; ++i) ft[i] = image_[t[i]];
            Elem v = H_.mul(t);
            if (image_[v] >= 0 &&
                image_[v] != H_.mul(std::span<const Elem>(ft.data(), H_.n)))
                return false;
        }
        return true;
    }

    void descend(Elem x) {
        if (x == H_.size()) {
            // The incremental checks prune on assigned prefixes only; a
            // full verification settles tuples whose images completed late.
            if (verify_morphism(image_, ptr_, ptr_).ok) found_.push_back(image_);
            return;
        }
        for (Elem y = 0; y < H_.size(); ++y) {
            if (x == H_.zero && y != H_.zero) continue;
            if (H_.has_one() && x == *H_.one && y != *H_.one) continue;
            if (++nodes_ > cap_)
                throw Error(ErrorKind::Budget,
                            H_.name + ": endomorphism search exceeded " + std::to_string(cap_) +
                                " nodes; supply endomorphisms explicitly via endo lines");
            image_[x] = y;
            if (consistent_after(x)) descend(x + 1);
            image_[x] = -1;
        }
    }

    TablePtr ptr_;
    const HyperringTable& H_;
    long cap_;
    long nodes_ = 0;
    std::vector<Elem> image_;
    std::vector<std::vector<std::vector<Elem>>> add_by_max_;
    std::vector<std::vector<std::vector<Elem>>> mul_by_max_;
    std::vector<std::vector<Elem>> found_;
};

}  // namespace

std::vector<Morphism> enumerate_endomorphisms(TablePtr H, long cap) {
    if (cap < 1) throw Error(ErrorKind::Precondition, "endomorphism search cap must be positive");
    return EndoSearch(std::move(H), cap).run();
}

ElemSet kernel(const Morphism& f) {
    if (!f.verified) throw Error(ErrorKind::Precondition, "kernel of an unverified morphism");
    ElemSet ker(f.source->size());
    for (int i = 0; i < f.source->size(); ++i)
        if (f.map[i] == f.target->zero) ker.insert(i);
    IdealCheck check = is_hyperideal(*f.source, ker);
    if (!check.ok)
        throw Error(ErrorKind::Construction,
                    "kernel is not a hyperideal of " + f.source->name + ": " + check.detail);
    return ker;
}

bool commutes(const Morphism& eta, const Morphism& theta1, const Morphism& theta2,
              Elem* witness) {
    for (int x = 0; x < eta.source->size(); ++x) {
        if (theta2.map[eta.map[x]] != eta.map[theta1.map[x]]) {
            if (witness) *witness = x;
            return false;
        }
    }
    return true;
}

std::string endo_display_name(const Morphism& f) {
    std::ostringstream os;
    bool moved = false;
    for (size_t i = 0; i < f.map.size(); ++i) {
        if (f.map[i] == static_cast<Elem>(i)) continue;
        if (moved) os << ' ';
        moved = true;
        os << f.source->labels[i] << "->" << f.source->labels[f.map[i]];
    }
    return moved ? os.str() : "identity";
}

}  // namespace hk
