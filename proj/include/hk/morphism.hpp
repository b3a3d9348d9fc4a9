#pragma once

#include <string>
#include <vector>

#include "hk/table.hpp"
#include "hk/verdict.hpp"

namespace hk {

/// Total element map between two structures, with a verification mark.
/// A verified morphism preserves hyperaddition and multiplication
/// tuple-wise, sends zero to zero, and sends one to one when both
/// structures declare it.
struct Morphism {
    TablePtr source;
    TablePtr target;
    std::vector<Elem> map;
    bool verified = false;

    Elem operator()(Elem e) const { return map[e]; }

    ElemSet image_of(const ElemSet& s) const {
        ElemSet out(target->size());
        s.for_each([&](Elem e) { out.insert(map[e]); });
        return out;
    }

    bool is_identity() const {
        if (source.get() != target.get()) return false;
        for (size_t i = 0; i < map.size(); ++i)
            if (map[i] != static_cast<Elem>(i)) return false;
        return true;
    }

    bool is_surjective() const {
        ElemSet seen(target->size());
        for (Elem e : map) seen.insert(e);
        return seen.count() == target->size();
    }
};

struct MorphismCheck {
    bool ok = false;
    std::string condition;  // "additive", "multiplicative", "zero", "one"
    Witness witness;
};

MorphismCheck verify_morphism(const std::vector<Elem>& map, TablePtr source, TablePtr target);

/// Verified morphism or a precondition error describing the first
/// failing condition.
Morphism make_morphism(TablePtr source, TablePtr target, std::vector<Elem> map);

Morphism identity_morphism(TablePtr H);

/// f after g.
Morphism compose(const Morphism& f, const Morphism& g);

/// All endomorphisms fixing zero (and one when declared), found by
/// backtracking with table pruning; sorted by image vector. The cap
/// bounds search nodes; exceeding it raises a budget error asking for
/// explicit endomorphism files.
std::vector<Morphism> enumerate_endomorphisms(TablePtr H, long cap = 10'000'000);

/// {u : f(u) = 0}; checked to be a hyperideal of the source.
ElemSet kernel(const Morphism& f);

/// Pointwise theta2(eta(x)) == eta(theta1(x)); witness is the first
/// failing element in declaration order.
bool commutes(const Morphism& eta, const Morphism& theta1, const Morphism& theta2,
              Elem* witness = nullptr);

/// "identity", or the moved points as "a->b c->d ...".
std::string endo_display_name(const Morphism& f);

}  // namespace hk
