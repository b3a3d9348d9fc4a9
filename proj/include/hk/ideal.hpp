#pragma once

#include <string>
#include <vector>

#include "hk/morphism.hpp"
#include "hk/table.hpp"
#include "hk/verdict.hpp"

namespace hk {

/// Subset closed as an m-ary subhypergroup and absorbing under the
/// multiplication in every argument position.
struct Hyperideal {
    TablePtr parent;
    ElemSet members;

    bool proper() const { return members.count() < parent->size(); }
};

struct IdealCheck {
    bool ok = false;
    Witness witness;
    std::string detail;
};

IdealCheck is_hyperideal(const HyperringTable& H, const ElemSet& S);

/// Verified construction; throws a precondition error when S fails.
Hyperideal make_ideal(TablePtr H, ElemSet S);

/// Least hyperideal containing S (adds zero, inverses, hyperaddition
/// images and absorption images to a fixpoint).
Hyperideal ideal_closure(TablePtr H, const ElemSet& S);

struct PrincipalResult {
    ElemSet members;       // {k(u,v,1^(n-2)) : v in H}
    bool is_ideal = true;  // the set as written can fail the ideal conditions
    std::string warning;
};

/// Hyperideal generated by u via the one-sided product formula. Needs a
/// declared one. The raw set is returned with a warning when it is not
/// itself a hyperideal.
PrincipalResult principal(const HyperringTable& H, Elem u);

/// {v : k(u,v,1^(n-2)) in I for every u in A}; H when A is empty.
ElemSet colon(const HyperringTable& H, const ElemSet& I, const ElemSet& A);

/// All hyperideals, ordered by cardinality then lexicographic member
/// list. Closure-generated; cross-checked against subset filtering for
/// small carriers in debug builds.
std::vector<Hyperideal> enumerate_hyperideals(TablePtr H);

/// Exhaustive subset filter (the independent oracle); carriers up to 26
/// elements.
std::vector<ElemSet> all_hyperideals_bruteforce(const HyperringTable& H);

/// Exponent-formula radical: elements with some valid power inside I.
ElemSet radical(const HyperringTable& H, const ElemSet& I);

/// Intersection of the prime hyperideals containing I; H when none.
ElemSet prime_radical(TablePtr H, const ElemSet& I);

/// Elementwise prime test (no witness bookkeeping; classify has the
/// verdict-producing twin).
bool is_prime_set(const HyperringTable& H, const ElemSet& Q);

/// Radical with theta applied to each power before the membership test.
ElemSet theta_radical(const HyperringTable& H, const ElemSet& E, const Morphism& theta);

inline ElemSet nilpotents(const HyperringTable& H) {
    return radical(H, ElemSet::single(H.size(), H.zero));
}
inline ElemSet theta_nilpotents(const HyperringTable& H, const Morphism& theta) {
    return theta_radical(H, ElemSet::single(H.size(), H.zero), theta);
}

bool is_maximal(TablePtr H, const ElemSet& I);
std::vector<Hyperideal> max_spectrum(TablePtr H);

/// Proper M such that every hyperideal E containing M has theta(E)
/// inside M or equals H. Witness carries the offending E and an element
/// of it whose image escapes M.
ClassificationVerdict is_theta_maximal(TablePtr H, const ElemSet& M, const Morphism& theta);

bool is_invertible(const HyperringTable& H, Elem u);

std::vector<Hyperideal> minimal_primes_over(TablePtr H, const ElemSet& E);

/// {u : f(u) in E2}, rechecked as a hyperideal of the source.
Hyperideal preimage_ideal(const Morphism& f, const ElemSet& E2);

/// {f(u) : u in E1}; f must be surjective with kernel inside E1.
Hyperideal image_ideal(const Morphism& f, const ElemSet& E1);

}  // namespace hk
