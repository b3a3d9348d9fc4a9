#pragma once

#include "hk/ideal.hpp"
#include "hk/morphism.hpp"
#include "hk/verdict.hpp"

namespace hk {

// Every predicate takes a proper hyperideal and reports a concrete
// witness on failure. The defining conditions quantify a disjunction
// over every argument position: for each product landing in the ideal
// and each position i, either the i-th argument is inside or the
// one-substituted product (pushed through theta, where applicable) is.
// The witness is the first tuple in declaration order with a failing
// position, together with that position.

ClassificationVerdict is_prime(TablePtr H, const ElemSet& Q);
ClassificationVerdict is_primary(TablePtr H, const ElemSet& P);
ClassificationVerdict is_endo_prime(TablePtr H, const ElemSet& E, const Morphism& theta);
ClassificationVerdict is_endo_primary(TablePtr H, const ElemSet& E, const Morphism& theta);

/// Same shape quantified over n-tuples of hyperideals, with subset
/// containment in place of membership.
ClassificationVerdict is_strongly_endo_prime(TablePtr H, const ElemSet& E, const Morphism& theta);

ClassificationVerdict is_hyperintegral_domain(TablePtr H);
ClassificationVerdict is_theta_domain(TablePtr H, const Morphism& theta);

}  // namespace hk
