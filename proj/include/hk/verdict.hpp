#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hk/elemset.hpp"

namespace hk {

/// Concrete evidence attached to a negative verdict. Depending on the
/// predicate this is a tuple of elements (with the failing position for
/// position-quantified conditions), a tuple of hyperideals, or both.
struct Witness {
    std::vector<Elem> elements;
    int position = -1;  // 1-based failing position, -1 when not applicable
    std::vector<ElemSet> ideals;
};

struct ClassificationVerdict {
    std::string kind;
    bool holds = false;
    std::optional<Witness> witness;
    std::vector<std::string> warnings;
};

}  // namespace hk
