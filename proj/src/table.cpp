#include "hk/table.hpp"

#include <cmath>
#include <sstream>

namespace hk {

static size_t ipow(size_t b, int e) {
    size_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

void HyperringTable::validate() const {
    const int N = size();
    if (N == 0) throw Error(ErrorKind::Precondition, name + ": empty carrier");
    if (m < 2 || n < 2) throw Error(ErrorKind::Precondition, name + ": arities must be at least 2");
    if (add_table.size() != ipow(N, m))
        throw Error(ErrorKind::Precondition, name + ": hyperaddition table is not total");
    if (mul_table.size() != ipow(N, n))
        throw Error(ErrorKind::Precondition, name + ": multiplication table is not total");
    for (const ElemSet& s : add_table) {
        if (s.universe() != N || s.empty())
            throw Error(ErrorKind::Precondition, name + ": hyperaddition image must be a non-empty subset");
    }
    for (Elem e : mul_table)
        if (e < 0 || e >= N)
            throw Error(ErrorKind::Domain, name + ": multiplication image out of range");
    if (zero < 0 || zero >= N) throw Error(ErrorKind::Domain, name + ": zero is not a carrier element");
    if (one && (*one < 0 || *one >= N))
        throw Error(ErrorKind::Domain, name + ": one is not a carrier element");
}

std::string HyperringTable::label_tuple(std::span<const Elem> tuple) const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < tuple.size(); ++i) {
        if (i) os << ',';
        os << labels[tuple[i]];
    }
    os << ')';
    return os.str();
}

std::string HyperringTable::label_set(const ElemSet& s) const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    s.for_each([&](Elem e) {
        if (!first) os << ',';
        first = false;
        os << labels[e];
    });
    os << '}';
    return os.str();
}

}  // namespace hk
