#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hk/elemset.hpp"
#include "hk/error.hpp"

namespace hk {

/// Finite Krasner (m,n)-hyperring presented by explicit operation tables:
/// an m-ary set-valued hyperaddition and an n-ary single-valued
/// multiplication over an ordered carrier. Index order is declaration
/// order; every report and witness in the library follows it.
///
/// Tables are stored dense over all ordered tuples. The commutativity
/// flags record how the structure is written to and read from text files
/// (canonical rows only) and that commutativity is claimed; the axiom
/// verifier checks the claim against the expanded table.
struct HyperringTable {
    std::string name;
    int m = 2;
    int n = 2;
    std::vector<std::string> labels;
    Elem zero = 0;
    std::optional<Elem> one;
    bool commutative_add = false;
    bool commutative_mul = false;
    std::vector<ElemSet> add_table;  // size() ** m entries
    std::vector<Elem> mul_table;     // size() ** n entries

    int size() const { return static_cast<int>(labels.size()); }
    bool has_one() const { return one.has_value(); }

    Elem one_or_throw() const {
        if (!one) throw Error(ErrorKind::IdentityRequired, name + ": no declared scalar identity");
        return *one;
    }

    size_t rank(std::span<const Elem> tuple) const {
        size_t r = 0;
        for (Elem e : tuple) r = r * size() + static_cast<size_t>(e);
        return r;
    }

    const ElemSet& add(std::span<const Elem> tuple) const { return add_table[rank(tuple)]; }
    Elem mul(std::span<const Elem> tuple) const { return mul_table[rank(tuple)]; }

    const std::string& label(Elem e) const { return labels[e]; }
    std::optional<Elem> index_of(const std::string& label) const {
        for (int i = 0; i < size(); ++i)
            if (labels[i] == label) return Elem(i);
        return std::nullopt;
    }

    void require_element(Elem e) const {
        if (e < 0 || e >= size())
            throw Error(ErrorKind::Domain, name + ": element index out of range");
    }

    /// Checks the representation invariants (total tables, non-empty add
    /// images, members in range). Throws on failure.
    void validate() const;

    std::string label_tuple(std::span<const Elem> tuple) const;
    std::string label_set(const ElemSet& s) const;
};

using TablePtr = std::shared_ptr<const HyperringTable>;

/// Odometer over ordered tuples; returns false after the last one.
inline bool next_tuple(std::vector<Elem>& t, int base) {
    for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
        if (++t[i] < base) return true;
        t[i] = 0;
    }
    return false;
}

}  // namespace hk
