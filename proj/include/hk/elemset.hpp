#pragma once

#include <cstdint>
#include <vector>

namespace hk {

using Elem = int;

/// Subset of a fixed finite carrier, stored as a bit vector.
class ElemSet {
public:
    ElemSet() = default;
    explicit ElemSet(int universe) : n_(universe), words_((universe + 63) / 64, 0) {}

    static ElemSet single(int universe, Elem e) {
        ElemSet s(universe);
        s.insert(e);
        return s;
    }
    static ElemSet full(int universe) {
        ElemSet s(universe);
        for (int i = 0; i < universe; ++i) s.insert(i);
        return s;
    }

    int universe() const { return n_; }

    bool contains(Elem e) const { return (words_[e >> 6] >> (e & 63)) & 1u; }
    void insert(Elem e) { words_[e >> 6] |= uint64_t(1) << (e & 63); }
    void erase(Elem e) { words_[e >> 6] &= ~(uint64_t(1) << (e & 63)); }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : words_) if (w) return false;
        return true;
    }

    bool subset_of(const ElemSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    ElemSet& unite(const ElemSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    ElemSet& intersect(const ElemSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    bool operator==(const ElemSet& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const ElemSet& o) const { return !(*this == o); }

    std::vector<Elem> members() const {
        std::vector<Elem> out;
        for (int i = 0; i < n_; ++i)
            if (contains(i)) out.push_back(i);
        return out;
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (size_t wi = 0; wi < words_.size(); ++wi) {
            uint64_t w = words_[wi];
            while (w) {
                int b = __builtin_ctzll(w);
                fn(Elem(wi * 64 + b));
                w &= w - 1;
            }
        }
    }

    /// Cardinality first, then lexicographic on the ascending member list.
    static bool card_lex_less(const ElemSet& a, const ElemSet& b) {
        int ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        return a.members() < b.members();
    }

private:
    int n_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace hk
