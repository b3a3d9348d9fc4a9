#include "hk/core.hpp"

#include <algorithm>
#include <sstream>

namespace hk {

ElemSet add_image(const HyperringTable& H, const ElemSet& first, std::span<const Elem> rest) {
    ElemSet out(H.size());
    std::vector<Elem> tuple(H.m);
    std::copy(rest.begin(), rest.end(), tuple.begin() + 1);
    first.for_each([&](Elem s) {
        tuple[0] = s;
        out.unite(H.add(tuple));
    });
    return out;
}

// Image of the m-ary hyperaddition with a set in slot `pos` (0-based).
static ElemSet add_image_at(const HyperringTable& H, std::span<const Elem> args, int pos,
                            const ElemSet& slot) {
    ElemSet out(H.size());
    std::vector<Elem> tuple(args.begin(), args.end());
    slot.for_each([&](Elem s) {
        tuple[pos] = s;
        out.unite(H.add(tuple));
    });
    return out;
}

static void check_args(const HyperringTable& H, std::span<const Elem> args) {
    for (Elem e : args)
        if (e < 0 || e >= H.size())
            throw Error(ErrorKind::Domain, H.name + ": unknown element in argument tuple");
}

ElemSet iterated_add(const HyperringTable& H, int l, std::span<const Elem> args) {
    if (l < 1) throw Error(ErrorKind::Arity, H.name + ": iteration count must be at least 1");
    const size_t want = size_t(l) * (H.m - 1) + 1;
    if (args.size() != want)
        throw Error(ErrorKind::Arity, H.name + ": iterated hyperaddition expects " +
                                          std::to_string(want) + " arguments, got " +
                                          std::to_string(args.size()));
    check_args(H, args);
    ElemSet acc = H.add(args.subspan(0, H.m));
    for (size_t at = H.m; at < args.size(); at += H.m - 1)
        acc = add_image(H, acc, args.subspan(at, H.m - 1));
    return acc;
}

Elem iterated_mul(const HyperringTable& H, int l, std::span<const Elem> args) {
    if (l < 1) throw Error(ErrorKind::Arity, H.name + ": iteration count must be at least 1");
    const size_t want = size_t(l) * (H.n - 1) + 1;
    if (args.size() != want)
        throw Error(ErrorKind::Arity, H.name + ": iterated multiplication expects " +
                                          std::to_string(want) + " arguments, got " +
                                          std::to_string(args.size()));
    check_args(H, args);
    Elem acc = H.mul(args.subspan(0, H.n));
    std::vector<Elem> tuple(H.n);
    for (size_t at = H.n; at < args.size(); at += H.n - 1) {
        tuple[0] = acc;
        std::copy(args.begin() + at, args.begin() + at + H.n - 1, tuple.begin() + 1);
        acc = H.mul(tuple);
    }
    return acc;
}

Elem power(const HyperringTable& H, Elem u, int r) {
    H.require_element(u);
    if (r < 1) throw Error(ErrorKind::Exponent, H.name + ": exponent must be at least 1");
    if (r == 1 && H.has_one()) return u;
    if (r <= H.n) {
        if (r < H.n && !H.has_one())
            throw Error(ErrorKind::IdentityRequired,
                        H.name + ": exponent " + std::to_string(r) +
                            " needs a declared scalar identity");
        std::vector<Elem> tuple(H.n, r < H.n ? H.one_or_throw() : u);
        std::fill(tuple.begin(), tuple.begin() + r, u);
        return H.mul(tuple);
    }
    if ((r - 1) % (H.n - 1) != 0)
        throw Error(ErrorKind::Exponent, H.name + ": exponent " + std::to_string(r) +
                                             " is not of the form l(n-1)+1");
    const int l = (r - 1) / (H.n - 1);
    std::vector<Elem> tuple(H.n, u);
    Elem acc = H.mul(tuple);
    for (int step = 1; step < l; ++step) {
        tuple[0] = acc;
        acc = H.mul(tuple);
    }
    return acc;
}

bool power_sequence_members(const HyperringTable& H, Elem u, const ElemSet& target) {
    H.require_element(u);
    if (H.has_one()) {
        for (int r = 1; r < H.n; ++r)
            if (target.contains(power(H, u, r))) return true;
    }
    // r = n, 2n-1, 3n-2, ... via p <- k(p, u^(n-1)); stop on a repeat.
    std::vector<Elem> tuple(H.n, u);
    Elem p = H.mul(tuple);
    ElemSet seen(H.size());
    while (true) {
        if (target.contains(p)) return true;
        if (seen.contains(p)) return false;
        seen.insert(p);
        tuple[0] = p;
        p = H.mul(tuple);
    }
}

Elem additive_inverse(const HyperringTable& H, Elem u) {
    std::vector<Elem> tuple(H.m, H.zero);
    tuple[0] = u;
    Elem found = -1;
    for (Elem x = 0; x < H.size(); ++x) {
        tuple[1] = x;
        if (H.add(tuple).contains(H.zero)) {
            if (found >= 0) return -1;
            found = x;
        }
    }
    return found;
}

namespace {

class AxiomChecker {
public:
    explicit AxiomChecker(const HyperringTable& H) : H_(H), N_(H.size()) {}

    AxiomReport run() {
        check_identity();
        check_inverses();
        check_reversibility();
        check_add_associative();
        check_add_commutative();
        check_mul_associative();
        check_mul_commutative();
        check_distributive();
        check_zero_absorbing();
        check_one_neutral();
        report_.passed = report_.violations.empty();
        return std::move(report_);
    }

private:
    void violate(const std::string& axiom, Witness w, std::string detail) {
        for (const auto& v : report_.violations)
            if (v.axiom == axiom) return;  // keep the first witness per axiom
        report_.violations.push_back({axiom, std::move(w), std::move(detail)});
    }

    bool is_neutral(Elem e) const {
        std::vector<Elem> tuple(H_.m, e);
        for (Elem u = 0; u < N_; ++u) {
            tuple[0] = u;
            const ElemSet& img = H_.add(tuple);
            if (img.count() != 1 || !img.contains(u)) return false;
        }
        return true;
    }

    void check_identity() {
        std::vector<Elem> tuple(H_.m, H_.zero);
        for (Elem u = 0; u < N_; ++u) {
            tuple[0] = u;
            const ElemSet& img = H_.add(tuple);
            if (img.count() != 1 || !img.contains(u)) {
                violate("add-identity", Witness{{u}, -1, {}},
                        "h(" + H_.labels[u] + ",0^(m-1)) = " + H_.label_set(img));
                break;
            }
        }
        for (Elem e = 0; e < N_; ++e) {
            if (e == H_.zero) continue;
            if (is_neutral(e)) {
                violate("add-identity", Witness{{e}, -1, {}},
                        "second neutral element " + H_.labels[e]);
                break;
            }
        }
    }

    void check_inverses() {
        for (Elem u = 0; u < N_; ++u) {
            std::vector<Elem> tuple(H_.m, H_.zero);
            tuple[0] = u;
            int count = 0;
            for (Elem x = 0; x < N_; ++x) {
                tuple[1] = x;
                if (H_.add(tuple).contains(H_.zero)) ++count;
            }
            if (count != 1) {
                violate("add-inverse", Witness{{u}, -1, {}},
                        H_.labels[u] + " has " + std::to_string(count) + " additive inverses");
                return;
            }
        }
    }

    void check_reversibility() {
        std::vector<Elem> inv(N_);
        for (Elem u = 0; u < N_; ++u) {
            inv[u] = additive_inverse(H_, u);
            if (inv[u] < 0) return;  // reported by add-inverse; nothing to check against
        }
        std::vector<Elem> t(H_.m, 0);
        std::vector<Elem> probe(H_.m);
        do {
            const ElemSet& img = H_.add(t);
            for (Elem u = 0; u < N_; ++u) {
                if (!img.contains(u)) continue;
                for (int i = 0; i < H_.m; ++i) {
                    probe[0] = u;
                    int at = 1;
                    for (int j = 0; j < H_.m; ++j)
                        if (j != i) probe[at++] = inv[t[j]];
                    if (!H_.add(probe).contains(t[i])) {
                        violate("add-reversible", Witness{t, i + 1, {}},
                                H_.labels[u] + " in h" + H_.label_tuple(t) + " but " +
                                    H_.labels[t[i]] + " not in h" + H_.label_tuple(probe));
                        return;
                    }
                }
            }
        } while (next_tuple(t, N_));
    }

    ElemSet nested_add(std::span<const Elem> t, int i) const {
        // h(t_1^{i-1}, h(t_i^{m+i-1}), t_{m+i}^{2m-1}), i 1-based
        ElemSet inner = H_.add(t.subspan(i - 1, H_.m));
        std::vector<Elem> outer;
        outer.reserve(H_.m);
        for (int j = 0; j < i - 1; ++j) outer.push_back(t[j]);
        outer.push_back(0);  // slot
        for (size_t j = i - 1 + H_.m; j < t.size(); ++j) outer.push_back(t[j]);
        return add_image_at(H_, outer, i - 1, inner);
    }

    void check_add_associative() {
        std::vector<Elem> t(2 * H_.m - 1, 0);
        do {
            ElemSet first = nested_add(t, 1);
            for (int i = 2; i <= H_.m; ++i) {
                if (nested_add(t, i) != first) {
                    violate("add-associative", Witness{t, i, {}},
                            "nesting positions 1 and " + std::to_string(i) + " differ on " +
                                H_.label_tuple(t));
                    return;
                }
            }
        } while (next_tuple(t, N_));
    }

    void check_add_commutative() {
        std::vector<Elem> t(H_.m, 0);
        do {
            std::vector<Elem> sorted = t;
            std::sort(sorted.begin(), sorted.end());
            if (H_.add(t) != H_.add(sorted)) {
                violate("add-commutative", Witness{t, -1, {}},
                        "h" + H_.label_tuple(t) + " = " + H_.label_set(H_.add(t)) +
                            " but h" + H_.label_tuple(sorted) + " = " +
                            H_.label_set(H_.add(sorted)));
                return;
            }
        } while (next_tuple(t, N_));
    }

    Elem nested_mul(std::span<const Elem> t, int i) const {
        std::vector<Elem> outer;
        outer.reserve(H_.n);
        for (int j = 0; j < i - 1; ++j) outer.push_back(t[j]);
        outer.push_back(H_.mul(t.subspan(i - 1, H_.n)));
        for (size_t j = i - 1 + H_.n; j < t.size(); ++j) outer.push_back(t[j]);
        return H_.mul(outer);
    }

    void check_mul_associative() {
        std::vector<Elem> t(2 * H_.n - 1, 0);
        do {
            Elem first = nested_mul(t, 1);
            for (int i = 2; i <= H_.n; ++i) {
                if (nested_mul(t, i) != first) {
                    violate("mul-associative", Witness{t, i, {}},
                            "nesting positions 1 and " + std::to_string(i) + " differ on " +
                                H_.label_tuple(t));
                    return;
                }
            }
        } while (next_tuple(t, N_));
    }

    void check_mul_commutative() {
        std::vector<Elem> t(H_.n, 0);
        do {
            std::vector<Elem> sorted = t;
            std::sort(sorted.begin(), sorted.end());
            if (H_.mul(t) != H_.mul(sorted)) {
                violate("mul-commutative", Witness{t, -1, {}},
                        "k" + H_.label_tuple(t) + " = " + H_.labels[H_.mul(t)] + " but k" +
                            H_.label_tuple(sorted) + " = " + H_.labels[H_.mul(sorted)]);
                return;
            }
        } while (next_tuple(t, N_));
    }

    void check_distributive() {
        std::vector<Elem> others(H_.n - 1, 0);
        std::vector<Elem> vt(H_.m, 0);
        std::vector<Elem> slotted(H_.n);
        std::vector<Elem> image(H_.m);
        do {
            std::fill(vt.begin(), vt.end(), 0);
            do {
                const ElemSet& sum = H_.add(vt);
                for (int i = 1; i <= H_.n; ++i) {
                    int at = 0;
                    for (int j = 0; j < i - 1; ++j) slotted[j] = others[at], ++at;
                    for (int j = i; j < H_.n; ++j) slotted[j] = others[at], ++at;
                    ElemSet lhs(N_);
                    sum.for_each([&](Elem s) {
                        slotted[i - 1] = s;
                        lhs.insert(H_.mul(slotted));
                    });
                    for (int j = 0; j < H_.m; ++j) {
                        slotted[i - 1] = vt[j];
                        image[j] = H_.mul(slotted);
                    }
                    if (lhs != H_.add(image)) {
                        std::vector<Elem> w = vt;
                        w.insert(w.end(), others.begin(), others.end());
                        violate("distributive", Witness{w, i, {}},
                                "k distributed over h" + H_.label_tuple(vt) +
                                    " at position " + std::to_string(i) + " with arguments " +
                                    H_.label_tuple(others));
                        return;
                    }
                }
            } while (next_tuple(vt, N_));
        } while (next_tuple(others, N_));
    }

    void check_zero_absorbing() {
        std::vector<Elem> others(H_.n - 1, 0);
        std::vector<Elem> t(H_.n);
        do {
            for (int i = 1; i <= H_.n; ++i) {
                int at = 0;
                for (int j = 0; j < i - 1; ++j) t[j] = others[at], ++at;
                t[i - 1] = H_.zero;
                for (int j = i; j < H_.n; ++j) t[j] = others[at], ++at;
                if (H_.mul(t) != H_.zero) {
                    violate("zero-absorbing", Witness{t, i, {}},
                            "k" + H_.label_tuple(t) + " = " + H_.labels[H_.mul(t)]);
                    return;
                }
            }
        } while (next_tuple(others, N_));
    }

    void check_one_neutral() {
        if (!H_.one) return;
        std::vector<Elem> tuple(H_.n, *H_.one);
        for (Elem u = 0; u < N_; ++u) {
            tuple[0] = u;
            Elem got = H_.mul(tuple);
            if (got != u) {
                report_.warnings.push_back(
                    {"one-not-neutral", Witness{{u}, -1, {}},
                     "declared one is not a scalar identity: k(" + H_.labels[u] + "," +
                         H_.labels[*H_.one] + "^(n-1)) = " + H_.labels[got]});
                return;
            }
        }
    }

    const HyperringTable& H_;
    int N_;
    AxiomReport report_;
};

}  // namespace

AxiomReport verify_axioms(const HyperringTable& H) {
    H.validate();
    return AxiomChecker(H).run();
}

std::string render_axiom_report(const HyperringTable& H, const AxiomReport& report) {
    std::ostringstream os;
    os << "structure: " << H.name << "\n";
    os << "axioms: " << (report.passed ? "pass" : "fail") << "\n";
    for (const auto& v : report.violations) {
        os << "violation: " << v.axiom << " witness=" << H.label_tuple(v.witness.elements);
        if (v.witness.position >= 0) os << " position=" << v.witness.position;
        os << " detail=" << v.detail << "\n";
    }
    for (const auto& w : report.warnings) {
        os << "warning: " << w.id << " witness=" << H.label_tuple(w.witness.elements)
           << " detail=" << w.detail << "\n";
    }
    return os.str();
}

}  // namespace hk
