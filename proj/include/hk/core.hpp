#pragma once

#include <span>
#include <string>
#include <vector>

#include "hk/table.hpp"
#include "hk/verdict.hpp"

namespace hk {

// Axiom identifiers reported by verify_axioms, in check order.
inline const std::vector<std::string>& axiom_ids() {
    static const std::vector<std::string> ids = {
        "add-identity",   "add-inverse",     "add-reversible",
        "add-associative", "add-commutative", "mul-associative",
        "mul-commutative", "distributive",    "zero-absorbing",
    };
    return ids;
}

struct AxiomViolation {
    std::string axiom;
    Witness witness;
    std::string detail;
};

struct AxiomWarning {
    std::string id;
    Witness witness;
    std::string detail;
};

struct AxiomReport {
    bool passed = false;  // true iff violations is empty
    std::vector<AxiomViolation> violations;
    std::vector<AxiomWarning> warnings;

    bool has_violation(const std::string& axiom) const {
        for (const auto& v : violations)
            if (v.axiom == axiom) return true;
        return false;
    }
};

/// Image of the hyperaddition over a set-valued first slot.
ElemSet add_image(const HyperringTable& H, const ElemSet& first, std::span<const Elem> rest);

/// Left-nested iterated hyperaddition; args must have length l(m-1)+1.
ElemSet iterated_add(const HyperringTable& H, int l, std::span<const Elem> args);

/// Left-nested iterated multiplication; args must have length l(n-1)+1.
Elem iterated_mul(const HyperringTable& H, int l, std::span<const Elem> args);

/// u to the r-th power: k(u^(r), 1^(n-r)) for r <= n (scalar identity
/// needed when r < n), the left-nested fold for r = l(n-1)+1, and u
/// itself for r = 1 with a declared one.
Elem power(const HyperringTable& H, Elem u, int r);

/// True iff some valid exponent r puts power(H,u,r) inside target. Walks
/// r = 1..n when one is declared, then follows p <- k(p, u^(n-1)) with
/// cycle detection.
bool power_sequence_members(const HyperringTable& H, Elem u, const ElemSet& target);

/// Exhaustive check of every Krasner (m,n)-hyperring axiom. A declared
/// one that is not a scalar identity is reported as a warning, never a
/// violation.
AxiomReport verify_axioms(const HyperringTable& H);

/// Additive inverse of u (the unique x with 0 in h(u,x,0^(m-2))), or -1
/// if no unique inverse exists.
Elem additive_inverse(const HyperringTable& H, Elem u);

std::string render_axiom_report(const HyperringTable& H, const AxiomReport& report);

}  // namespace hk
