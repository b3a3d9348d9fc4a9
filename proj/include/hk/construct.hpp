#pragma once

#include <string>
#include <vector>

#include "hk/ideal.hpp"
#include "hk/morphism.hpp"
#include "hk/table.hpp"

namespace hk {

/// Componentwise product structure. Pairs are ordered row-major: the
/// pair (a_i, b_j) sits at index i*|B| + j, labelled "(a,b)". Zero is
/// (0,0); one is declared when both factors declare it.
TablePtr product(TablePtr A, TablePtr B, std::string name = "");

/// theta_a x theta_b acting componentwise on an existing product table.
Morphism product_endo(TablePtr prod, const Morphism& ta, const Morphism& tb);

/// (x,y) -> (y,x) on the product of a structure with itself.
Morphism swap_endo(TablePtr prod, int factor_size);

struct QuotientStructure {
    TablePtr base;
    Hyperideal ideal;
    std::vector<ElemSet> classes;  // cosets, in order of first representative
    TablePtr table;                // class labels join member labels with '+'
    Morphism projection;           // base -> table, verified epimorphism
    std::vector<Elem> class_of;    // base element -> class index
};

/// Coset quotient by a proper hyperideal. Hyperaddition must be
/// commutative; representative independence of both class operations is
/// checked exhaustively during construction.
QuotientStructure quotient(TablePtr H, const ElemSet& E, std::string name = "");

/// Endomorphism class(u) -> class(theta(u)) on the quotient table.
/// Requires theta(E) inside E.
Morphism induced_endo(const Morphism& theta, const QuotientStructure& q);

struct Restriction {
    TablePtr table;
    Morphism endo;                // theta restricted to the subcarrier
    std::vector<Elem> embedding;  // restricted index -> base element
};

/// Substructure on carrier G with the induced hyperaddition
/// h(t) intersected with G. Requires zero (and declared one) in G,
/// additive inverses and multiplication closed in G, theta(G) inside G,
/// and the induced table to satisfy all axioms.
Restriction restrict_structure(TablePtr H, const ElemSet& G, const Morphism& theta,
                               std::string name = "");

}  // namespace hk
