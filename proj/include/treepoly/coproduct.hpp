#pragma once

// Co-addition: the unital algebra homomorphism into the tensor square that
// sends the single-vertex tree x to x (x) 1 + 1 (x) x. On a basis tree it is
// computed directly as the sum over all leaf subsets I of the contraction
// pairs (T|I) (x) (T|Ic), which the test suite checks against the recursive
// homomorphism route.

#include "treepoly/shuffle.hpp"
#include "treepoly/tree_polynomial.hpp"

namespace treepoly {

inline TensorPolynomial coproductTree(const BasisElement& t) {
    TensorPolynomial out;
    if (t.isUnit()) {
        out.add(BasisElement::unit(), BasisElement::unit(), 1);
        return out;
    }
    const PlanarTree& tree = t.tree();
    const int d = tree.degree();
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        LeafSet inside, outside;
        for (int i = 0; i < d; ++i) ((mask >> i) & 1u ? inside : outside).insert(i);
        out.add(contract(tree, inside), contract(tree, outside), 1);
    }
    return out;
}

inline TensorPolynomial coproductPoly(const TreePolynomial& f) {
    TensorPolynomial out;
    for (const auto& [t, c] : f.terms()) out += c * coproductTree(t);
    return out;
}

/// Coefficient duality between co-addition and the shuffle product: the
/// coefficient of V (x) W in the coproduct of f equals
/// sum over T of c_T(f) * c_T(V ⧢ W). The left side goes through
/// coproductPoly, the right side through shuffleTrees.
inline bool dualityCheck(const TreePolynomial& f, const BasisElement& v, const BasisElement& w) {
    const RationalFunction lhs = coeff2(coproductPoly(f), v, w);
    const TreePolynomial product = shuffleTrees(v, w);
    RationalFunction rhs;
    for (const auto& [t, c] : f.terms()) rhs += c * product.coefficient(t);
    return lhs == rhs;
}

} // namespace treepoly
