// The three graded connected combinatorial Hopf algebras that serve as bases
// and letter alphabets everywhere else, all in their fundamental (F) basis:
//
//  * Alg::S - permutations; the product grafts cut segments of the left
//    factor into the gaps of the (shifted) right factor, the coproduct
//    standardizes prefixes and suffixes.
//  * Alg::Y - planar binary trees; the product splits the left factor at a
//    multiset of leaves and grafts the pieces onto the right factor, the
//    coproduct splits at single leaves.
//  * Alg::C - divided powers; one basis element per degree, with
//    binomial-coefficient products and deconcatenation coproduct.
//
// Trees and divided powers also carry a monomial (M) basis triangular with
// respect to the rotation order (M = F for divided powers); permutations do
// not, here.

#pragma once

#include "coalg/linear.hpp"
#include "coalg/trees.hpp"

#include <string>
#include <variant>
#include <vector>

namespace coalg {

enum class Alg { S, Y, C };

/// Divided-power generator of degree n (n >= 0; n = 0 is the unit).
struct Comb {
    int n = 0;
    bool operator==(const Comb& o) const { return n == o.n; }
    bool operator<(const Comb& o) const { return n < o.n; }
};

/// A basis element of one of the three base algebras; the variant alternative
/// determines the algebra (Comb -> C, BinaryTree -> Y, Perm -> S).
using Elem = std::variant<Comb, BinaryTree, Perm>;

Alg alg_of(const Elem& e);
int degree(const Elem& e);
Elem unit_elem(Alg a);

/// All degree-n basis elements, in key order.
const std::vector<Elem>& basis(Alg a, int n);
Int dim(Alg a, int n);

/// Full coproduct of a basis element in the F basis.
LinearComb<std::pair<Elem, Elem>> coproduct(const Elem& e);
/// The terms of coproduct(e) whose left tensor factor has degree i.
LinearComb<std::pair<Elem, Elem>> coproduct_left_degree(const Elem& e, int i);
/// Counit: 1 on the degree-0 element, 0 otherwise.
Int counit(const Elem& e);

/// Product of two basis elements of the same algebra, in the F basis.
LinearComb<Elem> product(const Elem& a, const Elem& b);

/// Hopf antipode (these three are honest two-sided Hopf algebras); memoized.
LinearComb<Elem> antipode(const Elem& e);
LinearComb<Elem> antipode(const LinearComb<Elem>& x);

// --- M basis (trees and divided powers) ---------------------------------------

/// F_e expanded in the M basis (trees: sum over rotation-order upper set).
LinearComb<Elem> f_to_m(const Elem& e);
/// M_e expanded in the F basis (trees: Mobius-weighted upper set).
LinearComb<Elem> m_to_f(const Elem& e);

/// True when M_e is primitive (progressive tree; degree-1 divided power).
bool is_primitive_letter(const Elem& e);
/// The degree-n elements whose M elements are primitive.
std::vector<Elem> primitive_letters(Alg a, int n);

/// Factorization of e into its maximal-primitive word (tree spine pieces;
/// divided powers split into degree-1 letters).  Concatenating recovers e.
std::vector<Elem> m_word(const Elem& e);
Elem m_concat(Alg a, const std::vector<Elem>& word);

// --- Structure-preserving index maps ------------------------------------------

/// Max-at-root tree of a permutation (a coalgebra map S -> Y).
Elem tau_map(const Elem& perm);
/// Collapse of a tree onto the divided power of its degree (Y -> C).
Elem kappa_map(const Elem& tree);
/// Inclusion of the degree-n divided power as the degree-n right comb (C -> Y).
Elem incl_comb(const Elem& comb);

/// Dimension of the space of primitives in degree n (exact kernel rank).
Int primitive_dim(Alg a, int n);

// --- Literals ------------------------------------------------------------------

/// "c3" / tree literal / permutation literal.
std::string elem_literal(const Elem& e);
Elem parse_elem(Alg a, const std::string& s);

const char* alg_name(Alg a);

}  // namespace coalg
