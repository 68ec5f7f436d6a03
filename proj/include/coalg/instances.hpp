// Named instances of the composite construction and their special forms:
//
//  * compositions of n + 1  <->  divided powers over divided powers,
//  * weighted trees         <->  divided powers over trees,
//  * painted trees          <->  trees over trees, with a marked rendering
//    (one tree plus the set of painted node positions) and the bijection with
//    two-level trees,
//  * the simplex-face algebra: a standalone one-sided Hopf algebra on the
//    faces of simplices, anti-isomorphic to the composition instance under
//    the boundary-point map alpha.
//
// Node/position sets in literals are infix positions, 1-based.

#pragma once

#include "coalg/compose.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace coalg {

// --- Compositions (divided powers over divided powers) --------------------------

/// Parts a_1, ..., a_k >= 1; represents a degree-(sum - 1) basis element.
using Composition = std::vector<int>;

Composed composition_to_composed(const Composition& a);
Composition composed_to_composition(const Composed& e);
std::string composition_literal(const Composition& a);  // "[1,3]"
Composition parse_composition(const std::string& s);

// --- Weighted trees (divided powers over trees) ----------------------------------

/// "(. .) @ [2,1]": shape plus per-slot weights (weight = letter degree + 1).
std::string weighted_literal(const Composed& e);
Composed parse_weighted(const std::string& s);

// --- Painted trees (trees over trees) ---------------------------------------------

/// Composite shape plus the set of painted positions (the base contributes
/// the nodes nearest the root; painted sets are closed under ancestors).
std::pair<BinaryTree, std::set<int>> painted_to_marked(const Composed& e);
Composed marked_to_painted(const BinaryTree& shape, const std::set<int>& painted);

std::string painted_marked_literal(const Composed& e);  // "shape !p {1,3}"
Composed parse_painted_marked(const std::string& s);

/// Two-level tree on n + 1 nodes -> painted tree of degree n (remove the
/// leftmost node; the remaining marked nodes become the paint).
Composed prune_bileveled(const BiLeveled& b);
/// Inverse: insert a new leftmost node directly under the painted prefix of
/// the leftmost branch.
BiLeveled grow_painted(const Composed& e);

std::string bileveled_literal(const BiLeveled& b);  // "shape ! {1,2}"
BiLeveled parse_bileveled(const std::string& s);

/// Product of painted trees computed directly on the marked form: split the
/// left factor at every leaf multiset and graft the painted pieces onto the
/// fully painted right factor.  Used as an independent cross-check of the
/// connection product.
LinearComb<Composed> painted_product_direct(const Composed& p, const Composed& q);

// --- Simplex faces ------------------------------------------------------------------

/// A face of the n-simplex on vertices 0..n, encoded by the set s of cut
/// points (1-based, subset of [n]); 2^n faces in degree n.
struct Face {
    int n = 0;
    std::vector<int> s;  // strictly increasing, entries in 1..n

    bool operator==(const Face& o) const { return n == o.n && s == o.s; }
    bool operator<(const Face& o) const {
        if (n != o.n) return n < o.n;
        return s < o.s;
    }
};

const std::vector<Face>& face_basis(int n);
LinearComb<std::pair<Face, Face>> face_coproduct(const Face& f);
Int face_counit(const Face& f);
/// Shuffle product; one-sided (the degree-0 face is a left unit only).
LinearComb<Face> face_product(const Face& x, const Face& y);
/// Right-sided antipode: m(id (x) S) Delta = unit counit; memoized.
LinearComb<Face> face_antipode(const Face& f);
LinearComb<Face> face_antipode(const LinearComb<Face>& x);

std::string face_literal(const Face& f);  // "{3,5,6}/9", "{}/3"
Face parse_face(const std::string& s);

/// Boundary-point map onto compositions: consecutive gaps of the cut set.
Composition alpha(const Face& f);
Face alpha_inv(const Composition& a);

}  // namespace coalg
