// Compositions of graded coalgebras on combinatorial bases.
//
// A composite algebra is determined by an inner letter algebra and an outer
// base algebra.  Its degree-n basis elements are tuples
//
//     (d | c_0, ..., c_k)    with  k = degree(d),  n = |d| + sum |c_i|,
//
// written Composed{d, cs}: an outer basis element d whose k + 1 "slots"
// (one per leaf / gap of d) each hold an inner basis element.  The coproduct
// splits d at every slot i and splits the slot's letter c_i, keeping the
// flanking letters with their sides; the counit is supported in degree 0.
//
// Composite ids are written "<inner>-o-<outer>" ("letters over base"), with
// the short names psym (trees over trees, i.e. painted trees), cksym
// (divided powers over trees, i.e. weighted trees) and ccsym (divided powers
// over divided powers, i.e. composition pairs).
//
// When both component algebras carry an M basis, the composite is cofree as
// a graded coalgebra: `phi` realizes the index bijection onto words in a
// two-type letter alphabet, with deconcatenation as the word coproduct, and
// `primitive_generators` produces the degree-n primitive elements it induces.

#pragma once

#include "coalg/basealg.hpp"

#include <functional>
#include <string>
#include <vector>

namespace coalg {

struct CompId {
    Alg inner;
    Alg outer;
    bool operator==(const CompId& o) const { return inner == o.inner && outer == o.outer; }
    bool operator<(const CompId& o) const {
        if (inner != o.inner) return inner < o.inner;
        return outer < o.outer;
    }
};

struct Composed {
    Elem d;                 // outer base element
    std::vector<Elem> cs;   // degree(d) + 1 inner letters

    bool operator==(const Composed& o) const { return d == o.d && cs == o.cs; }
    bool operator<(const Composed& o) const {
        if (d != o.d) return d < o.d;
        return cs < o.cs;
    }
};

CompId comp_of(const Composed& e);
int total_degree(const Composed& e);
Composed unit_composed(CompId id);
/// Structural validity: algebras match id and there are degree(d)+1 letters.
bool is_valid(CompId id, const Composed& e);

/// The compositional coproduct in the F basis.
LinearComb<std::pair<Composed, Composed>> compose_coproduct(const Composed& e);
/// Terms of the coproduct whose left factor has the given total degree.
LinearComb<std::pair<Composed, Composed>> compose_coproduct_left_degree(const Composed& e,
                                                                        int deg);
Int compose_counit(const Composed& e);

/// All degree-n basis elements, memoized, in key order.
const std::vector<Composed>& compose_basis(CompId id, int n);
/// Dimension by direct enumeration of the basis.
Int compose_dim_brute(CompId id, int n);
/// Dimension by the grading recursion (comb/tree-indexed bases) or the
/// factorial closed form (permutation-indexed bases).
Int compose_dim(CompId id, int n);

/// Applies index maps to every component (identity when null).
using ElemMap = std::function<Elem(const Elem&)>;
Composed map_components(const Composed& e, const ElemMap& inner, const ElemMap& outer);

/// Componentwise F -> M and M -> F coordinate changes.
LinearComb<Composed> compose_f_to_m(const Composed& e);
LinearComb<Composed> compose_m_to_f(const Composed& e);

// --- Cofree structure ----------------------------------------------------------

/// One letter of the cofree word alphabet.  A type-two letter is a primitive
/// inner letter standing alone; a type-one letter is a primitive outer letter
/// of degree k together with the k - 1 inner letters sitting strictly inside
/// its slots.
struct CofreeLetter {
    bool type_two = false;
    Elem head;               // inner primitive (type two) or outer primitive (type one)
    std::vector<Elem> mids;  // type one only: degree(head) - 1 inner letters

    bool operator==(const CofreeLetter& o) const {
        return type_two == o.type_two && head == o.head && mids == o.mids;
    }
    bool operator<(const CofreeLetter& o) const {
        if (type_two != o.type_two) return type_two < o.type_two;
        if (!(head == o.head)) return head < o.head;
        return mids < o.mids;
    }
};

using CofreeWord = std::vector<CofreeLetter>;

int word_degree(const CofreeWord& w);

/// The index bijection onto cofree words (input read in the M interpretation).
CofreeWord phi(const Composed& e);
/// Its inverse.
Composed phi_inv(CompId id, const CofreeWord& w);

/// Degree-n primitive elements in F coordinates: one per type-two letter and
/// one per type-one letter shape, expanded through the triangular M -> F
/// change of basis of the head.
std::vector<LinearComb<Composed>> primitive_generators(CompId id, int n);

/// Dimension of the primitive subspace in degree n (exact kernel rank).
Int compose_primitive_dim(CompId id, int n);

// --- Names and literals -----------------------------------------------------------

std::string compose_name(CompId id);
/// Accepts "<inner>-o-<outer>" plus the aliases psym, cksym, ccsym.
bool parse_comp_name(const std::string& name, CompId& out);

/// "d @ [c0, c1, ...]" with component literals.
std::string composed_literal(const Composed& e);
Composed parse_composed(CompId id, const std::string& s);

}  // namespace coalg
