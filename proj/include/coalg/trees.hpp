// Combinatorial ground types: planar binary trees, permutations as gap words,
// and the order/lattice structure on trees (rotation order, Mobius function).
//
// Trees are immutable and structurally shared; a default-constructed
// BinaryTree is the leaf (degree 0, one leaf, no nodes).  Degrees count
// internal nodes, so a tree of degree n has n + 1 leaves, numbered 0..n from
// left to right.  Splitting a tree at leaf i severs the path from leaf i to
// the root; the left piece always carries exactly the first i nodes in
// left-to-right (infix) order.

#pragma once

#include "coalg/ints.hpp"

#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace coalg {

struct TreeNode;

class BinaryTree {
  public:
    /// The leaf.
    BinaryTree() = default;

    static BinaryTree node(BinaryTree left, BinaryTree right);

    bool is_leaf() const { return root_ == nullptr; }
    int degree() const;
    const BinaryTree& left() const;
    const BinaryTree& right() const;

    bool operator==(const BinaryTree& o) const;
    bool operator!=(const BinaryTree& o) const { return !(*this == o); }
    /// Strict weak order: by degree, then recursively (left, right).
    bool operator<(const BinaryTree& o) const;

  private:
    std::shared_ptr<const TreeNode> root_;
};

struct TreeNode {
    BinaryTree left;
    BinaryTree right;
    int degree = 1;
};

/// Splits t at leaf i (0 <= i <= degree); the left piece has exactly i nodes.
std::pair<BinaryTree, BinaryTree> split_tree(const BinaryTree& t, int i);

/// Grafts forest[i] onto leaf i of base; forest.size() == base.degree() + 1.
BinaryTree graft(const std::vector<BinaryTree>& forest, const BinaryTree& base);

/// All trees with n internal nodes, sorted by operator<; memoized.
const std::vector<BinaryTree>& all_trees(int n);

/// Comb with n nodes chained along left children of the root path.
BinaryTree left_comb(int n);
/// Comb with n nodes chained along right children (the rotation-maximal tree).
BinaryTree right_comb(int n);

/// True when every node hangs on the right-child chain below the root,
/// i.e. t == right_comb(t.degree()).
bool is_right_comb(const BinaryTree& t);

/// A tree is progressive when it has at least one node and no node on the
/// right branch above the root, i.e. the root's right subtree is a leaf.
bool is_progressive(const BinaryTree& t);

/// Pieces of the right spine: piece k is the k-th node on the root's right
/// chain together with that node's left subtree.  Each piece is progressive
/// and grafting the pieces back along rightmost leaves recovers the tree.
std::vector<BinaryTree> spine_pieces(const BinaryTree& t);

/// Replaces the rightmost leaf of u by v (the "over" concatenation).
BinaryTree concat_rightmost(const BinaryTree& u, const BinaryTree& v);

// --- Rotation (Tamari) order -------------------------------------------------
//
// Covers rotate (A B) C into A (B C); left_comb(n) is minimal, right_comb(n)
// maximal.  Tables per degree are memoized, and optionally persisted under
// the directory named by the COALG_CACHE_DIR environment variable.

/// Immediate successors of t in the rotation order.
std::vector<BinaryTree> tamari_covers(const BinaryTree& t);

/// True when t <= s in the rotation order (both of equal degree).
bool tamari_leq(const BinaryTree& t, const BinaryTree& s);

/// Mobius function of the rotation order; zero unless t <= s.
Int tamari_mobius(const BinaryTree& t, const BinaryTree& s);

/// All s >= t with their Mobius values mu(t, s).
std::vector<std::pair<BinaryTree, Int>> tamari_upper(const BinaryTree& t);

// --- Permutations as gap words ----------------------------------------------

/// A permutation of {1..n} written one-line; degree n, n + 1 gaps.
using Perm = std::vector<int>;

/// Ranks a word with distinct entries into a permutation (standardization).
Perm standardize(const std::vector<int>& word);

/// Max-at-root unranking of a gap word into a binary tree: the maximal letter
/// becomes the root, recursing on the flanks.
BinaryTree tree_of_perm(const Perm& w);

/// All permutations of degree n in lexicographic order.
std::vector<Perm> all_perms(int n);

// --- Trees with a painted top (two-level trees) ------------------------------
//
// A two-level tree is a tree together with a set of nodes closed under taking
// ancestors that contains the leftmost node but neither of its children.
// Nodes are identified by their infix position, 1-based.

struct BiLeveled {
    BinaryTree shape;
    std::set<int> ideal;

    bool operator==(const BiLeveled& o) const { return shape == o.shape && ideal == o.ideal; }
    bool operator<(const BiLeveled& o) const {
        if (shape != o.shape) return shape < o.shape;
        return ideal < o.ideal;
    }
};

/// Checks ancestor-closure in the given shape (painted node => painted parent).
bool is_ancestor_closed(const BinaryTree& shape, const std::set<int>& ideal);

/// Checks the two-level conditions (ancestor-closed, leftmost node in, its
/// child out).
bool is_bileveled(const BiLeveled& b);

/// All two-level trees on n nodes.
std::vector<BiLeveled> all_bileveled(int n);

// --- Literals ----------------------------------------------------------------

/// "." for the leaf, "(L R)" for a node.
std::string tree_literal(const BinaryTree& t);
/// Parses the tree literal grammar; throws std::invalid_argument on junk.
BinaryTree parse_tree(const std::string& s);

/// Space-separated one-line notation; "e" for the empty permutation.
std::string perm_literal(const Perm& w);
Perm parse_perm(const std::string& s);

}  // namespace coalg
