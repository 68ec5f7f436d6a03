// Implementation of the combinatorial ground types declared in coalg/trees.hpp.

#include "coalg/trees.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coalg {

namespace {

[[noreturn]] void bad_literal(const std::string& what, const std::string& s) {
    throw std::invalid_argument(what + ": '" + s + "'");
}

}  // namespace

// --- BinaryTree ---------------------------------------------------------------

BinaryTree BinaryTree::node(BinaryTree left, BinaryTree right) {
    auto n = std::make_shared<TreeNode>();
    n->degree = left.degree() + right.degree() + 1;
    n->left = std::move(left);
    n->right = std::move(right);
    BinaryTree t;
    t.root_ = std::move(n);
    return t;
}

int BinaryTree::degree() const { return root_ ? root_->degree : 0; }

const BinaryTree& BinaryTree::left() const { return root_->left; }
const BinaryTree& BinaryTree::right() const { return root_->right; }

bool BinaryTree::operator==(const BinaryTree& o) const {
    if (root_ == o.root_) return true;
    if (is_leaf() || o.is_leaf()) return false;
    if (degree() != o.degree()) return false;
    return left() == o.left() && right() == o.right();
}

bool BinaryTree::operator<(const BinaryTree& o) const {
    if (root_ == o.root_) return false;
    if (degree() != o.degree()) return degree() < o.degree();
    if (is_leaf()) return false;
    if (left() != o.left()) return left() < o.left();
    return right() < o.right();
}

std::pair<BinaryTree, BinaryTree> split_tree(const BinaryTree& t, int i) {
    if (i < 0 || i > t.degree()) throw std::invalid_argument("split_tree: leaf index out of range");
    if (t.is_leaf()) return {BinaryTree{}, BinaryTree{}};
    const int dl = t.left().degree();
    if (i <= dl) {
        auto [a, b] = split_tree(t.left(), i);
        return {a, BinaryTree::node(b, t.right())};
    }
    auto [a, b] = split_tree(t.right(), i - dl - 1);
    return {BinaryTree::node(t.left(), a), b};
}

namespace {

BinaryTree graft_range(const std::vector<BinaryTree>& forest, std::size_t lo,
                       const BinaryTree& base) {
    if (base.is_leaf()) return forest[lo];
    const int dl = base.left().degree();
    return BinaryTree::node(graft_range(forest, lo, base.left()),
                            graft_range(forest, lo + dl + 1, base.right()));
}

}  // namespace

BinaryTree graft(const std::vector<BinaryTree>& forest, const BinaryTree& base) {
    if (static_cast<int>(forest.size()) != base.degree() + 1)
        throw std::invalid_argument("graft: forest size must be base degree + 1");
    return graft_range(forest, 0, base);
}

const std::vector<BinaryTree>& all_trees(int n) {
    static std::vector<std::vector<BinaryTree>> memo = {{BinaryTree{}}};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(memo.size()) <= n) {
        const int m = static_cast<int>(memo.size());
        std::vector<BinaryTree> out;
        for (int i = 0; i < m; ++i)
            for (const auto& l : memo[i])
                for (const auto& r : memo[m - 1 - i]) out.push_back(BinaryTree::node(l, r));
        std::sort(out.begin(), out.end());
        memo.push_back(std::move(out));
    }
    return memo[n];
}

BinaryTree left_comb(int n) {
    BinaryTree t;
    for (int i = 0; i < n; ++i) t = BinaryTree::node(t, BinaryTree{});
    return t;
}

BinaryTree right_comb(int n) {
    BinaryTree t;
    for (int i = 0; i < n; ++i) t = BinaryTree::node(BinaryTree{}, t);
    return t;
}

bool is_right_comb(const BinaryTree& t) {
    if (t.is_leaf()) return true;
    return t.left().is_leaf() && is_right_comb(t.right());
}

bool is_progressive(const BinaryTree& t) { return !t.is_leaf() && t.right().is_leaf(); }

std::vector<BinaryTree> spine_pieces(const BinaryTree& t) {
    std::vector<BinaryTree> out;
    for (BinaryTree cur = t; !cur.is_leaf(); cur = cur.right())
        out.push_back(BinaryTree::node(cur.left(), BinaryTree{}));
    return out;
}

BinaryTree concat_rightmost(const BinaryTree& u, const BinaryTree& v) {
    if (u.is_leaf()) return v;
    return BinaryTree::node(u.left(), concat_rightmost(u.right(), v));
}

// --- Rotation order -----------------------------------------------------------

std::vector<BinaryTree> tamari_covers(const BinaryTree& t) {
    std::vector<BinaryTree> out;
    if (t.is_leaf()) return out;
    if (!t.left().is_leaf()) {
        // (A B) C -> A (B C)
        out.push_back(BinaryTree::node(t.left().left(),
                                       BinaryTree::node(t.left().right(), t.right())));
    }
    for (const auto& l : tamari_covers(t.left())) out.push_back(BinaryTree::node(l, t.right()));
    for (const auto& r : tamari_covers(t.right())) out.push_back(BinaryTree::node(t.left(), r));
    return out;
}

namespace {

constexpr int kMaxTamariDegree = 8;

struct TamariTable {
    std::vector<BinaryTree> trees;
    std::map<BinaryTree, int> index;
    std::size_t words = 0;
    std::vector<std::vector<std::uint64_t>> leq;  // leq[i] bit j: trees[i] <= trees[j]
    std::vector<std::vector<Int>> mob;            // mob[i][j] = mu(trees[i], trees[j])
    bool bit(int i, int j) const { return (leq[i][j / 64] >> (j % 64)) & 1u; }
};

std::string cache_path(int n) {
    const char* dir = std::getenv("COALG_CACHE_DIR");
    if (!dir || !*dir) return {};
    return std::string(dir) + "/tamari_" + std::to_string(n) + ".cache";
}

bool load_table(TamariTable& t, int n) {
    const std::string path = cache_path(n);
    if (path.empty()) return false;
    std::ifstream in(path);
    if (!in) return false;
    int fn = -1;
    std::size_t fsize = 0;
    if (!(in >> fn >> fsize) || fn != n || fsize != t.trees.size()) return false;
    const std::size_t nn = t.trees.size();
    t.leq.assign(nn, std::vector<std::uint64_t>(t.words, 0));
    t.mob.assign(nn, std::vector<Int>(nn, 0));
    std::size_t pairs = 0;
    if (!(in >> pairs)) return false;
    for (std::size_t k = 0; k < pairs; ++k) {
        std::size_t i, j;
        std::string mu;
        if (!(in >> i >> j >> mu) || i >= nn || j >= nn) return false;
        t.leq[i][j / 64] |= std::uint64_t(1) << (j % 64);
        t.mob[i][j] = Int(mu);
    }
    return true;
}

void save_table(const TamariTable& t, int n) {
    const std::string path = cache_path(n);
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) return;
    std::vector<std::tuple<std::size_t, std::size_t, std::string>> pairs;
    for (std::size_t i = 0; i < t.trees.size(); ++i)
        for (std::size_t j = 0; j < t.trees.size(); ++j)
            if (t.bit(static_cast<int>(i), static_cast<int>(j)))
                pairs.emplace_back(i, j, t.mob[i][j].str());
    out << n << ' ' << t.trees.size() << '\n' << pairs.size() << '\n';
    for (const auto& [i, j, mu] : pairs) out << i << ' ' << j << ' ' << mu << '\n';
}

void build_table(TamariTable& t, int n) {
    t.trees = all_trees(n);
    const std::size_t nn = t.trees.size();
    for (std::size_t i = 0; i < nn; ++i) t.index[t.trees[i]] = static_cast<int>(i);
    t.words = (nn + 63) / 64;
    if (load_table(t, n)) return;

    std::vector<std::vector<int>> up(nn);
    for (std::size_t i = 0; i < nn; ++i)
        for (const auto& c : tamari_covers(t.trees[i])) up[i].push_back(t.index.at(c));

    // Reachability by memoized DFS over the cover graph.
    t.leq.assign(nn, {});
    std::vector<char> done(nn, 0);
    auto dfs = [&](auto&& self, std::size_t i) -> void {
        if (done[i]) return;
        done[i] = 1;
        std::vector<std::uint64_t> row(t.words, 0);
        row[i / 64] |= std::uint64_t(1) << (i % 64);
        for (int j : up[i]) {
            self(self, j);
            for (std::size_t w = 0; w < t.words; ++w) row[w] |= t.leq[j][w];
        }
        t.leq[i] = std::move(row);
    };
    for (std::size_t i = 0; i < nn; ++i) dfs(dfs, i);

    // Linear extension: sort by size of the down-set.
    std::vector<int> below(nn, 0);
    for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t j = 0; j < nn; ++j)
            if (t.bit(static_cast<int>(i), static_cast<int>(j))) ++below[j];
    std::vector<std::size_t> order(nn);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });

    t.mob.assign(nn, std::vector<Int>(nn, 0));
    for (std::size_t i = 0; i < nn; ++i) {
        t.mob[i][i] = 1;
        for (std::size_t j : order) {
            if (j == i || !t.bit(static_cast<int>(i), static_cast<int>(j))) continue;
            Int s = 0;
            for (std::size_t w = 0; w < t.words; ++w) {
                std::uint64_t bits = t.leq[i][w];
                while (bits) {
                    const int b = __builtin_ctzll(bits);
                    bits &= bits - 1;
                    const std::size_t k = w * 64 + static_cast<std::size_t>(b);
                    if (k != j && t.bit(static_cast<int>(k), static_cast<int>(j)))
                        s += t.mob[i][k];
                }
            }
            t.mob[i][j] = -s;
        }
    }
    save_table(t, n);
}

const TamariTable& tamari_table(int n) {
    if (n < 0 || n > kMaxTamariDegree)
        throw std::invalid_argument("rotation-order tables are capped at degree " +
                                    std::to_string(kMaxTamariDegree));
    static std::map<int, std::unique_ptr<TamariTable>> memo;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = memo[n];
    if (!slot) {
        slot = std::make_unique<TamariTable>();
        build_table(*slot, n);
    }
    return *slot;
}

}  // namespace

bool tamari_leq(const BinaryTree& t, const BinaryTree& s) {
    if (t.degree() != s.degree()) return false;
    const auto& tab = tamari_table(t.degree());
    return tab.bit(tab.index.at(t), tab.index.at(s));
}

Int tamari_mobius(const BinaryTree& t, const BinaryTree& s) {
    if (t.degree() != s.degree()) return 0;
    const auto& tab = tamari_table(t.degree());
    return tab.mob[tab.index.at(t)][tab.index.at(s)];
}

std::vector<std::pair<BinaryTree, Int>> tamari_upper(const BinaryTree& t) {
    const auto& tab = tamari_table(t.degree());
    const int i = tab.index.at(t);
    std::vector<std::pair<BinaryTree, Int>> out;
    for (std::size_t j = 0; j < tab.trees.size(); ++j)
        if (tab.bit(i, static_cast<int>(j)))
            out.emplace_back(tab.trees[j], tab.mob[i][j]);
    return out;
}

// --- Permutations -------------------------------------------------------------

Perm standardize(const std::vector<int>& word) {
    std::vector<std::size_t> idx(word.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return word[a] < word[b]; });
    Perm out(word.size());
    for (std::size_t r = 0; r < idx.size(); ++r) out[idx[r]] = static_cast<int>(r) + 1;
    return out;
}

namespace {

BinaryTree tree_of_range(const Perm& w, std::size_t lo, std::size_t hi) {
    if (lo >= hi) return BinaryTree{};
    std::size_t m = lo;
    for (std::size_t i = lo + 1; i < hi; ++i)
        if (w[i] > w[m]) m = i;
    return BinaryTree::node(tree_of_range(w, lo, m), tree_of_range(w, m + 1, hi));
}

}  // namespace

BinaryTree tree_of_perm(const Perm& w) { return tree_of_range(w, 0, w.size()); }

std::vector<Perm> all_perms(int n) {
    Perm w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Perm> out;
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

// --- Two-level trees ----------------------------------------------------------

namespace {

// Traverses with infix numbering starting at offset+1; returns subtree degree.
bool closed_rec(const BinaryTree& t, int offset, bool parent_painted,
                const std::set<int>& ideal) {
    if (t.is_leaf()) return true;
    const int pos = offset + t.left().degree() + 1;
    const bool painted = ideal.count(pos) > 0;
    if (painted && !parent_painted) return false;
    return closed_rec(t.left(), offset, painted, ideal) &&
           closed_rec(t.right(), pos, painted, ideal);
}

// Ideals of the subtree rooted at t with infix offset; each ideal either is
// empty or contains the subtree root.
void ideals_rec(const BinaryTree& t, int offset, std::vector<std::set<int>>& out) {
    out.clear();
    out.push_back({});
    if (t.is_leaf()) return;
    const int pos = offset + t.left().degree() + 1;
    std::vector<std::set<int>> ls, rs;
    ideals_rec(t.left(), offset, ls);
    ideals_rec(t.right(), pos, rs);
    for (const auto& l : ls)
        for (const auto& r : rs) {
            std::set<int> s = l;
            s.insert(r.begin(), r.end());
            s.insert(pos);
            out.push_back(std::move(s));
        }
}

}  // namespace

bool is_ancestor_closed(const BinaryTree& shape, const std::set<int>& ideal) {
    if (!ideal.empty() && (*ideal.begin() < 1 || *ideal.rbegin() > shape.degree())) return false;
    return closed_rec(shape, 0, true, ideal);
}

bool is_bileveled(const BiLeveled& b) {
    if (b.shape.is_leaf()) return false;
    if (!is_ancestor_closed(b.shape, b.ideal)) return false;
    if (b.ideal.count(1) == 0) return false;
    // Leftmost node: descend left from the root; its left child is a leaf.
    BinaryTree cur = b.shape;
    while (!cur.left().is_leaf()) cur = cur.left();
    const BinaryTree& r = cur.right();
    if (!r.is_leaf()) {
        const int child_pos = 2 + r.left().degree();
        if (b.ideal.count(child_pos) > 0) return false;
    }
    return true;
}

std::vector<BiLeveled> all_bileveled(int n) {
    std::vector<BiLeveled> out;
    std::vector<std::set<int>> ideals;
    for (const auto& shape : all_trees(n)) {
        ideals_rec(shape, 0, ideals);
        for (auto& i : ideals) {
            BiLeveled b{shape, std::move(i)};
            if (is_bileveled(b)) out.push_back(std::move(b));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// --- Literals -----------------------------------------------------------------

std::string tree_literal(const BinaryTree& t) {
    if (t.is_leaf()) return ".";
    return "(" + tree_literal(t.left()) + " " + tree_literal(t.right()) + ")";
}

namespace {

void skip_ws(const std::string& s, std::size_t& pos) {
    while (pos < s.size() && s[pos] == ' ') ++pos;
}

BinaryTree parse_tree_rec(const std::string& s, std::size_t& pos) {
    skip_ws(s, pos);
    if (pos >= s.size()) bad_literal("unexpected end of tree literal", s);
    if (s[pos] == '.') {
        ++pos;
        return BinaryTree{};
    }
    if (s[pos] != '(') bad_literal("expected '.' or '(' in tree literal", s);
    ++pos;
    BinaryTree l = parse_tree_rec(s, pos);
    BinaryTree r = parse_tree_rec(s, pos);
    skip_ws(s, pos);
    if (pos >= s.size() || s[pos] != ')') bad_literal("expected ')' in tree literal", s);
    ++pos;
    return BinaryTree::node(std::move(l), std::move(r));
}

}  // namespace

BinaryTree parse_tree(const std::string& s) {
    std::size_t pos = 0;
    BinaryTree t = parse_tree_rec(s, pos);
    skip_ws(s, pos);
    if (pos != s.size()) bad_literal("trailing characters in tree literal", s);
    return t;
}

std::string perm_literal(const Perm& w) {
    if (w.empty()) return "e";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(w[i]);
    }
    return out;
}

Perm parse_perm(const std::string& s) {
    std::istringstream in(s);
    std::string tok;
    Perm w;
    while (in >> tok) {
        if (tok == "e" && w.empty()) break;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            bad_literal("bad token in permutation literal", s);
        }
        if (used != tok.size() || v < 1) bad_literal("bad token in permutation literal", s);
        w.push_back(v);
    }
    std::vector<char> seen(w.size() + 1, 0);
    for (int v : w) {
        if (v > static_cast<int>(w.size()) || seen[v])
            bad_literal("not a permutation of 1..n", s);
        seen[v] = 1;
    }
    return w;
}

}  // namespace coalg
