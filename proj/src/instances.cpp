// Implementation of the named instances declared in coalg/instances.hpp.

#include "coalg/instances.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace coalg {

namespace {

[[noreturn]] void bad_literal(const std::string& what, const std::string& s) {
    throw std::invalid_argument(what + ": '" + s + "'");
}

std::vector<int> parse_int_list(const std::string& body, const std::string& ctx) {
    std::vector<int> out;
    std::string cur;
    auto flush = [&]() {
        std::string tok;
        for (char ch : cur)
            if (ch != ' ') tok += ch;
        cur.clear();
        if (tok.empty()) bad_literal("empty entry in list", ctx);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            bad_literal("bad integer in list", ctx);
        }
        if (used != tok.size()) bad_literal("bad integer in list", ctx);
        out.push_back(v);
    };
    bool any = false;
    for (char ch : body) {
        if (ch == ',') {
            flush();
            any = true;
        } else {
            cur += ch;
            if (ch != ' ') any = true;
        }
    }
    if (any) flush();
    return out;
}

std::string int_set_literal(const std::set<int>& s) {
    std::string out = "{";
    bool first = true;
    for (int v : s) {
        if (!first) out += ",";
        first = false;
        out += std::to_string(v);
    }
    return out + "}";
}

}  // namespace

// --- Compositions ----------------------------------------------------------------

Composed composition_to_composed(const Composition& a) {
    if (a.empty()) throw std::invalid_argument("composition must have at least one part");
    Composed out{Comb{static_cast<int>(a.size()) - 1}, {}};
    for (int p : a) {
        if (p < 1) throw std::invalid_argument("composition parts must be positive");
        out.cs.push_back(Comb{p - 1});
    }
    return out;
}

Composition composed_to_composition(const Composed& e) {
    Composition out;
    for (const auto& c : e.cs) out.push_back(std::get<Comb>(c).n + 1);
    return out;
}

std::string composition_literal(const Composition& a) {
    std::string out = "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(a[i]);
    }
    return out + "]";
}

Composition parse_composition(const std::string& s) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        bad_literal("bad composition literal", s);
    Composition a = parse_int_list(s.substr(1, s.size() - 2), s);
    if (a.empty()) bad_literal("composition must have at least one part", s);
    for (int p : a)
        if (p < 1) bad_literal("composition parts must be positive", s);
    return a;
}

// --- Weighted trees -----------------------------------------------------------------

std::string weighted_literal(const Composed& e) {
    std::string out = tree_literal(std::get<BinaryTree>(e.d)) + " @ [";
    for (std::size_t i = 0; i < e.cs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(std::get<Comb>(e.cs[i]).n + 1);
    }
    return out + "]";
}

Composed parse_weighted(const std::string& s) {
    const auto at = s.find(" @ ");
    if (at == std::string::npos) bad_literal("bad weighted-tree literal (missing ' @ ')", s);
    BinaryTree shape = parse_tree(s.substr(0, at));
    std::string rest = s.substr(at + 3);
    if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']')
        bad_literal("bad weighted-tree literal (missing brackets)", s);
    std::vector<int> w = parse_int_list(rest.substr(1, rest.size() - 2), s);
    if (static_cast<int>(w.size()) != shape.degree() + 1)
        bad_literal("weight count must be shape degree + 1", s);
    Composed out{shape, {}};
    for (int v : w) {
        if (v < 1) bad_literal("weights must be positive", s);
        out.cs.push_back(Comb{v - 1});
    }
    return out;
}

// --- Painted trees ---------------------------------------------------------------------

std::pair<BinaryTree, std::set<int>> painted_to_marked(const Composed& e) {
    std::vector<BinaryTree> forest;
    forest.reserve(e.cs.size());
    for (const auto& c : e.cs) forest.push_back(std::get<BinaryTree>(c));
    const BinaryTree& base = std::get<BinaryTree>(e.d);
    BinaryTree shape = graft(forest, base);
    std::set<int> painted;
    int pos = 0;
    for (int j = 1; j <= base.degree(); ++j) {
        pos += forest[j - 1].degree() + 1;
        painted.insert(pos);
    }
    return {shape, painted};
}

namespace {

// Splits a marked tree into base (painted) part and hanging letter pieces.
void unmark_rec(const BinaryTree& t, int offset, const std::set<int>& painted,
                BinaryTree& base, std::vector<BinaryTree>& letters) {
    if (t.is_leaf()) {
        base = BinaryTree{};
        letters.push_back(t);
        return;
    }
    const int pos = offset + t.left().degree() + 1;
    if (painted.count(pos) == 0) {
        base = BinaryTree{};
        letters.push_back(t);
        return;
    }
    BinaryTree bl, br;
    std::vector<BinaryTree> ll, lr;
    unmark_rec(t.left(), offset, painted, bl, ll);
    unmark_rec(t.right(), pos, painted, br, lr);
    base = BinaryTree::node(bl, br);
    letters = std::move(ll);
    letters.insert(letters.end(), lr.begin(), lr.end());
}

}  // namespace

Composed marked_to_painted(const BinaryTree& shape, const std::set<int>& painted) {
    if (!is_ancestor_closed(shape, painted))
        throw std::invalid_argument("painted positions must be closed under ancestors");
    BinaryTree base;
    std::vector<BinaryTree> letters;
    unmark_rec(shape, 0, painted, base, letters);
    Composed out{base, {}};
    for (auto& l : letters) out.cs.push_back(std::move(l));
    return out;
}

std::string painted_marked_literal(const Composed& e) {
    auto [shape, painted] = painted_to_marked(e);
    return tree_literal(shape) + " !p " + int_set_literal(painted);
}

namespace {

std::set<int> parse_pos_set(const std::string& part, const std::string& ctx) {
    std::string body = part;
    const auto b = body.find_first_not_of(' ');
    const auto e = body.find_last_not_of(' ');
    if (b == std::string::npos) bad_literal("missing position set", ctx);
    body = body.substr(b, e - b + 1);
    if (body.size() < 2 || body.front() != '{' || body.back() != '}')
        bad_literal("bad position set", ctx);
    std::set<int> out;
    for (int v : parse_int_list(body.substr(1, body.size() - 2), ctx)) {
        if (v < 1 || out.count(v)) bad_literal("bad position set", ctx);
        out.insert(v);
    }
    return out;
}

}  // namespace

Composed parse_painted_marked(const std::string& s) {
    const auto at = s.find(" !p ");
    if (at == std::string::npos) bad_literal("bad marked literal (missing ' !p ')", s);
    BinaryTree shape = parse_tree(s.substr(0, at));
    std::set<int> painted = parse_pos_set(s.substr(at + 4), s);
    if (!painted.empty() && *painted.rbegin() > shape.degree())
        bad_literal("painted position out of range", s);
    return marked_to_painted(shape, painted);
}

Composed prune_bileveled(const BiLeveled& b) {
    if (!is_bileveled(b)) throw std::invalid_argument("not a two-level tree");
    // Remove the leftmost node (infix position 1), replacing it by its right
    // subtree; remaining marks shift down by one position.
    auto remove_leftmost = [](auto&& self, const BinaryTree& t) -> BinaryTree {
        if (t.left().is_leaf()) return t.right();
        return BinaryTree::node(self(self, t.left()), t.right());
    };
    BinaryTree shape = remove_leftmost(remove_leftmost, b.shape);
    std::set<int> painted;
    for (int p : b.ideal)
        if (p != 1) painted.insert(p - 1);
    return marked_to_painted(shape, painted);
}

BiLeveled grow_painted(const Composed& e) {
    auto [shape, painted] = painted_to_marked(e);
    // Depth of the painted prefix of the leftmost branch.
    int depth = 0;
    {
        BinaryTree cur = shape;
        while (!cur.is_leaf() && painted.count(cur.left().degree() + 1) > 0) {
            ++depth;
            cur = cur.left();
        }
    }
    auto insert_at = [](auto&& self, const BinaryTree& t, int j) -> BinaryTree {
        if (j == 0) return BinaryTree::node(BinaryTree{}, t);
        return BinaryTree::node(self(self, t.left(), j - 1), t.right());
    };
    BiLeveled out;
    out.shape = insert_at(insert_at, shape, depth);
    out.ideal.insert(1);
    for (int p : painted) out.ideal.insert(p + 1);
    return out;
}

std::string bileveled_literal(const BiLeveled& b) {
    return tree_literal(b.shape) + " ! " + int_set_literal(b.ideal);
}

BiLeveled parse_bileveled(const std::string& s) {
    const auto at = s.find(" ! ");
    if (at == std::string::npos) bad_literal("bad two-level literal (missing ' ! ')", s);
    BiLeveled b;
    b.shape = parse_tree(s.substr(0, at));
    b.ideal = parse_pos_set(s.substr(at + 3), s);
    if (!is_bileveled(b)) bad_literal("not a two-level tree", s);
    return b;
}

LinearComb<Composed> painted_product_direct(const Composed& p, const Composed& q) {
    auto [pt, ppaint] = painted_to_marked(p);
    auto [qt, qpaint] = painted_to_marked(q);
    const int m = pt.degree();
    const int k = qt.degree();
    LinearComb<Composed> out;

    std::vector<int> cuts(k, 0);
    auto emit = [&]() {
        // Split (pt, ppaint) at the cut positions into k + 1 marked pieces.
        std::vector<BinaryTree> pieces;
        std::vector<std::set<int>> paints;
        BinaryTree rest = pt;
        int consumed = 0;
        for (int c : cuts) {
            auto [piece, next] = split_tree(rest, c - consumed);
            pieces.push_back(piece);
            rest = next;
            consumed = c;
        }
        pieces.push_back(rest);
        int lo = 0;
        for (const auto& piece : pieces) {
            std::set<int> s;
            for (int pos : ppaint)
                if (pos > lo && pos <= lo + piece.degree()) s.insert(pos - lo);
            paints.push_back(std::move(s));
            lo += piece.degree();
        }
        // Graft onto the fully painted right factor.
        BinaryTree shape = graft(pieces, qt);
        std::set<int> painted;
        int pos = 0;
        for (int j = 0; j <= k; ++j) {
            for (int q2 : paints[j]) painted.insert(pos + q2);
            pos += pieces[j].degree();
            if (j < k) painted.insert(++pos);
        }
        out.add(marked_to_painted(shape, painted), 1);
    };
    auto rec = [&](auto&& self, int idx, int lo) -> void {
        if (idx == k) {
            emit();
            return;
        }
        for (int c = lo; c <= m; ++c) {
            cuts[idx] = c;
            self(self, idx + 1, c);
        }
    };
    rec(rec, 0, 0);
    return out;
}

// --- Simplex faces --------------------------------------------------------------------

const std::vector<Face>& face_basis(int n) {
    static std::map<int, std::vector<Face>> memo;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    std::vector<Face> out;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        Face f;
        f.n = n;
        for (int j = 1; j <= n; ++j)
            if (mask & (1ul << (j - 1))) f.s.push_back(j);
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end());
    return memo.emplace(n, std::move(out)).first->second;
}

LinearComb<std::pair<Face, Face>> face_coproduct(const Face& f) {
    LinearComb<std::pair<Face, Face>> out;
    for (int p = 0; p <= f.n; ++p) {
        Face l, r;
        l.n = p;
        r.n = f.n - p;
        for (int j : f.s) {
            if (j <= p)
                l.s.push_back(j);
            else
                r.s.push_back(j - p);
        }
        out.add({std::move(l), std::move(r)}, 1);
    }
    return out;
}

Int face_counit(const Face& f) { return f.n == 0 ? 1 : 0; }

LinearComb<Face> face_product(const Face& x, const Face& y) {
    const int p = x.n, q = y.n;
    LinearComb<Face> out;
    // Choose the positions of the first block among p + q; the result keeps
    // every first-block position plus the images of the second block's cuts.
    std::vector<int> pos(p);
    auto rec = [&](auto&& self, int idx, int lo) -> void {
        if (idx == p) {
            std::vector<char> taken(p + q + 1, 0);
            for (int a : pos) taken[a] = 1;
            std::vector<int> complement;
            for (int a = 1; a <= p + q; ++a)
                if (!taken[a]) complement.push_back(a);
            Face r;
            r.n = p + q;
            std::set<int> cuts(pos.begin(), pos.end());
            for (int t : y.s) cuts.insert(complement[t - 1]);
            r.s.assign(cuts.begin(), cuts.end());
            out.add(std::move(r), 1);
            return;
        }
        for (int a = lo; a <= p + q; ++a) {
            pos[idx] = a;
            self(self, idx + 1, a + 1);
        }
    };
    rec(rec, 0, 1);
    return out;
}

LinearComb<Face> face_antipode(const Face& f) {
    static std::map<Face, LinearComb<Face>> memo;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(f);
        if (it != memo.end()) return it->second;
    }
    LinearComb<Face> out;
    if (f.n == 0) {
        out.add(f, 1);
    } else {
        // m(id (x) S) Delta = unit counit, using the left-sided unit.
        for (const auto& [pair, coeff] : face_coproduct(f).terms()) {
            if (pair.second.n == f.n) continue;
            LinearComb<Face> s = face_antipode(pair.second);
            for (const auto& [r, cr] : s.terms()) {
                LinearComb<Face> prod = face_product(pair.first, r);
                prod *= coeff * cr;
                out -= prod;
            }
        }
    }
    std::lock_guard<std::mutex> lock(mu);
    return memo.emplace(f, std::move(out)).first->second;
}

LinearComb<Face> face_antipode(const LinearComb<Face>& x) {
    return x.map_terms<Face>([](const Face& f) { return face_antipode(f); });
}

std::string face_literal(const Face& f) {
    std::set<int> s(f.s.begin(), f.s.end());
    return int_set_literal(s) + "/" + std::to_string(f.n);
}

Face parse_face(const std::string& s) {
    const auto slash = s.rfind('/');
    if (slash == std::string::npos || s.empty() || s.front() != '{')
        bad_literal("bad face literal", s);
    const auto close = s.rfind('}', slash);
    if (close == std::string::npos) bad_literal("bad face literal", s);
    Face f;
    std::size_t used = 0;
    try {
        f.n = std::stoi(s.substr(slash + 1), &used);
    } catch (const std::exception&) {
        bad_literal("bad face literal", s);
    }
    if (used != s.size() - slash - 1 || f.n < 0) bad_literal("bad face literal", s);
    std::set<int> cuts;
    for (int v : parse_int_list(s.substr(1, close - 1), s)) {
        if (v < 1 || v > f.n || cuts.count(v)) bad_literal("bad face literal", s);
        cuts.insert(v);
    }
    f.s.assign(cuts.begin(), cuts.end());
    return f;
}

Composition alpha(const Face& f) {
    Composition a;
    int prev = 0;
    for (int j : f.s) {
        a.push_back(j - prev);
        prev = j;
    }
    a.push_back(f.n + 1 - prev);
    return a;
}

Face alpha_inv(const Composition& a) {
    Face f;
    int total = 0;
    for (int p : a) total += p;
    f.n = total - 1;
    int acc = 0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        acc += a[i];
        f.s.push_back(acc);
    }
    return f;
}

}  // namespace coalg
