// Implementation of the base algebras declared in coalg/basealg.hpp.

#include "coalg/basealg.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace coalg {

namespace {

const Perm& as_perm(const Elem& e) { return std::get<Perm>(e); }
const BinaryTree& as_tree(const Elem& e) { return std::get<BinaryTree>(e); }
const Comb& as_comb(const Elem& e) { return std::get<Comb>(e); }

/// Enumerates weakly increasing cut sequences 0 <= p_1 <= ... <= p_k <= m and
/// hands each to fn as a vector of k cut positions.
template <class Fn>
void for_cut_sequences(int m, int k, Fn&& fn) {
    std::vector<int> cuts(k, 0);
    auto rec = [&](auto&& self, int idx, int lo) -> void {
        if (idx == k) {
            fn(cuts);
            return;
        }
        for (int p = lo; p <= m; ++p) {
            cuts[idx] = p;
            self(self, idx + 1, p);
        }
    };
    rec(rec, 0, 0);
}

}  // namespace

Alg alg_of(const Elem& e) {
    switch (e.index()) {
        case 0: return Alg::C;
        case 1: return Alg::Y;
        default: return Alg::S;
    }
}

int degree(const Elem& e) {
    if (std::holds_alternative<Comb>(e)) return as_comb(e).n;
    if (std::holds_alternative<BinaryTree>(e)) return as_tree(e).degree();
    return static_cast<int>(as_perm(e).size());
}

Elem unit_elem(Alg a) {
    switch (a) {
        case Alg::C: return Comb{0};
        case Alg::Y: return BinaryTree{};
        default: return Perm{};
    }
}

const std::vector<Elem>& basis(Alg a, int n) {
    static std::map<std::pair<int, int>, std::vector<Elem>> memo;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(static_cast<int>(a), n);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<Elem> out;
    switch (a) {
        case Alg::C: out.push_back(Comb{n}); break;
        case Alg::Y:
            for (const auto& t : all_trees(n)) out.push_back(t);
            break;
        case Alg::S:
            for (const auto& w : all_perms(n)) out.push_back(w);
            break;
    }
    return memo.emplace(key, std::move(out)).first->second;
}

Int dim(Alg a, int n) {
    switch (a) {
        case Alg::C: return 1;
        case Alg::Y: return binomial(2 * n, n) / (n + 1);
        default: return factorial(n);
    }
}

LinearComb<std::pair<Elem, Elem>> coproduct(const Elem& e) {
    LinearComb<std::pair<Elem, Elem>> out;
    for (int i = 0; i <= degree(e); ++i) out += coproduct_left_degree(e, i);
    return out;
}

LinearComb<std::pair<Elem, Elem>> coproduct_left_degree(const Elem& e, int i) {
    LinearComb<std::pair<Elem, Elem>> out;
    const int n = degree(e);
    if (i < 0 || i > n) return out;
    switch (alg_of(e)) {
        case Alg::C: {
            out.add({Elem(Comb{i}), Elem(Comb{n - i})}, 1);
            break;
        }
        case Alg::Y: {
            auto [l, r] = split_tree(as_tree(e), i);
            out.add({Elem(l), Elem(r)}, 1);
            break;
        }
        case Alg::S: {
            const Perm& w = as_perm(e);
            std::vector<int> pre(w.begin(), w.begin() + i), suf(w.begin() + i, w.end());
            out.add({Elem(standardize(pre)), Elem(standardize(suf))}, 1);
            break;
        }
    }
    return out;
}

Int counit(const Elem& e) { return degree(e) == 0 ? 1 : 0; }

LinearComb<Elem> product(const Elem& a, const Elem& b) {
    if (alg_of(a) != alg_of(b)) throw std::invalid_argument("product: mixed algebras");
    LinearComb<Elem> out;
    switch (alg_of(a)) {
        case Alg::C: {
            const int m = as_comb(a).n, n = as_comb(b).n;
            out.add(Elem(Comb{m + n}), binomial(m + n, n));
            break;
        }
        case Alg::Y: {
            const BinaryTree& t = as_tree(a);
            const BinaryTree& v = as_tree(b);
            const int k = v.degree();
            for_cut_sequences(t.degree(), k, [&](const std::vector<int>& cuts) {
                std::vector<BinaryTree> forest;
                BinaryTree rest = t;
                int consumed = 0;
                for (int c : cuts) {
                    auto [piece, next] = split_tree(rest, c - consumed);
                    forest.push_back(piece);
                    rest = next;
                    consumed = c;
                }
                forest.push_back(rest);
                out.add(Elem(graft(forest, v)), 1);
            });
            break;
        }
        case Alg::S: {
            const Perm& w = as_perm(a);
            const Perm& v = as_perm(b);
            const int m = static_cast<int>(w.size());
            const int k = static_cast<int>(v.size());
            for_cut_sequences(m, k, [&](const std::vector<int>& cuts) {
                Perm res;
                res.reserve(w.size() + v.size());
                int prev = 0;
                for (int j = 0; j < k; ++j) {
                    for (int p = prev; p < cuts[j]; ++p) res.push_back(w[p]);
                    res.push_back(v[j] + m);
                    prev = cuts[j];
                }
                for (int p = prev; p < m; ++p) res.push_back(w[p]);
                out.add(Elem(std::move(res)), 1);
            });
            break;
        }
    }
    return out;
}

LinearComb<Elem> antipode(const Elem& e) {
    static std::map<Elem, LinearComb<Elem>> memo;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(e);
        if (it != memo.end()) return it->second;
    }
    LinearComb<Elem> out;
    const int n = degree(e);
    if (n == 0) {
        out.add(e, 1);
    } else {
        // m(S (x) id) Delta = unit counit, solved for S(e).
        for (int i = 0; i < n; ++i) {
            for (const auto& [pair, c] : coproduct_left_degree(e, i).terms()) {
                LinearComb<Elem> s = antipode(pair.first);
                for (const auto& [l, cl] : s.terms()) {
                    LinearComb<Elem> p = product(l, pair.second);
                    p *= c * cl;
                    out -= p;
                }
            }
        }
    }
    std::lock_guard<std::mutex> lock(mu);
    return memo.emplace(e, std::move(out)).first->second;
}

LinearComb<Elem> antipode(const LinearComb<Elem>& x) {
    return x.map_terms<Elem>([](const Elem& e) { return antipode(e); });
}

// --- M basis -------------------------------------------------------------------

LinearComb<Elem> f_to_m(const Elem& e) {
    LinearComb<Elem> out;
    switch (alg_of(e)) {
        case Alg::C: out.add(e, 1); break;
        case Alg::Y:
            for (const auto& [s, mu] : tamari_upper(as_tree(e))) {
                (void)mu;
                out.add(Elem(s), 1);
            }
            break;
        case Alg::S: throw std::invalid_argument("no monomial basis for permutations here");
    }
    return out;
}

LinearComb<Elem> m_to_f(const Elem& e) {
    LinearComb<Elem> out;
    switch (alg_of(e)) {
        case Alg::C: out.add(e, 1); break;
        case Alg::Y:
            for (const auto& [s, mu] : tamari_upper(as_tree(e))) out.add(Elem(s), mu);
            break;
        case Alg::S: throw std::invalid_argument("no monomial basis for permutations here");
    }
    return out;
}

bool is_primitive_letter(const Elem& e) {
    switch (alg_of(e)) {
        case Alg::C: return as_comb(e).n == 1;
        case Alg::Y: return is_progressive(as_tree(e));
        default: throw std::invalid_argument("no monomial basis for permutations here");
    }
}

std::vector<Elem> primitive_letters(Alg a, int n) {
    std::vector<Elem> out;
    if (n < 1) return out;
    switch (a) {
        case Alg::C:
            if (n == 1) out.push_back(Comb{1});
            break;
        case Alg::Y:
            for (const auto& t : all_trees(n))
                if (is_progressive(t)) out.push_back(t);
            break;
        default: throw std::invalid_argument("no monomial basis for permutations here");
    }
    return out;
}

std::vector<Elem> m_word(const Elem& e) {
    std::vector<Elem> out;
    switch (alg_of(e)) {
        case Alg::C:
            for (int i = 0; i < as_comb(e).n; ++i) out.push_back(Comb{1});
            break;
        case Alg::Y:
            for (const auto& p : spine_pieces(as_tree(e))) out.push_back(p);
            break;
        default: throw std::invalid_argument("no monomial basis for permutations here");
    }
    return out;
}

Elem m_concat(Alg a, const std::vector<Elem>& word) {
    switch (a) {
        case Alg::C: {
            int n = 0;
            for (const auto& e : word) n += as_comb(e).n;
            return Comb{n};
        }
        case Alg::Y: {
            BinaryTree t;
            for (const auto& e : word) t = concat_rightmost(t, as_tree(e));
            return t;
        }
        default: throw std::invalid_argument("no monomial basis for permutations here");
    }
}

// --- Index maps ------------------------------------------------------------------

Elem tau_map(const Elem& perm) { return tree_of_perm(as_perm(perm)); }

Elem kappa_map(const Elem& tree) { return Comb{as_tree(tree).degree()}; }

Elem incl_comb(const Elem& comb) { return right_comb(as_comb(comb).n); }

// --- Primitive dimension ----------------------------------------------------------

Int primitive_dim(Alg a, int n) {
    if (n <= 0) return 0;
    const Elem one = unit_elem(a);
    return reduced_kernel_dim(basis(a, n), [&](const Elem& e) {
        LinearComb<std::pair<Elem, Elem>> red = coproduct(e);
        red.add({one, e}, -1);
        red.add({e, one}, -1);
        return red;
    });
}

// --- Literals ----------------------------------------------------------------------

std::string elem_literal(const Elem& e) {
    switch (alg_of(e)) {
        case Alg::C: return "c" + std::to_string(as_comb(e).n);
        case Alg::Y: return tree_literal(as_tree(e));
        default: return perm_literal(as_perm(e));
    }
}

Elem parse_elem(Alg a, const std::string& s) {
    switch (a) {
        case Alg::C: {
            if (s.size() < 2 || s[0] != 'c')
                throw std::invalid_argument("bad divided-power literal: '" + s + "'");
            std::size_t used = 0;
            int n = std::stoi(s.substr(1), &used);
            if (used + 1 != s.size() || n < 0)
                throw std::invalid_argument("bad divided-power literal: '" + s + "'");
            return Comb{n};
        }
        case Alg::Y: return parse_tree(s);
        default: return parse_perm(s);
    }
}

const char* alg_name(Alg a) {
    switch (a) {
        case Alg::S: return "ssym";
        case Alg::Y: return "ysym";
        default: return "csym";
    }
}

}  // namespace coalg
