// Implementation of composite coalgebras declared in coalg/compose.hpp.

#include "coalg/compose.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace coalg {

namespace {

Alg parse_alg_name(const std::string& s) {
    if (s == "ssym") return Alg::S;
    if (s == "ysym") return Alg::Y;
    if (s == "csym") return Alg::C;
    throw std::invalid_argument("unknown algebra name: '" + s + "'");
}

/// Enumerates weak compositions of total into parts entries, calling fn on each.
template <class Fn>
void for_weak_compositions(int total, int parts, Fn&& fn) {
    if (parts == 0) {
        if (total == 0) {
            std::vector<int> empty;
            fn(empty);
        }
        return;
    }
    std::vector<int> a(parts, 0);
    auto rec = [&](auto&& self, int idx, int rest) -> void {
        if (idx == parts - 1) {
            a[idx] = rest;
            fn(a);
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            a[idx] = v;
            self(self, idx + 1, rest - v);
        }
    };
    rec(rec, 0, total);
}

}  // namespace

CompId comp_of(const Composed& e) {
    if (e.cs.empty()) throw std::invalid_argument("composed element with no letters");
    return CompId{alg_of(e.cs[0]), alg_of(e.d)};
}

int total_degree(const Composed& e) {
    int n = degree(e.d);
    for (const auto& c : e.cs) n += degree(c);
    return n;
}

Composed unit_composed(CompId id) {
    return Composed{unit_elem(id.outer), {unit_elem(id.inner)}};
}

bool is_valid(CompId id, const Composed& e) {
    if (alg_of(e.d) != id.outer) return false;
    if (static_cast<int>(e.cs.size()) != degree(e.d) + 1) return false;
    for (const auto& c : e.cs)
        if (alg_of(c) != id.inner) return false;
    return true;
}

LinearComb<std::pair<Composed, Composed>> compose_coproduct(const Composed& e) {
    LinearComb<std::pair<Composed, Composed>> out;
    const int k = degree(e.d);
    for (int i = 0; i <= k; ++i) {
        for (const auto& [dpair, cd] : coproduct_left_degree(e.d, i).terms()) {
            for (int j = 0; j <= degree(e.cs[i]); ++j) {
                for (const auto& [cpair, cc] : coproduct_left_degree(e.cs[i], j).terms()) {
                    Composed left{dpair.first, {}};
                    left.cs.assign(e.cs.begin(), e.cs.begin() + i);
                    left.cs.push_back(cpair.first);
                    Composed right{dpair.second, {}};
                    right.cs.push_back(cpair.second);
                    right.cs.insert(right.cs.end(), e.cs.begin() + i + 1, e.cs.end());
                    out.add({std::move(left), std::move(right)}, cd * cc);
                }
            }
        }
    }
    return out;
}

LinearComb<std::pair<Composed, Composed>> compose_coproduct_left_degree(const Composed& e,
                                                                        int deg) {
    LinearComb<std::pair<Composed, Composed>> out;
    for (const auto& [pair, c] : compose_coproduct(e).terms())
        if (total_degree(pair.first) == deg) out.add(pair, c);
    return out;
}

Int compose_counit(const Composed& e) { return total_degree(e) == 0 ? 1 : 0; }

const std::vector<Composed>& compose_basis(CompId id, int n) {
    static std::map<std::pair<CompId, int>, std::vector<Composed>> memo;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(id, n);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    std::vector<Composed> out;
    for (int k = 0; k <= n; ++k) {
        for (const auto& d : basis(id.outer, k)) {
            for_weak_compositions(n - k, k + 1, [&](const std::vector<int>& degs) {
                std::vector<Elem> letters(k + 1);
                auto rec = [&](auto&& self, int slot) -> void {
                    if (slot == k + 1) {
                        out.push_back(Composed{d, letters});
                        return;
                    }
                    for (const auto& c : basis(id.inner, degs[slot])) {
                        letters[slot] = c;
                        self(self, slot + 1);
                    }
                };
                rec(rec, 0);
            });
        }
    }
    std::sort(out.begin(), out.end());
    return memo.emplace(key, std::move(out)).first->second;
}

Int compose_dim_brute(CompId id, int n) {
    return Int(compose_basis(id, n).size());
}

Int compose_dim(CompId id, int n) {
    if (n < 0) return 0;
    std::vector<Int> inner(n + 1);
    for (int i = 0; i <= n; ++i) inner[i] = dim(id.inner, i);
    if (id.outer == Alg::S) {
        // E_n = sum_k k! [x^(n-k)] C(x)^(k+1)
        Series c(n + 1);
        for (int i = 0; i <= n; ++i) c[i] = inner[i];
        Series pow = c;
        Int total = inner[n];  // k = 0 term
        for (int k = 1; k <= n; ++k) {
            pow = pow * c;
            total += factorial(k) * pow[n - k];
        }
        return total;
    }
    std::vector<Int> e(n + 1);
    e[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Int s = inner[m];
        if (id.outer == Alg::C) {
            for (int i = 0; i < m; ++i) s += inner[i] * e[m - 1 - i];
        } else {  // tree-indexed base
            for (int i = 0; i < m; ++i) s += e[i] * e[m - 1 - i];
        }
        e[m] = s;
    }
    return e[n];
}

Composed map_components(const Composed& e, const ElemMap& inner, const ElemMap& outer) {
    Composed out{outer ? outer(e.d) : e.d, {}};
    out.cs.reserve(e.cs.size());
    for (const auto& c : e.cs) out.cs.push_back(inner ? inner(c) : c);
    return out;
}

namespace {

LinearComb<Composed> convert_components(const Composed& e,
                                        LinearComb<Elem> (*conv)(const Elem&)) {
    // All terms of conv share the degree of the input, so letter counts match.
    LinearComb<Composed> acc;
    for (const auto& [d2, cd] : conv(e.d).terms()) acc.add(Composed{d2, e.cs}, cd);
    for (std::size_t i = 0; i < e.cs.size(); ++i) {
        LinearComb<Composed> next;
        for (const auto& [partial, cp] : acc.terms()) {
            for (const auto& [c2, cc] : conv(partial.cs[i]).terms()) {
                Composed t = partial;
                t.cs[i] = c2;
                next.add(std::move(t), cp * cc);
            }
        }
        acc = std::move(next);
    }
    return acc;
}

}  // namespace

LinearComb<Composed> compose_f_to_m(const Composed& e) {
    return convert_components(e, &f_to_m);
}

LinearComb<Composed> compose_m_to_f(const Composed& e) {
    return convert_components(e, &m_to_f);
}

// --- Cofree structure -----------------------------------------------------------

int word_degree(const CofreeWord& w) {
    int n = 0;
    for (const auto& l : w) {
        n += degree(l.head);
        for (const auto& m : l.mids) n += degree(m);
    }
    return n;
}

CofreeWord phi(const Composed& e) {
    const CompId id = comp_of(e);
    if (total_degree(e) == 0) return {};
    const int k = degree(e.d);
    if (k == 0) {
        // Single letter over the trivial base: one type-two letter per
        // primitive factor of the letter.
        CofreeWord out;
        for (const auto& g : m_word(e.cs[0])) out.push_back(CofreeLetter{true, g, {}});
        return out;
    }
    if (degree(e.cs[0]) > 0) {
        // Leading letter splits off to the left.
        Composed head{unit_elem(id.outer), {e.cs[0]}};
        Composed rest = e;
        rest.cs[0] = unit_elem(id.inner);
        CofreeWord out = phi(head);
        CofreeWord tail = phi(rest);
        out.insert(out.end(), tail.begin(), tail.end());
        return out;
    }
    if (degree(e.cs[k]) > 0) {
        // Trailing letter splits off to the right.
        Composed head = e;
        head.cs[k] = unit_elem(id.inner);
        Composed tail{unit_elem(id.outer), {e.cs[k]}};
        CofreeWord out = phi(head);
        CofreeWord t = phi(tail);
        out.insert(out.end(), t.begin(), t.end());
        return out;
    }
    const std::vector<Elem> base_word = m_word(e.d);
    if (base_word.size() >= 2) {
        // The base splits at its first primitive factor; the junction letter
        // travels left and a fresh unit letter pads the right factor.
        const Elem& dl = base_word[0];
        const int i = degree(dl);
        Elem dr = m_concat(id.outer,
                           std::vector<Elem>(base_word.begin() + 1, base_word.end()));
        Composed left{dl, std::vector<Elem>(e.cs.begin(), e.cs.begin() + i + 1)};
        Composed right{std::move(dr), {}};
        right.cs.push_back(unit_elem(id.inner));
        right.cs.insert(right.cs.end(), e.cs.begin() + i + 1, e.cs.end());
        CofreeWord out = phi(left);
        CofreeWord tail = phi(right);
        out.insert(out.end(), tail.begin(), tail.end());
        return out;
    }
    // Terminal shape: primitive base, unit letters at both ends.
    CofreeLetter l;
    l.type_two = false;
    l.head = e.d;
    l.mids.assign(e.cs.begin() + 1, e.cs.end() - 1);
    return {l};
}

Composed phi_inv(CompId id, const CofreeWord& w) {
    std::vector<Elem> deltas;
    for (const auto& l : w)
        if (!l.type_two) deltas.push_back(l.head);
    Elem d = m_concat(id.outer, deltas);
    const int n = degree(d);
    std::vector<Elem> cs(n + 1, unit_elem(id.inner));
    int cursor = 0;
    std::vector<Elem> run;
    for (const auto& l : w) {
        if (l.type_two) {
            run.push_back(l.head);
            continue;
        }
        cs[cursor] = m_concat(id.inner, run);
        run.clear();
        const int k = degree(l.head);
        for (int idx = 1; idx < k; ++idx) cs[cursor + idx] = l.mids[idx - 1];
        cursor += k;
    }
    cs[cursor] = m_concat(id.inner, run);
    return Composed{std::move(d), std::move(cs)};
}

std::vector<LinearComb<Composed>> primitive_generators(CompId id, int n) {
    std::vector<LinearComb<Composed>> out;
    if (n < 1) return out;
    // One generator per type-two letter of degree n.
    for (const auto& g : primitive_letters(id.inner, n)) {
        LinearComb<Composed> gen;
        for (const auto& [s, mu] : m_to_f(g).terms())
            gen.add(Composed{unit_elem(id.outer), {s}}, mu);
        out.push_back(std::move(gen));
    }
    // One generator per type-one letter of degree n: a primitive outer head of
    // degree k with k - 1 arbitrary interior letters of total degree n - k.
    for (int k = 1; k <= n; ++k) {
        for (const auto& delta : primitive_letters(id.outer, k)) {
            const auto head_exp = m_to_f(delta);
            for_weak_compositions(n - k, k - 1, [&](const std::vector<int>& degs) {
                std::vector<Elem> mids(k - 1);
                auto rec = [&](auto&& self, int slot) -> void {
                    if (slot == k - 1) {
                        LinearComb<Composed> gen;
                        for (const auto& [s, mu] : head_exp.terms()) {
                            Composed t{s, {}};
                            t.cs.push_back(unit_elem(id.inner));
                            t.cs.insert(t.cs.end(), mids.begin(), mids.end());
                            t.cs.push_back(unit_elem(id.inner));
                            gen.add(std::move(t), mu);
                        }
                        out.push_back(std::move(gen));
                        return;
                    }
                    for (const auto& c : basis(id.inner, degs[slot])) {
                        mids[slot] = c;
                        self(self, slot + 1);
                    }
                };
                rec(rec, 0);
            });
        }
    }
    return out;
}

Int compose_primitive_dim(CompId id, int n) {
    if (n <= 0) return 0;
    const Composed one = unit_composed(id);
    return reduced_kernel_dim(compose_basis(id, n), [&](const Composed& e) {
        LinearComb<std::pair<Composed, Composed>> red = compose_coproduct(e);
        red.add({one, e}, -1);
        red.add({e, one}, -1);
        return red;
    });
}

// --- Names and literals -------------------------------------------------------------

std::string compose_name(CompId id) {
    if (id.inner == Alg::Y && id.outer == Alg::Y) return "psym";
    if (id.inner == Alg::C && id.outer == Alg::Y) return "cksym";
    if (id.inner == Alg::C && id.outer == Alg::C) return "ccsym";
    return std::string(alg_name(id.inner)) + "-o-" + alg_name(id.outer);
}

bool parse_comp_name(const std::string& name, CompId& out) {
    if (name == "psym") {
        out = CompId{Alg::Y, Alg::Y};
        return true;
    }
    if (name == "cksym") {
        out = CompId{Alg::C, Alg::Y};
        return true;
    }
    if (name == "ccsym") {
        out = CompId{Alg::C, Alg::C};
        return true;
    }
    const auto pos = name.find("-o-");
    if (pos == std::string::npos) return false;
    try {
        out = CompId{parse_alg_name(name.substr(0, pos)), parse_alg_name(name.substr(pos + 3))};
    } catch (const std::invalid_argument&) {
        return false;
    }
    return true;
}

std::string composed_literal(const Composed& e) {
    std::string out = elem_literal(e.d) + " @ [";
    for (std::size_t i = 0; i < e.cs.size(); ++i) {
        if (i) out += ", ";
        out += elem_literal(e.cs[i]);
    }
    return out + "]";
}

Composed parse_composed(CompId id, const std::string& s) {
    const auto at = s.find(" @ ");
    if (at == std::string::npos)
        throw std::invalid_argument("bad composed literal (missing ' @ '): '" + s + "'");
    Elem d = parse_elem(id.outer, s.substr(0, at));
    std::string rest = s.substr(at + 3);
    const auto lb = rest.find('[');
    const auto rb = rest.rfind(']');
    if (lb == std::string::npos || rb == std::string::npos || rb < lb)
        throw std::invalid_argument("bad composed literal (missing brackets): '" + s + "'");
    std::string body = rest.substr(lb + 1, rb - lb - 1);
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : body) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    Composed out{std::move(d), {}};
    for (auto& p : parts) {
        const auto b = p.find_first_not_of(' ');
        const auto e2 = p.find_last_not_of(' ');
        if (b == std::string::npos)
            throw std::invalid_argument("empty letter in composed literal: '" + s + "'");
        out.cs.push_back(parse_elem(id.inner, p.substr(b, e2 - b + 1)));
    }
    if (!is_valid(id, out))
        throw std::invalid_argument("composed literal has wrong letter count: '" + s + "'");
    return out;
}

}  // namespace coalg
