// Implementation of the operad layer declared in coalg/operad.hpp.

#include "coalg/operad.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace coalg {

Elem operad_gamma(const Elem& base, const std::vector<Elem>& args) {
    if (static_cast<int>(args.size()) != degree(base) + 1)
        throw std::invalid_argument("operad_gamma: argument count must be degree + 1");
    switch (alg_of(base)) {
        case Alg::Y: {
            std::vector<BinaryTree> forest;
            forest.reserve(args.size());
            for (const auto& a : args) forest.push_back(std::get<BinaryTree>(a));
            return graft(forest, std::get<BinaryTree>(base));
        }
        case Alg::C: {
            int n = std::get<Comb>(base).n;
            for (const auto& a : args) n += std::get<Comb>(a).n;
            return Comb{n};
        }
        default: throw std::invalid_argument("no operad structure on permutations");
    }
}

LinearComb<std::vector<Elem>> iterated_coproduct(const Elem& e, int n) {
    LinearComb<std::vector<Elem>> acc;
    acc.add({e}, 1);
    for (int step = 0; step < n; ++step) {
        LinearComb<std::vector<Elem>> next;
        for (const auto& [parts, c] : acc.terms()) {
            for (const auto& [pair, cc] : coproduct(parts.back()).terms()) {
                std::vector<Elem> grown(parts.begin(), parts.end() - 1);
                grown.push_back(pair.first);
                grown.push_back(pair.second);
                next.add(std::move(grown), c * cc);
            }
        }
        acc = std::move(next);
    }
    return acc;
}

LinearComb<std::vector<Composed>> compose_iterated_coproduct(const Composed& e, int n) {
    LinearComb<std::vector<Composed>> acc;
    acc.add({e}, 1);
    for (int step = 0; step < n; ++step) {
        LinearComb<std::vector<Composed>> next;
        for (const auto& [parts, c] : acc.terms()) {
            for (const auto& [pair, cc] : compose_coproduct(parts.back()).terms()) {
                std::vector<Composed> grown(parts.begin(), parts.end() - 1);
                grown.push_back(pair.first);
                grown.push_back(pair.second);
                next.add(std::move(grown), c * cc);
            }
        }
        acc = std::move(next);
    }
    return acc;
}

LinearComb<Elem> operad_product(const Elem& a, const Elem& b) {
    LinearComb<Elem> out;
    for (const auto& [parts, c] : iterated_coproduct(a, degree(b)).terms())
        out.add(operad_gamma(b, parts), c);
    return out;
}

const std::vector<Connection>& connections() {
    static const std::vector<Connection> cat = {
        // fr: target is the outer base; lambda maps letters into it.
        {{Alg::S, Alg::C}, Alg::C, Side::FR, LambdaKind::KappaTau, "ssym-csym.fr"},
        {{Alg::Y, Alg::C}, Alg::C, Side::FR, LambdaKind::Kappa, "ysym-csym.fr"},
        {{Alg::C, Alg::C}, Alg::C, Side::FR, LambdaKind::Id, "ccsym.fr"},
        {{Alg::S, Alg::Y}, Alg::Y, Side::FR, LambdaKind::Tau, "ssym-ysym.fr"},
        {{Alg::Y, Alg::Y}, Alg::Y, Side::FR, LambdaKind::Id, "psym.fr"},
        {{Alg::C, Alg::Y}, Alg::Y, Side::FR, LambdaKind::Incl, "cksym.fr"},
        // fl: target is the letter algebra; lambda maps the base into it.
        {{Alg::C, Alg::S}, Alg::C, Side::FL, LambdaKind::KappaTau, "csym-ssym.fl"},
        {{Alg::C, Alg::Y}, Alg::C, Side::FL, LambdaKind::Kappa, "cksym.fl"},
        {{Alg::C, Alg::C}, Alg::C, Side::FL, LambdaKind::Id, "ccsym.fl"},
        {{Alg::Y, Alg::S}, Alg::Y, Side::FL, LambdaKind::Tau, "ysym-ssym.fl"},
        {{Alg::Y, Alg::Y}, Alg::Y, Side::FL, LambdaKind::Id, "psym.fl"},
        {{Alg::Y, Alg::C}, Alg::Y, Side::FL, LambdaKind::Incl, "ysym-csym.fl"},
    };
    return cat;
}

const Connection* find_connection(const std::string& name) {
    std::string canon = name;
    // "x-o-y.side" and "x-y.side" both name the connection on letters x over base y.
    const auto o = canon.find("-o-");
    if (o != std::string::npos) canon = canon.substr(0, o) + "-" + canon.substr(o + 3);
    // Long forms of the aliased connections.
    if (canon == "ysym-ysym.fr") canon = "psym.fr";
    if (canon == "ysym-ysym.fl") canon = "psym.fl";
    if (canon == "csym-ysym.fr") canon = "cksym.fr";
    if (canon == "csym-ysym.fl") canon = "cksym.fl";
    if (canon == "csym-csym.fr") canon = "ccsym.fr";
    if (canon == "csym-csym.fl") canon = "ccsym.fl";
    for (const auto& c : connections())
        if (c.name == canon) return &c;
    return nullptr;
}

Elem apply_lambda(LambdaKind k, const Elem& e) {
    switch (k) {
        case LambdaKind::Id: return e;
        case LambdaKind::Tau: return tau_map(e);
        case LambdaKind::Kappa: return kappa_map(e);
        case LambdaKind::KappaTau: return kappa_map(tau_map(e));
        default: return incl_comb(e);
    }
}

Elem conn_f(const Connection& c, const Composed& e) {
    if (c.side == Side::FR) {
        std::vector<Elem> args;
        args.reserve(e.cs.size());
        for (const auto& l : e.cs) args.push_back(apply_lambda(c.lambda, l));
        return operad_gamma(e.d, args);
    }
    return operad_gamma(apply_lambda(c.lambda, e.d), e.cs);
}

LinearComb<Composed> star_right(const Connection& c, const Composed& e, const Elem& d) {
    if (c.side != Side::FR) throw std::invalid_argument("star_right needs an fr connection");
    LinearComb<Composed> out;
    for (const auto& [parts, coeff] : compose_iterated_coproduct(e, degree(d)).terms()) {
        std::vector<Elem> bases;
        Composed res{unit_elem(c.target), {}};
        bases.reserve(parts.size());
        for (const auto& p : parts) {
            bases.push_back(p.d);
            res.cs.insert(res.cs.end(), p.cs.begin(), p.cs.end());
        }
        res.d = operad_gamma(d, bases);
        out.add(std::move(res), coeff);
    }
    return out;
}

LinearComb<Composed> star_left(const Connection& c, const Elem& d, const Composed& e) {
    if (c.side != Side::FL) throw std::invalid_argument("star_left needs an fl connection");
    LinearComb<Composed> out;
    for (const auto& [parts, coeff] : iterated_coproduct(d, total_degree(e)).terms()) {
        Composed res{e.d, {}};
        res.cs.reserve(e.cs.size());
        std::size_t cursor = 0;
        for (const auto& letter : e.cs) {
            const std::size_t take = static_cast<std::size_t>(degree(letter)) + 1;
            std::vector<Elem> group(parts.begin() + cursor, parts.begin() + cursor + take);
            cursor += take;
            res.cs.push_back(operad_gamma(letter, group));
        }
        out.add(std::move(res), coeff);
    }
    return out;
}

LinearComb<Composed> conn_product(const Connection& c, const Composed& x, const Composed& y) {
    if (c.side == Side::FR) return star_right(c, x, conn_f(c, y));
    return star_left(c, conn_f(c, x), y);
}

LinearComb<Composed> conn_product(const Connection& c, const LinearComb<Composed>& x,
                                  const LinearComb<Composed>& y) {
    LinearComb<Composed> out;
    for (const auto& [ex, cx] : x.terms())
        for (const auto& [ey, cy] : y.terms()) {
            LinearComb<Composed> p = conn_product(c, ex, ey);
            p *= cx * cy;
            out += p;
        }
    return out;
}

LinearComb<std::pair<Composed, Elem>> coaction_right(const Connection& c, const Composed& e) {
    if (c.side != Side::FR) throw std::invalid_argument("coaction_right needs an fr connection");
    LinearComb<std::pair<Composed, Elem>> out;
    for (const auto& [pair, coeff] : compose_coproduct(e).terms())
        out.add({pair.first, conn_f(c, pair.second)}, coeff);
    return out;
}

LinearComb<std::pair<Elem, Composed>> coaction_left(const Connection& c, const Composed& e) {
    if (c.side != Side::FL) throw std::invalid_argument("coaction_left needs an fl connection");
    LinearComb<std::pair<Elem, Composed>> out;
    for (const auto& [pair, coeff] : compose_coproduct(e).terms())
        out.add({conn_f(c, pair.first), pair.second}, coeff);
    return out;
}

LinearComb<Composed> conn_antipode(const Connection& c, const Composed& e) {
    static std::map<std::pair<std::string, Composed>, LinearComb<Composed>> memo;
    static std::mutex mu;
    const auto key = std::make_pair(c.name, e);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    LinearComb<Composed> out;
    const int n = total_degree(e);
    if (n == 0) {
        out.add(e, 1);
    } else if (c.side == Side::FR) {
        // m(S (x) id) Delta = unit counit, using the right-sided unit.
        for (const auto& [pair, coeff] : compose_coproduct(e).terms()) {
            if (total_degree(pair.first) == n) continue;
            LinearComb<Composed> s = conn_antipode(c, pair.first);
            for (const auto& [l, cl] : s.terms()) {
                LinearComb<Composed> p = conn_product(c, l, pair.second);
                p *= coeff * cl;
                out -= p;
            }
        }
    } else {
        // m(id (x) S) Delta = unit counit, using the left-sided unit.
        for (const auto& [pair, coeff] : compose_coproduct(e).terms()) {
            if (total_degree(pair.second) == n) continue;
            LinearComb<Composed> s = conn_antipode(c, pair.second);
            for (const auto& [r, cr] : s.terms()) {
                LinearComb<Composed> p = conn_product(c, pair.first, r);
                p *= coeff * cr;
                out -= p;
            }
        }
    }
    std::lock_guard<std::mutex> lock(mu);
    return memo.emplace(key, std::move(out)).first->second;
}

LinearComb<Composed> conn_antipode(const Connection& c, const LinearComb<Composed>& x) {
    return x.map_terms<Composed>([&](const Composed& e) { return conn_antipode(c, e); });
}

}  // namespace coalg
