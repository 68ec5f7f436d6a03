// Implementation of the verification suites declared in coalg/verify.hpp.

#include "coalg/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace coalg {

namespace {

const std::set<std::string> kKnownAxioms = {
    "coassoc", "counit", "assoc",  "bialg",  "unit",   "antipode",
    "connection", "module", "coaction", "compat", "diamond"};

struct Ctx {
    const VerifyOptions& opts;
    std::vector<CheckFailure>* failures;
    std::set<std::string> open;  // axioms that have not failed yet

    bool want(const std::string& axiom) const {
        if (!opts.axioms.empty() &&
            std::find(opts.axioms.begin(), opts.axioms.end(), axiom) == opts.axioms.end())
            return false;
        return open.count(axiom) > 0;
    }
    void fail(const std::string& axiom, int degree, const std::string& witness) {
        if (!open.count(axiom)) return;
        open.erase(axiom);
        failures->push_back({axiom, degree, witness});
    }
};

Ctx make_ctx(const VerifyOptions& opts, std::vector<CheckFailure>& failures) {
    return Ctx{opts, &failures, kKnownAxioms};
}

template <class T>
void subsample(std::vector<T>& v, const VerifyOptions& opts) {
    if (opts.sample <= 0 || static_cast<int>(v.size()) <= opts.sample) return;
    std::mt19937_64 rng(opts.seed);
    std::shuffle(v.begin(), v.end(), rng);
    v.resize(opts.sample);
}

// Tuple streams over graded bases.
template <class B>
std::vector<B> singles(const std::function<const std::vector<B>&(int)>& bas, int maxdeg,
                       const VerifyOptions& opts) {
    std::vector<B> out;
    for (int n = 0; n <= maxdeg; ++n)
        for (const auto& e : bas(n)) out.push_back(e);
    subsample(out, opts);
    return out;
}

template <class A, class B>
std::vector<std::pair<A, B>> deg_pairs(const std::function<const std::vector<A>&(int)>& ba,
                                       const std::function<const std::vector<B>&(int)>& bb,
                                       int maxdeg, const VerifyOptions& opts) {
    std::vector<std::pair<A, B>> out;
    for (int p = 0; p <= maxdeg; ++p)
        for (int q = 0; p + q <= maxdeg; ++q)
            for (const auto& x : ba(p))
                for (const auto& y : bb(q)) out.emplace_back(x, y);
    subsample(out, opts);
    return out;
}

template <class A, class B, class C>
std::vector<std::tuple<A, B, C>> deg_triples(const std::function<const std::vector<A>&(int)>& ba,
                                             const std::function<const std::vector<B>&(int)>& bb,
                                             const std::function<const std::vector<C>&(int)>& bc,
                                             int maxdeg, const VerifyOptions& opts) {
    std::vector<std::tuple<A, B, C>> out;
    for (int p = 0; p <= maxdeg; ++p)
        for (int q = 0; p + q <= maxdeg; ++q)
            for (int r = 0; p + q + r <= maxdeg; ++r)
                for (const auto& x : ba(p))
                    for (const auto& y : bb(q))
                        for (const auto& z : bc(r)) out.emplace_back(x, y, z);
    subsample(out, opts);
    return out;
}

std::function<const std::vector<Elem>&(int)> base_fn(Alg a) {
    return [a](int n) -> const std::vector<Elem>& { return basis(a, n); };
}
std::function<const std::vector<Composed>&(int)> comp_fn(CompId id) {
    return [id](int n) -> const std::vector<Composed>& { return compose_basis(id, n); };
}
std::function<const std::vector<Face>&(int)> face_fn() {
    return [](int n) -> const std::vector<Face>& { return face_basis(n); };
}

// --- Generic coalgebra / Hopf checks, parameterized over the basis type ---------

template <class B, class Ops>
void check_coalgebra(Ctx& ctx, const Ops& ops, int maxdeg) {
    if (ctx.want("coassoc")) {
        for (const auto& e : singles<B>(ops.basis, maxdeg, ctx.opts)) {
            LinearComb<std::vector<B>> lhs, rhs;
            for (const auto& [p, c] : ops.coproduct(e).terms()) {
                for (const auto& [pp, cc] : ops.coproduct(p.first).terms())
                    lhs.add({pp.first, pp.second, p.second}, c * cc);
                for (const auto& [pp, cc] : ops.coproduct(p.second).terms())
                    rhs.add({p.first, pp.first, pp.second}, c * cc);
            }
            if (lhs != rhs) {
                ctx.fail("coassoc", ops.deg(e), ops.literal(e));
                break;
            }
        }
    }
    if (ctx.want("counit")) {
        for (const auto& e : singles<B>(ops.basis, maxdeg, ctx.opts)) {
            LinearComb<B> l, r, self;
            self.add(e, 1);
            for (const auto& [p, c] : ops.coproduct(e).terms()) {
                l.add(p.second, c * ops.counit(p.first));
                r.add(p.first, c * ops.counit(p.second));
            }
            if (l != self || r != self) {
                ctx.fail("counit", ops.deg(e), ops.literal(e));
                break;
            }
        }
    }
}

template <class B, class Ops>
void check_product_laws(Ctx& ctx, const Ops& ops, int maxdeg, bool left_unit, bool right_unit,
                        bool left_antipode, bool right_antipode) {
    if (ctx.want("assoc")) {
        for (const auto& [x, y, z] :
             deg_triples<B, B, B>(ops.basis, ops.basis, ops.basis, maxdeg, ctx.opts)) {
            LinearComb<B> xy = ops.product(x, y), yz = ops.product(y, z);
            LinearComb<B> lhs, rhs;
            for (const auto& [e, c] : xy.terms()) {
                LinearComb<B> t = ops.product(e, z);
                t *= c;
                lhs += t;
            }
            for (const auto& [e, c] : yz.terms()) {
                LinearComb<B> t = ops.product(x, e);
                t *= c;
                rhs += t;
            }
            if (lhs != rhs) {
                ctx.fail("assoc", ops.deg(x) + ops.deg(y) + ops.deg(z),
                         ops.literal(x) + " ; " + ops.literal(y) + " ; " + ops.literal(z));
                break;
            }
        }
    }
    if (ctx.want("unit")) {
        const B one = ops.unit();
        for (const auto& e : singles<B>(ops.basis, maxdeg, ctx.opts)) {
            LinearComb<B> self;
            self.add(e, 1);
            bool ok = true;
            if (left_unit && ops.product(one, e) != self) ok = false;
            if (right_unit && ops.product(e, one) != self) ok = false;
            if (!ok) {
                ctx.fail("unit", ops.deg(e), ops.literal(e));
                break;
            }
        }
    }
    if (ctx.want("bialg")) {
        for (const auto& [x, y] : deg_pairs<B, B>(ops.basis, ops.basis, maxdeg, ctx.opts)) {
            LinearComb<std::pair<B, B>> lhs;
            for (const auto& [e, c] : ops.product(x, y).terms()) {
                LinearComb<std::pair<B, B>> d = ops.coproduct(e);
                d *= c;
                lhs += d;
            }
            LinearComb<std::pair<B, B>> rhs;
            for (const auto& [px, cx] : ops.coproduct(x).terms())
                for (const auto& [py, cy] : ops.coproduct(y).terms()) {
                    LinearComb<B> l = ops.product(px.first, py.first);
                    LinearComb<B> r = ops.product(px.second, py.second);
                    LinearComb<std::pair<B, B>> t = tensor(l, r);
                    t *= cx * cy;
                    rhs += t;
                }
            if (lhs != rhs) {
                ctx.fail("bialg", ops.deg(x) + ops.deg(y),
                         ops.literal(x) + " ; " + ops.literal(y));
                break;
            }
        }
    }
    if (ctx.want("antipode")) {
        const B one = ops.unit();
        for (const auto& e : singles<B>(ops.basis, maxdeg, ctx.opts)) {
            LinearComb<B> expect;
            expect.add(one, ops.counit(e));
            bool ok = true;
            if (left_antipode) {  // m(S (x) id) Delta = unit counit
                LinearComb<B> got;
                for (const auto& [p, c] : ops.coproduct(e).terms())
                    for (const auto& [s, cs] : ops.antipode(p.first).terms()) {
                        LinearComb<B> t = ops.product(s, p.second);
                        t *= c * cs;
                        got += t;
                    }
                if (got != expect) ok = false;
            }
            if (ok && right_antipode) {  // m(id (x) S) Delta = unit counit
                LinearComb<B> got;
                for (const auto& [p, c] : ops.coproduct(e).terms())
                    for (const auto& [s, cs] : ops.antipode(p.second).terms()) {
                        LinearComb<B> t = ops.product(p.first, s);
                        t *= c * cs;
                        got += t;
                    }
                if (got != expect) ok = false;
            }
            if (!ok) {
                ctx.fail("antipode", ops.deg(e), ops.literal(e));
                break;
            }
        }
    }
}

struct BaseOps {
    Alg a;
    std::function<const std::vector<Elem>&(int)> basis;
    LinearComb<std::pair<Elem, Elem>> coproduct(const Elem& e) const { return coalg::coproduct(e); }
    Int counit(const Elem& e) const { return coalg::counit(e); }
    LinearComb<Elem> product(const Elem& x, const Elem& y) const { return coalg::product(x, y); }
    LinearComb<Elem> antipode(const Elem& e) const { return coalg::antipode(e); }
    Elem unit() const { return unit_elem(a); }
    int deg(const Elem& e) const { return degree(e); }
    std::string literal(const Elem& e) const { return elem_literal(e); }
};

struct CompOps {
    CompId id;
    std::function<const std::vector<Composed>&(int)> basis;
    LinearComb<std::pair<Composed, Composed>> coproduct(const Composed& e) const {
        return compose_coproduct(e);
    }
    Int counit(const Composed& e) const { return compose_counit(e); }
    int deg(const Composed& e) const { return total_degree(e); }
    std::string literal(const Composed& e) const { return composed_literal(e); }
};

struct ConnOps {
    const Connection* c;
    std::function<const std::vector<Composed>&(int)> basis;
    LinearComb<std::pair<Composed, Composed>> coproduct(const Composed& e) const {
        return compose_coproduct(e);
    }
    Int counit(const Composed& e) const { return compose_counit(e); }
    LinearComb<Composed> product(const Composed& x, const Composed& y) const {
        return conn_product(*c, x, y);
    }
    LinearComb<Composed> antipode(const Composed& e) const { return conn_antipode(*c, e); }
    Composed unit() const { return unit_composed(c->comp); }
    int deg(const Composed& e) const { return total_degree(e); }
    std::string literal(const Composed& e) const { return composed_literal(e); }
};

struct FaceOps {
    std::function<const std::vector<Face>&(int)> basis = face_fn();
    LinearComb<std::pair<Face, Face>> coproduct(const Face& f) const { return face_coproduct(f); }
    Int counit(const Face& f) const { return face_counit(f); }
    LinearComb<Face> product(const Face& x, const Face& y) const { return face_product(x, y); }
    LinearComb<Face> antipode(const Face& f) const { return face_antipode(f); }
    Face unit() const { return Face{}; }
    int deg(const Face& f) const { return f.n; }
    std::string literal(const Face& f) const { return face_literal(f); }
};

}  // namespace

std::vector<CheckFailure> verify_base(Alg a, const VerifyOptions& opts) {
    std::vector<CheckFailure> failures;
    Ctx ctx = make_ctx(opts, failures);
    BaseOps ops{a, base_fn(a)};
    check_coalgebra<Elem>(ctx, ops, opts.max_degree);
    check_product_laws<Elem>(ctx, ops, opts.max_degree, true, true, true, true);
    return failures;
}

std::vector<CheckFailure> verify_composite_coalgebra(CompId id, const VerifyOptions& opts) {
    std::vector<CheckFailure> failures;
    Ctx ctx = make_ctx(opts, failures);
    CompOps ops{id, comp_fn(id)};
    check_coalgebra<Composed>(ctx, ops, opts.max_degree);
    return failures;
}

std::vector<CheckFailure> verify_connection(const Connection& c, const VerifyOptions& opts) {
    std::vector<CheckFailure> failures;
    Ctx ctx = make_ctx(opts, failures);
    const int maxdeg = opts.max_degree;
    ConnOps ops{&c, comp_fn(c.comp)};
    const auto dfn = base_fn(c.target);
    const bool fr = c.side == Side::FR;

    if (ctx.want("connection")) {
        // (f (x) f) Delta_E = Delta_D f
        for (const auto& e : singles<Composed>(ops.basis, maxdeg, ctx.opts)) {
            LinearComb<std::pair<Elem, Elem>> lhs;
            for (const auto& [p, coeff] : compose_coproduct(e).terms())
                lhs.add({conn_f(c, p.first), conn_f(c, p.second)}, coeff);
            if (lhs != coproduct(conn_f(c, e))) {
                ctx.fail("connection", total_degree(e), composed_literal(e));
                break;
            }
        }
        // f intertwines the action with the target product.
        if (ctx.open.count("connection")) {
            for (const auto& [e, d] :
                 deg_pairs<Composed, Elem>(ops.basis, dfn, maxdeg, ctx.opts)) {
                LinearComb<Elem> lhs, rhs;
                if (fr) {
                    for (const auto& [t, coeff] : star_right(c, e, d).terms())
                        lhs.add(conn_f(c, t), coeff);
                    rhs = product(conn_f(c, e), d);
                } else {
                    for (const auto& [t, coeff] : star_left(c, d, e).terms())
                        lhs.add(conn_f(c, t), coeff);
                    rhs = product(d, conn_f(c, e));
                }
                if (lhs != rhs) {
                    ctx.fail("connection", total_degree(e) + degree(d),
                             composed_literal(e) + " ; " + elem_literal(d));
                    break;
                }
            }
        }
    }

    if (ctx.want("module")) {
        for (const auto& [e, d, d2] : deg_triples<Composed, Elem, Elem>(
                 ops.basis, dfn, dfn, maxdeg, ctx.opts)) {
            LinearComb<Composed> lhs, rhs;
            if (fr) {
                // (e * d) * d' = e * (d d')
                for (const auto& [t, coeff] : star_right(c, e, d).terms()) {
                    LinearComb<Composed> s = star_right(c, t, d2);
                    s *= coeff;
                    lhs += s;
                }
                for (const auto& [pd, coeff] : product(d, d2).terms()) {
                    LinearComb<Composed> s = star_right(c, e, pd);
                    s *= coeff;
                    rhs += s;
                }
            } else {
                // (d d') * e = d * (d' * e)
                for (const auto& [pd, coeff] : product(d, d2).terms()) {
                    LinearComb<Composed> s = star_left(c, pd, e);
                    s *= coeff;
                    lhs += s;
                }
                for (const auto& [t, coeff] : star_left(c, d2, e).terms()) {
                    LinearComb<Composed> s = star_left(c, d, t);
                    s *= coeff;
                    rhs += s;
                }
            }
            if (lhs != rhs) {
                ctx.fail("module", total_degree(e) + degree(d) + degree(d2),
                         composed_literal(e) + " ; " + elem_literal(d) + " ; " +
                             elem_literal(d2));
                break;
            }
        }
        // Acting by the target unit is the identity.
        if (ctx.open.count("module")) {
            const Elem one = unit_elem(c.target);
            for (const auto& e : singles<Composed>(ops.basis, maxdeg, ctx.opts)) {
                LinearComb<Composed> self;
                self.add(e, 1);
                LinearComb<Composed> got = fr ? star_right(c, e, one) : star_left(c, one, e);
                if (got != self) {
                    ctx.fail("module", total_degree(e), composed_literal(e));
                    break;
                }
            }
        }
    }

    check_product_laws<Composed>(ctx, ops, maxdeg, !fr, fr, fr, !fr);

    if (ctx.want("coaction")) {
        for (const auto& e : singles<Composed>(ops.basis, maxdeg, ctx.opts)) {
            bool ok = true;
            if (fr) {
                LinearComb<Composed> counit_side;
                LinearComb<std::pair<Composed, std::pair<Elem, Elem>>> lhs;
                LinearComb<std::pair<Composed, std::pair<Elem, Elem>>> rhs;
                for (const auto& [p, coeff] : coaction_right(c, e).terms()) {
                    counit_side.add(p.first, coeff * counit(p.second));
                    for (const auto& [dp, cc] : coproduct(p.second).terms())
                        lhs.add({p.first, dp}, coeff * cc);
                    for (const auto& [q, cc] : coaction_right(c, p.first).terms())
                        rhs.add({q.first, {q.second, p.second}}, coeff * cc);
                }
                LinearComb<Composed> self;
                self.add(e, 1);
                ok = counit_side == self && lhs == rhs;
            } else {
                LinearComb<Composed> counit_side;
                LinearComb<std::pair<std::pair<Elem, Elem>, Composed>> lhs;
                LinearComb<std::pair<std::pair<Elem, Elem>, Composed>> rhs;
                for (const auto& [p, coeff] : coaction_left(c, e).terms()) {
                    counit_side.add(p.second, coeff * counit(p.first));
                    for (const auto& [dp, cc] : coproduct(p.first).terms())
                        lhs.add({dp, p.second}, coeff * cc);
                    for (const auto& [q, cc] : coaction_left(c, p.second).terms())
                        rhs.add({{p.first, q.first}, q.second}, coeff * cc);
                }
                LinearComb<Composed> self;
                self.add(e, 1);
                ok = counit_side == self && lhs == rhs;
            }
            if (!ok) {
                ctx.fail("coaction", total_degree(e), composed_literal(e));
                break;
            }
        }
    }

    if (ctx.want("compat")) {
        // The coaction respects both the module action and the product.
        bool broke = false;
        for (const auto& [e, d] : deg_pairs<Composed, Elem>(ops.basis, dfn, maxdeg, ctx.opts)) {
            if (!fr) break;
            LinearComb<std::pair<Composed, Elem>> lhs;
            for (const auto& [t, coeff] : star_right(c, e, d).terms()) {
                LinearComb<std::pair<Composed, Elem>> r = coaction_right(c, t);
                r *= coeff;
                lhs += r;
            }
            for (const auto& [p, coeff] : coaction_right(c, e).terms())
                for (const auto& [dp, cc] : coproduct(d).terms())
                    for (const auto& [t, ct] : star_right(c, p.first, dp.first).terms())
                        for (const auto& [pb, cb] : product(p.second, dp.second).terms())
                            lhs.add({t, pb}, -coeff * cc * ct * cb);
            if (!lhs.is_zero()) {
                ctx.fail("compat", total_degree(e) + degree(d),
                         composed_literal(e) + " ; " + elem_literal(d));
                broke = true;
                break;
            }
        }
        if (!broke && ctx.open.count("compat")) {
            for (const auto& [e2, d] : deg_pairs<Composed, Elem>(ops.basis, dfn, maxdeg, ctx.opts)) {
                if (fr) break;
                LinearComb<std::pair<Elem, Composed>> lhs;
                for (const auto& [t, coeff] : star_left(c, d, e2).terms()) {
                    LinearComb<std::pair<Elem, Composed>> r = coaction_left(c, t);
                    r *= coeff;
                    lhs += r;
                }
                for (const auto& [p, coeff] : coaction_left(c, e2).terms())
                    for (const auto& [dp, cc] : coproduct(d).terms())
                        for (const auto& [t, ct] : star_left(c, dp.second, p.second).terms())
                            for (const auto& [pb, cb] : product(dp.first, p.first).terms())
                                lhs.add({pb, t}, -coeff * cc * ct * cb);
                if (!lhs.is_zero()) {
                    ctx.fail("compat", total_degree(e2) + degree(d),
                             composed_literal(e2) + " ; " + elem_literal(d));
                    break;
                }
            }
        }
        // Comodule algebra: coaction of a product is the product of coactions.
        if (ctx.open.count("compat")) {
            for (const auto& [x, y] :
                 deg_pairs<Composed, Composed>(ops.basis, ops.basis, maxdeg, ctx.opts)) {
                bool ok;
                if (fr) {
                    LinearComb<std::pair<Composed, Elem>> lhs;
                    for (const auto& [t, coeff] : conn_product(c, x, y).terms()) {
                        LinearComb<std::pair<Composed, Elem>> r = coaction_right(c, t);
                        r *= coeff;
                        lhs += r;
                    }
                    for (const auto& [px, cx] : coaction_right(c, x).terms())
                        for (const auto& [py, cy] : coaction_right(c, y).terms())
                            for (const auto& [t, ct] : conn_product(c, px.first, py.first).terms())
                                for (const auto& [pb, cb] :
                                     product(px.second, py.second).terms())
                                    lhs.add({t, pb}, -cx * cy * ct * cb);
                    ok = lhs.is_zero();
                } else {
                    LinearComb<std::pair<Elem, Composed>> lhs;
                    for (const auto& [t, coeff] : conn_product(c, x, y).terms()) {
                        LinearComb<std::pair<Elem, Composed>> r = coaction_left(c, t);
                        r *= coeff;
                        lhs += r;
                    }
                    for (const auto& [px, cx] : coaction_left(c, x).terms())
                        for (const auto& [py, cy] : coaction_left(c, y).terms())
                            for (const auto& [t, ct] : conn_product(c, px.second, py.second).terms())
                                for (const auto& [pb, cb] : product(px.first, py.first).terms())
                                    lhs.add({pb, t}, -cx * cy * ct * cb);
                    ok = lhs.is_zero();
                }
                if (!ok) {
                    ctx.fail("compat", total_degree(x) + total_degree(y),
                             composed_literal(x) + " ; " + composed_literal(y));
                    break;
                }
            }
        }
    }
    return failures;
}

std::vector<CheckFailure> verify_faces(const VerifyOptions& opts) {
    std::vector<CheckFailure> failures;
    Ctx ctx = make_ctx(opts, failures);
    FaceOps ops;
    check_coalgebra<Face>(ctx, ops, opts.max_degree);
    // Left-sided unit, right-sided antipode.
    check_product_laws<Face>(ctx, ops, opts.max_degree, true, false, false, true);
    return failures;
}

std::vector<CheckFailure> verify_diamond(int max_degree) {
    std::vector<CheckFailure> failures;
    struct Arrow {
        CompId from;
        CompId to;
        ElemMap inner;
        ElemMap outer;
        std::string name;
    };
    std::vector<Arrow> arrows;
    const std::vector<Alg> algs = {Alg::S, Alg::Y, Alg::C};
    auto step = [](Alg a) { return a == Alg::S ? Alg::Y : Alg::C; };
    auto step_map = [](Alg a) -> ElemMap {
        return a == Alg::S ? ElemMap(tau_map) : ElemMap(kappa_map);
    };
    for (Alg in : algs)
        for (Alg out : algs) {
            const CompId from{in, out};
            if (in != Alg::C)
                arrows.push_back({from,
                                  CompId{step(in), out},
                                  step_map(in),
                                  nullptr,
                                  compose_name(from) + " letters"});
            if (out != Alg::C)
                arrows.push_back({from,
                                  CompId{in, step(out)},
                                  nullptr,
                                  step_map(out),
                                  compose_name(from) + " base"});
        }

    for (const auto& ar : arrows) {
        bool bad = false;
        for (int n = 0; n <= max_degree && !bad; ++n) {
            for (const auto& e : compose_basis(ar.from, n)) {
                const Composed img = map_components(e, ar.inner, ar.outer);
                LinearComb<std::pair<Composed, Composed>> lhs;
                for (const auto& [p, c] : compose_coproduct(e).terms())
                    lhs.add({map_components(p.first, ar.inner, ar.outer),
                             map_components(p.second, ar.inner, ar.outer)},
                            c);
                if (lhs != compose_coproduct(img)) {
                    failures.push_back({"diamond", n, ar.name + " at " + composed_literal(e)});
                    bad = true;
                    break;
                }
            }
        }
    }

    // Mixed squares: applying the letter map and the base map commutes.
    for (Alg in : algs)
        for (Alg out : algs) {
            if (in == Alg::C || out == Alg::C) continue;
            const CompId from{in, out};
            bool bad = false;
            for (int n = 0; n <= max_degree && !bad; ++n) {
                for (const auto& e : compose_basis(from, n)) {
                    const Composed a =
                        map_components(map_components(e, step_map(in), nullptr), nullptr,
                                       step_map(out));
                    const Composed b =
                        map_components(map_components(e, nullptr, step_map(out)), step_map(in),
                                       nullptr);
                    if (!(a == b)) {
                        failures.push_back(
                            {"diamond", n, compose_name(from) + " square at " + composed_literal(e)});
                        bad = true;
                        break;
                    }
                }
            }
        }
    return failures;
}

std::vector<CheckFailure> verify_cofree(CompId id, int max_degree) {
    std::vector<CheckFailure> failures;
    bool round_ok = true, inter_ok = true;
    for (int n = 0; n <= max_degree; ++n) {
        for (const auto& e : compose_basis(id, n)) {
            const CofreeWord w = phi(e);
            if (round_ok && (word_degree(w) != n || !(phi_inv(id, w) == e))) {
                failures.push_back({"cofree-roundtrip", n, composed_literal(e)});
                round_ok = false;
            }
            if (inter_ok) {
                // Deconcatenation of the word against the M-coordinate coproduct.
                LinearComb<std::pair<CofreeWord, CofreeWord>> lhs;
                for (std::size_t k = 0; k <= w.size(); ++k)
                    lhs.add({CofreeWord(w.begin(), w.begin() + k),
                             CofreeWord(w.begin() + k, w.end())},
                            1);
                LinearComb<std::pair<CofreeWord, CofreeWord>> rhs;
                for (const auto& [fe, cf] : compose_m_to_f(e).terms())
                    for (const auto& [p, c] : compose_coproduct(fe).terms())
                        for (const auto& [lm, cl] : compose_f_to_m(p.first).terms())
                            for (const auto& [rm, cr] : compose_f_to_m(p.second).terms())
                                rhs.add({phi(lm), phi(rm)}, cf * c * cl * cr);
                if (lhs != rhs) {
                    failures.push_back({"cofree-intertwine", n, composed_literal(e)});
                    inter_ok = false;
                }
            }
            if (!round_ok && !inter_ok) return failures;
        }
    }
    return failures;
}

std::vector<CheckFailure> verify_operad_alg(Alg a, int max_degree) {
    std::vector<CheckFailure> failures;
    // Products induced by the operad agree with the direct products.
    bool ok = true;
    for (int p = 0; p <= max_degree && ok; ++p)
        for (int q = 0; p + q <= max_degree && ok; ++q)
            for (const auto& x : basis(a, p)) {
                for (const auto& y : basis(a, q)) {
                    if (operad_product(x, y) != product(x, y)) {
                        failures.push_back({"operad-product", p + q,
                                            elem_literal(x) + " ; " + elem_literal(y)});
                        ok = false;
                        break;
                    }
                }
                if (!ok) break;
            }
    // Operadic composition is a coalgebra map from the self-composite.
    const CompId dd{a, a};
    ok = true;
    for (int n = 0; n <= max_degree && ok; ++n) {
        for (const auto& g : compose_basis(dd, n)) {
            LinearComb<std::pair<Elem, Elem>> lhs;
            for (const auto& [p, c] : compose_coproduct(g).terms())
                lhs.add({operad_gamma(p.first.d, p.first.cs), operad_gamma(p.second.d, p.second.cs)},
                        c);
            if (lhs != coproduct(operad_gamma(g.d, g.cs))) {
                failures.push_back({"operad-coalgebra", n, composed_literal(g)});
                ok = false;
                break;
            }
        }
    }
    return failures;
}

std::vector<CheckFailure> verify_alpha(int max_degree) {
    std::vector<CheckFailure> failures;
    const Connection* fr = find_connection("ccsym.fr");
    const CompId cc{Alg::C, Alg::C};
    auto face_to_composed = [](const Face& f) { return composition_to_composed(alpha(f)); };

    bool bij = true, coalg = true;
    for (int n = 0; n <= max_degree && (bij || coalg); ++n) {
        for (const auto& f : face_basis(n)) {
            if (bij && !(alpha_inv(alpha(f)) == f)) {
                failures.push_back({"alpha-bijection", n, face_literal(f)});
                bij = false;
            }
            if (coalg) {
                LinearComb<std::pair<Composed, Composed>> lhs;
                for (const auto& [p, c] : face_coproduct(f).terms())
                    lhs.add({face_to_composed(p.first), face_to_composed(p.second)}, c);
                if (lhs != compose_coproduct(face_to_composed(f))) {
                    failures.push_back({"alpha-coalgebra", n, face_literal(f)});
                    coalg = false;
                }
            }
        }
        for (const auto& e : compose_basis(cc, n)) {
            if (bij && !(composition_to_composed(alpha(alpha_inv(
                             composed_to_composition(e)))) == e)) {
                failures.push_back({"alpha-bijection", n, composed_literal(e)});
                bij = false;
            }
        }
    }

    bool anti = true;
    for (int p = 0; p <= max_degree && anti; ++p)
        for (int q = 0; p + q <= max_degree && anti; ++q)
            for (const auto& x : face_basis(p)) {
                for (const auto& y : face_basis(q)) {
                    LinearComb<Composed> lhs;
                    for (const auto& [f2, c] : face_product(x, y).terms())
                        lhs.add(face_to_composed(f2), c);
                    const LinearComb<Composed> rhs =
                        conn_product(*fr, face_to_composed(y), face_to_composed(x));
                    if (lhs != rhs) {
                        failures.push_back({"alpha-antihom", p + q,
                                            face_literal(x) + " ; " + face_literal(y)});
                        anti = false;
                        break;
                    }
                }
                if (!anti) break;
            }
    return failures;
}

std::vector<CheckFailure> verify_algebra(const std::string& id, const VerifyOptions& opts) {
    for (const auto& a : opts.axioms)
        if (!kKnownAxioms.count(a)) throw std::invalid_argument("unknown axiom: '" + a + "'");

    if (id == "ssym") return verify_base(Alg::S, opts);
    if (id == "ysym") return verify_base(Alg::Y, opts);
    if (id == "csym") return verify_base(Alg::C, opts);
    if (id == "deltasym") return verify_faces(opts);
    if (id == "diamond") return verify_diamond(opts.max_degree);

    if (const Connection* c = find_connection(id)) {
        std::vector<CheckFailure> out = verify_composite_coalgebra(c->comp, opts);
        auto more = verify_connection(*c, opts);
        out.insert(out.end(), more.begin(), more.end());
        return out;
    }
    CompId comp;
    if (parse_comp_name(id, comp)) {
        std::vector<CheckFailure> out = verify_composite_coalgebra(comp, opts);
        for (const auto& c : connections()) {
            if (!(c.comp == comp)) continue;
            auto more = verify_connection(c, opts);
            for (auto& f : more) f.axiom = c.name + ":" + f.axiom;
            out.insert(out.end(), more.begin(), more.end());
        }
        return out;
    }
    throw std::invalid_argument("unknown algebra id: '" + id + "'");
}

}  // namespace coalg
