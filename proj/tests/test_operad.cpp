#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coalg/operad.hpp"

using namespace coalg;

namespace {
const BinaryTree LEAF;
BinaryTree N(const BinaryTree& l, const BinaryTree& r) { return BinaryTree::node(l, r); }
Elem T(const BinaryTree& t) { return Elem(t); }
Elem C(int n) { return Elem(Comb{n}); }

const Connection& conn(const std::string& name) {
    const Connection* c = find_connection(name);
    REQUIRE(c != nullptr);
    return *c;
}

// Composition of m encoded as a composite element (parts a_1..a_k of m give
// the base c_{k-1} and letters of degrees a_i - 1).
Composed K(const std::vector<int>& parts) {
    Composed e{C(int(parts.size()) - 1), {}};
    for (int a : parts) e.cs.push_back(C(a - 1));
    return e;
}

Composed W(const BinaryTree& shape, const std::vector<int>& degs) {
    Composed e{T(shape), {}};
    for (int w : degs) e.cs.push_back(C(w));
    return e;
}

Composed PT(const BinaryTree& shape, const std::vector<BinaryTree>& letters) {
    Composed e{T(shape), {}};
    for (const auto& t : letters) e.cs.push_back(T(t));
    return e;
}
}  // namespace

TEST_CASE("operadic composition on trees and divided powers") {
    const BinaryTree one = N(LEAF, LEAF);
    CHECK(operad_gamma(T(one), {T(one), T(LEAF)}) == T(N(one, LEAF)));
    CHECK(operad_gamma(T(LEAF), {T(one)}) == T(one));
    CHECK(operad_gamma(C(2), {C(1), C(0), C(3)}) == C(6));
    // associativity instance: gamma(gamma(b; c), a) consistency via degrees
    CHECK(degree(operad_gamma(T(one), {T(one), T(one)})) == 3);
}

TEST_CASE("iterated coproducts produce graded tuples") {
    const auto it2 = iterated_coproduct(C(2), 2);  // three tensor factors
    CHECK(it2.size() == 6);  // weak compositions of 2 into 3 parts
    for (const auto& [tup, c] : it2.terms()) {
        CHECK(tup.size() == 3);
        CHECK(c == 1);
        int total = 0;
        for (const auto& e : tup) total += degree(e);
        CHECK(total == 2);
    }
    const auto it0 = iterated_coproduct(C(3), 0);
    CHECK(it0.size() == 1);

    const Composed p = K({1, 3});
    const auto cit = compose_iterated_coproduct(p, 1);
    CHECK(cit.size() == 4);  // matches the four coproduct terms
}

TEST_CASE("operad-induced product agrees with the Hopf product") {
    for (Alg a : {Alg::Y, Alg::C}) {
        for (int m = 0; m <= 3; ++m) {
            for (int n = 0; n + m <= 4; ++n) {
                for (const auto& x : basis(a, m))
                    for (const auto& y : basis(a, n))
                        CHECK(operad_product(x, y) == product(x, y));
            }
        }
    }
}

TEST_CASE("the connection catalog is closed at twelve") {
    CHECK(connections().size() == 12);
    // canonical short names resolve
    CHECK(conn("psym.fr").comp == CompId{Alg::Y, Alg::Y});
    CHECK(conn("psym.fr").target == Alg::Y);
    CHECK(conn("psym.fr").side == Side::FR);
    CHECK(conn("cksym.fl").target == Alg::C);
    CHECK(conn("ccsym.fr").comp == CompId{Alg::C, Alg::C});
    // long forms and aliases agree
    CHECK(&conn("ysym-o-ysym.fr") == &conn("psym.fr"));
    CHECK(&conn("csym-o-ysym.fl") == &conn("cksym.fl"));
    CHECK(find_connection("ssym-o-ssym.fr") == nullptr);  // no operad on permutations
    CHECK(find_connection("nope") == nullptr);
    // every connection's target matches its side
    for (const auto& c : connections()) {
        if (c.side == Side::FR) CHECK(c.target == c.comp.outer);
        if (c.side == Side::FL) CHECK(c.target == c.comp.inner);
        CHECK(find_connection(c.name) == &c);
    }
}

TEST_CASE("collapse maps respect degree and land in the target") {
    for (const auto& c : connections()) {
        for (int n = 0; n <= 3; ++n) {
            for (const auto& e : compose_basis(c.comp, n)) {
                const Elem img = conn_f(c, e);
                CHECK(alg_of(img) == c.target);
                CHECK(degree(img) == n);
            }
        }
    }
}

TEST_CASE("composition-pair products match the worked displays") {
    // left-collapse product on composition pairs
    const auto& fl = conn("ccsym.fl");
    const auto p1 = conn_product(fl, K({1, 3}), K({1, 1}));
    CHECK(p1.coeff(K({1, 4})) == 1);
    CHECK(p1.coeff(K({2, 3})) == 1);
    CHECK(p1.coeff(K({3, 2})) == 1);
    CHECK(p1.coeff(K({4, 1})) == 1);
    CHECK(p1.size() == 4);

    // all four splittings collapse onto a single composition
    const auto p2 = conn_product(fl, K({1, 3}), K({2}));
    CHECK(p2.coeff(K({5})) == 4);
    CHECK(p2.size() == 1);

    // right-collapse product on composition pairs
    const auto& fr = conn("ccsym.fr");
    const auto p3 = conn_product(fr, K({1, 3}), K({2}));
    CHECK(p3.coeff(K({1, 1, 3})) == 2);
    CHECK(p3.coeff(K({1, 2, 2})) == 1);
    CHECK(p3.coeff(K({1, 3, 1})) == 1);
    CHECK(p3.size() == 3);
}

TEST_CASE("weighted-tree product matches the worked display") {
    // (weights 2,1) . (weights 1,2,1): ten splittings of a two-node comb
    const auto& fl = conn("cksym.fl");
    const BinaryTree one = N(LEAF, LEAF);
    const BinaryTree l2 = N(one, LEAF);
    const Composed x = W(one, {1, 0});        // weights (2, 1)
    const Composed y = W(l2, {0, 1, 0});      // weights (1, 2, 1)
    const auto p = conn_product(fl, x, y);
    CHECK(p.coeff(W(l2, {2, 1, 0})) == 1);    // weights (3, 2, 1)
    CHECK(p.coeff(W(l2, {0, 3, 0})) == 3);    // weights (1, 4, 1)
    CHECK(p.coeff(W(l2, {0, 1, 2})) == 1);    // weights (1, 2, 3)
    CHECK(p.coeff(W(l2, {1, 2, 0})) == 2);    // weights (2, 3, 1)
    CHECK(p.coeff(W(l2, {1, 1, 1})) == 1);    // weights (2, 2, 2)
    CHECK(p.coeff(W(l2, {0, 2, 1})) == 2);    // weights (1, 3, 2)
    CHECK(p.size() == 6);
}

TEST_CASE("painted-tree antipode spot values") {
    const auto& fr = conn("psym.fr");
    const BinaryTree one = N(LEAF, LEAF);
    const BinaryTree l2 = N(one, LEAF), r2 = N(LEAF, one);

    // S of the unpainted single node is minus the painted single node
    const Composed unpainted{T(LEAF), {T(one)}};
    const Composed painted = PT(one, {LEAF, LEAF});
    const auto s1 = conn_antipode(fr, unpainted);
    CHECK(s1.coeff(painted) == -1);
    CHECK(s1.size() == 1);

    // S of (painted node with an unpainted node on its left leaf)
    const Composed mixed = PT(one, {one, LEAF});
    const auto s2 = conn_antipode(fr, mixed);
    CHECK(s2.coeff(PT(r2, {LEAF, LEAF, LEAF})) == 1);
    CHECK(s2.size() == 1);

    // the left-antipode convolution identity it was solved from
    for (int n = 0; n <= 3; ++n) {
        for (const auto& e : compose_basis(fr.comp, n)) {
            LinearComb<Composed> convolution;
            for (const auto& [pr, c] : compose_coproduct(e).terms()) {
                auto piece = conn_product(fr, conn_antipode(fr, pr.first),
                                          LinearComb<Composed>::basis(pr.second));
                piece *= c;
                convolution += piece;
            }
            LinearComb<Composed> expected;
            if (n == 0) expected = LinearComb<Composed>::basis(unit_composed(fr.comp));
            CHECK(convolution == expected);
        }
    }
}

TEST_CASE("one-sided units act on the correct side") {
    const auto& fr = conn("psym.fr");
    const auto& fl = conn("cksym.fl");
    const Composed pu = unit_composed(fr.comp);
    const Composed wu = unit_composed(fl.comp);
    const BinaryTree one = N(LEAF, LEAF);
    const Composed p = PT(one, {one, LEAF});
    const Composed w = W(one, {1, 0});

    // fr: right unit (x . 1 = x), but 1 . x repaints
    CHECK(conn_product(fr, p, pu) == LinearComb<Composed>::basis(p));
    CHECK(conn_product(fr, pu, p) != LinearComb<Composed>::basis(p));
    // fl: left unit (1 . x = x)
    CHECK(conn_product(fl, wu, w) == LinearComb<Composed>::basis(w));
}

TEST_CASE("module action and coaction shapes") {
    const auto& fr = conn("psym.fr");
    const BinaryTree one = N(LEAF, LEAF);
    const Composed p{T(LEAF), {T(one)}};

    // acting by the degree-0 target element is the identity
    CHECK(star_right(fr, p, T(LEAF)) == LinearComb<Composed>::basis(p));

    // coaction: (id (x) f) applied to the coproduct
    const auto rho = coaction_right(fr, p);
    LinearComb<std::pair<Composed, Elem>> expected;
    for (const auto& [pr, c] : compose_coproduct(p).terms())
        expected.add({pr.first, conn_f(fr, pr.second)}, c);
    CHECK(rho == expected);

    const auto& fl = conn("cksym.fl");
    const Composed w = W(one, {1, 0});
    CHECK(star_left(fl, C(0), w) == LinearComb<Composed>::basis(w));
    const auto lrho = coaction_left(fl, w);
    LinearComb<std::pair<Elem, Composed>> lexpected;
    for (const auto& [pr, c] : compose_coproduct(w).terms())
        lexpected.add({conn_f(fl, pr.first), pr.second}, c);
    CHECK(lrho == lexpected);
}

TEST_CASE("products are associative in low degree across the catalog") {
    for (const auto& c : connections()) {
        if (c.comp.inner == Alg::S || c.comp.outer == Alg::S) continue;
        for (int m = 0; m <= 1; ++m) {
            for (int n = 0; n <= 1; ++n) {
                for (int k = 0; k <= 1; ++k) {
                    for (const auto& x : compose_basis(c.comp, m))
                        for (const auto& y : compose_basis(c.comp, n))
                            for (const auto& z : compose_basis(c.comp, k)) {
                                const auto xy_z = conn_product(
                                    c, conn_product(c, x, y), LinearComb<Composed>::basis(z));
                                const auto x_yz = conn_product(
                                    c, LinearComb<Composed>::basis(x), conn_product(c, y, z));
                                CHECK(xy_z == x_yz);
                            }
                }
            }
        }
    }
}
