#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coalg/instances.hpp"
#include "coalg/operad.hpp"

using namespace coalg;

namespace {
const BinaryTree LEAF;
BinaryTree N(const BinaryTree& l, const BinaryTree& r) { return BinaryTree::node(l, r); }
Elem T(const BinaryTree& t) { return Elem(t); }
Elem C(int n) { return Elem(Comb{n}); }

Face F(int n, const std::vector<int>& s) { return Face{n, s}; }

const CompId PSYM{Alg::Y, Alg::Y};
const CompId CCSYM{Alg::C, Alg::C};
}  // namespace

TEST_CASE("compositions encode composition pairs") {
    // (1,3): two parts -> base c1, letter degrees (0, 2)
    const Composed e = composition_to_composed({1, 3});
    CHECK(e.d == C(1));
    CHECK(e.cs == std::vector<Elem>{C(0), C(2)});
    CHECK(composed_to_composition(e) == Composition{1, 3});
    CHECK(total_degree(e) == 3);
    // the unit is the composition (1)
    CHECK(composition_to_composed({1}) == unit_composed(CCSYM));

    CHECK(composition_literal({1, 3}) == "[1,3]");
    CHECK(parse_composition("[1,3]") == Composition{1, 3});
    CHECK(parse_composition("[10]") == Composition{10});
    CHECK_THROWS_AS(parse_composition("[0,2]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_composition("[]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_composition("1,3"), std::invalid_argument);

    // all degree-3 basis elements are compositions of 4
    int count = 0;
    for (const auto& b : compose_basis(CCSYM, 3)) {
        const Composition a = composed_to_composition(b);
        int sum = 0;
        for (int p : a) sum += p;
        CHECK(sum == 4);
        CHECK(composition_to_composed(a) == b);
        ++count;
    }
    CHECK(count == 8);
}

TEST_CASE("weighted-tree literals show letter degrees plus one") {
    const BinaryTree one = N(LEAF, LEAF);
    const Composed w{T(one), {C(1), C(0)}};
    CHECK(weighted_literal(w) == "(. .) @ [2,1]");
    CHECK(parse_weighted("(. .) @ [2,1]") == w);
    CHECK(parse_weighted(". @ [1]") == unit_composed(CompId{Alg::C, Alg::Y}));
    CHECK_THROWS_AS(parse_weighted("(. .) @ [2]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_weighted("(. .) @ [0,1]"), std::invalid_argument);
    for (int n = 0; n <= 3; ++n)
        for (const auto& e : compose_basis(CompId{Alg::C, Alg::Y}, n))
            CHECK(parse_weighted(weighted_literal(e)) == e);
}

TEST_CASE("painted trees render as marked shapes") {
    // painted node with an unpainted node on its left leaf: shape l2,
    // painted position set {2} (the root is the second infix node).
    const BinaryTree one = N(LEAF, LEAF);
    const Composed p{T(one), {T(one), T(LEAF)}};
    const auto [shape, painted] = painted_to_marked(p);
    CHECK(shape == N(one, LEAF));
    CHECK(painted == std::set<int>{2});
    CHECK(marked_to_painted(shape, painted) == p);
    CHECK(painted_marked_literal(p) == "((. .) .) !p {2}");
    CHECK(parse_painted_marked("((. .) .) !p {2}") == p);

    // fully painted and fully unpainted
    const Composed full{T(one), {T(LEAF), T(LEAF)}};
    CHECK(painted_to_marked(full).second == std::set<int>{1});
    const Composed none{T(LEAF), {T(one)}};
    CHECK(painted_to_marked(none).second.empty());

    // the marked set is always closed under ancestors, and the bijection
    // round-trips every painted tree of low degree
    for (int n = 0; n <= 3; ++n) {
        for (const auto& e : compose_basis(PSYM, n)) {
            const auto [sh, marks] = painted_to_marked(e);
            CHECK(sh.degree() == n);
            CHECK(is_ancestor_closed(sh, marks));
            CHECK(marked_to_painted(sh, marks) == e);
            CHECK(parse_painted_marked(painted_marked_literal(e)) == e);
        }
    }
}

TEST_CASE("two-level trees prune to painted trees and grow back") {
    // the unique two-level tree on one node prunes to the degree-0 unit
    const auto b1 = all_bileveled(1);
    REQUIRE(b1.size() == 1);
    CHECK(prune_bileveled(b1[0]) == unit_composed(PSYM));
    CHECK(grow_painted(unit_composed(PSYM)) == b1[0]);

    // counts agree: two-level trees on n+1 nodes = painted trees of degree n
    for (int n = 0; n <= 3; ++n)
        CHECK(Int(all_bileveled(n + 1).size()) == compose_dim(PSYM, n));

    // bijection in both directions
    for (int n = 1; n <= 4; ++n) {
        for (const auto& b : all_bileveled(n)) {
            const Composed p = prune_bileveled(b);
            CHECK(total_degree(p) == n - 1);
            CHECK(grow_painted(p) == b);
        }
    }
    for (int n = 0; n <= 3; ++n)
        for (const auto& e : compose_basis(PSYM, n))
            CHECK(prune_bileveled(grow_painted(e)) == e);

    // literals
    const BiLeveled b = b1[0];
    CHECK(bileveled_literal(b) == "(. .) ! {1}");
    CHECK(parse_bileveled("(. .) ! {1}") == b);
    for (const auto& x : all_bileveled(3)) CHECK(parse_bileveled(bileveled_literal(x)) == x);
    CHECK_THROWS_AS(parse_bileveled("(. .) ! {}"), std::invalid_argument);
}

TEST_CASE("direct painted product agrees with the connection product") {
    const auto* fr = find_connection("psym.fr");
    REQUIRE(fr != nullptr);
    for (int m = 0; m <= 2; ++m) {
        for (int n = 0; n + m <= 3; ++n) {
            for (const auto& x : compose_basis(PSYM, m))
                for (const auto& y : compose_basis(PSYM, n))
                    CHECK(painted_product_direct(x, y) == conn_product(*fr, x, y));
        }
    }
}

TEST_CASE("face coproduct splits the vertex interval") {
    const auto d = face_coproduct(F(3, {1}));
    CHECK(d.coeff({F(0, {}), F(3, {1})}) == 1);
    CHECK(d.coeff({F(1, {1}), F(2, {})}) == 1);
    CHECK(d.coeff({F(2, {1}), F(1, {})}) == 1);
    CHECK(d.coeff({F(3, {1}), F(0, {})}) == 1);
    CHECK(d.size() == 4);
    CHECK(face_counit(F(0, {})) == 1);
    CHECK(face_counit(F(2, {})) == 0);
    CHECK(face_basis(3).size() == 8);
    CHECK(face_basis(0).size() == 1);
}

TEST_CASE("face product shuffles blocks and keeps the first block's image") {
    // one term per shuffle; the cut set records every first-block position
    const auto p1 = face_product(F(1, {}), F(3, {1}));
    CHECK(p1.coeff(F(4, {1, 2})) == 2);
    CHECK(p1.coeff(F(4, {1, 3})) == 1);
    CHECK(p1.coeff(F(4, {1, 4})) == 1);
    CHECK(p1.size() == 3);

    const auto p2 = face_product(F(3, {1}), F(1, {}));
    CHECK(p2.coeff(F(4, {2, 3, 4})) == 1);
    CHECK(p2.coeff(F(4, {1, 3, 4})) == 1);
    CHECK(p2.coeff(F(4, {1, 2, 4})) == 1);
    CHECK(p2.coeff(F(4, {1, 2, 3})) == 1);
    CHECK(p2.size() == 4);

    const auto p3 = face_product(F(1, {}), F(2, {2}));
    CHECK(p3.coeff(F(3, {1, 3})) == 1);
    CHECK(p3.coeff(F(3, {2, 3})) == 2);
    CHECK(p3.size() == 2);

    // left unit only
    CHECK(face_product(F(0, {}), F(2, {1})) == LinearComb<Face>::basis(F(2, {1})));
    CHECK(face_product(F(2, {1}), F(0, {})) != LinearComb<Face>::basis(F(2, {1})));
}

TEST_CASE("face antipode satisfies the right-sided convolution identity") {
    for (int n = 0; n <= 4; ++n) {
        for (const auto& f : face_basis(n)) {
            LinearComb<Face> conv;
            for (const auto& [pr, c] : face_coproduct(f).terms()) {
                for (const auto& [sb, sc] : face_antipode(pr.second).terms()) {
                    auto piece = face_product(pr.first, sb);
                    piece *= sc * c;
                    conv += piece;
                }
            }
            LinearComb<Face> expected;
            if (n == 0) expected = LinearComb<Face>::basis(F(0, {}));
            CHECK(conv == expected);
        }
    }
}

TEST_CASE("face literals round-trip") {
    CHECK(face_literal(F(9, {3, 5, 6})) == "{3,5,6}/9");
    CHECK(face_literal(F(3, {})) == "{}/3");
    CHECK(face_literal(F(0, {})) == "{}/0");
    CHECK(parse_face("{3,5,6}/9") == F(9, {3, 5, 6}));
    CHECK(parse_face("{}/3") == F(3, {}));
    CHECK_THROWS_AS(parse_face("{4}/3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_face("{0}/3"), std::invalid_argument);
    // Element order inside the braces is immaterial; the set normalizes.
    CHECK(parse_face("{2,1}/3") == F(3, {1, 2}));
    for (int n = 0; n <= 4; ++n)
        for (const auto& f : face_basis(n)) CHECK(parse_face(face_literal(f)) == f);
}

TEST_CASE("boundary-point map alpha is a graded anti-isomorphism") {
    // gaps of the cut set, closing at n + 1
    CHECK(alpha(F(9, {3, 5, 6})) == Composition{3, 2, 1, 4});
    CHECK(alpha(F(3, {})) == Composition{4});
    CHECK(alpha(F(0, {})) == Composition{1});
    CHECK(alpha_inv({3, 2, 1, 4}) == F(9, {3, 5, 6}));
    CHECK(alpha_inv({1}) == F(0, {}));
    for (int n = 0; n <= 4; ++n)
        for (const auto& f : face_basis(n)) CHECK(alpha_inv(alpha(f)) == f);

    // alpha intertwines the coproducts
    for (int n = 0; n <= 3; ++n) {
        for (const auto& f : face_basis(n)) {
            LinearComb<std::pair<Composed, Composed>> lhs;
            for (const auto& [pr, c] : face_coproduct(f).terms())
                lhs.add({composition_to_composed(alpha(pr.first)),
                         composition_to_composed(alpha(pr.second))},
                        c);
            CHECK(lhs == compose_coproduct(composition_to_composed(alpha(f))));
        }
    }

    // alpha reverses the product (fr collapse on composition pairs)
    const auto* fr = find_connection("ccsym.fr");
    REQUIRE(fr != nullptr);
    for (int m = 0; m <= 2; ++m) {
        for (int n = 0; n + m <= 3; ++n) {
            for (const auto& x : face_basis(m)) {
                for (const auto& y : face_basis(n)) {
                    LinearComb<Composed> lhs;
                    for (const auto& [f2, c] : face_product(x, y).terms())
                        lhs.add(composition_to_composed(alpha(f2)), c);
                    const auto rhs =
                        conn_product(*fr, composition_to_composed(alpha(y)),
                                     composition_to_composed(alpha(x)));
                    CHECK(lhs == rhs);
                }
            }
        }
    }
}
