#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coalg/basealg.hpp"

#include <algorithm>

using namespace coalg;

namespace {
const BinaryTree LEAF;
BinaryTree N(const BinaryTree& l, const BinaryTree& r) { return BinaryTree::node(l, r); }
Elem T(const BinaryTree& t) { return Elem(t); }
Elem P(const Perm& w) { return Elem(w); }
Elem C(int n) { return Elem(Comb{n}); }
}  // namespace

TEST_CASE("graded dimensions of the three base algebras") {
    const Int s[] = {1, 1, 2, 6, 24, 120};
    const Int y[] = {1, 1, 2, 5, 14, 42};
    for (int n = 0; n <= 5; ++n) {
        CHECK(dim(Alg::S, n) == s[n]);
        CHECK(dim(Alg::Y, n) == y[n]);
        CHECK(dim(Alg::C, n) == 1);
        CHECK(basis(Alg::Y, n).size() == static_cast<std::size_t>(y[n].convert_to<long>()));
    }
    CHECK(basis(Alg::S, 4).size() == 24);
    CHECK(basis(Alg::C, 4).size() == 1);
}

TEST_CASE("divided powers multiply with binomial coefficients") {
    CHECK(product(C(2), C(3)).coeff(C(5)) == 10);
    CHECK(product(C(0), C(4)) == LinearComb<Elem>::basis(C(4)));
    CHECK(product(C(4), C(0)) == LinearComb<Elem>::basis(C(4)));
    // deconcatenation coproduct: n + 1 terms, all coefficient 1
    const auto d = coproduct(C(3));
    CHECK(d.size() == 4);
    CHECK(d.coeff({C(1), C(2)}) == 1);
    // antipode: S(c_n) = (-1)^n c_n
    CHECK(antipode(C(3)).coeff(C(3)) == -1);
    CHECK(antipode(C(4)).coeff(C(4)) == 1);
}

TEST_CASE("permutation product grafts cut segments into the shifted right factor") {
    // The leading display example: F_3275164 * F_1432 contains the term
    // obtained by cutting w = 3275164 and interleaving with v + 7.
    const Elem w = parse_elem(Alg::S, "3 2 7 5 1 6 4");
    const Elem v = parse_elem(Alg::S, "1 4 3 2");
    const auto prod = product(w, v);
    CHECK(prod.coeff(parse_elem(Alg::S, "3 2 8 11 7 5 1 10 6 9 4")) == 1);
    // all coefficients are 1 and there are C(11, 4) = 330 terms
    CHECK(prod.size() == 330);
    for (const auto& [b, c] : prod.terms()) CHECK(c == 1);

    // unit laws
    const Elem e = unit_elem(Alg::S);
    CHECK(product(e, v) == LinearComb<Elem>::basis(v));
    CHECK(product(v, e) == LinearComb<Elem>::basis(v));

    // small complete product: F_1 * F_1 = F_12 + F_21
    const auto p11 = product(P({1}), P({1}));
    CHECK(p11.coeff(P({1, 2})) == 1);
    CHECK(p11.coeff(P({2, 1})) == 1);
    CHECK(p11.size() == 2);
}

TEST_CASE("permutation coproduct standardizes prefixes and suffixes") {
    const auto d = coproduct(P({2, 3, 1}));
    CHECK(d.coeff({P({}), P({2, 3, 1})}) == 1);
    CHECK(d.coeff({P({1}), P({2, 1})}) == 1);
    CHECK(d.coeff({P({1, 2}), P({1})}) == 1);
    CHECK(d.coeff({P({2, 3, 1}), P({})}) == 1);
    CHECK(d.size() == 4);
    CHECK(counit(P({})) == 1);
    CHECK(counit(P({1})) == 0);
}

TEST_CASE("tree product splits the left factor over the right factor") {
    const BinaryTree one = N(LEAF, LEAF);
    // F_. is the unit
    CHECK(product(T(one), T(LEAF)) == LinearComb<Elem>::basis(T(one)));
    // F_1 * F_1: split the single node into (0,1) or (1,0) over one node
    const auto p = product(T(one), T(one));
    CHECK(p.coeff(T(N(one, LEAF))) == 1);
    CHECK(p.coeff(T(N(LEAF, one))) == 1);
    CHECK(p.size() == 2);
    // one node distributed over three leaves: three distinct results
    const auto q = product(T(one), T(N(one, LEAF)));
    CHECK(q.size() == 3);
    for (const auto& [b, c] : q.terms()) CHECK(c == 1);

    // graded pieces: product of degrees m, n lands in degree m + n
    for (const auto& [b, c] : q.terms()) CHECK(degree(b) == 3);
}

TEST_CASE("tree coproduct splits at single leaves") {
    const BinaryTree l2 = N(N(LEAF, LEAF), LEAF);
    const auto d = coproduct(T(l2));
    CHECK(d.coeff({T(LEAF), T(l2)}) == 1);
    CHECK(d.coeff({T(N(LEAF, LEAF)), T(N(LEAF, LEAF))}) == 1);
    CHECK(d.coeff({T(l2), T(LEAF)}) == 1);
    CHECK(d.size() == 3);
}

TEST_CASE("monomial basis is Mobius-triangular over the rotation order") {
    const BinaryTree l2 = N(N(LEAF, LEAF), LEAF), r2 = N(LEAF, N(LEAF, LEAF));
    // M_l2 = F_l2 - F_r2; M_r2 = F_r2
    const auto m = m_to_f(T(l2));
    CHECK(m.coeff(T(l2)) == 1);
    CHECK(m.coeff(T(r2)) == -1);
    CHECK(m.size() == 2);
    CHECK(m_to_f(T(r2)) == LinearComb<Elem>::basis(T(r2)));

    // f_to_m and m_to_f are inverse on every tree of degree <= 4
    for (int n = 0; n <= 4; ++n) {
        for (const auto& e : basis(Alg::Y, n)) {
            const auto round = f_to_m(e).map_terms<Elem>([](const Elem& x) { return m_to_f(x); });
            CHECK(round == LinearComb<Elem>::basis(e));
        }
    }

    // for divided powers the two bases coincide
    CHECK(m_to_f(C(3)) == LinearComb<Elem>::basis(C(3)));
    CHECK(f_to_m(C(3)) == LinearComb<Elem>::basis(C(3)));
}

TEST_CASE("primitive letters and primitive dimensions") {
    // dims: trees give shifted Catalan (1, 1, 2, 5), divided powers (1, 0, 0, 0),
    // permutations count indecomposables (1, 1, 3, 13)
    const Int y[] = {1, 1, 2, 5};
    const Int c[] = {1, 0, 0, 0};
    const Int s[] = {1, 1, 3, 13};
    for (int n = 1; n <= 4; ++n) {
        CHECK(primitive_dim(Alg::Y, n) == y[n - 1]);
        CHECK(primitive_dim(Alg::C, n) == c[n - 1]);
        if (n <= 3) CHECK(primitive_dim(Alg::S, n) == s[n - 1]);
    }

    // progressive trees give the primitive M elements
    for (int n = 1; n <= 4; ++n) {
        const auto prim = primitive_letters(Alg::Y, n);
        CHECK(Int(prim.size()) == y[n - 1]);
        for (const auto& e : prim) {
            CHECK(is_primitive_letter(e));
            // reduced coproduct of m_to_f(e) vanishes
            auto red = m_to_f(e).map_terms<std::pair<Elem, Elem>>(
                [](const Elem& x) { return coproduct(x); });
            auto mf = m_to_f(e);
            for (const auto& [b, cf] : mf.terms()) {
                red.add({unit_elem(Alg::Y), b}, -cf);
                red.add({b, unit_elem(Alg::Y)}, -cf);
            }
            CHECK(red.is_zero());
        }
    }
    CHECK(primitive_letters(Alg::C, 1).size() == 1);
    CHECK(primitive_letters(Alg::C, 2).empty());
}

TEST_CASE("maximal primitive factorization concatenates back") {
    // tree spine pieces as elements; divided powers split into degree-1 letters
    for (int n = 0; n <= 4; ++n) {
        for (const auto& e : basis(Alg::Y, n)) {
            const auto word = m_word(e);
            for (const auto& w : word) CHECK(is_primitive_letter(w));
            CHECK(m_concat(Alg::Y, word) == e);
        }
    }
    CHECK(m_word(C(3)).size() == 3);
    CHECK(m_concat(Alg::C, m_word(C(3))) == C(3));
}

TEST_CASE("index maps between the base algebras") {
    // tau: max-at-root tree of a permutation
    CHECK(tau_map(P({2, 1, 3})) == T(N(N(LEAF, N(LEAF, LEAF)), LEAF)));
    // kappa: collapse a tree to its degree
    CHECK(kappa_map(T(N(LEAF, N(LEAF, LEAF)))) == C(2));
    // inclusion: divided powers land on right combs
    CHECK(incl_comb(C(3)) == T(right_comb(3)));
    CHECK(incl_comb(C(0)) == T(LEAF));
}

TEST_CASE("antipode satisfies the defining convolution identity") {
    // m(S (x) id) Delta = unit counit, checked on every element of low degree
    for (Alg a : {Alg::Y, Alg::C, Alg::S}) {
        const int top = a == Alg::S ? 3 : 4;
        for (int n = 0; n <= top; ++n) {
            for (const auto& e : basis(a, n)) {
                LinearComb<Elem> conv;
                for (const auto& [pr, c] : coproduct(e).terms()) {
                    auto s = antipode(pr.first);
                    for (const auto& [sb, sc] : s.terms()) {
                        auto piece = product(sb, pr.second);
                        piece *= sc * c;
                        conv += piece;
                    }
                }
                LinearComb<Elem> expected;
                if (n == 0) expected = LinearComb<Elem>::basis(unit_elem(a));
                CHECK(conv == expected);
            }
        }
    }
}

TEST_CASE("base element literals round-trip") {
    CHECK(elem_literal(C(3)) == "c3");
    CHECK(parse_elem(Alg::C, "c0") == C(0));
    CHECK(elem_literal(P({3, 1, 2})) == "3 1 2");
    CHECK(elem_literal(T(N(LEAF, LEAF))) == "(. .)");
    CHECK(parse_elem(Alg::Y, "(. (. .))") == T(right_comb(2)));
    CHECK(parse_elem(Alg::S, "e") == P({}));
    CHECK_THROWS_AS(parse_elem(Alg::C, "c-1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_elem(Alg::C, "3"), std::invalid_argument);
    for (int n = 0; n <= 3; ++n)
        for (Alg a : {Alg::Y, Alg::C, Alg::S})
            for (const auto& e : basis(a, n)) CHECK(parse_elem(a, elem_literal(e)) == e);
}
