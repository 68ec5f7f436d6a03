#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coalg/linear.hpp"

#include <string>
#include <utility>

using namespace coalg;

TEST_CASE("linear combinations use exact integer arithmetic") {
    LinearComb<std::string> x;
    x.add("a", 2);
    x.add("b", -1);
    x.add("a", -2);  // cancels: zero coefficients are dropped
    CHECK(x.coeff("a") == 0);
    CHECK(x.coeff("b") == -1);
    CHECK(x.terms().size() == 1);

    LinearComb<std::string> y;
    y.add("b", 1);
    LinearComb<std::string> z = x + y;
    CHECK(z.terms().empty());
    CHECK(z == LinearComb<std::string>{});

    x *= 3;
    CHECK(x.coeff("b") == -3);

    // A coefficient that overflows 64 bits survives intact.
    LinearComb<std::string> big;
    Int huge = 1;
    for (int i = 0; i < 5; ++i) huge *= 1000000007LL;
    big.add("a", huge);
    big += big;
    CHECK(big.coeff("a") == huge * 2);
}

TEST_CASE("tensor product of linear combinations distributes") {
    LinearComb<std::string> x, y;
    x.add("a", 2);
    x.add("b", 1);
    y.add("u", 3);
    auto t = tensor(x, y);
    CHECK(t.coeff({"a", "u"}) == 6);
    CHECK(t.coeff({"b", "u"}) == 3);
    CHECK(t.terms().size() == 2);
}

TEST_CASE("fraction-free rank computation") {
    CHECK(bareiss_rank({{Int(1), Int(2)}, {Int(2), Int(4)}}) == 1);
    CHECK(bareiss_rank({{Int(1), Int(0)}, {Int(0), Int(1)}}) == 2);
    CHECK(bareiss_rank({{Int(0), Int(0)}, {Int(0), Int(0)}}) == 0);
    // 3x3 with one dependent row
    CHECK(bareiss_rank({{Int(1), Int(2), Int(3)},
                        {Int(4), Int(5), Int(6)},
                        {Int(5), Int(7), Int(9)}}) == 2);
    // Rectangular
    CHECK(bareiss_rank({{Int(1), Int(2), Int(3)}, {Int(2), Int(4), Int(7)}}) == 2);
}

TEST_CASE("kernel dimension of a linear map given on basis elements") {
    // f(e0) = u, f(e1) = u, f(e2) = 0: kernel has dimension 2.
    std::vector<int> bas = {0, 1, 2};
    auto f = [](int b) {
        LinearComb<std::string> out;
        if (b != 2) out.add("u", 1);
        return out;
    };
    CHECK(reduced_kernel_dim(bas, f) == 2);
    // Injective map: kernel 0.
    auto g = [](int b) {
        LinearComb<std::string> out;
        out.add("e" + std::to_string(b), 1);
        return out;
    };
    CHECK(reduced_kernel_dim(bas, g) == 0);
}

TEST_CASE("truncated integer power series") {
    Series one(6);
    one[0] = 1;
    Series x = Series::x(6);
    Series geom = (one - x).inverse();  // 1/(1-x) = 1 + x + x^2 + ...
    for (std::size_t i = 0; i < 6; ++i) CHECK(geom[i] == 1);

    Series sq = geom * geom;  // 1/(1-x)^2 = sum (n+1) x^n
    for (std::size_t i = 0; i < 6; ++i) CHECK(sq[i] == Int(i) + 1);

    CHECK((geom * (one - x))[0] == 1);
    CHECK((geom * (one - x))[3] == 0);

    Series inv_back = geom.inverse();
    CHECK(inv_back[0] == 1);
    CHECK(inv_back[1] == -1);
    CHECK(inv_back[2] == 0);
}
