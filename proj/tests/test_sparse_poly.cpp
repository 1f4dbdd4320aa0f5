#include <catch2/catch_amalgamated.hpp>

#include "hypercheb/sparse_poly.hpp"

using namespace hypercheb;

namespace {
const std::vector<std::string> XY = {"x", "y"};
const std::vector<std::string> XYZ = {"x", "y", "z"};
}  // namespace

TEST_CASE("ring operations are exact") {
    const SparsePoly x = SparsePoly::variable(XY, 0);
    const SparsePoly y = SparsePoly::variable(XY, 1);

    SECTION("(x+y)^2 = x^2 + 2xy + y^2") {
        const SparsePoly sq = (x + y) * (x + y);
        SparsePoly want(XY);
        want.add_term({2, 0}, 1);
        want.add_term({1, 1}, 2);
        want.add_term({0, 2}, 1);
        CHECK(sq == want);
    }
    SECTION("cancellation removes terms") {
        const SparsePoly zero = (x + y) * (x - y) - (x * x - y * y);
        CHECK(zero.is_zero());
        CHECK(zero.term_count() == 0);
    }
    SECTION("scalar multiple by zero") {
        CHECK((BigInt(0) * (x + y)).is_zero());
    }
    SECTION("variable mismatch throws") {
        CHECK_THROWS_AS(x + SparsePoly::variable(XYZ, 0), std::invalid_argument);
    }
}

TEST_CASE("binomial coefficients against a Pascal-triangle oracle") {
    std::vector<std::vector<BigInt>> pascal(41);
    for (int n = 0; n <= 40; ++n) {
        pascal[n].assign(n + 1, 1);
        for (int k = 1; k < n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
    }
    for (int n = 0; n <= 40; ++n)
        for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == pascal[n][k]);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(5, -1) == 0);
}

TEST_CASE("canonical text form") {
    SECTION("degree then concentration then lex") {
        SparsePoly p(XYZ);
        p.add_term({3, 0, 0}, 1);
        p.add_term({0, 3, 0}, 1);
        p.add_term({0, 0, 3}, 1);
        p.add_term({1, 1, 1}, -3);
        CHECK(p.str() == "x^3 + y^3 + z^3 - 3*x*y*z");
    }
    SECTION("coefficients of one and constants") {
        SparsePoly p(XY);
        p.add_term({2, 0}, 1);
        p.add_term({0, 1}, -1);
        p.add_term({0, 0}, 7);
        CHECK(p.str() == "x^2 - y + 7");
    }
    SECTION("leading negative") {
        SparsePoly p(XY);
        p.add_term({1, 0}, -2);
        CHECK(p.str() == "-2*x");
    }
    SECTION("zero") { CHECK(SparsePoly(XY).str() == "0"); }
}

TEST_CASE("numeric evaluation") {
    SparsePoly p(XYZ);  // x^2 + 2yz
    p.add_term({2, 0, 0}, 1);
    p.add_term({0, 1, 1}, 2);
    const std::vector<Complex> pt = {Complex(2.0, 0.0), Complex(3.0, 0.0), Complex(-1.0, 0.0)};
    CHECK(std::abs(p.eval(pt) - Complex(4.0 - 6.0, 0.0)) < 1e-15);
}

TEST_CASE("relabelling permutes exponent slots") {
    SparsePoly p(XYZ);  // x^2 y
    p.add_term({2, 1, 0}, 1);
    // x -> y, y -> z, z -> x
    const SparsePoly q = p.relabel({1, 2, 0});
    SparsePoly want(XYZ);  // y^2 z
    want.add_term({0, 2, 1}, 1);
    CHECK(q == want);
}
