#include <catch2/catch_amalgamated.hpp>

#include "hypercheb/genfun.hpp"

using namespace hypercheb;
using namespace hypercheb::cheb;

namespace {

// Test-local symbolic oracle: the main stream advanced by
// F_{n+3} = 3x F_{n+2} - 3x* F_{n+1} + F_n from the exact seeds
// 1, x, 3x^2 - 2x*, entirely in the polynomial ring.
std::vector<SparsePoly> symbolic_main_stream(int nterms) {
    const auto& v = gf_vars();
    const SparsePoly x = SparsePoly::variable(v, 0);
    const SparsePoly xs = SparsePoly::variable(v, 1);
    std::vector<SparsePoly> f;
    f.push_back(SparsePoly::constant(v, 1));
    f.push_back(x);
    f.push_back(BigInt(3) * (x * x) - BigInt(2) * xs);
    while (static_cast<int>(f.size()) < nterms) {
        const size_t n = f.size();
        f.push_back(BigInt(3) * (x * f[n - 1]) - BigInt(3) * (xs * f[n - 2]) + f[n - 3]);
    }
    f.resize(static_cast<size_t>(nterms), SparsePoly(v));
    return f;
}

}  // namespace

TEST_CASE("closed forms of the three generating functions") {
    const auto& v = gf_vars();
    const SparsePoly x = SparsePoly::variable(v, 0);
    const SparsePoly xs = SparsePoly::variable(v, 1);
    const SparsePoly xss = SparsePoly::variable(v, 2);
    const SparsePoly one = SparsePoly::constant(v, 1);

    const RationalGF g0 = genfun(0);
    REQUIRE(g0.denominator.size() == 4);
    CHECK(g0.denominator[0] == one);
    CHECK(g0.denominator[1] == BigInt(-3) * x);
    CHECK(g0.denominator[2] == BigInt(3) * xs);
    CHECK(g0.denominator[3] == SparsePoly::constant(v, -1));
    REQUIRE(g0.numerator.size() == 3);
    CHECK(g0.numerator[0] == one);
    CHECK(g0.numerator[1] == BigInt(-2) * x);
    CHECK(g0.numerator[2] == xs);

    const RationalGF g1 = genfun(1);
    CHECK(g1.numerator[0] == x);  // z = 0 coefficient of the first aside stream is x
    CHECK(g1.numerator[1] == -(BigInt(3) * (x * x) - xs));
    CHECK(g1.numerator[2] == xss);

    const RationalGF g2 = genfun(2);
    CHECK(g2.numerator[0] == x);
    CHECK(g2.numerator[2] == BigInt(3) * (x * xs) - xss - one);

    CHECK_THROWS_AS(genfun(3), std::invalid_argument);
}

TEST_CASE("symbolic long division of the main stream") {
    const auto series = gf_series_symbolic(genfun(0), 12);
    const auto oracle = symbolic_main_stream(12);

    SECTION("leading terms 1, x, 3x^2 - 2x*") {
        const auto& v = gf_vars();
        CHECK(series[0] == SparsePoly::constant(v, 1));
        CHECK(series[1] == SparsePoly::variable(v, 0));
        SparsePoly t2(v);
        t2.add_term({2, 0, 0}, 3);
        t2.add_term({0, 1, 0}, -2);
        CHECK(series[2] == t2);
    }
    SECTION("twelve terms match the recurrence oracle exactly") {
        for (int n = 0; n < 12; ++n) CHECK(series[static_cast<size_t>(n)] == oracle[static_cast<size_t>(n)]);
    }
}

TEST_CASE("numeric series reproduce the stream values") {
    const Complex alpha(0.52, -0.18);
    const StreamSequence seq = recurrence_eval(3, alpha, 11);
    for (int s = 0; s < 3; ++s) {
        const auto ser = gf_series_numeric(genfun(s), seq.x, seq.xstar, seq.xstarstar, 12);
        for (int n = 0; n < 12; ++n)
            CHECK(scaled_diff(ser[static_cast<size_t>(n)],
                              seq.streams[static_cast<size_t>(s)][static_cast<size_t>(n)]) <= 1e-9);
    }
}

TEST_CASE("denominator vanishes at the reciprocal characteristic roots") {
    const Complex alpha(0.37, 0.21);
    const spectral::RootOfUnityTable w(3);
    const Complex x = hyperbolic::eval_h(3, 0, alpha);
    const Complex xs = hyperbolic::eval_h(3, 0, -alpha);
    const Complex xss = stream_value(3, alpha, Complex(2, 0) + w.power(1));
    const RationalGF gf = genfun(0);
    for (int k = 0; k < 3; ++k) {
        const Complex z = std::exp(-w.power(k) * alpha);
        CHECK(std::abs(gf_poly_value(gf.denominator, x, xs, xss, z)) < 1e-10);
    }
    // and the factored form (1 - e^a z)(1 - e^{wa} z)(1 - e^{w^2 a} z)
    const Complex z(0.3, 0.4);
    Complex prod(1.0, 0.0);
    for (int k = 0; k < 3; ++k) prod *= Complex(1, 0) - std::exp(w.power(k) * alpha) * z;
    CHECK(scaled_diff(prod, gf_poly_value(gf.denominator, x, xs, xss, z)) < 1e-12);
}
