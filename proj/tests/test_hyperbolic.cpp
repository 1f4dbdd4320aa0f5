#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hypercheb/hyperbolic.hpp"

using namespace hypercheb;
using namespace hypercheb::hyperbolic;

namespace {

// Test-local oracle: straight factorial summation of the defining series,
// independent of the Euler-average route used by eval_h for |z| >= 1e-2.
Complex h_series_oracle(int m, int k, Complex z, int terms = 80) {
    Complex acc(0.0, 0.0);
    Complex term(1.0, 0.0);
    // z^k / k!
    for (int j = 1; j <= k; ++j) term *= z / static_cast<double>(j);
    acc = term;
    double idx = k;
    for (int s = 0; s < terms; ++s) {
        for (int j = 1; j <= m; ++j) term *= z / (idx + j);
        idx += m;
        acc += term;
    }
    return acc;
}

std::mt19937_64 gen(99);
double unit() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }
Complex rand_box(double h) { return Complex(h * (2 * unit() - 1), h * (2 * unit() - 1)); }

}  // namespace

TEST_CASE("eval_h basic values") {
    SECTION("m=2 grade 0 is cosh") {
        CHECK(std::abs(eval_h(2, 0, Complex(1.0, 0.0)).real() - 1.5430806348152437) < 1e-13);
        CHECK(std::abs(eval_h(2, 0, Complex(1.0, 0.0)) -
                       h_series_oracle(2, 0, Complex(1.0, 0.0))) < 1e-13);
    }
    SECTION("value at zero is the Kronecker delta") {
        for (int m = 2; m <= 6; ++m)
            for (int k = 0; k < m; ++k) {
                const Complex v = eval_h(m, k, Complex(0.0, 0.0));
                CHECK(std::abs(v - (k == 0 ? Complex(1.0, 0.0) : Complex(0.0, 0.0))) < 1e-15);
            }
    }
    SECTION("m=2 grade 1 is sinh") {
        CHECK(std::abs(eval_h(2, 1, Complex(0.7, 0.0)).real() - std::sinh(0.7)) < 1e-14);
    }
    SECTION("argument checks") {
        CHECK_THROWS_AS(eval_h(1, 0, Complex(1.0, 0.0)), std::invalid_argument);
        CHECK_THROWS_AS(eval_h(3, 3, Complex(1.0, 0.0)), std::invalid_argument);
    }
}

TEST_CASE("eval_h agrees with the series oracle inside |z| <= 3") {
    for (const int m : {2, 3, 4, 5}) {
        for (int k = 0; k < m; ++k) {
            for (int t = 0; t < 20; ++t) {
                const Complex z = rand_box(2.1);
                const Complex got = eval_h(m, k, z);
                const Complex want = h_series_oracle(m, k, z);
                CHECK(scaled_diff(got, want) < 1e-12);
            }
            // real axis, the module contract case
            for (double x = -3.0; x <= 3.0; x += 0.5) {
                const Complex got = eval_h(m, k, Complex(x, 0.0));
                const Complex want = h_series_oracle(m, k, Complex(x, 0.0));
                CHECK(scaled_diff(got, want) < 1e-12);
            }
        }
    }
}

TEST_CASE("small-argument fallback holds full precision") {
    // Near zero the Euler average cancels catastrophically for k > 0; the
    // series route must deliver relative accuracy, not just absolute.
    for (const int m : {3, 5}) {
        for (int k = 0; k < m; ++k) {
            const Complex z(1e-3, -2e-4);
            const Complex got = eval_h(m, k, z);
            const Complex want = h_series_oracle(m, k, z, 8);
            CHECK(std::abs(got - want) <= 1e-12 * std::abs(want));
        }
    }
}

TEST_CASE("eval_point components and the exp partition") {
    SECTION("m=3 at zero") {
        const HyperbolicPoint p = eval_point(3, Complex(0.0, 0.0));
        CHECK(p.h[0] == Complex(1.0, 0.0));
        CHECK(std::abs(p.h[1]) < 1e-15);
        CHECK(std::abs(p.h[2]) < 1e-15);
    }
    SECTION("m=2 reduces to (cosh, sinh)") {
        const double a = 0.83;
        const HyperbolicPoint p = eval_point(2, Complex(a, 0.0));
        CHECK(std::abs(p.h[0].real() - std::cosh(a)) < 1e-14);
        CHECK(std::abs(p.h[1].real() - std::sinh(a)) < 1e-14);
    }
    SECTION("components sum to exp(alpha)") {
        for (int m = 2; m <= 5; ++m)
            for (int t = 0; t < 10; ++t) {
                const Complex a = rand_box(2.1);
                const HyperbolicPoint p = eval_point(m, a);
                Complex sum(0.0, 0.0);
                for (const Complex& h : p.h) sum += h;
                CHECK(scaled_diff(sum, std::exp(a)) < 1e-13);
            }
    }
    SECTION("m=3 at alpha=1 sums to e") {
        const HyperbolicPoint p = eval_point(3, Complex(1.0, 0.0));
        CHECK(std::abs((p.h[0] + p.h[1] + p.h[2]).real() - std::exp(1.0)) < 1e-13);
    }
}

TEST_CASE("grading under the rotation") {
    for (const int m : {2, 3, 4}) {
        const spectral::RootOfUnityTable w(m);
        for (int t = 0; t < 10; ++t) {
            const Complex z = rand_box(2.0);
            for (int k = 0; k < m; ++k)
                CHECK(scaled_diff(eval_h(m, k, w.power(1) * z), w.power(k) * eval_h(m, k, z)) <
                      1e-12);
        }
    }
}

TEST_CASE("derivative chain d/dz h_k = h_{k-1 mod m}") {
    const double eps = 1e-6;
    for (const int m : {2, 3, 4}) {
        for (int t = 0; t < 5; ++t) {
            const Complex z = rand_box(1.5);
            for (int k = 0; k < m; ++k) {
                const Complex num =
                    (eval_h(m, k, z + Complex(eps, 0.0)) - eval_h(m, k, z - Complex(eps, 0.0))) /
                    (2.0 * eps);
                CHECK(std::abs(num - eval_h(m, mod_floor(k - 1, m), z)) < 1e-5);
            }
        }
    }
}

TEST_CASE("convolution residuals") {
    SECTION("m=2 cosh addition theorem") {
        CHECK(convolution_check(2, Complex(0.9, 0.0), Complex(-0.4, 0.0), 0) < 1e-13);
    }
    SECTION("module contract point") {
        CHECK(convolution_check(3, Complex(0.7, 0.0), Complex(-0.3, 0.0), 2) <= 1e-10);
    }
    SECTION("beta = 0 collapses to rounding noise") {
        for (int k = 0; k < 3; ++k)
            CHECK(convolution_check(3, Complex(1.2, 0.4), Complex(0.0, 0.0), k) < 1e-13);
    }
    SECTION("random box, all orders and grades") {
        for (const int m : {2, 3, 4})
            for (int t = 0; t < 30; ++t) {
                const Complex a = rand_box(2.1), b = rand_box(2.1);
                for (int k = 0; k < m; ++k) CHECK(convolution_check(m, a, b, k) <= 1e-10);
            }
    }
}

TEST_CASE("product identity residuals") {
    SECTION("m=2: cosh(a+b) + cosh(a-b) = 2 cosh a cosh b") {
        CHECK(product_identity_check(2, Complex(0.8, 0.0), Complex(0.5, 0.0)) < 1e-13);
    }
    SECTION("module contract point") {
        CHECK(product_identity_check(3, Complex(1.1, 0.0), Complex(0.4, 0.0)) <= 1e-10);
    }
    SECTION("beta = 0") {
        for (const int m : {2, 3, 4, 5})
            CHECK(product_identity_check(m, Complex(0.9, -0.2), Complex(0.0, 0.0)) < 1e-12);
    }
    SECTION("random box") {
        for (const int m : {2, 3, 4})
            for (int t = 0; t < 30; ++t)
                CHECK(product_identity_check(m, rand_box(2.1), rand_box(2.1)) <= 1e-10);
    }
}

TEST_CASE("overflow is a range error, not an infinity") {
    CHECK_THROWS_AS(eval_h(2, 0, Complex(800.0, 0.0)), std::range_error);
    CHECK_THROWS_AS(eval_point(3, Complex(1000.0, 0.0)), std::range_error);
    CHECK_NOTHROW(eval_h(2, 0, Complex(-700.0, 0.0)));  // reflected arg stays in range
    CHECK(std::isfinite(eval_h(2, 0, Complex(-700.0, 0.0)).real()));
}
