#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hypercheb/series.hpp"

using namespace hypercheb;
using namespace hypercheb::spectral;

namespace {

TruncatedSeries random_series(std::mt19937_64& gen, int order) {
    TruncatedSeries f(order);
    const auto unit = [&] { return static_cast<double>(gen() >> 11) * 0x1.0p-53 * 2.0 - 1.0; };
    for (int j = 0; j <= order; ++j) f.set_coeff(j, Complex(unit(), unit()));
    return f;
}

}  // namespace

TEST_CASE("root-of-unity table invariants") {
    for (int m = 2; m <= 7; ++m) {
        const RootOfUnityTable w(m);
        for (int s = 0; s < m; ++s) {
            CHECK(std::abs(std::abs(w.power(s)) - 1.0) < 1e-15);
            for (int t = 0; t < m; ++t)
                CHECK(std::abs(w.power(s) * w.power(t) - w.power(s + t)) < 1e-14);
        }
        // sum_s w^{ks} = m if k = 0 (mod m), else 0
        for (int k = 0; k < 2 * m; ++k) {
            Complex sum(0.0, 0.0);
            for (int s = 0; s < m; ++s) sum += w.power(static_cast<long long>(k) * s);
            const Complex want = (k % m == 0) ? Complex(m, 0.0) : Complex(0.0, 0.0);
            CHECK(std::abs(sum - want) < 1e-12);
        }
        // negative exponents reduce mod m
        CHECK(std::abs(w.power(-1) - w.power(m - 1)) == 0.0);
    }
    CHECK_THROWS_AS(RootOfUnityTable(1), std::invalid_argument);
}

TEST_CASE("apply_omega rotates coefficients") {
    const RootOfUnityTable w2(2);
    const TruncatedSeries e = exp_series(6);

    SECTION("m=2, s=1 sends exp to exp(-z)") {
        const TruncatedSeries g = apply_omega(e, w2, 1);
        double fact = 1.0;
        for (int j = 0; j <= 6; ++j) {
            if (j > 0) fact *= j;
            const double want = (j % 2 == 0 ? 1.0 : -1.0) / fact;
            CHECK(std::abs(g.coeff(j) - Complex(want, 0.0)) < 1e-15);
        }
    }
    SECTION("s=0 is the identity") {
        const TruncatedSeries g = apply_omega(e, w2, 0);
        for (int j = 0; j <= 6; ++j) CHECK(g.coeff(j) == e.coeff(j));
    }
    SECTION("m=3, s=1 on the geometric series gives coefficients w^j") {
        const RootOfUnityTable w3(3);
        const TruncatedSeries g = apply_omega(geometric_series(8), w3, 1);
        for (int j = 0; j <= 8; ++j) CHECK(std::abs(g.coeff(j) - w3.power(j)) < 1e-15);
    }
    SECTION("s out of range") {
        CHECK_THROWS_AS(apply_omega(e, w2, 2), std::invalid_argument);
        CHECK_THROWS_AS(apply_omega(e, w2, -1), std::invalid_argument);
    }
}

TEST_CASE("project_delta masks residue classes") {
    const RootOfUnityTable w3(3);

    SECTION("grades of exp") {
        const TruncatedSeries h1 = project_delta(exp_series(9), w3, 1);
        double fact = 1.0;
        for (int j = 0; j <= 9; ++j) {
            if (j > 0) fact *= j;
            const Complex want = (j % 3 == 1) ? Complex(1.0 / fact, 0.0) : Complex(0.0, 0.0);
            CHECK(h1.coeff(j) == want);  // masking is exact
        }
    }
    SECTION("zero in, zero out") {
        const TruncatedSeries z = project_delta(TruncatedSeries(5), w3, 2);
        for (int j = 0; j <= 5; ++j) CHECK(z.coeff(j) == Complex(0.0, 0.0));
    }
    SECTION("grades of the geometric series") {
        const TruncatedSeries g2 = project_delta(geometric_series(10), w3, 2);
        for (int j = 0; j <= 10; ++j)
            CHECK(g2.coeff(j) == (j % 3 == 2 ? Complex(1.0, 0.0) : Complex(0.0, 0.0)));
    }
}

TEST_CASE("projection family: orthogonality, completeness, eigenfunctions") {
    std::mt19937_64 gen(2024);
    for (const int m : {2, 3, 4, 5}) {
        const RootOfUnityTable w(m);
        const TruncatedSeries f = random_series(gen, 32);
        const double scale = std::max(1.0, f.max_abs_coeff());

        std::vector<TruncatedSeries> proj;
        for (int k = 0; k < m; ++k) proj.push_back(project_delta(f, w, k));

        // Delta_i Delta_j = delta_ij Delta_i, exactly (masking commutes)
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                const TruncatedSeries twice = project_delta(proj[i], w, j);
                for (int c = 0; c <= 32; ++c) {
                    const Complex want = (i == j) ? proj[i].coeff(c) : Complex(0.0, 0.0);
                    CHECK(twice.coeff(c) == want);
                }
            }

        // sum_k Delta_k = id, exactly
        TruncatedSeries sum(32);
        for (const auto& p : proj) sum += p;
        for (int c = 0; c <= 32; ++c) CHECK(sum.coeff(c) == f.coeff(c));

        // Omega Delta_k f = w^k Delta_k f
        for (int k = 0; k < m; ++k) {
            const TruncatedSeries rot = apply_omega(proj[k], w, 1);
            for (int c = 0; c <= 32; ++c)
                CHECK(std::abs(rot.coeff(c) - w.power(k) * proj[k].coeff(c)) < 1e-12 * scale);
        }

        // the averaging route agrees with masking to rounding
        for (int k = 0; k < m; ++k) {
            const TruncatedSeries avg = project_delta_omega_sum(f, w, k);
            for (int c = 0; c <= 32; ++c)
                CHECK(std::abs(avg.coeff(c) - proj[k].coeff(c)) < 1e-12 * scale);
        }
    }
}

TEST_CASE("hyperbolic series prefixes") {
    SECTION("m=2 grade 0 is the cosh prefix") {
        const TruncatedSeries c = hyperbolic_series(2, 0, 4);
        CHECK(c.coeff(0) == Complex(1.0, 0.0));
        CHECK(c.coeff(1) == Complex(0.0, 0.0));
        CHECK(std::abs(c.coeff(2) - Complex(0.5, 0.0)) < 1e-16);
        CHECK(c.coeff(3) == Complex(0.0, 0.0));
        CHECK(std::abs(c.coeff(4) - Complex(1.0 / 24.0, 0.0)) < 1e-16);
    }
    SECTION("m=3 grade 0") {
        const TruncatedSeries c = hyperbolic_series(3, 0, 6);
        CHECK(c.coeff(0) == Complex(1.0, 0.0));
        CHECK(std::abs(c.coeff(3) - Complex(1.0 / 6.0, 0.0)) < 1e-16);
        CHECK(std::abs(c.coeff(6) - Complex(1.0 / 720.0, 0.0)) < 1e-16);
        for (const int j : {1, 2, 4, 5}) CHECK(c.coeff(j) == Complex(0.0, 0.0));
    }
    SECTION("grades partition exp") {
        for (int m = 2; m <= 5; ++m) {
            TruncatedSeries sum(20);
            for (int k = 0; k < m; ++k) sum += hyperbolic_series(m, k, 20);
            const TruncatedSeries e = exp_series(20);
            for (int j = 0; j <= 20; ++j) CHECK(std::abs(sum.coeff(j) - e.coeff(j)) < 1e-16);
        }
    }
}

TEST_CASE("truncated series arithmetic") {
    SECTION("product is truncated at the smaller order") {
        const TruncatedSeries p = exp_series(5) * exp_series(8);
        CHECK(p.order() == 5);
        // exp * exp = exp(2z): coefficients 2^j / j!
        double fact = 1.0;
        for (int j = 0; j <= 5; ++j) {
            if (j > 0) fact *= j;
            CHECK(std::abs(p.coeff(j) - Complex(std::pow(2.0, j) / fact, 0.0)) < 1e-14);
        }
    }
    SECTION("order mismatch in addition throws") {
        CHECK_THROWS_AS(exp_series(4) + exp_series(5), std::invalid_argument);
    }
    SECTION("evaluation") {
        const double v = exp_series(24).evaluate(Complex(1.0, 0.0)).real();
        CHECK(std::abs(v - std::exp(1.0)) < 1e-14);
    }
}
