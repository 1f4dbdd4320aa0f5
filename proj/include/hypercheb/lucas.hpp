#ifndef HYPERCHEB_LUCAS_HPP
#define HYPERCHEB_LUCAS_HPP

#include <array>
#include <vector>

#include "hypercheb/common.hpp"
#include "hypercheb/hyperbolic.hpp"

namespace hypercheb::lucas {

/*
 * Symmetric and cyclic-symmetric functions of polynomial roots.
 *
 * Sign convention: the cubic with roots a, b, c is written x^3 = Px^2+Qx+R,
 * which forces P = a+b+c, Q = -(ab+ac+bc), R = abc; the quadratic with
 * roots a, b is z^2 = Pz - Q with P = a+b, Q = ab.  The convention is pinned
 * by requiring each root to satisfy its characteristic identity, and the
 * V-sequence seed is V_1 = a+b+c accordingly.
 */

enum class Which { V, U, W };

struct CubicRoots {
    Complex a, b, c;

    CubicRoots(Complex a_, Complex b_, Complex c_) : a(a_), b(b_), c(c_) {
        if (a == b && b == c)
            throw std::domain_error("CubicRoots: a = b = c is excluded");
    }

    Complex p() const { return a + b + c; }
    Complex q() const { return -(a * b + a * c + b * c); }
    Complex r() const { return a * b * c; }
};

inline std::array<Complex, 3> roots_to_pqr(const CubicRoots& roots) {
    return {roots.p(), roots.q(), roots.r()};
}

namespace detail {

inline Complex omega3(int k) {
    static const spectral::RootOfUnityTable w(3);
    return w.power(k);
}

inline void check_weighted_denominator(Complex den, const CubicRoots& roots, const char* who) {
    const double scale = std::max({1.0, std::abs(roots.a), std::abs(roots.b), std::abs(roots.c)});
    if (std::abs(den) <= 1e-14 * scale)
        throw std::domain_error(std::string(who) + ": omega-weighted root combination vanishes");
}

}  // namespace detail

/// Closed-form value from root powers:
///   V_n = a^n + b^n + c^n,
///   U_n = (a^n + w b^n + w^2 c^n) / (a + w b + w^2 c),
///   W_n = (a^n + w^2 b^n + w c^n) / (a + w^2 b + w c).
inline Complex vuw_direct(const CubicRoots& roots, Which which, long long n) {
    if (n < 0) throw std::invalid_argument("vuw_direct: n must be >= 0");
    const Complex an = pow_int(roots.a, n), bn = pow_int(roots.b, n), cn = pow_int(roots.c, n);
    switch (which) {
        case Which::V:
            return an + bn + cn;
        case Which::U: {
            const Complex w1 = detail::omega3(1), w2 = detail::omega3(2);
            const Complex den = roots.a + w1 * roots.b + w2 * roots.c;
            detail::check_weighted_denominator(den, roots, "vuw_direct(U)");
            return (an + w1 * bn + w2 * cn) / den;
        }
        default: {
            const Complex w1 = detail::omega3(1), w2 = detail::omega3(2);
            const Complex den = roots.a + w2 * roots.b + w1 * roots.c;
            detail::check_weighted_denominator(den, roots, "vuw_direct(W)");
            return (an + w2 * bn + w1 * cn) / den;
        }
    }
}

struct RootFunctionSequence {
    Which which = Which::V;
    std::vector<Complex> values;  // indexed by n = 0..n_max
};

/// The same sequences advanced by F_{n+3} = P F_{n+2} + Q F_{n+1} + R F_n
/// from the seeds (V: 3, a+b+c, a^2+b^2+c^2; U, W: 0, 1, closed-form F_2).
inline RootFunctionSequence vuw_recurrent(const CubicRoots& roots, Which which, int n_max) {
    if (n_max < 3) throw std::invalid_argument("vuw_recurrent: n_max must be >= 3");
    const Complex P = roots.p(), Q = roots.q(), R = roots.r();
    RootFunctionSequence seq{which, {}};
    seq.values.reserve(static_cast<size_t>(n_max) + 1);
    if (which == Which::V) {
        seq.values = {Complex(3.0, 0.0), P,
                      roots.a * roots.a + roots.b * roots.b + roots.c * roots.c};
    } else {
        seq.values = {Complex(0.0, 0.0), Complex(1.0, 0.0), vuw_direct(roots, which, 2)};
    }
    while (seq.values.size() <= static_cast<size_t>(n_max)) {
        const size_t n = seq.values.size();
        seq.values.push_back(P * seq.values[n - 1] + Q * seq.values[n - 2] + R * seq.values[n - 3]);
    }
    return seq;
}

// ---------------------------------------------------------------------------
// quadratic (m = 2) Lucas functions
// ---------------------------------------------------------------------------

struct QuadraticRoots {
    Complex a, b;

    QuadraticRoots(Complex a_, Complex b_) : a(a_), b(b_) {
        if (a == b) throw std::domain_error("QuadraticRoots: a = b is excluded");
    }

    Complex p() const { return a + b; }
    Complex q() const { return a * b; }
};

/// V_n = a^n + b^n, U_n = (a^n - b^n)/(a - b).
inline Complex vu_direct_m2(const QuadraticRoots& roots, Which which, long long n) {
    if (which == Which::W) throw std::invalid_argument("vu_direct_m2: no W function for m = 2");
    if (n < 0) throw std::invalid_argument("vu_direct_m2: n must be >= 0");
    const Complex an = pow_int(roots.a, n), bn = pow_int(roots.b, n);
    if (which == Which::V) return an + bn;
    return (an - bn) / (roots.a - roots.b);
}

/// Recurrence form F_{n+2} = P F_{n+1} - Q F_n (V: 2, a+b; U: 0, 1).
inline RootFunctionSequence vu_recurrent_m2(const QuadraticRoots& roots, Which which, int n_max) {
    if (which == Which::W) throw std::invalid_argument("vu_recurrent_m2: no W function for m = 2");
    if (n_max < 2) throw std::invalid_argument("vu_recurrent_m2: n_max must be >= 2");
    const Complex P = roots.p(), Q = roots.q();
    RootFunctionSequence seq{which, {}};
    if (which == Which::V)
        seq.values = {Complex(2.0, 0.0), P};
    else
        seq.values = {Complex(0.0, 0.0), Complex(1.0, 0.0)};
    while (seq.values.size() <= static_cast<size_t>(n_max)) {
        const size_t n = seq.values.size();
        seq.values.push_back(P * seq.values[n - 1] - Q * seq.values[n - 2]);
    }
    return seq;
}

// ---------------------------------------------------------------------------
// Lucas formulae and the hyperbolic identifications
// ---------------------------------------------------------------------------

struct LucasM2Residuals {
    double v_formula = 0.0;        // V_n = 2 Q^{n/2} cosh[(n/2) ln(a/b)]
    double u_formula = 0.0;        // U_n = 2 Q^{n/2}/sqrt(D) sinh[(n/2) ln(a/b)]
    double group_membership = 0.0; // rescaled matrix equals n-th power of the n=1 matrix
    double volume_one = 0.0;       // a(n)^2 - b(n)^2 = 1 after rescaling
    double max() const {
        return std::max({v_formula, u_formula, group_membership, volume_one});
    }
};

/// Classical Lucas formulae for positive real roots a != b.  The square
/// root of the discriminant D = P^2 - 4Q = (a-b)^2 is taken as a - b, the
/// branch consistent with U_n = (a^n - b^n)/(a - b) for either ordering.
inline LucasM2Residuals lucas_formulae_m2(double a, double b, int n) {
    if (a <= 0.0 || b <= 0.0)
        throw std::domain_error("lucas_formulae_m2: roots must be positive");
    if (a == b) throw std::domain_error("lucas_formulae_m2: roots must be distinct");
    const QuadraticRoots roots{Complex(a, 0.0), Complex(b, 0.0)};
    const double Q = a * b;
    const double alpha = 0.5 * std::log(a / b);
    const double dr = a - b;  // signed sqrt of (a-b)^2

    LucasM2Residuals res;
    const double qn2 = std::pow(Q, 0.5 * n);
    const Complex vn = vu_direct_m2(roots, Which::V, n);
    const Complex un = vu_direct_m2(roots, Which::U, n);
    res.v_formula = scaled_diff(vn, Complex(2.0 * qn2 * std::cosh(n * alpha), 0.0));
    res.u_formula = scaled_diff(un, Complex(2.0 * qn2 / dr * std::sinh(n * alpha), 0.0));

    // rescaled sequences a(n), b(n) and their 2x2 de Moivre matrices
    const auto an_of = [&](long long j) {
        return 0.5 * std::pow(Q, -0.5 * j) * vu_direct_m2(roots, Which::V, j).real();
    };
    const auto bn_of = [&](long long j) {
        return 0.5 * dr * std::pow(Q, -0.5 * j) * vu_direct_m2(roots, Which::U, j).real();
    };
    const double a1 = an_of(1), b1 = bn_of(1);
    // power the n=1 matrix [[a1,b1],[b1,a1]]
    double pa = 1.0, pb = 0.0;
    for (int i = 0; i < n; ++i) {
        const double na = pa * a1 + pb * b1;
        const double nb = pa * b1 + pb * a1;
        pa = na;
        pb = nb;
    }
    res.group_membership =
        std::max(scaled_diff(an_of(n), pa), scaled_diff(bn_of(n), pb));
    res.volume_one = std::abs(an_of(n) * an_of(n) - bn_of(n) * bn_of(n) - 1.0);
    return res;
}

/// Identification report for the cubic case with positive real roots.
///
/// alpha = (1/3)[ln a + w ln b + w^2 ln c] is invariant under uniform
/// scaling of the roots, and A = exp(alpha) satisfies A^3 = a b^w c^{w^2}
/// under principal logarithms.  With the triple (A, A^w, A^{w^2}) taken as
/// (exp(w^k alpha)) the resolved identification chain is
///
///     h_0(n alpha) = V_n(A, A^w, A^{w^2}) / 3
///     h_2(n alpha) = U_n(A, A^w, A^{w^2}) h_2(alpha)
///     h_1(n alpha) = W_n(A, A^w, A^{w^2}) h_1(alpha)
///
/// which holds for every positive triple; the commonly printed variant
/// carries a prefactor (abc)^{-n/3} that equals 1 exactly on the volume-one
/// slice abc = 1 (the slice the alpha-chain projects to), pairs U with an
/// h_1 factor and W with an h_2 factor, and divides the U/W lines by 3.
/// Those printed residuals are evaluated on the volume-normalised roots and
/// reported alongside, so the swap is surfaced rather than silently fixed.
struct IdentifyM3Report {
    Complex alpha;
    Complex cap_a;                     // A = exp(alpha)
    double prefactor_deviation = 0.0;  // |(abc)^{-n/3} - 1|
    double resid_v = 0.0;              // resolved V line
    double resid_u_resolved = 0.0;
    double resid_w_resolved = 0.0;
    double resid_u_printed = 0.0;      // pairing as printed (h_1 factor, /3)
    double resid_w_printed = 0.0;
    double max_resolved() const {
        return std::max({resid_v, resid_u_resolved, resid_w_resolved});
    }
};

inline IdentifyM3Report identify_m3(double a, double b, double c, int n) {
    if (a <= 0.0 || b <= 0.0 || c <= 0.0)
        throw std::domain_error("identify_m3: roots must be positive");
    if (a == b && b == c) throw std::domain_error("identify_m3: a = b = c is excluded");
    if (n < 0) throw std::invalid_argument("identify_m3: n must be >= 0");
    const Complex w1 = detail::omega3(1), w2 = detail::omega3(2);

    IdentifyM3Report rep;
    rep.alpha = (std::log(a) + w1 * std::log(b) + w2 * std::log(c)) / 3.0;
    rep.cap_a = std::exp(rep.alpha);
    const double R = a * b * c;
    rep.prefactor_deviation = std::abs(std::pow(R, -n / 3.0) - 1.0);

    const CubicRoots triple{std::exp(rep.alpha), std::exp(w1 * rep.alpha),
                            std::exp(w2 * rep.alpha)};
    const Complex h0n = hyperbolic::eval_h(3, 0, static_cast<double>(n) * rep.alpha);
    const Complex h1n = hyperbolic::eval_h(3, 1, static_cast<double>(n) * rep.alpha);
    const Complex h2n = hyperbolic::eval_h(3, 2, static_cast<double>(n) * rep.alpha);
    const Complex h1a = hyperbolic::eval_h(3, 1, rep.alpha);
    const Complex h2a = hyperbolic::eval_h(3, 2, rep.alpha);

    const Complex vn = vuw_direct(triple, Which::V, n);
    const Complex un = vuw_direct(triple, Which::U, n);
    const Complex wn = vuw_direct(triple, Which::W, n);

    rep.resid_v = scaled_diff(h0n, vn / 3.0);
    rep.resid_u_resolved = scaled_diff(h2n, un * h2a);
    rep.resid_w_resolved = scaled_diff(h1n, wn * h1a);
    rep.resid_u_printed = scaled_diff(h2n, un * h1a / 3.0);
    rep.resid_w_printed = scaled_diff(h1n, wn * h2a / 3.0);
    return rep;
}

/// m = 2 variant of the identification: alpha = (1/2)[ln a - ln b],
/// A = exp(alpha), so (A, A^w) = (A, 1/A) and
///     cosh(n alpha) = V_n(A, 1/A) / 2,
///     sinh(n alpha) = U_n(A, 1/A) sinh(alpha).
/// The printed variant divides the U line by 2; its residual is reported.
struct IdentifyM2Report {
    Complex alpha;
    double resid_a = 0.0;
    double resid_b_resolved = 0.0;
    double resid_b_printed = 0.0;
};

inline IdentifyM2Report identify_m2(double a, double b, int n) {
    if (a <= 0.0 || b <= 0.0)
        throw std::domain_error("identify_m2: roots must be positive");
    if (a == b) throw std::domain_error("identify_m2: roots must be distinct");
    if (n < 0) throw std::invalid_argument("identify_m2: n must be >= 0");
    IdentifyM2Report rep;
    rep.alpha = Complex(0.5 * (std::log(a) - std::log(b)), 0.0);
    const Complex A = std::exp(rep.alpha);
    const QuadraticRoots pair{A, Complex(1.0, 0.0) / A};
    const Complex vn = vu_direct_m2(pair, Which::V, n);
    const Complex un = vu_direct_m2(pair, Which::U, n);
    const double na = n * rep.alpha.real();
    rep.resid_a = scaled_diff(vn / 2.0, Complex(std::cosh(na), 0.0));
    rep.resid_b_resolved = scaled_diff(un * std::sinh(rep.alpha.real()), Complex(std::sinh(na), 0.0));
    rep.resid_b_printed =
        scaled_diff(un * std::sinh(rep.alpha.real()) / 2.0, Complex(std::sinh(na), 0.0));
    return rep;
}

/// For m = 3 the root functions of the A-triple differ from those of the
/// original roots (they are cyclic-symmetric, not symmetric, in a, b, c);
/// this returns both values and their gap for V, U, W at the given n.
struct InequalityWitness {
    Complex of_a_triple;
    Complex of_roots;
    double gap = 0.0;
};

inline std::array<InequalityWitness, 3> lucas_inequality_witnesses(double a, double b, double c,
                                                                   int n) {
    const IdentifyM3Report rep = identify_m3(a, b, c, 0);
    const Complex w1 = detail::omega3(1), w2 = detail::omega3(2);
    const CubicRoots triple{std::exp(rep.alpha), std::exp(w1 * rep.alpha),
                            std::exp(w2 * rep.alpha)};
    const CubicRoots orig{Complex(a, 0.0), Complex(b, 0.0), Complex(c, 0.0)};
    std::array<InequalityWitness, 3> out;
    const std::array<Which, 3> which = {Which::V, Which::U, Which::W};
    for (size_t i = 0; i < 3; ++i) {
        out[i].of_a_triple = vuw_direct(triple, which[i], n);
        out[i].of_roots = vuw_direct(orig, which[i], n);
        out[i].gap = std::abs(out[i].of_a_triple - out[i].of_roots);
    }
    return out;
}

}  // namespace hypercheb::lucas

#endif  // HYPERCHEB_LUCAS_HPP
