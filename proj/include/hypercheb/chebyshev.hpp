#ifndef HYPERCHEB_CHEBYSHEV_HPP
#define HYPERCHEB_CHEBYSHEV_HPP

#include <vector>

#include "hypercheb/common.hpp"
#include "hypercheb/hyperbolic.hpp"
#include "hypercheb/sparse_poly.hpp"

namespace hypercheb::cheb {

/*
 * Tchebysheff m-polynomial systems.  The scalar value attached to a
 * (generally complex) index nu is T_nu = h_0(nu * alpha) with x = h_0(alpha);
 * integer indices give the main stream, indices n + w^s (s > 0) the aside
 * streams.  Every stream satisfies one order-m linear recurrence whose
 * characteristic roots are exp(w^k alpha).
 */

// ---------------------------------------------------------------------------
// classical m = 2 polynomials
// ---------------------------------------------------------------------------

/// First-kind value T_n(x) by the three-term recurrence
/// T_{n+1} = 2x T_n - T_{n-1}, T_0 = 1, T_1 = x.  Negative n runs the same
/// recurrence backwards (no symmetry shortcut), so parity checks stay
/// meaningful.
inline double classical_T(long long n, double x) {
    double prev = 1.0, cur = x;  // T_0, T_1
    if (n == 0) return prev;
    if (n > 0) {
        for (long long i = 1; i < n; ++i) {
            const double next = 2.0 * x * cur - prev;
            prev = cur;
            cur = next;
        }
        return cur;
    }
    // walk down from (T_1, T_0)
    double above = cur, at = prev;  // T_1, T_0
    for (long long i = 0; i > n; --i) {
        const double below = 2.0 * x * at - above;
        above = at;
        at = below;
    }
    return at;
}

/// Second-kind value normalised so that U_0 = 0, U_1 = 1 (the sinh-quotient
/// convention: U_n(cosh a) = sinh(n a)/sinh(a)), same recurrence as T.
inline double classical_U(long long n, double x) {
    double prev = 0.0, cur = 1.0;  // U_0, U_1
    if (n == 0) return prev;
    if (n > 0) {
        for (long long i = 1; i < n; ++i) {
            const double next = 2.0 * x * cur - prev;
            prev = cur;
            cur = next;
        }
        return cur;
    }
    double above = cur, at = prev;
    for (long long i = 0; i > n; --i) {
        const double below = 2.0 * x * at - above;
        above = at;
        at = below;
    }
    return at;
}

struct ClassicalResiduals {
    double composition = 0.0;  // [T_n + s U_n]^r = T_{nr} + s U_{nr}, s = sqrt(x^2-1)
    double addition = 0.0;     // a(n+m) = a(n)a(m) + b(n)b(m)
    double subtraction = 0.0;  // a(n-m) = a(n)a(m) - b(n)b(m)
    double parity = 0.0;       // a(-n) = a(n), b(-n) = -b(n)
    double max() const { return std::max({composition, addition, subtraction, parity}); }
};

/// Residuals of the classical identity set in the a/b notation
/// a(n) = T_n(x), b(n) = sqrt(x^2-1) U_n(x); requires x >= 1 so the square
/// root stays real.
inline ClassicalResiduals classical_identities_check(int n, int m, double x) {
    if (x < 1.0)
        throw std::domain_error("classical_identities_check: requires x >= 1");
    const double s = std::sqrt(x * x - 1.0);
    const auto a = [&](long long j) { return classical_T(j, x); };
    const auto b = [&](long long j) { return s * classical_U(j, x); };
    ClassicalResiduals r;
    r.composition = scaled_diff(std::pow(a(n) + b(n), m),
                                a(static_cast<long long>(n) * m) + b(static_cast<long long>(n) * m));
    r.addition = scaled_diff(a(n + m), a(n) * a(m) + b(n) * b(m));
    r.subtraction = scaled_diff(a(n - m), a(n) * a(m) - b(n) * b(m));
    r.parity = std::max(scaled_diff(a(-n), a(n)), scaled_diff(b(-n), -b(n)));
    return r;
}

// ---------------------------------------------------------------------------
// stream values for general m
// ---------------------------------------------------------------------------

/// Index n + w^s into the stream family.
struct StreamIndex {
    long long n = 0;
    int s = 0;

    Complex nu(int m) const {
        const spectral::RootOfUnityTable w(m);
        return Complex(static_cast<double>(n), 0.0) + w.power(s);
    }
};

/// T_beta for arbitrary complex index: h_0(beta * alpha).
inline Complex stream_value(int m, Complex alpha, Complex nu) {
    return hyperbolic::eval_h(m, 0, nu * alpha);
}

inline Complex stream_eval(int m, Complex alpha, const StreamIndex& idx) {
    if (idx.s < 0 || idx.s >= m) throw std::invalid_argument("stream_eval: stream out of range");
    return stream_value(m, alpha, idx.nu(m));
}

/// Binet evaluation: the average of n-th powers of the characteristic roots
/// exp(w^k alpha).
inline Complex binet_eval(int m, Complex alpha, long long n) {
    if (m < 2) throw std::invalid_argument("binet_eval: order must be >= 2");
    if (n < 0) throw std::invalid_argument("binet_eval: n must be >= 0");
    const spectral::RootOfUnityTable w(m);
    Complex acc(0.0, 0.0);
    for (int k = 0; k < m; ++k) {
        const Complex arg = w.power(k) * alpha;
        if (arg.real() * static_cast<double>(n) > kExpArgLimit)
            throw std::range_error("binet_eval: root power out of double range");
        acc += pow_int(std::exp(arg), n);
    }
    return acc / static_cast<double>(m);
}

/// The main stream T_0, T_1, ... plus the m-1 aside streams T_{n + w^s},
/// advanced by recurrence.  x, x* and x** are the constrained variables of
/// the m = 3 system (for other m they are evaluated with that m's root of
/// unity and are informational).
struct StreamSequence {
    int order = 0;
    Complex alpha;
    Complex x, xstar, xstarstar;
    // streams[0][n] = T_n; streams[s][n] = T_{n + w^s} for s >= 1.
    std::vector<std::vector<Complex>> streams;
};

/// Advance all streams to n_max.  Seeds come from stream_value at small
/// indices; the main stream is seeded by (T_0, T_1) and filled to order m
/// through the defining cross-stream recurrence
///     T_{j+1} = m x T_j - sum_{s>=1} T_{j + w^s},
/// after which every stream runs on the common order-m recurrence whose
/// coefficients are the elementary symmetric functions of exp(w^k alpha).
inline StreamSequence recurrence_eval(int m, Complex alpha, int n_max) {
    if (m < 2) throw std::invalid_argument("recurrence_eval: order must be >= 2");
    if (n_max < 2) throw std::invalid_argument("recurrence_eval: n_max must be >= 2");
    const spectral::RootOfUnityTable w(m);

    StreamSequence seq;
    seq.order = m;
    seq.alpha = alpha;
    seq.x = hyperbolic::eval_h(m, 0, alpha);
    seq.xstar = hyperbolic::eval_h(m, 0, -alpha);
    seq.xstarstar = stream_value(m, alpha, Complex(2.0, 0.0) + w.power(1));
    seq.streams.assign(static_cast<size_t>(m), {});

    // Characteristic polynomial prod_k (z - exp(w^k alpha)) = sum_j c_j z^j.
    std::vector<Complex> c = {Complex(1.0, 0.0)};
    for (int k = 0; k < m; ++k) {
        const Complex root = std::exp(w.power(k) * alpha);
        std::vector<Complex> next(c.size() + 1, Complex(0.0, 0.0));
        for (size_t j = 0; j < c.size(); ++j) {
            next[j + 1] += c[j];
            next[j] -= root * c[j];
        }
        c = std::move(next);
    }

    const size_t len = static_cast<size_t>(n_max) + 1;
    // aside seeds straight from stream values
    for (int s = 1; s < m; ++s) {
        auto& st = seq.streams[static_cast<size_t>(s)];
        st.reserve(len);
        for (int j = 0; j < m; ++j)
            st.push_back(stream_value(m, alpha, Complex(j, 0.0) + w.power(s)));
    }
    // main seeds: T_0 = 1, T_1 = x, then the cross-stream step
    auto& main = seq.streams[0];
    main.reserve(len);
    main.push_back(Complex(1.0, 0.0));
    main.push_back(seq.x);
    for (int j = 1; j + 1 < m; ++j) {
        Complex t = static_cast<double>(m) * seq.x * main[static_cast<size_t>(j)];
        for (int s = 1; s < m; ++s) t -= seq.streams[static_cast<size_t>(s)][static_cast<size_t>(j)];
        main.push_back(t);
    }

    for (int s = 0; s < m; ++s) {
        auto& st = seq.streams[static_cast<size_t>(s)];
        while (st.size() < len) {
            const size_t n = st.size();
            Complex next(0.0, 0.0);
            for (int j = 0; j < m; ++j)
                next -= c[static_cast<size_t>(j)] * st[n - static_cast<size_t>(m) + static_cast<size_t>(j)];
            st.push_back(next);  // c_m = 1
        }
        st.resize(len);
    }
    return seq;
}

// ---------------------------------------------------------------------------
// the mod-3 selector and the exact monomial expansions
// ---------------------------------------------------------------------------

/// delta(i - k mod 3): 1 iff i = k (mod 3).
inline int delta_selector(long long i, long long k) {
    if (i < 0 || k < 0) throw std::invalid_argument("delta_selector: indices must be >= 0");
    return mod_floor(i - k, 3) == 0 ? 1 : 0;
}

/// The same selector through the root-of-unity average
/// (1/3)(w^0 + w^{k+2i} + w^{i+2k}); both routes must agree.
inline int delta_selector_omega(long long i, long long k) {
    if (i < 0 || k < 0) throw std::invalid_argument("delta_selector_omega: indices must be >= 0");
    const spectral::RootOfUnityTable w(3);
    const Complex v = (Complex(1.0, 0.0) + w.power(k + 2 * i) + w.power(i + 2 * k)) / 3.0;
    const double rounded = std::round(v.real());
    if (std::abs(v - Complex(rounded, 0.0)) > 1e-9 || (rounded != 0.0 && rounded != 1.0))
        throw std::logic_error("delta_selector_omega: sum did not collapse to 0/1");
    return static_cast<int>(rounded);
}

/// Z_3 grade reconstructed by the expansion of each kind: the monomial
/// x^{n-k-i} y^i z^k carries weight i + 2k mod 3, and the kind's selector
/// pins i - k mod 3, so kind 0 collects grade 0, kind 1 grade 2 and kind 2
/// grade 1.  The mapping is locked in by an exhaustive oracle in the tests.
inline int expansion_grade(int kind) {
    switch (kind) {
        case 0: return 0;
        case 1: return 2;
        case 2: return 1;
        default: throw std::invalid_argument("expansion_grade: kind must be 0, 1 or 2");
    }
}

/// Exact trinomial expansion of the m = 3 polynomial of the given kind:
///   sum_k sum_i C(n,k) C(n-k,i) [selector] x^{n-k-i} y^i z^k
/// with selector delta(i-k), delta(i+1-k), delta(i-(k+1)) for kinds 0, 1, 2.
inline SparsePoly expand_poly(int kind, int n) {
    if (kind < 0 || kind > 2) throw std::invalid_argument("expand_poly: kind must be 0, 1 or 2");
    if (n < 0) throw std::invalid_argument("expand_poly: n must be >= 0");
    // i - k = target (mod 3) per kind
    const int target = (kind == 0) ? 0 : (kind == 1 ? 2 : 1);
    SparsePoly p(std::vector<std::string>{"x", "y", "z"});
    for (int k = 0; k <= n; ++k) {
        const BigInt cnk = binomial(n, k);
        for (int i = 0; i <= n - k; ++i) {
            if (mod_floor(static_cast<long long>(i) - k, 3) != target) continue;
            p.add_term({n - k - i, i, k}, cnk * binomial(n - k, i));
        }
    }
    return p;
}

/// The m = 2 counterpart: sum_k C(n,2k) x^{n-2k} y^{2k}, which evaluates to
/// cosh(n a) at (cosh a, sinh a).
inline SparsePoly expand_poly_m2(int n) {
    if (n < 0) throw std::invalid_argument("expand_poly_m2: n must be >= 0");
    SparsePoly p(std::vector<std::string>{"x", "y"});
    for (int k = 0; 2 * k <= n; ++k) p.add_term({n - 2 * k, 2 * k}, binomial(n, 2 * k));
    return p;
}

/// Residual of the expansion evaluated on a hyperbolic point against the
/// grade component it reconstructs: expand_poly(kind, n) at
/// (h_0, h_1, h_2)(alpha) versus h_g(n alpha), g = expansion_grade(kind).
inline double eval_expansion_on_surface(int kind, int n, Complex alpha) {
    const SparsePoly p = expand_poly(kind, n);
    const hyperbolic::HyperbolicPoint pt = hyperbolic::eval_point(3, alpha);
    const Complex value = p.eval(pt.h);
    const Complex target =
        hyperbolic::eval_h(3, expansion_grade(kind), static_cast<double>(n) * alpha);
    return scaled_diff(value, target);
}

}  // namespace hypercheb::cheb

#endif  // HYPERCHEB_CHEBYSHEV_HPP
