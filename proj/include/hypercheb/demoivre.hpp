#ifndef HYPERCHEB_DEMOIVRE_HPP
#define HYPERCHEB_DEMOIVRE_HPP

#include <numeric>
#include <span>
#include <vector>

#include "hypercheb/common.hpp"
#include "hypercheb/hyperbolic.hpp"
#include "hypercheb/sparse_poly.hpp"

namespace hypercheb::demoivre {

/// Circulant matrix stored by its first row; entry (i,j) = row[(j-i) mod m].
/// Products of circulants are circulant, so the whole group law lives on
/// first rows (cyclic convolution).
struct CirculantMatrix {
    int order = 0;
    std::vector<Complex> row;

    Complex entry(int i, int j) const {
        return row[static_cast<size_t>(mod_floor(static_cast<long long>(j) - i, order))];
    }
};

inline CirculantMatrix circulant_identity(int m) {
    CirculantMatrix c{m, std::vector<Complex>(static_cast<size_t>(m), Complex(0.0, 0.0))};
    c.row[0] = Complex(1.0, 0.0);
    return c;
}

/// First-row cyclic convolution == full matrix product restricted to row 0.
inline CirculantMatrix circulant_mul(const CirculantMatrix& a, const CirculantMatrix& b) {
    if (a.order != b.order) throw std::invalid_argument("circulant_mul: dimension mismatch");
    const int m = a.order;
    CirculantMatrix c{m, std::vector<Complex>(static_cast<size_t>(m), Complex(0.0, 0.0))};
    for (int k = 0; k < m; ++k) {
        Complex acc(0.0, 0.0);
        for (int i = 0; i < m; ++i)
            acc += a.row[static_cast<size_t>(i)] * b.row[static_cast<size_t>(mod_floor(k - i, m))];
        c.row[static_cast<size_t>(k)] = acc;
    }
    return c;
}

/// H(n*alpha): the n-th element of the one-parameter circulant group with
/// first row (h_0, ..., h_{m-1}) at n*alpha.  Negative n is the group
/// inverse, realised as the matrix of -|n|*alpha.
inline CirculantMatrix demoivre_matrix(int m, Complex alpha, long long n) {
    const hyperbolic::HyperbolicPoint p =
        hyperbolic::eval_point(m, static_cast<double>(n) * alpha);
    return CirculantMatrix{m, p.h};
}

/// Eigenvalues lambda_k = sum_j w^{kj} row[j].
inline std::vector<Complex> circulant_eigenvalues(const CirculantMatrix& a) {
    const spectral::RootOfUnityTable w(a.order);
    std::vector<Complex> lam(static_cast<size_t>(a.order));
    for (int k = 0; k < a.order; ++k) {
        Complex acc(0.0, 0.0);
        for (int j = 0; j < a.order; ++j)
            acc += w.power(static_cast<long long>(k) * j) * a.row[static_cast<size_t>(j)];
        lam[static_cast<size_t>(k)] = acc;
    }
    return lam;
}

inline Complex circulant_det(const CirculantMatrix& a) {
    Complex acc(1.0, 0.0);
    for (const Complex& l : circulant_eigenvalues(a)) acc *= l;
    return acc;
}

/// Variable names used for the symbolic invariants: the traditional
/// (x, y), (x, y, z), (x, y, z, t) up to m = 4, x0..x_{m-1} beyond.
inline std::vector<std::string> surface_var_names(int m) {
    if (m <= 4) {
        const std::vector<std::string> named = {"x", "y", "z", "t"};
        return {named.begin(), named.begin() + m};
    }
    std::vector<std::string> v;
    for (int i = 0; i < m; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

/// Exact determinant of the symbolic circulant with first row
/// (x_0, ..., x_{m-1}), expanded over the integers by the Leibniz sum.
/// Each permutation contributes sign * prod_i x_{(perm(i)-i) mod m}, a
/// single monomial, so the expansion stays sparse.
inline SparsePoly hyperbolon_invariant(int m) {
    if (m < 2 || m > 6)
        throw std::invalid_argument("hyperbolon_invariant: supported orders are 2..6");
    const std::vector<std::string> vars = surface_var_names(m);
    SparsePoly det(vars);
    std::vector<int> perm(static_cast<size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        // parity by counting inversions
        int inv = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inv;
        SparsePoly::ExpVec e(static_cast<size_t>(m), 0);
        for (int i = 0; i < m; ++i)
            ++e[static_cast<size_t>(mod_floor(perm[static_cast<size_t>(i)] - i, m))];
        det.add_term(e, (inv % 2 == 0) ? BigInt(1) : BigInt(-1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

/// Numeric value of the invariant at a point (exact expansion, then
/// substitution).
inline Complex hyperbolon_value(int m, std::span<const Complex> point) {
    return hyperbolon_invariant(m).eval(point);
}

/// True iff the point lies on the volume-one surface: |invariant - 1| <= tol.
inline bool on_surface(int m, std::span<const Complex> point, double tol) {
    if (static_cast<int>(point.size()) != m)
        throw std::invalid_argument("on_surface: point arity mismatch");
    return std::abs(hyperbolon_value(m, point) - Complex(1.0, 0.0)) <= tol;
}

}  // namespace hypercheb::demoivre

#endif  // HYPERCHEB_DEMOIVRE_HPP
