#ifndef HYPERCHEB_SPARSE_POLY_HPP
#define HYPERCHEB_SPARSE_POLY_HPP

#include <map>
#include <numeric>
#include <span>
#include <sstream>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hypercheb/common.hpp"

namespace hypercheb {

using BigInt = boost::multiprecision::cpp_int;

/// Exact multivariate polynomial: monomial exponent vector -> big-integer
/// coefficient.  Ring operations are exact; zero coefficients are never
/// stored.  Shared by the symbolic circulant determinants, the monomial
/// expansions and the generating-function machinery.
class SparsePoly {
public:
    using ExpVec = std::vector<int>;
    using TermMap = std::map<ExpVec, BigInt>;

    explicit SparsePoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static SparsePoly constant(std::vector<std::string> vars, BigInt c) {
        SparsePoly p(std::move(vars));
        if (c != 0) p.terms_[ExpVec(p.arity(), 0)] = std::move(c);
        return p;
    }

    static SparsePoly variable(std::vector<std::string> vars, size_t index) {
        SparsePoly p(std::move(vars));
        if (index >= p.arity()) throw std::invalid_argument("SparsePoly: variable index");
        ExpVec e(p.arity(), 0);
        e[index] = 1;
        p.terms_[std::move(e)] = 1;
        return p;
    }

    static SparsePoly monomial(std::vector<std::string> vars, ExpVec exps, BigInt c) {
        SparsePoly p(std::move(vars));
        if (exps.size() != p.arity()) throw std::invalid_argument("SparsePoly: exponent arity");
        if (c != 0) p.terms_[std::move(exps)] = std::move(c);
        return p;
    }

    size_t arity() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const ExpVec& exps, const BigInt& c) {
        if (exps.size() != arity()) throw std::invalid_argument("SparsePoly: exponent arity");
        auto it = terms_.find(exps);
        if (it == terms_.end()) {
            if (c != 0) terms_.emplace(exps, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    SparsePoly& operator+=(const SparsePoly& rhs) {
        require_same_ring(rhs);
        for (const auto& [e, c] : rhs.terms_) add_term(e, c);
        return *this;
    }
    SparsePoly& operator-=(const SparsePoly& rhs) {
        require_same_ring(rhs);
        for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
        return *this;
    }

    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }

    SparsePoly operator-() const {
        SparsePoly out(vars_);
        for (const auto& [e, c] : terms_) out.terms_[e] = -c;
        return out;
    }

    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        a.require_same_ring(b);
        SparsePoly out(a.vars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                ExpVec e(a.arity());
                for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }

    friend SparsePoly operator*(const BigInt& s, SparsePoly a) {
        if (s == 0) return SparsePoly(a.vars_);
        for (auto& [e, c] : a.terms_) c *= s;
        return a;
    }

    bool operator==(const SparsePoly& rhs) const {
        return vars_ == rhs.vars_ && terms_ == rhs.terms_;
    }

    /// Numeric evaluation; big coefficients are rounded to double.
    Complex eval(std::span<const Complex> point) const {
        if (point.size() != arity()) throw std::invalid_argument("SparsePoly: point arity");
        Complex acc(0.0, 0.0);
        for (const auto& [e, c] : terms_) {
            Complex t(c.convert_to<double>(), 0.0);
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) t *= pow_int(point[i], e[i]);
            acc += t;
        }
        return acc;
    }

    /// Send variable i to slot perm[i]; names stay attached to slots.
    SparsePoly relabel(const std::vector<int>& perm) const {
        if (perm.size() != arity()) throw std::invalid_argument("SparsePoly: perm arity");
        SparsePoly out(vars_);
        for (const auto& [e, c] : terms_) {
            ExpVec ne(arity(), 0);
            for (size_t i = 0; i < e.size(); ++i) ne[static_cast<size_t>(perm[i])] = e[i];
            out.add_term(ne, c);
        }
        return out;
    }

    /// Canonical text: total degree descending, then concentrated monomials
    /// before mixed ones, then lexicographic.  Signs are explicit; "*"
    /// separates factors and "^" marks powers >= 2.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::vector<const std::pair<const ExpVec, BigInt>*> order;
        order.reserve(terms_.size());
        for (const auto& t : terms_) order.push_back(&t);
        std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
            const int da = std::accumulate(a->first.begin(), a->first.end(), 0);
            const int db = std::accumulate(b->first.begin(), b->first.end(), 0);
            if (da != db) return da > db;
            ExpVec sa = a->first, sb = b->first;
            std::sort(sa.rbegin(), sa.rend());
            std::sort(sb.rbegin(), sb.rend());
            if (sa != sb) return sa > sb;
            return a->first > b->first;
        });
        std::ostringstream os;
        bool first = true;
        for (const auto* t : order) {
            BigInt c = t->second;
            const bool neg = c < 0;
            if (neg) c = -c;
            if (first) {
                if (neg) os << "-";
                first = false;
            } else {
                os << (neg ? " - " : " + ");
            }
            const bool has_vars =
                std::any_of(t->first.begin(), t->first.end(), [](int e) { return e != 0; });
            bool printed = false;
            if (c != 1 || !has_vars) {
                os << c;
                printed = true;
            }
            for (size_t i = 0; i < t->first.size(); ++i) {
                if (t->first[i] == 0) continue;
                if (printed) os << "*";
                os << vars_[i];
                if (t->first[i] >= 2) os << "^" << t->first[i];
                printed = true;
            }
        }
        return os.str();
    }

private:
    void require_same_ring(const SparsePoly& rhs) const {
        if (vars_ != rhs.vars_) throw std::invalid_argument("SparsePoly: variable mismatch");
    }

    std::vector<std::string> vars_;
    TermMap terms_;
};

/// Exact binomial coefficient.
inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc *= (n - k + i);
        acc /= i;
    }
    return acc;
}

}  // namespace hypercheb

#endif  // HYPERCHEB_SPARSE_POLY_HPP
