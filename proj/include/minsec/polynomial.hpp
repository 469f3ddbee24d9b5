#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "minsec/rational.hpp"
#include "minsec/variable.hpp"

namespace minsec {

// A monomial is a sparse exponent vector: (variable, exponent) pairs sorted
// by the variable order, no zero exponents.
using Monomial = std::vector<std::pair<Variable, int>>;

inline Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) {
            r.push_back(a[i++]);
        } else if (b[j].first < a[i].first) {
            r.push_back(b[j++]);
        } else {
            int e = a[i].second + b[j].second;
            if (e != 0) r.emplace_back(a[i].first, e);
            ++i, ++j;
        }
    }
    for (; i < a.size(); ++i) r.push_back(a[i]);
    for (; j < b.size(); ++j) r.push_back(b[j]);
    return r;
}

inline int monomial_degree(const Monomial& m) {
    int d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

// Lexicographic order with earlier variables most significant.
inline bool monomial_lex_less(const Monomial& a, const Monomial& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) return false;  // a has the earlier variable
        if (b[j].first < a[i].first) return true;
        if (a[i].second != b[j].second) return a[i].second < b[j].second;
        ++i, ++j;
    }
    return i == a.size() && j < b.size();
}

struct MonomialLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return monomial_lex_less(b, a); }
};

// Multivariate polynomial with exact rational coefficients. Terms are kept in
// descending lexicographic order, so iteration, printing and serialization are
// deterministic under the declared variable order. Values are immutable in
// spirit: all operations return new polynomials.
class SparsePolynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialLexGreater>;

    SparsePolynomial() = default;

    static SparsePolynomial constant(const Rational& c) {
        SparsePolynomial p;
        if (c != 0) p.terms_[Monomial{}] = c;
        return p;
    }
    static SparsePolynomial constant(long long c) { return constant(Rational(c)); }

    static SparsePolynomial variable(const Variable& v, int exp = 1) {
        if (exp < 0) throw std::invalid_argument("negative exponent");
        SparsePolynomial p;
        if (exp == 0)
            p.terms_[Monomial{}] = 1;
        else
            p.terms_[Monomial{{v, exp}}] = 1;
        return p;
    }

    static SparsePolynomial term(const Rational& c, const Monomial& m) {
        SparsePolynomial p;
        if (c != 0) p.terms_[m] = c;
        return p;
    }

    // Bulk construction from unsorted terms with distinct monomials: sorts
    // once and fills the map with hinted insertion.
    static SparsePolynomial from_terms(std::vector<std::pair<Monomial, Rational>> terms) {
        std::sort(terms.begin(), terms.end(),
                  [](const auto& a, const auto& b) { return MonomialLexGreater{}(a.first, b.first); });
        SparsePolynomial p;
        for (auto& [m, c] : terms) {
            if (c == 0) continue;
            p.terms_.emplace_hint(p.terms_.end(), std::move(m), std::move(c));
        }
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }

    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw std::invalid_argument("polynomial is not constant");
        return terms_.begin()->second;
    }

    int total_degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
        return d;  // -1 for the zero polynomial
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = monomial_degree(terms_.begin()->first);
        for (const auto& [m, c] : terms_)
            if (monomial_degree(m) != d) return false;
        return true;
    }

    Rational coefficient_of(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    std::vector<Variable> variables() const {
        std::vector<Variable> vs;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m) vs.push_back(v);
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        return vs;
    }

    int degree_in(const Variable& v) const {
        int d = 0;
        for (const auto& [m, c] : terms_)
            for (const auto& [mv, e] : m)
                if (mv == v) d = std::max(d, e);
        return d;
    }

    SparsePolynomial& operator+=(const SparsePolynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    SparsePolynomial& operator-=(const SparsePolynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
    friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }

    SparsePolynomial operator-() const {
        SparsePolynomial r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
        SparsePolynomial r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(monomial_mul(ma, mb), ca * cb);
        return r;
    }

    SparsePolynomial& operator*=(const SparsePolynomial& o) { return *this = *this * o; }

    friend SparsePolynomial operator*(const Rational& c, const SparsePolynomial& p) {
        if (c == 0) return SparsePolynomial();
        SparsePolynomial r = p;
        for (auto& [m, cc] : r.terms_) cc *= c;
        return r;
    }
    friend SparsePolynomial operator*(const SparsePolynomial& p, const Rational& c) { return c * p; }

    SparsePolynomial pow(int e) const {
        if (e < 0) throw std::invalid_argument("negative exponent");
        SparsePolynomial r = constant(1), b = *this;
        while (e > 0) {
            if (e & 1) r *= b;
            if (e >>= 1) b *= b;
        }
        return r;
    }

    friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
        return a.terms_ == b.terms_;
    }

    // Exact composition: bound variables are replaced, free ones kept.
    SparsePolynomial substitute(const std::map<Variable, SparsePolynomial>& bindings) const {
        std::map<Variable, std::vector<SparsePolynomial>> powers;
        SparsePolynomial result;
        for (const auto& [m, c] : terms_) {
            SparsePolynomial factor = constant(c);
            Monomial free_part;
            for (const auto& [v, e] : m) {
                auto it = bindings.find(v);
                if (it == bindings.end()) {
                    free_part.emplace_back(v, e);
                } else {
                    auto& cache = powers[v];
                    if (cache.empty()) cache.push_back(constant(1));
                    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * it->second);
                    factor *= cache[static_cast<std::size_t>(e)];
                }
            }
            if (!free_part.empty()) factor *= term(Rational(1), free_part);
            result += factor;
        }
        return result;
    }

    // Exact evaluation; every variable must be bound.
    Rational eval(const std::map<Variable, Rational>& point) const {
        Rational result(0);
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (const auto& [v, e] : m) {
                auto it = point.find(v);
                if (it == point.end())
                    throw std::invalid_argument("unbound variable in evaluation: " + v.name());
                t *= pow_rational(it->second, e);
            }
            result += t;
        }
        return result;
    }

    // Coefficient of a monomial in a subset of the variables: collects the
    // terms whose exponents on exactly those variables match, as a polynomial
    // in the remaining variables.
    SparsePolynomial coefficient_of_partial(const Monomial& part) const {
        SparsePolynomial r;
        for (const auto& [m, c] : terms_) {
            Monomial rest;
            std::size_t matched = 0;
            bool ok = true;
            for (const auto& [v, e] : m) {
                auto it = std::lower_bound(part.begin(), part.end(), v,
                                           [](const auto& p, const Variable& vv) { return p.first < vv; });
                if (it != part.end() && it->first == v) {
                    if (it->second != e) {
                        ok = false;
                        break;
                    }
                    ++matched;
                } else {
                    rest.emplace_back(v, e);
                }
            }
            if (ok && matched == part.size()) r.add_term(rest, c);
        }
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Rational a = c;
            if (first) {
                if (a < 0) {
                    s += "-";
                    a = -a;
                }
            } else {
                s += a < 0 ? " - " : " + ";
                if (a < 0) a = -a;
            }
            first = false;
            std::string mono;
            for (const auto& [v, e] : m) {
                if (!mono.empty()) mono += "*";
                mono += v.name();
                if (e != 1) mono += "^" + std::to_string(e);
            }
            if (mono.empty()) {
                s += minsec::to_string(a);
            } else {
                if (a != 1) s += minsec::to_string(a) + "*";
                s += mono;
            }
        }
        return s;
    }

private:
    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TermMap terms_;
};

inline SparsePolynomial operator-(const Rational& c, const SparsePolynomial& p) {
    return SparsePolynomial::constant(c) - p;
}
inline SparsePolynomial operator+(const Rational& c, const SparsePolynomial& p) {
    return SparsePolynomial::constant(c) + p;
}

}  // namespace minsec
