#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "schurlab/errors.hpp"
#include "schurlab/rational.hpp"

namespace schurlab {

using Exponent = std::vector<int>;

/// Sparse multivariate polynomial over Rational.
///
/// Terms are keyed by exponent vector and kept in descending lexicographic
/// order, which is also the rendering order. No stored coefficient is zero.
class MultiPoly {
public:
    using TermMap = std::map<Exponent, Rational, std::greater<>>;

    MultiPoly() = default;
    explicit MultiPoly(std::size_t num_vars) : num_vars_(num_vars) {}

    static MultiPoly constant(std::size_t num_vars, const Rational& c);
    /// The polynomial x_{index} (zero-based index).
    static MultiPoly variable(std::size_t num_vars, std::size_t index);
    static MultiPoly monomial(const Exponent& exponent, const Rational& c);

    std::size_t num_vars() const { return num_vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    int total_degree() const;

    /// Coefficient of a monomial (zero when absent).
    Rational coefficient(const Exponent& exponent) const;

    /// Adds c * x^exponent, dropping the term if it cancels.
    void add_term(const Exponent& exponent, const Rational& c);

    /// Swaps two variables; used to test symmetry.
    MultiPoly swap_variables(std::size_t i, std::size_t j) const;

    /// Canonical text such as "3/2*u1^2*v3 + u2"; variables default to u1..uN.
    std::string to_string() const;
    std::string to_string(std::span<const std::string> names) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator-(const MultiPoly& a);

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

private:
    void require_same_vars(const MultiPoly& o, const char* op) const;

    std::size_t num_vars_ = 0;
    TermMap terms_;
};

MultiPoly poly_add(const MultiPoly& p, const MultiPoly& q);
MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q);

/// Returns r with q * r == p. Throws InexactDivision when q does not divide p.
MultiPoly poly_divide_exact(const MultiPoly& p, const MultiPoly& q);

MultiPoly pow(const MultiPoly& base, unsigned exponent);

/// Substitutes values for the variables: sum of c * prod values[i]^e_i.
/// `like` fixes the carrier of the result (its zero and one).
template <class C>
C evaluate(const MultiPoly& p, std::span<const C> values, const C& like);

/// Names "u1..un, v1..vn" for the 2n-variable ring used by symbolic checks.
std::vector<std::string> uv_names(std::size_t n);

inline MultiPoly zero_like(const MultiPoly& p) { return MultiPoly(p.num_vars()); }
inline MultiPoly one_like(const MultiPoly& p) { return MultiPoly::constant(p.num_vars(), Rational(1)); }
inline MultiPoly scalar_like(const Rational& r, const MultiPoly& p) { return MultiPoly::constant(p.num_vars(), r); }
inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }
inline std::string to_string(const MultiPoly& p) { return p.to_string(); }

template <class C>
C evaluate(const MultiPoly& p, std::span<const C> values, const C& like) {
    if (values.size() != p.num_vars())
        throw DimensionMismatch("evaluate: expected " + std::to_string(p.num_vars()) + " values, got " +
                                std::to_string(values.size()));
    // Powers are shared across terms; exponents are small at desk scale.
    std::vector<std::vector<C>> powers(values.size());
    C result = zero_like(like);
    for (const auto& [exponent, coeff] : p.terms()) {
        C term = scalar_like(coeff, like);
        for (std::size_t i = 0; i < exponent.size(); ++i) {
            const int e = exponent[i];
            if (e == 0) continue;
            auto& table = powers[i];
            if (table.empty()) table.push_back(one_like(like));
            while (static_cast<int>(table.size()) <= e) table.push_back(table.back() * values[i]);
            term = term * table[e];
        }
        result = result + term;
    }
    return result;
}

}  // namespace schurlab
