#include "schurlab/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace schurlab {

MultiPoly MultiPoly::constant(std::size_t num_vars, const Rational& c) {
    MultiPoly p(num_vars);
    p.add_term(Exponent(num_vars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t num_vars, std::size_t index) {
    if (index >= num_vars) throw InvalidInput("variable index out of range");
    Exponent e(num_vars, 0);
    e[index] = 1;
    return monomial(e, Rational(1));
}

MultiPoly MultiPoly::monomial(const Exponent& exponent, const Rational& c) {
    MultiPoly p(exponent.size());
    p.add_term(exponent, c);
    return p;
}

int MultiPoly::total_degree() const {
    int best = -1;
    for (const auto& [e, c] : terms_) best = std::max(best, std::accumulate(e.begin(), e.end(), 0));
    return best;
}

Rational MultiPoly::coefficient(const Exponent& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponent& exponent, const Rational& c) {
    if (exponent.size() != num_vars_)
        throw DimensionMismatch("exponent vector of length " + std::to_string(exponent.size()) +
                                " in a " + std::to_string(num_vars_) + "-variable polynomial");
    for (int e : exponent)
        if (e < 0) throw InvalidInput("negative exponent");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::swap_variables(std::size_t i, std::size_t j) const {
    if (i >= num_vars_ || j >= num_vars_) throw InvalidInput("variable index out of range");
    MultiPoly out(num_vars_);
    for (const auto& [key, c] : terms_) {
        Exponent e = key;
        std::swap(e[i], e[j]);
        out.terms_.emplace(std::move(e), c);
    }
    return out;
}

void MultiPoly::require_same_vars(const MultiPoly& o, const char* op) const {
    if (num_vars_ != o.num_vars_)
        throw DimensionMismatch(std::string(op) + ": variable-count mismatch (" + std::to_string(num_vars_) +
                                " vs " + std::to_string(o.num_vars_) + ")");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    require_same_vars(o, "poly_add");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    require_same_vars(o, "poly_sub");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.require_same_vars(b, "poly_mul");
    MultiPoly out(a.num_vars_);
    Exponent e(a.num_vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

MultiPoly operator-(const MultiPoly& a) {
    MultiPoly out = a;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

std::string MultiPoly::to_string() const {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < num_vars_; ++i) names.push_back("u" + std::to_string(i + 1));
    return to_string(names);
}

std::string MultiPoly::to_string(std::span<const std::string> names) const {
    if (names.size() != num_vars_) throw DimensionMismatch("wrong number of variable names");
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c.sign() < 0;
        const Rational mag = negative ? -c : c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;

        bool wrote = false;
        const bool is_const = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        if (mag != Rational(1) || is_const) {
            os << mag.to_string();
            wrote = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (wrote) os << '*';
            os << names[i];
            if (e[i] > 1) os << '^' << e[i];
            wrote = true;
        }
    }
    return os.str();
}

MultiPoly poly_add(const MultiPoly& p, const MultiPoly& q) { return p + q; }
MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q) { return p * q; }

MultiPoly poly_divide_exact(const MultiPoly& p, const MultiPoly& q) {
    if (p.num_vars() != q.num_vars()) throw DimensionMismatch("poly_divide_exact: variable-count mismatch");
    if (q.is_zero()) throw InvalidInput("poly_divide_exact: division by the zero polynomial");

    // Division by the lex-leading term; exact iff every step's leading
    // monomial is divisible and the remainder reaches zero.
    const auto& [lead_e, lead_c] = *q.terms().begin();
    MultiPoly remainder = p;
    MultiPoly quotient(p.num_vars());
    Exponent shift(p.num_vars());
    while (!remainder.is_zero()) {
        const auto& [re, rc] = *remainder.terms().begin();
        for (std::size_t i = 0; i < shift.size(); ++i) {
            shift[i] = re[i] - lead_e[i];
            if (shift[i] < 0)
                throw InexactDivision("poly_divide_exact: " + q.to_string() + " does not divide " + p.to_string());
        }
        MultiPoly step = MultiPoly::monomial(shift, rc / lead_c);
        quotient += step;
        remainder -= step * q;
    }
    return quotient;
}

MultiPoly pow(const MultiPoly& base, unsigned exponent) {
    MultiPoly result = one_like(base);
    MultiPoly b = base;
    while (exponent > 0) {
        if (exponent & 1U) result = result * b;
        exponent >>= 1U;
        if (exponent > 0) b = b * b;
    }
    return result;
}

std::vector<std::string> uv_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("u" + std::to_string(i + 1));
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
    return names;
}

}  // namespace schurlab
