#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "schurlab/errors.hpp"
#include "schurlab/multipoly.hpp"
#include "schurlab/rational.hpp"

namespace schurlab {

/// Power series in one variable t, truncated at an inclusive cutoff degree.
///
/// Coefficients below the cutoff are exact. Any operation that mixes two
/// cutoffs keeps the smaller one, so a reported coefficient is never one
/// that a longer computation could change.
template <class C>
class TruncSeries {
public:
    using coefficient_type = C;

    /// Zero series; `like` supplies the carrier of the coefficients.
    TruncSeries(int cutoff, const C& like) : coeffs_(checked_size(cutoff), zero_like(like)) {}

    /// Takes the first cutoff+1 coefficients, padding with zero.
    TruncSeries(int cutoff, std::vector<C> coeffs, const C& like) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(checked_size(cutoff), zero_like(like));
    }

    static TruncSeries constant(int cutoff, const C& value) {
        TruncSeries s(cutoff, value);
        s.coeffs_[0] = value;
        return s;
    }

    /// The series t.
    static TruncSeries variable(int cutoff, const C& like) {
        TruncSeries s(cutoff, like);
        if (cutoff >= 1) s.coeffs_[1] = one_like(like);
        return s;
    }

    int cutoff() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<C>& coeffs() const { return coeffs_; }
    const C& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    const C& like() const { return coeffs_[0]; }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const C& c) { return schurlab::is_zero(c); });
    }

    /// Lowest degree with a nonzero coefficient, or cutoff+1 if none.
    int valuation() const {
        for (int k = 0; k <= cutoff(); ++k)
            if (!schurlab::is_zero(coeffs_[static_cast<std::size_t>(k)])) return k;
        return cutoff() + 1;
    }

    TruncSeries truncate(int cutoff) const {
        if (cutoff > this->cutoff()) throw InvalidInput("truncate: cannot raise the cutoff");
        return TruncSeries(cutoff, std::vector<C>(coeffs_.begin(), coeffs_.begin() + cutoff + 1), like());
    }

    /// Formal derivative; the cutoff drops by one (the top coefficient of
    /// the derivative would need the next unknown input coefficient).
    TruncSeries derivative() const {
        if (cutoff() == 0) throw InvalidInput("derivative of a cutoff-0 series has no reliable coefficient");
        std::vector<C> out;
        out.reserve(coeffs_.size() - 1);
        for (int k = 1; k <= cutoff(); ++k) out.push_back(scalar_like(Rational(k), like()) * coeffs_[k]);
        return TruncSeries(cutoff() - 1, std::move(out), like());
    }

    TruncSeries& operator+=(const TruncSeries& o) {
        shrink_to(o.cutoff());
        for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] = coeffs_[k] + o.coeffs_[k];
        return *this;
    }
    TruncSeries& operator-=(const TruncSeries& o) {
        shrink_to(o.cutoff());
        for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] = coeffs_[k] - o.coeffs_[k];
        return *this;
    }

    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator-(const TruncSeries& a) {
        TruncSeries out = a;
        for (auto& c : out.coeffs_) c = zero_like(c) - c;
        return out;
    }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        const int d = std::min(a.cutoff(), b.cutoff());
        TruncSeries out(d, a.like());
        for (int i = 0; i <= d; ++i) {
            if (schurlab::is_zero(a.coeffs_[i])) continue;
            for (int j = 0; i + j <= d; ++j) {
                if (schurlab::is_zero(b.coeffs_[j])) continue;
                out.coeffs_[i + j] = out.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return out;
    }

    /// Scalar multiple by a carrier element.
    friend TruncSeries operator*(const C& c, const TruncSeries& s) {
        TruncSeries out = s;
        for (auto& x : out.coeffs_) x = c * x;
        return out;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.coeffs_ == b.coeffs_; }

    /// Canonical text such as "2*t + 24*t^2 + O(t^3)".
    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (int k = 0; k <= cutoff(); ++k) {
            const C& c = coeffs_[static_cast<std::size_t>(k)];
            if (schurlab::is_zero(c)) continue;
            std::string text = schurlab::to_string(c);
            bool negative = false;
            const bool compound = is_compound(text);
            if (!compound && text.front() == '-') {
                negative = true;
                text.erase(0, 1);
            }
            if (first)
                os << (negative ? "-" : "");
            else
                os << (negative ? " - " : " + ");
            first = false;
            if (k == 0) {
                os << text;
                continue;
            }
            if (compound)
                os << '(' << text << ")*";
            else if (text != "1")
                os << text << '*';
            os << 't';
            if (k > 1) os << '^' << k;
        }
        if (!first) os << " + ";
        os << "O(t";
        if (cutoff() + 1 > 1) os << '^' << cutoff() + 1;
        os << ')';
        return os.str();
    }

private:
    static std::size_t checked_size(int cutoff) {
        if (cutoff < 0) throw InvalidInput("series cutoff must be non-negative");
        return static_cast<std::size_t>(cutoff) + 1;
    }

    static bool is_compound(const std::string& text) {
        return text.find(" + ") != std::string::npos || text.find(" - ") != std::string::npos;
    }

    void shrink_to(int cutoff) {
        if (cutoff < this->cutoff()) coeffs_.resize(static_cast<std::size_t>(cutoff) + 1);
    }

    std::vector<C> coeffs_;
};

template <class C>
TruncSeries<C> series_add(const TruncSeries<C>& s, const TruncSeries<C>& t) {
    return s + t;
}

template <class C>
TruncSeries<C> series_mul(const TruncSeries<C>& s, const TruncSeries<C>& t) {
    return s * t;
}

/// g(t) = f(scale * t), i.e. g_k = f_k * scale^k.
template <class C>
TruncSeries<C> series_compose_linear(const TruncSeries<C>& f, const C& scale) {
    std::vector<C> out;
    out.reserve(f.coeffs().size());
    C power = one_like(f.like());
    for (int k = 0; k <= f.cutoff(); ++k) {
        out.push_back(f[k] * power);
        if (k < f.cutoff()) power = power * scale;
    }
    return TruncSeries<C>(f.cutoff(), std::move(out), f.like());
}

/// f(h(t)) for h with zero constant term, by Horner's rule.
template <class C>
TruncSeries<C> series_compose(const TruncSeries<C>& f, const TruncSeries<C>& h) {
    if (!is_zero(h[0])) throw InvalidInput("series_compose: inner series must have zero constant term");
    const int d = std::min(f.cutoff(), h.cutoff());
    TruncSeries<C> acc(d, f.like());
    for (int k = f.cutoff(); k >= 0; --k) acc = acc * h.truncate(d) + TruncSeries<C>::constant(d, f[k]);
    return acc;
}

template <class C>
TruncSeries<C> zero_like(const TruncSeries<C>& s) {
    return TruncSeries<C>(s.cutoff(), s.like());
}
template <class C>
TruncSeries<C> one_like(const TruncSeries<C>& s) {
    return TruncSeries<C>::constant(s.cutoff(), one_like(s.like()));
}
template <class C>
TruncSeries<C> scalar_like(const Rational& r, const TruncSeries<C>& s) {
    return TruncSeries<C>::constant(s.cutoff(), scalar_like(r, s.like()));
}
template <class C>
bool is_zero(const TruncSeries<C>& s) {
    return s.is_zero();
}
template <class C>
std::string to_string(const TruncSeries<C>& s) {
    return s.to_string();
}

}  // namespace schurlab
