#include "schurlab/rational.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "schurlab/errors.hpp"

namespace schurlab {

Rational::Rational(long num, long den) {
    if (den == 0) throw InvalidInput("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw InvalidInput("not a rational number: '" + std::string(whole) + "'");
    mpz_class z(std::string(s), 10);
    return negative ? mpz_class(-z) : z;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw InvalidInput("empty rational literal");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        mpz_class num = parse_integer(text.substr(0, slash), text);
        std::string_view den_text = text.substr(slash + 1);
        if (!all_digits(den_text)) throw InvalidInput("not a rational number: '" + std::string(text) + "'");
        mpz_class den(std::string(den_text), 10);
        if (den == 0) throw InvalidInput("rational with zero denominator: '" + std::string(text) + "'");
        return Rational(mpq_class(num, den));
    }

    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = text.substr(0, dot);
        std::string_view frac_part = text.substr(dot + 1);
        bool negative = !int_part.empty() && int_part.front() == '-';
        if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
        if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
            (!frac_part.empty() && !all_digits(frac_part)))
            throw InvalidInput("not a rational number: '" + std::string(text) + "'");
        mpz_class whole = int_part.empty() ? mpz_class(0) : mpz_class(std::string(int_part), 10);
        mpz_class frac = frac_part.empty() ? mpz_class(0) : mpz_class(std::string(frac_part), 10);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
        mpq_class q(whole * scale + frac, scale);
        if (negative) q = -q;
        return Rational(q);
    }

    return Rational(parse_integer(text, text));
}

std::string Rational::to_string() const { return value_.get_str(10); }

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}
Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}
Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}
Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InvalidInput("division by zero rational");
    value_ /= o.value_;
    return *this;
}

Rational pow(const Rational& base, unsigned exponent) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
    return Rational(mpq_class(num, den));
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational factorial(unsigned k) {
    mpz_class z;
    mpz_fac_ui(z.get_mpz_t(), k);
    return Rational(z);
}

Rational multinomial(unsigned total, const std::vector<int>& parts) {
    mpz_class result;
    mpz_fac_ui(result.get_mpz_t(), total);
    unsigned sum = 0;
    for (int p : parts) {
        if (p < 0) throw InvalidInput("multinomial with a negative part");
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(p));
        mpz_divexact(result.get_mpz_t(), result.get_mpz_t(), f.get_mpz_t());
        sum += static_cast<unsigned>(p);
    }
    if (sum != total) throw InvalidInput("multinomial parts do not sum to the total");
    return Rational(result);
}

std::string to_string(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

}  // namespace schurlab
