#include "pairs/rational.hpp"

#include <cctype>

#include "pairs/errors.hpp"

namespace pairs {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t pos = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (pos == s.size()) return false;
    for (; pos < s.size(); ++pos) {
        if (!std::isdigit(static_cast<unsigned char>(s[pos]))) return false;
    }
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!is_integer_literal(s)) throw InputError("malformed integer '" + std::string(s) + "'");
    if (s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s));
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

Integer Rational::to_integer() const {
    if (!is_integer()) throw NonInteger("expected an integer, got " + str());
    return value_.get_num();
}

std::string Rational::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("division by zero rational");
    value_ /= o.value_;
    return *this;
}

Rational gen_binomial(long a, long k) {
    if (k < 0) throw InputError("gen_binomial needs k >= 0");
    Integer num = 1;
    Integer den = 1;
    for (long j = 0; j < k; ++j) {
        num *= Integer(a - j);
        den *= Integer(j + 1);
    }
    return Rational(num, den);
}

Integer binomial(long n, long k) {
    if (k < 0) return 0;
    if (n >= 0 && k > n) return 0;
    return gen_binomial(n, k).to_integer();
}

Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) return Rational(1) / pow(base, -exponent);
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
}

}  // namespace pairs
