#include "bgap/rational.hpp"

#include <cctype>
#include <ostream>

namespace bgap {

namespace {

bool valid_integer_token(std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (const char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

Integer parse_integer_token(std::string_view s) {
    return Integer(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw DivisionByZero("rational with zero denominator");
    mpq_set_num(v_.get_mpq_t(), num.get_mpz_t());
    mpq_set_den(v_.get_mpq_t(), den.get_mpz_t());
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num_part = text.substr(0, slash);
    if (!valid_integer_token(num_part)) {
        throw ParseError("invalid rational: '" + std::string(text) + "'");
    }
    if (slash == std::string_view::npos) {
        return Rational(parse_integer_token(num_part));
    }
    const std::string_view den_part = text.substr(slash + 1);
    if (!valid_integer_token(den_part)) {
        throw ParseError("invalid rational: '" + std::string(text) + "'");
    }
    const Integer den = parse_integer_token(den_part);
    if (sgn(den) == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(parse_integer_token(num_part), den);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    return v_.get_str();
}

std::string Rational::wire() const {
    return numerator().get_str() + "/" + denominator().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational abs(const Rational& r) {
    return r.sign() < 0 ? -r : r;
}

}  // namespace bgap
