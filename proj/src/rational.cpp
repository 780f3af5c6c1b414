#include "normsurf/rational.hpp"

#include <cctype>
#include <ostream>

namespace normsurf {

namespace {

void require_nonzero_den(const BigInt& den) {
    if (sgn(den) == 0) throw Error(ErrorCode::InvalidArgument, "rational with zero denominator");
}

bool is_integer_literal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational::Rational(long long num, long long den)
    : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
    require_nonzero_den(den);
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    auto to_bigint = [&](std::string s) {
        if (!is_integer_literal(s))
            throw Error(ErrorCode::Syntax, "bad rational literal: '" + text + "'");
        if (s[0] == '+') s.erase(0, 1);
        return BigInt(s);
    };
    std::size_t slash = text.find('/');
    if (slash == std::string::npos) return Rational(to_bigint(text));
    BigInt d = to_bigint(text.substr(slash + 1));
    if (sgn(d) == 0) throw Error(ErrorCode::Syntax, "zero denominator in '" + text + "'");
    return Rational(to_bigint(text.substr(0, slash)), d);
}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

BigInt Rational::floor() const {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
    return q;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace normsurf
