#include "gtwist/scalar.hpp"

#include "gtwist/error.hpp"

#include <boost/multiprecision/integer.hpp>

namespace gtwist {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field::Field(std::int64_t characteristic) : p_(characteristic) {
    if (characteristic == 0) {
        kind_ = FieldKind::rationals;
    } else {
        if (!is_prime(characteristic))
            throw InvalidArgumentError("field characteristic must be 0 or prime, got " +
                                       std::to_string(characteristic));
        kind_ = FieldKind::prime_field;
    }
}

namespace {

Int mod_reduce(const Int& a, const Int& p) {
    Int r = a % p;
    if (r < 0) r += p;
    return r;
}

}  // namespace

Scalar Field::canon(const Scalar& x) const {
    if (kind_ == FieldKind::rationals) return x;  // cpp_rational is self-normalizing
    Int p(p_);
    Int num = mod_reduce(numerator(x), p);
    Int den = mod_reduce(denominator(x), p);
    if (den == 0) throw InvalidArgumentError("denominator divisible by " + std::to_string(p_));
    if (den != 1) {
        Int dinv = boost::multiprecision::powm(den, p - 2, p);
        num = mod_reduce(num * dinv, p);
    }
    return Scalar(num);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const { return canon(a + b); }
Scalar Field::sub(const Scalar& a, const Scalar& b) const { return canon(a - b); }
Scalar Field::mul(const Scalar& a, const Scalar& b) const { return canon(a * b); }
Scalar Field::neg(const Scalar& a) const { return canon(-a); }

Scalar Field::inv(const Scalar& a) const {
    if (a == 0) throw InvalidArgumentError("inverse of zero");
    if (kind_ == FieldKind::rationals) return Scalar(1) / a;
    Int p(p_);
    Int r = mod_reduce(numerator(canon(a)), p);
    return Scalar(boost::multiprecision::powm(r, p - 2, p));
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

Scalar Field::pow(const Scalar& a, std::int64_t n) const {
    if (n < 0) return pow(inv(a), -n);
    Scalar acc = one();
    Scalar base = canon(a);
    while (n > 0) {
        if (n & 1) acc = mul(acc, base);
        base = mul(base, base);
        n >>= 1;
    }
    return acc;
}

std::string Field::format(const Scalar& a) const {
    Scalar c = canon(a);
    Int num = numerator(c);
    Int den = denominator(c);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Scalar Field::parse(const std::string& text) const {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return canon(Scalar(Int(text)));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw InvalidArgumentError("zero denominator in scalar '" + text + "'");
        return canon(Scalar(num, den));
    } catch (const std::exception& e) {
        throw InvalidArgumentError("bad scalar literal '" + text + "'");
    }
}

}  // namespace gtwist
