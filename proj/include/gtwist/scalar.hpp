#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace gtwist {

// Every coefficient in the toolkit is an exact rational.  Elements of a
// prime field are kept as canonical residues 0..p-1 (denominator 1); all
// arithmetic on them goes through Field so the reduction is never skipped.
using Int = boost::multiprecision::cpp_int;
using Scalar = boost::multiprecision::cpp_rational;

enum class FieldKind { rationals, prime_field };

class Field {
public:
    // characteristic 0 selects the rationals; otherwise it must be prime.
    explicit Field(std::int64_t characteristic = 0);

    FieldKind kind() const { return kind_; }
    std::int64_t characteristic() const { return p_; }

    Scalar zero() const { return Scalar(0); }
    Scalar one() const { return Scalar(1); }

    // Brings an arbitrary rational into canonical form for this field.
    Scalar canon(const Scalar& x) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;  // throws InvalidArgumentError on zero
    Scalar div(const Scalar& a, const Scalar& b) const;
    Scalar pow(const Scalar& a, std::int64_t n) const;

    bool is_zero(const Scalar& a) const { return a == 0; }
    bool eq(const Scalar& a, const Scalar& b) const { return a == b; }

    // Canonical literal: "n" or "n/d" over the rationals, residue over F_p.
    std::string format(const Scalar& a) const;
    Scalar parse(const std::string& text) const;

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

private:
    FieldKind kind_;
    std::int64_t p_;
};

bool is_prime(std::int64_t n);

}  // namespace gtwist
