#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace steinerlab {

/// Exact scalar. Over Q this is an arbitrary-precision fraction (reduced,
/// positive denominator). Over F_p the value is an integer in [0, p).
using Scalar = mpq_class;

/// The ground field: Q or a prime field F_p.
struct FieldSpec {
    enum class Kind { Rationals, PrimeField };

    Kind kind = Kind::Rationals;
    long p = 0;

    static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0}; }
    static FieldSpec prime(long p);

    bool is_rationals() const { return kind == Kind::Rationals; }
    bool is_prime_field() const { return kind == Kind::PrimeField; }

    bool operator==(const FieldSpec&) const = default;

    /// "Q" or "F<p>", the wire name used in JSON.
    std::string name() const;
    static FieldSpec parse(const std::string& name);

    // Arithmetic in this field; inputs and outputs are normalized scalars.
    Scalar normalize(const Scalar& a) const;
    Scalar add(const Scalar& a, const Scalar& b) const { return normalize(Scalar(a + b)); }
    Scalar sub(const Scalar& a, const Scalar& b) const { return normalize(Scalar(a - b)); }
    Scalar mul(const Scalar& a, const Scalar& b) const { return normalize(Scalar(a * b)); }
    Scalar neg(const Scalar& a) const { return normalize(Scalar(-a)); }
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

    Scalar from_string(const std::string& s) const;
    static std::string to_string(const Scalar& a) { return a.get_str(); }
};

bool is_prime(long n);

}  // namespace steinerlab
