#include "steinerlab/field.hpp"

namespace steinerlab {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(long p) {
    if (!is_prime(p)) throw std::invalid_argument("FieldSpec: " + std::to_string(p) + " is not prime");
    return FieldSpec{Kind::PrimeField, p};
}

std::string FieldSpec::name() const {
    return is_rationals() ? "Q" : "F" + std::to_string(p);
}

FieldSpec FieldSpec::parse(const std::string& name) {
    if (name == "Q") return rationals();
    if (name.size() > 1 && name[0] == 'F') return prime(std::stol(name.substr(1)));
    throw std::invalid_argument("FieldSpec: cannot parse field name '" + name + "'");
}

Scalar FieldSpec::normalize(const Scalar& a) const {
    Scalar r = a;
    r.canonicalize();
    if (is_rationals()) return r;
    if (r.get_den() != 1) {
        // Clear the denominator mod p before reducing the numerator.
        mpz_class den = r.get_den();
        mpz_class dinv;
        if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), mpz_class(p).get_mpz_t()) == 0)
            throw std::domain_error("FieldSpec: denominator not invertible mod " + std::to_string(p));
        r = Scalar(r.get_num() * dinv);
    }
    mpz_class num = r.get_num() % p;
    if (num < 0) num += p;
    return Scalar(num);
}

Scalar FieldSpec::inv(const Scalar& a) const {
    if (a == 0) throw std::domain_error("FieldSpec: division by zero");
    if (is_rationals()) return Scalar(1 / a);
    mpz_class ainv;
    mpz_class num = normalize(a).get_num();
    if (mpz_invert(ainv.get_mpz_t(), num.get_mpz_t(), mpz_class(p).get_mpz_t()) == 0)
        throw std::domain_error("FieldSpec: element not invertible mod " + std::to_string(p));
    return Scalar(ainv);
}

Scalar FieldSpec::from_string(const std::string& s) const {
    Scalar r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("Scalar: cannot parse '" + s + "'");
    return normalize(r);
}

}  // namespace steinerlab
