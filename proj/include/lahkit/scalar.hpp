#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "lahkit/errors.hpp"

namespace lahkit {

using Integer = mpz_class;

// Exact rational number, always reduced, denominator >= 1.  The canonical
// zero is 0/1.  Thin wrapper over GMP's mpq_class that guarantees
// canonicalization at every construction site and fixes the text format
// used by the JSON exporters ("-3", "7/2").
class Scalar {
public:
    Scalar() : v_(0) {}
    Scalar(long n) : v_(n) {}
    Scalar(const Integer& n) : v_(n) {}
    Scalar(const Integer& num, const Integer& den) : v_(num, den) {
        if (den == 0) throw domain_error("Scalar: zero denominator");
        v_.canonicalize();
    }
    explicit Scalar(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    static Scalar from_string(const std::string& s);

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    std::string to_string() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Scalar operator-() const { return Scalar(mpq_class(-v_)); }
    Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
    Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
    Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
    Scalar& operator/=(const Scalar& o) {
        if (o.is_zero()) throw domain_error("Scalar: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { a += b; return a; }
    friend Scalar operator-(Scalar a, const Scalar& b) { a -= b; return a; }
    friend Scalar operator*(Scalar a, const Scalar& b) { a *= b; return a; }
    friend Scalar operator/(Scalar a, const Scalar& b) { a /= b; return a; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Scalar& a, const Scalar& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return a.v_ >= b.v_; }

private:
    mpq_class v_;
};

// Combinatorial scalars.  All exact; negative n is a domain error.
Integer factorial(long n);
Integer binomial(long n, long k);
Integer multinomial(const std::vector<long>& parts);
// prod_{j=0}^{n-1} (1 + j*r)
Integer multifactorial(long n, long r);
// prod_{j=0}^{n-1} ((r-1) + j*r)
Integer shifted_multifactorial(long n, long r);
// j*(j+1)*...*i, the integer form of i!/(j-1)!; requires 1 <= j <= i+1.
Integer rising_product(long j, long i);

// Dispatcher used by the text interfaces.  kind is one of "factorial",
// "binomial", "multinomial", "multifactorial", "shifted-multifactorial".
Scalar comb_scalar(const std::string& kind, const std::vector<long>& args);

} // namespace lahkit
