#pragma once

// Exact scalar types used throughout the library: arbitrary-precision integers
// and rationals (GMP-backed), dense Eigen matrices over them, and a quadratic
// extension type coef * sqrt(rad) for values that arise from normalizing a
// matrix to unit diagonal.

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace copos {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using MatR = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VecR = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

std::string to_string(const Rational& x);
double to_double(const Rational& x);
int sign_of(const Rational& x);

// Decompose a positive integer as square_root^2 * radical with radical
// squarefree. Trial division by small factors followed by a perfect-square
// check on the remaining cofactor; exact for every input whose non-smooth part
// is squarefree or a perfect square (all inputs arising in this library).
struct SquarefreeParts {
    Integer square_root;
    Integer radical;
};
SquarefreeParts squarefree_decompose(Integer x);

// Value coef * sqrt(rad) with rad a positive squarefree integer. rad == 1
// means the value is rational; coef == 0 is canonicalized to rad == 1. The
// representation is unique, so equality is componentwise. Closed under
// multiplication (sqrt(r1)*sqrt(r2) = g*sqrt(r1 r2 / g^2) with g = gcd);
// addition is defined only for equal radicands.
class SqrtRational {
public:
    SqrtRational() : coef_(0), rad_(1) {}
    explicit SqrtRational(Rational rational_value) : coef_(std::move(rational_value)), rad_(1) {}
    SqrtRational(Rational coef, Integer rad);

    // sqrt(x) for x >= 0 as coef * sqrt(rad): sqrt(p/q) = sqrt(p*q)/q.
    static SqrtRational sqrt_of(const Rational& x);

    const Rational& coef() const { return coef_; }
    const Integer& rad() const { return rad_; }

    bool is_rational() const { return rad_ == 1; }
    bool is_zero() const { return coef_ == 0; }
    // Requires is_rational().
    const Rational& as_rational() const;

    SqrtRational operator*(const SqrtRational& other) const;
    SqrtRational operator*(const Rational& scalar) const;
    SqrtRational operator/(const Rational& scalar) const;
    // Requires equal radicands (or either operand zero).
    SqrtRational operator+(const SqrtRational& other) const;
    SqrtRational operator-() const;
    SqrtRational operator-(const SqrtRational& other) const { return *this + (-other); }

    // Squared value, always rational: coef^2 * rad.
    Rational squared() const { return coef_ * coef_ * rad_; }
    // Multiplicative inverse; requires nonzero.
    SqrtRational inverse() const;

    // Three-way exact comparison of the real values.
    int compare(const SqrtRational& other) const;
    bool operator==(const SqrtRational& other) const {
        return coef_ == other.coef_ && rad_ == other.rad_;
    }
    bool operator!=(const SqrtRational& other) const { return !(*this == other); }
    bool operator<(const SqrtRational& other) const { return compare(other) < 0; }
    bool operator<=(const SqrtRational& other) const { return compare(other) <= 0; }
    bool operator>(const SqrtRational& other) const { return compare(other) > 0; }
    bool operator>=(const SqrtRational& other) const { return compare(other) >= 0; }

    double to_double() const;
    std::string to_string() const;

private:
    Rational coef_;
    Integer rad_;
};

}  // namespace copos
