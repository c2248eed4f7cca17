#include "copos/rational.hpp"

#include "copos/exceptions.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <sstream>
#include <utility>

namespace copos {

std::string to_string(const Rational& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

double to_double(const Rational& x) {
    return x.convert_to<double>();
}

int sign_of(const Rational& x) {
    if (x > 0) return 1;
    if (x < 0) return -1;
    return 0;
}

SquarefreeParts squarefree_decompose(Integer x) {
    if (x <= 0) {
        throw BadInput("squarefree_decompose: input must be positive, got " + x.str());
    }
    Integer square_root = 1;
    Integer radical = 1;
    auto strip_factor = [&](const Integer& p) {
        int count = 0;
        while (x % p == 0) {
            x /= p;
            ++count;
        }
        if (count == 0) return;
        for (int i = 0; i + 1 < count; i += 2) square_root *= p;
        if (count % 2 == 1) radical *= p;
    };
    strip_factor(2);
    for (Integer p = 3; p <= 1000; p += 2) {
        if (x == 1) break;
        strip_factor(p);
    }
    if (x > 1) {
        // Remaining cofactor has no prime factor <= 1000. Absorb it if it is a
        // perfect square, otherwise it is treated as squarefree.
        Integer root = sqrt(x);
        if (root * root == x) {
            square_root *= root;
        } else {
            radical *= x;
        }
    }
    return {square_root, radical};
}

SqrtRational::SqrtRational(Rational coef, Integer rad) : coef_(std::move(coef)), rad_(std::move(rad)) {
    if (rad_ <= 0) {
        throw BadInput("SqrtRational: radicand must be positive, got " + rad_.str());
    }
    SquarefreeParts parts = squarefree_decompose(rad_);
    coef_ *= Rational(parts.square_root);
    rad_ = parts.radical;
    if (coef_ == 0) rad_ = 1;
}

SqrtRational SqrtRational::sqrt_of(const Rational& x) {
    if (x < 0) {
        throw BadInput("SqrtRational::sqrt_of: negative input " + copos::to_string(x));
    }
    if (x == 0) return SqrtRational();
    Integer p = numerator(x);
    Integer q = denominator(x);
    // sqrt(p/q) = sqrt(p*q) / q
    SquarefreeParts parts = squarefree_decompose(p * q);
    return SqrtRational(Rational(parts.square_root, q), parts.radical);
}

const Rational& SqrtRational::as_rational() const {
    if (!is_rational()) {
        throw PreconditionViolated("SqrtRational::as_rational called on irrational value " + to_string());
    }
    return coef_;
}

SqrtRational SqrtRational::operator*(const SqrtRational& other) const {
    if (is_zero() || other.is_zero()) return SqrtRational();
    Integer g = gcd(rad_, other.rad_);
    // sqrt(r1) * sqrt(r2) = g * sqrt((r1/g) * (r2/g)), the latter squarefree
    // because r1/g and r2/g are coprime and squarefree.
    SqrtRational result;
    result.coef_ = coef_ * other.coef_ * Rational(g);
    result.rad_ = (rad_ / g) * (other.rad_ / g);
    if (result.coef_ == 0) result.rad_ = 1;
    return result;
}

SqrtRational SqrtRational::operator*(const Rational& scalar) const {
    if (scalar == 0 || is_zero()) return SqrtRational();
    SqrtRational result;
    result.coef_ = coef_ * scalar;
    result.rad_ = rad_;
    return result;
}

SqrtRational SqrtRational::operator/(const Rational& scalar) const {
    if (scalar == 0) {
        throw BadInput("SqrtRational: division by zero");
    }
    return *this * (Rational(1) / scalar);
}

SqrtRational SqrtRational::operator+(const SqrtRational& other) const {
    if (is_zero()) return other;
    if (other.is_zero()) return *this;
    if (rad_ != other.rad_) {
        throw PreconditionViolated("SqrtRational: addition of incompatible radicands " + rad_.str() + " and " +
                                   other.rad_.str());
    }
    Rational c = coef_ + other.coef_;
    if (c == 0) return SqrtRational();
    SqrtRational result;
    result.coef_ = std::move(c);
    result.rad_ = rad_;
    return result;
}

SqrtRational SqrtRational::operator-() const {
    SqrtRational result;
    result.coef_ = -coef_;
    result.rad_ = rad_;
    if (result.coef_ == 0) result.rad_ = 1;
    return result;
}

SqrtRational SqrtRational::inverse() const {
    if (is_zero()) {
        throw BadInput("SqrtRational: inverse of zero");
    }
    // 1 / (c * sqrt(r)) = sqrt(r) / (c * r)
    SqrtRational result;
    result.coef_ = Rational(1) / (coef_ * Rational(rad_));
    result.rad_ = rad_;
    return result;
}

int SqrtRational::compare(const SqrtRational& other) const {
    int s1 = sign_of(coef_);
    int s2 = sign_of(other.coef_);
    if (s1 != s2) return s1 < s2 ? -1 : 1;
    if (s1 == 0) return 0;
    // Same strict sign: compare squares, flipping for negatives.
    Rational lhs = squared();
    Rational rhs = other.squared();
    int cmp = lhs == rhs ? 0 : (lhs < rhs ? -1 : 1);
    return s1 > 0 ? cmp : -cmp;
}

double SqrtRational::to_double() const {
    return copos::to_double(coef_) * std::sqrt(rad_.convert_to<double>());
}

std::string SqrtRational::to_string() const {
    if (is_rational()) return copos::to_string(coef_);
    return copos::to_string(coef_) + "*sqrt(" + rad_.str() + ")";
}

}  // namespace copos
