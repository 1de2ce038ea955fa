#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pitm {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Builds p/q in lowest terms. Throws DivisionByZero when q == 0.
BigRational make_rational(const BigInt& p, const BigInt& q = 1);

/// Parses "p", "-p" or "p/q" (surrounding blanks allowed).
BigRational parse_rational(std::string_view text);

/// "p/q", or "p" when q == 1.
std::string to_string(const BigRational& r);

bool is_square_free(std::int64_t d);

/// An element a + b*sqrt(d) of the quadratic field Q(sqrt(d)).
///
/// d is square-free and positive; d == 1 is the pure rational field and forces
/// b == 0. Arithmetic between scalars with different d throws UsageError.
class Scalar {
public:
    Scalar() = default;
    Scalar(long value, std::int64_t d = 1);  // NOLINT(google-explicit-constructor)
    explicit Scalar(BigRational rational, std::int64_t d = 1);
    Scalar(BigRational rational, BigRational surd, std::int64_t d);

    static Scalar zero(std::int64_t d) { return Scalar(BigRational(0), d); }
    static Scalar one(std::int64_t d) { return Scalar(BigRational(1), d); }
    static Scalar sqrt_d(std::int64_t d) { return Scalar(BigRational(0), BigRational(1), d); }

    const BigRational& rational_part() const { return rational_; }
    const BigRational& surd_part() const { return surd_; }
    std::int64_t discriminant() const { return d_; }

    bool is_zero() const { return sgn(rational_) == 0 && sgn(surd_) == 0; }
    bool is_one() const { return rational_ == 1 && sgn(surd_) == 0; }
    bool is_rational() const { return sgn(surd_) == 0; }

    /// Field norm a^2 - d*b^2; zero only for the zero element.
    BigRational norm() const;

    /// (a - b*sqrt(d)) / (a^2 - d*b^2). Throws DivisionByZero on zero.
    Scalar inverse() const;

    double to_double() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& other);
    Scalar& operator-=(const Scalar& other);
    Scalar& operator*=(const Scalar& other);
    Scalar& operator/=(const Scalar& other);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

    friend bool operator==(const Scalar& lhs, const Scalar& rhs) {
        return lhs.rational_ == rhs.rational_ && lhs.surd_ == rhs.surd_;
    }

private:
    void check_same_field(const Scalar& other) const;

    BigRational rational_{0};
    BigRational surd_{0};
    std::int64_t d_ = 1;
};

Scalar scalar_mul(const Scalar& p, const Scalar& q);
Scalar scalar_inv(const Scalar& p);

/// "p/q + r/s*sqrt(d)" with zero parts omitted ("0" for zero).
std::string to_string(const Scalar& s);

}  // namespace pitm
