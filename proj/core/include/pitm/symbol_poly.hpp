#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "pitm/scalar.hpp"

namespace pitm {

/// Dense univariate polynomial in the formal symbol v over Q(sqrt(d)).
///
/// Coefficient j multiplies v^j. The coefficient list never ends in a zero, so
/// the zero polynomial is the empty list and has degree -1.
class SymbolPoly {
public:
    explicit SymbolPoly(std::int64_t d = 1) : d_(d) {}
    SymbolPoly(std::vector<Scalar> coeffs, std::int64_t d);

    static SymbolPoly constant(const Scalar& c);
    static SymbolPoly monomial(const Scalar& c, int degree);
    /// The polynomial v.
    static SymbolPoly symbol(std::int64_t d);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    std::int64_t discriminant() const { return d_; }

    std::span<const Scalar> coeffs() const { return coeffs_; }
    /// Coefficient of v^j, zero beyond the degree.
    Scalar coeff(int j) const;
    const Scalar& leading() const { return coeffs_.back(); }

    SymbolPoly scaled(const Scalar& c) const;
    SymbolPoly monic() const;
    /// d/dv
    SymbolPoly derivative() const;
    /// v * p
    SymbolPoly shifted(int by = 1) const;

    SymbolPoly operator-() const;
    SymbolPoly& operator+=(const SymbolPoly& other);
    SymbolPoly& operator-=(const SymbolPoly& other);
    friend SymbolPoly operator+(SymbolPoly lhs, const SymbolPoly& rhs) { return lhs += rhs; }
    friend SymbolPoly operator-(SymbolPoly lhs, const SymbolPoly& rhs) { return lhs -= rhs; }
    friend SymbolPoly operator*(const SymbolPoly& lhs, const SymbolPoly& rhs);

    friend bool operator==(const SymbolPoly& lhs, const SymbolPoly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

private:
    void trim();
    void check_same_field(const SymbolPoly& other) const;

    std::vector<Scalar> coeffs_;
    std::int64_t d_ = 1;
};

/// Quotient and remainder of Euclidean division. Throws DivisionByZero for q == 0.
std::pair<SymbolPoly, SymbolPoly> divmod(const SymbolPoly& p, const SymbolPoly& q);

/// Quotient of a division known to be exact.
SymbolPoly exact_div(const SymbolPoly& p, const SymbolPoly& q);

/// Monic gcd over Q(sqrt(d)); gcd(p, 0) = monic(p) and gcd(0, 0) = 0.
SymbolPoly poly_gcd(const SymbolPoly& p, const SymbolPoly& q);

}  // namespace pitm
