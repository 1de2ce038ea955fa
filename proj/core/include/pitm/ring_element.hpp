#pragma once

#include <cstdint>
#include <string>

#include "pitm/symbol_poly.hpp"

namespace pitm {

/// How the formal symbol v depends on x.
///
/// Constant: v is a parameter (the initial level lambda) and d/dx v = 0.
/// Exponential(k): v = exp(k*x), so d/dx acts as k * v * d/dv.
class DerivationMode {
public:
    enum class Kind { Constant, Exponential };

    static DerivationMode constant() { return DerivationMode(Kind::Constant, BigRational(0)); }
    static DerivationMode exponential(BigRational rate) { return DerivationMode(Kind::Exponential, std::move(rate)); }

    Kind kind() const { return kind_; }
    bool is_constant() const { return kind_ == Kind::Constant; }
    /// k for Exponential(k); zero for Constant.
    const BigRational& rate() const { return rate_; }

    friend bool operator==(const DerivationMode& lhs, const DerivationMode& rhs) {
        return lhs.kind_ == rhs.kind_ && lhs.rate_ == rhs.rate_;
    }

private:
    DerivationMode(Kind kind, BigRational rate) : kind_(kind), rate_(std::move(rate)) {}

    Kind kind_ = Kind::Constant;
    BigRational rate_{0};
};

/// "constant" or "exponential(k)".
std::string to_string(const DerivationMode& mode);

/// Shared by every value taking part in one computation.
struct Context {
    std::int64_t d = 1;
    DerivationMode mode = DerivationMode::constant();

    friend bool operator==(const Context&, const Context&) = default;
};

/// Rational function num/den in v over Q(sqrt(d)).
///
/// Values built through the public constructors and arithmetic are canonical:
/// gcd(num, den) = 1 and den is monic, which makes == a structural comparison.
class RingElement {
public:
    explicit RingElement(Context ctx = {});
    RingElement(const Scalar& c, Context ctx);
    RingElement(SymbolPoly num, Context ctx);
    /// Canonicalizes; throws InvalidElement when den is zero.
    RingElement(SymbolPoly num, SymbolPoly den, Context ctx);

    /// Stores num/den exactly as given, without reduction. Only canonicalize()
    /// should consume the result.
    static RingElement raw(SymbolPoly num, SymbolPoly den, Context ctx);
    /// The symbol v itself.
    static RingElement symbol(Context ctx);

    const SymbolPoly& num() const { return num_; }
    const SymbolPoly& den() const { return den_; }
    const Context& context() const { return ctx_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RingElement inverse() const;
    RingElement scaled(const Scalar& c) const;
    /// Numeric value at v (the surd is evaluated in floating point).
    double eval(double v) const;

    RingElement operator-() const;
    RingElement& operator+=(const RingElement& other);
    RingElement& operator-=(const RingElement& other);
    RingElement& operator*=(const RingElement& other);
    RingElement& operator/=(const RingElement& other);
    friend RingElement operator+(RingElement lhs, const RingElement& rhs) { return lhs += rhs; }
    friend RingElement operator-(RingElement lhs, const RingElement& rhs) { return lhs -= rhs; }
    friend RingElement operator*(RingElement lhs, const RingElement& rhs) { return lhs *= rhs; }
    friend RingElement operator/(RingElement lhs, const RingElement& rhs) { return lhs /= rhs; }

    friend bool operator==(const RingElement& lhs, const RingElement& rhs) {
        return lhs.ctx_ == rhs.ctx_ && lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
    }

    void check_context(const RingElement& other) const;

private:
    struct Unchecked {};
    RingElement(SymbolPoly num, SymbolPoly den, Context ctx, Unchecked)
        : num_(std::move(num)), den_(std::move(den)), ctx_(std::move(ctx)) {}

    friend RingElement canonicalize(const RingElement& e);

    SymbolPoly num_;
    SymbolPoly den_;
    Context ctx_;
};

/// gcd-reduced with monic denominator; idempotent. Throws InvalidElement for den == 0.
RingElement canonicalize(const RingElement& e);

/// Spatial derivative under the element's derivation mode.
RingElement ddx(const RingElement& e);

}  // namespace pitm
