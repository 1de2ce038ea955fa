#include "pitm/ring_element.hpp"

#include <cmath>

#include "pitm/errors.hpp"

namespace pitm {

std::string to_string(const DerivationMode& mode) {
    if (mode.is_constant()) return "constant";
    return "exponential(" + to_string(mode.rate()) + ")";
}

RingElement::RingElement(Context ctx)
    : num_(ctx.d), den_(SymbolPoly::constant(Scalar::one(ctx.d))), ctx_(std::move(ctx)) {}

RingElement::RingElement(const Scalar& c, Context ctx)
    : RingElement(SymbolPoly::constant(c), std::move(ctx)) {}

RingElement::RingElement(SymbolPoly num, Context ctx)
    : num_(std::move(num)), den_(SymbolPoly::constant(Scalar::one(ctx.d))), ctx_(std::move(ctx)) {
    if (num_.discriminant() != ctx_.d) {
        throw UsageError("polynomial field does not match the context");
    }
}

RingElement::RingElement(SymbolPoly num, SymbolPoly den, Context ctx)
    : RingElement(canonicalize(raw(std::move(num), std::move(den), std::move(ctx)))) {}

RingElement RingElement::raw(SymbolPoly num, SymbolPoly den, Context ctx) {
    if (num.discriminant() != ctx.d || den.discriminant() != ctx.d) {
        throw UsageError("polynomial field does not match the context");
    }
    return RingElement(std::move(num), std::move(den), std::move(ctx), Unchecked{});
}

RingElement RingElement::symbol(Context ctx) {
    const auto d = ctx.d;
    return RingElement(SymbolPoly::symbol(d), std::move(ctx));
}

RingElement canonicalize(const RingElement& e) {
    if (e.den_.is_zero()) {
        throw InvalidElement("ring element with zero denominator");
    }
    if (e.num_.is_zero()) {
        return RingElement(e.ctx_);
    }
    SymbolPoly num = e.num_;
    SymbolPoly den = e.den_;
    if (den.degree() > 0) {
        SymbolPoly g = poly_gcd(num, den);
        if (g.degree() > 0) {
            num = exact_div(num, g);
            den = exact_div(den, g);
        }
    }
    if (!den.leading().is_one()) {
        const Scalar inv = den.leading().inverse();
        num = num.scaled(inv);
        den = den.scaled(inv);
    }
    return RingElement(std::move(num), std::move(den), e.ctx_, RingElement::Unchecked{});
}

void RingElement::check_context(const RingElement& other) const {
    if (!(ctx_ == other.ctx_)) {
        throw UsageError("ring elements from different contexts (surd " + std::to_string(ctx_.d) + " / " +
                         to_string(ctx_.mode) + " vs surd " + std::to_string(other.ctx_.d) + " / " +
                         to_string(other.ctx_.mode) + ")");
    }
}

RingElement RingElement::inverse() const {
    if (is_zero()) {
        throw DivisionByZero("inverse of zero ring element");
    }
    return canonicalize(raw(den_, num_, ctx_));
}

RingElement RingElement::scaled(const Scalar& c) const {
    if (c.is_zero()) return RingElement(ctx_);
    return RingElement(num_.scaled(c), den_, ctx_, Unchecked{});
}

double RingElement::eval(double v) const {
    auto horner = [v](const SymbolPoly& p) {
        double acc = 0.0;
        const auto c = p.coeffs();
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * v + it->to_double();
        return acc;
    };
    const double den = horner(den_);
    if (den == 0.0 || !std::isfinite(den)) {
        throw EvaluationSingularity("denominator vanishes at v = " + std::to_string(v));
    }
    return horner(num_) / den;
}

RingElement RingElement::operator-() const {
    return RingElement(-num_, den_, ctx_, Unchecked{});
}

RingElement& RingElement::operator+=(const RingElement& other) {
    check_context(other);
    if (other.is_zero()) return *this;
    if (is_zero()) return *this = other;
    if (den_ == other.den_) {
        // gcd(num1 + num2, den) may be nontrivial even with a shared denominator.
        *this = canonicalize(raw(num_ + other.num_, den_, ctx_));
        return *this;
    }
    if (is_polynomial() && other.is_polynomial()) {
        num_ += other.num_;
        return *this;
    }
    const SymbolPoly g = poly_gcd(den_, other.den_);
    const SymbolPoly left_cof = exact_div(den_, g);
    const SymbolPoly right_cof = exact_div(other.den_, g);
    SymbolPoly num = num_ * right_cof + other.num_ * left_cof;
    SymbolPoly den = left_cof * other.den_;
    if (num.is_zero()) return *this = RingElement(ctx_);
    // Any common factor of num and den divides g.
    const SymbolPoly h = poly_gcd(num, g);
    if (h.degree() > 0) {
        num = exact_div(num, h);
        den = exact_div(den, h);
    }
    num_ = std::move(num);
    den_ = std::move(den);
    if (!den_.leading().is_one()) *this = canonicalize(*this);
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) { return *this += -other; }

RingElement& RingElement::operator*=(const RingElement& other) {
    check_context(other);
    if (is_zero() || other.is_zero()) return *this = RingElement(ctx_);
    if (is_polynomial() && other.is_polynomial()) {
        num_ = num_ * other.num_;
        return *this;
    }
    // Cross-cancel: a/b * c/d with gcd(a,d) and gcd(c,b) removed stays reduced.
    SymbolPoly a = num_, b = den_, c = other.num_, d = other.den_;
    if (d.degree() > 0) {
        const SymbolPoly g1 = poly_gcd(a, d);
        if (g1.degree() > 0) {
            a = exact_div(a, g1);
            d = exact_div(d, g1);
        }
    }
    if (b.degree() > 0) {
        const SymbolPoly g2 = poly_gcd(c, b);
        if (g2.degree() > 0) {
            c = exact_div(c, g2);
            b = exact_div(b, g2);
        }
    }
    num_ = a * c;
    den_ = b * d;
    if (!den_.leading().is_one()) *this = canonicalize(*this);
    return *this;
}

RingElement& RingElement::operator/=(const RingElement& other) {
    check_context(other);
    return *this *= other.inverse();
}

RingElement ddx(const RingElement& e) {
    const auto& ctx = e.context();
    if (ctx.mode.is_constant() || e.is_zero()) {
        return RingElement(ctx);
    }
    // k * v * (N' D - N D') / D^2
    const Scalar k(ctx.mode.rate(), ctx.d);
    SymbolPoly top = (e.num().derivative() * e.den() - e.num() * e.den().derivative()).shifted(1).scaled(k);
    return RingElement(std::move(top), e.den() * e.den(), ctx);
}

}  // namespace pitm
