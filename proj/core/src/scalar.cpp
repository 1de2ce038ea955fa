#include "pitm/scalar.hpp"

#include <cmath>
#include <string>

#include "pitm/errors.hpp"

namespace pitm {

BigRational make_rational(const BigInt& p, const BigInt& q) {
    if (sgn(q) == 0) {
        throw DivisionByZero("rational with zero denominator");
    }
    BigRational r(p, q);
    r.canonicalize();
    return r;
}

BigRational parse_rational(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    auto parse_int = [&](std::string_view s) {
        s = trim(s);
        std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (s.size() == start) {
            throw ParseError("expected an integer in '" + std::string(text) + "'");
        }
        for (std::size_t i = start; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') {
                throw ParseError("invalid rational '" + std::string(text) + "'");
            }
        }
        std::string digits(s[0] == '+' ? s.substr(1) : s);
        return BigInt(digits, 10);
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return BigRational(parse_int(text));
    }
    const BigInt den = parse_int(text.substr(slash + 1));
    if (sgn(den) == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    return make_rational(parse_int(text.substr(0, slash)), den);
}

std::string to_string(const BigRational& r) {
    if (r.get_den() == 1) {
        return r.get_num().get_str();
    }
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool is_square_free(std::int64_t d) {
    if (d < 1) return false;
    for (std::int64_t p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

Scalar::Scalar(long value, std::int64_t d) : Scalar(BigRational(value), d) {}

Scalar::Scalar(BigRational rational, std::int64_t d) : Scalar(std::move(rational), BigRational(0), d) {}

Scalar::Scalar(BigRational rational, BigRational surd, std::int64_t d)
    : rational_(std::move(rational)), surd_(std::move(surd)), d_(d) {
    if (!is_square_free(d_)) {
        throw UsageError("surd discriminant " + std::to_string(d_) + " is not a positive square-free integer");
    }
    rational_.canonicalize();
    surd_.canonicalize();
    if (d_ == 1 && sgn(surd_) != 0) {
        // sqrt(1) == 1 folds into the rational part.
        rational_ += surd_;
        surd_ = 0;
    }
}

void Scalar::check_same_field(const Scalar& other) const {
    if (d_ != other.d_) {
        throw UsageError("scalars from Q(sqrt(" + std::to_string(d_) + ")) and Q(sqrt(" +
                         std::to_string(other.d_) + ")) cannot be combined");
    }
}

BigRational Scalar::norm() const {
    BigRational n = rational_ * rational_ - BigRational(d_) * surd_ * surd_;
    return n;
}

Scalar Scalar::inverse() const {
    if (is_zero()) {
        throw DivisionByZero("inverse of zero scalar");
    }
    if (is_rational()) {
        return Scalar(1 / rational_, d_);
    }
    const BigRational n = norm();
    return Scalar(rational_ / n, -surd_ / n, d_);
}

double Scalar::to_double() const {
    double value = rational_.get_d();
    if (sgn(surd_) != 0) {
        value += surd_.get_d() * std::sqrt(static_cast<double>(d_));
    }
    return value;
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    out.rational_ = -out.rational_;
    out.surd_ = -out.surd_;
    return out;
}

Scalar& Scalar::operator+=(const Scalar& other) {
    check_same_field(other);
    rational_ += other.rational_;
    surd_ += other.surd_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
    check_same_field(other);
    rational_ -= other.rational_;
    surd_ -= other.surd_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
    check_same_field(other);
    if (is_rational() && other.is_rational()) {
        rational_ *= other.rational_;
        return *this;
    }
    BigRational a = rational_ * other.rational_ + BigRational(d_) * surd_ * other.surd_;
    BigRational b = rational_ * other.surd_ + other.rational_ * surd_;
    rational_ = std::move(a);
    surd_ = std::move(b);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
    check_same_field(other);
    return *this *= other.inverse();
}

Scalar scalar_mul(const Scalar& p, const Scalar& q) { return p * q; }

Scalar scalar_inv(const Scalar& p) { return p.inverse(); }

std::string to_string(const Scalar& s) {
    const bool has_rational = sgn(s.rational_part()) != 0;
    const bool has_surd = sgn(s.surd_part()) != 0;
    if (!has_rational && !has_surd) {
        return "0";
    }
    std::string out;
    if (has_rational) {
        out = to_string(s.rational_part());
    }
    if (has_surd) {
        if (has_rational) out += " + ";
        out += to_string(s.surd_part()) + "*sqrt(" + std::to_string(s.discriminant()) + ")";
    }
    return out;
}

}  // namespace pitm
