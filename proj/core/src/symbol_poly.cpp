#include "pitm/symbol_poly.hpp"

#include <algorithm>
#include <string>

#include "pitm/errors.hpp"

namespace pitm {

SymbolPoly::SymbolPoly(std::vector<Scalar> coeffs, std::int64_t d) : coeffs_(std::move(coeffs)), d_(d) {
    for (const auto& c : coeffs_) {
        if (c.discriminant() != d_) {
            throw UsageError("polynomial coefficient outside Q(sqrt(" + std::to_string(d_) + "))");
        }
    }
    trim();
}

SymbolPoly SymbolPoly::constant(const Scalar& c) { return SymbolPoly({c}, c.discriminant()); }

SymbolPoly SymbolPoly::monomial(const Scalar& c, int degree) {
    std::vector<Scalar> coeffs(static_cast<std::size_t>(degree) + 1, Scalar::zero(c.discriminant()));
    coeffs.back() = c;
    return SymbolPoly(std::move(coeffs), c.discriminant());
}

SymbolPoly SymbolPoly::symbol(std::int64_t d) { return monomial(Scalar::one(d), 1); }

void SymbolPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

void SymbolPoly::check_same_field(const SymbolPoly& other) const {
    if (d_ != other.d_) {
        throw UsageError("polynomials over different surd fields");
    }
}

Scalar SymbolPoly::coeff(int j) const {
    if (j < 0 || j > degree()) return Scalar::zero(d_);
    return coeffs_[static_cast<std::size_t>(j)];
}

SymbolPoly SymbolPoly::scaled(const Scalar& c) const {
    if (c.is_zero()) return SymbolPoly(d_);
    if (c.is_one()) return *this;
    SymbolPoly out = *this;
    for (auto& x : out.coeffs_) x *= c;
    return out;
}

SymbolPoly SymbolPoly::monic() const {
    if (is_zero() || leading().is_one()) return *this;
    return scaled(leading().inverse());
}

SymbolPoly SymbolPoly::derivative() const {
    if (coeffs_.size() <= 1) return SymbolPoly(d_);
    std::vector<Scalar> out;
    out.reserve(coeffs_.size() - 1);
    for (std::size_t j = 1; j < coeffs_.size(); ++j) {
        out.push_back(coeffs_[j] * Scalar(static_cast<long>(j), d_));
    }
    return SymbolPoly(std::move(out), d_);
}

SymbolPoly SymbolPoly::shifted(int by) const {
    if (is_zero()) return *this;
    SymbolPoly out(d_);
    out.coeffs_.assign(static_cast<std::size_t>(by), Scalar::zero(d_));
    out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return out;
}

SymbolPoly SymbolPoly::operator-() const {
    SymbolPoly out = *this;
    for (auto& x : out.coeffs_) x = -x;
    return out;
}

SymbolPoly& SymbolPoly::operator+=(const SymbolPoly& other) {
    check_same_field(other);
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Scalar::zero(d_));
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
    trim();
    return *this;
}

SymbolPoly& SymbolPoly::operator-=(const SymbolPoly& other) {
    check_same_field(other);
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Scalar::zero(d_));
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) coeffs_[j] -= other.coeffs_[j];
    trim();
    return *this;
}

SymbolPoly operator*(const SymbolPoly& lhs, const SymbolPoly& rhs) {
    lhs.check_same_field(rhs);
    if (lhs.is_zero() || rhs.is_zero()) return SymbolPoly(lhs.d_);
    if (lhs.is_one()) return rhs;
    if (rhs.is_one()) return lhs;
    std::vector<Scalar> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Scalar::zero(lhs.d_));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return SymbolPoly(std::move(out), lhs.d_);
}

std::pair<SymbolPoly, SymbolPoly> divmod(const SymbolPoly& p, const SymbolPoly& q) {
    if (q.is_zero()) {
        throw DivisionByZero("polynomial division by zero");
    }
    const std::int64_t d = p.discriminant();
    if (p.degree() < q.degree()) {
        return {SymbolPoly(d), p};
    }
    std::vector<Scalar> rem(p.coeffs().begin(), p.coeffs().end());
    std::vector<Scalar> quot(static_cast<std::size_t>(p.degree() - q.degree()) + 1, Scalar::zero(d));
    const Scalar lead_inv = q.leading().inverse();
    const auto qc = q.coeffs();
    const int qdeg = q.degree();
    for (int k = p.degree() - qdeg; k >= 0; --k) {
        const Scalar& top = rem[static_cast<std::size_t>(k + qdeg)];
        if (top.is_zero()) continue;
        Scalar factor = top * lead_inv;
        for (int j = 0; j <= qdeg; ++j) {
            rem[static_cast<std::size_t>(k + j)] -= factor * qc[static_cast<std::size_t>(j)];
        }
        quot[static_cast<std::size_t>(k)] = std::move(factor);
    }
    rem.resize(static_cast<std::size_t>(qdeg));
    return {SymbolPoly(std::move(quot), d), SymbolPoly(std::move(rem), d)};
}

SymbolPoly exact_div(const SymbolPoly& p, const SymbolPoly& q) {
    auto [quot, rem] = divmod(p, q);
    if (!rem.is_zero()) {
        throw UsageError("polynomial division is not exact");
    }
    return quot;
}

SymbolPoly poly_gcd(const SymbolPoly& p, const SymbolPoly& q) {
    SymbolPoly a = p.monic();
    SymbolPoly b = q.monic();
    if (a.degree() < b.degree()) std::swap(a, b);
    // Fast exits: constants are units.
    if (b.degree() == 0) return b;
    while (!b.is_zero()) {
        SymbolPoly r = divmod(a, b).second.monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace pitm
