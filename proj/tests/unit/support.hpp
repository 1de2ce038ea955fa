#pragma once

#include <random>
#include <string>

#include "pitm/pitm.hpp"

namespace pitm::test {

inline const Context kConst{1, DerivationMode::constant()};
inline const Context kExp6{6, DerivationMode::exponential(BigRational(1))};

inline RingElement elem(const std::string& text, const Context& ctx = kConst) {
    return parse_ring_element(text, ctx);
}

inline TimeSeries series(const std::string& text, const Context& ctx, int order) {
    return parse_series(text, ctx, order);
}

/// Seeded generator of small exact values.
class Random {
public:
    explicit Random(unsigned seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    BigRational rational(int span = 5) {
        return make_rational(integer(-span, span), integer(1, span));
    }

    Scalar scalar(std::int64_t d) {
        if (d == 1 || integer(0, 2) == 0) return Scalar(rational(), d);
        return Scalar(rational(), rational(3), d);
    }

    SymbolPoly poly(std::int64_t d, int max_degree) {
        std::vector<Scalar> c;
        const int deg = integer(0, max_degree);
        for (int j = 0; j <= deg; ++j) c.push_back(integer(0, 3) == 0 ? Scalar::zero(d) : scalar(d));
        return SymbolPoly(std::move(c), d);
    }

    SymbolPoly nonzero_poly(std::int64_t d, int max_degree) {
        for (;;) {
            SymbolPoly p = poly(d, max_degree);
            if (!p.is_zero()) return p;
        }
    }

    RingElement element(const Context& ctx, int max_degree = 2) {
        return RingElement(poly(ctx.d, max_degree), nonzero_poly(ctx.d, max_degree), ctx);
    }

    RingElement nonzero_element(const Context& ctx, int max_degree = 2) {
        for (;;) {
            RingElement e = element(ctx, max_degree);
            if (!e.is_zero()) return e;
        }
    }

    /// Polynomial coefficients only, which keeps series arithmetic cheap.
    TimeSeries poly_series(const Context& ctx, int order, int max_degree = 2) {
        TimeSeries u(ctx, order);
        for (int j = 0; j <= order; ++j) {
            if (integer(0, 2) == 0) continue;
            u.set(j, RingElement(poly(ctx.d, max_degree), ctx));
        }
        return u;
    }

    TimeSeries rational_series(const Context& ctx, int order) {
        TimeSeries u(ctx, order);
        for (int j = 0; j <= order; ++j) {
            if (integer(0, 2) == 0) continue;
            u.set(j, element(ctx, 1));
        }
        return u;
    }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

}  // namespace pitm::test
