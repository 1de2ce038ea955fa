#include "pitm/laplace.hpp"

#include "pitm/errors.hpp"
#include "pitm/text.hpp"

namespace pitm {
namespace {

BigRational factorial(int j) {
    BigInt f = 1;
    for (int i = 2; i <= j; ++i) f *= i;
    return BigRational(f);
}

}  // namespace

SDomainSeries::SDomainSeries(Context ctx, int order)
    : terms_(static_cast<std::size_t>(order) + 1, RingElement(ctx)), order_(order), ctx_(std::move(ctx)) {
    if (order < 0) throw UsageError("truncation order must be >= 0");
}

void SDomainSeries::set_term(int j, RingElement value) {
    if (!(value.context() == ctx_)) throw UsageError("term context does not match the s-domain series");
    terms_.at(static_cast<std::size_t>(j)) = std::move(value);
}

bool SDomainSeries::is_zero() const {
    for (const auto& t : terms_) {
        if (!t.is_zero()) return false;
    }
    return true;
}

SDomainSeries laplace(const TimeSeries& u) {
    SDomainSeries image(u.context(), u.order());
    for (int j = 0; j <= u.order(); ++j) image.set_term(j, u[j]);
    image.set_truncation_loss(u.truncation_loss());
    return image;
}

SDomainSeries div_by_s(const SDomainSeries& image) {
    // c_j j!/s^{j+1} / s = (c_j/(j+1)) (j+1)!/s^{j+2}
    const int n = image.order();
    const auto d = image.context().d;
    SDomainSeries out(image.context(), n);
    for (int j = 0; j < n; ++j) {
        out.set_term(j + 1, image.term(j).scaled(Scalar(make_rational(1, j + 1), d)));
    }
    out.set_truncation_loss(image.truncation_loss() || !image.term(n).is_zero());
    return out;
}

TimeSeries inverse_laplace(const SDomainSeries& image) {
    TimeSeries u(image.context(), image.order());
    for (int j = 0; j <= image.order(); ++j) u.set(j, image.term(j));
    u.set_truncation_loss(image.truncation_loss());
    return u;
}

TimeSeries lt_integral(const TimeSeries& u) { return inverse_laplace(div_by_s(laplace(u))); }

std::string to_string(const SDomainSeries& image) {
    std::string out;
    const auto d = image.context().d;
    for (int j = 0; j <= image.order(); ++j) {
        out += "s^-" + std::to_string(j + 1) + ": " + to_string(image.term(j).scaled(Scalar(factorial(j), d))) + "\n";
    }
    return out;
}

}  // namespace pitm
