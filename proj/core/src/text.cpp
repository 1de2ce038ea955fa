#include "pitm/text.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "pitm/errors.hpp"

namespace pitm {

std::string to_string(const SymbolPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto coeffs = p.coeffs();
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        const Scalar& c = coeffs[j];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (j == 0) {
            out += to_string(c);
            continue;
        }
        const std::string power = j == 1 ? "v" : "v^" + std::to_string(j);
        if (c.is_one()) {
            out += power;
        } else if (c.is_rational() || sgn(c.rational_part()) == 0) {
            out += to_string(c) + "*" + power;
        } else {
            out += "(" + to_string(c) + ")*" + power;
        }
    }
    return out;
}

std::string to_string(const RingElement& e) {
    std::string out = "(" + to_string(e.num()) + ")";
    if (!e.den().is_one()) out += "/(" + to_string(e.den()) + ")";
    return out;
}

std::string to_string(const TimeSeries& u) {
    std::string out;
    for (int j = 0; j <= u.order(); ++j) {
        out += "t^" + std::to_string(j) + ": " + to_string(u[j]) + "\n";
    }
    return out;
}

namespace {

// Recursive-descent parser:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | '+' unary | power
//   power  := atom ('^' integer)?
//   atom   := integer | 'v' | 'sqrt' '(' integer ')' | '(' expr ')'
class ExpressionParser {
public:
    ExpressionParser(std::string_view text, const Context& ctx) : text_(text), ctx_(ctx) {}

    RingElement parse() {
        RingElement e = expr();
        skip_blanks();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        std::ostringstream msg;
        msg << what << " at column " << pos_ + 1 << " in '" << text_ << "'";
        throw ParseError(msg.str());
    }

    void skip_blanks() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_blanks();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    BigInt integer() {
        skip_blanks();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return BigInt(std::string(text_.substr(start, pos_ - start)), 10);
    }

    RingElement expr() {
        RingElement acc = term();
        for (;;) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    RingElement term() {
        RingElement acc = unary();
        for (;;) {
            if (accept('*')) {
                acc *= unary();
            } else if (accept('/')) {
                RingElement divisor = unary();
                if (divisor.is_zero()) fail("division by zero");
                acc /= divisor;
            } else {
                return acc;
            }
        }
    }

    RingElement unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    RingElement power() {
        RingElement base = atom();
        if (!accept('^')) return base;
        const BigInt e = integer();
        if (!e.fits_sint_p() || e > 4096) fail("exponent too large");
        long m = e.get_si();
        RingElement acc(Scalar::one(ctx_.d), ctx_);
        while (m > 0) {
            if (m & 1) acc *= base;
            m >>= 1;
            if (m > 0) base *= base;
        }
        return acc;
    }

    RingElement sqrt_of(const BigInt& k) {
        if (sgn(k) <= 0) fail("sqrt argument must be positive");
        // k = m^2 * d' with d' square-free; d' must be 1 or the context surd.
        BigInt rest = k;
        BigInt root = 1;
        for (BigInt p = 2; p * p <= rest; ++p) {
            while (rest % (p * p) == 0) {
                rest /= p * p;
                root *= p;
            }
        }
        if (rest == 1) return RingElement(Scalar(BigRational(root), ctx_.d), ctx_);
        if (rest != ctx_.d) fail("sqrt(" + k.get_str() + ") is outside Q(sqrt(" + std::to_string(ctx_.d) + "))");
        return RingElement(Scalar(BigRational(0), BigRational(root), ctx_.d), ctx_);
    }

    RingElement atom() {
        skip_blanks();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return RingElement(Scalar(BigRational(integer()), ctx_.d), ctx_);
        }
        if (accept('(')) {
            RingElement inner = expr();
            expect(')');
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            const std::string_view name = text_.substr(start, pos_ - start);
            if (name == "v") return RingElement::symbol(ctx_);
            if (name == "sqrt") {
                expect('(');
                const BigInt k = integer();
                expect(')');
                return sqrt_of(k);
            }
            pos_ = start;
            fail("unknown name '" + std::string(name) + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    const Context& ctx_;
    std::size_t pos_ = 0;
};

}  // namespace

RingElement parse_ring_element(std::string_view text, const Context& ctx) {
    return ExpressionParser(text, ctx).parse();
}

TimeSeries parse_series(std::string_view text, const Context& ctx, std::optional<int> order) {
    std::vector<std::pair<int, RingElement>> terms;
    std::set<int> seen;
    int max_power = 0;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
        if (line.empty() || line.front() == '#') continue;
        const auto colon = line.find(':');
        if (line.substr(0, 2) != "t^" || colon == std::string_view::npos) {
            throw ParseError("line " + std::to_string(line_no) + ": expected 't^j: <expression>'");
        }
        int power = 0;
        try {
            const BigRational p = parse_rational(line.substr(2, colon - 2));
            if (p.get_den() != 1 || p < 0 || p > 100000) throw ParseError("bad power");
            power = static_cast<int>(p.get_num().get_si());
        } catch (const ParseError&) {
            throw ParseError("line " + std::to_string(line_no) + ": invalid power of t");
        }
        if (!seen.insert(power).second) {
            throw ParseError("line " + std::to_string(line_no) + ": duplicate t^" + std::to_string(power) + " line");
        }
        try {
            terms.emplace_back(power, parse_ring_element(line.substr(colon + 1), ctx));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
        max_power = std::max(max_power, power);
    }
    const int n = order.value_or(max_power);
    TimeSeries out(ctx, n);
    for (auto& [power, value] : terms) {
        if (power > n) {
            if (value.is_zero()) continue;
            throw ParseError("term t^" + std::to_string(power) + " exceeds truncation order " + std::to_string(n));
        }
        out.set(power, std::move(value));
    }
    return out;
}

}  // namespace pitm
