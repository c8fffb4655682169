#include "curv/rational.hpp"

#include <cstddef>
#include <stdexcept>

namespace curv {

namespace {

BigInt parse_digits(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("expected digits");
    BigInt v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad digit in number");
        v = v * 10 + (c - '0');
    }
    return v;
}

} // namespace

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty number");
    bool negative = false;
    if (text.front() == '+' || text.front() == '-') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty()) throw std::invalid_argument("sign with no number");

    Rational value;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_digits(text.substr(0, slash));
        BigInt den = parse_digits(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        value = Rational(num, den);
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (whole.empty() && frac.empty()) throw std::invalid_argument("lone decimal point");
        BigInt num = whole.empty() ? BigInt(0) : parse_digits(whole);
        BigInt den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        num = num * den + (frac.empty() ? BigInt(0) : parse_digits(frac));
        value = Rational(num, den);
    } else {
        value = Rational(parse_digits(text));
    }
    return negative ? -value : value;
}

std::string format_rational(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

std::string format_decimal(const Rational& r, int digits) {
    BigInt num = numerator(r);
    BigInt den = denominator(r);
    bool negative = num < 0;
    if (negative) num = -num;
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    // round half away from zero
    BigInt scaled = (num * scale * 2 + den) / (den * 2);
    BigInt whole = scaled / scale;
    BigInt frac = scaled % scale;
    std::string s;
    if (negative && scaled != 0) s += '-';
    s += whole.str();
    if (digits > 0) {
        std::string f = frac.str();
        s += '.';
        s += std::string(static_cast<std::size_t>(digits) - f.size(), '0');
        s += f;
    }
    return s;
}

BigInt floor_rational(const Rational& r) {
    BigInt quotient = numerator(r) / denominator(r);
    if (numerator(r) < 0 && quotient * denominator(r) != numerator(r)) --quotient;
    return quotient;
}

} // namespace curv
