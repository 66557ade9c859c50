#include "treach/scalar.hpp"

#include <cctype>
#include <cmath>

namespace treach {

double metric(const Scalar& a, const Scalar& b) {
    auto ex = [](const Scalar& s) {
        return s.is_bottom() ? 0.0 : std::exp(static_cast<double>(s.value()));
    };
    return std::fabs(ex(a) - ex(b));
}

std::string to_string(const Scalar& a) {
    if (a.is_bottom()) return "-inf";
    const Rational& r = a.value();
    if (boost::multiprecision::denominator(r) == 1)
        return boost::multiprecision::numerator(r).str();
    return r.str();
}

namespace {

boost::multiprecision::cpp_int parse_int(const std::string& s) {
    if (s.empty()) throw ParseError("empty integer literal");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw ParseError("bare sign in number: '" + s + "'");
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("invalid digit in number: '" + s + "'");
    return boost::multiprecision::cpp_int(s);
}

} // namespace

Scalar parse_scalar(const std::string& text) {
    if (text == "-inf") return Scalar::bottom();
    if (auto slash = text.find('/'); slash != std::string::npos) {
        auto num = parse_int(text.substr(0, slash));
        auto den = parse_int(text.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator: '" + text + "'");
        return Scalar{Rational(num, den)};
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        auto num = parse_int(digits);
        boost::multiprecision::cpp_int den = 1;
        for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
        return Scalar{Rational(num, den)};
    }
    return Scalar{Rational(parse_int(text))};
}

} // namespace treach
