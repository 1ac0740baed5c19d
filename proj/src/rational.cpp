#include "capcodes/rational.hpp"

#include <cctype>

#include "capcodes/errors.hpp"

namespace capcodes {

namespace {

std::int64_t parse_int(const std::string& s) {
    require(!s.empty(), ErrorKind::Parse, "empty number");
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        fail(ErrorKind::Parse, "bad number: " + s);
    }
    require(used == s.size(), ErrorKind::Parse, "bad number: " + s);
    return v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    if (auto slash = text.find('/'); slash != std::string::npos) {
        const auto den = parse_int(text.substr(slash + 1));
        require(den != 0, ErrorKind::Parse, "zero denominator");
        return Rational(parse_int(text.substr(0, slash)), den);
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
        const std::string frac = text.substr(dot + 1);
        require(frac.size() <= 12, ErrorKind::Parse, "too many decimal places");
        for (char c : frac) require(std::isdigit(static_cast<unsigned char>(c)), ErrorKind::Parse, "bad decimal");
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        const std::string whole = text.substr(0, dot);
        const bool neg = !whole.empty() && whole[0] == '-';
        const std::int64_t w = (whole.empty() || whole == "-") ? 0 : parse_int(whole);
        const std::int64_t f = frac.empty() ? 0 : parse_int(frac);
        return Rational(w * scale + (neg ? -f : f), scale);
    }
    return Rational(parse_int(text));
}

}  // namespace capcodes
