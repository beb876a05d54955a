#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "thetaxi/io.hpp"

namespace thetaxi {

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

bool parse_double(const std::string& text, double& out) {
    if (text.empty()) return false;
    char* end = nullptr;
    out = std::strtod(text.c_str(), &end);
    return end == text.c_str() + text.size();
}

}  // namespace

std::string format_complex(Complex value) {
    const std::string re = format_double(value.real());
    std::string im = format_double(value.imag());
    if (!im.empty() && im[0] == '-') return re + im + "i";
    return re + "+" + im + "i";
}

Complex parse_complex(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw DomainError("MalformedComplex", "empty complex literal");

    const char last = t.back();
    if (last != 'i' && last != 'j') {
        double re = 0.0;
        if (!parse_double(t, re))
            throw DomainError("MalformedComplex", "cannot parse '" + text + "'");
        return {re, 0.0};
    }

    t.pop_back();  // drop the unit
    // split at the last +/- that is not part of an exponent and not leading
    size_t split = std::string::npos;
    for (size_t i = t.size(); i-- > 1;) {
        if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
            split = i;
            break;
        }
    }

    std::string re_part, im_part;
    if (split == std::string::npos) {
        re_part = "0";
        im_part = t;
    } else {
        re_part = t.substr(0, split);
        im_part = t.substr(split);
    }
    if (im_part.empty() || im_part == "+") im_part = "1";
    else if (im_part == "-") im_part = "-1";

    double re = 0.0, im = 0.0;
    if (!parse_double(re_part, re) || !parse_double(im_part, im))
        throw DomainError("MalformedComplex", "cannot parse '" + text + "'");
    return {re, im};
}

}  // namespace thetaxi
