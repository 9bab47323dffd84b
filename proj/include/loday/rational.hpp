/*
 * rational.hpp
 * ------------
 * Exact rational scalar type used everywhere in loday.
 *
 * All verification paths are exact: a check passes iff its defect is the
 * zero tensor over Q. No floating point appears anywhere in the library.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "loday/errors.hpp"

namespace loday {

using Scalar = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

inline bool is_zero(const Scalar& x) { return x.is_zero(); }

/// Parse "p", "-p" or "p/q". Rejects zero denominators and anything that is
/// not an exact integer fraction (floats are not accepted anywhere).
inline Scalar parse_rational(const std::string& text) {
    auto bad = [&](const std::string& why) -> ParseError {
        return ParseError("invalid rational literal \"" + text + "\": " + why);
    };
    if (text.empty()) throw bad("empty");
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Scalar(Int(text));
        }
        if (text.find('/', slash + 1) != std::string::npos) throw bad("more than one '/'");
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw bad("zero denominator");
        return Scalar(num, den);  // cpp_rational canonicalizes sign and gcd
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw bad("not an integer fraction");
    }
}

/// Canonical text form: "p" when the denominator is 1, else "p/q" with q > 0.
inline std::string rational_to_string(const Scalar& x) {
    const Int num = numerator(x);
    const Int den = denominator(x);
    std::string s = num.str();
    if (den != 1) s += "/" + den.str();
    return s;
}

}  // namespace loday
