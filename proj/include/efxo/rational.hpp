//
// Copyright 2026 the efxo authors.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <stdexcept>
#include <string>

namespace efxo {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational edge value. Never a float: the fractional hardness gadget
/// needs a value strictly between 0 and 1 with exact comparisons.
using Rat = boost::rational<BigInt>;

inline bool is_zero(const Rat& r) { return r.numerator() == 0; }
inline bool is_one(const Rat& r) { return r.numerator() == 1 && r.denominator() == 1; }

/// Parses "p" or "p/q" with arbitrary-precision integers. q must be positive.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(BigInt(s));
        }
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den <= 0) throw std::runtime_error("rational denominator must be positive: " + s);
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw;
    } catch (const std::exception&) {
        throw std::runtime_error("malformed rational: " + s);
    }
}

/// Canonical form: "p" when the denominator is 1, else "p/q" reduced.
inline std::string format_rat(const Rat& r) {
    std::string out = r.numerator().str();
    if (r.denominator() != 1) {
        out += "/";
        out += r.denominator().str();
    }
    return out;
}

} // namespace efxo
