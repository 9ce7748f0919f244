#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace moduli {

using BigInt = boost::multiprecision::cpp_int;

// Exact arbitrary-precision rational, the coefficient field for everything
// in this library. Kept canonical by the backend: reduced, denominator > 0.
// No operation anywhere rounds.
using Rat = boost::multiprecision::cpp_rational;

// The backend rejects negative denominators outright; normalize the sign
// before handing the pair over.
inline Rat make_rational(BigInt num, BigInt den) {
    if (den == 0)
        throw std::domain_error("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(std::move(num), std::move(den));
}

// Accepts "p" or "p/q" with optional leading signs.
inline Rat parse_rational(const std::string& text) {
    const auto bad = [&]() -> std::domain_error {
        return std::domain_error("not a rational: '" + text + "' (expected \"p\" or \"p/q\")");
    };
    const auto parse_int = [&](const std::string& s) {
        if (s.empty())
            throw bad();
        std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (start == s.size())
            throw bad();
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw bad();
        return BigInt(s);
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos)
        return Rat(parse_int(text));
    BigInt p = parse_int(text.substr(0, slash));
    BigInt q = parse_int(text.substr(slash + 1));
    if (q == 0)
        throw std::domain_error("zero denominator in '" + text + "'");
    return make_rational(std::move(p), std::move(q));
}

inline std::string to_string(const Rat& r) {
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    BigInt result = 1;
    for (int i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;
    }
    return result;
}

} // namespace moduli
