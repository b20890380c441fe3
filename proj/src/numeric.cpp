#include "snrep/numeric.hpp"

#include "snrep/errors.hpp"

#include <cctype>

namespace snrep {

BigInt factorial(int n) {
    if (n < 0) {
        throw PreconditionError("factorial: argument must be nonnegative, got " + std::to_string(n));
    }
    BigInt result = 1;
    for (int i = 2; i <= n; ++i) {
        result *= i;
    }
    return result;
}

BigInt pow_int(const BigInt& base, int exp) {
    if (exp < 0) {
        throw PreconditionError("pow_int: exponent must be nonnegative, got " + std::to_string(exp));
    }
    BigInt result = 1;
    BigInt b = base;
    int e = exp;
    while (e > 0) {
        if (e & 1) {
            result *= b;
        }
        e >>= 1;
        if (e > 0) {
            b *= b;
        }
    }
    return result;
}

std::string to_decimal(const BigInt& value) {
    return value.str();
}

std::string to_fraction(const BigRat& value) {
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

namespace {

bool is_integer_token(const std::string& s, size_t begin, size_t end) {
    if (begin >= end) {
        return false;
    }
    size_t i = begin;
    if (s[i] == '-') {
        ++i;
        if (i == end) {
            return false;
        }
    }
    for (; i < end; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

} // namespace

BigRat parse_rational(const std::string& text) {
    const size_t slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(text, 0, text.size())) {
            throw ParseError("invalid rational \"" + text + "\": expected \"p\" or \"p/q\"");
        }
        return BigRat(BigInt(text));
    }
    if (!is_integer_token(text, 0, slash) || !is_integer_token(text, slash + 1, text.size())) {
        throw ParseError("invalid rational \"" + text + "\": expected \"p\" or \"p/q\"");
    }
    const BigInt num(text.substr(0, slash));
    const BigInt den(text.substr(slash + 1));
    if (den <= 0) {
        throw ParseError("invalid rational \"" + text + "\": denominator must be positive");
    }
    return BigRat(num, den);
}

BigInt parse_bigint(const std::string& text) {
    if (!is_integer_token(text, 0, text.size())) {
        throw ParseError("invalid integer \"" + text + "\"");
    }
    return BigInt(text);
}

} // namespace snrep
