#include "rfps/scalar.hpp"

#include <cctype>

#include "rfps/errors.hpp"

namespace rfps {

namespace {

std::size_t scan_digits(std::string_view text, std::size_t pos)
{
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])) != 0) {
        ++pos;
    }
    return pos;
}

} // namespace

Scalar parse_scalar(std::string_view text, std::size_t offset)
{
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        ++pos;
    }
    const std::size_t num_begin = pos;
    pos = scan_digits(text, pos);
    if (pos == num_begin) {
        throw parse_error("expected digits in rational '" + std::string(text) + "'", offset + pos);
    }
    if (pos < text.size() && text[pos] == '/') {
        const std::size_t den_begin = ++pos;
        pos = scan_digits(text, pos);
        if (pos == den_begin) {
            throw parse_error("expected denominator in rational '" + std::string(text) + "'",
                              offset + pos);
        }
        if (text.find_first_not_of('0', den_begin) >= pos) {
            throw parse_error("zero denominator in rational '" + std::string(text) + "'",
                              offset + den_begin);
        }
    }
    if (pos != text.size()) {
        throw parse_error("unexpected character in rational '" + std::string(text) + "'",
                          offset + pos);
    }
    // GMP rejects a leading '+'.
    std::string digits(text.front() == '+' ? text.substr(1) : text);
    Scalar value(digits, 10);
    value.canonicalize();
    return value;
}

std::string to_string(const Scalar& value)
{
    return value.get_str();
}

Scalar power(const Scalar& base, unsigned exponent)
{
    Scalar result = 1;
    Scalar b = base;
    while (exponent != 0) {
        if ((exponent & 1U) != 0) {
            result *= b;
        }
        exponent >>= 1U;
        if (exponent != 0) {
            b *= b;
        }
    }
    return result;
}

Scalar binomial(const Scalar& alpha, unsigned j)
{
    Scalar result = 1;
    for (unsigned i = 0; i < j; ++i) {
        result *= alpha - i;
        result /= i + 1;
    }
    return result;
}

} // namespace rfps
