#include "nilgrade/scalar.hpp"

#include "nilgrade/errors.hpp"

#include <cctype>

namespace nilgrade {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

Scalar parse_scalar(std::string_view text) {
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
        throw ParseError("invalid rational literal '" + std::string(text) + "'");

    std::string n(num);
    if (n.front() == '+') n.erase(0, 1);
    Integer p(n, 10);
    Integer q(std::string(den), 10);
    if (q == 0) throw ParseError("zero denominator in rational literal '" + std::string(text) + "'");
    Scalar value(p, q);
    value.canonicalize();
    return value;
}

std::string to_string(const Scalar& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

} // namespace nilgrade
