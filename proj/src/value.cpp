#include "graphtda/value.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace graphtda {

Value::Value(double x)
    : kind_(Kind::finite), x_(x)
{
    if (!std::isfinite(x))
        throw std::invalid_argument("Value: non-finite double; use the named sentinels");
    if (x == 0.0)
        x_ = 0.0; // fold -0.0 so defaulted == agrees with <=>
}

double Value::finite() const
{
    if (kind_ != Kind::finite)
        throw std::domain_error("Value::finite() on an infinite sentinel");
    return x_;
}

double Value::as_double() const
{
    switch (kind_) {
    case Kind::neg_inf: return -HUGE_VAL;
    case Kind::pos_inf: return HUGE_VAL;
    default: return x_;
    }
}

Value Value::operator-() const
{
    switch (kind_) {
    case Kind::neg_inf: return pos_inf();
    case Kind::pos_inf: return neg_inf();
    default: return Value(-x_);
    }
}

std::strong_ordering operator<=>(Value const& a, Value const& b)
{
    if (a.kind_ != b.kind_)
        return a.kind_ <=> b.kind_;
    if (a.kind_ != Value::Kind::finite || a.x_ == b.x_)
        return std::strong_ordering::equal;
    return a.x_ < b.x_ ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string Value::to_string() const
{
    if (kind_ == Kind::neg_inf)
        return "-inf";
    if (kind_ == Kind::pos_inf)
        return "inf";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x_);
    return std::string(buf, end);
}

Value Value::parse(std::string_view text)
{
    if (text == "inf" || text == "+inf")
        return pos_inf();
    if (text == "-inf")
        return neg_inf();
    double x = 0.0;
    auto const* first = text.data();
    auto const* last = first + text.size();
    if (!text.empty() && *first == '+')
        ++first;
    auto [ptr, ec] = std::from_chars(first, last, x);
    if (ec != std::errc() || ptr != last || first == last || !std::isfinite(x))
        throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    return Value(x);
}

Value abs_diff(Value a, Value b)
{
    if (a.is_finite() && b.is_finite())
        return Value(std::abs(a.finite() - b.finite()));
    if (a == b)
        return Value(0.0);
    return Value::pos_inf();
}

Value half_span(Value birth, Value death)
{
    if (birth.is_finite() && death.is_finite())
        return Value((death.finite() - birth.finite()) / 2.0);
    if (birth == death)
        return Value(0.0);
    return Value::pos_inf();
}

} // namespace graphtda
