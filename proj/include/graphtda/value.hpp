#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace graphtda {

/// Extended real used for weights and filtration values.
///
/// Holds either a finite double or one of the two sentinels -inf / +inf.
/// The order is total: -inf < every finite value < +inf. Non-finite doubles
/// are rejected at construction, so infinities only ever enter through the
/// named factories.
class Value
{
public:
    enum class Kind : std::uint8_t { neg_inf = 0, finite = 1, pos_inf = 2 };

    Value() = default;
    Value(double x); // NOLINT: implicit by intent, weights are written as literals

    static Value neg_inf() { return Value(Kind::neg_inf); }
    static Value pos_inf() { return Value(Kind::pos_inf); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::finite; }
    bool is_neg_inf() const { return kind_ == Kind::neg_inf; }
    bool is_pos_inf() const { return kind_ == Kind::pos_inf; }

    /// The finite payload; throws std::domain_error on a sentinel.
    double finite() const;

    /// IEEE view (sentinels map to +-HUGE_VAL). Only for rendering.
    double as_double() const;

    Value operator-() const;

    friend bool operator==(Value const&, Value const&) = default;
    friend std::strong_ordering operator<=>(Value const& a, Value const& b);

    /// "inf", "-inf", or the shortest round-trip decimal.
    std::string to_string() const;

    /// Accepts the output of to_string(); throws std::invalid_argument.
    static Value parse(std::string_view text);

private:
    explicit Value(Kind k) : kind_(k) {}

    Kind kind_ = Kind::finite;
    double x_ = 0.0;
};

/// |a - b| with equal sentinels at distance 0 and any other sentinel
/// involvement at distance +inf.
Value abs_diff(Value a, Value b);

/// (death - birth) / 2, the cost of sending (birth, death) to the diagonal.
Value half_span(Value birth, Value death);

} // namespace graphtda
