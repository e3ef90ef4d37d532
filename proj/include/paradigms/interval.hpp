#ifndef PARADIGMS_INTERVAL_HPP
#define PARADIGMS_INTERVAL_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

namespace paradigms
{

// Closed interval [lb, ub] of reals with double bounds, or the empty set.
//
// Bounds are never NaN. lb may be -inf and ub may be +inf; a non-empty
// interval always holds at least one real, so [+inf, +inf] and [-inf, -inf]
// collapse to Empty. There is a single Empty representation, and -0.0 bounds
// are stored as +0.0.
class Interval
{
public:
    // Defaults to the entire real line: nothing is known.
    Interval() noexcept;

    static Interval entire() noexcept;
    static Interval empty() noexcept;
    // Throws std::domain_error on NaN. Returns Empty when lb > ub.
    static Interval make(double lb, double ub);
    static Interval point(double v) { return make(v, v); }

    bool is_empty() const noexcept { return empty_; }
    // Bounds of an Empty interval are unspecified; check is_empty() first.
    double lb() const noexcept { return lb_; }
    double ub() const noexcept { return ub_; }

    bool contains(double v) const noexcept;
    bool is_subset_of(const Interval &other) const noexcept;
    bool is_bounded() const noexcept;
    // Width rounded upward; +inf for unbounded intervals, 0 for Empty.
    double width() const noexcept;

    // Bitwise-identical bounds (Empty equals only Empty).
    friend bool operator==(const Interval &a, const Interval &b) noexcept;

    // "[lb,ub]" with 17 significant digits per bound, or "[empty]".
    std::string to_string() const;

private:
    Interval(double lb, double ub, bool empty) noexcept : lb_(lb), ub_(ub), empty_(empty) {}

    double lb_;
    double ub_;
    bool empty_;
};

std::ostream &operator<<(std::ostream &os, const Interval &iv);

Interval intersect(const Interval &a, const Interval &b) noexcept;
// Smallest interval containing both.
Interval hull(const Interval &a, const Interval &b) noexcept;

// Outward-rounded arithmetic. Each finite bound is the exact image bound
// rounded in the outward direction, so it is off by at most one ulp and
// exact whenever the image bound is representable. Empty operands give Empty.
Interval add_out(const Interval &a, const Interval &b) noexcept;
Interval sub_out(const Interval &a, const Interval &b) noexcept;
Interval mul_out(const Interval &a, const Interval &b) noexcept;
Interval sqr_out(const Interval &a) noexcept;
// Square root of the non-negative part; Empty if a lies entirely below 0.
Interval sqrt_out(const Interval &a) noexcept;
Interval neg(const Interval &a) noexcept;

// Relational division: the hull of { x : x * d = n for some n in num, d in den }.
// When den contains 0 the set can be two-sided or unbounded; its hull is
// returned, which may be the entire line. Empty when no x exists.
Interval div_rel(const Interval &num, const Interval &den) noexcept;

// Splits a non-empty interval into [lb, m] and [m, ub] with lb < m < ub.
// Finite intervals split at the midpoint. A half-unbounded interval splits at
// 0 when 0 lies strictly inside, otherwise at +/-2^52 or further out. Returns
// nullopt when no double lies strictly between the bounds.
std::optional<std::pair<Interval, Interval>> bisect(const Interval &a) noexcept;

namespace detail
{

// Tightest double enclosure [lo, hi] of the exact result of a single
// operation on doubles, from one round-to-nearest evaluation plus an
// error-free residual. lo == hi iff the result is representable.
struct Enclosure {
    double lo;
    double hi;
};

Enclosure enclose_add(double a, double b) noexcept;
Enclosure enclose_mul(double a, double b) noexcept;
Enclosure enclose_div(double a, double b) noexcept;
Enclosure enclose_sqrt(double a) noexcept;

} // namespace detail

} // namespace paradigms

#endif
