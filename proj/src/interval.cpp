#include <paradigms/interval.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace paradigms
{

namespace
{

constexpr double inf = std::numeric_limits<double>::infinity();
constexpr double max_finite = std::numeric_limits<double>::max();

// Below this magnitude the FMA residuals used for exactness checks may
// themselves underflow, so the enclosure falls back to one ulp each way.
constexpr double tiny = 0x1p-900;

double next_up(double x) noexcept
{
    return std::nextafter(x, inf);
}

double next_down(double x) noexcept
{
    return std::nextafter(x, -inf);
}

detail::Enclosure exact(double v) noexcept
{
    return {v, v};
}

// RN result r with err = sign of (exact - r).
detail::Enclosure from_residual(double r, double err) noexcept
{
    if (err > 0) {
        return {r, next_up(r)};
    }
    if (err < 0) {
        return {next_down(r), r};
    }
    return exact(r);
}

detail::Enclosure overflowed(double r) noexcept
{
    return r > 0 ? detail::Enclosure{max_finite, inf} : detail::Enclosure{-inf, -max_finite};
}

detail::Enclosure loose(double r) noexcept
{
    return {next_down(r), next_up(r)};
}

double canonical_zero(double v) noexcept
{
    // -0.0 + 0.0 == +0.0 under round-to-nearest.
    return v == 0.0 ? 0.0 : v;
}

// num / den for den strictly positive.
Interval div_positive(const Interval &num, const Interval &den) noexcept
{
    const double zl = num.lb(), zu = num.ub(), yl = den.lb(), yu = den.ub();
    if (zl >= 0) {
        return Interval::make(detail::enclose_div(zl, yu).lo, detail::enclose_div(zu, yl).hi);
    }
    if (zu <= 0) {
        return Interval::make(detail::enclose_div(zl, yl).lo, detail::enclose_div(zu, yu).hi);
    }
    return Interval::make(detail::enclose_div(zl, yl).lo, detail::enclose_div(zu, yl).hi);
}

} // namespace

namespace detail
{

Enclosure enclose_add(double a, double b) noexcept
{
    const double s = a + b;
    if (std::isinf(a) || std::isinf(b)) {
        return exact(s);
    }
    if (std::isinf(s)) {
        return overflowed(s);
    }
    // TwoSum: err is exactly (a + b) - s.
    const double bb = s - a;
    const double err = (a - (s - bb)) + (b - bb);
    return from_residual(s, err);
}

Enclosure enclose_mul(double a, double b) noexcept
{
    if (a == 0 || b == 0) {
        // Includes 0 * inf, which is resolved to 0.
        return exact(0.0);
    }
    const double p = a * b;
    if (std::isinf(a) || std::isinf(b)) {
        return exact(p);
    }
    if (std::isinf(p)) {
        return overflowed(p);
    }
    if (std::fabs(p) < tiny) {
        return loose(p);
    }
    return from_residual(p, std::fma(a, b, -p));
}

Enclosure enclose_div(double a, double b) noexcept
{
    if (a == 0) {
        return exact(0.0);
    }
    if (std::isinf(a) && std::isinf(b)) {
        return {-inf, inf};
    }
    const double q = a / b;
    if (std::isinf(a) || std::isinf(b)) {
        return exact(q);
    }
    if (std::isinf(q)) {
        return overflowed(q);
    }
    if (std::fabs(q) < tiny || std::fabs(a) < tiny) {
        return loose(q);
    }
    // a - q*b is exact here; exact quotient = q + r/b.
    const double r = std::fma(-q, b, a);
    return from_residual(q, b > 0 ? r : -r);
}

Enclosure enclose_sqrt(double a) noexcept
{
    if (a == 0 || std::isinf(a)) {
        return exact(std::sqrt(a));
    }
    const double r = std::sqrt(a);
    if (a < tiny) {
        return loose(r);
    }
    // r*r > a means r overshoots the exact root.
    return from_residual(r, -std::fma(r, r, -a));
}

} // namespace detail

Interval::Interval() noexcept : Interval(-inf, inf, false) {}

Interval Interval::entire() noexcept
{
    return Interval(-inf, inf, false);
}

Interval Interval::empty() noexcept
{
    return Interval(inf, -inf, true);
}

Interval Interval::make(double lb, double ub)
{
    if (std::isnan(lb) || std::isnan(ub)) {
        throw std::domain_error("interval bound is NaN");
    }
    if (lb > ub || lb == inf || ub == -inf) {
        return empty();
    }
    return Interval(canonical_zero(lb), canonical_zero(ub), false);
}

bool Interval::contains(double v) const noexcept
{
    return !empty_ && lb_ <= v && v <= ub_;
}

bool Interval::is_subset_of(const Interval &other) const noexcept
{
    if (empty_) {
        return true;
    }
    return !other.empty_ && other.lb_ <= lb_ && ub_ <= other.ub_;
}

bool Interval::is_bounded() const noexcept
{
    return !empty_ && std::isfinite(lb_) && std::isfinite(ub_);
}

double Interval::width() const noexcept
{
    if (empty_) {
        return 0.0;
    }
    if (!is_bounded()) {
        return inf;
    }
    return detail::enclose_add(ub_, -lb_).hi;
}

bool operator==(const Interval &a, const Interval &b) noexcept
{
    if (a.empty_ || b.empty_) {
        return a.empty_ == b.empty_;
    }
    return a.lb_ == b.lb_ && a.ub_ == b.ub_;
}

std::string Interval::to_string() const
{
    if (empty_) {
        return "[empty]";
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "[%.17g,%.17g]", lb_, ub_);
    return buf;
}

std::ostream &operator<<(std::ostream &os, const Interval &iv)
{
    return os << iv.to_string();
}

Interval intersect(const Interval &a, const Interval &b) noexcept
{
    if (a.is_empty() || b.is_empty()) {
        return Interval::empty();
    }
    return Interval::make(std::max(a.lb(), b.lb()), std::min(a.ub(), b.ub()));
}

Interval hull(const Interval &a, const Interval &b) noexcept
{
    if (a.is_empty()) {
        return b;
    }
    if (b.is_empty()) {
        return a;
    }
    return Interval::make(std::min(a.lb(), b.lb()), std::max(a.ub(), b.ub()));
}

Interval add_out(const Interval &a, const Interval &b) noexcept
{
    if (a.is_empty() || b.is_empty()) {
        return Interval::empty();
    }
    return Interval::make(detail::enclose_add(a.lb(), b.lb()).lo, detail::enclose_add(a.ub(), b.ub()).hi);
}

Interval neg(const Interval &a) noexcept
{
    if (a.is_empty()) {
        return a;
    }
    return Interval::make(-a.ub(), -a.lb());
}

Interval sub_out(const Interval &a, const Interval &b) noexcept
{
    return add_out(a, neg(b));
}

Interval mul_out(const Interval &a, const Interval &b) noexcept
{
    if (a.is_empty() || b.is_empty()) {
        return Interval::empty();
    }
    const detail::Enclosure products[] = {
        detail::enclose_mul(a.lb(), b.lb()),
        detail::enclose_mul(a.lb(), b.ub()),
        detail::enclose_mul(a.ub(), b.lb()),
        detail::enclose_mul(a.ub(), b.ub()),
    };
    double lo = inf, hi = -inf;
    for (const auto &p : products) {
        lo = std::min(lo, p.lo);
        hi = std::max(hi, p.hi);
    }
    return Interval::make(lo, hi);
}

Interval sqr_out(const Interval &a) noexcept
{
    if (a.is_empty()) {
        return a;
    }
    const double l = a.lb(), u = a.ub();
    if (l >= 0) {
        return Interval::make(detail::enclose_mul(l, l).lo, detail::enclose_mul(u, u).hi);
    }
    if (u <= 0) {
        return Interval::make(detail::enclose_mul(u, u).lo, detail::enclose_mul(l, l).hi);
    }
    return Interval::make(0.0, std::max(detail::enclose_mul(l, l).hi, detail::enclose_mul(u, u).hi));
}

Interval sqrt_out(const Interval &a) noexcept
{
    const Interval nonneg = intersect(a, Interval::make(0.0, inf));
    if (nonneg.is_empty()) {
        return nonneg;
    }
    return Interval::make(detail::enclose_sqrt(nonneg.lb()).lo, detail::enclose_sqrt(nonneg.ub()).hi);
}

Interval div_rel(const Interval &num, const Interval &den) noexcept
{
    if (num.is_empty() || den.is_empty()) {
        return Interval::empty();
    }
    if (den.lb() > 0) {
        return div_positive(num, den);
    }
    if (den.ub() < 0) {
        return neg(div_positive(num, neg(den)));
    }
    // From here on 0 is in den.
    if (num.contains(0.0)) {
        return Interval::entire();
    }
    if (den.lb() == 0 && den.ub() == 0) {
        return Interval::empty();
    }
    const bool zero_low = den.lb() == 0;
    const bool zero_high = den.ub() == 0;
    if (num.lb() > 0) {
        if (zero_low) {
            return Interval::make(detail::enclose_div(num.lb(), den.ub()).lo, inf);
        }
        if (zero_high) {
            return Interval::make(-inf, detail::enclose_div(num.lb(), den.lb()).hi);
        }
        return Interval::entire();
    }
    // num strictly negative.
    if (zero_low) {
        return Interval::make(-inf, detail::enclose_div(num.ub(), den.ub()).hi);
    }
    if (zero_high) {
        return Interval::make(detail::enclose_div(num.ub(), den.lb()).lo, inf);
    }
    return Interval::entire();
}

std::optional<std::pair<Interval, Interval>> bisect(const Interval &a) noexcept
{
    if (a.is_empty() || a.lb() == a.ub()) {
        return std::nullopt;
    }
    const double l = a.lb(), u = a.ub();
    double m;
    if (std::isinf(l) && std::isinf(u)) {
        m = 0.0;
    } else if (std::isinf(l)) {
        if (u > 0) {
            m = 0.0;
        } else {
            m = -0x1p52;
            while (m >= u && std::isfinite(m)) {
                m *= 2;
            }
            if (!std::isfinite(m)) {
                m = -max_finite;
            }
        }
    } else if (std::isinf(u)) {
        if (l < 0) {
            m = 0.0;
        } else {
            m = 0x1p52;
            while (m <= l && std::isfinite(m)) {
                m *= 2;
            }
            if (!std::isfinite(m)) {
                m = max_finite;
            }
        }
    } else {
        m = l / 2 + u / 2;
        if (m <= l) {
            m = next_up(l);
        } else if (m >= u) {
            m = next_down(u);
        }
    }
    if (!(l < m && m < u)) {
        return std::nullopt;
    }
    return std::pair{Interval::make(l, m), Interval::make(m, u)};
}

} // namespace paradigms
