// Test-only reference computations. Nothing here calls into the code paths
// it is used to check: exact arithmetic goes through Boost.Multiprecision,
// Hamming numbers come from a triple loop, and random constraint stores are
// built around a planted exact solution.
#ifndef PARADIGMS_TESTS_ORACLES_HPP
#define PARADIGMS_TESTS_ORACLES_HPP

#include <paradigms/constraint.hpp>
#include <paradigms/interval.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace oracle
{

using Rng = std::mt19937_64;

// 400 bits holds every sum and product of two doubles whose magnitudes lie
// in [2^-60, 2^60] exactly.
using Exact = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<400, boost::multiprecision::digit_base_2>, boost::multiprecision::et_off>;

inline constexpr double inf = std::numeric_limits<double>::infinity();

// Does iv contain the exact real value v?
inline bool contains(const paradigms::Interval &iv, const Exact &v)
{
    if (iv.is_empty()) {
        return false;
    }
    const bool above_lb = std::isinf(iv.lb()) || Exact(iv.lb()) <= v;
    const bool below_ub = std::isinf(iv.ub()) || v <= Exact(iv.ub());
    return above_lb && below_ub;
}

// All 2^a 3^b 5^c <= limit, ascending.
inline std::vector<std::int64_t> hamming_upto(std::int64_t limit)
{
    std::vector<std::int64_t> out;
    for (std::int64_t p2 = 1; p2 <= limit; p2 *= 2) {
        for (std::int64_t p3 = p2; p3 <= limit; p3 *= 3) {
            for (std::int64_t p5 = p3; p5 <= limit; p5 *= 5) {
                out.push_back(p5);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::int64_t> first_hamming(std::size_t n)
{
    std::int64_t limit = 16;
    for (;;) {
        auto all = hamming_upto(limit);
        if (all.size() >= n) {
            all.resize(n);
            return all;
        }
        limit *= 4;
    }
}

inline bool is_5_smooth(std::int64_t v)
{
    if (v < 1) {
        return false;
    }
    for (std::int64_t p : {2, 3, 5}) {
        while (v % p == 0) {
            v /= p;
        }
    }
    return v == 1;
}

inline double uniform(Rng &rng, double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline bool chance(Rng &rng, double p)
{
    return std::bernoulli_distribution(p)(rng);
}

// Finite double drawn from a mix of regimes: small integers, zeros, plain
// reals, and log-uniform magnitudes in [2^-40, 2^40].
inline double random_finite(Rng &rng)
{
    switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
        case 0:
            return static_cast<double>(std::uniform_int_distribution<int>(-8, 8)(rng));
        case 1:
            return uniform(rng, -100.0, 100.0);
        case 2:
            return std::ldexp(static_cast<double>(std::uniform_int_distribution<int>(-4096, 4096)(rng)), -10);
        case 3:
            return 0.0;
        default: {
            const double mag = std::exp2(uniform(rng, -40.0, 40.0));
            return chance(rng, 0.5) ? mag : -mag;
        }
    }
}

// Non-empty interval, occasionally half- or fully unbounded.
inline paradigms::Interval random_interval(Rng &rng, double p_infinite = 0.1)
{
    double a = random_finite(rng), b = random_finite(rng);
    if (a > b) {
        std::swap(a, b);
    }
    if (chance(rng, p_infinite)) {
        a = -inf;
    }
    if (chance(rng, p_infinite)) {
        b = inf;
    }
    return paradigms::Interval::make(a, b);
}

// A finite member of a non-empty interval, hitting the endpoints now and then.
inline double sample_in(Rng &rng, const paradigms::Interval &iv)
{
    double lo = iv.lb(), hi = iv.ub();
    if (std::isinf(lo)) {
        lo = std::min(hi, 0.0) - 1e3;
    }
    if (std::isinf(hi)) {
        hi = std::max(lo, 0.0) + 1e3;
    }
    if (chance(rng, 0.05)) {
        return lo;
    }
    if (chance(rng, 0.05)) {
        return hi;
    }
    return std::clamp(lo + uniform(rng, 0.0, 1.0) * (hi - lo), lo, hi);
}

// ---------------------------------------------------------------------------
// Random constraint stores with a planted exact solution.
//
// Values are dyadic (k * 2^-4 with small k) so that every sum, product and
// square used below is exact in double arithmetic.

struct PlantedStore {
    paradigms::ConstraintStore store;
    std::vector<double> solution;
    // For resampling: each var is a base var (free) or derived from others.
    struct Recipe {
        paradigms::ConstraintKind kind{}; // eq (a copy), sum, prod or square when derived
        std::size_t a = 0, b = 0;
        bool derived = false;
    };
    std::vector<Recipe> recipes;
};

inline double random_dyadic(Rng &rng, int max_k = 48)
{
    return std::ldexp(static_cast<double>(std::uniform_int_distribution<int>(-max_k, max_k)(rng)), -4);
}

// Domain around a known value: either entire, or value minus/plus random
// dyadic margins (possibly zero, possibly unbounded on one side).
inline paradigms::Interval domain_around(Rng &rng, double value)
{
    if (chance(rng, 0.15)) {
        return paradigms::Interval::entire();
    }
    const double lo = chance(rng, 0.1) ? -inf : value - std::fabs(random_dyadic(rng, 64));
    const double hi = chance(rng, 0.1) ? inf : value + std::fabs(random_dyadic(rng, 64));
    return paradigms::Interval::make(lo, hi);
}

inline double apply_recipe(const PlantedStore::Recipe &r, const std::vector<double> &values)
{
    switch (r.kind) {
        case paradigms::ConstraintKind::sum:
            return values[r.a] + values[r.b];
        case paradigms::ConstraintKind::prod:
            return values[r.a] * values[r.b];
        case paradigms::ConstraintKind::eq:
            return values[r.a];
        default:
            return values[r.a] * values[r.a];
    }
}

// Up to max_constraints constraints over base vars plus derived vars. Base
// vars take part in prod and square only, which keeps products exact.
inline PlantedStore planted_store(Rng &rng, std::size_t max_constraints = 10)
{
    using paradigms::ConstraintKind;
    using paradigms::VarId;
    PlantedStore ps;
    auto &s = ps.store;
    const std::size_t n_base = std::uniform_int_distribution<std::size_t>(2, 4)(rng);
    for (std::size_t k = 0; k < n_base; ++k) {
        ps.solution.push_back(random_dyadic(rng));
        ps.recipes.push_back({});
    }
    const std::size_t n_constraints = std::uniform_int_distribution<std::size_t>(1, max_constraints)(rng);
    std::vector<std::unique_ptr<paradigms::Constraint>> constraints;
    auto pick = [&](std::size_t upto) { return std::uniform_int_distribution<std::size_t>(0, upto - 1)(rng); };
    for (std::size_t c = 0; c < n_constraints; ++c) {
        const int kind = std::uniform_int_distribution<int>(0, 4)(rng);
        const std::size_t n = ps.solution.size();
        if (kind == 0) { // leq between two vars in value order
            std::size_t a = pick(n), b = pick(n);
            if (ps.solution[a] > ps.solution[b]) {
                std::swap(a, b);
            }
            constraints.push_back(std::make_unique<paradigms::Leq>(VarId{a}, VarId{b}));
        } else if (kind == 1) { // eq between equal-valued vars, else a fresh copy
            const std::size_t a = pick(n);
            std::size_t b = n;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != a && ps.solution[k] == ps.solution[a] && chance(rng, 0.5)) {
                    b = k;
                }
            }
            if (b == n) {
                ps.solution.push_back(ps.solution[a]);
                ps.recipes.push_back({ConstraintKind::eq, a, a, true});
            }
            constraints.push_back(std::make_unique<paradigms::Eq>(VarId{a}, VarId{b}));
        } else {
            PlantedStore::Recipe r;
            r.derived = true;
            if (kind == 2) {
                r.kind = ConstraintKind::sum;
                r.a = pick(n);
                r.b = pick(n);
            } else if (kind == 3) {
                r.kind = ConstraintKind::prod;
                r.a = pick(n_base);
                r.b = pick(n_base);
            } else {
                r.kind = ConstraintKind::square;
                r.a = pick(n_base);
            }
            const std::size_t out = ps.solution.size();
            ps.solution.push_back(apply_recipe(r, ps.solution));
            ps.recipes.push_back(r);
            if (r.kind == ConstraintKind::sum) {
                constraints.push_back(std::make_unique<paradigms::Sum>(VarId{r.a}, VarId{r.b}, VarId{out}));
            } else if (r.kind == ConstraintKind::prod) {
                constraints.push_back(std::make_unique<paradigms::Prod>(VarId{r.a}, VarId{r.b}, VarId{out}));
            } else {
                constraints.push_back(std::make_unique<paradigms::Square>(VarId{r.a}, VarId{out}));
            }
        }
    }
    for (double v : ps.solution) {
        s.add_var({}, domain_around(rng, v));
    }
    std::shuffle(constraints.begin(), constraints.end(), rng);
    for (auto &c : constraints) {
        s.add(std::move(c));
    }
    return ps;
}

// Arbitrary store: random domains (any regime, unbounded sides included) and
// random constraints. Often inconsistent; useful for fixpoint comparisons.
inline paradigms::ConstraintStore random_store(Rng &rng, std::size_t max_constraints = 10)
{
    using paradigms::VarId;
    paradigms::ConstraintStore s;
    const std::size_t n_vars = std::uniform_int_distribution<std::size_t>(2, 6)(rng);
    for (std::size_t k = 0; k < n_vars; ++k) {
        s.add_var({}, chance(rng, 0.2) ? paradigms::Interval::entire() : random_interval(rng, 0.15));
    }
    auto pick = [&] { return VarId{std::uniform_int_distribution<std::size_t>(0, n_vars - 1)(rng)}; };
    const std::size_t n_constraints = std::uniform_int_distribution<std::size_t>(1, max_constraints)(rng);
    for (std::size_t c = 0; c < n_constraints; ++c) {
        switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
            case 0:
                s.emplace<paradigms::Leq>(pick(), pick());
                break;
            case 1:
                s.emplace<paradigms::Eq>(pick(), pick());
                break;
            case 2:
                s.emplace<paradigms::Sum>(pick(), pick(), pick());
                break;
            case 3:
                s.emplace<paradigms::Prod>(pick(), pick(), pick());
                break;
            default:
                s.emplace<paradigms::Square>(pick(), pick());
                break;
        }
    }
    return s;
}

// Does the tuple satisfy every constraint of the store exactly?
inline bool satisfies(const paradigms::ConstraintStore &s, const std::vector<double> &v)
{
    using paradigms::ConstraintKind;
    for (std::size_t i = 0; i < s.num_constraints(); ++i) {
        const auto &c = s.constraint(i);
        const auto ids = c.vars();
        const Exact x = v[ids[0].index];
        const Exact y = v[ids[1].index];
        bool ok = false;
        switch (c.kind()) {
            case ConstraintKind::leq:
                ok = x <= y;
                break;
            case ConstraintKind::eq:
                ok = x == y;
                break;
            case ConstraintKind::sum:
                ok = x + y == Exact(v[ids[2].index]);
                break;
            case ConstraintKind::prod:
                ok = x * y == Exact(v[ids[2].index]);
                break;
            case ConstraintKind::square:
                ok = x * x == y;
                break;
        }
        if (!ok) {
            return false;
        }
    }
    return true;
}

inline bool inside(std::span<const paradigms::Interval> box, const std::vector<double> &v)
{
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (!box[k].contains(v[k])) {
            return false;
        }
    }
    return true;
}

// Up to `want` exact solutions inside the store's current box, found by
// redrawing base vars (and copies) near the planted values and recomputing
// derived vars. The planted solution itself is always included.
inline std::vector<std::vector<double>> sample_solutions(Rng &rng, const PlantedStore &ps, std::size_t want,
                                                         std::size_t max_tries)
{
    std::vector<std::vector<double>> out{ps.solution};
    const auto box = ps.store.domains();
    std::vector<double> v(ps.solution.size());
    for (std::size_t t = 0; t < max_tries && out.size() < want; ++t) {
        for (std::size_t k = 0; k < v.size(); ++k) {
            const auto &r = ps.recipes[k];
            if (r.derived) {
                v[k] = apply_recipe(r, v);
            } else if (chance(rng, 0.3)) {
                v[k] = ps.solution[k];
            } else {
                v[k] = ps.solution[k] + std::ldexp(static_cast<double>(std::uniform_int_distribution<int>(-64, 64)(rng)), -4);
            }
        }
        if (inside(box, v) && satisfies(ps.store, v)) {
            out.push_back(v);
        }
    }
    return out;
}

} // namespace oracle

#endif
