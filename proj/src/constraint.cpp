#include <paradigms/constraint.hpp>

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace paradigms
{

namespace
{

constexpr double inf = std::numeric_limits<double>::infinity();

// d <- d ∩ projection; false if that empties d.
bool narrow(Interval &d, const Interval &projection)
{
    d = intersect(d, projection);
    return !d.is_empty();
}

bool any_empty_of(std::span<const Interval> domains, std::span<const VarId> vars)
{
    return std::any_of(vars.begin(), vars.end(), [&](VarId v) { return domains[v.index].is_empty(); });
}

struct Application {
    bool consistent;
    // Vars whose bounds moved, in declared order, possibly repeated.
    std::vector<VarId> changed;
};

Application apply(const Constraint &c, std::span<Interval> domains)
{
    const auto vars = c.vars();
    std::vector<Interval> before;
    before.reserve(vars.size());
    for (VarId v : vars) {
        before.push_back(domains[v.index]);
    }
    Application result{c.shrinc(domains), {}};
    for (std::size_t k = 0; k < vars.size(); ++k) {
        if (!(domains[vars[k].index] == before[k])) {
            result.changed.push_back(vars[k]);
        }
    }
    return result;
}

} // namespace

std::string_view to_string(ConstraintKind kind) noexcept
{
    switch (kind) {
        case ConstraintKind::leq:
            return "leq";
        case ConstraintKind::eq:
            return "eq";
        case ConstraintKind::sum:
            return "sum";
        case ConstraintKind::prod:
            return "prod";
        case ConstraintKind::square:
            return "square";
    }
    return "?";
}

std::string_view to_string(PropagationStatus status) noexcept
{
    switch (status) {
        case PropagationStatus::fixpoint:
            return "fixpoint";
        case PropagationStatus::inconsistent:
            return "inconsistent";
        case PropagationStatus::budget_exhausted:
            return "budget_exhausted";
    }
    return "?";
}

bool Leq::shrinc(std::span<Interval> d) const
{
    if (any_empty_of(d, vars())) {
        return false;
    }
    Interval &x = d[vars()[0].index];
    Interval &y = d[vars()[1].index];
    return narrow(x, Interval::make(-inf, y.ub())) && narrow(y, Interval::make(x.lb(), inf));
}

bool Eq::shrinc(std::span<Interval> d) const
{
    Interval &x = d[vars()[0].index];
    Interval &y = d[vars()[1].index];
    const Interval both = intersect(x, y);
    x = both;
    y = both;
    return !both.is_empty();
}

bool Sum::shrinc(std::span<Interval> d) const
{
    if (any_empty_of(d, vars())) {
        return false;
    }
    Interval &x = d[vars()[0].index];
    Interval &y = d[vars()[1].index];
    Interval &z = d[vars()[2].index];
    return narrow(x, sub_out(z, y)) && narrow(y, sub_out(z, x)) && narrow(z, add_out(x, y));
}

bool Prod::shrinc(std::span<Interval> d) const
{
    if (any_empty_of(d, vars())) {
        return false;
    }
    Interval &x = d[vars()[0].index];
    Interval &y = d[vars()[1].index];
    Interval &z = d[vars()[2].index];
    return narrow(x, div_rel(z, y)) && narrow(y, div_rel(z, x)) && narrow(z, mul_out(x, y));
}

bool Square::shrinc(std::span<Interval> d) const
{
    if (any_empty_of(d, vars())) {
        return false;
    }
    Interval &x = d[vars()[0].index];
    Interval &y = d[vars()[1].index];
    if (!narrow(y, sqr_out(x))) {
        return false;
    }
    // x lies in +root(y) or -root(y); keep the hull of what survives of each.
    const Interval root = sqrt_out(y);
    x = hull(intersect(x, root), intersect(x, neg(root)));
    return !x.is_empty();
}

VarId ConstraintStore::add_var(std::string name, Interval initial)
{
    domains_.push_back(initial);
    names_.push_back(std::move(name));
    watchers_.emplace_back();
    return VarId{domains_.size() - 1};
}

const Constraint &ConstraintStore::add(std::unique_ptr<Constraint> constraint)
{
    if (!constraint) {
        throw std::invalid_argument("null constraint");
    }
    for (VarId v : constraint->vars()) {
        if (v.index >= domains_.size()) {
            throw std::invalid_argument("constraint refers to unknown variable #" + std::to_string(v.index));
        }
    }
    const std::size_t index = constraints_.size();
    for (VarId v : constraint->vars()) {
        auto &w = watchers_[v.index];
        if (w.empty() || w.back() != index) {
            w.push_back(index);
        }
    }
    constraints_.push_back(std::move(constraint));
    return *constraints_.back();
}

void ConstraintStore::assign_domains(std::span<const Interval> box)
{
    if (box.size() != domains_.size()) {
        throw std::invalid_argument("box size does not match the number of variables");
    }
    std::copy(box.begin(), box.end(), domains_.begin());
}

bool ConstraintStore::any_empty() const noexcept
{
    return std::any_of(domains_.begin(), domains_.end(), [](const Interval &d) { return d.is_empty(); });
}

PropagationOutcome propagate_roundrobin(ConstraintStore &store, std::size_t max_rounds)
{
    if (max_rounds == 0) {
        throw std::invalid_argument("max_rounds must be at least 1");
    }
    PropagationOutcome out{PropagationStatus::budget_exhausted};
    if (store.any_empty()) {
        out.status = PropagationStatus::inconsistent;
        return out;
    }
    while (out.rounds_used < max_rounds) {
        ++out.rounds_used;
        bool changed = false;
        for (std::size_t i = 0; i < store.num_constraints(); ++i) {
            ++out.shrinc_calls;
            const Application a = apply(store.constraint(i), store.domains());
            if (!a.consistent) {
                out.status = PropagationStatus::inconsistent;
                return out;
            }
            changed = changed || !a.changed.empty();
        }
        if (!changed) {
            out.status = PropagationStatus::fixpoint;
            return out;
        }
    }
    return out;
}

PropagationOutcome propagate_worklist(ConstraintStore &store, std::size_t max_applications)
{
    PropagationOutcome out{PropagationStatus::fixpoint};
    if (store.any_empty()) {
        out.status = PropagationStatus::inconsistent;
        return out;
    }
    const std::size_t n = store.num_constraints();
    std::deque<std::size_t> queue;
    std::vector<bool> queued(n, true);
    for (std::size_t i = 0; i < n; ++i) {
        queue.push_back(i);
    }
    while (!queue.empty()) {
        if (out.shrinc_calls == max_applications) {
            out.status = PropagationStatus::budget_exhausted;
            return out;
        }
        const std::size_t i = queue.front();
        queue.pop_front();
        queued[i] = false;
        ++out.rounds_used;
        ++out.shrinc_calls;
        const Application a = apply(store.constraint(i), store.domains());
        if (!a.consistent) {
            out.status = PropagationStatus::inconsistent;
            return out;
        }
        // The constraint itself is re-enqueued too: shrinc need not be idempotent.
        for (VarId v : a.changed) {
            for (std::size_t j : store.constraints_on(v)) {
                if (!queued[j]) {
                    queued[j] = true;
                    queue.push_back(j);
                }
            }
        }
    }
    return out;
}

std::vector<Box> solve(ConstraintStore &store, std::span<const VarId> targets, double eps)
{
    if (!(eps > 0)) {
        throw std::invalid_argument("eps must be positive");
    }
    for (VarId t : targets) {
        if (t.index >= store.num_vars()) {
            throw std::invalid_argument("unknown target variable #" + std::to_string(t.index));
        }
    }
    const Box original(store.domains().begin(), store.domains().end());
    std::vector<Box> pending{original};
    std::vector<Box> solutions;
    while (!pending.empty()) {
        store.assign_domains(pending.back());
        pending.pop_back();
        if (propagate_worklist(store).status == PropagationStatus::inconsistent) {
            continue;
        }
        const auto domains = store.domains();
        VarId widest{};
        double widest_width = -1;
        for (VarId t : targets) {
            const double w = domains[t.index].width();
            if (w > eps && w > widest_width) {
                widest = t;
                widest_width = w;
            }
        }
        auto halves = widest_width < 0 ? std::nullopt : bisect(domains[widest.index]);
        if (!halves) {
            Box box;
            for (VarId t : targets) {
                box.push_back(domains[t.index]);
            }
            solutions.push_back(std::move(box));
            continue;
        }
        Box right(domains.begin(), domains.end());
        Box left = right;
        left[widest.index] = halves->first;
        right[widest.index] = halves->second;
        pending.push_back(std::move(right));
        pending.push_back(std::move(left));
    }
    store.assign_domains(original);
    return solutions;
}

CircleParabola build_circle_parabola(bool positive_x)
{
    CircleParabola cp;
    auto &s = cp.store;
    cp.x = s.add_var("x");
    cp.y = s.add_var("y");
    cp.x2 = s.add_var("x2");
    cp.y2 = s.add_var("y2");
    const VarId one = s.add_var("_1", Interval::point(1.0));
    s.emplace<Square>(cp.x, cp.x2);
    s.emplace<Square>(cp.y, cp.y2);
    s.emplace<Sum>(cp.x2, cp.y2, one);
    s.emplace<Eq>(cp.y, cp.x2);
    if (positive_x) {
        const VarId half = s.add_var("_0", Interval::point(0.5));
        s.emplace<Leq>(half, cp.x);
    }
    return cp;
}

} // namespace paradigms
