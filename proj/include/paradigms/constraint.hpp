#ifndef PARADIGMS_CONSTRAINT_HPP
#define PARADIGMS_CONSTRAINT_HPP

#include <paradigms/interval.hpp>

#include <compare>
#include <cstddef>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace paradigms
{

// Identity of a real unknown within a ConstraintStore. Constraints that
// mention the same unknown hold the same VarId, so every contraction acts on
// the one shared domain.
struct VarId {
    std::size_t index;

    friend auto operator<=>(const VarId &, const VarId &) = default;
};

enum class ConstraintKind { leq, eq, sum, prod, square };

std::string_view to_string(ConstraintKind kind) noexcept;

// A primitive relation over a few unknowns together with its contraction
// operator. New relations are added by deriving from this class.
class Constraint
{
public:
    virtual ~Constraint() = default;

    virtual ConstraintKind kind() const noexcept = 0;

    std::span<const VarId> vars() const noexcept { return vars_; }

    // Applies the contraction operator to `domains` (indexed by VarId).
    // Each referenced domain is replaced by its intersection with the
    // projection of the relation, in declared order, using already-narrowed
    // peers. Returns false iff an empty interval results.
    virtual bool shrinc(std::span<Interval> domains) const = 0;

protected:
    explicit Constraint(std::vector<VarId> vars) : vars_(std::move(vars)) {}

private:
    std::vector<VarId> vars_;
};

// x <= y
class Leq final : public Constraint
{
public:
    Leq(VarId x, VarId y) : Constraint({x, y}) {}
    ConstraintKind kind() const noexcept override { return ConstraintKind::leq; }
    bool shrinc(std::span<Interval> domains) const override;
};

// x == y
class Eq final : public Constraint
{
public:
    Eq(VarId x, VarId y) : Constraint({x, y}) {}
    ConstraintKind kind() const noexcept override { return ConstraintKind::eq; }
    bool shrinc(std::span<Interval> domains) const override;
};

// x + y == z
class Sum final : public Constraint
{
public:
    Sum(VarId x, VarId y, VarId z) : Constraint({x, y, z}) {}
    ConstraintKind kind() const noexcept override { return ConstraintKind::sum; }
    bool shrinc(std::span<Interval> domains) const override;
};

// x * y == z
class Prod final : public Constraint
{
public:
    Prod(VarId x, VarId y, VarId z) : Constraint({x, y, z}) {}
    ConstraintKind kind() const noexcept override { return ConstraintKind::prod; }
    bool shrinc(std::span<Interval> domains) const override;
};

// x^2 == y
class Square final : public Constraint
{
public:
    Square(VarId x, VarId y) : Constraint({x, y}) {}
    ConstraintKind kind() const noexcept override { return ConstraintKind::square; }
    bool shrinc(std::span<Interval> domains) const override;
};

using Box = std::vector<Interval>;

// Owns the unknowns (their current domains and names) and the constraints
// connecting them. Single-owner: movable, not copyable.
class ConstraintStore
{
public:
    ConstraintStore() = default;
    ConstraintStore(ConstraintStore &&) noexcept = default;
    ConstraintStore &operator=(ConstraintStore &&) noexcept = default;

    VarId add_var(std::string name = {}, Interval initial = Interval::entire());

    // Takes ownership; throws std::invalid_argument if the constraint refers
    // to a VarId this store did not create.
    const Constraint &add(std::unique_ptr<Constraint> constraint);

    template <typename C, typename... Args>
    const Constraint &emplace(Args &&...args)
    {
        return add(std::make_unique<C>(std::forward<Args>(args)...));
    }

    std::size_t num_vars() const noexcept { return domains_.size(); }
    std::size_t num_constraints() const noexcept { return constraints_.size(); }

    const Interval &domain(VarId v) const { return domains_.at(v.index); }
    void set_domain(VarId v, Interval iv) { domains_.at(v.index) = iv; }
    const std::string &name(VarId v) const { return names_.at(v.index); }

    std::span<Interval> domains() noexcept { return domains_; }
    std::span<const Interval> domains() const noexcept { return domains_; }
    void assign_domains(std::span<const Interval> box);

    const Constraint &constraint(std::size_t i) const { return *constraints_.at(i); }
    // Indices of the constraints that mention v, each listed once.
    std::span<const std::size_t> constraints_on(VarId v) const { return watchers_.at(v.index); }

    bool any_empty() const noexcept;

private:
    std::vector<Interval> domains_;
    std::vector<std::string> names_;
    std::vector<std::unique_ptr<Constraint>> constraints_;
    std::vector<std::vector<std::size_t>> watchers_;
};

enum class PropagationStatus { fixpoint, inconsistent, budget_exhausted };

std::string_view to_string(PropagationStatus status) noexcept;

struct PropagationOutcome {
    PropagationStatus status;
    // Round-robin: full sweeps performed. Worklist: constraints dequeued.
    std::size_t rounds_used = 0;
    std::size_t shrinc_calls = 0;
};

inline constexpr std::size_t default_max_rounds = 1000;

// Sweeps the constraint list in order until a sweep changes no bound
// (fixpoint), some domain becomes empty (inconsistent), or max_rounds sweeps
// have run. Throws std::invalid_argument if max_rounds is 0.
PropagationOutcome propagate_roundrobin(ConstraintStore &store, std::size_t max_rounds = default_max_rounds);

// Same fixpoint as propagate_roundrobin, but only re-applies constraints
// whose variables changed. max_applications bounds the number of shrinc
// calls; the default is unbounded.
PropagationOutcome propagate_worklist(ConstraintStore &store,
                                      std::size_t max_applications = std::numeric_limits<std::size_t>::max());

// Branch and prune. Propagates, discards inconsistent boxes, and bisects the
// widest target until every target is at most eps wide (or can no longer be
// split). Returns the target intervals of each surviving box, left halves
// first. The store's domains are restored before returning.
// Throws std::invalid_argument unless eps > 0.
std::vector<Box> solve(ConstraintStore &store, std::span<const VarId> targets, double eps);

// The circle x^2 + y^2 = 1 intersected with the parabola y = x^2, decomposed
// into primitives: square(x, x2), square(y, y2), sum(x2, y2, one), eq(y, x2).
// With positive_x the constraint leq(half, x) is appended, where half is the
// constant 0.5. All unknowns start out entire.
struct CircleParabola {
    ConstraintStore store;
    VarId x;
    VarId y;
    VarId x2;
    VarId y2;
};

CircleParabola build_circle_parabola(bool positive_x);

} // namespace paradigms

#endif
