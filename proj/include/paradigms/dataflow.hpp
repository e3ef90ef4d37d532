#ifndef PARADIGMS_DATAFLOW_HPP
#define PARADIGMS_DATAFLOW_HPP

#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace paradigms
{

using Item = std::int64_t;

// Raised for malformed networks: bad arity, unknown or foreign pipes, and
// pipes with more than one reader or writer. The message names the offender.
class NetworkError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Bounded FIFO queue of items carrying data from one node to another.
class Pipe
{
public:
    // Throws std::invalid_argument if capacity is 0.
    Pipe(std::string name, std::size_t capacity);

    const std::string &name() const noexcept { return name_; }
    std::size_t capacity() const noexcept { return capacity_; }
    std::size_t size() const noexcept { return items_.size(); }
    bool empty() const noexcept { return items_.empty(); }
    bool full() const noexcept { return items_.size() >= capacity_; }

    // put on a full pipe and peek/take on an empty one are programming
    // errors and throw std::logic_error.
    void put(Item v);
    Item peek() const;
    Item take();

private:
    std::string name_;
    std::size_t capacity_;
    std::deque<Item> items_;
};

// A firing unit. run() fires at most once: if any input is empty or any
// output is full it does nothing, otherwise it consumes from its inputs and
// emits on its outputs. New node kinds derive from this class.
class Node
{
public:
    virtual ~Node() = default;
    Node(const Node &) = delete;
    Node &operator=(const Node &) = delete;

    const std::string &name() const noexcept { return name_; }
    std::span<Pipe *const> inputs() const noexcept { return inputs_; }
    std::span<Pipe *const> outputs() const noexcept { return outputs_; }

    // Returns true iff the node fired.
    virtual bool run() = 0;

    std::size_t firings() const noexcept { return firings_; }
    std::size_t consumed() const noexcept { return consumed_; }
    std::size_t emitted() const noexcept { return emitted_; }

protected:
    Node(std::string name, std::vector<Pipe *> inputs, std::vector<Pipe *> outputs);

    // All inputs non-empty and all outputs non-full.
    bool can_fire() const noexcept;
    Item take(Pipe &p);
    void emit(Pipe &p, Item v);
    void count_firing() noexcept { ++firings_; }

private:
    std::string name_;
    std::vector<Pipe *> inputs_;
    std::vector<Pipe *> outputs_;
    std::size_t firings_ = 0;
    std::size_t consumed_ = 0;
    std::size_t emitted_ = 0;
};

// Emits multiplier * v for each v. Throws std::overflow_error if the product
// does not fit in an Item.
class Times final : public Node
{
public:
    Times(std::string name, Item multiplier, Pipe &in, Pipe &out);
    Item multiplier() const noexcept { return multiplier_; }
    bool run() override;

private:
    Item multiplier_;
};

// Merges two ascending streams into one ascending stream without
// duplicates. Consumes the smaller head, or both heads when they are equal.
class Merge final : public Node
{
public:
    Merge(std::string name, Pipe &first, Pipe &second, Pipe &out);
    bool run() override;
};

// Copies each item onto both outputs.
class Split final : public Node
{
public:
    Split(std::string name, Pipe &in, Pipe &first, Pipe &second);
    bool run() override;
};

// Pass-through that records every item it forwards.
class Probe final : public Node
{
public:
    Probe(std::string name, Pipe &in, Pipe &out);
    bool run() override;
    const std::vector<Item> &observations() const noexcept { return observations_; }

private:
    std::vector<Item> observations_;
};

// Pipes plus an ordered list of nodes. The node order is the order in which
// round-robin sweeps call run(). Every pipe has at most one writer node and
// at most one reader node; seeded items do not count as a writer.
class Network
{
public:
    Network() = default;
    Network(Network &&) noexcept = default;
    Network &operator=(Network &&) noexcept = default;

    // Throws NetworkError on a duplicate name, std::invalid_argument on
    // capacity 0.
    Pipe &add_pipe(std::string name, std::size_t capacity);
    // Throws NetworkError if the node uses a pipe that is not in this
    // network or that already has a reader/writer, or on a duplicate name.
    Node &add_node(std::unique_ptr<Node> node);

    template <typename N, typename... Args>
    N &emplace(Args &&...args)
    {
        auto owned = std::make_unique<N>(std::forward<Args>(args)...);
        N &ref = *owned;
        add_node(std::move(owned));
        return ref;
    }

    Pipe &pipe(std::string_view name);
    const Pipe &pipe(std::string_view name) const;
    Node &node(std::string_view name);
    const Node &node(std::string_view name) const;

    std::size_t num_pipes() const noexcept { return pipes_.size(); }
    std::size_t num_nodes() const noexcept { return nodes_.size(); }
    Node &node_at(std::size_t i) { return *nodes_.at(i); }
    const Node &node_at(std::size_t i) const { return *nodes_.at(i); }
    Pipe &pipe_at(std::size_t i) { return *pipes_.at(i); }
    const Pipe &pipe_at(std::size_t i) const { return *pipes_.at(i); }

    // Index (into the node list) of the pipe's reader/writer, or npos.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t reader_of(std::size_t pipe_index) const { return readers_.at(pipe_index); }
    std::size_t writer_of(std::size_t pipe_index) const { return writers_.at(pipe_index); }
    std::size_t index_of(const Pipe &p) const;

    // Rearranges the node list: new position k holds old node order[k].
    // Throws std::invalid_argument unless order is a permutation.
    void reorder(std::span<const std::size_t> order);

    // Probes in node-list order.
    std::vector<const Probe *> probes() const;

private:
    std::vector<std::unique_ptr<Pipe>> pipes_;
    std::vector<std::unique_ptr<Node>> nodes_;
    std::vector<std::size_t> readers_;
    std::vector<std::size_t> writers_;
};

struct RunStats {
    std::size_t attempts = 0; // run() calls
    std::size_t firings = 0;  // run() calls that returned true
    std::size_t readied = 0;  // nodes put on the ready set (blocked-set only)
    std::size_t sweeps = 0;   // completed sweeps (round-robin only)
};

// Optional early-stop test, checked after each sweep (round-robin) or each
// firing (blocked-set).
using StopCondition = std::function<bool()>;

// Calls run() on every node in list order, `sweeps` times. Stops early after
// a sweep in which no node fired, or when `stop` returns true.
RunStats run_roundrobin(Network &net, std::size_t sweeps, const StopCondition &stop = {});

// Keeps a ready set, initially every node in list order. A node that does
// not fire is parked until a pipe it touches changes; a firing re-readies
// the reader and writer of every pipe the node touches, itself included.
// Stops when the ready set empties, after max_firings firings, or when
// `stop` returns true.
RunStats run_blockedset(Network &net, std::size_t max_firings, const StopCondition &stop = {});

// Hamming's network: pipes a b c d x1 x2 f g h i, nodes
// m1 = merge(a, b -> c), m2 = merge(c, d -> x1), t2/t3/t5 = times 2/3/5
// (f -> a, g -> b, h -> d), sp1 = split(x2 -> h, i), sp2 = split(i -> f, g),
// p = probe(x1 -> x2), and x1 seeded with 1. The probe "p" observes the
// Hamming numbers in increasing order.
Network build_hamming(std::size_t capacity);

} // namespace paradigms

#endif
