#include <paradigms/dataflow.hpp>

#include <algorithm>
#include <deque>

namespace paradigms
{

Pipe::Pipe(std::string name, std::size_t capacity) : name_(std::move(name)), capacity_(capacity)
{
    if (capacity_ == 0) {
        throw std::invalid_argument("pipe '" + name_ + "': capacity must be at least 1");
    }
}

void Pipe::put(Item v)
{
    if (full()) {
        throw std::logic_error("put on full pipe '" + name_ + "'");
    }
    items_.push_back(v);
}

Item Pipe::peek() const
{
    if (empty()) {
        throw std::logic_error("peek on empty pipe '" + name_ + "'");
    }
    return items_.front();
}

Item Pipe::take()
{
    const Item v = peek();
    items_.pop_front();
    return v;
}

Node::Node(std::string name, std::vector<Pipe *> inputs, std::vector<Pipe *> outputs)
    : name_(std::move(name)), inputs_(std::move(inputs)), outputs_(std::move(outputs))
{
}

bool Node::can_fire() const noexcept
{
    return std::none_of(inputs_.begin(), inputs_.end(), [](const Pipe *p) { return p->empty(); })
           && std::none_of(outputs_.begin(), outputs_.end(), [](const Pipe *p) { return p->full(); });
}

Item Node::take(Pipe &p)
{
    ++consumed_;
    return p.take();
}

void Node::emit(Pipe &p, Item v)
{
    ++emitted_;
    p.put(v);
}

Times::Times(std::string name, Item multiplier, Pipe &in, Pipe &out)
    : Node(std::move(name), {&in}, {&out}), multiplier_(multiplier)
{
}

bool Times::run()
{
    if (!can_fire()) {
        return false;
    }
    Item product;
    if (__builtin_mul_overflow(multiplier_, inputs()[0]->peek(), &product)) {
        throw std::overflow_error("node '" + name() + "': product overflows 64 bits");
    }
    take(*inputs()[0]);
    emit(*outputs()[0], product);
    count_firing();
    return true;
}

Merge::Merge(std::string name, Pipe &first, Pipe &second, Pipe &out)
    : Node(std::move(name), {&first, &second}, {&out})
{
}

bool Merge::run()
{
    if (!can_fire()) {
        return false;
    }
    Pipe &first = *inputs()[0];
    Pipe &second = *inputs()[1];
    const Item a = first.peek();
    const Item b = second.peek();
    if (a < b) {
        emit(*outputs()[0], take(first));
    } else if (b < a) {
        emit(*outputs()[0], take(second));
    } else {
        take(first);
        emit(*outputs()[0], take(second));
    }
    count_firing();
    return true;
}

Split::Split(std::string name, Pipe &in, Pipe &first, Pipe &second)
    : Node(std::move(name), {&in}, {&first, &second})
{
}

bool Split::run()
{
    if (!can_fire()) {
        return false;
    }
    const Item v = take(*inputs()[0]);
    emit(*outputs()[0], v);
    emit(*outputs()[1], v);
    count_firing();
    return true;
}

Probe::Probe(std::string name, Pipe &in, Pipe &out) : Node(std::move(name), {&in}, {&out}) {}

bool Probe::run()
{
    if (!can_fire()) {
        return false;
    }
    const Item v = take(*inputs()[0]);
    observations_.push_back(v);
    emit(*outputs()[0], v);
    count_firing();
    return true;
}

Pipe &Network::add_pipe(std::string name, std::size_t capacity)
{
    for (const auto &p : pipes_) {
        if (p->name() == name) {
            throw NetworkError("duplicate pipe '" + name + "'");
        }
    }
    pipes_.push_back(std::make_unique<Pipe>(std::move(name), capacity));
    readers_.push_back(npos);
    writers_.push_back(npos);
    return *pipes_.back();
}

std::size_t Network::index_of(const Pipe &p) const
{
    for (std::size_t i = 0; i < pipes_.size(); ++i) {
        if (pipes_[i].get() == &p) {
            return i;
        }
    }
    return npos;
}

Node &Network::add_node(std::unique_ptr<Node> node)
{
    if (!node) {
        throw std::invalid_argument("null node");
    }
    for (const auto &n : nodes_) {
        if (n->name() == node->name()) {
            throw NetworkError("duplicate node '" + node->name() + "'");
        }
    }
    const std::size_t self = nodes_.size();
    // Validate everything before recording any endpoint.
    auto readers = readers_;
    auto writers = writers_;
    auto claim = [&](std::vector<std::size_t> &owners, const Pipe *p, const char *role) {
        const std::size_t i = index_of(*p);
        if (i == npos) {
            throw NetworkError("node '" + node->name() + "' uses pipe '" + p->name() + "' from another network");
        }
        if (owners[i] != npos) {
            const std::string holder = owners[i] == self ? node->name() : nodes_[owners[i]]->name();
            throw NetworkError("pipe '" + p->name() + "' already has " + role + " '" + holder + "'; node '"
                               + node->name() + "' cannot also be its " + role);
        }
        owners[i] = self;
    };
    for (const Pipe *p : node->inputs()) {
        claim(readers, p, "reader");
    }
    for (const Pipe *p : node->outputs()) {
        claim(writers, p, "writer");
    }
    readers_ = std::move(readers);
    writers_ = std::move(writers);
    nodes_.push_back(std::move(node));
    return *nodes_.back();
}

Pipe &Network::pipe(std::string_view name)
{
    return const_cast<Pipe &>(std::as_const(*this).pipe(name));
}

const Pipe &Network::pipe(std::string_view name) const
{
    for (const auto &p : pipes_) {
        if (p->name() == name) {
            return *p;
        }
    }
    throw NetworkError("unknown pipe '" + std::string(name) + "'");
}

Node &Network::node(std::string_view name)
{
    return const_cast<Node &>(std::as_const(*this).node(name));
}

const Node &Network::node(std::string_view name) const
{
    for (const auto &n : nodes_) {
        if (n->name() == name) {
            return *n;
        }
    }
    throw NetworkError("unknown node '" + std::string(name) + "'");
}

void Network::reorder(std::span<const std::size_t> order)
{
    if (order.size() != nodes_.size()) {
        throw std::invalid_argument("reorder: wrong permutation length");
    }
    std::vector<bool> seen(order.size(), false);
    for (std::size_t k : order) {
        if (k >= order.size() || seen[k]) {
            throw std::invalid_argument("reorder: not a permutation");
        }
        seen[k] = true;
    }
    std::vector<std::size_t> new_position(order.size());
    std::vector<std::unique_ptr<Node>> reordered;
    reordered.reserve(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        new_position[order[k]] = k;
        reordered.push_back(std::move(nodes_[order[k]]));
    }
    nodes_ = std::move(reordered);
    for (auto *owners : {&readers_, &writers_}) {
        for (auto &o : *owners) {
            if (o != npos) {
                o = new_position[o];
            }
        }
    }
}

std::vector<const Probe *> Network::probes() const
{
    std::vector<const Probe *> out;
    for (const auto &n : nodes_) {
        if (const auto *p = dynamic_cast<const Probe *>(n.get())) {
            out.push_back(p);
        }
    }
    return out;
}

RunStats run_roundrobin(Network &net, std::size_t sweeps, const StopCondition &stop)
{
    RunStats stats;
    while (stats.sweeps < sweeps) {
        const std::size_t before = stats.firings;
        for (std::size_t i = 0; i < net.num_nodes(); ++i) {
            ++stats.attempts;
            if (net.node_at(i).run()) {
                ++stats.firings;
            }
        }
        ++stats.sweeps;
        if (stats.firings == before || (stop && stop())) {
            break;
        }
    }
    return stats;
}

RunStats run_blockedset(Network &net, std::size_t max_firings, const StopCondition &stop)
{
    RunStats stats;
    const std::size_t n = net.num_nodes();
    std::deque<std::size_t> ready;
    std::vector<bool> is_ready(n, false);
    auto make_ready = [&](std::size_t i) {
        if (i != Network::npos && !is_ready[i]) {
            is_ready[i] = true;
            ready.push_back(i);
            ++stats.readied;
        }
    };
    for (std::size_t i = 0; i < n; ++i) {
        make_ready(i);
    }
    while (!ready.empty() && stats.firings < max_firings) {
        const std::size_t i = ready.front();
        ready.pop_front();
        is_ready[i] = false;
        ++stats.attempts;
        Node &node = net.node_at(i);
        if (!node.run()) {
            continue;
        }
        ++stats.firings;
        for (auto pipes : {node.inputs(), node.outputs()}) {
            for (const Pipe *p : pipes) {
                const std::size_t k = net.index_of(*p);
                make_ready(net.reader_of(k));
                make_ready(net.writer_of(k));
            }
        }
        if (stop && stop()) {
            break;
        }
    }
    return stats;
}

Network build_hamming(std::size_t capacity)
{
    Network net;
    for (const char *name : {"a", "b", "c", "d", "x1", "x2", "f", "g", "h", "i"}) {
        net.add_pipe(name, capacity);
    }
    auto p = [&](const char *name) -> Pipe & { return net.pipe(name); };
    net.emplace<Merge>("m1", p("a"), p("b"), p("c"));
    net.emplace<Merge>("m2", p("c"), p("d"), p("x1"));
    net.emplace<Times>("t2", 2, p("f"), p("a"));
    net.emplace<Times>("t3", 3, p("g"), p("b"));
    net.emplace<Times>("t5", 5, p("h"), p("d"));
    net.emplace<Split>("sp1", p("x2"), p("h"), p("i"));
    net.emplace<Split>("sp2", p("i"), p("f"), p("g"));
    net.emplace<Probe>("p", p("x1"), p("x2"));
    p("x1").put(1);
    return net;
}

} // namespace paradigms
