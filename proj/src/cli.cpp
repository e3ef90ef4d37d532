#include <paradigms/cli.hpp>

#include <paradigms/constraint.hpp>
#include <paradigms/dataflow.hpp>
#include <paradigms/network_json.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

namespace paradigms::cli
{

namespace
{

// Sweep budget per requested item; firings for the blocked-set scheduler
// are scaled by the node count so both schedulers get comparable budgets.
constexpr std::size_t sweeps_per_item = 100;

struct Drive {
    RunStats stats;
    bool budget_hit;
};

Drive drive(Network &net, const RunConfig &cfg, const StopCondition &stop)
{
    const std::size_t sweeps = sweeps_per_item * cfg.count;
    if (cfg.scheduler == Scheduler::roundrobin) {
        const RunStats stats = run_roundrobin(net, sweeps, stop);
        return {stats, stats.sweeps == sweeps};
    }
    const std::size_t firings = sweeps * std::max<std::size_t>(net.num_nodes(), 1);
    const RunStats stats = run_blockedset(net, firings, stop);
    return {stats, stats.firings == firings};
}

void print_items(std::ostream &out, const std::vector<Item> &items, std::size_t limit)
{
    const std::size_t n = std::min(limit, items.size());
    for (std::size_t k = 0; k < n; ++k) {
        out << items[k] << '\n';
    }
}

} // namespace

void validate(const RunConfig &cfg)
{
    if (cfg.count < 1) {
        throw std::invalid_argument("count must be at least 1");
    }
    if (cfg.capacity < 1) {
        throw std::invalid_argument("capacity must be at least 1");
    }
    if (!(cfg.eps > 0)) {
        throw std::invalid_argument("eps must be positive");
    }
}

int cmd_hamming(const RunConfig &cfg, std::ostream &out, std::ostream &err)
{
    validate(cfg);
    Network net = build_hamming(cfg.capacity);
    const auto &probe = dynamic_cast<const Probe &>(net.node("p"));
    const auto done = [&] { return probe.observations().size() >= cfg.count; };
    const Drive d = drive(net, cfg, done);
    print_items(out, probe.observations(), cfg.count);
    if (!done()) {
        err << "hamming: " << (d.budget_hit ? "budget exhausted" : "network stalled") << " after "
            << probe.observations().size() << " of " << cfg.count << " items (try a larger --capacity)\n";
        return exit_code::budget_exhausted;
    }
    return exit_code::ok;
}

int cmd_circle_parabola(const RunConfig &cfg, std::ostream &out, std::ostream &err)
{
    validate(cfg);
    CircleParabola cp = build_circle_parabola(cfg.positive_x);
    auto &store = cp.store;
    const auto print_box = [&](const Interval &x, const Interval &y) {
        out << store.name(cp.x) << ": " << x << '\n' << store.name(cp.y) << ": " << y << '\n';
    };
    if (!cfg.positive_x) {
        if (propagate_roundrobin(store).status == PropagationStatus::inconsistent) {
            err << "circle-parabola: constraint system is inconsistent\n";
            return exit_code::inconsistent;
        }
        print_box(store.domain(cp.x), store.domain(cp.y));
        return exit_code::ok;
    }
    const VarId targets[] = {cp.x, cp.y};
    const auto boxes = solve(store, targets, cfg.eps);
    if (boxes.empty()) {
        err << "circle-parabola: constraint system is inconsistent\n";
        return exit_code::inconsistent;
    }
    for (std::size_t k = 0; k < boxes.size(); ++k) {
        if (k > 0) {
            out << '\n';
        }
        print_box(boxes[k][0], boxes[k][1]);
    }
    return exit_code::ok;
}

int cmd_run_network(const RunConfig &cfg, std::ostream &out, std::ostream &err)
{
    validate(cfg);
    Network net = load_network(cfg.path);
    const auto probes = net.probes();
    const auto done = [&] {
        return std::all_of(probes.begin(), probes.end(),
                           [&](const Probe *p) { return p->observations().size() >= cfg.count; });
    };
    const Drive d = drive(net, cfg, done);
    for (const Probe *p : probes) {
        // Headers only disambiguate; a single probe prints bare items.
        if (probes.size() > 1) {
            out << '[' << p->name() << "]\n";
        }
        print_items(out, p->observations(), cfg.count);
    }
    if (d.budget_hit && !done()) {
        err << "run-network: budget exhausted before every probe observed " << cfg.count << " items\n";
        return exit_code::budget_exhausted;
    }
    return exit_code::ok;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Dataflow and interval-constraint paradigms as a class library"};
    app.require_subcommand(1);

    RunConfig cfg;
    const std::map<std::string, Scheduler> schedulers{{"roundrobin", Scheduler::roundrobin},
                                                      {"blockedset", Scheduler::blockedset}};

    auto *hamming = app.add_subcommand("hamming", "Print the Hamming numbers from the dataflow network");
    hamming->add_option("--count", cfg.count, "Number of items to print")->check(CLI::PositiveNumber);
    hamming->add_option("--capacity", cfg.capacity, "Capacity of every pipe")->check(CLI::PositiveNumber);
    hamming->add_option("--scheduler", cfg.scheduler, "roundrobin or blockedset")
        ->transform(CLI::CheckedTransformer(schedulers, CLI::ignore_case));

    auto *circle = app.add_subcommand("circle-parabola", "Intersect x^2 + y^2 = 1 with y = x^2");
    circle->add_flag("--positive-x", cfg.positive_x, "Add 0.5 <= x and split down to --eps");
    circle->add_option("--eps", cfg.eps, "Target width for solve")->check(CLI::PositiveNumber);

    auto *network = app.add_subcommand("run-network", "Run a dataflow network described in JSON");
    network->add_option("path", cfg.path, "Network description file")->required()->check(CLI::ExistingFile);
    network->add_option("--count", cfg.count, "Items to collect per probe")->check(CLI::PositiveNumber);
    network->add_option("--scheduler", cfg.scheduler, "roundrobin or blockedset")
        ->transform(CLI::CheckedTransformer(schedulers, CLI::ignore_case));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return exit_code::usage;
    }

    try {
        if (hamming->parsed()) {
            cfg.command = Command::hamming;
            return cmd_hamming(cfg, out, err);
        }
        if (circle->parsed()) {
            cfg.command = Command::circle_parabola;
            return cmd_circle_parabola(cfg, out, err);
        }
        cfg.command = Command::run_network;
        return cmd_run_network(cfg, out, err);
    } catch (const NetworkError &e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const std::overflow_error &e) {
        err << "error: " << e.what() << '\n';
        return exit_code::budget_exhausted;
    }
}

} // namespace paradigms::cli
