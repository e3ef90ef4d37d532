#ifndef PARADIGMS_CLI_HPP
#define PARADIGMS_CLI_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>

namespace paradigms::cli
{

enum class Command { hamming, circle_parabola, run_network };
enum class Scheduler { roundrobin, blockedset };

namespace exit_code
{
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int inconsistent = 2;
inline constexpr int budget_exhausted = 3;
} // namespace exit_code

struct RunConfig {
    Command command = Command::hamming;
    // Items to observe (per probe for run-network).
    std::size_t count = 20;
    std::size_t capacity = 10;
    double eps = 1e-12;
    bool positive_x = false;
    Scheduler scheduler = Scheduler::roundrobin;
    std::filesystem::path path;
};

// Throws std::invalid_argument unless count >= 1, capacity >= 1, eps > 0.
void validate(const RunConfig &cfg);

// Each command writes results to `out`, diagnostics to `err`, and returns
// an exit code.
int cmd_hamming(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_circle_parabola(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_run_network(const RunConfig &cfg, std::ostream &out, std::ostream &err);

// Parses argv (argv[0] is the program name) and dispatches.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace paradigms::cli

#endif
