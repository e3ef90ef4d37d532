#ifndef PARADIGMS_NETWORK_JSON_HPP
#define PARADIGMS_NETWORK_JSON_HPP

#include <paradigms/dataflow.hpp>

#include <filesystem>
#include <string_view>

namespace paradigms
{

// Builds a Network from a JSON description:
//
//   {
//     "pipes": [{"name": "x1", "capacity": 10, "seed": [1]}, ...],
//     "nodes": [{"name": "t2", "kind": "times", "multiplier": 2,
//                "in": ["f"], "out": ["a"]}, ...]
//   }
//
// kind is one of "times" (1 in, 1 out, needs "multiplier"), "merge"
// (2 in, 1 out), "split" (1 in, 2 out) or "probe" (1 in, 1 out). "seed" is
// optional. Node order in the file is the scheduling order. Any syntax,
// schema, arity or endpoint error throws NetworkError naming the node or pipe.
Network parse_network(std::string_view json_text);
Network load_network(const std::filesystem::path &path);

} // namespace paradigms

#endif
