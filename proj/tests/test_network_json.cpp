#include <paradigms/network_json.hpp>

#include <doctest.h>

#include <string>

using namespace paradigms;

namespace
{

std::string nodes_only(const std::string &nodes)
{
    return R"({"pipes": [{"name": "a", "capacity": 2, "seed": [3]}, {"name": "b", "capacity": 2},
                         {"name": "c", "capacity": 2}],
               "nodes": [)"
           + nodes + "]}";
}

} // namespace

TEST_CASE("hamming description runs like the built-in network")
{
    Network loaded = load_network(PARADIGMS_DATA_DIR "/hamming.json");
    Network built = build_hamming(10);
    CHECK(loaded.num_nodes() == 8);
    CHECK(loaded.num_pipes() == 10);
    run_roundrobin(loaded, 200);
    run_roundrobin(built, 200);
    const auto &a = dynamic_cast<const Probe &>(loaded.node("p")).observations();
    const auto &b = dynamic_cast<const Probe &>(built.node("p")).observations();
    CHECK(a == b);
    CHECK(a.size() > 50);
}

TEST_CASE("seeds and kinds")
{
    Network net = parse_network(nodes_only(R"({"name": "t", "kind": "times", "multiplier": -4,
                                                "in": ["a"], "out": ["b"]})"));
    CHECK(net.pipe("a").peek() == 3);
    CHECK(net.node("t").run());
    CHECK(net.pipe("b").peek() == -12);
    CHECK(parse_network(R"({"pipes": [], "nodes": []})").num_nodes() == 0);
}

TEST_CASE("validation errors name the culprit")
{
    CHECK_THROWS_WITH_AS(load_network(PARADIGMS_DATA_DIR "/two_readers.json"), doctest::Contains("pipe 'src'"),
                         NetworkError);
    CHECK_THROWS_WITH_AS(
        parse_network(nodes_only(R"({"name": "m", "kind": "merge", "in": ["a"], "out": ["b"]})")),
        doctest::Contains("node 'm'"), NetworkError);
    CHECK_THROWS_WITH_AS(parse_network(nodes_only(R"({"name": "t", "kind": "times", "in": ["a"], "out": ["b"]})")),
                         doctest::Contains("multiplier"), NetworkError);
    CHECK_THROWS_WITH_AS(parse_network(nodes_only(R"({"name": "z", "kind": "zip", "in": ["a"], "out": ["b"]})")),
                         doctest::Contains("unknown kind"), NetworkError);
    CHECK_THROWS_WITH_AS(parse_network(nodes_only(R"({"name": "p", "kind": "probe", "in": ["nope"], "out": ["b"]})")),
                         doctest::Contains("unknown pipe 'nope'"), NetworkError);
    CHECK_THROWS_WITH_AS(parse_network(R"({"pipes": [{"name": "a", "capacity": 0}], "nodes": []})"),
                         doctest::Contains("pipe 'a'"), NetworkError);
    CHECK_THROWS_WITH_AS(parse_network(R"({"pipes": [{"name": "a", "capacity": 1, "seed": [1, 2]}], "nodes": []})"),
                         doctest::Contains("capacity"), NetworkError);
    CHECK_THROWS_WITH_AS(parse_network(R"({"pipes": [{"name": "a", "capacity": 1}, {"name": "a", "capacity": 1}],
                                           "nodes": []})"),
                         doctest::Contains("duplicate pipe 'a'"), NetworkError);
    CHECK_THROWS_WITH_AS(parse_network(R"({"pipes": []})"), doctest::Contains("nodes"), NetworkError);
    CHECK_THROWS_WITH_AS(parse_network("{not json"), doctest::Contains("invalid JSON"), NetworkError);
    CHECK_THROWS_AS(load_network("/nonexistent/network.json"), NetworkError);
}
