#include <paradigms/network_json.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace paradigms
{

namespace
{

using nlohmann::json;

const json &require(const json &obj, const char *key, const std::string &where)
{
    if (!obj.is_object() || !obj.contains(key)) {
        throw NetworkError(where + ": missing \"" + key + "\"");
    }
    return obj.at(key);
}

std::vector<std::string> pipe_names(const json &obj, const char *key, const std::string &where)
{
    const json &list = require(obj, key, where);
    if (!list.is_array()) {
        throw NetworkError(where + ": \"" + key + "\" must be an array of pipe names");
    }
    std::vector<std::string> names;
    for (const auto &entry : list) {
        if (!entry.is_string()) {
            throw NetworkError(where + ": \"" + key + "\" must be an array of pipe names");
        }
        names.push_back(entry.get<std::string>());
    }
    return names;
}

void add_pipes(Network &net, const json &pipes)
{
    if (!pipes.is_array()) {
        throw NetworkError("\"pipes\" must be an array");
    }
    for (std::size_t k = 0; k < pipes.size(); ++k) {
        const json &spec = pipes[k];
        const std::string where = "pipe #" + std::to_string(k);
        const json &name = require(spec, "name", where);
        if (!name.is_string()) {
            throw NetworkError(where + ": \"name\" must be a string");
        }
        const std::string pipe_where = "pipe '" + name.get<std::string>() + "'";
        const json &capacity = require(spec, "capacity", pipe_where);
        if (!capacity.is_number_unsigned() || capacity.get<std::uint64_t>() == 0) {
            throw NetworkError(pipe_where + ": \"capacity\" must be a positive integer");
        }
        Pipe &pipe = net.add_pipe(name.get<std::string>(), capacity.get<std::size_t>());
        if (!spec.contains("seed")) {
            continue;
        }
        const json &seed = spec.at("seed");
        if (!seed.is_array()) {
            throw NetworkError(pipe_where + ": \"seed\" must be an array of integers");
        }
        for (const auto &item : seed) {
            if (!item.is_number_integer()) {
                throw NetworkError(pipe_where + ": \"seed\" must be an array of integers");
            }
            if (pipe.full()) {
                throw NetworkError(pipe_where + ": seed holds more items than the capacity");
            }
            pipe.put(item.get<Item>());
        }
    }
}

void add_node(Network &net, const json &spec, std::size_t k)
{
    const json &name_field = require(spec, "name", "node #" + std::to_string(k));
    if (!name_field.is_string()) {
        throw NetworkError("node #" + std::to_string(k) + ": \"name\" must be a string");
    }
    const std::string name = name_field.get<std::string>();
    const std::string where = "node '" + name + "'";
    const json &kind_field = require(spec, "kind", where);
    if (!kind_field.is_string()) {
        throw NetworkError(where + ": \"kind\" must be a string");
    }
    const std::string kind = kind_field.get<std::string>();
    const auto in = pipe_names(spec, "in", where);
    const auto out = pipe_names(spec, "out", where);

    auto expect_arity = [&](std::size_t n_in, std::size_t n_out) {
        if (in.size() != n_in || out.size() != n_out) {
            throw NetworkError(where + ": " + kind + " takes " + std::to_string(n_in) + " input(s) and "
                               + std::to_string(n_out) + " output(s), got " + std::to_string(in.size())
                               + " and " + std::to_string(out.size()));
        }
    };
    auto pipe = [&](const std::string &pipe_name) -> Pipe & {
        try {
            return net.pipe(pipe_name);
        } catch (const NetworkError &) {
            throw NetworkError(where + ": unknown pipe '" + pipe_name + "'");
        }
    };

    if (kind == "times") {
        expect_arity(1, 1);
        const json &m = require(spec, "multiplier", where);
        if (!m.is_number_integer()) {
            throw NetworkError(where + ": \"multiplier\" must be an integer");
        }
        net.emplace<Times>(name, m.get<Item>(), pipe(in[0]), pipe(out[0]));
    } else if (kind == "merge") {
        expect_arity(2, 1);
        net.emplace<Merge>(name, pipe(in[0]), pipe(in[1]), pipe(out[0]));
    } else if (kind == "split") {
        expect_arity(1, 2);
        net.emplace<Split>(name, pipe(in[0]), pipe(out[0]), pipe(out[1]));
    } else if (kind == "probe") {
        expect_arity(1, 1);
        net.emplace<Probe>(name, pipe(in[0]), pipe(out[0]));
    } else {
        throw NetworkError(where + ": unknown kind \"" + kind + "\"");
    }
}

} // namespace

Network parse_network(std::string_view json_text)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw NetworkError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw NetworkError("network description must be a JSON object");
    }
    Network net;
    add_pipes(net, require(doc, "pipes", "network"));
    const json &nodes = require(doc, "nodes", "network");
    if (!nodes.is_array()) {
        throw NetworkError("\"nodes\" must be an array");
    }
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        add_node(net, nodes[k], k);
    }
    return net;
}

Network load_network(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in) {
        throw NetworkError("cannot open '" + path.string() + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_network(text.str());
}

} // namespace paradigms
