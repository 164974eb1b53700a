#include "tdfc/io.hpp"

#include "tdfc/errors.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace tdfc {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

FamilySpec family_from_json(const json& j) {
    const std::string name = j.at("family").get<std::string>();
    try {
        if (name == "linear") return FamilySpec::linear(j.at("n").get<int>());
        if (name == "ccs") return FamilySpec::ccs(j.at("n").get<int>());
        if (name == "tcs") {
            return FamilySpec::tcs(j.at("a").get<int>(), j.at("d").get<int>());
        }
        if (name == "lattice") {
            return FamilySpec::lattice(j.at("dims").get<std::vector<int>>());
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad family document: ") + e.what());
    }
    throw ParseError("unknown family '" + name + "'");
}

}  // namespace

GraphDocument graph_from_json_text(const std::string& text) {
    const json j = parse(text);
    try {
        if (j.contains("family")) {
            const FamilySpec spec = family_from_json(j);
            return {build_family(spec), spec};
        }
        const int n = j.at("n_slots").get<int>();
        std::set<int> excited;
        for (int v : j.at("excited").get<std::vector<int>>()) excited.insert(v);
        std::set<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) {
                throw ParseError("edges must be 2-element lists");
            }
            edges.insert(make_edge(e[0].get<int>(), e[1].get<int>()));
        }
        return {ClusterGraph(n, std::move(excited), std::move(edges)), std::nullopt};
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad graph document: ") + e.what());
    }
}

std::string graph_to_json_text(const ClusterGraph& graph) {
    json j;
    j["n_slots"] = graph.n_slots;
    j["excited"] = graph.excited;
    auto& edges = j["edges"] = json::array();
    for (const auto& [u, v] : graph.edges) edges.push_back({u, v});
    return j.dump(2) + "\n";
}

GraphDocument load_graph(const std::string& path) {
    return graph_from_json_text(read_file(path));
}

Schedule schedule_from_json_text(const std::string& text) {
    const json j = parse(text);
    try {
        Schedule s;
        s.n_slots = j.at("n_slots").get<int>();
        for (int v : j.at("excitation_set").get<std::vector<int>>()) {
            s.excitation_set.insert(v);
        }
        for (int v : j.at("native_chain_gates").get<std::vector<int>>()) {
            s.native_chain_gates.insert(v);
        }
        for (const auto& b : j.at("blocks")) {
            TdfBlock block;
            block.delay = b.at("delay").get<int>();
            for (int v : b.at("enabled_gates").get<std::vector<int>>()) {
                block.enabled_gates.insert(v);
            }
            s.blocks.push_back(std::move(block));
        }
        if (j.contains("numbering")) {
            s.numbering = j.at("numbering").get<std::vector<int>>();
        }
        if (j.contains("provenance")) {
            const auto& p = j.at("provenance");
            s.provenance.pass = p.value("pass", "");
            if (p.contains("params")) {
                for (const auto& [key, value] : p.at("params").items()) {
                    s.provenance.params[key] = value.get<std::string>();
                }
            }
        }
        s.validate();
        return s;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad schedule document: ") + e.what());
    }
}

std::string schedule_to_json_text(const Schedule& s) {
    json j;
    j["n_slots"] = s.n_slots;
    j["excitation_set"] = s.excitation_set;
    j["native_chain_gates"] = s.native_chain_gates;
    auto& blocks = j["blocks"] = json::array();
    for (const auto& b : s.blocks) {
        blocks.push_back({{"delay", b.delay}, {"enabled_gates", b.enabled_gates}});
    }
    j["numbering"] = s.numbering;
    j["provenance"] = {{"pass", s.provenance.pass}, {"params", s.provenance.params}};
    return j.dump(2) + "\n";
}

Schedule load_schedule(const std::string& path) {
    return schedule_from_json_text(read_file(path));
}

std::string matrix_csv(const DistributionMatrix& d) {
    std::ostringstream os;
    for (int i = 1; i <= d.size(); ++i) {
        for (int j = 1; j <= d.size(); ++j) {
            if (j > 1) os << ',';
            os << ((j >= i && d.get(i, j)) ? 1 : 0);
        }
        os << '\n';
    }
    return os.str();
}

std::string graph_dot(const ClusterGraph& graph) {
    std::ostringstream os;
    os << "graph cluster_state {\n";
    os << "  node [shape=circle];\n";
    for (int v = 1; v <= graph.n_slots; ++v) {
        os << "  " << v;
        if (graph.excited.count(v)) {
            os << " [style=filled, fillcolor=lightblue]";
        } else {
            os << " [style=dashed]";
        }
        os << ";\n";
    }
    for (const auto& [u, v] : graph.edges) {
        os << "  " << u << " -- " << v << " [label=\"" << (v - u) << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write '" + tmp + "'");
        out << content;
        if (!out.flush()) throw Error("write failed for '" + tmp + "'");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::remove(tmp.c_str());
        throw Error("atomic rename to '" + path + "' failed: " + ec.message());
    }
}

}  // namespace tdfc
