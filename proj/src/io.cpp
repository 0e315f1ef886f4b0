#include "hcf/io.hpp"

#include <fstream>
#include <sstream>

namespace hcf {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> words;
};

// Non-blank, non-comment lines split on whitespace.
std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> out;
    std::string text;
    std::size_t number = 0;
    while (std::getline(in, text)) {
        ++number;
        std::istringstream words(text);
        Line line{number, {}};
        std::string word;
        while (words >> word) {
            if (word.front() == '#') {
                break;
            }
            line.words.push_back(word);
        }
        if (!line.words.empty()) {
            out.push_back(std::move(line));
        }
    }
    return out;
}

long long parse_integer(const Line& line, const std::string& word) {
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(word, &used);
    } catch (const std::exception&) {
        throw ParseError(line.number, "expected an integer, got '" + word + "'");
    }
    if (used != word.size()) {
        throw ParseError(line.number, "expected an integer, got '" + word + "'");
    }
    return value;
}

std::size_t parse_index(const Line& line, const std::string& word) {
    const long long value = parse_integer(line, word);
    if (value < 0) {
        throw ParseError(line.number, "expected a nonnegative index, got '" + word + "'");
    }
    return static_cast<std::size_t>(value);
}

const Line& single_line(const std::vector<Line>& lines, const std::string& keyword) {
    if (lines.empty()) {
        throw ParseError(1, "expected a '" + keyword + "' line");
    }
    if (lines.size() > 1) {
        throw ParseError(lines[1].number, "unexpected content after the '" + keyword + "' line");
    }
    if (lines.front().words.front() != keyword) {
        throw ParseError(lines.front().number, "expected '" + keyword + "', got '" + lines.front().words.front() + "'");
    }
    return lines.front();
}

} // namespace

Multigraph parse_graph(std::istream& in) {
    const auto lines = tokenize(in);
    if (lines.empty()) {
        throw ParseError(1, "empty graph file");
    }
    const Line& header = lines.front();
    if (header.words.size() != 2 || header.words[0] != "vertices") {
        throw ParseError(header.number, "expected 'vertices N'");
    }
    const std::size_t vertex_count = parse_index(header, header.words[1]);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.words.size() != 3 || line.words[0] != "edge") {
            throw ParseError(line.number, "expected 'edge u v'");
        }
        edges.emplace_back(parse_index(line, line.words[1]), parse_index(line, line.words[2]));
    }
    return build_graph(vertex_count, edges);
}

Multigraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

std::string write_graph(const Multigraph& g) {
    std::string out = "vertices " + std::to_string(g.vertex_count()) + "\n";
    for (const Edge& e : g.edges()) {
        out += "edge " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    }
    return out;
}

Cover parse_model(std::istream& in, const Multigraph& g) {
    const auto lines = tokenize(in);
    if (lines.empty()) {
        throw ParseError(1, "empty model file");
    }
    const std::string& first = lines.front().words.front();
    if (first == "asm" || first == "cfm") {
        if (lines.size() > 1 || lines.front().words.size() > 1) {
            throw ParseError(lines.front().number, "'" + first + "' must be the only word in the model file");
        }
        return first == "asm" ? asm_cover(g) : cfm_cover(g);
    }
    std::vector<std::vector<Vertex>> sets;
    for (const Line& line : lines) {
        if (line.words.front() != "set") {
            throw ParseError(line.number, "expected 'set v ...', 'asm' or 'cfm'");
        }
        auto& set = sets.emplace_back();
        for (std::size_t i = 1; i < line.words.size(); ++i) {
            set.push_back(parse_index(line, line.words[i]));
        }
    }
    return build_model(g, sets);
}

Cover parse_model(const std::string& text, const Multigraph& g) {
    std::istringstream in(text);
    return parse_model(in, g);
}

std::string write_model(const Cover& h, const Multigraph& g) {
    const std::string name = describe(h, g);
    if (name == "asm" || name == "cfm") {
        return name + "\n";
    }
    std::string out;
    for (const auto& set : h.as_lists()) {
        out += "set";
        for (Vertex v : set) {
            out += " " + std::to_string(v);
        }
        out += "\n";
    }
    return out;
}

Configuration parse_configuration(std::istream& in, const Multigraph& g) {
    const auto lines = tokenize(in);
    const Line& line = single_line(lines, "chips");
    std::vector<Chips> chips;
    for (std::size_t i = 1; i < line.words.size(); ++i) {
        chips.push_back(parse_integer(line, line.words[i]));
    }
    if (chips.size() != g.n()) {
        throw ParseError(line.number, "expected " + std::to_string(g.n()) + " chip values, got " + std::to_string(chips.size()));
    }
    return Configuration(std::move(chips));
}

Configuration parse_configuration(const std::string& text, const Multigraph& g) {
    std::istringstream in(text);
    return parse_configuration(in, g);
}

std::string write_configuration(const Configuration& d) { return format_chips(d) + "\n"; }

SpanningTree parse_tree(std::istream& in, const Multigraph& g) {
    const auto lines = tokenize(in);
    const Line& line = single_line(lines, "tree");
    std::vector<EdgeId> ids;
    for (std::size_t i = 1; i < line.words.size(); ++i) {
        std::string word = line.words[i];
        if (!word.empty() && word.front() == 'e') {
            word.erase(0, 1);
        }
        const std::size_t id = parse_index(line, word);
        if (id == 0 || id > g.edge_count()) {
            throw ParseError(line.number, "edge identifier '" + line.words[i] + "' out of range");
        }
        ids.push_back(id);
    }
    SpanningTree t;
    try {
        t = SpanningTree(std::move(ids));
    } catch (const std::invalid_argument& e) {
        throw ParseError(line.number, e.what());
    }
    if (!is_spanning_tree(g, t)) {
        throw ParseError(line.number, "edges do not form a spanning tree");
    }
    return t;
}

SpanningTree parse_tree(const std::string& text, const Multigraph& g) {
    std::istringstream in(text);
    return parse_tree(in, g);
}

std::string write_tree(const SpanningTree& t) { return format_tree(t) + "\n"; }

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

nlohmann::json to_json(const Multigraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : g.edges()) {
        edges.push_back({e.u, e.v});
    }
    return {{"vertices", g.vertex_count()}, {"edges", edges}};
}

nlohmann::json to_json(const Cover& h) { return h.as_lists(); }

nlohmann::json to_json(const AnomalyPolicy& p) {
    return {{"excess", to_string(p.on_excess)}, {"pivot_exemption", p.pivot_exemption}, {"rejection", to_string(p.rejection)}};
}

nlohmann::json to_json(const Configuration& d) { return d.values(); }

nlohmann::json to_json(const SpanningTree& t) { return t.edges(); }

nlohmann::json to_json(const SigmaTrace& trace) {
    nlohmann::json steps = nlohmann::json::array();
    for (const SigmaStep& s : trace.steps) {
        nlohmann::json burnt = nlohmann::json::array();
        for (auto v = s.burnt.find_first(); v != VertexSet::npos; v = s.burnt.find_next(v)) {
            burnt.push_back(v);
        }
        steps.push_back({{"step", s.step},
                         {"X", burnt},
                         {"edge", s.edge},
                         {"target", s.target},
                         {"m", s.m ? nlohmann::json(*s.m) : nlohmann::json()},
                         {"threshold", s.threshold ? nlohmann::json(*s.threshold) : nlohmann::json()},
                         {"value", s.value},
                         {"decision", to_string(s.decision)}});
    }
    return {{"policy", to_json(trace.policy)}, {"steps", steps}, {"accepted", trace.accepted}, {"order", trace.order}};
}

nlohmann::json to_json(const GammaResult& result) {
    nlohmann::json stages = nlohmann::json::array();
    for (const GammaStage& s : result.stages) {
        nlohmann::json fired = nlohmann::json::array();
        for (auto v = s.fired.find_first(); v != VertexSet::npos; v = s.fired.find_next(v)) {
            fired.push_back(v);
        }
        stages.push_back({{"stage", s.stage},
                          {"Y", fired},
                          {"pivot", s.pivot},
                          {"rejected", s.rejected},
                          {"edge", s.tree_edge},
                          {"m", s.m ? nlohmann::json(*s.m) : nlohmann::json()},
                          {"scanned", s.scanned},
                          {"value", s.value}});
    }
    nlohmann::json out = {{"stages", stages}};
    if (result.config) {
        out["chips"] = to_json(*result.config);
    }
    if (!result.failure.empty()) {
        out["failure"] = result.failure;
    }
    return out;
}

nlohmann::json to_json(const VerificationFailure& f) {
    nlohmann::json configs = nlohmann::json::array();
    for (const auto& d : f.configs) {
        configs.push_back(to_json(d));
    }
    nlohmann::json trees = nlohmann::json::array();
    for (const auto& t : f.trees) {
        trees.push_back(to_json(t));
    }
    return {{"kind", to_string(f.kind)}, {"detail", f.detail}, {"configs", configs}, {"trees", trees}, {"trace", f.trace}};
}

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : r.failures) {
        failures.push_back(to_json(f));
    }
    return {{"policy", to_json(r.policy)},
            {"certified", r.certified()},
            {"counts", {{"recurrents", r.recurrent_count}, {"trees", r.tree_count}}},
            {"failures", failures}};
}

Multigraph graph_from_json(const nlohmann::json& j) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& e : j.at("edges")) {
        edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
    }
    return build_graph(j.at("vertices").get<std::size_t>(), edges);
}

Cover cover_from_json(const nlohmann::json& j, const Multigraph& g) {
    return build_model(g, j.get<std::vector<std::vector<Vertex>>>());
}

AnomalyPolicy policy_from_json(const nlohmann::json& j) {
    AnomalyPolicy p;
    const auto excess = parse_excess_action(j.at("excess").get<std::string>());
    const auto rejection = parse_rejection_memory(j.at("rejection").get<std::string>());
    if (!excess || !rejection) {
        throw std::invalid_argument("unknown policy in JSON: " + j.dump());
    }
    p.on_excess = *excess;
    p.rejection = *rejection;
    p.pivot_exemption = j.at("pivot_exemption").get<bool>();
    return p;
}

} // namespace hcf
