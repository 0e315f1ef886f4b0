#pragma once

// Text file formats (graph, model, configuration, tree) and JSON
// serialisation of instances and verification reports.

#include <istream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hcf/corpus.hpp"
#include "hcf/verify.hpp"

namespace hcf {

class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_{line} {}

    [[nodiscard]] std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

// "vertices N" followed by "edge u v" lines; '#' starts a comment line.
Multigraph parse_graph(std::istream& in);
Multigraph parse_graph(const std::string& text);
std::string write_graph(const Multigraph& g);

// "asm", "cfm", or one "set v ..." line per maximal set.
Cover parse_model(std::istream& in, const Multigraph& g);
Cover parse_model(const std::string& text, const Multigraph& g);
std::string write_model(const Cover& h, const Multigraph& g);

// "chips c1 ... cn". The entry count is checked against g.
Configuration parse_configuration(std::istream& in, const Multigraph& g);
Configuration parse_configuration(const std::string& text, const Multigraph& g);
std::string write_configuration(const Configuration& d);

// "tree e_i e_j ..."; identifiers may be written with or without the 'e'.
SpanningTree parse_tree(std::istream& in, const Multigraph& g);
SpanningTree parse_tree(const std::string& text, const Multigraph& g);
std::string write_tree(const SpanningTree& t);

std::string read_file(const std::string& path);

nlohmann::json to_json(const Multigraph& g);
nlohmann::json to_json(const Cover& h);
nlohmann::json to_json(const AnomalyPolicy& p);
nlohmann::json to_json(const Configuration& d);
nlohmann::json to_json(const SpanningTree& t);
nlohmann::json to_json(const SigmaTrace& trace);
nlohmann::json to_json(const GammaResult& result);
nlohmann::json to_json(const VerificationFailure& f);
nlohmann::json to_json(const VerificationReport& r);

Multigraph graph_from_json(const nlohmann::json& j);
Cover cover_from_json(const nlohmann::json& j, const Multigraph& g);
AnomalyPolicy policy_from_json(const nlohmann::json& j);

} // namespace hcf
