#pragma once

#include <string>

#include "endtree/connectivity.hpp"
#include "endtree/decomposition.hpp"
#include "endtree/pipeline.hpp"
#include "json.hpp"

namespace endtree::io {

using json = nlohmann::json;

json names(const TruncatedGraph& g, const VertexSet& s);
VertexSet vertices(const TruncatedGraph& g, const json& names);

json graph_json(const TruncatedGraph& g);
TruncatedGraph graph_from_json(const json& j);  // kParse on malformed input
FamilySpec family_from_json(const json& j);

json separation_json(const TruncatedGraph& g, const Separation& s);
json cut_json(const TruncatedGraph& g, const CutResult& c);
json degree_json(const DegreeReport& d);
json domination_json(const DominationReport& d);
json sequence_json(const TruncatedGraph& g, const SeparatorSequence& s);
json relevant_json(const TruncatedGraph& g, const RelevantSeparation& r,
                   int alpha);
json alpha_json(const TruncatedGraph& g, const AlphaTable& a);
json automorphisms_json(const TruncatedGraph& g, const AutomorphismGroup& aut,
                        int margin);
json td_json(const TruncatedGraph& g, const TreeDecomposition& td);
TreeDecomposition td_from_json(const TruncatedGraph& g, const json& j);
json report_json(const TdReport& r);
json ray_json(const TruncatedGraph& g, const RayDecomposition& rd);
json analysis_json(const Analysis& a);

std::string graph_dot(const TruncatedGraph& g);
std::string td_dot(const TruncatedGraph& g, const TreeDecomposition& td);

// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const json& j);
json parse(const std::string& text);

}  // namespace endtree::io
