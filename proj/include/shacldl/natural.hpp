#pragma once

#include <map>
#include <vector>

#include "shacldl/eval.hpp"
#include "shacldl/graph.hpp"

namespace shacldl {

// The finite reduction of the natural (infinite-domain) semantics: domain
// N_G plus the vocabulary's node names plus one symbolic fresh element.
struct StarContext {
    FiniteInterpretation interpretation;
    Vocabulary sigma;
    std::set<Name> graph_nodes;
};

StarContext star_interpretation(const Graph& graph, const Vocabulary& sigma);

// Graph-level conformance under the natural semantics. A violation whose
// focus is the symbolic element means infinitely many anonymous witnesses.
// extra augments the vocabulary (e.g. property names for closed-checking).
ConformanceReport validate(const Graph& graph, const ShapeSchema& schema,
                           const Vocabulary& extra = {});

struct GraphEvalResult {
    std::map<Name, bool> answers;
    bool star_verdict = false;  // verdict shared by every node name outside the star domain
};

// Membership of the queried node names in the shape, under the natural
// semantics. Names outside the star domain all inherit star_verdict.
GraphEvalResult eval_on_graph(const ShapePtr& shape, const Graph& graph,
                              const ShapeSchema& schema, const std::vector<Name>& query,
                              const Vocabulary& extra = {});

}  // namespace shacldl
