#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shacldl/eval.hpp"
#include "shacldl/graph.hpp"

namespace shacldl {

// Active-domain semantics in the style of Andresel et al.: evaluation ranges
// over N_G, except that a constant {c} still denotes {c} when c is absent
// from the graph. Negation complements within N_G only, so De Morgan's law
// fails for absent constants. Kept as a contrast oracle, not as the engine.
std::set<Name> active_domain_eval(const ShapeExpr& shape, const Graph& graph,
                                  const ShapeSchema& schema);

ConformanceReport active_domain_validate(const Graph& graph, const ShapeSchema& schema,
                                         const Vocabulary& extra = {});

// Natural-semantics conformance computed the slow way: an explicit finite
// domain of N_G, the vocabulary's node names, and fresh_count generated fresh
// node names, with no symbolic element. The result must not depend on
// fresh_count and must agree with validate().
ConformanceReport brute_force_validate(const Graph& graph, const ShapeSchema& schema,
                                       int fresh_count, const Vocabulary& extra = {});

struct SemanticsDiff {
    int target_index;
    bool natural_conforms;
    bool active_conforms;
    std::optional<DomainElement> witness;
};

// One entry per target where the natural and active-domain verdicts differ.
std::vector<SemanticsDiff> diff_semantics(const Graph& graph, const ShapeSchema& schema,
                                          const Vocabulary& extra = {});

struct Theorem1Result {
    bool passed = true;
    std::string evidence;  // first counterexample, empty on pass
};

// Checks that the star reduction and the enlarged-domain brute force agree:
// same conformance verdict for every fresh-node count 1..max_fresh, and the
// same per-shape membership for every named element.
Theorem1Result check_theorem1(const Graph& graph, const ShapeSchema& schema, int max_fresh,
                              const Vocabulary& extra = {});

}  // namespace shacldl
