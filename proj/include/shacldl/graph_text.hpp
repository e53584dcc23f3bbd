#pragma once

#include <string>

#include "shacldl/graph.hpp"

namespace shacldl {

enum class GraphFormat {
    NTriples,     // <s> <p> <o> . per line
    SimpleFacts,  // p(a,b). with bare tokens
};

// Duplicate facts collapse; '#' starts a comment in both formats.
// NTriples literals and blank nodes are rejected (out of scope).
Graph parse_graph(const std::string& text, GraphFormat format);

}  // namespace shacldl
