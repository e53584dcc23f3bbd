#pragma once

#include <string>
#include <utility>
#include <vector>

#include "shacldl/schema.hpp"

namespace shacldl {

struct ShapesImport {
    ShapeSchema schema;
    // declared @prefix bindings in document order, for report rendering
    std::vector<std::pair<std::string, std::string>> prefixes;
};

// Reads the Turtle subset needed for shapes graphs (@prefix, prefixed names,
// full IRIs, blank nodes, collections, 'a', ';'/',' separators, integer
// counts) and maps the recognized sh: constructs onto a schema. Anything
// else raises UnsupportedConstruct.
ShapesImport import_shapes_graph_full(const std::string& turtle_text);

ShapeSchema import_shapes_graph(const std::string& turtle_text);

}  // namespace shacldl
