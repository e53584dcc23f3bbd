#pragma once

#include <set>

#include "shacldl/ast.hpp"
#include "shacldl/graph.hpp"
#include "shacldl/name.hpp"
#include "shacldl/schema.hpp"

namespace shacldl {

// A finite symbol set, split by kind.
struct Vocabulary {
    std::set<Name> node_names;
    std::set<Name> shape_names;
    std::set<Name> property_names;

    void insert(const Name& n) {
        switch (n.kind) {
            case NameKind::Node: node_names.insert(n); break;
            case NameKind::Shape: shape_names.insert(n); break;
            case NameKind::Property: property_names.insert(n); break;
        }
    }

    friend bool operator==(const Vocabulary&, const Vocabulary&) = default;
};

void collect_names(const PathExpr& path, Vocabulary& out);
void collect_names(const ShapeExpr& shape, Vocabulary& out);

// All names occurring in the schema (definitions and targets, including
// closed() sets) plus all node and property names of the graph.
Vocabulary vocabulary_of(const ShapeSchema& schema, const Graph& graph);

}  // namespace shacldl
