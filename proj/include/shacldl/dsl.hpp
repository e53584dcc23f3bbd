#pragma once

#include <string>

#include "shacldl/ast.hpp"
#include "shacldl/schema.hpp"

namespace shacldl {

// Textual schema language mirroring the abstract syntax:
//   shape NAME := <shape> .
//   target <shape> <= <shape> .
//   targetNode c ~> NAME .           targetSubjectsOf p ~> NAME .
//   targetObjectsOf p ~> NAME .      targetClass r c ~> NAME .
// Shapes: top, {c}, NAME, &, |, !, >= n <path> . <shape>,
//   exists/forall <path> . <shape>, eq(p, <path>), disj(p, <path>),
//   closed(p, ...). Paths: p, ^p, /, |, *, ?. '#' starts a line comment.
// Names are bare identifiers or <bracketed IRIs>.
ShapeSchema parse_schema(const std::string& text);

ShapePtr parse_shape_expr(const std::string& text);
PathPtr parse_path_expr(const std::string& text);

// Core-syntax output (sugar eliminated); reparsing yields a schema that is
// structurally equal to the input after desugaring.
std::string serialize_schema(const ShapeSchema& schema);
std::string serialize_shape(const ShapeExpr& shape);
std::string serialize_path(const PathExpr& path);

}  // namespace shacldl
