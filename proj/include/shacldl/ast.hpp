#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "shacldl/name.hpp"

namespace shacldl {

struct PathExpr;
using PathPtr = std::shared_ptr<const PathExpr>;

// A binary-relation expression over properties. Inverse applies only to a
// bare property name (the grammar has no inverse of compound paths).
struct PathExpr {
    enum class Op { Prop, Inverse, Union, Compose, Star, Optional };

    Op op;
    Name prop{"", NameKind::Property};  // Prop, Inverse
    PathPtr left;                       // Union, Compose, Star, Optional
    PathPtr right;                      // Union, Compose
};

PathPtr path_prop(Name p);
PathPtr path_inverse(Name p);
PathPtr path_union(PathPtr a, PathPtr b);
PathPtr path_compose(PathPtr a, PathPtr b);
PathPtr path_star(PathPtr e);
PathPtr path_optional(PathPtr e);

bool equal(const PathExpr& a, const PathExpr& b);

struct ShapeExpr;
using ShapePtr = std::shared_ptr<const ShapeExpr>;

// A unary formula over domain elements. Forall/Exists are surface sugar,
// eliminated by desugar() before evaluation.
struct ShapeExpr {
    enum class Op {
        Top,
        Ref,       // shape name reference
        Constant,  // {c}
        And,
        Or,
        Not,
        AtLeast,  // >= count path . body
        Eq,       // eq(prop, path)
        Disj,     // disj(prop, path)
        Closed,   // closed(Q)
        Forall,   // sugar
        Exists,   // sugar
    };

    Op op;
    Name name{"", NameKind::Node};   // Ref (shape), Constant (node), Eq/Disj (property)
    std::uint32_t count = 0;         // AtLeast
    PathPtr path;                    // AtLeast, Eq, Disj, Forall, Exists
    ShapePtr left;                   // And/Or left; Not/AtLeast/Forall/Exists body
    ShapePtr right;                  // And/Or right
    std::vector<Name> closed_props;  // Closed; sorted, duplicate-free
};

ShapePtr shape_top();
ShapePtr shape_ref(Name s);
ShapePtr shape_constant(Name c);
ShapePtr shape_and(ShapePtr a, ShapePtr b);
ShapePtr shape_or(ShapePtr a, ShapePtr b);
ShapePtr shape_not(ShapePtr a);
ShapePtr shape_at_least(std::uint32_t n, PathPtr path, ShapePtr body);
ShapePtr shape_eq(Name p, PathPtr path);
ShapePtr shape_disj(Name p, PathPtr path);
ShapePtr shape_closed(std::vector<Name> props);
ShapePtr shape_forall(PathPtr path, ShapePtr body);
ShapePtr shape_exists(PathPtr path, ShapePtr body);

bool equal(const ShapeExpr& a, const ShapeExpr& b);

// Rewrites forall E.phi into !(>= 1 E . !phi) and exists E.phi into
// >= 1 E . phi, recursively. Idempotent; core constructs pass through.
ShapePtr desugar(const ShapePtr& shape);

}  // namespace shacldl
