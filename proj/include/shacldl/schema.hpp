#pragma once

#include <map>
#include <vector>

#include "shacldl/ast.hpp"
#include "shacldl/name.hpp"

namespace shacldl {

// One inclusion statement lhs <= rhs: every element satisfying lhs must
// satisfy rhs.
struct Target {
    ShapePtr lhs;
    ShapePtr rhs;
};

using Definitions = std::map<Name, ShapePtr>;

// Topological order over the defined shape names: every name appears after
// all defined names occurring in its body. Names that are referenced but
// never defined are excluded (they default to top at evaluation time).
// Throws CyclicSchema with a witness cycle.
std::vector<Name> dependency_order(const Definitions& definitions);

// Acyclic shape definitions plus an ordered list of targets. Construction
// rejects cyclic definitions.
class ShapeSchema {
public:
    ShapeSchema() = default;
    ShapeSchema(Definitions definitions, std::vector<Target> targets);

    const Definitions& definitions() const { return definitions_; }
    const std::vector<Target>& targets() const { return targets_; }

private:
    Definitions definitions_;
    std::vector<Target> targets_;
};

std::vector<Name> dependency_order(const ShapeSchema& schema);

// Structural equality after desugaring both sides.
bool equal(const ShapeSchema& a, const ShapeSchema& b);

}  // namespace shacldl
