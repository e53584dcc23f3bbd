#pragma once

#include <map>
#include <utility>
#include <vector>

#include "shacldl/ast.hpp"
#include "shacldl/interpretation.hpp"
#include "shacldl/schema.hpp"
#include "shacldl/vocabulary.hpp"

namespace shacldl {

struct Violation {
    int target_index;
    DomainElement focus;
    ShapePtr lhs;
    ShapePtr rhs;
};

struct ConformanceReport {
    bool conforms = true;
    std::vector<Violation> violations;
};

// Evaluates paths and shapes over one fixed interpretation. Per-source
// reachability for star paths is memoized by (expression, source); a fresh
// Evaluator starts with an empty cache.
class Evaluator {
public:
    Evaluator(const FiniteInterpretation& interp, const Vocabulary& sigma)
        : interp_(interp), sigma_(sigma) {}

    // Full binary relation of a path expression. Star includes (a,a) for
    // every domain element a.
    EdgeSet eval_path(const PathExpr& path);

    // {b | (a,b) in the relation of path}, by per-source search.
    // Throws ElementNotInDomain when a is outside the domain.
    NodeSet eval_path_from(const PathExpr& path, const DomainElement& a);

    // Requires a core (desugared) shape; every referenced shape name must be
    // interpreted and every constant mapped.
    NodeSet eval_shape(const ShapeExpr& shape);

private:
    NodeSet reach_from(const PathExpr& path, const DomainElement& a);

    const FiniteInterpretation& interp_;
    const Vocabulary& sigma_;
    std::map<std::pair<const PathExpr*, DomainElement>, NodeSet> star_memo_;
};

EdgeSet eval_path(const PathExpr& path, const FiniteInterpretation& interp);
NodeSet eval_path_from(const PathExpr& path, const FiniteInterpretation& interp,
                       const DomainElement& a);
NodeSet eval_shape(const ShapeExpr& shape, const FiniteInterpretation& interp,
                   const Vocabulary& sigma);

// The unique extension of interp that satisfies the definitions: defined
// shape names get their body's value in dependency order; every shape name
// of sigma without a definition gets the full domain (the implicit s == top).
// Pre-existing shape assignments of interp are discarded.
FiniteInterpretation extend_interpretation(const FiniteInterpretation& interp,
                                           const Definitions& definitions,
                                           const Vocabulary& sigma);

// Extends with the schema's definitions, then reports every target whose
// lhs set is not included in its rhs set. Violations are ordered by target
// index, then by focus (symbolic element last).
ConformanceReport check_conformance(const FiniteInterpretation& interp,
                                    const ShapeSchema& schema, const Vocabulary& sigma);

}  // namespace shacldl
