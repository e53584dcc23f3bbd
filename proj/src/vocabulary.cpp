#include "shacldl/vocabulary.hpp"

namespace shacldl {

void collect_names(const PathExpr& path, Vocabulary& out) {
    switch (path.op) {
        case PathExpr::Op::Prop:
        case PathExpr::Op::Inverse:
            out.insert(path.prop);
            break;
        case PathExpr::Op::Union:
        case PathExpr::Op::Compose:
            collect_names(*path.left, out);
            collect_names(*path.right, out);
            break;
        case PathExpr::Op::Star:
        case PathExpr::Op::Optional:
            collect_names(*path.left, out);
            break;
    }
}

void collect_names(const ShapeExpr& shape, Vocabulary& out) {
    switch (shape.op) {
        case ShapeExpr::Op::Top:
            break;
        case ShapeExpr::Op::Ref:
        case ShapeExpr::Op::Constant:
            out.insert(shape.name);
            break;
        case ShapeExpr::Op::And:
        case ShapeExpr::Op::Or:
            collect_names(*shape.left, out);
            collect_names(*shape.right, out);
            break;
        case ShapeExpr::Op::Not:
            collect_names(*shape.left, out);
            break;
        case ShapeExpr::Op::AtLeast:
        case ShapeExpr::Op::Forall:
        case ShapeExpr::Op::Exists:
            collect_names(*shape.path, out);
            collect_names(*shape.left, out);
            break;
        case ShapeExpr::Op::Eq:
        case ShapeExpr::Op::Disj:
            out.insert(shape.name);
            collect_names(*shape.path, out);
            break;
        case ShapeExpr::Op::Closed:
            for (const auto& p : shape.closed_props) out.insert(p);
            break;
    }
}

Vocabulary vocabulary_of(const ShapeSchema& schema, const Graph& graph) {
    Vocabulary sigma;
    for (const auto& [s, body] : schema.definitions()) {
        sigma.insert(s);
        collect_names(*body, sigma);
    }
    for (const auto& t : schema.targets()) {
        collect_names(*t.lhs, sigma);
        collect_names(*t.rhs, sigma);
    }
    for (const auto& f : graph.facts()) {
        sigma.insert(f.prop);
        sigma.insert(f.subject);
        sigma.insert(f.object);
    }
    return sigma;
}

}  // namespace shacldl
