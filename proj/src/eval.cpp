#include "shacldl/eval.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "shacldl/errors.hpp"

namespace shacldl {

namespace {

NodeSet set_union(const NodeSet& a, const NodeSet& b) {
    NodeSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

NodeSet set_intersection(const NodeSet& a, const NodeSet& b) {
    NodeSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(out, out.end()));
    return out;
}

bool disjoint(const NodeSet& a, const NodeSet& b) {
    auto it = a.begin();
    auto jt = b.begin();
    while (it != a.end() && jt != b.end()) {
        if (*it < *jt) ++it;
        else if (*jt < *it) ++jt;
        else return false;
    }
    return true;
}

}  // namespace

EdgeSet Evaluator::eval_path(const PathExpr& path) {
    switch (path.op) {
        case PathExpr::Op::Prop:
            return interp_.relation(path.prop);
        case PathExpr::Op::Inverse: {
            EdgeSet out;
            for (const auto& [a, b] : interp_.relation(path.prop)) out.emplace(b, a);
            return out;
        }
        case PathExpr::Op::Union: {
            EdgeSet out = eval_path(*path.left);
            for (const auto& e : eval_path(*path.right)) out.insert(e);
            return out;
        }
        case PathExpr::Op::Compose: {
            // join via per-source lookups on the right operand
            EdgeSet out;
            for (const auto& [a, c] : eval_path(*path.left))
                for (const auto& b : eval_path_from(*path.right, c)) out.emplace(a, b);
            return out;
        }
        case PathExpr::Op::Star: {
            EdgeSet out;
            for (const auto& a : interp_.domain())
                for (const auto& b : eval_path_from(path, a)) out.emplace(a, b);
            return out;
        }
        case PathExpr::Op::Optional: {
            EdgeSet out = eval_path(*path.left);
            for (const auto& a : interp_.domain()) out.emplace(a, a);
            return out;
        }
    }
    return {};
}

NodeSet Evaluator::eval_path_from(const PathExpr& path, const DomainElement& a) {
    if (!interp_.contains(a)) throw ElementNotInDomain(a);
    return reach_from(path, a);
}

NodeSet Evaluator::reach_from(const PathExpr& path, const DomainElement& a) {
    switch (path.op) {
        case PathExpr::Op::Prop:
            return interp_.successors(path.prop, a);
        case PathExpr::Op::Inverse:
            return interp_.predecessors(path.prop, a);
        case PathExpr::Op::Union:
            return set_union(reach_from(*path.left, a), reach_from(*path.right, a));
        case PathExpr::Op::Compose: {
            NodeSet out;
            for (const auto& mid : reach_from(*path.left, a))
                for (const auto& b : reach_from(*path.right, mid)) out.insert(b);
            return out;
        }
        case PathExpr::Op::Star: {
            auto key = std::make_pair(&path, a);
            auto memo = star_memo_.find(key);
            if (memo != star_memo_.end()) return memo->second;
            // breadth-first closure; reflexive by seeding with the source
            NodeSet seen{a};
            std::deque<DomainElement> todo{a};
            while (!todo.empty()) {
                DomainElement cur = todo.front();
                todo.pop_front();
                for (const auto& next : reach_from(*path.left, cur))
                    if (seen.insert(next).second) todo.push_back(next);
            }
            star_memo_.emplace(key, seen);
            return seen;
        }
        case PathExpr::Op::Optional: {
            NodeSet out = reach_from(*path.left, a);
            out.insert(a);
            return out;
        }
    }
    return {};
}

NodeSet Evaluator::eval_shape(const ShapeExpr& shape) {
    switch (shape.op) {
        case ShapeExpr::Op::Top:
            return interp_.domain();
        case ShapeExpr::Op::Ref: {
            auto it = interp_.shapes().find(shape.name);
            if (it == interp_.shapes().end()) throw UnboundShapeName(shape.name);
            return it->second;
        }
        case ShapeExpr::Op::Constant: {
            auto it = interp_.constants().find(shape.name);
            if (it == interp_.constants().end()) throw ConstantNotInterpreted(shape.name);
            return {it->second};
        }
        case ShapeExpr::Op::And:
            return set_intersection(eval_shape(*shape.left), eval_shape(*shape.right));
        case ShapeExpr::Op::Or:
            return set_union(eval_shape(*shape.left), eval_shape(*shape.right));
        case ShapeExpr::Op::Not: {
            NodeSet inner = eval_shape(*shape.left);
            NodeSet out;
            for (const auto& e : interp_.domain())
                if (!inner.count(e)) out.insert(e);
            return out;
        }
        case ShapeExpr::Op::AtLeast: {
            NodeSet body = eval_shape(*shape.left);
            NodeSet out;
            for (const auto& a : interp_.domain()) {
                const NodeSet reached = reach_from(*shape.path, a);
                std::size_t hits = set_intersection(body, reached).size();
                if (hits >= shape.count) out.insert(a);
            }
            return out;
        }
        case ShapeExpr::Op::Eq: {
            NodeSet out;
            for (const auto& a : interp_.domain())
                if (interp_.successors(shape.name, a) == reach_from(*shape.path, a))
                    out.insert(a);
            return out;
        }
        case ShapeExpr::Op::Disj: {
            NodeSet out;
            for (const auto& a : interp_.domain())
                if (disjoint(interp_.successors(shape.name, a), reach_from(*shape.path, a)))
                    out.insert(a);
            return out;
        }
        case ShapeExpr::Op::Closed: {
            // quantifies over the vocabulary's property names outside Q only
            std::vector<Name> outside;
            for (const auto& p : sigma_.property_names)
                if (!std::binary_search(shape.closed_props.begin(), shape.closed_props.end(), p))
                    outside.push_back(p);
            NodeSet out;
            for (const auto& a : interp_.domain()) {
                bool closed = true;
                for (const auto& p : outside)
                    if (!interp_.successors(p, a).empty()) { closed = false; break; }
                if (closed) out.insert(a);
            }
            return out;
        }
        case ShapeExpr::Op::Forall:
        case ShapeExpr::Op::Exists:
            throw std::logic_error("eval_shape requires a desugared shape");
    }
    return {};
}

EdgeSet eval_path(const PathExpr& path, const FiniteInterpretation& interp) {
    Vocabulary sigma;
    Evaluator ev(interp, sigma);
    return ev.eval_path(path);
}

NodeSet eval_path_from(const PathExpr& path, const FiniteInterpretation& interp,
                       const DomainElement& a) {
    Vocabulary sigma;
    Evaluator ev(interp, sigma);
    return ev.eval_path_from(path, a);
}

NodeSet eval_shape(const ShapeExpr& shape, const FiniteInterpretation& interp,
                   const Vocabulary& sigma) {
    Evaluator ev(interp, sigma);
    return ev.eval_shape(shape);
}

FiniteInterpretation extend_interpretation(const FiniteInterpretation& interp,
                                           const Definitions& definitions,
                                           const Vocabulary& sigma) {
    FiniteInterpretation ext = interp;
    ext.clear_shapes();
    for (const auto& s : sigma.shape_names)
        if (!definitions.count(s)) ext.set_shape(s, ext.domain());
    for (const auto& s : dependency_order(definitions)) {
        Evaluator ev(ext, sigma);
        ext.set_shape(s, ev.eval_shape(*desugar(definitions.at(s))));
    }
    return ext;
}

ConformanceReport check_conformance(const FiniteInterpretation& interp,
                                    const ShapeSchema& schema, const Vocabulary& sigma) {
    FiniteInterpretation ext = extend_interpretation(interp, schema.definitions(), sigma);
    Evaluator ev(ext, sigma);
    ConformanceReport report;
    int index = 0;
    for (const auto& target : schema.targets()) {
        NodeSet lhs = ev.eval_shape(*desugar(target.lhs));
        NodeSet rhs = ev.eval_shape(*desugar(target.rhs));
        for (const auto& focus : lhs)
            if (!rhs.count(focus))
                report.violations.push_back({index, focus, target.lhs, target.rhs});
        ++index;
    }
    report.conforms = report.violations.empty();
    return report;
}

}  // namespace shacldl
