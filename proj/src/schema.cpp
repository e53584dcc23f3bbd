#include "shacldl/schema.hpp"

#include <set>

#include "shacldl/errors.hpp"

namespace shacldl {

namespace {

void collect_refs(const ShapeExpr& shape, std::set<Name>& out) {
    switch (shape.op) {
        case ShapeExpr::Op::Ref:
            out.insert(shape.name);
            break;
        case ShapeExpr::Op::And:
        case ShapeExpr::Op::Or:
            collect_refs(*shape.left, out);
            collect_refs(*shape.right, out);
            break;
        case ShapeExpr::Op::Not:
        case ShapeExpr::Op::AtLeast:
        case ShapeExpr::Op::Forall:
        case ShapeExpr::Op::Exists:
            collect_refs(*shape.left, out);
            break;
        default:
            break;
    }
}

}  // namespace

std::vector<Name> dependency_order(const Definitions& definitions) {
    // deps[s] = defined names occurring in the body of s
    std::map<Name, std::set<Name>> deps;
    for (const auto& [s, body] : definitions) {
        std::set<Name> refs;
        collect_refs(*body, refs);
        std::set<Name> defined_refs;
        for (const auto& t : refs)
            if (definitions.count(t)) defined_refs.insert(t);
        deps.emplace(s, std::move(defined_refs));
    }

    std::vector<Name> order;
    std::set<Name> placed;
    bool progress = true;
    while (progress) {
        progress = false;
        for (auto& [s, d] : deps) {
            if (placed.count(s)) continue;
            bool ready = true;
            for (const auto& t : d)
                if (!placed.count(t)) { ready = false; break; }
            if (ready) {
                order.push_back(s);
                placed.insert(s);
                progress = true;
            }
        }
    }

    if (order.size() != definitions.size()) {
        // Walk unresolved dependencies until a name repeats; that loop is the witness.
        Name cur = deps.begin()->first;
        for (const auto& [s, d] : deps)
            if (!placed.count(s)) { cur = s; break; }
        std::vector<Name> trail;
        std::set<Name> seen;
        while (!seen.count(cur)) {
            seen.insert(cur);
            trail.push_back(cur);
            for (const auto& t : deps.at(cur))
                if (!placed.count(t)) { cur = t; break; }
        }
        std::vector<Name> cycle;
        bool in_cycle = false;
        for (const auto& n : trail) {
            if (n == cur) in_cycle = true;
            if (in_cycle) cycle.push_back(n);
        }
        throw CyclicSchema(std::move(cycle));
    }
    return order;
}

ShapeSchema::ShapeSchema(Definitions definitions, std::vector<Target> targets)
    : definitions_(std::move(definitions)), targets_(std::move(targets)) {
    dependency_order(definitions_);  // throws CyclicSchema on bad input
}

std::vector<Name> dependency_order(const ShapeSchema& schema) {
    return dependency_order(schema.definitions());
}

bool equal(const ShapeSchema& a, const ShapeSchema& b) {
    if (a.definitions().size() != b.definitions().size()) return false;
    if (a.targets().size() != b.targets().size()) return false;
    auto ita = a.definitions().begin();
    auto itb = b.definitions().begin();
    for (; ita != a.definitions().end(); ++ita, ++itb) {
        if (ita->first != itb->first) return false;
        if (!equal(*desugar(ita->second), *desugar(itb->second))) return false;
    }
    for (std::size_t i = 0; i < a.targets().size(); ++i) {
        if (!equal(*desugar(a.targets()[i].lhs), *desugar(b.targets()[i].lhs))) return false;
        if (!equal(*desugar(a.targets()[i].rhs), *desugar(b.targets()[i].rhs))) return false;
    }
    return true;
}

}  // namespace shacldl
