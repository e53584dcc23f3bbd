#include "shacldl/interpretation.hpp"

#include <stdexcept>

namespace shacldl {

void FiniteInterpretation::set_constant(Name c, DomainElement e) {
    if (!contains(e)) throw std::invalid_argument("constant image outside domain: " + c.text);
    constants_.insert_or_assign(std::move(c), std::move(e));
}

void FiniteInterpretation::set_shape(Name s, NodeSet elements) {
    shapes_.insert_or_assign(std::move(s), std::move(elements));
}

void FiniteInterpretation::add_edge(const Name& p, const DomainElement& a,
                                    const DomainElement& b) {
    if (!contains(a) || !contains(b))
        throw std::invalid_argument("edge endpoint outside domain for property " + p.text);
    forward_[p][a].insert(b);
    backward_[p][b].insert(a);
}

const NodeSet& FiniteInterpretation::successors(const Name& p, const DomainElement& a) const {
    static const NodeSet empty;
    auto pit = forward_.find(p);
    if (pit == forward_.end()) return empty;
    auto ait = pit->second.find(a);
    return ait == pit->second.end() ? empty : ait->second;
}

const NodeSet& FiniteInterpretation::predecessors(const Name& p, const DomainElement& a) const {
    static const NodeSet empty;
    auto pit = backward_.find(p);
    if (pit == backward_.end()) return empty;
    auto ait = pit->second.find(a);
    return ait == pit->second.end() ? empty : ait->second;
}

EdgeSet FiniteInterpretation::relation(const Name& p) const {
    EdgeSet edges;
    auto pit = forward_.find(p);
    if (pit == forward_.end()) return edges;
    for (const auto& [a, succ] : pit->second)
        for (const auto& b : succ) edges.emplace(a, b);
    return edges;
}

}  // namespace shacldl
