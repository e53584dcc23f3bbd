#pragma once

#include <map>
#include <set>
#include <utility>

#include "shacldl/name.hpp"

namespace shacldl {

using NodeSet = std::set<DomainElement>;
using EdgeSet = std::set<std::pair<DomainElement, DomainElement>>;

// A finite first-order interpretation: a domain, a constant map, shape-name
// sets, and binary property relations (kept as forward/backward adjacency).
class FiniteInterpretation {
public:
    void add_element(DomainElement e) { domain_.insert(std::move(e)); }
    void set_constant(Name c, DomainElement e);
    void set_shape(Name s, NodeSet elements);
    void clear_shapes() { shapes_.clear(); }
    void add_edge(const Name& p, const DomainElement& a, const DomainElement& b);

    const NodeSet& domain() const { return domain_; }
    bool contains(const DomainElement& e) const { return domain_.count(e) != 0; }

    const std::map<Name, DomainElement>& constants() const { return constants_; }
    const std::map<Name, NodeSet>& shapes() const { return shapes_; }

    // Neighbor sets; a property absent from the interpretation denotes the
    // empty relation.
    const NodeSet& successors(const Name& p, const DomainElement& a) const;
    const NodeSet& predecessors(const Name& p, const DomainElement& a) const;
    EdgeSet relation(const Name& p) const;

private:
    NodeSet domain_;
    std::map<Name, DomainElement> constants_;
    std::map<Name, NodeSet> shapes_;
    std::map<Name, std::map<DomainElement, NodeSet>> forward_;
    std::map<Name, std::map<DomainElement, NodeSet>> backward_;
};

}  // namespace shacldl
