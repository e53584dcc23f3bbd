#pragma once

#include <map>
#include <set>

#include "shacldl/name.hpp"

namespace shacldl {

struct Fact {
    Name prop;
    Name subject;
    Name object;
    friend auto operator<=>(const Fact&, const Fact&) = default;
};

// A finite fact set with forward and backward adjacency per property.
// Duplicate facts collapse; the indexes always agree with the fact set.
class Graph {
public:
    using Adjacency = std::map<Name, std::map<Name, std::set<Name>>>;

    Graph() = default;

    void add_fact(Name p, Name subject, Name object);

    const std::set<Fact>& facts() const { return facts_; }
    const Adjacency& forward() const { return forward_; }
    const Adjacency& backward() const { return backward_; }

    // N_G: node names appearing as subject or object of some fact.
    const std::set<Name>& nodes() const { return nodes_; }
    std::set<Name> properties() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.facts_ == b.facts_; }

private:
    std::set<Fact> facts_;
    std::set<Name> nodes_;
    Adjacency forward_;
    Adjacency backward_;
};

}  // namespace shacldl
