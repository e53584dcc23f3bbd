#include <doctest.h>

#include <algorithm>
#include <iterator>
#include <map>

#include "shacldl/dsl.hpp"
#include "shacldl/graph_text.hpp"
#include "shacldl/natural.hpp"
#include "support/fixtures.hpp"
#include "support/gen.hpp"

using namespace shacldl;
using shacldl::testing::Gen;
using shacldl::testing::fixture_graph;
using shacldl::testing::fixture_schema;

namespace {
DomainElement el(const char* n) { return DomainElement{node_name(n)}; }
}

TEST_CASE("star domain is graph nodes plus vocabulary constants plus one fresh element") {
    Graph g = parse_graph("r(a,b).", GraphFormat::SimpleFacts);
    auto schema = parse_schema("shape S := !!{MyNode} . targetNode MyNode ~> S .");
    StarContext ctx = star_interpretation(g, vocabulary_of(schema, g));
    CHECK(ctx.interpretation.domain() ==
          NodeSet{el("a"), el("b"), el("MyNode"), DomainElement::star()});
    // identity constants, none mapping to the fresh element
    for (const auto& [c, e] : ctx.interpretation.constants()) {
        CHECK(e == DomainElement{c});
        CHECK_FALSE(e.is_star());
    }
    // the fresh element carries no edges
    for (const auto& p : ctx.sigma.property_names) {
        CHECK(ctx.interpretation.successors(p, DomainElement::star()).empty());
        CHECK(ctx.interpretation.predecessors(p, DomainElement::star()).empty());
    }
}

TEST_CASE("star domain of the empty problem is the fresh element alone") {
    StarContext ctx = star_interpretation(Graph{}, Vocabulary{});
    CHECK(ctx.interpretation.domain() == NodeSet{DomainElement::star()});
}

TEST_CASE("star domain of a plain graph adds only the fresh element") {
    Graph g = fixture_graph("fig1.facts");
    Vocabulary sigma;
    sigma.property_names.insert(property_name("p"));
    StarContext ctx = star_interpretation(g, sigma);
    CHECK(ctx.interpretation.domain() ==
          NodeSet{el("a"), el("b"), el("c"), el("d"), DomainElement::star()});
}

TEST_CASE("double-negated constant validates every graph") {
    auto schema = parse_schema("shape S := !!{MyNode} . targetNode MyNode ~> S .");
    CHECK(validate(parse_graph("r(a,b).", GraphFormat::SimpleFacts), schema).conforms);
    CHECK(validate(Graph{}, schema).conforms);
    CHECK(validate(fixture_graph("other.nt"), schema).conforms);
}

TEST_CASE("negated-conjunction form validates graphs without the constant") {
    auto schema = fixture_schema("example3.ttl");
    CHECK(validate(fixture_graph("other.nt"), schema).conforms);
}

TEST_CASE("absent target node still violates an existential requirement") {
    auto schema = fixture_schema("remark3.shql");
    auto report = validate(fixture_graph("remark3.facts"), schema);
    CHECK_FALSE(report.conforms);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].focus == el("b"));
}

TEST_CASE("author list without the targeted person conforms; with them it does not") {
    auto schema = fixture_schema("example4.ttl");
    CHECK(validate(fixture_graph("papers.nt"), schema).conforms);
    CHECK_FALSE(validate(fixture_graph("papers_marco.nt"), schema).conforms);
}

TEST_CASE("eval_on_graph answers named nodes and generalizes to fresh ones") {
    Graph g = fixture_graph("fig1.facts");
    std::vector<Name> query{node_name("a"), node_name("b"), node_name("c"),
                            node_name("d"), node_name("z")};

    auto r = eval_on_graph(parse_shape_expr("eq(p, p*)"), g, ShapeSchema{}, query);
    CHECK(r.answers == std::map<Name, bool>{{node_name("a"), false},
                                            {node_name("b"), false},
                                            {node_name("c"), true},
                                            {node_name("d"), false},
                                            {node_name("z"), false}});
    CHECK_FALSE(r.star_verdict);

    auto t = eval_on_graph(parse_shape_expr("top"), g, ShapeSchema{}, query);
    for (const auto& [n, v] : t.answers) CHECK(v);
    CHECK(t.star_verdict);

    auto c = eval_on_graph(parse_shape_expr("closed(p)"), g, ShapeSchema{},
                           {node_name("a"), node_name("z")});
    CHECK(c.answers.at(node_name("a")));
    CHECK(c.answers.at(node_name("z")));
    CHECK(c.star_verdict);
}

TEST_CASE("all out-of-domain names inherit the same verdict") {
    Gen gen(shacldl::testing::suite_seed() + 30);
    for (int iter = 0; iter < 100; ++iter) {
        Graph g = gen.graph();
        auto shape = gen.shape_expr(3);
        std::vector<Name> query{node_name("zz0"), node_name("zz1"), node_name("zz2")};
        auto r = eval_on_graph(shape, g, ShapeSchema{}, query);
        CHECK(r.answers.at(node_name("zz0")) == r.star_verdict);
        CHECK(r.answers.at(node_name("zz1")) == r.star_verdict);
        CHECK(r.answers.at(node_name("zz2")) == r.star_verdict);
    }
}

TEST_CASE("querying extra fresh names never disturbs earlier answers") {
    Gen gen(shacldl::testing::suite_seed() + 31);
    for (int iter = 0; iter < 50; ++iter) {
        Graph g = gen.graph();
        auto shape = gen.shape_expr(3);
        std::vector<Name> base;
        for (int i = 0; i <= 5; ++i) base.push_back(gen.node(i));
        auto before = eval_on_graph(shape, g, ShapeSchema{}, base);
        auto extended = base;
        extended.push_back(node_name("isolated_new_node"));
        auto after = eval_on_graph(shape, g, ShapeSchema{}, extended);
        for (const auto& n : base) CHECK(before.answers.at(n) == after.answers.at(n));
    }
}

TEST_CASE("distinct constants denote distinct elements") {
    Gen gen(shacldl::testing::suite_seed() + 32);
    for (int iter = 0; iter < 50; ++iter) {
        Graph g = gen.graph();
        Vocabulary sigma;
        for (int i = 0; i <= 5; ++i) sigma.node_names.insert(gen.node(i));
        sigma.node_names.insert(gen.absent(0));
        StarContext ctx = star_interpretation(g, sigma);
        for (const auto& c : sigma.node_names)
            for (const auto& d : sigma.node_names) {
                if (c == d) continue;
                auto sc = eval_shape(*shape_constant(c), ctx.interpretation, sigma);
                auto sd = eval_shape(*shape_constant(d), ctx.interpretation, sigma);
                NodeSet both;
                std::set_intersection(sc.begin(), sc.end(), sd.begin(), sd.end(),
                                      std::inserter(both, both.begin()));
                CHECK(both.empty());
            }
    }
}

TEST_CASE("a fresh-focus violation is reported with the symbolic element") {
    // every node, named or not, must have an outgoing r-edge: fresh nodes fail
    auto schema = parse_schema("target top <= >= 1 r . top .");
    auto report = validate(parse_graph("r(a,b).", GraphFormat::SimpleFacts), schema);
    CHECK_FALSE(report.conforms);
    bool has_star = false;
    for (const auto& v : report.violations) has_star |= v.focus.is_star();
    CHECK(has_star);
}
