#include <doctest.h>

#include "shacldl/dsl.hpp"
#include "shacldl/errors.hpp"
#include "shacldl/eval.hpp"
#include "shacldl/graph_text.hpp"
#include "shacldl/natural.hpp"
#include "support/fixtures.hpp"
#include "support/gen.hpp"

using namespace shacldl;
using shacldl::testing::Gen;

namespace {

DomainElement el(const char* n) { return DomainElement{node_name(n)}; }

// The 4-node example interpretation used throughout: 8 p-edges, no q-edges.
struct Fig1 {
    FiniteInterpretation interp;
    Vocabulary sigma;

    Fig1() {
        Graph g = shacldl::testing::fixture_graph("fig1.facts");
        for (const auto& n : g.nodes()) {
            interp.add_element(DomainElement{n});
            interp.set_constant(n, DomainElement{n});
            sigma.node_names.insert(n);
        }
        for (const auto& f : g.facts())
            interp.add_edge(f.prop, DomainElement{f.subject}, DomainElement{f.object});
        sigma.property_names.insert(property_name("p"));
        sigma.property_names.insert(property_name("q"));
    }

    NodeSet eval(const std::string& shape_text) {
        return eval_shape(*desugar(parse_shape_expr(shape_text)), interp, sigma);
    }
};

NodeSet all4() { return {el("a"), el("b"), el("c"), el("d")}; }

}  // namespace

TEST_CASE("path: star closure is reflexive at edge-free nodes") {
    Fig1 f;
    auto rel = eval_path(*parse_path_expr("p*"), f.interp);
    CHECK(rel.count({el("d"), el("d")}));
    for (const auto& x : f.interp.domain()) CHECK(rel.count({x, x}));
}

TEST_CASE("path: inverse pairs from d") {
    Fig1 f;
    auto rel = eval_path(*parse_path_expr("^p"), f.interp);
    EdgeSet from_d;
    for (const auto& pr : rel)
        if (pr.first == el("d")) from_d.insert(pr);
    CHECK(from_d == EdgeSet{{el("d"), el("c")}});
}

TEST_CASE("path: star restricted to source c reaches every node") {
    Fig1 f;
    auto rel = eval_path(*parse_path_expr("p*"), f.interp);
    NodeSet from_c;
    for (const auto& pr : rel)
        if (pr.first == el("c")) from_c.insert(pr.second);
    CHECK(from_c == all4());
}

TEST_CASE("path from a single source") {
    Fig1 f;
    CHECK(eval_path_from(*parse_path_expr("p"), f.interp, el("c")) == all4());
    CHECK(eval_path_from(*parse_path_expr("p"), f.interp, el("d")).empty());
    CHECK(eval_path_from(*parse_path_expr("p?"), f.interp, el("d")) == NodeSet{el("d")});
    CHECK_THROWS_AS(eval_path_from(*parse_path_expr("p"), f.interp, el("zz")),
                    ElementNotInDomain);
}

TEST_CASE("per-source path evaluation agrees with the full relation") {
    Gen gen(shacldl::testing::suite_seed() + 20);
    for (int iter = 0; iter < 100; ++iter) {
        Graph g = gen.graph();
        FiniteInterpretation interp;
        for (int i = 0; i <= 5; ++i) interp.add_element(DomainElement{gen.node(i)});
        for (const auto& fct : g.facts())
            interp.add_edge(fct.prop, DomainElement{fct.subject}, DomainElement{fct.object});
        auto path = gen.path(3);
        Evaluator ev(interp, {});
        auto rel = ev.eval_path(*path);
        for (const auto& a : interp.domain()) {
            NodeSet expect;
            for (const auto& pr : rel)
                if (pr.first == a) expect.insert(pr.second);
            CHECK(ev.eval_path_from(*path, a) == expect);
        }
    }
}

TEST_CASE("shape: eq, disj and closed on the example interpretation") {
    Fig1 f;
    CHECK(f.eval("eq(p, p*)") == NodeSet{el("c")});
    CHECK(f.eval("disj(p, ^p)") == NodeSet{el("d")});
    CHECK(f.eval("closed(p)") == all4());
    // literal reading of the closedness rule: only the edge-free node
    // satisfies closed(q) here, since p is the one property in use
    CHECK(f.eval("closed(q)") == NodeSet{el("d")});
    CHECK(f.eval("!top").empty());
    CHECK(f.eval("top") == all4());
}

TEST_CASE("shape: counting, constants and booleans") {
    Fig1 f;
    // c is the only node with 4 distinct p-successors
    CHECK(f.eval(">= 4 p . top") == NodeSet{el("c")});
    CHECK(f.eval(">= 1 p . {d}") == NodeSet{el("c")});
    CHECK(f.eval("{a} | {d}") == NodeSet{el("a"), el("d")});
    CHECK(f.eval("{a} & {d}").empty());
    CHECK(f.eval("!{a}") == NodeSet{el("b"), el("c"), el("d")});
}

TEST_CASE("shape: unresolved references and constants raise") {
    Fig1 f;
    CHECK_THROWS_AS(f.eval("SomeShape"), UnboundShapeName);
    CHECK_THROWS_AS(f.eval("{nowhere}"), ConstantNotInterpreted);
}

TEST_CASE("extend: undefined names default to the full domain") {
    Graph g = parse_graph("r(a,b).", GraphFormat::SimpleFacts);
    auto schema = parse_schema(
        "shape MyShape := NoDef & AlsoNoDef . targetSubjectsOf r ~> MyShape .");
    Vocabulary sigma = vocabulary_of(schema, g);
    FiniteInterpretation interp;
    for (const auto& n : g.nodes()) {
        interp.add_element(DomainElement{n});
        interp.set_constant(n, DomainElement{n});
    }
    for (const auto& fct : g.facts())
        interp.add_edge(fct.prop, DomainElement{fct.subject}, DomainElement{fct.object});

    auto ext = extend_interpretation(interp, schema.definitions(), sigma);
    CHECK(ext.shapes().at(shape_name("NoDef")) == ext.domain());
    CHECK(ext.shapes().at(shape_name("AlsoNoDef")) == ext.domain());
    CHECK(ext.shapes().at(shape_name("MyShape")) == ext.domain());

    auto report = check_conformance(interp, schema, sigma);
    CHECK(report.conforms);
    CHECK(report.violations.empty());
}

TEST_CASE("extend: empty definitions assign the domain to every sigma shape name") {
    FiniteInterpretation interp;
    interp.add_element(el("x"));
    Vocabulary sigma;
    sigma.shape_names = {shape_name("s0"), shape_name("s1")};
    auto ext = extend_interpretation(interp, {}, sigma);
    CHECK(ext.shapes().size() == 2);
    for (const auto& [s, val] : ext.shapes()) CHECK(val == ext.domain());
}

TEST_CASE("extend: defined shapes get their body's value") {
    Graph g = parse_graph("r(a,b).", GraphFormat::SimpleFacts);
    auto schema = parse_schema("shape s := >= 1 r . top .");
    Vocabulary sigma = vocabulary_of(schema, g);
    StarContext ctx = star_interpretation(g, sigma);
    auto ext = extend_interpretation(ctx.interpretation, schema.definitions(), sigma);
    CHECK(ext.shapes().at(shape_name("s")) == NodeSet{el("a")});
    // the extension is a fixpoint of each definition
    for (const auto& [s, body] : schema.definitions())
        CHECK(eval_shape(*desugar(body), ext, sigma) == ext.shapes().at(s));
}

TEST_CASE("conformance: negated undefined shape flags the subject") {
    Graph g = parse_graph("r(a,b).", GraphFormat::SimpleFacts);
    auto schema = parse_schema("shape MyShape := !NoDef . targetSubjectsOf r ~> MyShape .");
    Vocabulary sigma = vocabulary_of(schema, g);
    StarContext ctx = star_interpretation(g, sigma);
    auto report = check_conformance(ctx.interpretation, schema, sigma);
    CHECK_FALSE(report.conforms);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].target_index == 0);
    CHECK(report.violations[0].focus == el("a"));
}

TEST_CASE("conformance: empty schema always conforms") {
    Fig1 f;
    CHECK(check_conformance(f.interp, ShapeSchema{}, f.sigma).conforms);
}

TEST_CASE("laws: De Morgan and double negation hold") {
    Gen gen(shacldl::testing::suite_seed() + 21);
    for (int iter = 0; iter < 200; ++iter) {
        Graph g = gen.graph();
        Vocabulary sigma;
        for (int i = 0; i <= 5; ++i) sigma.node_names.insert(gen.node(i));
        for (int i = 0; i <= 1; ++i) sigma.node_names.insert(gen.absent(i));
        for (int i = 0; i <= 2; ++i) sigma.property_names.insert(gen.prop(i));
        StarContext ctx = star_interpretation(g, sigma);
        auto p1 = desugar(gen.shape_expr(3));
        auto p2 = desugar(gen.shape_expr(3));
        Evaluator ev(ctx.interpretation, sigma);
        CHECK(ev.eval_shape(*shape_not(shape_and(shape_not(p1), shape_not(p2)))) ==
              ev.eval_shape(*shape_or(p1, p2)));
        CHECK(ev.eval_shape(*shape_not(shape_or(shape_not(p1), shape_not(p2)))) ==
              ev.eval_shape(*shape_and(p1, p2)));
        CHECK(ev.eval_shape(*shape_not(shape_not(p1))) == ev.eval_shape(*p1));
    }
}

TEST_CASE("laws: forall matches its direct definition") {
    Gen gen(shacldl::testing::suite_seed() + 22);
    for (int iter = 0; iter < 100; ++iter) {
        Graph g = gen.graph();
        Vocabulary sigma;
        for (int i = 0; i <= 5; ++i) sigma.node_names.insert(gen.node(i));
        for (int i = 0; i <= 1; ++i) sigma.node_names.insert(gen.absent(i));
        for (int i = 0; i <= 2; ++i) sigma.property_names.insert(gen.prop(i));
        StarContext ctx = star_interpretation(g, sigma);
        auto path = gen.path(2);
        auto body = desugar(gen.shape_expr(2));
        Evaluator ev(ctx.interpretation, sigma);
        auto via_desugar = ev.eval_shape(*desugar(shape_forall(path, body)));
        auto members = ev.eval_shape(*body);
        NodeSet direct;
        for (const auto& a : ctx.interpretation.domain()) {
            NodeSet reached = ev.eval_path_from(*path, a);
            bool all_in = true;
            for (const auto& b : reached)
                if (!members.count(b)) { all_in = false; break; }
            if (all_in) direct.insert(a);
        }
        CHECK(via_desugar == direct);
    }
}

TEST_CASE("laws: closed is monotone in its property set") {
    Fig1 f;
    auto closed_p = f.eval("closed(p)");
    auto closed_pq = f.eval("closed(p, q)");
    for (const auto& x : f.eval("closed()")) CHECK(closed_p.count(x));
    for (const auto& x : closed_p) CHECK(closed_pq.count(x));
}

TEST_CASE("laws: counting is downward monotone, star dominates optional") {
    Gen gen(shacldl::testing::suite_seed() + 23);
    for (int iter = 0; iter < 100; ++iter) {
        Graph g = gen.graph();
        Vocabulary sigma;
        for (int i = 0; i <= 5; ++i) sigma.node_names.insert(gen.node(i));
        for (int i = 0; i <= 1; ++i) sigma.node_names.insert(gen.absent(i));
        for (int i = 0; i <= 2; ++i) sigma.property_names.insert(gen.prop(i));
        StarContext ctx = star_interpretation(g, sigma);
        Evaluator ev(ctx.interpretation, sigma);

        auto path = gen.path(2);
        auto body = desugar(gen.shape_expr(2));
        auto ge2 = ev.eval_shape(*shape_at_least(2, path, body));
        auto ge1 = ev.eval_shape(*shape_at_least(1, path, body));
        for (const auto& x : ge2) CHECK(ge1.count(x));

        auto base = ev.eval_path(*path);
        auto opt = ev.eval_path(*path_optional(path));
        auto star = ev.eval_path(*path_star(path));
        auto star2 = ev.eval_path(*path_star(path_star(path)));
        for (const auto& pr : base) CHECK(opt.count(pr));
        for (const auto& pr : opt) CHECK(star.count(pr));
        CHECK(star == star2);
    }
}
