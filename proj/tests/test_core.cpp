#include "support.hpp"

#include "regsynth/core/order.hpp"
#include "regsynth/core/transducer.hpp"
#include "regsynth/game/product.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

using namespace rs;
using rs::testing::load_spec;

namespace {

Valuation vals(std::initializer_list<long> xs) {
  Valuation v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Test test_from(std::initializer_list<Rel> rels) { return Test{std::vector<Rel>(rels)}; }

}  // namespace

TEST_CASE("all_tests enumerates 3^n total relation maps", "[core][tests]") {
  CHECK(all_tests(0).size() == 1);
  CHECK(all_tests(0)[0].rel.empty());
  auto one = all_tests(1);
  REQUIRE(one.size() == 3);
  CHECK(one[0].rel[0] == Rel::Below);
  CHECK(one[1].rel[0] == Rel::Equal);
  CHECK(one[2].rel[0] == Rel::Above);
  auto two = all_tests(2);
  CHECK(two.size() == 9);
  std::set<std::uint32_t> codes;
  for (const auto& t : two) codes.insert(t.code());
  CHECK(codes.size() == 9);
  for (std::uint32_t c = 0; c < num_tests(3); ++c) CHECK(Test::decode(c, 3).code() == c);
}

TEST_CASE("test_holds compares the datum with every register", "[core][tests]") {
  CHECK(test_holds(vals({5}), Value(7), test_from({Rel::Above})));
  CHECK_FALSE(test_holds(vals({5}), Value(7), test_from({Rel::Equal})));
  // Registers (rl, rM) = (1, 4) and datum 2 sits strictly inside.
  CHECK(test_holds(vals({1, 4}), Value(2), test_from({Rel::Above, Rel::Below})));
}

TEST_CASE("exactly one test holds for every valuation and datum", "[core][tests][property]") {
  std::mt19937_64 rng(42);
  for (int it = 0; it < 500; ++it) {
    const int n = static_cast<int>(rng() % 4);
    Valuation v;
    for (int r = 0; r < n; ++r) v.emplace_back(static_cast<long>(rng() % 5), static_cast<long>(1 + rng() % 3));
    Value d(static_cast<long>(rng() % 5), static_cast<long>(1 + rng() % 3));
    int holding = 0;
    for (const auto& t : all_tests(n)) holding += test_holds(v, d, t) ? 1 : 0;
    REQUIRE(holding == 1);
    CHECK(test_holds(v, d, test_of(v, d)));
  }
}

TEST_CASE("update_valuation overwrites exactly the assigned registers", "[core][valuation]") {
  Assignment all;
  all.insert(0);
  CHECK(update_valuation(vals({3}), Value(9), all) == vals({9}));
  CHECK(update_valuation(vals({3, 4}), Value(9), Assignment{}) == vals({3, 4}));
  Assignment first;
  first.insert(0);
  CHECK(update_valuation(vals({0, 0}), Value(6), first) == vals({6, 0}));
}

TEST_CASE("values parse per domain", "[core][value]") {
  CHECK(parse_value("7", Domain::Nat) == Value(7));
  CHECK_FALSE(parse_value("-1", Domain::Nat).has_value());
  CHECK_FALSE(parse_value("1/2", Domain::Nat).has_value());
  CHECK(parse_value("3/6", Domain::Rat) == Value(1, 2));
  CHECK(parse_value("-4", Domain::Rat) == Value(-4));
  CHECK_FALSE(parse_value("x", Domain::Rat).has_value());
  CHECK(to_string(Value(3, 4)) == "3/4");
  CHECK(pow2(10) == 1024);
}

TEST_CASE("the up-we-go spec loads with its registers, labels and totality", "[core][spec]") {
  auto spec = load_spec("fig1.rsa");
  CHECK(spec.registers.names() == std::vector<std::string>{"rM", "rl"});
  CHECK(spec.labels == std::vector<std::string>{"a", "b"});
  // Six named states of the drawing, the Eve-wins target, and two stutter partners.
  CHECK(spec.num_states() == 9);
  CHECK(spec.is_adam(spec.initial));
  for (int q = 0; q < spec.num_states(); ++q) {
    if (spec.is_adam(q)) CHECK(spec.adam_delta[static_cast<std::size_t>(q)].size() == 9);
    else CHECK(spec.eve_delta[static_cast<std::size_t>(q)].size() == 2);
  }
}

TEST_CASE("guard expansion", "[core][spec]") {
  RegisterSet regs({"rM", "rl"});
  CHECK(expand_guard("TOP", regs).size() == 9);
  auto inside = expand_guard("rl < * < rM", regs);
  REQUIRE(inside.size() == 1);
  auto t = Test::decode(inside[0], 2);
  CHECK(t.rel[0] == Rel::Below);  // * < rM
  CHECK(t.rel[1] == Rel::Above);  // * > rl
  CHECK(expand_guard("* != rM", regs).size() == 6);
  CHECK(expand_guard("* <= rl & * >= rl", regs).size() == 3);
  CHECK(expand_guard("!(* = rM) | * = rM", regs).size() == 9);
  CHECK_THROWS_AS(expand_guard("* < nope", regs), SpecError);
}

TEST_CASE("guard with ELSE partitions the tests", "[core][spec][property]") {
  auto spec = load_spec("fig1.rsa");
  const int q3 = spec.find_state("q3");
  const int q4 = spec.find_state("q4");
  int inside = 0;
  for (std::uint32_t c = 0; c < 9; ++c) {
    const auto& mv = spec.adam_delta[static_cast<std::size_t>(q3)][c];
    auto t = Test::decode(c, 2);
    const bool in = t.rel[0] == Rel::Below && t.rel[1] == Rel::Above;
    CHECK((mv.target == q4) == in);
    inside += in ? 1 : 0;
  }
  CHECK(inside == 1);
}

TEST_CASE("a universal guard maps every test to the same edge", "[core][spec]") {
  auto spec = parse_spec(R"(kind one-sided
registers x y
labels l
state s adam priority 1 initial
state t eve priority 2
on s guard "TOP" asgn {x} -> t
on t label l -> s
)");
  const auto& row = spec.adam_delta[static_cast<std::size_t>(spec.initial)];
  REQUIRE(row.size() == 9);
  for (const auto& mv : row) {
    CHECK(mv.target == row[0].target);
    CHECK(mv.asgn == row[0].asgn);
  }
}

TEST_CASE("spec errors carry positions", "[core][spec]") {
  const std::string head = "kind one-sided\nregisters r\nlabels a\nstate s adam priority 1 initial\nstate t eve priority 1\n";
  SECTION("overlapping guards") {
    try {
      parse_spec(head + "on s guard \"* > r\" -> t\non s guard \"TOP\" -> t\non t label a -> s\n");
      FAIL("expected a SpecError");
    } catch (const SpecError& e) {
      CHECK(e.line() > 0);
    }
  }
  SECTION("incomplete Adam state") {
    CHECK_THROWS_AS(parse_spec(head + "on s guard \"* > r\" -> t\non t label a -> s\n"), SpecError);
  }
  SECTION("unknown label") {
    CHECK_THROWS_AS(parse_spec(head + "on s guard \"TOP\" -> t\non t label z -> s\n"), SpecError);
  }
  SECTION("syntax error") {
    try {
      parse_spec(head + "on s guard \"TOP\" -> t\non t label a s\n");
      FAIL("expected a SpecError");
    } catch (const SpecError& e) {
      CHECK(e.line() == 7);
    }
  }
  SECTION("reserved register names") {
    CHECK_THROWS_AS(parse_spec("kind one-sided\nregisters r_d\nlabels a\n"), SpecError);
  }
}

TEST_CASE("pretty printing round-trips", "[core][spec][property]") {
  for (const char* name : {"fig1.rsa", "trivially_even.rsa", "nested_interval.rsa"}) {
    auto spec = load_spec(name);
    auto again = parse_spec(pretty_print(spec));
    CHECK(dump_spec(again) == dump_spec(spec));
  }
}

TEST_CASE("dot export of the up-we-go spec", "[core][dot]") {
  auto spec = load_spec("fig1.rsa");
  auto dot = export_dot(spec);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("shape=square, color=red") != std::string::npos);
  CHECK(dot.find("shape=circle, color=green") != std::string::npos);
  for (const auto& s : spec.states) CHECK(dot.find("label=\"" + s.name + "\\n") != std::string::npos);
}

TEST_CASE("dot export of a one-state transducer has a self-loop per test", "[core][dot]") {
  RegisterTransducer t;
  t.registers = RegisterSet({"r"});
  t.labels = {"a"};
  t.state_names = {"only"};
  t.step = {std::vector<TransducerMove>(3)};
  t.validate();
  auto dot = export_dot(t);
  CHECK(std::count(dot.begin(), dot.end(), '\n') >= 3);
  std::size_t edges = 0;
  for (std::size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 2)) ++edges;
  CHECK(edges == 3);
}

TEST_CASE("dot export of a product game lists every vertex", "[core][dot]") {
  auto game = build_parity_game(load_spec("fig1.rsa"), Domain::Rat);
  auto dot = export_dot(game.game);
  std::size_t nodes = 0;
  for (std::size_t p = dot.find("[shape="); p != std::string::npos; p = dot.find("[shape=", p + 1)) ++nodes;
  CHECK(nodes == static_cast<std::size_t>(game.game.num_vertices()));
}

TEST_CASE("transducer dumps round-trip", "[core][transducer]") {
  RegisterTransducer t;
  t.registers = RegisterSet({"r"});
  t.labels = {"a", "b"};
  t.state_names = {"s0", "s1"};
  Assignment a;
  a.insert(0);
  t.step = {{{a, 1, 1, true}, {Assignment{}, 0, 0, true}, {a, 1, 0, false}},
            {{Assignment{}, 0, 0, true}, {a, 1, 1, true}, {Assignment{}, 0, 1, true}}};
  t.validate();
  auto back = load_transducer(dump_transducer(t));
  CHECK(dump_transducer(back) == dump_transducer(t));
  CHECK_THROWS(load_transducer("{\"states\": 3}"));
}

TEST_CASE("orders and constraints", "[core][order]") {
  auto o = Order::from_keys(std::vector<int>{3, 1, 3, 0});
  CHECK(o.num_classes() == 3);
  CHECK(o.cmp(0, 2) == 0);
  CHECK(o.cmp(1, 0) == -1);
  CHECK(all_orders(3).size() == 13);
  RegisterSet regs({"a", "b"});
  auto c = parse_constraint("{a,b'} < {b} < {a'}", regs);
  CHECK(c.cmp(0, 2 + 1) == 0);
  CHECK(c.start().cmp(0, 1) == -1);
  CHECK(parse_constraint(format_constraint(c, regs), regs) == c);
  CHECK(constraint_of(vals({1, 2}), vals({3, 1})) == c);
  CHECK(satisfies(vals({1, 2}), vals({3, 1}), c));
  CHECK_THROWS(parse_constraint("{a} < {b}", regs));
}
