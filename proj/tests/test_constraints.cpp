#include "support.hpp"

#include "regsynth/constraints/chains.hpp"
#include "regsynth/constraints/constr.hpp"
#include "regsynth/constraints/lasso.hpp"
#include "regsynth/constraints/maxplus.hpp"
#include "regsynth/constraints/prefix.hpp"
#include "regsynth/constraints/random.hpp"
#include "regsynth/constraints/zero.hpp"

#include <catch_amalgamated.hpp>

using namespace rs;
using rs::testing::read_text;
using rs::testing::specs_path;

namespace {

LassoConstraintSeq load_lasso(const std::string& name) { return parse_lasso(read_text(specs_path("lassos/" + name))); }

LassoConstraintSeq make_lasso(const std::vector<std::string>& regs, const std::vector<std::string>& prefix,
                              const std::vector<std::string>& loop) {
  LassoConstraintSeq s;
  s.registers = RegisterSet(regs);
  for (const auto& c : prefix) s.prefix.push_back(parse_constraint(c, s.registers));
  for (const auto& c : loop) s.loop.push_back(parse_constraint(c, s.registers));
  return s;
}

Test test_from(std::initializer_list<Rel> rels) { return Test{std::vector<Rel>(rels)}; }

Assignment assign_of(std::initializer_list<int> regs) {
  Assignment a;
  for (int r : regs) a.insert(r);
  return a;
}

}  // namespace

TEST_CASE("lasso files parse and re-format", "[constraints][lasso]") {
  for (const char* name : {"decreasing.lasso", "fig1_loop.lasso", "identity.lasso", "c0_example.lasso"}) {
    auto seq = load_lasso(name);
    CHECK(seq.consistent());
    auto again = parse_lasso(format_lasso(seq));
    CHECK(again.prefix == seq.prefix);
    CHECK(again.loop == seq.loop);
  }
}

TEST_CASE("adjacent consistency", "[constraints][lasso]") {
  auto c0c1 = load_lasso("c0_example.lasso");
  REQUIRE(c0c1.loop.size() == 2);
  CHECK(adjacent_consistent(c0c1.loop[0], c0c1.loop[1]));
  RegisterSet one({"r"});
  auto id = parse_constraint("{r,r'}", one);
  CHECK(adjacent_consistent(id, id));
  auto flipped = parse_constraint("{r1,r1'} < {r2'} < {r2} < {r3,r4'} < {r4,r3'}", c0c1.registers);
  CHECK_FALSE(adjacent_consistent(flipped, c0c1.loop[1]));
}

TEST_CASE("constr places the datum and assigned registers", "[constraints][constr]") {
  // Registers r, s plus r_d, all equal.
  auto pi = Order::all_equal(3);
  auto c = constr(pi, test_from({Rel::Above, Rel::Above}), assign_of({1}));
  REQUIRE(c.has_value());
  const int r = 0, s = 1, rd = 2;
  CHECK(c->cmp(r, s) == 0);
  CHECK(c->cmp(r, c->next(r)) == 0);
  CHECK(c->cmp(s, c->next(s)) == -1);
  CHECK(c->cmp(c->next(r), c->next(s)) == -1);
  CHECK(c->cmp(c->next(rd), c->next(s)) == 0);

  auto eq = constr(pi, test_from({Rel::Equal, Rel::Equal}), Assignment{});
  REQUIRE(eq.has_value());
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(eq->cmp(i, j) == 0);

  CHECK_FALSE(constr(pi, test_from({Rel::Above, Rel::Below}), Assignment{}).has_value());
}

TEST_CASE("constr agrees with the tests it is fed", "[constraints][constr][property]") {
  Rng rng(7);
  for (int it = 0; it < 400; ++it) {
    const int n = 1 + static_cast<int>(rng() % 3);
    auto pi = random_order(n + 1, rng);
    auto t = Test::decode(static_cast<std::uint32_t>(rng() % num_tests(n)), n);
    Assignment a;
    a.mask = static_cast<std::uint32_t>(rng() % (1U << n));
    auto c = constr(pi, t, a);
    // A brute-force order check: the test is consistent with pi restricted to R iff some
    // placement of the datum realizes it.
    bool realizable = false;
    for (int pos = 0; pos <= 2 * (n + 1) && !realizable; ++pos) {
      bool ok = true;
      for (int r = 0; r < n && ok; ++r) {
        const int level = 2 * pi.rank(r) + 1;
        const Rel want = pos < level ? Rel::Below : pos == level ? Rel::Equal : Rel::Above;
        ok = want == t.rel[static_cast<std::size_t>(r)];
      }
      realizable = ok;
    }
    REQUIRE(c.has_value() == realizable);
    if (!c) continue;
    CHECK(c->start() == pi);
    CHECK(satisfies_single_new_level(*c));
    const int rd = n;
    for (int r = 0; r < n; ++r) {
      const int rel = c->cmp(c->next(rd), r);
      const Rel got = rel < 0 ? Rel::Below : rel == 0 ? Rel::Equal : Rel::Above;
      CHECK(got == t.rel[static_cast<std::size_t>(r)]);
      if (a.contains(r)) CHECK(c->cmp(c->next(r), c->next(rd)) == 0);
      else CHECK(c->cmp(c->next(r), r) == 0);
    }
    CHECK(brute_force_prefix_N({*c}, false).has_value());
  }
}

TEST_CASE("induced lassos", "[constraints][constr]") {
  RegisterSet regs({"rM", "rl"});
  ActionLasso climb;
  climb.num_registers = 2;
  climb.prefix.push_back({test_from({Rel::Above, Rel::Above}), assign_of({0})});
  climb.loop.push_back({test_from({Rel::Below, Rel::Above}), assign_of({1})});
  auto induced = induced_lasso(climb, regs);
  REQUIRE_FALSE(induced.inconsistent_at.has_value());
  const auto& seq = induced.seq;
  REQUIRE(seq.num_registers() == 3);
  for (const auto& c : seq.loop) {
    CHECK(c.cmp(1, c.next(1)) == -1);             // rl < rl'
    CHECK(c.cmp(c.next(1), 0) == -1);             // rl' < rM
    CHECK(c.cmp(0, c.next(0)) == 0);              // rM = rM'
  }
  CHECK(has_trespassing_infinite_increasing_1w(seq));
  CHECK_FALSE(is_satisfiable_N(seq));
  CHECK(is_satisfiable_Q(seq));

  ActionLasso still;
  still.num_registers = 2;
  still.loop.push_back({test_from({Rel::Equal, Rel::Equal}), Assignment{}});
  auto flat = induced_lasso(still, regs);
  REQUIRE_FALSE(flat.inconsistent_at.has_value());
  REQUIRE(flat.seq.loop.size() == 1);
  for (int i = 0; i < 6; ++i) CHECK(flat.seq.loop[0].cmp(i, 0) == 0);

  ActionLasso broken;
  broken.num_registers = 2;
  broken.prefix.push_back({test_from({Rel::Above, Rel::Below}), Assignment{}});
  broken.loop.push_back({test_from({Rel::Equal, Rel::Equal}), Assignment{}});
  CHECK(induced_lasso(broken, regs).inconsistent_at == std::optional<std::size_t>(0));
}

TEST_CASE("chain predicates on the sample lassos", "[constraints][chains]") {
  auto dec = load_lasso("decreasing.lasso");
  auto id = make_lasso({"r"}, {}, {"{r,r'}"});
  auto inc = make_lasso({"r"}, {}, {"{r} < {r'}"});
  auto fig1 = load_lasso("fig1_loop.lasso");

  CHECK(has_infinite_decreasing_1w(dec));
  CHECK_FALSE(has_infinite_decreasing_1w(id));
  CHECK(has_infinite_increasing_1w(inc));

  auto stable = maximal_stable_chain(id);
  REQUIRE(stable.has_value());
  CHECK(stable->register_at(0) == 0);
  CHECK(stable->register_at(5) == 0);

  CHECK(has_trespassing_infinite_increasing_1w(fig1));
  CHECK_FALSE(has_trespassing_infinite_increasing_1w(inc));
}

TEST_CASE("the topmost stable chain is returned", "[constraints][chains]") {
  // Two separate equality cycles a and b, both below the cycle on c.
  auto seq = make_lasso({"a", "b", "c"}, {}, {"{a,a'} < {b,b'} < {c,c'}"});
  auto stable = maximal_stable_chain(seq);
  REQUIRE(stable.has_value());
  for (std::size_t k = 0; k < 4; ++k) CHECK(stable->register_at(k) == 2);
  // Swapping registers still gives a stable top chain that alternates.
  auto swap = make_lasso({"a", "b"}, {}, {"{a,b'} < {b,a'}"});
  auto top = maximal_stable_chain(swap);
  REQUIRE(top.has_value());
  CHECK(top->register_at(0) != top->register_at(1));
  CHECK(top->register_at(0) == top->register_at(2));
}

TEST_CASE("zero-start checks", "[constraints][chains]") {
  auto c0 = load_lasso("c0_example.lasso");
  CHECK_FALSE(zero_start_checks(c0).c0_all_equal);
  auto id = make_lasso({"r"}, {}, {"{r,r'}"});
  auto z = zero_start_checks(id);
  CHECK(z.c0_all_equal);
  CHECK_FALSE(z.has_decrease_from_0);

  // a = b = 0 at first, a stays, then a drops below its old value.
  RegisterSet ab({"a", "b"});
  std::vector<Constraint> witness{parse_constraint("{a,b,a'} < {b'}", ab), parse_constraint("{a'} < {a} < {b,b'}", ab)};
  auto zw = zero_start_checks(witness);
  CHECK(zw.c0_all_equal);
  CHECK(zw.has_decrease_from_0);
  CHECK_FALSE(brute_force_prefix_N(witness, true).has_value());
  CHECK(brute_force_prefix_N(witness, false).has_value());
}

TEST_CASE("satisfiability verdicts in both domains", "[constraints][chains]") {
  auto dec = load_lasso("decreasing.lasso");
  auto id = load_lasso("identity.lasso");
  CHECK_FALSE(is_zero_satisfiable_N(dec));
  CHECK_FALSE(is_satisfiable_N(dec));
  CHECK(is_satisfiable_Q(dec));
  CHECK(is_zero_satisfiable_Q(dec));
  CHECK(is_zero_satisfiable_N(id));
  CHECK(is_zero_satisfiable_Q(id));

  auto c0 = load_lasso("c0_example.lasso");
  CHECK(is_satisfiable_N(c0));
  CHECK_FALSE(is_zero_satisfiable_N(c0));
  CHECK(is_satisfiable_Q(c0));
  CHECK_FALSE(is_zero_satisfiable_Q(c0));

  auto seam = make_lasso({"a", "b"}, {}, {"{a} < {b,a',b'}", "{a} < {b} < {a',b'}"});
  CHECK_FALSE(seam.consistent());
  CHECK_FALSE(is_satisfiable_Q(seam));
  CHECK_FALSE(is_satisfiable_N(seam));
}

TEST_CASE("random consistent lassos are satisfiable over the rationals", "[constraints][chains][property]") {
  Rng rng(11);
  for (int it = 0; it < 300; ++it) {
    const int n = 1 + static_cast<int>(rng() % 3);
    auto seq = random_lasso(n, rng() % 3, 1 + rng() % 3, rng);
    REQUIRE(seq.consistent());
    CHECK(is_satisfiable_Q(seq));
  }
}

TEST_CASE("verdicts are invariant under rotation and unrolling", "[constraints][chains][property]") {
  Rng rng(12);
  for (int it = 0; it < 300; ++it) {
    const int n = 1 + static_cast<int>(rng() % 3);
    auto seq = random_lasso(n, rng() % 3, 1 + rng() % 3, rng);
    const auto base = chain_verdict_N(seq);
    auto m = build_max_monitor(n);
    const bool mon = eval_monitor_on_lasso(m, seq);
    for (std::size_t k = 0; k < 3; ++k) {
      auto rot = seq.rotated(k);
      CHECK(chain_verdict_N(rot).satisfiable() == base.satisfiable());
      CHECK(eval_monitor_on_lasso(m, rot) == mon);
      auto unr = seq.unrolled(k + 1);
      CHECK(chain_verdict_N(unr).satisfiable() == base.satisfiable());
      CHECK(chain_verdict_N(unr).zero_satisfiable() == base.zero_satisfiable());
      CHECK(has_trespassing_infinite_increasing_1w(unr) == has_trespassing_infinite_increasing_1w(seq));
    }
  }
}

TEST_CASE("brute-force prefix witnesses", "[constraints][prefix]") {
  auto c0 = load_lasso("c0_example.lasso");
  auto w = brute_force_prefix_N(c0.loop, false);
  REQUIRE(w.has_value());
  REQUIRE(w->size() == 3);
  const auto& v0 = (*w)[0];
  CHECK(v0[0] < v0[1]);
  CHECK(v0[1] < v0[2]);
  CHECK(v0[2] < v0[3]);
  for (std::size_t i = 0; i + 1 < w->size(); ++i) CHECK(satisfies((*w)[i], (*w)[i + 1], c0.loop[i]));

  RegisterSet ab({"a", "b"});
  std::vector<Constraint> ids(3, parse_constraint("{a,b,a',b'}", ab));
  auto z = brute_force_prefix_N(ids, true);
  REQUIRE(z.has_value());
  for (const auto& v : *z)
    for (const auto& x : v) CHECK(x == 0);
}

TEST_CASE("two-way chain depth", "[constraints][prefix]") {
  RegisterSet r({"r"});
  std::vector<Constraint> id(4, parse_constraint("{r,r'}", r));
  CHECK(max_r2w_depth(id) == 0);

  std::vector<Constraint> down(4, parse_constraint("{r'} < {r}", r));
  CHECK(max_r2w_depth(down) == 4);
  std::vector<ChainStep> chain;
  for (int m = 0; m <= 4; ++m) chain.push_back({0, m, m < 4});
  CHECK(two_way_chain_depth(down, chain) == std::optional<int>(4));
  std::vector<ChainStep> bogus{{0, 0, true}, {0, 1, false}};
  CHECK_FALSE(two_way_chain_depth(id, bogus).has_value());

  // A two-way chain: a drops at moment 1 to b's level, b then drops at moment 2, and the
  // chain continues back through b at moment 1.
  RegisterSet ab({"a", "b"});
  std::vector<Constraint> zig{parse_constraint("{b,b'} < {a'} < {a}", ab), parse_constraint("{b'} < {b} < {a,a'}", ab)};
  std::vector<ChainStep> walk{{0, 0, true}, {0, 1, true}, {1, 1, true}, {1, 2, false}};
  CHECK(two_way_chain_depth(zig, walk) == std::optional<int>(3));
  CHECK(max_r2w_depth(zig) >= 3);
}

TEST_CASE("max two-way depth is monotone in the prefix", "[constraints][prefix][property]") {
  Rng rng(13);
  for (int it = 0; it < 200; ++it) {
    const int n = 1 + static_cast<int>(rng() % 3);
    auto prefix = random_prefix(n, 6, rng);
    int last = 0;
    for (std::size_t m = 0; m <= prefix.size(); ++m) {
      std::vector<Constraint> head(prefix.begin(), prefix.begin() + static_cast<long>(m));
      const int d = max_r2w_depth(head);
      CHECK(d >= last);
      last = d;
    }
  }
}

TEST_CASE("zero-register lifting", "[constraints][zero]") {
  RegisterSet r({"r"});
  std::vector<Constraint> id(3, parse_constraint("{r,r'}", r));
  auto lifted = c0nv_add_zero_register(id);
  for (const auto& c : lifted)
    for (int i = 0; i < 4; ++i) CHECK(c.cmp(i, 0) == 0);

  std::vector<Constraint> climb(2, parse_constraint("{r} < {r'}", r));
  auto up = c0nv_add_zero_register(climb);
  REQUIRE(up.size() == 2);
  CHECK(up[0].cmp(0, 1) == 0);
  CHECK(up[0].cmp(up[0].next(0), up[0].next(1)) == 1);
  CHECK(up[1].cmp(0, 1) == 1);
  CHECK(up[1].cmp(up[1].next(1), 1) == 0);

  std::vector<Constraint> drop{parse_constraint("{r'} < {r}", r)};
  CHECK_FALSE(is_meaningful(drop));
  CHECK_THROWS_AS(c0nv_add_zero_register(drop), std::invalid_argument);
}

TEST_CASE("lifting raises two-way depth by at most one", "[constraints][zero][property]") {
  Rng rng(14);
  int tried = 0;
  for (int it = 0; it < 2000 && tried < 200; ++it) {
    const int n = 1 + static_cast<int>(rng() % 3);
    auto prefix = random_prefix(n, 1 + rng() % 5, rng, true);
    if (!is_meaningful(prefix)) continue;
    ++tried;
    auto lifted = c0nv_add_zero_register(prefix);
    CHECK(max_r2w_depth(lifted) <= max_r2w_depth(prefix) + 1);
    CHECK(prefix_consistent(lifted));
  }
  CHECK(tried >= 50);
}

TEST_CASE("max-plus monitor", "[constraints][monitor]") {
  auto m1 = build_max_monitor(1);
  CHECK(eval_monitor_on_lasso(m1, make_lasso({"r"}, {}, {"{r,r'}"})));
  CHECK_FALSE(eval_monitor_on_lasso(m1, load_lasso("decreasing.lasso")));
  auto m2 = build_max_monitor(2);
  CHECK(eval_monitor_on_lasso(m2, load_lasso("identity.lasso")));
  auto fig1 = m2.evaluate(load_lasso("fig1_loop.lasso"));
  CHECK(fig1.consistent);
  CHECK_FALSE(fig1.accepts());
}

TEST_CASE("monitor agrees with chain satisfiability on random lassos", "[constraints][monitor][property]") {
  Rng rng(15);
  for (int it = 0; it < 500; ++it) {
    const int n = 1 + static_cast<int>(rng() % 3);
    auto seq = random_lasso(n, rng() % 3, 1 + rng() % 3, rng, rng() % 2 == 0);
    auto m = build_max_monitor(n);
    REQUIRE(eval_monitor_on_lasso(m, seq) == chain_verdict_N(seq).satisfiable());
  }
}
