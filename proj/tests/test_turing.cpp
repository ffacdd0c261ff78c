#include <catch2/catch_amalgamated.hpp>

#include "strongca/turing.hpp"

using namespace strongca;

TEST_CASE("built-in machine table") {
  const auto& m = minsky_utm();
  CHECK(m.states.size() == 7);
  CHECK(m.symbols.size() == 4);
  CHECK(m.table.size() == 27);  // 7*4 minus the single halting cell
  CHECK_FALSE(m.table.count({3, '0'}));

  auto ins = m.table.at({1, '1'});
  CHECK(ins.write == '1');
  CHECK(ins.move == Move::L);
  CHECK(ins.next == 2);

  ins = m.table.at({2, 'y'});
  CHECK(ins.write == '0');
  CHECK(ins.move == Move::L);
  CHECK(ins.next == 1);

  ins = m.table.at({7, 'A'});
  CHECK(ins.write == '0');
  // note: the written 0 is the blank, so it normalizes away at the tape edge
  CHECK(ins.move == Move::R);
  CHECK(ins.next == 2);
}

TEST_CASE("single steps") {
  const auto& m = minsky_utm();
  TmConfiguration c;
  c.state = 2;
  c.scanned = '0';
  auto n = tm_step(m, c);
  REQUIRE(n);
  CHECK(n->state == 2);
  CHECK(n->left == "y");
  CHECK(n->scanned == '0');

  c.state = 3;
  c.scanned = '0';
  CHECK_FALSE(tm_step(m, c));  // the halting cell

  c.state = 7;
  c.scanned = 'A';
  n = tm_step(m, c);
  REQUIRE(n);
  CHECK(n->state == 2);
  CHECK(n->left.empty());  // the written 0 is the blank at the edge

  c.state = 4;
  c.scanned = '1';
  c.left = "y";
  n = tm_step(m, c);
  REQUIRE(n);
  CHECK(n->state == 7);
  CHECK(n->scanned == 'y');
  CHECK(n->right == "1");
}

TEST_CASE("canonical form strips trailing blanks") {
  const auto& m = minsky_utm();
  TmConfiguration a, b;
  a.state = b.state = 5;
  a.scanned = b.scanned = '1';
  a.right = "00";
  b.right = "";
  a.normalize(m.blank);
  CHECK(a == b);
  // halt status is stable under blank padding
  TmConfiguration c;
  c.state = 3;
  c.scanned = '0';
  c.left = "0000";
  c.normalize('0');
  CHECK(c.left.empty());
  CHECK_FALSE(tm_step(m, c));
}

TEST_CASE("runs") {
  const auto& m = minsky_utm();
  SECTION("immediate halt") {
    TmConfiguration c;
    c.state = 3;
    c.scanned = '0';
    TmTrace tr = tm_run(m, c, 10);
    CHECK(tr.status == TmStatus::halted);
    CHECK(tr.configs.size() == 1);
  }
  SECTION("left self-loop walks forever") {
    TuringMachine w;
    w.states = {1};
    w.symbols = {'0'};
    w.table[{1, '0'}] = {'0', Move::L, 1};
    TmConfiguration c;
    TmTrace tr = tm_run(w, c, 25);
    CHECK(tr.status == TmStatus::budget_exhausted);
    CHECK(tr.configs.size() == 26);
    // every configuration equal in canonical form (all-blank tape)
    for (auto& cc : tr.configs) CHECK(cc == tr.configs.front());
  }
  SECTION("two-state busy beaver") {
    // A0 -> 1 R B ; A1 -> 1 L B ; B0 -> 1 L A ; B1 -> halt
    // hand simulation: 5 steps (the halting cell writes nothing), four 1s
    TuringMachine bb;
    bb.states = {1, 2};
    bb.symbols = {'0', '1'};
    bb.table[{1, '0'}] = {'1', Move::R, 2};
    bb.table[{1, '1'}] = {'1', Move::L, 2};
    bb.table[{2, '0'}] = {'1', Move::L, 1};
    TmConfiguration c;
    TmTrace tr = tm_run(bb, c, 20);
    REQUIRE(tr.status == TmStatus::halted);
    CHECK(tr.configs.size() - 1 == 5);
    int ones = 0;
    auto& f = tr.configs.back();
    for (char ch : f.left) ones += ch == '1';
    for (char ch : f.right) ones += ch == '1';
    ones += f.scanned == '1';
    CHECK(ones == 4);
  }
}

TEST_CASE("impulsion analysis of the built-in machine") {
  const auto& m = minsky_utm();
  auto cat = impulsion_catalog(m, {'y', '0', '1', 'A', 'B'});
  CHECK(cat.n_left == 5);
  CHECK(cat.n_right == 4);
  CHECK(cat.mu == 5);
  CHECK(cat.s_left == 3);
  CHECK(cat.s_right == 2);
  CHECK(cat.s_both == 2);
  // the number of collisions m*(n_l + n_r)
  CHECK(4 * (cat.n_left + cat.n_right) == 36);

  const auto& pinned = minsky_catalog();
  CHECK(pinned.code_for(2, 'R') == 'y');
  CHECK(pinned.code_for(5, 'R') == '0');
  CHECK(pinned.code_for(6, 'R') == '1');
  CHECK(pinned.code_for(7, 'R') == 'A');
  CHECK(pinned.code_for(1, 'L') == 'y');
  CHECK(pinned.code_for(7, 'L') == 'B');
  CHECK_FALSE(pinned.code_for(5, 'L'));
}

TEST_CASE("all-right machine needs one code per state") {
  TuringMachine w;
  w.states = {1, 2};
  w.symbols = {'0'};
  w.table[{1, '0'}] = {'0', Move::R, 2};
  w.table[{2, '0'}] = {'0', Move::R, 1};
  auto cat = impulsion_catalog(w, {'a', 'b'});
  CHECK(cat.n_left == 0);
  CHECK(cat.mu == 2);
  CHECK_THROWS_AS(impulsion_catalog(w, {'a'}), parse_error);
}

TEST_CASE("machine file round trip") {
  const auto& m = minsky_utm();
  std::string text = serialize_machine(m);
  TuringMachine m2 = parse_machine(text);
  CHECK(m2.states == m.states);
  CHECK(m2.symbols == m.symbols);
  CHECK(m2.blank == m.blank);
  REQUIRE(m2.table.size() == m.table.size());
  for (auto& [k, v] : m.table) {
    auto& v2 = m2.table.at(k);
    CHECK(v2.write == v.write);
    CHECK(v2.move == v.move);
    CHECK(v2.next == v.next);
  }
  SECTION("omitted fields mean unchanged") {
    TuringMachine m3 = parse_machine(
        "states: 1 2\nsymbols: a b blank=a\n1 a -> L\n1 b -> R 2\n");
    CHECK(m3.table.at({1, 'a'}).write == 'a');
    CHECK(m3.table.at({1, 'a'}).next == 1);
    CHECK(m3.table.at({1, 'b'}).write == 'b');
    CHECK(m3.table.at({1, 'b'}).next == 2);
  }
}
