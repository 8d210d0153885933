#include <doctest.h>

#include <map>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "gridlink/homotype.hpp"

using namespace gridlink;
using fixtures::H6;
using fixtures::U4a;
using fixtures::U4b;
using fixtures::W6;

namespace {

int word(const HomologyCode& c, std::size_t i) { return (c.bytes[2 * i] << 8) | c.bytes[2 * i + 1]; }

MoveSet stabs_of(OrientedType t) {
  MoveSet s;
  s.stab[static_cast<int>(t)] = true;
  return s;
}

// Random walk through moves that keep the type-t homology code.
GridDiagram code_preserving_walk(GridDiagram cur, OrientedType t, int length, std::mt19937& rng) {
  const auto c = homology_code(cur, t);
  for (int i = 0; i < length; ++i) {
    auto moves = enumerate_moves(cur, MoveSet::for_type(t));
    std::erase_if(moves, [&](const Move& m) {
      return (m.kind == MoveKind::Stab && cur.size() >= 10) || homology_code(apply_move(cur, m), t) != c;
    });
    if (moves.empty()) break;
    cur = apply_move(cur, moves[rng() % moves.size()]);
  }
  return cur;
}

}  // namespace

TEST_CASE("fixture codes") {
  CHECK(homology_code(U4a()) == homology_code(U4b()));
  CHECK(homology_code(U4a()) != homology_code(H6()));
  CHECK_FALSE(same_homology_type(U4a(), W6()));
  for (const auto& m : enumerate_moves(U4a(), stabs_of(OrientedType::II_fwd)))
    CHECK(homology_code(apply_move(U4a(), m)) == homology_code(U4a()));
  CHECK(homology_code(U4a()).omega() == Omega{1, 1, 0});
  CHECK(homology_code(H6()).omega() == Omega{2, 2, 3});
  CHECK(homology_code(U4a()).bytes.size() == 6);
}

TEST_CASE("code invariants on random diagrams") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 1000; ++trial) {
    auto d = fixtures::random_diagram(2 + trial % 8, rng);
    const auto c = homology_code(d);
    CHECK(c == homology_code(rotate(d, int(rng() % 11), int(rng() % 13))));
    CHECK(c.omega() == omega(d));
    CHECK(HomologyCode::from_hex(c.hex()) == c);
    const auto w = omega(d);
    if (w.m == 0) {
      CHECK(c.bytes.size() == 6);
      auto cs = curve_structure(d);
      CHECK(cs.arcs.empty());
      CHECK(cs.closed.count == std::gcd(w.k, w.l));
      CHECK(std::gcd(cs.closed.theta_class, cs.closed.phi_class) == 1);
      continue;
    }
    const int K = word(c, 3), L = word(c, 4);
    REQUIRE(c.bytes.size() == std::size_t(2 * (5 + 12 * K * L)));
    auto cell = [&](int s, int u, int f) { return word(c, 5 + 3 * (s * 2 * L + u) + f); };
    // Every cut column meets the curve k times; every cut row, l times.
    for (int s = 0; s < 2 * K; ++s) {
      int sum = 0;
      for (int u = 0; u < 2 * L; ++u) sum += cell(s, u, 0);
      CHECK(sum == w.k);
    }
    for (int u = 0; u < 2 * L; ++u) {
      int sum = 0;
      for (int s = 0; s < 2 * K; ++s) sum += cell(s, u, 1);
      CHECK(sum == w.l);
    }
    int flags = 0;
    for (int s = 0; s < 2 * K; ++s)
      for (int u = 0; u < 2 * L; ++u) flags += cell(s, u, 2);
    CHECK(flags == w.m);
    auto cs = curve_structure(d);
    CHECK(int(cs.crossings.size()) == w.m);
    CHECK(int(cs.arcs.size()) == 2 * w.m);
  }
  CHECK_THROWS_AS(HomologyCode::from_hex("0g"), Error);
  CHECK_THROWS_AS(HomologyCode::from_hex("001"), Error);
}

TEST_CASE("reflected codes and omega under type-T moves") {
  std::mt19937 rng(47);
  int kept = 0, changed = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto d = fixtures::random_diagram(2 + trial % 6, rng);
    for (auto t : kAllTypes) {
      const auto c = homology_code(d, t);
      CHECK(c == homology_code(apply_symmetry(d, symmetry_for(t))));
      for (const auto& m : enumerate_moves(d, MoveSet::for_type(t))) {
        const auto c2 = homology_code(apply_move(d, m), t);
        CHECK(c2.omega() == c.omega());
        (c2 == c ? kept : changed)++;
      }
    }
  }
  // Moves may or may not change the homology type; both happen.
  CHECK(kept > 0);
  CHECK(changed > 0);
}

TEST_CASE("connect within a type") {
  auto empty = connect_within_type(U4a(), U4b());
  CHECK(empty.steps.empty());
  CHECK(connect_within_type(U4a(), U4a()).steps.empty());
  try {
    connect_within_type(U4a(), H6());
    FAIL("expected NotSameType");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSameType);
  }

  std::mt19937 rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    const auto t = kAllTypes[trial % 4];
    auto a = fixtures::random_diagram(2 + trial % 5, rng);
    auto b = code_preserving_walk(a, t, 8, rng);
    ConnectLog log;
    auto seq = connect_within_type(a, b, t, &log);
    CHECK(canonical_code(replay(seq)) == canonical_code(b));
    CHECK(log.code_preserving);
    const auto c = homology_code(a, t);
    auto cur = seq.initial;
    for (const auto& m : seq.steps) {
      CHECK((m.kind == MoveKind::Exchange || m.type == t));
      cur = apply_move(cur, m);
      CHECK(homology_code(cur, t) == c);
    }
    REQUIRE(log.measure.size() == seq.steps.size() + 1);
    for (std::size_t i = 0; i + 1 < log.measure.size(); ++i) CHECK(log.measure[i + 1] < log.measure[i]);
    CHECK(log.measure.back() == 0);
  }
}

TEST_CASE("every code class of small diagrams is connected") {
  std::map<HomologyCode, std::vector<GridDiagram>> groups;
  for (int n = 2; n <= 5; ++n)
    for (const auto& d : fixtures::all_diagrams(n)) groups[homology_code(d)].push_back(d);
  int pairs = 0;
  for (const auto& [code, ds] : groups)
    for (std::size_t i = 1; i < ds.size(); i += 7) {
      auto seq = connect_within_type(ds[0], ds[i]);
      CHECK(canonical_code(replay(seq)) == canonical_code(ds[i]));
      ++pairs;
    }
  CHECK(pairs > 50);
}
