#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <random>
#include <set>

#include <json.hpp>

#include "fixtures.hpp"
#include "gridlink/solver.hpp"

using namespace gridlink;
using fixtures::H6;
using fixtures::U4a;
using fixtures::U4b;
using fixtures::W6;

namespace {

ExplorationConfig config_for(OrientedType t) {
  ExplorationConfig cfg;
  cfg.type = t;
  return cfg;
}

void check_certificate(const Verdict& v, const GridDiagram& from, const GridDiagram& to, int bound) {
  auto* e = std::get_if<Equivalent>(&v);
  REQUIRE(e != nullptr);
  CHECK(e->certificate.initial == from);
  GridDiagram cur = e->certificate.initial;
  for (const auto& m : e->certificate.steps) {
    cur = apply_move(cur, m);
    CHECK(cur.size() <= bound);
  }
  CHECK(canonical_code(cur) == canonical_code(to));
}

}  // namespace

TEST_CASE("fixture verdicts") {
  auto v = decide(U4a(), H6());
  auto* d = std::get_if<DistinctOmega>(&v);
  REQUIRE(d != nullptr);
  CHECK(d->first == Omega{1, 1, 0});
  CHECK(d->second == Omega{2, 2, 3});
  CHECK(std::holds_alternative<DistinctOmega>(decide(U4a(), W6())));
  CHECK(std::holds_alternative<DistinctOmega>(decide(W6(), H6())));

  auto same = decide(U4a(), U4b());
  REQUIRE(std::holds_alternative<Equivalent>(same));
  CHECK(std::get<Equivalent>(same).certificate.steps.empty());

  auto b = brute_bfs(U4a(), U4b(), OrientedType::II_fwd, 6, 100000);
  REQUIRE(std::holds_alternative<Equivalent>(b));
  CHECK(std::get<Equivalent>(b).certificate.steps.empty());
  CHECK_FALSE(std::holds_alternative<Equivalent>(brute_bfs(U4a(), H6(), OrientedType::II_fwd, 8, 100000)));
}

TEST_CASE("random round trips are certified") {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 120; ++trial) {
    const auto t = kAllTypes[trial % 4];
    auto a = fixtures::random_diagram(2 + trial % 5, rng);
    auto b = replay(fixtures::random_chain(a, 6, MoveSet::for_type(t), rng, 9));
    auto v = decide(a, b, config_for(t));
    check_certificate(v, a, b, 2 * std::max(a.size(), b.size()) + 4);
    for (const auto& m : std::get<Equivalent>(v).certificate.steps)
      CHECK((m.kind == MoveKind::Exchange || m.type == t));
  }
}

TEST_CASE("decide never contradicts brute force on small diagrams") {
  std::vector<GridDiagram> pool;
  for (int n = 2; n <= 3; ++n)
    for (auto& d : fixtures::all_diagrams(n)) pool.push_back(d);
  int equivalent = 0;
  for (const auto& a : pool)
    for (const auto& b : pool) {
      ExplorationConfig cfg;
      cfg.max_vertices = 8;
      cfg.max_states = 100000;
      auto v = decide(a, b, cfg);
      auto w = brute_bfs(a, b, OrientedType::II_fwd, 8, 100000);
      if (std::holds_alternative<Equivalent>(v)) {
        ++equivalent;
        CHECK(omega(a) == omega(b));
        check_certificate(v, a, b, 8);
        CHECK_FALSE(std::holds_alternative<DistinctClosedGraph>(w));
      }
      if (std::holds_alternative<Equivalent>(w)) {
        CHECK_FALSE(std::holds_alternative<DistinctOmega>(v));
        CHECK_FALSE(std::holds_alternative<DistinctClosedGraph>(v));
      }
    }
  CHECK(equivalent > int(pool.size()));
}

TEST_CASE("limits") {
  std::mt19937 rng(61);
  int inconclusive = 0;
  for (int trial = 0; trial < 20; ++trial) {
    auto a = fixtures::random_diagram(5, rng);
    auto b = replay(fixtures::random_chain(a, 8, MoveSet::for_type(OrientedType::II_fwd), rng, 8));
    if (homology_code(a) == homology_code(b)) continue;
    ExplorationConfig cfg;
    cfg.max_states = 3;
    SearchStats stats;
    auto v = decide(a, b, cfg, &stats);
    if (auto* i = std::get_if<Inconclusive>(&v)) {
      ++inconclusive;
      CHECK(i->reason == "state limit reached");
      CHECK(i->states_explored <= 3);
      CHECK(stats.states <= 3);
    }
  }
  CHECK(inconclusive > 0);
  auto v = brute_bfs(H6(), W6(), OrientedType::II_fwd, 8, 10);
  REQUIRE(std::holds_alternative<Inconclusive>(v));
  CHECK(std::get<Inconclusive>(v).states_explored <= 10);
  // The II_fwd component of U4a stays tiny under this bound.
  auto closed = brute_bfs(U4a(), H6(), OrientedType::II_fwd, 8, 100000);
  REQUIRE(std::holds_alternative<DistinctClosedGraph>(closed));
  CHECK(std::get<DistinctClosedGraph>(closed).states_explored == 7);
}

TEST_CASE("threads and repeated runs give identical verdicts") {
  std::mt19937 rng(67);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = fixtures::random_diagram(3 + trial % 4, rng);
    auto b = replay(fixtures::random_chain(a, 8, MoveSet::for_type(OrientedType::II_fwd), rng, 9));
    ExplorationConfig serial, parallel;
    parallel.threads = 4;
    SearchStats s1, s2;
    auto v1 = decide(a, b, serial, &s1);
    auto v2 = decide(a, b, parallel, &s2);
    auto v3 = decide(a, b, serial);
    CHECK(verdict_to_json(v1) == verdict_to_json(v2));
    CHECK(verdict_to_json(v1) == verdict_to_json(v3));
    CHECK(s1.states == s2.states);
  }
}

TEST_CASE("verdict JSON and code cache") {
  auto j = nlohmann::json::parse(verdict_to_json(decide(U4a(), H6())));
  CHECK(j["verdict"] == "DistinctOmega");
  CHECK(j["omega"][1] == nlohmann::json::array({2, 2, 3}));
  CHECK(verdict_name(decide(U4a(), U4b())) == "Equivalent");

  const auto path = (std::filesystem::temp_directory_path() / "gridlink_cache_test.txt").string();
  std::remove(path.c_str());
  std::mt19937 rng(71);
  auto a = fixtures::random_diagram(4, rng);
  auto b = replay(fixtures::random_chain(a, 6, MoveSet::for_type(OrientedType::II_fwd), rng, 8));
  ExplorationConfig cfg;
  cfg.cache_path = path;
  SearchStats stats;
  decide(a, b, cfg, &stats);
  auto first = load_code_cache(path);
  CHECK(!first.empty());
  CHECK(first.size() <= stats.codes);
  CHECK(std::set<HomologyCode>(first.begin(), first.end()).size() == first.size());
  decide(a, b, cfg);
  CHECK(load_code_cache(path).size() == first.size());
  std::remove(path.c_str());
}
