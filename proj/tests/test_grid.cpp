#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "gridlink/grid.hpp"

using namespace gridlink;
using fixtures::H6;
using fixtures::U4a;
using fixtures::U4b;
using fixtures::W6;

namespace {

ErrorCode error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::SyntaxError;
}

}  // namespace

TEST_CASE("validate accepts the fixtures and rejects malformed data") {
  CHECK(U4a().size() == 2);
  CHECK(H6().size() == 3);
  CHECK(error_of([] { GridDiagram::validate(2, {0, 1}, {0, 1}); }) == ErrorCode::CoincidentVertices);
  CHECK(error_of([] { GridDiagram::validate(2, {0, 0}, {1, 0}); }) == ErrorCode::NotBijection);
  CHECK(error_of([] { GridDiagram::validate(1, {0}, {0}); }) == ErrorCode::SizeTooSmall);
  CHECK(error_of([] { GridDiagram::validate(3, {0, 1}, {1, 0}); }) == ErrorCode::NotBijection);
}

TEST_CASE("validate is exact on all raw assignments with n <= 4") {
  for (int n = 2; n <= 4; ++n) {
    int accepted = 0;
    int total = 1;
    for (int i = 0; i < 2 * n; ++i) total *= n;
    for (int code = 0; code < total; ++code) {
      std::vector<int> pos(n), neg(n);
      int x = code;
      for (int i = 0; i < n; ++i, x /= n) pos[i] = x % n;
      for (int i = 0; i < n; ++i, x /= n) neg[i] = x % n;
      bool expect = std::set<int>(pos.begin(), pos.end()).size() == std::size_t(n) &&
                    std::set<int>(neg.begin(), neg.end()).size() == std::size_t(n);
      for (int i = 0; i < n; ++i) expect = expect && pos[i] != neg[i];
      bool got = true;
      try {
        GridDiagram::validate(n, pos, neg);
      } catch (const Error&) {
        got = false;
      }
      CHECK(got == expect);
      accepted += got;
    }
    // n! permutations times the derangement count D(n).
    const int expected[] = {0, 0, 2 * 1, 6 * 2, 24 * 9};
    CHECK(accepted == expected[n]);
  }
}

TEST_CASE("canonical code is rotation invariant and separates inequivalent diagrams") {
  CHECK(canonical_code(U4a()) == canonical_code(U4b()));
  CHECK(canonical_code(U4a()) != canonical_code(H6()));
  CHECK(canonical_code(H6()) == canonical_code(rotate(H6(), 2, 0)));

  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 6;
    auto d = fixtures::random_diagram(n, rng);
    int a = rng() % n, b = rng() % n;
    CHECK(canonical_code(rotate(d, a, b)) == canonical_code(d));
    auto [ra, rb] = canonical_rotation(d);
    CHECK(canonical_code(rotate(d, ra, rb)).bytes.size() == canonical_code(d).bytes.size());
  }
}

TEST_CASE("canonical code agrees with brute-force rotation orbits for n = 4") {
  auto all = fixtures::all_diagrams(4);
  std::map<CanonicalCode, std::set<std::pair<std::vector<int>, std::vector<int>>>> classes;
  for (const auto& d : all) classes[canonical_code(d)].insert({d.pos_rows(), d.neg_rows()});
  for (const auto& [code, members] : classes) {
    const auto& [p, q] = *members.begin();
    auto rep = GridDiagram::validate(4, p, q);
    std::set<std::pair<std::vector<int>, std::vector<int>>> orbit;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        auto r = rotate(rep, a, b);
        orbit.insert({r.pos_rows(), r.neg_rows()});
      }
    CHECK(orbit == members);
  }
}

TEST_CASE("symmetries are involutions preserving component count") {
  auto r = apply_symmetry(U4a(), SymmetryOp::ReflTheta);
  CHECK(r.pos_rows() == std::vector<int>{1, 0});
  CHECK(r.neg_rows() == std::vector<int>{0, 1});
  CHECK(apply_symmetry(H6(), SymmetryOp::Identity) == H6());
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto d = fixtures::random_diagram(2 + trial % 6, rng);
    for (auto s : {SymmetryOp::ReflTheta, SymmetryOp::ReflPhi, SymmetryOp::ReflBoth}) {
      CHECK(apply_symmetry(apply_symmetry(d, s), s) == d);
      CHECK(components(apply_symmetry(d, s)).count == components(d).count);
    }
  }
}

TEST_CASE("reflections permute the oriented types as tabulated") {
  CHECK(reflect_type(OrientedType::II_fwd, SymmetryOp::ReflPhi) == OrientedType::I_fwd);
  CHECK(reflect_type(OrientedType::II_fwd, SymmetryOp::ReflTheta) == OrientedType::I_bwd);
  CHECK(reflect_type(OrientedType::II_fwd, SymmetryOp::ReflBoth) == OrientedType::II_bwd);
  for (auto t : kAllTypes) CHECK(reflect_type(t, symmetry_for(t)) == OrientedType::II_fwd);
}

TEST_CASE("components by edge tracing") {
  auto u = components(U4a());
  CHECK(u.count == 1);
  CHECK(u.cycles[0].size() == 4);
  CHECK(components(H6()).count == 1);
  CHECK(components(H6()).cycles[0].size() == 6);
  CHECK(components(block_sum(U4a(), U4a())).count == 2);
}

TEST_CASE("parse and serialize") {
  CHECK(parse_diagram(R"({"n":2,"pos":[0,1],"neg":[1,0]})") == U4a());
  // Top line is the highest row.
  CHECK(parse_diagram("o x\nx o\n") == U4a());
  CHECK(parse_diagram("x o / o x") == U4b());
  CHECK(canonical_code(parse_diagram("x o / o x")) == canonical_code(U4a()));
  CHECK(error_of([] { parse_diagram(R"({"n":2,"pos":[0,0],"neg":[1,0]})"); }) ==
        ErrorCode::NotBijection);
  CHECK(error_of([] { parse_diagram("{\"n\":2,"); }) == ErrorCode::SyntaxError);
  CHECK(error_of([] { parse_diagram("x q\no x"); }) == ErrorCode::SyntaxError);
  CHECK(error_of([] { parse_diagram("x x\no o"); }) == ErrorCode::NotBijection);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto d = fixtures::random_diagram(2 + trial % 7, rng);
    CHECK(parse_diagram(to_json(d)) == d);
    CHECK(parse_diagram(to_grid_text(d)) == d);
  }
}
