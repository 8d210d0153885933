#include <doctest.h>

#include <random>
#include <string>

#include "fixtures.hpp"
#include "gridlink/staircase.hpp"
#include "gridlink/svg.hpp"

using namespace gridlink;

namespace {

int count(const std::string& s, const std::string& needle) {
  int c = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++c;
  return c;
}

// Every opened element is closed, either inline or by a matching end tag.
bool balanced(const std::string& s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '<') continue;
    const auto end = s.find('>', i);
    if (end == std::string::npos) return false;
    if (s[i + 1] == '/')
      --depth;
    else if (s[end - 1] != '/')
      ++depth;
    if (depth < 0) return false;
    i = end;
  }
  return depth == 0;
}

}  // namespace

TEST_CASE("fixture pictures") {
  const auto u = render_svg(fixtures::U4a(), RenderTarget::Diagram);
  CHECK(count(u, "class=\"vertex\"") == 4);
  CHECK(count(u, "fill=\"black\" stroke") == 2);
  const auto h = render_svg(fixtures::H6(), RenderTarget::Gamma);
  CHECK(count(h, "class=\"edge\"") == 6);
  CHECK(count(h, "class=\"crossing\"") == 3);
  CHECK(count(render_svg(fixtures::U4a(), RenderTarget::Front), "class=\"gap\"") == 0);
  CHECK(count(render_svg(fixtures::H6(), RenderTarget::Front), "class=\"gap\"") == 3);
}

TEST_CASE("pictures are deterministic and well formed") {
  std::mt19937 rng(97);
  for (int trial = 0; trial < 50; ++trial) {
    auto d = fixtures::random_diagram(2 + trial % 6, rng);
    RenderOptions opts;
    opts.type = kAllTypes[trial % 4];
    for (auto target : {RenderTarget::Diagram, RenderTarget::Gamma, RenderTarget::Front}) {
      const auto a = render_svg(d, target, opts);
      CHECK(a == render_svg(d, target, opts));
      CHECK(a.rfind("<svg", 0) == 0);
      CHECK(balanced(a));
    }
    const auto g = render_svg(d, RenderTarget::Gamma, opts);
    CHECK(count(g, "class=\"edge\"") == 2 * d.size());
    CHECK(count(g, "class=\"crossing\"") == omega(d, opts.type).m);
  }
}
