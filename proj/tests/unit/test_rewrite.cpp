#include <doctest.h>

#include "../oracle/oracle.hpp"
#include "srank/rewrite.hpp"
#include "util.hpp"

using namespace srank;

TEST_CASE("rewrite: absorbing relation gives a single rule") {
  const auto m = testutil::load(testutil::kAbsorb);
  REQUIRE(m.rs.confluent());
  REQUIRE(m.rs.rules().size() == 1);
  CHECK(m.rs.rules()[0] == Rule{{1, 1}, {1, 0}});
  for (Coeff i = 0; i <= 4; ++i)
    for (Coeff j = 0; j <= 4; ++j) {
      const ExponentVector v{i, j};
      const ExponentVector expect = i ? ExponentVector{i, 0} : ExponentVector{0, j};
      CHECK(m.rs.normal_form(v) == expect);
    }
}

TEST_CASE("rewrite: free monoid has no rules") {
  const auto m = testutil::load("gens a b c;");
  CHECK(m.rs.confluent());
  CHECK(m.rs.rules().empty());
}

TEST_CASE("rewrite: two-relation family normal forms") {
  const auto m = testutil::load(testutil::kTwoRel3);
  REQUIRE(m.rs.confluent());
  CHECK(m.rs.equal({3, 0}, {1, 1}));
  CHECK(m.rs.equal({5, 0}, {1, 2}));
  CHECK_FALSE(m.rs.equal({0, 1}, {2, 0}));
  CHECK(m.rs.normal_form({0, 0}) == ExponentVector{0, 0});
  CHECK(critical_pairs_join(m.rs));
}

TEST_CASE("rewrite: windows") {
  const auto m = testutil::load(testutil::kAbsorb);
  CHECK(enumerate_window(m.rs, 2).size() == 5);
  CHECK(enumerate_window(m.rs, 0).size() == 1);
  const auto f = testutil::load("gens a;");
  const auto w = enumerate_window(f.rs, 3);
  REQUIRE(w.size() == 4);
  CHECK(w[3] == ExponentVector{3});
  const Window win(m.rs, 3);
  CHECK(win.find(ExponentVector{0, 3}) != Window::npos);
  CHECK(win.find(ExponentVector{1, 1}) == Window::npos);
}

TEST_CASE("rewrite: exhausted budget reports non-confluence") {
  const auto p = parse_presentation("gens a b c; rel 2 a + b = 3 c; rel a + 2 c = 2 b; rel 3 b = a + c;");
  const auto rs = complete(p, 1);
  CHECK_FALSE(rs.confluent());
  CHECK_THROWS_AS(rs.require_confluent(), NotConfluentError);
}

TEST_CASE("rewrite: agrees with the BFS oracle on the fixture presentations") {
  for (const char* text : {testutil::kTwoRel3, testutil::kAbsorb, testutil::kThreeA, testutil::kInfinity,
                           testutil::kFourNine}) {
    const auto m = testutil::load(text);
    const auto window = testutil::all_vectors(m.p.rank(), 5);
    std::size_t conclusive = 0;
    for (const auto& u : window)
      for (const auto& v : window) {
        const auto ans = oracle::bfs_equal(m.p, u, v);
        if (ans == oracle::Answer::Inconclusive) continue;
        ++conclusive;
        CHECK((ans == oracle::Answer::Equal) == m.rs.equal(u, v));
      }
    CHECK(conclusive > 0);
  }
}
