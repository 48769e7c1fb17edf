#include <doctest.h>

#include "test_util.hpp"
#include "tough/errors.hpp"
#include "tough/toughness.hpp"

using namespace tough;
using namespace tough::testing;

TEST_CASE("toughness of known graphs") {
  SUBCASE("C5") {
    const auto r = toughness_exact(gen_cycle(5));
    CHECK(r.value == Rational(1));
    CHECK(r.witness == 0b00101);
    CHECK(r.components == 2);
  }
  SUBCASE("Petersen") {
    const auto r = toughness_exact(gen_petersen());
    CHECK(r.value == Rational(4, 3));
    CHECK(set_size(r.witness) == 4);
    CHECK(r.components == 3);
  }
  SUBCASE("K33") {
    const auto r = toughness_exact(gen_complete_bipartite(3, 3));
    CHECK(r.value == Rational(1));
    CHECK(r.witness == 0b000111);
    CHECK(r.components == 3);
  }
}

TEST_CASE("complete graphs have no toughness") {
  CHECK_THROWS_AS(toughness_exact(gen_complete(5)), PreconditionError);
}

TEST_CASE("disconnected input returns zero with a flag") {
  const auto r = toughness_exact(load_graph("4 2\n0 1\n2 3"));
  CHECK(r.disconnected);
  CHECK(r.value == Rational(0));
  CHECK(r.witness == 0);
  CHECK(r.components == 2);
}

TEST_CASE("witness is independently checkable") {
  for (const Graph& g : {gen_petersen(), gen_extremal_hd(3, 2),
                         random_connected_regular(12, 3, 9)}) {
    const auto r = toughness_exact(g);
    const auto comps = components(g, r.witness);
    CHECK(static_cast<int>(comps.size()) == r.components);
    CHECK(Rational(set_size(r.witness), r.components) == r.value);
  }
}

TEST_CASE("is_t_tough") {
  CHECK(is_t_tough(gen_petersen(), Rational(1)));
  CHECK(is_t_tough(gen_petersen(), Rational(4, 3)));
  CHECK_FALSE(is_t_tough(gen_petersen(), Rational(3, 2)));
  CHECK(is_t_tough(gen_complete_bipartite(3, 3), Rational(1)));
  CHECK_FALSE(is_t_tough(gen_complete_bipartite(3, 3), Rational(7, 6)));
}

TEST_CASE("bipartite regular graphs are at most 1-tough") {
  for (int a = 2; a <= 5; ++a) {
    const auto r = toughness_exact(gen_complete_bipartite(a, a));
    CHECK(r.value <= Rational(1));
  }
}

TEST_CASE("hub cut caps the matched-clique family at k/d") {
  const auto r = toughness_exact(gen_extremal_hd(3, 2));
  CHECK(r.value <= Rational(2, 3));
}

TEST_CASE("pruned search agrees with the all-subsets oracle") {
  int done = 0;
  for (int it = 0; it < 200 && done < 100; ++it) {
    const int n = 8 + 2 * (it % 3);  // 8, 10, 12
    Graph g(1);
    try {
      g = gen_random_regular(n, 3, 1000 + it);
    } catch (const PreconditionError&) {
      continue;
    }
    const auto flags = structural_flags(g);
    if (!flags.connected || flags.complete) continue;
    ++done;
    VertexSet oracle_witness = 0;
    const auto oracle = naive_toughness(g, &oracle_witness);
    REQUIRE(oracle.has_value());
    const auto r = toughness_exact(g);
    CHECK(r.value == *oracle);
    CHECK(r.witness == oracle_witness);
  }
  CHECK(done == 100);
}
