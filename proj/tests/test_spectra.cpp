#include <cmath>
#include <random>

#include <doctest.h>

#include "test_util.hpp"
#include "tough/errors.hpp"
#include "tough/spectra.hpp"

using namespace tough;
using namespace tough::testing;

TEST_CASE("adjacency spectrum of K4") {
  const Spectrum s = adjacency_spectrum(gen_complete(4));
  REQUIRE(s.values.size() == 4);
  CHECK(s.values[0] == doctest::Approx(3.0).epsilon(1e-9));
  for (int i = 1; i < 4; ++i)
    CHECK(s.values[i] == doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("adjacency spectrum of K33") {
  const Spectrum s = adjacency_spectrum(gen_complete_bipartite(3, 3));
  CHECK(s.values.front() == doctest::Approx(3.0));
  CHECK(s.values.back() == doctest::Approx(-3.0));
  for (int i = 1; i < 5; ++i) CHECK(std::abs(s.values[i]) < 1e-8);
}

TEST_CASE("Petersen spectrum against the exact characteristic polynomial") {
  const Graph pet = gen_petersen();
  const Spectrum s = adjacency_spectrum(pet);
  // known closed form: 3 once, 1 five times, -2 four times
  CHECK(s.values[0] == doctest::Approx(3.0).epsilon(1e-8));
  for (int i = 1; i <= 5; ++i)
    CHECK(s.values[i] == doctest::Approx(1.0).epsilon(1e-8));
  for (int i = 6; i <= 9; ++i)
    CHECK(s.values[i] == doctest::Approx(-2.0).epsilon(1e-8));

  // independent oracle: integer char poly of the 10x10 adjacency matrix
  std::vector<std::vector<long long>> a(10, std::vector<long long>(10, 0));
  for (int u = 0; u < 10; ++u)
    for (int v : pet.neighbors(u)) a[u][v] = 1;
  const auto cp = integer_char_poly(a);
  // (x-3)(x-1)^5(x+2)^4 expanded
  CHECK(eval_int_poly(cp, 3.0) == 0);
  CHECK(eval_int_poly(cp, 1.0) == 0);
  CHECK(eval_int_poly(cp, -2.0) == 0);
  for (double root : s.values)
    CHECK(std::abs(eval_int_poly(cp, root)) < 1e-5);
}

TEST_CASE("spectrum invariants: trace zero, lambda1 = d") {
  for (const Graph& g : {gen_petersen(), gen_extremal_hd(3, 2),
                         random_connected_regular(12, 4, 11)}) {
    const Spectrum s = adjacency_spectrum(g);
    double sum = 0.0;
    for (int i = 1; i < static_cast<int>(s.values.size()); ++i) {
      sum += s.values[i];
      CHECK(s.values[i - 1] >= s.values[i]);
    }
    sum += s.values[0];
    CHECK(std::abs(sum) <= g.order() * 1e-9);
    CHECK(s.values[0] == doctest::Approx(*degree_profile(g).degree)
                             .epsilon(1e-8));
    CHECK(s.lambda2() < s.values[0]);
  }
}

TEST_CASE("lambda2 and lambda_min accessors") {
  CHECK(lambda2(gen_petersen()) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(std::abs(lambda2(gen_complete_bipartite(3, 3))) < 1e-8);
  CHECK(lambda_min(gen_complete_bipartite(3, 3)) ==
        doctest::Approx(-3.0).epsilon(1e-8));
  CHECK_THROWS_AS(lambda2(Graph(1)), PreconditionError);
}

TEST_CASE("quotient matrix") {
  SUBCASE("single block of a regular graph gives [d]") {
    const Graph g = gen_petersen();
    const QuotientMatrix q =
        quotient_matrix(g, Partition{{full_set(10)}});
    REQUIRE(q.m == 1);
    CHECK(q.at(0, 0) == doctest::Approx(3.0));
  }
  SUBCASE("all-singleton partition reproduces the adjacency matrix") {
    const Graph g = gen_cycle(4);
    Partition p;
    for (int v = 0; v < 4; ++v) p.blocks.push_back(VertexSet{1} << v);
    const QuotientMatrix q = quotient_matrix(g, p);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        CHECK(q.at(i, j) == (g.has_edge(i, j) ? 1.0 : 0.0));
  }
  SUBCASE("K33 with one side grouped") {
    const Graph g = gen_complete_bipartite(3, 3);
    const QuotientMatrix q = quotient_matrix(
        g, Partition{{0b000111, 0b001000, 0b010000, 0b100000}});
    REQUIRE(q.m == 4);
    CHECK(q.at(0, 0) == 0.0);
    for (int j = 1; j < 4; ++j) {
      CHECK(q.at(0, j) == doctest::Approx(1.0));
      CHECK(q.at(j, 0) == doctest::Approx(3.0));
      CHECK(q.at(j, j) == 0.0);
    }
  }
  SUBCASE("invalid partitions rejected") {
    const Graph g = gen_cycle(4);
    CHECK_THROWS_AS(quotient_matrix(g, Partition{{0b0011, 0b0110}}),
                    PreconditionError);
    CHECK_THROWS_AS(quotient_matrix(g, Partition{{0b0011}}),
                    PreconditionError);
  }
}

TEST_CASE("quotient matrix invariants on random partitions") {
  std::mt19937_64 rng(42);
  for (int it = 0; it < 25; ++it) {
    const Graph g = random_connected_regular(10, 3, 100 + it);
    const Partition p = random_partition(g, 1 + static_cast<int>(rng() % 5), rng);
    const QuotientMatrix q = quotient_matrix(g, p);
    for (int i = 0; i < q.m; ++i) {
      double row = 0.0;
      for (int j = 0; j < q.m; ++j) {
        row += q.at(i, j);
        CHECK(q.at(i, j) >= 0.0);
        if (i != j)  // both sides count e(V_i, V_j)
          CHECK(q.at(i, j) * q.block_sizes[i] ==
                doctest::Approx(q.at(j, i) * q.block_sizes[j]));
      }
      CHECK(row == doctest::Approx(3.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("quotient spectrum") {
  SUBCASE("1x1 [d]") {
    const QuotientMatrix q =
        quotient_matrix(gen_petersen(), Partition{{full_set(10)}});
    const Spectrum s = quotient_spectrum(q);
    REQUIRE(s.values.size() == 1);
    CHECK(s.values[0] == doctest::Approx(3.0));
  }
  SUBCASE("K33 4-block partition gives (3, 0, 0, -3)") {
    const QuotientMatrix q = quotient_matrix(
        gen_complete_bipartite(3, 3),
        Partition{{0b000111, 0b001000, 0b010000, 0b100000}});
    const Spectrum s = quotient_spectrum(q);
    REQUIRE(s.values.size() == 4);
    CHECK(s.values[0] == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(std::abs(s.values[1]) < 1e-9);
    CHECK(std::abs(s.values[2]) < 1e-9);
    CHECK(s.values[3] == doctest::Approx(-3.0).epsilon(1e-9));
  }
  SUBCASE("all-singleton partition of C4 gives the adjacency spectrum") {
    Partition p;
    for (int v = 0; v < 4; ++v) p.blocks.push_back(VertexSet{1} << v);
    const Spectrum s = quotient_spectrum(quotient_matrix(gen_cycle(4), p));
    CHECK(s.values[0] == doctest::Approx(2.0));
    CHECK(std::abs(s.values[1]) < 1e-9);
    CHECK(std::abs(s.values[2]) < 1e-9);
    CHECK(s.values[3] == doctest::Approx(-2.0));
  }
}

TEST_CASE("interlacing") {
  SUBCASE("single block of K4") {
    const auto rep = check_interlacing(gen_complete(4), Partition{{0b1111}});
    CHECK(rep.pass);
  }
  SUBCASE("K33 4-block partition") {
    const auto rep = check_interlacing(
        gen_complete_bipartite(3, 3),
        Partition{{0b000111, 0b001000, 0b010000, 0b100000}});
    CHECK(rep.pass);
  }
  SUBCASE("random partitions of random regular graphs") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 30; ++it) {
      const Graph g = random_connected_regular(12, 3, 200 + it);
      const Partition p =
          random_partition(g, 2 + static_cast<int>(rng() % 6), rng);
      CHECK(check_interlacing(g, p).pass);
    }
  }
}

TEST_CASE("cut partition") {
  SUBCASE("K33 cut by one side") {
    const auto cp = cut_partition(gen_complete_bipartite(3, 3), 0b000111);
    CHECK(cp.cut_size == 3);
    REQUIRE(cp.component_sizes == std::vector<int>{1, 1, 1});
    CHECK(cp.boundary_edges == std::vector<long long>{3, 3, 3});
  }
  SUBCASE("C5 cut by {0,2}") {
    const auto cp = cut_partition(gen_cycle(5), 0b00101);
    CHECK(cp.cut_size == 2);
    CHECK(cp.component_sizes == std::vector<int>{1, 2});
    CHECK(cp.boundary_edges == std::vector<long long>{2, 2});
  }
  SUBCASE("hub cut of the matched-clique family") {
    const auto cp = cut_partition(gen_extremal_hd(3, 2), 0b11);
    REQUIRE(cp.partition.blocks.size() == 4);
    CHECK(cp.component_sizes == std::vector<int>{4, 4, 4});
    CHECK(cp.boundary_edges == std::vector<long long>{2, 2, 2});
  }
  SUBCASE("non-cuts rejected") {
    CHECK_THROWS_AS(cut_partition(gen_cycle(5), 0), PreconditionError);
    CHECK_THROWS_AS(cut_partition(gen_cycle(5), 0b00001), PreconditionError);
  }
}
