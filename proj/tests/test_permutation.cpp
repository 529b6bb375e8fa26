#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "oracle.hpp"
#include "prym/error.hpp"
#include "prym/permutation.hpp"

using namespace prym;

namespace {

std::vector<Permutation> symmetric_group(int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace

TEST_CASE("compose") {
  const auto p = Permutation::from_cycles(4, {{1, 3, 2}});
  CHECK(compose(Permutation::identity(4), p) == p);
  CHECK(compose(p, Permutation::identity(4)) == p);

  const auto t = Permutation::from_cycles(2, {{1, 2}});
  CHECK(compose(t, t).is_identity());

  // (1 2 3) ∘ (1 2): 1 -> 2 -> 3, 2 -> 1 -> 2, 3 -> 3 -> 1
  const auto c = Permutation::from_cycles(3, {{1, 2, 3}});
  const auto s = Permutation::from_cycles(3, {{1, 2}});
  CHECK(compose(c, s).images() == std::vector<int>{3, 2, 1});

  CHECK_THROWS_AS(compose(c, t), ValidationError);
}

TEST_CASE("compose agrees with the definition on all of S_3") {
  const auto group = symmetric_group(3);
  REQUIRE(group.size() == 6);
  int pairs = 0;
  for (const auto& a : group) {
    for (const auto& b : group) {
      const auto ai = a.images();
      const auto bi = b.images();
      std::vector<int> expected(3);
      for (int x = 0; x < 3; ++x) expected[x] = ai[bi[x] - 1];
      CHECK(compose(a, b).images() == expected);
      ++pairs;
    }
  }
  CHECK(pairs == 36);
}

TEST_CASE("permutation validation") {
  CHECK_THROWS_AS(Permutation(std::vector<int>{1, 1, 2}), ValidationError);
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 1}), ValidationError);
  CHECK_THROWS_AS(Permutation(std::vector<int>{}), ValidationError);
  CHECK_THROWS_AS(Permutation::from_cycles(4, {{1, 2}, {2, 3}}), ValidationError);
  CHECK(Permutation::from_cycles(5, {{1, 2}, {3, 4}}).to_string() == "(1 2)(3 4)");
  CHECK(Permutation::identity(3).to_string() == "()");
}

TEST_CASE("cycle_type") {
  CHECK(cycle_type(Permutation::identity(6)).parts == std::vector<int>{1, 1, 1, 1, 1, 1});
  CHECK(cycle_type(Permutation::from_cycles(4, {{1, 2}, {3, 4}})).parts == std::vector<int>{2, 2});
  CHECK(cycle_type(Permutation::from_cycles(6, {{1, 2}, {3, 4}, {5, 6}})).parts == std::vector<int>{2, 2, 2});
  CHECK(cycle_type(Permutation::from_cycles(6, {{2, 5, 3}})).parts == std::vector<int>{3, 1, 1, 1});
}

TEST_CASE("cycle_type parts sum to the degree") {
  for (int degree = 1; degree <= 5; ++degree) {
    for (const auto& p : symmetric_group(degree)) {
      const auto type = cycle_type(p);
      CHECK(type.degree() == degree);
      CHECK(std::is_sorted(type.parts.rbegin(), type.parts.rend()));
    }
  }
}

TEST_CASE("induced_subset_action of a transposition") {
  const auto t = Permutation::from_cycles(4, {{1, 2}});
  const auto induced = induced_subset_action(t, 2);
  CHECK(induced.degree() == 6);
  CHECK(cycle_type(induced).parts == std::vector<int>{2, 2, 1, 1});
  CHECK(cycle_type(induced).ramification() == 2);

  const auto rank = [](std::vector<int> labels) {
    for (int& x : labels) --x;
    return static_cast<int>(rank_subset(4, labels).rank);
  };
  CHECK(induced(rank({1, 3})) == rank({2, 3}));
  CHECK(induced(rank({1, 4})) == rank({2, 4}));
  CHECK(induced(rank({1, 2})) == rank({1, 2}));
  CHECK(induced(rank({3, 4})) == rank({3, 4}));

  CHECK(induced_subset_action(Permutation::identity(5), 3).is_identity());
  CHECK(induced_subset_action(Permutation::identity(5), 3).degree() == 10);
  CHECK_THROWS_AS(induced_subset_action(t, 0), ValidationError);
  CHECK_THROWS_AS(induced_subset_action(t, 5), ValidationError);
}

TEST_CASE("induced_subset_action is a homomorphism (exhaustive, degree <= 5)") {
  for (int degree = 1; degree <= 5; ++degree) {
    const auto group = symmetric_group(degree);
    for (int k = 1; k <= degree; ++k) {
      std::vector<Permutation> induced;
      for (const auto& g : group) induced.push_back(induced_subset_action(g, k));
      for (std::size_t a = 0; a < group.size(); ++a) {
        for (std::size_t b = 0; b < group.size(); ++b) {
          REQUIRE(induced_subset_action(compose(group[a], group[b]), k) == compose(induced[a], induced[b]));
        }
      }
      CHECK(induced_subset_action(Permutation::identity(degree), k).is_identity());
    }
  }
}

TEST_CASE("orbits") {
  const std::vector<Permutation> transitive{Permutation::from_cycles(4, {{1, 2}}),
                                            Permutation::from_cycles(4, {{1, 2, 3, 4}})};
  CHECK(orbits(4, transitive) == std::vector<std::vector<int>>{{0, 1, 2, 3}});

  const std::vector<Permutation> one{Permutation::from_cycles(4, {{1, 2}})};
  CHECK(orbits(4, one) == std::vector<std::vector<int>>{{0, 1}, {2}, {3}});

  CHECK(orbits(3, std::vector<Permutation>{}) == std::vector<std::vector<int>>{{0}, {1}, {2}});
  CHECK_THROWS_AS(orbits(5, one), ValidationError);
}

TEST_CASE("induced action of a transitive S_5 tuple on 3-subsets is transitive") {
  std::vector<Permutation> gens;
  for (const auto& g : {Permutation::from_cycles(5, {{1, 2}}), Permutation::from_cycles(5, {{1, 2, 3, 4, 5}})}) {
    gens.push_back(induced_subset_action(g, 3));
  }
  CHECK(is_transitive(10, gens));
}

TEST_CASE("colex rank/unrank round-trips for every universe <= 16") {
  for (int universe = 1; universe <= 16; ++universe) {
    for (int k = 0; k <= universe; ++k) {
      const auto masks = all_subsets(universe, k);
      REQUIRE(masks.size() == binomial(universe, k));
      for (std::uint64_t r = 0; r < masks.size(); ++r) {
        const auto elements = unrank_subset(SubsetIndex{k, universe, r});
        REQUIRE(to_mask(elements) == masks[r]);
        REQUIRE(rank_subset(universe, elements).rank == r);
      }
    }
  }
}

TEST_CASE("colex order matches the brute-force listing") {
  const auto expected = oracle::subsets(7, 3);
  const auto masks = all_subsets(7, 3);
  REQUIRE(expected.size() == masks.size());
  for (std::size_t r = 0; r < masks.size(); ++r) {
    auto labels = from_mask(masks[r]);
    for (int& x : labels) ++x;
    CHECK(labels == expected[r]);
  }
}

TEST_CASE("subset index validation") {
  CHECK_THROWS_AS(unrank_subset(SubsetIndex{2, 4, 6}), ValidationError);
  const std::vector<int> repeated{1, 1};
  CHECK_THROWS_AS(rank_subset(4, repeated), ValidationError);
  const std::vector<int> outside{4};
  CHECK_THROWS_AS(rank_subset(4, outside), ValidationError);
  CHECK(binomial(14, 12) == 91);
  CHECK(binomial(3, 5) == 0);
}
