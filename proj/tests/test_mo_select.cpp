#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "clde/mo_select.hpp"
#include "clde/rng.hpp"
#include "doctest.h"
#include "oracles.hpp"

using clde::crowding_distance;
using clde::dominates;
using clde::fast_nondominated_sort;
using clde::FrontCrowding;
using clde::Rng;
using clde::select_n;

namespace {

std::vector<std::vector<double>> random_objectives(Rng& rng, int n, int m) {
  std::vector<std::vector<double>> objs(n, std::vector<double>(m));
  for (auto& row : objs)
    for (double& v : row) v = rng.uniform(-5.0, 5.0);
  return objs;
}

}  // namespace

TEST_CASE("dominance needs no-worse everywhere and better somewhere") {
  CHECK(dominates({1.0, 2.0}, {2.0, 2.0}));
  CHECK(dominates({1.0, 1.0}, {2.0, 3.0}));
  CHECK_FALSE(dominates({1.0, 2.0}, {2.0, 1.0}));
  CHECK_FALSE(dominates({2.0, 1.0}, {1.0, 2.0}));
  CHECK_FALSE(dominates({1.0, 2.0}, {1.0, 2.0}));
  CHECK_THROWS_AS(dominates({1.0}, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("a chain of dominated points ranks one level per link") {
  CHECK(fast_nondominated_sort({{0.0, 0.0}, {1.0, 1.0}, {2.0, 2.0}}) ==
        std::vector<int>{1, 2, 3});
}

TEST_CASE("mutually nondominated points all sit on the first front") {
  CHECK(fast_nondominated_sort({{0.0, 3.0}, {1.0, 1.0}, {3.0, 0.0}}) ==
        std::vector<int>{1, 1, 1});
}

TEST_CASE("two-front hand example ranks as expected") {
  const std::vector<std::vector<double>> objs = {
      {0.0, 4.0}, {1.0, 2.0}, {3.0, 1.0}, {4.0, 0.0}, {5.0, 5.0}};
  CHECK(fast_nondominated_sort(objs) == std::vector<int>{1, 1, 1, 1, 2});
}

TEST_CASE("ranks agree with brute-force front peeling") {
  Rng rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng.uniform_int(40));
    const int m = 2 + static_cast<int>(rng.uniform_int(3));
    const auto objs = random_objectives(rng, n, m);
    CHECK(fast_nondominated_sort(objs) == clde_test::oracle_pareto_peel(objs));
  }
}

TEST_CASE("fronts of one or two members are entirely boundary") {
  const std::vector<std::vector<double>> objs = {{0.0, 1.0}, {1.0, 0.0}};
  const FrontCrowding cd = crowding_distance(objs, {0, 1});
  CHECK(cd.maximal[0] == 1);
  CHECK(cd.maximal[1] == 1);
}

TEST_CASE("interior crowding sums normalized neighbor gaps") {
  const std::vector<std::vector<double>> objs = {{0.0, 2.0}, {1.0, 1.0}, {2.0, 0.0}};
  const FrontCrowding cd = crowding_distance(objs, {0, 1, 2});
  CHECK(cd.maximal[0] == 1);
  CHECK(cd.maximal[2] == 1);
  CHECK(cd.maximal[1] == 0);
  CHECK(cd.value[1] == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("duplicate objective vectors contribute zero interior crowding") {
  const std::vector<std::vector<double>> objs = {{1.0, 1.0}, {1.0, 1.0}, {1.0, 1.0}};
  const FrontCrowding cd = crowding_distance(objs, {0, 1, 2});
  CHECK(cd.maximal[1] == 0);
  CHECK(cd.value[1] == 0.0);
}

TEST_CASE("crowding rejects an empty front and bad indices") {
  const std::vector<std::vector<double>> objs = {{0.0, 1.0}};
  CHECK_THROWS_AS(crowding_distance(objs, {}), std::invalid_argument);
  CHECK_THROWS_AS(crowding_distance(objs, {3}), std::invalid_argument);
}

TEST_CASE("selecting everyone returns the whole population") {
  Rng rng(103);
  const auto objs = random_objectives(rng, 12, 2);
  auto sel = select_n(objs, 12);
  std::sort(sel.begin(), sel.end());
  for (int i = 0; i < 12; ++i) CHECK(sel[i] == i);
}

TEST_CASE("whole fronts are admitted verbatim when they fit") {
  const std::vector<std::vector<double>> objs = {
      {0.0, 1.0}, {1.0, 0.0},              // front 1
      {2.0, 3.0}, {3.0, 2.0},              // front 2
      {9.0, 9.0}};                         // front 3
  auto sel = select_n(objs, 4);
  std::sort(sel.begin(), sel.end());
  CHECK(sel == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("splitting-front truncation keeps boundary members first") {
  const std::vector<std::vector<double>> objs = {
      {0.0, 4.0}, {1.0, 3.0}, {2.0, 2.0}, {3.0, 1.0}, {4.0, 0.0}};
  auto sel = select_n(objs, 3);
  std::sort(sel.begin(), sel.end());
  // boundaries 0 and 4 outrank every interior member; equal interior
  // crowding breaks toward the lower index
  CHECK(sel == std::vector<int>{0, 1, 4});
}

TEST_CASE("rank-1 members are never displaced by lower fronts") {
  Rng rng(107);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 5 + static_cast<int>(rng.uniform_int(30));
    const auto objs = random_objectives(rng, n, 2);
    const auto rank = fast_nondominated_sort(objs);
    std::vector<int> first;
    for (int i = 0; i < n; ++i)
      if (rank[i] == 1) first.push_back(i);
    auto sel = select_n(objs, static_cast<int>(first.size()));
    std::sort(sel.begin(), sel.end());
    CHECK(sel == first);
  }
}

TEST_CASE("selection validates its inputs") {
  const std::vector<std::vector<double>> objs = {{0.0, 1.0}, {1.0, 0.0}};
  CHECK_THROWS_AS(select_n(objs, 0), std::invalid_argument);
  CHECK_THROWS_AS(select_n(objs, 3), std::invalid_argument);
  CHECK_THROWS_AS(select_n({}, 1), std::invalid_argument);
  CHECK_THROWS_AS(select_n({{1.0, std::nan("")}}, 1), std::invalid_argument);
}
