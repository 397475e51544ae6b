#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "ncsym/errors.hpp"
#include "ncsym/lattice.hpp"
#include "ncsym/set_partition.hpp"

using namespace ncsym;

namespace {
SetPartition sp(const std::string& text) { return parse_partition(text); }
}  // namespace

TEST_CASE("Mobius values on full intervals") {
  CHECK(mobius(sp("1|2|3"), sp("1,2,3")) == 2);
  CHECK(mobius(SetPartition::singletons(4), SetPartition::one_block(4)) == -6);
  CHECK(mobius(SetPartition::singletons(5), SetPartition::one_block(5)) == 24);
  CHECK(mobius(sp("1,3|2"), sp("1,3|2")) == 1);
  CHECK(mobius(sp("1|2|3"), sp("1,2|3")) == -1);
  CHECK(mobius(SetPartition{}, SetPartition{}) == 1);
  // incomparable pairs contribute nothing
  CHECK(mobius(sp("1,3|2"), sp("1|2,3")) == 0);
  CHECK(mobius(sp("1,2,3"), sp("1|2|3")) == 0);
}

TEST_CASE("closed product form matches the recursive definition") {
  CHECK(mobius_product_form(sp("1|2|3,4"), sp("1,2|3,4")) == -1);
  CHECK_THROWS_AS(mobius_product_form(sp("1,3|2"), sp("1|2,3")),
                  NotComparableError);
  for (const auto& b : partitions_of(5))
    for (const auto& a : refinements(b))
      CHECK(mobius(a, b) == mobius_product_form(a, b));
}

TEST_CASE("Mobius sums telescope to a delta across every interval") {
  for (const auto& b : partitions_of(4))
    for (const auto& a : refinements(b)) {
      Int total = 0;
      for (const auto& c : interval(a, b)) total += mobius(a, c);
      CHECK(total == (a == b ? 1 : 0));
    }
}

TEST_CASE("interval contents at small n") {
  CHECK(interval(sp("1|2|3"), sp("1,2,3")).size() == 5);
  CHECK(interval(sp("1,2"), sp("1,2")).size() == 1);

  auto iv = interval(sp("1|2|3,4"), sp("1,2|3,4"));
  REQUIRE(iv.size() == 2);
  CHECK(std::find(iv.begin(), iv.end(), sp("1|2|3,4")) != iv.end());
  CHECK(std::find(iv.begin(), iv.end(), sp("1,2|3,4")) != iv.end());

  CHECK(interval(sp("1,3|2"), sp("1|2,3")).empty());
  CHECK_THROWS_AS(interval(sp("1"), sp("1,2")), SizeMismatchError);
}

TEST_CASE("interval above the scan threshold matches a brute filter") {
  auto a = sp("1,2|3|4,5|6|7");
  auto b = sp("1,2,3|4,5,6,7");
  REQUIRE(refines(a, b));
  auto iv = interval(a, b);
  std::vector<SetPartition> brute;
  for (const auto& c : partitions_of(7))
    if (refines(a, c) && refines(c, b)) brute.push_back(c);
  std::sort(iv.begin(), iv.end());
  std::sort(brute.begin(), brute.end());
  CHECK(iv == brute);
  CHECK(iv.size() == 10);  // Pi_2 x Pi_3
}

TEST_CASE("refinements and coarsenings scan one level") {
  CHECK(refinements(sp("1,2,3")).size() == 5);
  CHECK(refinements(sp("1|2|3")).size() == 1);
  CHECK(refinements(sp("1,2|3")).size() == 2);
  CHECK(coarsenings(sp("1|2|3")).size() == 5);
  CHECK(coarsenings(sp("1,2,3")).size() == 1);
  CHECK(coarsenings(sp("1,2|3")).size() == 2);

  long long comparable = 0;
  for (const auto& a : partitions_of(5))
    comparable += static_cast<long long>(refinements(a).size());
  CHECK(comparable == 358);
}

TEST_CASE("interval profile lists finer-block counts per coarser block") {
  CHECK(interval_profile(sp("1|2|3,4"), sp("1,2|3,4")) ==
        IntervalProfile{2, 1});
  CHECK(interval_profile(sp("1|2|3"), sp("1,2,3")) == IntervalProfile{3});
  CHECK(interval_profile(sp("1,2"), sp("1,2")) == IntervalProfile{1});
  CHECK_THROWS_AS(interval_profile(sp("1,3|2"), sp("1|2,3")),
                  NotComparableError);
}
