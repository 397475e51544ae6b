#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "ncsym/errors.hpp"
#include "ncsym/set_partition.hpp"

using namespace ncsym;

namespace {
SetPartition sp(const std::string& text) { return parse_partition(text); }
}  // namespace

TEST_CASE("parse and format round-trip through the canonical form") {
  CHECK(format_partition(sp("1,3|2")) == "1,3|2");
  CHECK(format_partition(sp("2|3,1")) == "1,3|2");
  CHECK(format_partition(sp("4|2,3|1")) == "1|2,3|4");
  CHECK(format_partition(sp("e")) == "e");
  CHECK(sp("e") == SetPartition{});
  CHECK(sp("e").size() == 0);

  for (const auto& a : partitions_of(5))
    CHECK(parse_partition(format_partition(a)) == a);
}

TEST_CASE("parse rejects malformed text") {
  CHECK_THROWS_AS(sp(""), SyntaxError);
  CHECK_THROWS_AS(sp("1,|2"), SyntaxError);
  CHECK_THROWS_AS(sp("1|"), SyntaxError);
  CHECK_THROWS_AS(sp("a"), SyntaxError);
  CHECK_THROWS_AS(sp("1, 2"), SyntaxError);
  CHECK_THROWS_AS(sp("1,2|2,3"), OverlapError);
  CHECK_THROWS_AS(sp("1|3"), GapError);
  CHECK_THROWS_AS(sp("2,3"), GapError);
  CHECK_THROWS_AS(sp("0,1"), GapError);
}

TEST_CASE("block accessors") {
  auto a = sp("1,3|2");
  CHECK(a.size() == 3);
  CHECK(a.length() == 2);
  CHECK(a.rgs() == std::vector<int>{0, 1, 0});
  CHECK(a.block_of(1) == 0);
  CHECK(a.block_of(2) == 1);
  CHECK(a.block_of(3) == 0);
  CHECK_THROWS_AS(a.block_of(0), RangeError);
  CHECK_THROWS_AS(a.block_of(4), RangeError);
  CHECK(a.blocks() == std::vector<std::vector<int>>{{1, 3}, {2}});

  CHECK(SetPartition::singletons(3) == sp("1|2|3"));
  CHECK(SetPartition::one_block(3) == sp("1,2,3"));
  CHECK(SetPartition::singletons(0) == SetPartition::one_block(0));
}

TEST_CASE("standardization relabels onto an initial segment") {
  CHECK(SetPartition::standardized({{3, 9}, {5}}) == sp("1,3|2"));
  CHECK(SetPartition::standardized({{1, 3, 6, 8}, {5, 7, 9}}) ==
        sp("1,2,4,6|3,5,7"));
  CHECK(SetPartition::standardized({}) == sp("e"));
  CHECK_THROWS_AS(SetPartition::standardized({{1, 2}, {2}}), OverlapError);

  CHECK(SetPartition::type_of({2, 5, 2}) == sp("1,3|2"));
  CHECK(SetPartition::type_of({7, 7, 7}) == sp("1,2,3"));
  CHECK(SetPartition::type_of({}) == sp("e"));
}

TEST_CASE("meet and join of the hand-worked eight-point pair") {
  auto a = sp("1,3,8|2,4|5|6,7");
  auto b = sp("1|2,3,8|4,5,6,7");
  CHECK(!refines(a, b));
  CHECK(!refines(b, a));
  CHECK(format_partition(meet(a, b)) == "1|2|3,8|4|5|6,7");
  CHECK(format_partition(join(a, b)) == "1,2,3,4,5,6,7,8");
}

TEST_CASE("meet and join bound both arguments in refinement order") {
  for (const auto& a : partitions_of(4))
    for (const auto& b : partitions_of(4)) {
      auto lo = meet(a, b);
      auto hi = join(a, b);
      CHECK((refines(lo, a) && refines(lo, b)));
      CHECK((refines(a, hi) && refines(b, hi)));
      if (refines(a, b)) {
        CHECK(lo == a);
        CHECK(hi == b);
      }
    }
  CHECK_THROWS_AS(meet(sp("1"), sp("1,2")), SizeMismatchError);
  CHECK_THROWS_AS(refines(sp("1"), sp("1,2")), SizeMismatchError);
}

TEST_CASE("concat shifts the second partition past the first") {
  CHECK(concat(sp("1,2"), sp("1|2")) == sp("1,2|3|4"));
  CHECK(concat(sp("e"), sp("1,2")) == sp("1,2"));
  CHECK(concat(sp("1,2"), sp("e")) == sp("1,2"));
  CHECK(concat(concat(sp("1"), sp("1,2")), sp("1|2")) ==
        concat(sp("1"), concat(sp("1,2"), sp("1|2"))));
}

TEST_CASE("split inverts concat exactly when no block crosses the cut") {
  auto s = split(sp("1,2|3|4"), 2);
  REQUIRE(s.has_value());
  CHECK(s->first == sp("1,2"));
  CHECK(s->second == sp("1|2"));

  CHECK(!split(sp("1,3|2"), 1).has_value());
  CHECK(!split(sp("1,3|2"), 2).has_value());
  CHECK(split(sp("1,3|2"), 0).has_value());
  CHECK(split(sp("1,3|2"), 3).has_value());
  CHECK_THROWS_AS(split(sp("1,2"), 5), RangeError);

  for (const auto& a : partitions_of(3))
    for (const auto& b : partitions_of(2)) {
      auto back = split(concat(a, b), 3);
      REQUIRE(back.has_value());
      CHECK(back->first == a);
      CHECK(back->second == b);
    }
}

TEST_CASE("restriction to chosen blocks standardizes the survivors") {
  auto a = sp("1,3,6,8|2|4|5,7,9");
  CHECK(format_partition(restrict_blocks(a, {1, 4})) == "1,2,4,6|3,5,7");
  CHECK(restrict_blocks(a, {2}) == sp("1"));
  CHECK(restrict_blocks(a, {2, 3}) == sp("1|2"));
  CHECK(restrict_blocks(a, {}) == sp("e"));
  CHECK_THROWS_AS(restrict_blocks(a, {5}), IndexError);
  CHECK_THROWS_AS(restrict_blocks(a, {0}), IndexError);
  CHECK_THROWS_AS(restrict_blocks(a, {1, 1}), IndexError);
}

TEST_CASE("shape lists block sizes weakly decreasing") {
  CHECK(shape(sp("1,3,8|2,4|5|6,7")) == std::vector<int>{3, 2, 2, 1});
  CHECK(shape(sp("1")) == std::vector<int>{1});
  CHECK(shape(sp("e")).empty());
}

TEST_CASE("enumeration runs from all-singletons down to one block") {
  const auto& p3 = partitions_of(3);
  REQUIRE(p3.size() == 5);
  CHECK(format_partition(p3[0]) == "1|2|3");
  CHECK(format_partition(p3[1]) == "1|2,3");
  CHECK(format_partition(p3[2]) == "1,3|2");
  CHECK(format_partition(p3[3]) == "1,2|3");
  CHECK(format_partition(p3[4]) == "1,2,3");

  const auto& p5 = partitions_of(5);
  for (std::size_t i = 0; i + 1 < p5.size(); ++i) CHECK(p5[i + 1] < p5[i]);
}

TEST_CASE("Bell numbers count each level") {
  const long long want[] = {1,   1,    2,    5,     15,    52,
                            203, 877,  4140, 21147, 115975};
  for (int n = 0; n <= 10; ++n) CHECK(bell(n) == want[n]);
  for (int n = 0; n <= 8; ++n)
    CHECK(Int(partitions_of(n).size()) == bell(n));
  CHECK_THROWS_AS(partitions_of(13), RangeError);
  CHECK_THROWS_AS(partitions_of(-1), RangeError);
}
