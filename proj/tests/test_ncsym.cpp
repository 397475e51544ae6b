#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "ncsym/element.hpp"
#include "ncsym/errors.hpp"
#include "ncsym/set_partition.hpp"

using namespace ncsym;

namespace {

SetPartition sp(const std::string& text) { return parse_partition(text); }

NCSymElement unit(Basis b, const std::string& text) {
  return NCSymElement::basis_vector(b, sp(text));
}

// Restriction of a partition to the elements lo..hi, standardized. Used as
// the independent description of the product fiber below.
SetPartition restrict_elements(const SetPartition& c, int lo, int hi) {
  std::vector<std::vector<int>> kept;
  for (const auto& blk : c.blocks()) {
    std::vector<int> part;
    for (int e : blk)
      if (lo <= e && e <= hi) part.push_back(e);
    if (!part.empty()) kept.push_back(std::move(part));
  }
  return SetPartition::standardized(kept);
}

}  // namespace

TEST_CASE("basis conversions on small partitions") {
  auto x12_in_m = convert(unit(Basis::x, "1,2"), Basis::m);
  CHECK(x12_in_m.terms().size() == 1);
  CHECK(x12_in_m.coefficient(sp("1|2")) == -1);
  CHECK(convert(unit(Basis::m, "1|2"), Basis::x).coefficient(sp("1,2")) == -1);

  auto p12_in_m = convert(unit(Basis::p, "1|2"), Basis::m);
  CHECK(p12_in_m.coefficient(sp("1|2")) == 1);
  CHECK(p12_in_m.coefficient(sp("1,2")) == 1);
  CHECK(p12_in_m.terms().size() == 2);

  // degree one and zero look the same in every basis
  CHECK(convert(unit(Basis::m, "1"), Basis::p) == unit(Basis::p, "1"));
  CHECK(convert(unit(Basis::m, "1"), Basis::x) == unit(Basis::x, "1"));
  CHECK(convert(unit(Basis::m, "e"), Basis::x) == unit(Basis::x, "e"));

  for (int n = 0; n <= 4; ++n)
    for (const auto& a : partitions_of(n))
      for (Basis from : {Basis::m, Basis::p, Basis::x})
        for (Basis to : {Basis::m, Basis::p, Basis::x}) {
          auto e = NCSymElement::basis_vector(from, a);
          CHECK(convert(convert(e, to), from) == e);
        }
}

TEST_CASE("product in the m basis sums over the concat fiber") {
  auto prod = multiply(unit(Basis::m, "1"), unit(Basis::m, "1"));
  CHECK(prod.terms().size() == 2);
  CHECK(prod.coefficient(sp("1|2")) == 1);
  CHECK(prod.coefficient(sp("1,2")) == 1);
  CHECK(format_element(prod) == "m{1,2} + m{1|2}");

  auto left = multiply(unit(Basis::m, "1,2"), unit(Basis::m, "1"));
  CHECK(left.terms().size() == 2);
  CHECK(left.coefficient(sp("1,2|3")) == 1);
  CHECK(left.coefficient(sp("1,2,3")) == 1);

  auto right = multiply(unit(Basis::m, "1"), unit(Basis::m, "1,2"));
  CHECK(right.coefficient(sp("1|2,3")) == 1);
  CHECK(right.coefficient(sp("1,2,3")) == 1);

  CHECK(multiply(unit(Basis::m, "e"), left) == left);
  CHECK_THROWS_AS(multiply(unit(Basis::m, "1"), unit(Basis::p, "1")),
                  BasisMismatchError);
}

TEST_CASE("the concat fiber is cut out by element restriction") {
  auto fib = concat_fiber(sp("1"), sp("1"));
  REQUIRE(fib.size() == 2);
  CHECK(std::find(fib.begin(), fib.end(), sp("1|2")) != fib.end());
  CHECK(std::find(fib.begin(), fib.end(), sp("1,2")) != fib.end());

  for (int n = 0; n <= 2; ++n)
    for (int m = 0; n + m <= 4; ++m)
      for (const auto& a : partitions_of(n))
        for (const auto& b : partitions_of(m)) {
          auto got = concat_fiber(a, b);
          std::vector<SetPartition> brute;
          for (const auto& c : partitions_of(n + m))
            if (restrict_elements(c, 1, n) == a &&
                restrict_elements(c, n + 1, n + m) == b)
              brute.push_back(c);
          std::sort(got.begin(), got.end());
          std::sort(brute.begin(), brute.end());
          CHECK(got == brute);
        }
}

TEST_CASE("p and x multiply by concatenation of indices") {
  CHECK(multiply(unit(Basis::p, "1,2"), unit(Basis::p, "1")) ==
        unit(Basis::p, "1,2|3"));
  CHECK(multiply(unit(Basis::x, "1"), unit(Basis::x, "1")) ==
        unit(Basis::x, "1|2"));
  CHECK(multiply(unit(Basis::x, "1,2"), unit(Basis::x, "e")) ==
        unit(Basis::x, "1,2"));
}

TEST_CASE("external coproduct deconcatenates block subsets") {
  auto d = coproduct_external(unit(Basis::p, "1|2"));
  CHECK(d.terms().size() == 3);
  CHECK(d.coefficient(sp("e"), sp("1|2")) == 1);
  CHECK(d.coefficient(sp("1"), sp("1")) == 2);
  CHECK(d.coefficient(sp("1|2"), sp("e")) == 1);
  CHECK(format_tensor(d) ==
        "p{e} (x) p{1|2} + 2*p{1} (x) p{1} + p{1|2} (x) p{e}");

  auto dm = coproduct_external(unit(Basis::m, "1,2"));
  CHECK(dm.terms().size() == 2);
  CHECK(dm.coefficient(sp("e"), sp("1,2")) == 1);
  CHECK(dm.coefficient(sp("1,2"), sp("e")) == 1);
}

TEST_CASE("external coproduct of x goes through the m pipeline") {
  CHECK_THROWS_AS(coproduct_external(unit(Basis::x, "1")),
                  BasisMismatchError);

  auto d1 = coproduct_external_x(unit(Basis::x, "1"));
  CHECK(d1.terms().size() == 2);
  CHECK(d1.coefficient(sp("e"), sp("1")) == 1);
  CHECK(d1.coefficient(sp("1"), sp("e")) == 1);

  auto d = coproduct_external_x(unit(Basis::x, "1,2"));
  CHECK(format_tensor(d) ==
        "x{e} (x) x{1,2} - 2*x{1} (x) x{1} + x{1,2} (x) x{e}");
}

TEST_CASE("internal coproduct splits over lattice fibers") {
  auto dm = coproduct_internal(unit(Basis::m, "1|2"));
  CHECK(dm.terms().size() == 3);
  CHECK(dm.coefficient(sp("1|2"), sp("1|2")) == 1);
  CHECK(dm.coefficient(sp("1|2"), sp("1,2")) == 1);
  CHECK(dm.coefficient(sp("1,2"), sp("1|2")) == 1);

  // p is grouplike
  auto dp = coproduct_internal(unit(Basis::p, "1,3|2"));
  CHECK(dp.terms().size() == 1);
  CHECK(dp.coefficient(sp("1,3|2"), sp("1,3|2")) == 1);

  // x fibers over the join
  auto dx = coproduct_internal(unit(Basis::x, "1,2"));
  CHECK(dx.coefficient(sp("1,2"), sp("1,2")) == 1);
  CHECK(dx.coefficient(sp("1|2"), sp("1,2")) == 1);
  CHECK(dx.coefficient(sp("1,2"), sp("1|2")) == 1);
  CHECK(dx.terms().size() == 3);
}

TEST_CASE("counit reads off the constant term") {
  CHECK(counit(unit(Basis::m, "e")) == 1);
  CHECK(counit(unit(Basis::m, "1")) == 0);
  CHECK(counit(unit(Basis::x, "1,2") + Int(3) * unit(Basis::x, "e")) == 3);
  CHECK(counit(NCSymElement(Basis::p)) == 0);
}

TEST_CASE("element arithmetic and formatting") {
  CHECK(format_element(NCSymElement(Basis::m)) == "0");
  CHECK(format_element(Int(-1) * unit(Basis::m, "1|2")) == "-m{1|2}");
  CHECK(format_element(Int(2) * unit(Basis::p, "1")) == "2*p{1}");
  auto e = unit(Basis::m, "1,2") - Int(3) * unit(Basis::m, "1|2");
  CHECK(format_element(e) == "m{1,2} - 3*m{1|2}");

  auto cancel = unit(Basis::m, "1") - unit(Basis::m, "1");
  CHECK(cancel.is_zero());
  CHECK_THROWS_AS(unit(Basis::m, "1") + unit(Basis::p, "1"),
                  BasisMismatchError);

  auto t = tensor(unit(Basis::m, "1"), unit(Basis::m, "e"));
  CHECK(format_tensor(t) == "m{1} (x) m{e}");
  CHECK(format_tensor(TensorElement(Basis::m, Basis::m)) == "0");
}
