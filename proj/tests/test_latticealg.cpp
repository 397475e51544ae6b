#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "ncsym/element.hpp"
#include "ncsym/errors.hpp"
#include "ncsym/lattice.hpp"
#include "ncsym/lattice_algebra.hpp"
#include "ncsym/set_partition.hpp"

using namespace ncsym;

namespace {

SetPartition sp(const std::string& text) { return parse_partition(text); }

constexpr Algebra kAlgebras[] = {Algebra::meet, Algebra::join, Algebra::diag};

ModuleSum simple(Algebra t, const std::string& text) {
  ModuleSum s;
  s.algebra = t;
  s.add_term(sp(text), 1);
  return s;
}

}  // namespace

TEST_CASE("algebra names round-trip") {
  for (Algebra t : kAlgebras) CHECK(algebra_from_name(algebra_name(t)) == t);
  CHECK_THROWS_AS(algebra_from_name("meat"), SyntaxError);
}

TEST_CASE("basis products follow the lattice operations") {
  auto g = alg_multiply(algebra_basis(Algebra::meet, sp("1,3|2")),
                        algebra_basis(Algebra::meet, sp("1|2,3")));
  CHECK(g.terms.size() == 1);
  CHECK(g.terms.at(sp("1|2|3")) == 1);

  auto h = alg_multiply(algebra_basis(Algebra::join, sp("1,3|2")),
                        algebra_basis(Algebra::join, sp("1|2,3")));
  CHECK(h.terms.size() == 1);
  CHECK(h.terms.at(sp("1,2,3")) == 1);

  CHECK(alg_multiply(algebra_basis(Algebra::diag, sp("1,2")),
                     algebra_basis(Algebra::diag, sp("1|2")))
            .terms.empty());
  CHECK(alg_multiply(algebra_basis(Algebra::diag, sp("1,2")),
                     algebra_basis(Algebra::diag, sp("1,2")))
            .terms.at(sp("1,2")) == 1);

  CHECK_THROWS_AS(alg_multiply(algebra_basis(Algebra::meet, sp("1")),
                               algebra_basis(Algebra::meet, sp("1,2"))),
                  SizeMismatchError);
  CHECK_THROWS_AS(alg_multiply(algebra_basis(Algebra::meet, sp("1")),
                               algebra_basis(Algebra::join, sp("1"))),
                  TagMismatchError);
}

TEST_CASE("units absorb on both sides") {
  for (Algebra t : {Algebra::meet, Algebra::join}) {
    auto unit = algebra_unit(t, 3);
    REQUIRE(unit.has_value());
    for (const auto& a : partitions_of(3)) {
      auto g = algebra_basis(t, a);
      CHECK(alg_multiply(*unit, g) == g);
      CHECK(alg_multiply(g, *unit) == g);
    }
  }
  CHECK(!algebra_unit(Algebra::diag, 3).has_value());
}

TEST_CASE("idempotents expand with Mobius signs") {
  auto e12 = idempotent(Algebra::meet, sp("1,2"));
  CHECK(e12.terms.at(sp("1,2")) == 1);
  CHECK(e12.terms.at(sp("1|2")) == -1);
  CHECK(format_algebra_element(e12) == "[1,2] - [1|2]");

  auto f12 = idempotent(Algebra::join, sp("1|2"));
  CHECK(f12.terms.at(sp("1|2")) == 1);
  CHECK(f12.terms.at(sp("1,2")) == -1);
  CHECK(format_algebra_element(f12) == "-[1,2] + [1|2]");

  auto d = idempotent(Algebra::diag, sp("1,3|2"));
  CHECK(d.terms.size() == 1);
  CHECK(d.terms.at(sp("1,3|2")) == 1);
}

TEST_CASE("idempotents are orthogonal and sum to the identity at n=3") {
  const auto& all = partitions_of(3);
  for (Algebra t : kAlgebras) {
    AlgebraElement total;
    total.algebra = t;
    total.n = 3;
    for (const auto& a : all) {
      auto ea = idempotent(t, a);
      CHECK(alg_multiply(ea, ea) == ea);
      total = add(total, ea);
      for (const auto& b : all)
        if (a != b) CHECK(alg_multiply(ea, idempotent(t, b)).terms.empty());
    }
    auto unit = algebra_unit(t, 3);
    if (unit) CHECK(total == *unit);
    for (const auto& a : all) {
      auto g = algebra_basis(t, a);
      CHECK(alg_multiply(total, g) == g);
      CHECK(alg_multiply(g, total) == g);
    }
  }
}

TEST_CASE("idempotent coordinates of a basis element trace the order") {
  auto coords =
      idempotent_coordinates(algebra_basis(Algebra::meet, sp("1,2|3")));
  for (const auto& b : partitions_of(3)) {
    Int want = refines(b, sp("1,2|3")) ? 1 : 0;
    auto it = coords.find(b);
    CHECK((it == coords.end() ? Int(0) : it->second) == want);
  }

  auto up = idempotent_coordinates(algebra_basis(Algebra::join, sp("1,2|3")));
  for (const auto& b : partitions_of(3)) {
    Int want = refines(sp("1,2|3"), b) ? 1 : 0;
    auto it = up.find(b);
    CHECK((it == up.end() ? Int(0) : it->second) == want);
  }
}

TEST_CASE("concatenated idempotents expand as predicted") {
  for (Algebra t : kAlgebras)
    for (const auto& a : partitions_of(2))
      for (const auto& b : partitions_of(2)) {
        auto [lhs, rhs] = idempotent_concat_sides(t, a, b);
        CHECK(lhs == rhs);
      }
}

TEST_CASE("action on a simple module is an indicator of the order") {
  auto label = sp("1,2|3");
  for (const auto& c : partitions_of(3)) {
    CHECK(act_on_simple(Algebra::meet, c, label) ==
          (refines(label, c) ? 1 : 0));
    CHECK(act_on_simple(Algebra::join, c, label) ==
          (refines(c, label) ? 1 : 0));
    CHECK(act_on_simple(Algebra::diag, c, label) == (c == label ? 1 : 0));
    for (Algebra t : kAlgebras)
      CHECK(character(t, label, c) == act_on_simple(t, c, label));
  }
}

TEST_CASE("characters match multiplication against the idempotent") {
  for (Algebra t : kAlgebras)
    for (const auto& a : partitions_of(3))
      for (const auto& b : partitions_of(3)) {
        auto prod = alg_multiply(algebra_basis(t, a), idempotent(t, b));
        auto coords = idempotent_coordinates(prod);
        auto it = coords.find(b);
        CHECK((it == coords.end() ? Int(0) : it->second) ==
              character(t, b, a));
      }
}

TEST_CASE("tensor product of simple modules") {
  CHECK(tensor_simple(Algebra::meet, sp("1,3|2"), sp("1|2,3")).terms ==
        std::map<SetPartition, Int>{{sp("1,2,3"), 1}});
  CHECK(tensor_simple(Algebra::join, sp("1,3|2"), sp("1|2,3")).terms ==
        std::map<SetPartition, Int>{{sp("1|2|3"), 1}});
  CHECK(tensor_simple(Algebra::diag, sp("1,2"), sp("1|2")).terms.empty());
  CHECK(tensor_simple(Algebra::diag, sp("1,2"), sp("1,2")).terms ==
        std::map<SetPartition, Int>{{sp("1,2"), 1}});
  // different ground sets multiply to zero
  CHECK(tensor_simple(Algebra::meet, sp("1"), sp("1,2")).terms.empty());
}

TEST_CASE("restriction splits a simple module at a cut") {
  auto r = restrict_simple(Algebra::join, 1, sp("1,2"));
  CHECK(r.terms.size() == 1);
  CHECK(r.terms.at({sp("1"), sp("1")}) == 1);
  CHECK(format_pair_module_sum(r) == "W{1} (x) W{1}");

  CHECK(restrict_simple(Algebra::meet, 1, sp("1,2")).terms.empty());
  CHECK(restrict_simple(Algebra::meet, 1, sp("1|2")).terms.at(
            {sp("1"), sp("1")}) == 1);
  CHECK(restrict_simple(Algebra::diag, 1, sp("1,2")).terms.empty());
  CHECK_THROWS_AS(restrict_simple(Algebra::meet, 5, sp("1|2")), RangeError);

  auto all = coproduct_restriction(Algebra::meet, sp("1|2,3"));
  CHECK(all.terms.size() == 3);
  CHECK(all.terms.at({sp("e"), sp("1|2,3")}) == 1);
  CHECK(all.terms.at({sp("1"), sp("1,2")}) == 1);
  CHECK(all.terms.at({sp("1|2,3"), sp("e")}) == 1);
}

TEST_CASE("induction of simple modules") {
  auto j = induct_simple(Algebra::join, sp("1"), sp("1"));
  CHECK(j.terms.size() == 2);
  CHECK(j.terms.at(sp("1|2")) == 1);
  CHECK(j.terms.at(sp("1,2")) == 1);
  CHECK(format_module_sum(j) == "W{1,2} + W{1|2}");

  auto v = induct_simple(Algebra::meet, sp("1"), sp("1"));
  CHECK(v.terms.size() == 1);
  CHECK(v.terms.at(sp("1|2")) == 1);
  CHECK(format_module_sum(v) == "V{1|2}");

  auto u = induct_simple(Algebra::diag, sp("1,2"), sp("1"));
  CHECK(u.terms.size() == 1);
  CHECK(u.terms.at(sp("1,2|3")) == 1);
  CHECK(format_module_sum(u) == "U{1,2|3}");

  CHECK_THROWS_AS(induct(simple(Algebra::meet, "1"), simple(Algebra::join, "1")),
                  TagMismatchError);
}

TEST_CASE("internal coproduct on classes fibers over the opposite operation") {
  auto cls = coproduct_internal_classes(Algebra::meet, sp("1,2"));
  CHECK(cls.terms.size() == 3);
  CHECK(cls.terms.at({sp("1|2"), sp("1,2")}) == 1);
  CHECK(cls.terms.at({sp("1,2"), sp("1|2")}) == 1);
  CHECK(cls.terms.at({sp("1,2"), sp("1,2")}) == 1);

  auto dcl = coproduct_internal_classes(Algebra::diag, sp("1,2"));
  CHECK(dcl.terms.size() == 1);
  CHECK(dcl.terms.at({sp("1,2"), sp("1,2")}) == 1);
}

TEST_CASE("module multiplicities stay non-negative") {
  ModuleSum s;
  s.algebra = Algebra::meet;
  s.add_term(sp("1"), 2);
  s.add_term(sp("1"), -1);
  CHECK(s.terms.at(sp("1")) == 1);
  s.add_term(sp("1"), -1);
  CHECK(s.terms.empty());
  CHECK_THROWS_AS(s.add_term(sp("1"), -1), RangeError);
}

TEST_CASE("Frobenius characteristic lands in the matching basis") {
  auto fe = frobenius(simple(Algebra::meet, "1,2"));
  CHECK(fe.basis() == Basis::x);
  CHECK(fe == NCSymElement::basis_vector(Basis::x, sp("1,2")));
  CHECK(convert(fe, Basis::m).coefficient(sp("1|2")) == -1);

  ModuleSum w;
  w.algebra = Algebra::join;
  w.add_term(sp("1|2"), 2);
  auto fw = frobenius(w);
  CHECK(fw.basis() == Basis::m);
  CHECK(fw.coefficient(sp("1|2")) == 2);

  CHECK(frobenius(simple(Algebra::diag, "1")) ==
        NCSymElement::basis_vector(Basis::p, sp("1")));
}

TEST_CASE("Frobenius turns induction into the product") {
  auto va = simple(Algebra::meet, "1");
  auto vb = simple(Algebra::meet, "1,2");
  CHECK(frobenius(induct(va, vb)) == multiply(frobenius(va), frobenius(vb)));

  auto wa = simple(Algebra::join, "1");
  CHECK(frobenius(induct(wa, wa)) == multiply(frobenius(wa), frobenius(wa)));

  auto ua = simple(Algebra::diag, "1,2");
  CHECK(frobenius(induct(ua, ua)) == multiply(frobenius(ua), frobenius(ua)));
}

TEST_CASE("pairing is the dot product against the m expansion") {
  for (const auto& a : partitions_of(3))
    for (const auto& b : partitions_of(3)) {
      Int want = a == b ? 1 : 0;
      CHECK(pairing(NCSymElement::basis_vector(Basis::m, a),
                    algebra_basis(Algebra::meet, b)) == want);
    }
  // the internal coproduct is dual to the meet product
  auto ma = NCSymElement::basis_vector(Basis::m, sp("1|2,3"));
  auto t = coproduct_internal(ma);
  for (const auto& b : partitions_of(3))
    for (const auto& c : partitions_of(3))
      CHECK(t.coefficient(b, c) ==
            pairing(ma, algebra_basis(Algebra::meet, meet(b, c))));
}
