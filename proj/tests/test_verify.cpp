#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <string>

#include "ncsym/errors.hpp"
#include "ncsym/verify.hpp"

using namespace ncsym;
using namespace ncsym::verify;

namespace {
bool has_property(const SuiteReport& r, const std::string& name) {
  return std::any_of(r.properties.begin(), r.properties.end(),
                     [&](const PropertyResult& p) { return p.name == name; });
}
}  // namespace

TEST_CASE("every suite passes at a small bound") {
  for (const auto& name : suite_names()) {
    int bound = name == "all" ? 2 : 3;
    auto report = run_suite(name, bound, 1);
    INFO(render_text(report, false));
    CHECK(report.ok());
    CHECK(report.suite == name);
    CHECK(report.max_n == bound);
    CHECK(!report.properties.empty());
  }
}

TEST_CASE("suite registry rejects bad input") {
  CHECK_THROWS_AS(run_suite("nope", 3, 1), UnknownSuiteError);
  CHECK_THROWS_AS(run_suite("lattice", 8, 1), BoundTooLargeError);
  for (const auto& name : suite_names()) {
    CHECK(suite_default_bound(name) <= suite_max_bound(name));
    CHECK_THROWS_AS(run_suite(name, suite_max_bound(name) + 1, 1),
                    BoundTooLargeError);
  }
  // negative bound selects the default
  auto report = run_suite("lattice", -1, 1);
  CHECK(report.max_n == suite_default_bound("lattice"));
}

TEST_CASE("reports do not depend on the worker count") {
  auto one = run_suite("mobius", 4, 1);
  auto two = run_suite("mobius", 4, 3);
  CHECK(render_text(one, false) == render_text(two, false));
  CHECK(render_json(one, false) == render_json(two, false));
}

TEST_CASE("text report shape") {
  auto report = run_suite("lattice", 2, 1);
  auto text = render_text(report, false);
  CHECK(text.find("suite lattice") != std::string::npos);
  CHECK(text.find("result PASS") != std::string::npos);
  CHECK(text.find("time") == std::string::npos);
  auto timed = render_text(report, true);
  CHECK(timed.find("time") != std::string::npos);

  auto j = render_json(report, false);
  CHECK(j["suite"] == "lattice");
  CHECK(j["ok"] == true);
  CHECK(!j.contains("seconds"));
  CHECK(render_json(report, true).contains("seconds"));
}

TEST_CASE("suites carry their advertised properties") {
  auto lattice = run_suite("lattice", 2, 1);
  for (const char* p : {"axioms", "associativity", "glb_lub",
                        "concat_morphism", "concat_monoid", "split_inverse",
                        "bell_counts", "type_stability"})
    CHECK(has_property(lattice, p));

  auto bases = run_suite("bases", 2, 1);
  for (const char* p : {"convert_roundtrip", "triangularity", "p_product",
                        "coassoc_external", "counit", "coassoc_internal",
                        "bialgebra_compat", "duality_pairing",
                        "no_internal_antipode"})
    CHECK(has_property(bases, p));

  auto all = run_suite("all", 2, 1);
  CHECK(has_property(all, "lattice.axioms"));
  CHECK(has_property(all, "theoremA.x_product"));
  CHECK(has_property(all, "frobenius.ind_res_incompatible"));
}

TEST_CASE("the induction-restriction witness is recorded") {
  auto r = check_ind_res_witness(2);
  CHECK(r.ok());
  CHECK(r.pass >= 1);
  CHECK(!r.note.empty());
  CHECK(r.note.find("A=") != std::string::npos);
}

TEST_CASE("antipode obstruction is found without bounds") {
  auto r = check_no_antipode();
  CHECK(r.ok());
  CHECK(r.pass >= 1);
}
