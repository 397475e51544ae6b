#include "ncsym/json_io.hpp"

#include <algorithm>
#include <limits>
#include <tuple>
#include <vector>

#include "ncsym/errors.hpp"

namespace ncsym {

namespace {

[[noreturn]] void bad(const std::string& what) { throw SyntaxError(what); }

const Json& expect_array(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be a JSON array");
  return j;
}

const Json& expect_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Int coef_from_json(const Json& j) {
  if (j.is_string()) return parse_decimal(j.get<std::string>());
  if (j.is_number_integer()) return Int(j.get<long long>());
  bad("coefficient must be a decimal string");
}

// Sort key used by every term list: degree first, then canonical text.
using TermKey = std::pair<int, std::string>;
TermKey term_key(const SetPartition& a) {
  return {a.size(), format_partition(a)};
}

}  // namespace

Json partition_to_json(const SetPartition& a) {
  Json out = Json::array();
  for (const auto& block : a.blocks()) out.push_back(block);
  return out;
}

SetPartition partition_from_json(const Json& j) {
  expect_array(j, "partition");
  std::vector<std::vector<int>> blocks;
  for (const Json& b : j) {
    expect_array(b, "block");
    std::vector<int> block;
    for (const Json& e : b) {
      if (!e.is_number_integer()) bad("block elements must be integers");
      block.push_back(e.get<int>());
    }
    blocks.push_back(std::move(block));
  }
  return SetPartition::from_blocks(blocks);
}

Json element_to_json(const NCSymElement& e) {
  std::vector<std::pair<TermKey, Json>> rows;
  for (const auto& [a, c] : e.terms()) {
    Json term;
    term["coef"] = to_decimal(c);
    term["partition"] = partition_to_json(a);
    rows.emplace_back(term_key(a), std::move(term));
  }
  std::sort(rows.begin(), rows.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  Json out;
  out["basis"] = std::string(1, basis_letter(e.basis()));
  Json terms = Json::array();
  for (auto& [key, term] : rows) terms.push_back(std::move(term));
  out["terms"] = std::move(terms);
  return out;
}

NCSymElement element_from_json(const Json& j) {
  const Json& basis = expect_field(j, "basis");
  if (!basis.is_string() || basis.get<std::string>().size() != 1)
    bad("basis must be one of \"m\", \"p\", \"x\"");
  NCSymElement out(basis_from_letter(basis.get<std::string>()[0]));
  for (const Json& term : expect_array(expect_field(j, "terms"), "terms")) {
    out.add_term(partition_from_json(expect_field(term, "partition")),
                 coef_from_json(expect_field(term, "coef")));
  }
  return out;
}

Json tensor_to_json(const TensorElement& t) {
  using Key = std::tuple<int, std::string, int, std::string>;
  std::vector<std::pair<Key, Json>> rows;
  for (const auto& [key, c] : t.terms()) {
    Json term;
    term["coef"] = to_decimal(c);
    term["left"] = partition_to_json(key.first);
    term["right"] = partition_to_json(key.second);
    auto [dl, tl] = term_key(key.first);
    auto [dr, tr] = term_key(key.second);
    rows.emplace_back(Key(dl, tl, dr, tr), std::move(term));
  }
  std::sort(rows.begin(), rows.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  Json out;
  out["basis"] = Json::array({std::string(1, basis_letter(t.left_basis())),
                              std::string(1, basis_letter(t.right_basis()))});
  Json terms = Json::array();
  for (auto& [key, term] : rows) terms.push_back(std::move(term));
  out["terms"] = std::move(terms);
  return out;
}

TensorElement tensor_from_json(const Json& j) {
  const Json& basis = expect_array(expect_field(j, "basis"), "basis");
  if (basis.size() != 2 || !basis[0].is_string() || !basis[1].is_string() ||
      basis[0].get<std::string>().size() != 1 ||
      basis[1].get<std::string>().size() != 1)
    bad("tensor basis must be a pair of letters");
  TensorElement out(basis_from_letter(basis[0].get<std::string>()[0]),
                    basis_from_letter(basis[1].get<std::string>()[0]));
  for (const Json& term : expect_array(expect_field(j, "terms"), "terms")) {
    out.add_term(partition_from_json(expect_field(term, "left")),
                 partition_from_json(expect_field(term, "right")),
                 coef_from_json(expect_field(term, "coef")));
  }
  return out;
}

Json algebra_element_to_json(const AlgebraElement& g) {
  std::vector<std::pair<TermKey, Json>> rows;
  for (const auto& [a, c] : g.terms) {
    Json term;
    term["coef"] = to_decimal(c);
    term["partition"] = partition_to_json(a);
    rows.emplace_back(term_key(a), std::move(term));
  }
  std::sort(rows.begin(), rows.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  Json out;
  out["algebra"] = algebra_name(g.algebra);
  out["n"] = g.n;
  Json terms = Json::array();
  for (auto& [key, term] : rows) terms.push_back(std::move(term));
  out["terms"] = std::move(terms);
  return out;
}

AlgebraElement algebra_element_from_json(const Json& j) {
  const Json& name = expect_field(j, "algebra");
  if (!name.is_string()) bad("algebra must be a string");
  const Json& n = expect_field(j, "n");
  if (!n.is_number_integer() || n.get<int>() < 0)
    bad("n must be a non-negative integer");
  AlgebraElement out{algebra_from_name(name.get<std::string>()), n.get<int>(),
                     {}};
  for (const Json& term : expect_array(expect_field(j, "terms"), "terms")) {
    out.add_term(partition_from_json(expect_field(term, "partition")),
                 coef_from_json(expect_field(term, "coef")));
  }
  return out;
}

namespace {

Int mult_from_json(const Json& j) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    bad("mult must be a non-negative integer");
  return Int(j.get<long long>());
}

Json mult_to_json(const Int& m) {
  if (m > Int(std::numeric_limits<long long>::max()))
    throw RangeError("multiplicity too large for JSON");
  return Json(m.convert_to<long long>());
}

}  // namespace

Json module_sum_to_json(const ModuleSum& s) {
  std::vector<std::pair<TermKey, Json>> rows;
  for (const auto& [label, m] : s.terms) {
    Json term;
    term["mult"] = mult_to_json(m);
    term["partition"] = partition_to_json(label);
    rows.emplace_back(term_key(label), std::move(term));
  }
  std::sort(rows.begin(), rows.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  Json out;
  out["algebra"] = algebra_name(s.algebra);
  Json terms = Json::array();
  for (auto& [key, term] : rows) terms.push_back(std::move(term));
  out["terms"] = std::move(terms);
  return out;
}

ModuleSum module_sum_from_json(const Json& j) {
  const Json& name = expect_field(j, "algebra");
  if (!name.is_string()) bad("algebra must be a string");
  ModuleSum out{algebra_from_name(name.get<std::string>()), {}};
  for (const Json& term : expect_array(expect_field(j, "terms"), "terms")) {
    out.add_term(partition_from_json(expect_field(term, "partition")),
                 mult_from_json(expect_field(term, "mult")));
  }
  return out;
}

Json pair_module_sum_to_json(const PairModuleSum& s) {
  using Key = std::tuple<int, std::string, int, std::string>;
  std::vector<std::pair<Key, Json>> rows;
  for (const auto& [key, m] : s.terms) {
    Json term;
    term["mult"] = mult_to_json(m);
    term["left"] = partition_to_json(key.first);
    term["right"] = partition_to_json(key.second);
    auto [dl, tl] = term_key(key.first);
    auto [dr, tr] = term_key(key.second);
    rows.emplace_back(Key(dl, tl, dr, tr), std::move(term));
  }
  std::sort(rows.begin(), rows.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  Json out;
  out["algebra"] = algebra_name(s.algebra);
  Json terms = Json::array();
  for (auto& [key, term] : rows) terms.push_back(std::move(term));
  out["terms"] = std::move(terms);
  return out;
}

PairModuleSum pair_module_sum_from_json(const Json& j) {
  const Json& name = expect_field(j, "algebra");
  if (!name.is_string()) bad("algebra must be a string");
  PairModuleSum out{algebra_from_name(name.get<std::string>()), {}};
  for (const Json& term : expect_array(expect_field(j, "terms"), "terms")) {
    out.add_term(partition_from_json(expect_field(term, "left")),
                 partition_from_json(expect_field(term, "right")),
                 mult_from_json(expect_field(term, "mult")));
  }
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError(e.what());
  }
}

}  // namespace ncsym
