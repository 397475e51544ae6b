#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "ncsym/element.hpp"
#include "ncsym/lattice_algebra.hpp"
#include "ncsym/set_partition.hpp"

namespace ncsym {

using Json = nlohmann::ordered_json;

// Partition <-> array of blocks, e.g. [[1,3,5],[2],[4]]; [] is the empty
// partition. Elements and tensors carry coefficients as decimal strings and
// list terms sorted by (degree, canonical partition text); module sums carry
// plain non-negative integer multiplicities.
Json partition_to_json(const SetPartition& a);
SetPartition partition_from_json(const Json& j);

Json element_to_json(const NCSymElement& e);
NCSymElement element_from_json(const Json& j);

Json tensor_to_json(const TensorElement& t);
TensorElement tensor_from_json(const Json& j);

Json algebra_element_to_json(const AlgebraElement& g);
AlgebraElement algebra_element_from_json(const Json& j);

Json module_sum_to_json(const ModuleSum& s);
ModuleSum module_sum_from_json(const Json& j);

Json pair_module_sum_to_json(const PairModuleSum& s);
PairModuleSum pair_module_sum_from_json(const Json& j);

// Wrapper for text that may be inline JSON; throws SyntaxError with the
// parser message on failure.
Json parse_json(const std::string& text);

}  // namespace ncsym
