#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "ncsym/bigint.hpp"
#include "ncsym/element.hpp"
#include "ncsym/set_partition.hpp"

namespace ncsym {

// The three algebra structures on the span of the partitions of {1..n}:
// basis product meet(A,B), join(A,B), or A when A = B and zero otherwise.
enum class Algebra { meet, join, diag };

std::string algebra_name(Algebra t);
Algebra algebra_from_name(const std::string& name);

// An element of one of the partition-lattice algebras: an integer linear
// combination of the partitions of a fixed {1..n}.
struct AlgebraElement {
  Algebra algebra = Algebra::meet;
  int n = 0;
  std::map<SetPartition, Int> terms;

  void add_term(const SetPartition& a, const Int& c);
  bool operator==(const AlgebraElement&) const = default;
};

AlgebraElement algebra_basis(Algebra t, SetPartition a);
// Meet unit is the one-block partition, Join unit the all-singletons one;
// the Diag algebra has no unit.
std::optional<AlgebraElement> algebra_unit(Algebra t, int n);

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement scale(const AlgebraElement& a, const Int& s);
AlgebraElement alg_multiply(const AlgebraElement& a, const AlgebraElement& b);

// Linear extension of placing the second factor after the first,
// (kPi_n) (x) (kPi_m) -> kPi_(n+m).
AlgebraElement concat_extend(const AlgebraElement& a, const AlgebraElement& b);

// The primitive orthogonal idempotent attached to A:
//   Meet: sum of mu(B,A) B over B <= A
//   Join: sum of mu(A,B) B over B >= A
//   Diag: A itself.
AlgebraElement idempotent(Algebra t, const SetPartition& a);

// Coordinates of an element in the idempotent basis (may be negative, so
// this returns a plain map rather than a ModuleSum).
std::map<SetPartition, Int> idempotent_coordinates(const AlgebraElement& g);

// Scalar by which the basis element c acts on the one-dimensional simple
// module labeled by `label`: [c >= label] (Meet), [c <= label] (Join),
// [c == label] (Diag).
int act_on_simple(Algebra t, const SetPartition& c, const SetPartition& label);

// Character of the simple module labeled by `label` evaluated at the basis
// element a; equals act_on_simple(t, a, label).
int character(Algebra t, const SetPartition& label, const SetPartition& a);

// A formal non-negative-integer combination of simple-module labels.
struct ModuleSum {
  Algebra algebra = Algebra::meet;
  std::map<SetPartition, Int> terms;

  void add_term(const SetPartition& label, const Int& mult);
  bool operator==(const ModuleSum&) const = default;
};

// Restriction outputs: labels are (left, right) pairs of simple modules.
struct PairModuleSum {
  using Key = std::pair<SetPartition, SetPartition>;
  Algebra algebra = Algebra::meet;
  std::map<Key, Int> terms;

  void add_term(const SetPartition& l, const SetPartition& r, const Int& mult);
  bool operator==(const PairModuleSum&) const = default;
};

// Tensor product of simples under the diagonal embedding. Labels on
// different ground sets multiply to zero (empty sum).
ModuleSum tensor_simple(Algebra t, const SetPartition& a,
                        const SetPartition& b);
ModuleSum tensor_sum(const ModuleSum& a, const ModuleSum& b);
// Leg-wise tensor of pair sums; legs of unequal degree multiply to zero.
PairModuleSum tensor_pairs(const PairModuleSum& a, const PairModuleSum& b);

// Restriction of the simple labeled by `label` along the cut at k:
//   Meet and Diag: the two split halves when the label splits, else zero
//   Join: always the split halves of meet(label, 1_k | 1_(n-k)).
PairModuleSum restrict_simple(Algebra t, int k, const SetPartition& label);

// Sum of restrict_simple over every cut 0..n; the grading is carried by the
// sizes of the pair components.
PairModuleSum coproduct_restriction(Algebra t, const SetPartition& label);

// Induction of an outer tensor of simples:
//   Meet and Diag: the concatenated label
//   Join: one copy of each label in the concat fiber.
ModuleSum induct_simple(Algebra t, const SetPartition& a,
                        const SetPartition& b);
ModuleSum induct(const ModuleSum& a, const ModuleSum& b);

// Internal-coproduct fibers at the level of simple-module classes:
//   Meet: pairs with join(A,B) = c; Join: pairs with meet(A,B) = c;
//   Diag: the diagonal pair.
PairModuleSum coproduct_internal_classes(Algebra t, const SetPartition& c);

// Both sides of the idempotent concatenation identity: left is the concat
// extension of the two idempotents, right the predicted expansion (the
// concatenated idempotent for Meet and Diag, the concat-fiber sum of
// idempotents for Join).
std::pair<AlgebraElement, AlgebraElement> idempotent_concat_sides(
    Algebra t, const SetPartition& a, const SetPartition& b);

// Frobenius map on classes: Meet -> x basis, Join -> m basis, Diag -> p.
Basis frobenius_basis(Algebra t);
NCSymElement frobenius(const ModuleSum& s);
TensorElement frobenius(const PairModuleSum& s);

// Bilinear pairing of NCSym with a lattice-algebra element given by
// <m_A, B> = [A = B]; the element is converted to the m basis first.
Int pairing(const NCSymElement& e, const AlgebraElement& g);

std::string format_algebra_element(const AlgebraElement& g);
std::string format_module_sum(const ModuleSum& s);
std::string format_pair_module_sum(const PairModuleSum& s);
std::ostream& operator<<(std::ostream&, const AlgebraElement&);
std::ostream& operator<<(std::ostream&, const ModuleSum&);
std::ostream& operator<<(std::ostream&, const PairModuleSum&);

}  // namespace ncsym
