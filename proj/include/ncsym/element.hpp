#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ncsym/bigint.hpp"
#include "ncsym/lattice.hpp"
#include "ncsym/set_partition.hpp"

namespace ncsym {

// The three bases of NCSym handled here: monomial (m), power-sum (p), and
// the lattice-idempotent basis (x).
enum class Basis { m, p, x };

char basis_letter(Basis b);
Basis basis_from_letter(char c);

// A finitely supported integer linear combination of basis vectors indexed
// by set partitions. Mixed degrees are allowed. Equality is structural and
// basis-sensitive; convert() moves between bases.
class NCSymElement {
 public:
  NCSymElement() = default;
  explicit NCSymElement(Basis b) : basis_(b) {}
  static NCSymElement basis_vector(Basis b, SetPartition a);

  Basis basis() const { return basis_; }
  const std::map<SetPartition, Int>& terms() const { return terms_; }
  Int coefficient(const SetPartition& a) const;
  bool is_zero() const { return terms_.empty(); }

  // Adds c * basis vector of a; drops the entry when it cancels to zero.
  void add_term(const SetPartition& a, const Int& c);

  NCSymElement& operator+=(const NCSymElement& other);
  NCSymElement& operator-=(const NCSymElement& other);
  NCSymElement& operator*=(const Int& scalar);
  friend NCSymElement operator+(NCSymElement a, const NCSymElement& b) {
    return a += b;
  }
  friend NCSymElement operator-(NCSymElement a, const NCSymElement& b) {
    return a -= b;
  }
  friend NCSymElement operator*(NCSymElement a, const Int& s) { return a *= s; }
  friend NCSymElement operator*(const Int& s, NCSymElement a) { return a *= s; }
  NCSymElement operator-() const;
  bool operator==(const NCSymElement&) const = default;

 private:
  Basis basis_ = Basis::m;
  std::map<SetPartition, Int> terms_;
};

// An element of NCSym tensor NCSym; the two legs may carry different bases.
class TensorElement {
 public:
  using Key = std::pair<SetPartition, SetPartition>;

  TensorElement() = default;
  TensorElement(Basis left, Basis right) : left_(left), right_(right) {}

  Basis left_basis() const { return left_; }
  Basis right_basis() const { return right_; }
  const std::map<Key, Int>& terms() const { return terms_; }
  Int coefficient(const SetPartition& a, const SetPartition& b) const;
  bool is_zero() const { return terms_.empty(); }

  void add_term(const SetPartition& a, const SetPartition& b, const Int& c);

  TensorElement& operator+=(const TensorElement& other);
  TensorElement& operator-=(const TensorElement& other);
  TensorElement& operator*=(const Int& scalar);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) {
    return a += b;
  }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) {
    return a -= b;
  }
  bool operator==(const TensorElement&) const = default;

 private:
  Basis left_ = Basis::m;
  Basis right_ = Basis::m;
  std::map<Key, Int> terms_;
};

TensorElement tensor(const NCSymElement& a, const NCSymElement& b);

// Change of basis; all conversions route through p:
//   p_A = sum of m_B over B >= A        m_A = sum of mu(A,B) p_B over B >= A
//   p_A = sum of x_B over B <= A        x_A = sum of mu(B,A) p_B over B <= A
NCSymElement convert(const NCSymElement& e, Basis target);
TensorElement convert(const TensorElement& t, Basis left, Basis right);

// Product of NCSym. Operands must share a basis tag. In the m basis the
// product of basis vectors is the sum over the fiber of partitions whose
// meet with the two-interval partition is the concatenated index; in the p
// and x bases it is concatenation of indices.
NCSymElement multiply(const NCSymElement& a, const NCSymElement& b);
inline NCSymElement operator*(const NCSymElement& a, const NCSymElement& b) {
  return multiply(a, b);
}

// Leg-wise product of tensors: (a (x) b)(c (x) d) = ac (x) bd.
TensorElement multiply(const TensorElement& a, const TensorElement& b);

// The fiber {C : C meet (1_n | 1_m) = A | B}, enumerated as the partial
// matchings between blocks of A and blocks of B. Shared by the m-basis
// product and the Join-tower induction rule.
std::vector<SetPartition> concat_fiber(const SetPartition& a,
                                       const SetPartition& b);

// External (deconcatenation) coproduct: on an m or p basis vector, the sum
// over all block subsets S of the restriction to S tensor the restriction to
// the complement. The x basis has no closed form; see coproduct_external_x.
TensorElement coproduct_external(const NCSymElement& e);

// External coproduct of an x-basis element, evaluated by converting through
// the m basis and converting both legs back to x.
TensorElement coproduct_external_x(const NCSymElement& e);

// Internal coproduct: m_A goes to the sum of m_B (x) m_C over meet(B,C) = A;
// p_A goes to p_A (x) p_A; x_A goes to the sum over join(B,C) = A.
TensorElement coproduct_internal(const NCSymElement& e);

// Coefficient of the empty partition once converted to the m basis.
Int counit(const NCSymElement& e);

std::string format_element(const NCSymElement& e);
std::string format_tensor(const TensorElement& t);
std::ostream& operator<<(std::ostream&, const NCSymElement&);
std::ostream& operator<<(std::ostream&, const TensorElement&);

}  // namespace ncsym
