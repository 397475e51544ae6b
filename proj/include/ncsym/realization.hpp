#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "ncsym/bigint.hpp"
#include "ncsym/element.hpp"
#include "ncsym/set_partition.hpp"

namespace ncsym {

// A word in noncommuting variables x_1..x_n (letters are 1-based indices).
using Word = std::vector<int>;

// An integer polynomial in n noncommuting variables, used as an independent
// brute-force model: NCSym elements expand here and results are classified
// back by word type. Everything is deliberately word-by-word.
class NCPolynomial {
 public:
  NCPolynomial() = default;
  explicit NCPolynomial(int alphabet);

  int alphabet() const { return alphabet_; }
  const std::map<Word, Int>& terms() const { return terms_; }
  Int coefficient(const Word& w) const;
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Word& w, const Int& c);  // letters checked against n

  NCPolynomial& operator+=(const NCPolynomial& other);
  NCPolynomial& operator-=(const NCPolynomial& other);
  friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) {
    return a += b;
  }
  friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) {
    return a -= b;
  }
  bool operator==(const NCPolynomial&) const = default;

 private:
  int alphabet_ = 0;
  std::map<Word, Int> terms_;
};

// The monomial expansion m_A[x_1..x_n]: one monomial for every word whose
// positions are partitioned by equal letters exactly as A. Zero when A has
// more blocks than there are variables.
NCPolynomial expand_m(const SetPartition& a, int alphabet);

// Applies a permutation of the variables letter-wise; sigma[i-1] is the
// image of letter i.
NCPolynomial permute(const std::vector<int>& sigma, const NCPolynomial& p);

// Word-concatenation product; alphabets must agree.
NCPolynomial nc_multiply(const NCPolynomial& a, const NCPolynomial& b);

// Writes an invariant polynomial as a combination of m_A[x_1..x_n]. Raises
// NotInvariantError when some word orbit is unevenly covered. `complete` is
// false when a type uses every variable, since coefficients of longer types
// are invisible with this alphabet.
struct TypeDecomposition {
  NCSymElement element;  // m basis
  bool complete = true;
};
TypeDecomposition type_decompose(const NCPolynomial& p);

// Expands m_A over the doubled alphabet of pairs (x_i, y_j), lets the two
// families commute past each other, and classifies the x- and y-projections
// of every pair word by type. Needs nx and ny at least the block count of A.
TensorElement expand_m_xy(const SetPartition& a, int nx, int ny);

std::string format_polynomial(const NCPolynomial& p);
std::ostream& operator<<(std::ostream&, const NCPolynomial&);

long long falling_factorial(int n, int k);

}  // namespace ncsym
