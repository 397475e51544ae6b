#include "ncsym/element.hpp"

#include <functional>
#include <ostream>
#include <sstream>

#include "ncsym/errors.hpp"

namespace ncsym {

char basis_letter(Basis b) {
  switch (b) {
    case Basis::m: return 'm';
    case Basis::p: return 'p';
    case Basis::x: return 'x';
  }
  throw RangeError("bad basis tag");
}

Basis basis_from_letter(char c) {
  switch (c) {
    case 'm': return Basis::m;
    case 'p': return Basis::p;
    case 'x': return Basis::x;
  }
  throw SyntaxError(std::string("unknown basis '") + c + "'");
}

NCSymElement NCSymElement::basis_vector(Basis b, SetPartition a) {
  NCSymElement e(b);
  e.terms_.emplace(std::move(a), 1);
  return e;
}

Int NCSymElement::coefficient(const SetPartition& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? Int(0) : it->second;
}

void NCSymElement::add_term(const SetPartition& a, const Int& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(a, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

NCSymElement& NCSymElement::operator+=(const NCSymElement& other) {
  if (basis_ != other.basis_)
    throw BasisMismatchError("cannot add elements in different bases");
  for (const auto& [a, c] : other.terms_) add_term(a, c);
  return *this;
}

NCSymElement& NCSymElement::operator-=(const NCSymElement& other) {
  if (basis_ != other.basis_)
    throw BasisMismatchError("cannot subtract elements in different bases");
  for (const auto& [a, c] : other.terms_) add_term(a, -c);
  return *this;
}

NCSymElement& NCSymElement::operator*=(const Int& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, c] : terms_) c *= scalar;
  return *this;
}

NCSymElement NCSymElement::operator-() const {
  NCSymElement out(basis_);
  for (const auto& [a, c] : terms_) out.terms_.emplace(a, -c);
  return out;
}

Int TensorElement::coefficient(const SetPartition& a,
                               const SetPartition& b) const {
  auto it = terms_.find(Key(a, b));
  return it == terms_.end() ? Int(0) : it->second;
}

void TensorElement::add_term(const SetPartition& a, const SetPartition& b,
                             const Int& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(Key(a, b), c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
  if (left_ != other.left_ || right_ != other.right_)
    throw BasisMismatchError("cannot add tensors in different bases");
  for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& other) {
  if (left_ != other.left_ || right_ != other.right_)
    throw BasisMismatchError("cannot subtract tensors in different bases");
  for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, -c);
  return *this;
}

TensorElement& TensorElement::operator*=(const Int& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= scalar;
  return *this;
}

TensorElement tensor(const NCSymElement& a, const NCSymElement& b) {
  TensorElement out(a.basis(), b.basis());
  for (const auto& [pa, ca] : a.terms())
    for (const auto& [pb, cb] : b.terms()) out.add_term(pa, pb, ca * cb);
  return out;
}

namespace {

// One edge of the conversion graph applied to a single basis vector.
void expand_step(Basis from, const SetPartition& a, const Int& coef,
                 NCSymElement& out) {
  switch (from) {
    case Basis::m:  // m_A in the p basis
      for (const SetPartition& b : coarsenings(a))
        out.add_term(b, coef * mobius(a, b));
      return;
    case Basis::x:  // x_A in the p basis
      for (const SetPartition& b : refinements(a))
        out.add_term(b, coef * mobius(b, a));
      return;
    case Basis::p:
      throw RangeError("expand_step is only for m and x");
  }
}

NCSymElement to_p(const NCSymElement& e) {
  if (e.basis() == Basis::p) return e;
  NCSymElement out(Basis::p);
  for (const auto& [a, c] : e.terms()) expand_step(e.basis(), a, c, out);
  return out;
}

NCSymElement from_p(const NCSymElement& e, Basis target) {
  if (target == Basis::p) return e;
  NCSymElement out(target);
  for (const auto& [a, c] : e.terms()) {
    if (target == Basis::m) {  // p_A = sum of m_B over B >= A
      for (const SetPartition& b : coarsenings(a)) out.add_term(b, c);
    } else {  // p_A = sum of x_B over B <= A
      for (const SetPartition& b : refinements(a)) out.add_term(b, c);
    }
  }
  return out;
}

}  // namespace

NCSymElement convert(const NCSymElement& e, Basis target) {
  if (e.basis() == target) return e;
  return from_p(to_p(e), target);
}

TensorElement convert(const TensorElement& t, Basis left, Basis right) {
  if (t.left_basis() == left && t.right_basis() == right) return t;
  TensorElement out(left, right);
  for (const auto& [key, c] : t.terms()) {
    NCSymElement l = convert(
        NCSymElement::basis_vector(t.left_basis(), key.first), left);
    NCSymElement r = convert(
        NCSymElement::basis_vector(t.right_basis(), key.second), right);
    for (const auto& [pa, ca] : l.terms())
      for (const auto& [pb, cb] : r.terms())
        out.add_term(pa, pb, c * ca * cb);
  }
  return out;
}

std::vector<SetPartition> concat_fiber(const SetPartition& a,
                                       const SetPartition& b) {
  int n = a.size();
  auto blocks_a = a.blocks();
  auto blocks_b = b.blocks();
  int la = a.length(), lb = b.length();
  std::vector<SetPartition> out;
  std::vector<int> match(la, -1);  // a-block -> b-block or -1
  std::vector<bool> used(lb, false);
  std::vector<int> labels(n + b.size());
  std::function<void(int)> walk = [&](int i) {
    if (i == la) {
      // Label each element by its merged group: matched pairs share the
      // a-block's id, unmatched b-blocks get fresh ids.
      for (int j = 0; j < la; ++j)
        for (int e : blocks_a[j]) labels[e - 1] = j;
      int next = la;
      for (int j = 0; j < lb; ++j) {
        int id = used[j] ? -1 : next++;
        if (used[j])
          for (int k = 0; k < la; ++k)
            if (match[k] == j) id = k;
        for (int e : blocks_b[j]) labels[n + e - 1] = id;
      }
      out.push_back(SetPartition::type_of(labels));
      return;
    }
    walk(i + 1);  // leave a-block i unmatched
    for (int j = 0; j < lb; ++j) {
      if (used[j]) continue;
      used[j] = true;
      match[i] = j;
      walk(i + 1);
      match[i] = -1;
      used[j] = false;
    }
  };
  walk(0);
  return out;
}

namespace {

NCSymElement multiply_m(const NCSymElement& a, const NCSymElement& b) {
  NCSymElement out(Basis::m);
  for (const auto& [pa, ca] : a.terms())
    for (const auto& [pb, cb] : b.terms()) {
      Int c = ca * cb;
      for (const SetPartition& f : concat_fiber(pa, pb)) out.add_term(f, c);
    }
  return out;
}

NCSymElement multiply_concat(const NCSymElement& a, const NCSymElement& b) {
  NCSymElement out(a.basis());
  for (const auto& [pa, ca] : a.terms())
    for (const auto& [pb, cb] : b.terms())
      out.add_term(concat(pa, pb), ca * cb);
  return out;
}

}  // namespace

NCSymElement multiply(const NCSymElement& a, const NCSymElement& b) {
  if (a.basis() != b.basis())
    throw BasisMismatchError("cannot multiply elements in different bases");
  return a.basis() == Basis::m ? multiply_m(a, b) : multiply_concat(a, b);
}

TensorElement multiply(const TensorElement& a, const TensorElement& b) {
  if (a.left_basis() != b.left_basis() || a.right_basis() != b.right_basis())
    throw BasisMismatchError("cannot multiply tensors in different bases");
  TensorElement out(a.left_basis(), a.right_basis());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      NCSymElement l =
          multiply(NCSymElement::basis_vector(a.left_basis(), ka.first),
                   NCSymElement::basis_vector(b.left_basis(), kb.first));
      NCSymElement r =
          multiply(NCSymElement::basis_vector(a.right_basis(), ka.second),
                   NCSymElement::basis_vector(b.right_basis(), kb.second));
      Int c = ca * cb;
      for (const auto& [pl, cl] : l.terms())
        for (const auto& [pr, cr] : r.terms())
          out.add_term(pl, pr, c * cl * cr);
    }
  return out;
}

TensorElement coproduct_external(const NCSymElement& e) {
  if (e.basis() == Basis::x)
    throw BasisMismatchError(
        "no closed deconcatenation rule on the x basis; use the conversion "
        "pipeline coproduct_external_x");
  TensorElement out(e.basis(), e.basis());
  for (const auto& [a, c] : e.terms()) {
    int l = a.length();
    for (unsigned mask = 0; mask < (1u << l); ++mask) {
      std::vector<int> inside, outside;
      for (int j = 1; j <= l; ++j)
        ((mask >> (j - 1)) & 1u ? inside : outside).push_back(j);
      out.add_term(restrict_blocks(a, inside), restrict_blocks(a, outside), c);
    }
  }
  return out;
}

TensorElement coproduct_external_x(const NCSymElement& e) {
  if (e.basis() != Basis::x)
    throw BasisMismatchError("coproduct_external_x expects the x basis");
  return convert(coproduct_external(convert(e, Basis::m)), Basis::x, Basis::x);
}

TensorElement coproduct_internal(const NCSymElement& e) {
  TensorElement out(e.basis(), e.basis());
  for (const auto& [a, c] : e.terms()) {
    switch (e.basis()) {
      case Basis::p:
        out.add_term(a, a, c);
        break;
      case Basis::m: {
        auto above = coarsenings(a);
        for (const SetPartition& b : above)
          for (const SetPartition& d : above)
            if (meet(b, d) == a) out.add_term(b, d, c);
        break;
      }
      case Basis::x: {
        auto below = refinements(a);
        for (const SetPartition& b : below)
          for (const SetPartition& d : below)
            if (join(b, d) == a) out.add_term(b, d, c);
        break;
      }
    }
  }
  return out;
}

Int counit(const NCSymElement& e) {
  return convert(e, Basis::m).coefficient(SetPartition());
}

namespace {

void append_term(std::ostringstream& out, bool first, const Int& c,
                 const std::string& body) {
  Int abs = c < 0 ? Int(-c) : c;
  if (first)
    out << (c < 0 ? "-" : "");
  else
    out << (c < 0 ? " - " : " + ");
  if (abs != 1) out << abs.str() << "*";
  out << body;
}

}  // namespace

std::string format_element(const NCSymElement& e) {
  if (e.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [a, c] : e.terms()) {
    append_term(out, first, c,
                std::string(1, basis_letter(e.basis())) + "{" +
                    format_partition(a) + "}");
    first = false;
  }
  return out.str();
}

std::string format_tensor(const TensorElement& t) {
  if (t.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : t.terms()) {
    append_term(out, first, c,
                std::string(1, basis_letter(t.left_basis())) + "{" +
                    format_partition(key.first) + "} (x) " +
                    std::string(1, basis_letter(t.right_basis())) + "{" +
                    format_partition(key.second) + "}");
    first = false;
  }
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const NCSymElement& e) {
  return os << format_element(e);
}

std::ostream& operator<<(std::ostream& os, const TensorElement& t) {
  return os << format_tensor(t);
}

}  // namespace ncsym
