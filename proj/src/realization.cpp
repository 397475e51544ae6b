#include "ncsym/realization.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include "ncsym/errors.hpp"

namespace ncsym {

NCPolynomial::NCPolynomial(int alphabet) : alphabet_(alphabet) {
  if (alphabet < 0) throw RangeError("negative alphabet size");
}

Int NCPolynomial::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Int(0) : it->second;
}

void NCPolynomial::add_term(const Word& w, const Int& c) {
  for (int letter : w)
    if (letter < 1 || letter > alphabet_)
      throw RangeError("letter " + std::to_string(letter) +
                       " outside alphabet");
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& other) {
  if (alphabet_ != other.alphabet_)
    throw SizeMismatchError("polynomials over different alphabets");
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

NCPolynomial& NCPolynomial::operator-=(const NCPolynomial& other) {
  if (alphabet_ != other.alphabet_)
    throw SizeMismatchError("polynomials over different alphabets");
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

namespace {

// Visits every injective assignment of the values 0..slots-1 to the given
// number of positions.
void for_each_injection(int positions, int slots,
                        const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> chosen(positions, -1);
  std::vector<bool> used(slots, false);
  std::function<void(int)> walk = [&](int i) {
    if (i == positions) {
      f(chosen);
      return;
    }
    for (int v = 0; v < slots; ++v) {
      if (used[v]) continue;
      used[v] = true;
      chosen[i] = v;
      walk(i + 1);
      used[v] = false;
    }
  };
  walk(0);
}

}  // namespace

NCPolynomial expand_m(const SetPartition& a, int alphabet) {
  NCPolynomial out(alphabet);
  if (a.length() > alphabet) return out;  // too few variables: zero
  for_each_injection(a.length(), alphabet, [&](const std::vector<int>& letters) {
    Word w(a.size());
    for (int i = 0; i < a.size(); ++i) w[i] = letters[a.rgs()[i]] + 1;
    out.add_term(w, 1);
  });
  return out;
}

NCPolynomial permute(const std::vector<int>& sigma, const NCPolynomial& p) {
  int n = p.alphabet();
  if (static_cast<int>(sigma.size()) != n)
    throw SizeMismatchError("permutation length differs from alphabet");
  std::vector<bool> hit(n, false);
  for (int v : sigma) {
    if (v < 1 || v > n || hit[v - 1])
      throw SizeMismatchError("not a permutation of the alphabet");
    hit[v - 1] = true;
  }
  NCPolynomial out(n);
  for (const auto& [w, c] : p.terms()) {
    Word image(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) image[i] = sigma[w[i] - 1];
    out.add_term(image, c);
  }
  return out;
}

NCPolynomial nc_multiply(const NCPolynomial& a, const NCPolynomial& b) {
  if (a.alphabet() != b.alphabet())
    throw SizeMismatchError("polynomials over different alphabets");
  NCPolynomial out(a.alphabet());
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  return out;
}

long long falling_factorial(int n, int k) {
  long long out = 1;
  for (int i = 0; i < k; ++i) out *= n - i;
  return k > n ? 0 : out;
}

TypeDecomposition type_decompose(const NCPolynomial& p) {
  struct Orbit {
    Int coefficient;
    long long seen = 0;
  };
  std::map<SetPartition, Orbit> orbits;
  for (const auto& [w, c] : p.terms()) {
    SetPartition type = SetPartition::type_of(w);
    auto [it, fresh] = orbits.emplace(type, Orbit{c, 1});
    if (!fresh) {
      if (it->second.coefficient != c)
        throw NotInvariantError("words of type " + format_partition(type) +
                                " carry unequal coefficients");
      ++it->second.seen;
    }
  }
  TypeDecomposition out;
  out.element = NCSymElement(Basis::m);
  for (const auto& [type, orbit] : orbits) {
    long long expected = falling_factorial(p.alphabet(), type.length());
    if (orbit.seen != expected)
      throw NotInvariantError("type " + format_partition(type) + " covers " +
                              std::to_string(orbit.seen) + " of " +
                              std::to_string(expected) + " words");
    if (type.length() == p.alphabet()) out.complete = false;
    out.element.add_term(type, orbit.coefficient);
  }
  return out;
}

TensorElement expand_m_xy(const SetPartition& a, int nx, int ny) {
  if (nx < a.length() || ny < a.length())
    throw AlphabetTooSmallError("need at least " +
                                std::to_string(a.length()) +
                                " variables in each family");
  // Pair letters are (x_i, y_j) in lexicographic order. Every monomial of
  // type A in the pair variables is one injective block assignment; its
  // image after the families commute is the x-projection times the
  // y-projection, so we classify those two words by type and demand that
  // every orbit is covered evenly.
  std::map<TensorElement::Key, long long> counts;
  for_each_injection(a.length(), nx * ny, [&](const std::vector<int>& letters) {
    Word xw(a.size()), yw(a.size());
    for (int i = 0; i < a.size(); ++i) {
      int pair = letters[a.rgs()[i]];
      xw[i] = pair / ny + 1;
      yw[i] = pair % ny + 1;
    }
    ++counts[TensorElement::Key(SetPartition::type_of(xw),
                                SetPartition::type_of(yw))];
  });
  TensorElement out(Basis::m, Basis::m);
  for (const auto& [key, seen] : counts) {
    long long expected = falling_factorial(nx, key.first.length()) *
                         falling_factorial(ny, key.second.length());
    if (seen % expected != 0)
      throw NotInvariantError("pair orbit covered unevenly");
    out.add_term(key.first, key.second, Int(seen / expected));
  }
  return out;
}

std::string format_polynomial(const NCPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    Int abs = c < 0 ? Int(-c) : c;
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (abs != 1 || w.empty()) out << abs.str();
    if (abs != 1 && !w.empty()) out << "*";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out << ".";
      out << "x" << w[i];
    }
  }
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const NCPolynomial& p) {
  return os << format_polynomial(p);
}

}  // namespace ncsym
