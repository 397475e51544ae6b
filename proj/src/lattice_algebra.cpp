#include "ncsym/lattice_algebra.hpp"

#include <ostream>
#include <sstream>

#include "ncsym/errors.hpp"
#include "ncsym/lattice.hpp"

namespace ncsym {

std::string algebra_name(Algebra t) {
  switch (t) {
    case Algebra::meet: return "meet";
    case Algebra::join: return "join";
    case Algebra::diag: return "diag";
  }
  throw RangeError("bad algebra tag");
}

Algebra algebra_from_name(const std::string& name) {
  if (name == "meet") return Algebra::meet;
  if (name == "join") return Algebra::join;
  if (name == "diag") return Algebra::diag;
  throw SyntaxError("unknown algebra '" + name + "'");
}

namespace {

// Simple-module letter used in display output.
char module_letter(Algebra t) {
  switch (t) {
    case Algebra::meet: return 'V';
    case Algebra::join: return 'W';
    case Algebra::diag: return 'U';
  }
  throw RangeError("bad algebra tag");
}

void require_same(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.algebra != b.algebra)
    throw TagMismatchError("algebra products disagree");
  if (a.n != b.n)
    throw SizeMismatchError("elements live on different ground sets");
}

}  // namespace

void AlgebraElement::add_term(const SetPartition& a, const Int& c) {
  if (a.size() != n)
    throw SizeMismatchError("partition does not live on this ground set");
  if (c == 0) return;
  auto [it, fresh] = terms.emplace(a, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

AlgebraElement algebra_basis(Algebra t, SetPartition a) {
  AlgebraElement g{t, a.size(), {}};
  g.terms.emplace(std::move(a), 1);
  return g;
}

std::optional<AlgebraElement> algebra_unit(Algebra t, int n) {
  switch (t) {
    case Algebra::meet: return algebra_basis(t, SetPartition::one_block(n));
    case Algebra::join: return algebra_basis(t, SetPartition::singletons(n));
    case Algebra::diag: return std::nullopt;
  }
  throw RangeError("bad algebra tag");
}

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
  require_same(a, b);
  AlgebraElement out = a;
  for (const auto& [p, c] : b.terms) out.add_term(p, c);
  return out;
}

AlgebraElement scale(const AlgebraElement& a, const Int& s) {
  AlgebraElement out{a.algebra, a.n, {}};
  if (s == 0) return out;
  for (const auto& [p, c] : a.terms) out.terms.emplace(p, c * s);
  return out;
}

AlgebraElement alg_multiply(const AlgebraElement& a, const AlgebraElement& b) {
  require_same(a, b);
  AlgebraElement out{a.algebra, a.n, {}};
  for (const auto& [pa, ca] : a.terms)
    for (const auto& [pb, cb] : b.terms) {
      switch (a.algebra) {
        case Algebra::meet:
          out.add_term(meet(pa, pb), ca * cb);
          break;
        case Algebra::join:
          out.add_term(join(pa, pb), ca * cb);
          break;
        case Algebra::diag:
          if (pa == pb) out.add_term(pa, ca * cb);
          break;
      }
    }
  return out;
}

AlgebraElement concat_extend(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.algebra != b.algebra)
    throw TagMismatchError("algebra products disagree");
  AlgebraElement out{a.algebra, a.n + b.n, {}};
  for (const auto& [pa, ca] : a.terms)
    for (const auto& [pb, cb] : b.terms)
      out.add_term(concat(pa, pb), ca * cb);
  return out;
}

AlgebraElement idempotent(Algebra t, const SetPartition& a) {
  AlgebraElement out{t, a.size(), {}};
  switch (t) {
    case Algebra::meet:
      for (const SetPartition& b : refinements(a))
        out.add_term(b, mobius(b, a));
      break;
    case Algebra::join:
      for (const SetPartition& b : coarsenings(a))
        out.add_term(b, mobius(a, b));
      break;
    case Algebra::diag:
      out.add_term(a, 1);
      break;
  }
  return out;
}

std::map<SetPartition, Int> idempotent_coordinates(const AlgebraElement& g) {
  // Inverting the idempotent definition gives A = sum of idempotents over
  // B <= A (Meet) or B >= A (Join), so the coordinate at B is the zeta
  // transform of the partition-basis coordinates.
  std::map<SetPartition, Int> coords;
  auto bump = [&coords](const SetPartition& b, const Int& c) {
    auto [it, fresh] = coords.emplace(b, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) coords.erase(it);
    }
  };
  for (const auto& [a, c] : g.terms) {
    switch (g.algebra) {
      case Algebra::meet:
        for (const SetPartition& b : refinements(a)) bump(b, c);
        break;
      case Algebra::join:
        for (const SetPartition& b : coarsenings(a)) bump(b, c);
        break;
      case Algebra::diag:
        bump(a, c);
        break;
    }
  }
  return coords;
}

int act_on_simple(Algebra t, const SetPartition& c, const SetPartition& label) {
  if (c.size() != label.size())
    throw SizeMismatchError("element and module label sizes differ");
  switch (t) {
    case Algebra::meet: return refines(label, c) ? 1 : 0;
    case Algebra::join: return refines(c, label) ? 1 : 0;
    case Algebra::diag: return c == label ? 1 : 0;
  }
  throw RangeError("bad algebra tag");
}

int character(Algebra t, const SetPartition& label, const SetPartition& a) {
  return act_on_simple(t, a, label);
}

void ModuleSum::add_term(const SetPartition& label, const Int& mult) {
  if (mult == 0) return;
  auto [it, fresh] = terms.emplace(label, mult);
  if (!fresh) it->second += mult;
  if (it->second < 0)
    throw RangeError("module multiplicities must stay non-negative");
  if (it->second == 0) terms.erase(it);
}

void PairModuleSum::add_term(const SetPartition& l, const SetPartition& r,
                             const Int& mult) {
  if (mult == 0) return;
  auto [it, fresh] = terms.emplace(Key(l, r), mult);
  if (!fresh) it->second += mult;
  if (it->second < 0)
    throw RangeError("module multiplicities must stay non-negative");
  if (it->second == 0) terms.erase(it);
}

ModuleSum tensor_simple(Algebra t, const SetPartition& a,
                        const SetPartition& b) {
  ModuleSum out{t, {}};
  if (a.size() != b.size()) return out;  // graded product: zero, not an error
  switch (t) {
    case Algebra::meet:
      out.add_term(join(a, b), 1);
      break;
    case Algebra::join:
      out.add_term(meet(a, b), 1);
      break;
    case Algebra::diag:
      if (a == b) out.add_term(a, 1);
      break;
  }
  return out;
}

ModuleSum tensor_sum(const ModuleSum& a, const ModuleSum& b) {
  if (a.algebra != b.algebra)
    throw TagMismatchError("algebra products disagree");
  ModuleSum out{a.algebra, {}};
  for (const auto& [la, ma] : a.terms)
    for (const auto& [lb, mb] : b.terms) {
      ModuleSum prod = tensor_simple(a.algebra, la, lb);
      for (const auto& [l, m] : prod.terms) out.add_term(l, ma * mb * m);
    }
  return out;
}

PairModuleSum tensor_pairs(const PairModuleSum& a, const PairModuleSum& b) {
  if (a.algebra != b.algebra)
    throw TagMismatchError("algebra products disagree");
  PairModuleSum out{a.algebra, {}};
  for (const auto& [ka, ma] : a.terms)
    for (const auto& [kb, mb] : b.terms) {
      ModuleSum left = tensor_simple(a.algebra, ka.first, kb.first);
      ModuleSum right = tensor_simple(a.algebra, ka.second, kb.second);
      for (const auto& [ll, ml] : left.terms)
        for (const auto& [lr, mr] : right.terms)
          out.add_term(ll, lr, ma * mb * ml * mr);
    }
  return out;
}

PairModuleSum restrict_simple(Algebra t, int k, const SetPartition& label) {
  if (k < 0 || k > label.size())
    throw RangeError("cut position outside {0..n}");
  PairModuleSum out{t, {}};
  switch (t) {
    case Algebra::meet:
    case Algebra::diag: {
      if (auto halves = split(label, k))
        out.add_term(halves->first, halves->second, 1);
      break;
    }
    case Algebra::join: {
      SetPartition walls = concat(SetPartition::one_block(k),
                                  SetPartition::one_block(label.size() - k));
      auto halves = split(meet(label, walls), k);
      out.add_term(halves->first, halves->second, 1);
      break;
    }
  }
  return out;
}

PairModuleSum coproduct_restriction(Algebra t, const SetPartition& label) {
  PairModuleSum out{t, {}};
  for (int k = 0; k <= label.size(); ++k) {
    PairModuleSum part = restrict_simple(t, k, label);
    for (const auto& [key, m] : part.terms)
      out.add_term(key.first, key.second, m);
  }
  return out;
}

ModuleSum induct_simple(Algebra t, const SetPartition& a,
                        const SetPartition& b) {
  ModuleSum out{t, {}};
  switch (t) {
    case Algebra::meet:
    case Algebra::diag:
      out.add_term(concat(a, b), 1);
      break;
    case Algebra::join:
      for (const SetPartition& c : concat_fiber(a, b)) out.add_term(c, 1);
      break;
  }
  return out;
}

ModuleSum induct(const ModuleSum& a, const ModuleSum& b) {
  if (a.algebra != b.algebra)
    throw TagMismatchError("algebra products disagree");
  ModuleSum out{a.algebra, {}};
  for (const auto& [la, ma] : a.terms)
    for (const auto& [lb, mb] : b.terms) {
      ModuleSum part = induct_simple(a.algebra, la, lb);
      for (const auto& [l, m] : part.terms) out.add_term(l, ma * mb * m);
    }
  return out;
}

PairModuleSum coproduct_internal_classes(Algebra t, const SetPartition& c) {
  PairModuleSum out{t, {}};
  switch (t) {
    case Algebra::meet: {
      auto below = refinements(c);
      for (const SetPartition& a : below)
        for (const SetPartition& b : below)
          if (join(a, b) == c) out.add_term(a, b, 1);
      break;
    }
    case Algebra::join: {
      auto above = coarsenings(c);
      for (const SetPartition& a : above)
        for (const SetPartition& b : above)
          if (meet(a, b) == c) out.add_term(a, b, 1);
      break;
    }
    case Algebra::diag:
      out.add_term(c, c, 1);
      break;
  }
  return out;
}

std::pair<AlgebraElement, AlgebraElement> idempotent_concat_sides(
    Algebra t, const SetPartition& a, const SetPartition& b) {
  AlgebraElement lhs = concat_extend(idempotent(t, a), idempotent(t, b));
  AlgebraElement rhs{t, a.size() + b.size(), {}};
  switch (t) {
    case Algebra::meet:
    case Algebra::diag:
      rhs = idempotent(t, concat(a, b));
      break;
    case Algebra::join:
      for (const SetPartition& c : concat_fiber(a, b))
        rhs = add(rhs, idempotent(t, c));
      break;
  }
  return {lhs, rhs};
}

Basis frobenius_basis(Algebra t) {
  switch (t) {
    case Algebra::meet: return Basis::x;
    case Algebra::join: return Basis::m;
    case Algebra::diag: return Basis::p;
  }
  throw RangeError("bad algebra tag");
}

NCSymElement frobenius(const ModuleSum& s) {
  NCSymElement out(frobenius_basis(s.algebra));
  for (const auto& [label, m] : s.terms) out.add_term(label, m);
  return out;
}

TensorElement frobenius(const PairModuleSum& s) {
  Basis b = frobenius_basis(s.algebra);
  TensorElement out(b, b);
  for (const auto& [key, m] : s.terms)
    out.add_term(key.first, key.second, m);
  return out;
}

Int pairing(const NCSymElement& e, const AlgebraElement& g) {
  NCSymElement in_m = convert(e, Basis::m);
  Int total = 0;
  for (const auto& [p, c] : g.terms) total += in_m.coefficient(p) * c;
  return total;
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

std::string format_algebra_element(const AlgebraElement& g) {
  if (g.terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, c] : g.terms) {
    append_term(out, first, c, "[" + format_partition(p) + "]");
    first = false;
  }
  return out.str();
}

std::string format_module_sum(const ModuleSum& s) {
  if (s.terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [label, m] : s.terms) {
    append_term(out, first, m,
                std::string(1, module_letter(s.algebra)) + "{" +
                    format_partition(label) + "}");
    first = false;
  }
  return out.str();
}

std::string format_pair_module_sum(const PairModuleSum& s) {
  if (s.terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  char letter = module_letter(s.algebra);
  for (const auto& [key, m] : s.terms) {
    append_term(out, first, m,
                std::string(1, letter) + "{" + format_partition(key.first) +
                    "} (x) " + std::string(1, letter) + "{" +
                    format_partition(key.second) + "}");
    first = false;
  }
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const AlgebraElement& g) {
  return os << format_algebra_element(g);
}
std::ostream& operator<<(std::ostream& os, const ModuleSum& s) {
  return os << format_module_sum(s);
}
std::ostream& operator<<(std::ostream& os, const PairModuleSum& s) {
  return os << format_pair_module_sum(s);
}

}  // namespace ncsym
