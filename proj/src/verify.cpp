#include "ncsym/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <functional>
#include <iomanip>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "ncsym/element.hpp"
#include "ncsym/errors.hpp"
#include "ncsym/lattice.hpp"
#include "ncsym/lattice_algebra.hpp"
#include "ncsym/realization.hpp"
#include "ncsym/set_partition.hpp"

namespace ncsym::verify {
namespace {

// Work items are small tuples of ints; every check decodes its own layout.
using Item = std::array<int, 6>;
using Items = std::shared_ptr<std::vector<Item>>;
using CheckFn = std::function<std::optional<std::string>(std::size_t)>;

template <typename... Args>
std::string cat(Args&&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

// Runs `fn` over [0, count); an empty optional means the item passed. The
// counterexample kept is always the one with the smallest index, so the
// report does not depend on the number of worker threads.
PropertyResult run_indexed(std::string name, std::size_t count, unsigned jobs,
                           const CheckFn& fn) {
  PropertyResult result;
  result.name = std::move(name);
  auto evaluate = [&fn](std::size_t i) -> std::optional<std::string> {
    try {
      return fn(i);
    } catch (const std::exception& e) {
      return std::optional<std::string>(e.what());
    }
  };
  if (jobs <= 1 || count < 128) {
    for (std::size_t i = 0; i < count; ++i) {
      if (auto bad = evaluate(i)) {
        ++result.fail;
        if (result.counterexample.empty()) result.counterexample = *bad;
      } else {
        ++result.pass;
      }
    }
    return result;
  }
  struct Local {
    long long pass = 0;
    long long fail = 0;
    std::size_t first = std::numeric_limits<std::size_t>::max();
    std::string message;
  };
  std::vector<Local> locals(jobs);
  std::atomic<std::size_t> cursor{0};
  constexpr std::size_t kChunk = 64;
  std::vector<std::thread> threads;
  threads.reserve(jobs);
  for (unsigned t = 0; t < jobs; ++t) {
    threads.emplace_back([&, t] {
      Local& local = locals[t];
      for (;;) {
        std::size_t begin = cursor.fetch_add(kChunk);
        if (begin >= count) break;
        std::size_t end = std::min(begin + kChunk, count);
        for (std::size_t i = begin; i < end; ++i) {
          if (auto bad = evaluate(i)) {
            ++local.fail;
            if (i < local.first) {
              local.first = i;
              local.message = *bad;
            }
          } else {
            ++local.pass;
          }
        }
      }
    });
  }
  for (auto& th : threads) th.join();
  std::size_t first = std::numeric_limits<std::size_t>::max();
  for (const Local& local : locals) {
    result.pass += local.pass;
    result.fail += local.fail;
    if (local.first < first) {
      first = local.first;
      result.counterexample = local.message;
    }
  }
  return result;
}

std::map<SetPartition, int> index_map(int n) {
  std::map<SetPartition, int> idx;
  const auto& parts = partitions_of(n);
  for (int i = 0; i < static_cast<int>(parts.size()); ++i) {
    idx.emplace(parts[i], i);
  }
  return idx;
}

constexpr std::array<Algebra, 3> kAlgebras = {Algebra::meet, Algebra::join,
                                              Algebra::diag};

// --- coassociativity scaffolding -------------------------------------------

using TripleKey = std::tuple<SetPartition, SetPartition, SetPartition>;
using TripleMap = std::map<TripleKey, Int>;
using Coproduct = std::function<TensorElement(const NCSymElement&)>;

void add_triple(TripleMap& out, TripleKey key, const Int& c) {
  auto it = out.emplace(std::move(key), 0).first;
  it->second += c;
  if (it->second == 0) out.erase(it);
}

// (delta (x) id) or (id (x) delta) applied to a tensor.
TripleMap coassoc_expand(const TensorElement& t, bool expand_left,
                         const Coproduct& delta) {
  TripleMap out;
  for (const auto& [key, c] : t.terms()) {
    if (expand_left) {
      TensorElement d =
          delta(NCSymElement::basis_vector(t.left_basis(), key.first));
      for (const auto& [k2, c2] : d.terms()) {
        add_triple(out, {k2.first, k2.second, key.second}, c * c2);
      }
    } else {
      TensorElement d =
          delta(NCSymElement::basis_vector(t.right_basis(), key.second));
      for (const auto& [k2, c2] : d.terms()) {
        add_triple(out, {key.first, k2.first, k2.second}, c * c2);
      }
    }
  }
  return out;
}

std::optional<std::string> coassoc_failure(const NCSymElement& v,
                                           const Coproduct& delta,
                                           const char* what) {
  TensorElement t = delta(v);
  if (coassoc_expand(t, true, delta) != coassoc_expand(t, false, delta)) {
    return cat(what, " not coassociative on ", format_element(v));
  }
  return std::nullopt;
}

std::optional<std::string> counit_failure(const NCSymElement& v,
                                          const TensorElement& t,
                                          const char* what) {
  NCSymElement from_left(v.basis());
  NCSymElement from_right(v.basis());
  for (const auto& [key, c] : t.terms()) {
    Int el = counit(NCSymElement::basis_vector(t.left_basis(), key.first));
    if (el != 0) from_left.add_term(key.second, c * el);
    Int er = counit(NCSymElement::basis_vector(t.right_basis(), key.second));
    if (er != 0) from_right.add_term(key.first, c * er);
  }
  if (from_left != v || from_right != v) {
    return cat(what, " counit law failed on ", format_element(v));
  }
  return std::nullopt;
}

// Plain unmemoized Mobius recursion, used to cross-check the cached one.
Int plain_mobius(const SetPartition& b, const SetPartition& a) {
  if (b == a) return 1;
  Int total = 0;
  for (const SetPartition& c : interval(b, a)) {
    if (c != a) total += plain_mobius(b, c);
  }
  return -total;
}

}  // namespace

// --- lattice ----------------------------------------------------------------

PropertyResult check_lattice_axioms(int max_n, unsigned jobs) {
  auto items = std::make_shared<std::vector<Item>>();
  for (int n = 0; n <= max_n; ++n) {
    int k = static_cast<int>(partitions_of(n).size());
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) items->push_back({n, i, j, 0, 0, 0});
    }
  }
  CheckFn fn = [items](std::size_t at) -> std::optional<std::string> {
    const Item& it = (*items)[at];
    int n = it[0];
    const auto& parts = partitions_of(n);
    const SetPartition& a = parts[it[1]];
    const SetPartition& b = parts[it[2]];
    SetPartition mab = meet(a, b);
    SetPartition jab = join(a, b);
    if (mab != meet(b, a)) return cat("meet not commutative: ", a, " ", b);
    if (jab != join(b, a)) return cat("join not commutative: ", a, " ", b);
    if (meet(a, jab) != a) return cat("absorption meet/join failed: ", a, " ", b);
    if (join(a, mab) != a) return cat("absorption join/meet failed: ", a, " ", b);
    bool r = refines(a, b);
    if (r != (mab == a)) return cat("refines vs meet disagree: ", a, " ", b);
    if (r != (jab == b)) return cat("refines vs join disagree: ", a, " ", b);
    if (it[2] == 0) {
      SetPartition bottom = SetPartition::singletons(n);
      SetPartition top = SetPartition::one_block(n);
      if (meet(a, a) != a || join(a, a) != a)
        return cat("idempotence failed: ", a);
      if (meet(a, bottom) != bottom || join(a, bottom) != a)
        return cat("bottom laws failed: ", a);
      if (meet(a, top) != a || join(a, top) != top)
        return cat("top laws failed: ", a);
    }
    return std::nullopt;
  };
  return run_indexed("axioms", items->size(), jobs, fn);
}

PropertyResult check_lattice_associativity(int max_n, unsigned jobs) {
  auto items = std::make_shared<std::vector<Item>>();
  for (int n = 0; n <= max_n; ++n) {
    int k = static_cast<int>(partitions_of(n).size());
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        for (int l = 0; l < k; ++l) items->push_back({n, i, j, l, 0, 0});
      }
    }
  }
  CheckFn fn = [items](std::size_t at) -> std::optional<std::string> {
    const Item& it = (*items)[at];
    const auto& parts = partitions_of(it[0]);
    const SetPartition& a = parts[it[1]];
    const SetPartition& b = parts[it[2]];
    const SetPartition& c = parts[it[3]];
    if (meet(meet(a, b), c) != meet(a, meet(b, c)))
      return cat("meet not associative: ", a, " ", b, " ", c);
    if (join(join(a, b), c) != join(a, join(b, c)))
      return cat("join not associative: ", a, " ", b, " ", c);
    return std::nullopt;
  };
  return run_indexed("associativity", items->size(), jobs, fn);
}

PropertyResult check_glb_lub(int max_n, unsigned jobs) {
  auto items = std::make_shared<std::vector<Item>>();
  for (int n = 0; n <= max_n; ++n) {
    int k = static_cast<int>(partitions_of(n).size());
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) items->push_back({n, i, j, 0, 0, 0});
    }
  }
  CheckFn fn = [items](std::size_t at) -> std::optional<std::string> {
    const Item& it = (*items)[at];
    const auto& parts = partitions_of(it[0]);
    const SetPartition& a = parts[it[1]];
    const SetPartition& b = parts[it[2]];
    SetPartition lo = meet(a, b);
    SetPartition hi = join(a, b);
    if (!refines(lo, a) || !refines(lo, b))
      return cat("meet not a lower bound: ", a, " ", b);
    if (!refines(a, hi) || !refines(b, hi))
      return cat("join not an upper bound: ", a, " ", b);
    for (const SetPartition& c : parts) {
      if (refines(c, a) && refines(c, b) && !refines(c, lo))
        return cat("meet not greatest: ", a, " ", b, " witness ", c);
      if (refines(a, c) && refines(b, c) && !refines(hi, c))
        return cat("join not least: ", a, " ", b, " witness ", c);
    }
    return std::nullopt;
  };
  return run_indexed("glb_lub", items->size(), jobs, fn);
}

PropertyResult check_concat_lattice_morphism(int max_total, unsigned jobs) {
  auto items = std::make_shared<std::vector<Item>>();
  for (int n = 0; n <= max_total; ++n) {
    for (int m = 0; n + m <= max_total; ++m) {
      int kn = static_cast<int>(partitions_of(n).size());
      int km = static_cast<int>(partitions_of(m).size());
      for (int i = 0; i < kn; ++i)
        for (int j = 0; j < kn; ++j)
          for (int k = 0; k < km; ++k)
            for (int l = 0; l < km; ++l) items->push_back({n, m, i, j, k, l});
    }
  }
  CheckFn fn = [items](std::size_t at) -> std::optional<std::string> {
    const Item& it = (*items)[at];
    const auto& pn = partitions_of(it[0]);
    const auto& pm = partitions_of(it[1]);
    const SetPartition& a = pn[it[2]];
    const SetPartition& b = pn[it[3]];
    const SetPartition& c = pm[it[4]];
    const SetPartition& d = pm[it[5]];
    if (meet(concat(a, c), concat(b, d)) != concat(meet(a, b), meet(c, d)))
      return cat("concat/meet mismatch: ", a, " ", b, " | ", c, " ", d);
    if (join(concat(a, c), concat(b, d)) != concat(join(a, b), join(c, d)))
      return cat("concat/join mismatch: ", a, " ", b, " | ", c, " ", d);
    return std::nullopt;
  };
  return run_indexed("concat_morphism", items->size(), jobs, fn);
}

PropertyResult check_concat_monoid(int max_total, unsigned jobs) {
  auto items = std::make_shared<std::vector<Item>>();
  for (int n1 = 0; n1 <= max_total; ++n1) {
    for (int n2 = 0; n1 + n2 <= max_total; ++n2) {
      for (int n3 = 0; n1 + n2 + n3 <= max_total; ++n3) {
        int k1 = static_cast<int>(partitions_of(n1).size());
        int k2 = static_cast<int>(partitions_of(n2).size());
        int k3 = static_cast<int>(partitions_of(n3).size());
        for (int i = 0; i < k1; ++i)
          for (int j = 0; j < k2; ++j)
            for (int l = 0; l < k3; ++l) items->push_back({n1, i, n2, j, n3, l});
      }
    }
  }
  CheckFn fn = [items](std::size_t at) -> std::optional<std::string> {
    const Item& it = (*items)[at];
    const SetPartition& a = partitions_of(it[0])[it[1]];
    const SetPartition& b = partitions_of(it[2])[it[3]];
    const SetPartition& c = partitions_of(it[4])[it[5]];
    if (concat(concat(a, b), c) != concat(a, concat(b, c)))
      return cat("concat not associative: ", a, " ", b, " ", c);
    if (it[2] == 0 && it[4] == 0) {
      SetPartition e;
      if (concat(e, a) != a || concat(a, e) != a)
        return cat("empty partition is not a concat unit: ", a);
    }
    return std::nullopt;
  };
  return run_indexed("concat_monoid", items->size(), jobs, fn);
}

PropertyResult check_split_inverse(int max_total, unsigned jobs) {
  auto items = std::make_shared<std::vector<Item>>();
  // mode 0: split(concat(a, b), |a|) recovers (a, b)
  for (int n = 0; n <= max_total; ++n) {
    for (int m = 0; n + m <= max_total; ++m) {
      int kn = static_cast<int>(partitions_of(n).size());
      int km = static_cast<int>(partitions_of(m).size());
      for (int i = 0; i < kn; ++i)
        for (int j = 0; j < km; ++j) items->push_back({0, n, i, m, j, 0});
    }
  }
  // mode 1: split exists exactly when no block crosses the cut
  for (int n = 0; n <= max_total; ++n) {
    int kn = static_cast<int>(partitions_of(n).size());
    for (int i = 0; i < kn; ++i)
      for (int k = 0; k <= n; ++k) items->push_back({1, n, i, k, 0, 0});
  }
  CheckFn fn = [items](std::size_t at) -> std::optional<std::string> {
    const Item& it = (*items)[at];
    if (it[0] == 0) {
      const SetPartition& a = partitions_of(it[1])[it[2]];
      const SetPartition& b = partitions_of(it[3])[it[4]];
      auto s = split(concat(a, b), a.size());
      if (!s) return cat("split of a concat failed: ", a, " ", b);
      if (s->first != a || s->second != b)
        return cat("split(concat) did not round-trip: ", a, " ", b);
      return std::nullopt;
    }
    const SetPartition& a = partitions_of(it[1])[it[2]];
    int k = it[3];
    bool clean = true;
    for (const auto& block : a.blocks()) {
      bool low = block.front() <= k;
      bool high = block.back() > k;
      if (low && high) clean = false;
    }
    auto s = split(a, k);
    if (clean != s.has_value())
      return cat("split existence wrong: ", a, " at ", k);
    if (s) {
      if (s->first.size() != k || s->second.size() != a.size() - k)
        return cat("split sizes wrong: ", a, " at ", k);
      if (concat(s->first, s->second) != a)
        return cat("concat(split) did not round-trip: ", a, " at ", k);
    }
    return std::nullopt;
  };
  return run_indexed("split_inverse", items->size(), jobs, fn);
}

PropertyResult check_bell_counts(int max_n) {
  CheckFn fn = [](std::size_t at) -> std::optional<std::string> {
    int n = static_cast<int>(at);
    const auto& parts = partitions_of(n);
    if (Int(parts.size()) != bell(n))
      return cat("count at n=", n, " is ", parts.size(), ", expected ",
                 to_decimal(bell(n)));
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
      if (!(parts[i + 1] < parts[i]))
        return cat("enumeration not strictly descending at n=", n);
    }
    if (n >= 1) {
      if (parts.front() != SetPartition::singletons(n))
        return cat("enumeration does not start at the singletons, n=", n);
      if (parts.back() != SetPartition::one_block(n))
        return cat("enumeration does not end at the one-block partition, n=",
                   n);
    }
    return std::nullopt;
  };
  return run_indexed("bell_counts", static_cast<std::size_t>(max_n) + 1, 1, fn);
}

PropertyResult check_type_stability() {
  auto items = std::make_shared<std::vector<Item>>();
  for (int len = 0; len <= 4; ++len) {
    int total = 1;
    for (int i = 0; i < len; ++i) total *= 4;
    for (int code = 0; code < total; ++code) items->push_back({len, code, 0, 0, 0, 0});
  }
  CheckFn fn = [items](std::size_t at) -> std::optional<std::string> {
    const Item& it = (*items)[at];
    int len = it[0];
    int code = it[1];
    std::vector<int> values(len);
    for (int i = 0; i < len; ++i) {
      values[i] = code % 4 + 1;
      code /= 4;
    }
    SetPartition t = SetPartition::type_of(values);
    std::map<int, std::vector<int>> by_value;
    for (int i = 0; i < len; ++i) by_value[values[i]].push_back(i + 1);
    std::vector<std::vector<int>> blocks;
    for (auto& [v, positions] : by_value) blocks.push_back(positions);
    if (t != SetPartition::from_blocks(blocks))
      return cat("type is not the equal-value position partition: len=", len);
    std::vector<int> sigma = {1, 2, 3, 4};
    do {
      std::vector<int> mapped(len);
      for (int i = 0; i < len; ++i) mapped[i] = sigma[values[i] - 1];
      if (SetPartition::type_of(mapped) != t)
        return cat("type changed under a value relabeling: len=", len);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return std::nullopt;
  };
  return run_indexed("type_stability", items->size(), 1, fn);
}

// --- Mobius -----------------------------------------------------------------

PropertyResult check_mobius_recursion_vs_product(int max_n, unsigned jobs) {
  auto items = std::make_shared<std::vector<Item>>();
  for (int n = 0; n <= max_n; ++n) {
    auto idx = index_map(n);
    const auto& parts = partitions_of(n);
    for (int ai = 0; ai < static_cast<int>(parts.size()); ++ai) {
      for (const SetPartition& b : refinements(parts[ai])) {
        items->push_back({n, idx.at(b), ai, 0, 0, 0});
      }
    }
  }
  CheckFn fn = [items](std::size_t at) -> std::optional<std::string> {
    const Item& it = (*items)[at];
    const auto& parts = partitions_of(it[0]);
    const SetPartition& b = parts[it[1]];
    const SetPartition& a = parts[it[2]];
    Int lhs = mobius(b, a);
    Int rhs = mobius_product_form(b, a);
    if (lhs != rhs)
      return cat("mu(", b, ", ", a, ") = ", to_decimal(lhs),
                 " but the product form gives ", to_decimal(rhs));
    if (b != a && mobius(a, b) != 0)
      return cat("mu should vanish against the order: ", a, " ", b);
    return std::nullopt;
  };
  return run_indexed("recursion_vs_product", items->size(), jobs, fn);
}

PropertyResult check_mobius_inversion(int max_n, unsigned jobs) {
  auto items = std::make_shared<std::vector<Item>>();
  for (int n = 0; n <= max_n; ++n) {
    auto idx = index_map(n);
    const auto& parts = partitions_of(n);
    for (int ai = 0; ai < static_cast<int>(parts.size()); ++ai) {
      for (const SetPartition& b : refinements(parts[ai])) {
        items->push_back({n, idx.at(b), ai, 0, 0, 0});
      }
    }
  }
  CheckFn fn = [items](std::size_t at) -> std::optional<std::string> {
    const Item& it = (*items)[at];
    const auto& parts = partitions_of(it[0]);
    const SetPartition& b = parts[it[1]];
    const SetPartition& a = parts[it[2]];
    Int up = 0;
    Int down = 0;
    for (const SetPartition& c : interval(b, a)) {
      up += mobius(b, c);
      down += mobius(c, a);
    }
    Int expected = (a == b) ? 1 : 0;
    if (up != expected || down != expected)
      return cat("delta-function identity failed on [", b, ", ", a, "]");
    return std::nullopt;
  };
  return run_indexed("inversion", items->size(), jobs, fn);
}

PropertyResult check_mobius_cache_transparent(int max_n) {
  auto items = std::make_shared<std::vector<Item>>();
  for (int n = 0; n <= max_n; ++n) {
    auto idx = index_map(n);
    const auto& parts = partitions_of(n);
    for (int ai = 0; ai < static_cast<int>(parts.size()); ++ai) {
      for (const SetPartition& b : refinements(parts[ai])) {
        items->push_back({n, idx.at(b), ai, 0, 0, 0});
      }
    }
  }
  CheckFn fn = [items](std::size_t at) -> std::optional<std::string> {
    const Item& it = (*items)[at];
    const auto& parts = partitions_of(it[0]);
    const SetPartition& b = parts[it[1]];
    const SetPartition& a = parts[it[2]];
    if (plain_mobius(b, a) != mobius(b, a))
      return cat("memoized mu differs from the direct recursion on [", b, ", ",
                 a, "]");
    return std::nullopt;
  };
  return run_indexed("cache_transparent", items->size(), 1, fn);
}

// --- bases ------------------------------------------------------------------

PropertyResult check_convert_roundtrip(int max_deg) {
  auto items = std::make_shared<std::vector<Item>>();
  for (int n = 0; n <= max_deg; ++n) {
    int k = static_cast<int>(partitions_of(n).size());
    for (int i = 0; i < k; ++i)
      for (int s = 0; s < 3; ++s)
        for (int t = 0; t < 3; ++t) items->push_back({n, i, s, t, 0, 0});
  }
  CheckFn fn = [items](std::size_t at) -> std::optional<std::string> {
    const Item& it = (*items)[at];
    const SetPartition& a = partitions_of(it[0])[it[1]];
    Basis bs = static_cast<Basis>(it[2]);
    Basis bt = static_cast<Basis>(it[3]);
    NCSymElement v = NCSymElement::basis_vector(bs, a);
    if (convert(convert(v, bt), bs) != v)
      return cat(basis_letter(bs), "->", basis_letter(bt), "->",
                 basis_letter(bs), " is not the identity on ", a);
    return std::nullopt;
  };
  return run_indexed("convert_roundtrip", items->size(), 1, fn);
}

PropertyResult check_triangularity(int max_n) {
  auto items = std::make_shared<std::vector<Item>>();
  for (int n = 0; n <= max_n; ++n) {
    int k = static_cast<int>(partitions_of(n).size());
    for (int i = 0; i < k; ++i) items->push_back({n, i, 0, 0, 0, 0});
  }
  CheckFn fn = [items](std::size_t at) -> std::optional<std::string> {
    const Item& it = (*items)[at];
    const SetPartition& a = partitions_of(it[0])[it[1]];
    NCSymElement mp = convert(NCSymElement::basis_vector(Basis::m, a), Basis::p);
    if (mp.coefficient(a) != 1) return cat("m->p diagonal entry wrong at ", a);
    for (const auto& [b, c] : mp.terms()) {
      if (!refines(a, b)) return cat("m->p support leaves the up-set of ", a);
    }
    NCSymElement pm = convert(NCSymElement::basis_vector(Basis::p, a), Basis::m);
    NCSymElement zeta_up(Basis::m);
    for (const SetPartition& b : coarsenings(a)) zeta_up.add_term(b, 1);
    if (pm != zeta_up) return cat("p->m is not the up-set indicator at ", a);
    NCSymElement xp = convert(NCSymElement::basis_vector(Basis::x, a), Basis::p);
    if (xp.coefficient(a) != 1) return cat("x->p diagonal entry wrong at ", a);
    for (const auto& [b, c] : xp.terms()) {
      if (!refines(b, a)) return cat("x->p support leaves the down-set of ", a);
    }
    NCSymElement px = convert(NCSymElement::basis_vector(Basis::p, a), Basis::x);
    NCSymElement zeta_down(Basis::x);
    for (const SetPartition& b : refinements(a)) zeta_down.add_term(b, 1);
    if (px != zeta_down) return cat("p->x is not the down-set indicator at ", a);
    return std::nullopt;
  };
  return run_indexed("triangularity", items->size(), 1, fn);
}

PropertyResult check_character_matrix(int max_n) {
  auto items = std::make_shared<std::vector<Item>>();
  for (int n = 0; n <= max_n; ++n) {
    int k = static_cast<int>(partitions_of(n).size());
    for (int i = 0; i < k; ++i) items->push_back({n, i, 0, 0, 0, 0});
  }
  CheckFn fn = [items](std::size_t at) -> std::optional<std::string> {
    const Item& it = (*items)[at];
    const auto& parts = partitions_of(it[0]);
    const SetPartition& a = parts[it[1]];
    NCSymElement px = convert(NCSymElement::basis_vector(Basis::p, a), Basis::x);
    NCSymElement pm = convert(NCSymElement::basis_vector(Basis::p, a), Basis::m);
    for (const SetPartition& b : parts) {
      if (px.coefficient(b) != character(Algebra::meet, b, a))
        return cat("x-expansion of p_", a, " disagrees with the meet character at ", b);
      if (pm.coefficient(b) != character(Algebra::join, b, a))
        return cat("m-expansion of p_", a, " disagrees with the join character at ", b);
      int diag = (a == b) ? 1 : 0;
      if (character(Algebra::diag, b, a) != diag)
        return cat("diag character wrong at ", a, " ", b);
    }
    return std::nullopt;
  };
  return run_indexed("character_matrix", items->size(), 1, fn);
}

PropertyResult check_p_product(int max_total, unsigned jobs) {
  auto items = std::make_shared<std::vector<Item>>();
  for (int n = 0; n <= max_total; ++n) {
    for (int m = 0; n + m <= max_total; ++m) {
      int kn = static_cast<int>(partitions_of(n).size());
      int km = static_cast<int>(partitions_of(m).size());
      for (int i = 0; i < kn; ++i)
        for (int j = 0; j < km; ++j) items->push_back({n, i, m, j, 0, 0});
    }
  }
  CheckFn fn = [items](std::size_t at) -> std::optional<std::string> {
    const Item& it = (*items)[at];
    const SetPartition& a = partitions_of(it[0])[it[1]];
    const SetPartition& b = partitions_of(it[2])[it[3]];
    NCSymElement pa = NCSymElement::basis_vector(Basis::p, a);
    NCSymElement pb = NCSymElement::basis_vector(Basis::p, b);
    NCSymElement lhs = convert(multiply(pa, pb), Basis::m);
    NCSymElement rhs = multiply(convert(pa, Basis::m), convert(pb, Basis::m));
    if (lhs != rhs)
      return cat("p product disagrees with the m product on ", a, " ", b);
    return std::nullopt;
  };
  return run_indexed("p_product", items->size(), jobs, fn);
}

namespace {
struct MeetTable {
  std::vector<std::vector<int>> meet_idx;
};

std::shared_ptr<std::map<int, MeetTable>> build_meet_tables(int max_n) {
  auto tables = std::make_shared<std::map<int, MeetTable>>();
  for (int n = 0; n <= max_n; ++n) {
    auto idx = index_map(n);
    const auto& parts = partitions_of(n);
    int k = static_cast<int>(parts.size());
    MeetTable t;
    t.meet_idx.assign(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        t.meet_idx[i][j] = idx.at(meet(parts[i], parts[j]));
    (*tables)[n] = std::move(t);
  }
  return tables;
}
}  // namespace

PropertyResult check_p_internal(int max_deg, unsigned jobs) {
  auto tables = build_meet_tables(max_deg);
  auto items = std::make_shared<std::vector<Item>>();
  for (int n = 0; n <= max_deg; ++n) {
    int k = static_cast<int>(partitions_of(n).size());
    for (int i = 0; i < k; ++i) items->push_back({0, n, i, 0, 0, 0});
  }
  for (int n = 0; n <= std::min(max_deg, 4); ++n) {
    int k = static_cast<int>(partitions_of(n).size());
    for (int i = 0; i < k; ++i) items->push_back({1, n, i, 0, 0, 0});
  }
  CheckFn fn = [items, tables](std::size_t at) -> std::optional<std::string> {
    const Item& it = (*items)[at];
    const auto& parts = partitions_of(it[1]);
    const SetPartition& a = parts[it[2]];
    if (it[0] == 0) {
      int k = static_cast<int>(parts.size());
      std::vector<char> vm(k);
      for (int i = 0; i < k; ++i) vm[i] = refines(a, parts[i]) ? 1 : 0;
      const auto& meet_idx = tables->at(it[1]).meet_idx;
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
          if (vm[meet_idx[i][j]] != (vm[i] & vm[j]))
            return cat("internal coproduct of p_", a,
                       " has the wrong m-coefficient at (", parts[i], ", ",
                       parts[j], ")");
        }
      }
      return std::nullopt;
    }
    NCSymElement pa = NCSymElement::basis_vector(Basis::p, a);
    TensorElement lhs = coproduct_internal(convert(pa, Basis::m));
    TensorElement rhs = convert(coproduct_internal(pa), Basis::m, Basis::m);
    if (lhs != rhs)
      return cat("internal coproduct of p_", a,
                 " disagrees between the p and m routes");
    return std::nullopt;
  };
  return run_indexed("p_internal", items->size(), jobs, fn);
}

PropertyResult check_p_external_pipeline(int max_deg) {
  auto items = std::make_shared<std::vector<Item>>();
  for (int n = 0; n <= max_deg; ++n) {
    int k = static_cast<int>(partitions_of(n).size());
    for (int i = 0; i < k; ++i) items->push_back({n, i, 0, 0, 0, 0});
  }
  CheckFn fn = [items](std::size_t at) -> std::optional<std::string> {
    const Item& it = (*items)[at];
    const SetPartition& a = partitions_of(it[0])[it[1]];
    NCSymElement pa = NCSymElement::basis_vector(Basis::p, a);
    TensorElement lhs = coproduct_external(pa);
    TensorElement rhs =
        convert(coproduct_external(convert(pa, Basis::m)), Basis::p, Basis::p);
    if (lhs != rhs)
      return cat("external coproduct of p_", a,
                 " disagrees between the p and m routes");
    return std::nullopt;
  };
  return run_indexed("p_external", items->size(), 1, fn);
}

PropertyResult check_coassoc_external(int max_deg) {
  auto items = std::make_shared<std::vector<Item>>();
  for (int n = 0; n <= max_deg; ++n) {
    int k = static_cast<int>(partitions_of(n).size());
    for (int i = 0; i < k; ++i)
      for (int b = 0; b < 2; ++b) items->push_back({n, i, b, 0, 0, 0});
  }
  CheckFn fn = [items](std::size_t at) -> std::optional<std::string> {
    const Item& it = (*items)[at];
    const SetPartition& a = partitions_of(it[0])[it[1]];
    Basis b = (it[2] == 0) ? Basis::m : Basis::p;
    NCSymElement v = NCSymElement::basis_vector(b, a);
    Coproduct delta = [](const NCSymElement& e) {
      return coproduct_external(e);
    };
    return coassoc_failure(v, delta, "external coproduct");
  };
  return run_indexed("coassoc_external", items->size(), 1, fn);
}

PropertyResult check_counit_laws(int max_deg) {
  auto items = std::make_shared<std::vector<Item>>();
  for (int n = 0; n <= max_deg; ++n) {
    int k = static_cast<int>(partitions_of(n).size());
    for (int i = 0; i < k; ++i)
      for (int b = 0; b < 2; ++b) items->push_back({n, i, b, 0, 0, 0});
  }
  CheckFn fn = [items](std::size_t at) -> std::optional<std::string> {
    const Item& it = (*items)[at];
    const SetPartition& a = partitions_of(it[0])[it[1]];
    Basis b = (it[2] == 0) ? Basis::m : Basis::p;
    NCSymElement v = NCSymElement::basis_vector(b, a);
    return counit_failure(v, coproduct_external(v), "external");
  };
  return run_indexed("counit", items->size(), 1, fn);
}

PropertyResult check_coassoc_internal(int max_deg) {
  auto items = std::make_shared<std::vector<Item>>();
  for (int n = 0; n <= max_deg; ++n) {
    int k = static_cast<int>(partitions_of(n).size());
    for (int i = 0; i < k; ++i)
      for (int b = 0; b < 2; ++b) items->push_back({n, i, b, 0, 0, 0});
  }
  CheckFn fn = [items](std::size_t at) -> std::optional<std::string> {
    const Item& it = (*items)[at];
    const SetPartition& a = partitions_of(it[0])[it[1]];
    Basis b = (it[2] == 0) ? Basis::m : Basis::p;
    NCSymElement v = NCSymElement::basis_vector(b, a);
    Coproduct delta = [](const NCSymElement& e) {
      return coproduct_internal(e);
    };
    return coassoc_failure(v, delta, "internal coproduct");
  };
  return run_indexed("coassoc_internal", items->size(), 1, fn);
}

PropertyResult check_bialgebra_compat(int max_total) {
  auto items = std::make_shared<std::vector<Item>>();
  for (int n = 0; n <= max_total; ++n) {
    for (int m = 0; n + m <= max_total; ++m) {
      int kn = static_cast<int>(partitions_of(n).size());
      int km = static_cast<int>(partitions_of(m).size());
      for (int i = 0; i < kn; ++i)
        for (int j = 0; j < km; ++j) items->push_back({n, i, m, j, 0, 0});
    }
  }
  CheckFn fn = [items](std::size_t at) -> std::optional<std::string> {
    const Item& it = (*items)[at];
    const SetPartition& a = partitions_of(it[0])[it[1]];
    const SetPartition& b = partitions_of(it[2])[it[3]];
    NCSymElement ma = NCSymElement::basis_vector(Basis::m, a);
    NCSymElement mb = NCSymElement::basis_vector(Basis::m, b);
    NCSymElement prod = multiply(ma, mb);
    if (coproduct_external(prod) !=
        multiply(coproduct_external(ma), coproduct_external(mb)))
      return cat("external coproduct is not multiplicative on ", a, " ", b);
    if (coproduct_internal(prod) !=
        multiply(coproduct_internal(ma), coproduct_internal(mb)))
      return cat("internal coproduct is not multiplicative on ", a, " ", b);
    return std::nullopt;
  };
  return run_indexed("bialgebra_compat", items->size(), 1, fn);
}

PropertyResult check_duality_pairing(int max_n) {
  auto items = std::make_shared<std::vector<Item>>();
  for (int n = 0; n <= max_n; ++n) {
    int k = static_cast<int>(partitions_of(n).size());
    for (int i = 0; i < k; ++i) items->push_back({n, i, 0, 0, 0, 0});
  }
  CheckFn fn = [items](std::size_t at) -> std::optional<std::string> {
    const Item& it = (*items)[at];
    const auto& parts = partitions_of(it[0]);
    const SetPartition& a = parts[it[1]];
    NCSymElement ma = NCSymElement::basis_vector(Basis::m, a);
    TensorElement t = coproduct_internal(ma);
    for (const SetPartition& b : parts) {
      for (const SetPartition& c : parts) {
        Int lhs = t.coefficient(b, c);
        Int rhs = pairing(ma, algebra_basis(Algebra::meet, meet(b, c)));
        if (lhs != rhs)
          return cat("duality between the internal coproduct and meet fails ",
                     "at A=", a, " B=", b, " C=", c);
      }
    }
    return std::nullopt;
  };
  return run_indexed("duality_pairing", items->size(), 1, fn);
}

PropertyResult check_no_antipode() {
  auto items = std::make_shared<std::vector<Item>>();
  for (int n = 0; n <= 4; ++n) {
    int k = static_cast<int>(partitions_of(n).size());
    for (int i = 0; i < k; ++i) items->push_back({n, i, 0, 0, 0, 0});
  }
  CheckFn fn = [items](std::size_t at) -> std::optional<std::string> {
    const Item& it = (*items)[at];
    const SetPartition& b = partitions_of(it[0])[it[1]];
    SetPartition one = SetPartition::one_block(1);
    NCSymElement m1 = NCSymElement::basis_vector(Basis::m, one);
    if (it[0] == 1 && it[1] == 0) {
      TensorElement d = coproduct_internal(m1);
      TensorElement expected(Basis::m, Basis::m);
      expected.add_term(one, one, 1);
      if (d != expected)
        return "internal coproduct of m_{1} is not m_{1} (x) m_{1}";
    }
    NCSymElement prod =
        multiply(NCSymElement::basis_vector(Basis::m, b), m1);
    if (prod.is_zero()) return cat("product with m_{1} vanished at ", b);
    for (const auto& [c, coef] : prod.terms()) {
      if (c.size() != b.size() + 1)
        return cat("product with m_{1} escaped its degree at ", b);
    }
    return std::nullopt;
  };
  PropertyResult r = run_indexed("no_internal_antipode", items->size(), 1, fn);
  if (r.ok()) {
    r.note =
        "any convolution inverse would need S(m_{1}) m_{1} to reach degree 0, "
        "but every such product stays in degree >= 1";
  }
  return r;
}

// --- x basis ----------------------------------------------------------------

PropertyResult check_x_product(int max_total, unsigned jobs) {
  auto items = std::make_shared<std::vector<Item>>();
  for (int n = 0; n <= max_total; ++n) {
    for (int m = 0; n + m <= max_total; ++m) {
      int kn = static_cast<int>(partitions_of(n).size());
      int km = static_cast<int>(partitions_of(m).size());
      for (int i = 0; i < kn; ++i)
        for (int j = 0; j < km; ++j) items->push_back({n, i, m, j, 0, 0});
    }
  }
  CheckFn fn = [items](std::size_t at) -> std::optional<std::string> {
    const Item& it = (*items)[at];
    const SetPartition& a = partitions_of(it[0])[it[1]];
    const SetPartition& b = partitions_of(it[2])[it[3]];
    NCSymElement xa = NCSymElement::basis_vector(Basis::x, a);
    NCSymElement xb = NCSymElement::basis_vector(Basis::x, b);
    NCSymElement lhs = convert(multiply(xa, xb), Basis::m);
    NCSymElement rhs = multiply(convert(xa, Basis::m), convert(xb, Basis::m));
    if (lhs != rhs)
      return cat("x product disagrees with the m product on ", a, " ", b);
    return std::nullopt;
  };
  return run_indexed("x_product", items->size(), jobs, fn);
}

namespace {
struct XTables {
  std::vector<std::vector<int>> meet_idx;
  std::vector<std::vector<int>> join_idx;
  std::vector<std::vector<Int>> m_to_x;  // [x row][m column]
  std::map<SetPartition, int> idx;
};

std::shared_ptr<std::map<int, XTables>> build_x_tables(int max_n) {
  auto tables = std::make_shared<std::map<int, XTables>>();
  for (int n = 0; n <= max_n; ++n) {
    const auto& parts = partitions_of(n);
    int k = static_cast<int>(parts.size());
    XTables t;
    t.idx = index_map(n);
    t.meet_idx.assign(k, std::vector<int>(k));
    t.join_idx.assign(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        t.meet_idx[i][j] = t.idx.at(meet(parts[i], parts[j]));
        t.join_idx[i][j] = t.idx.at(join(parts[i], parts[j]));
      }
    }
    t.m_to_x.assign(k, std::vector<Int>(k, 0));
    for (int j = 0; j < k; ++j) {
      NCSymElement col =
          convert(NCSymElement::basis_vector(Basis::m, parts[j]), Basis::x);
      for (const auto& [b, c] : col.terms()) t.m_to_x[t.idx.at(b)][j] = c;
    }
    (*tables)[n] = std::move(t);
  }
  return tables;
}
}  // namespace

PropertyResult check_x_internal(int max_deg, unsigned jobs) {
  auto tables = build_x_tables(max_deg);
  auto items = std::make_shared<std::vector<Item>>();
  for (int n = 0; n <= max_deg; ++n) {
    int k = static_cast<int>(partitions_of(n).size());
    for (int i = 0; i < k; ++i) items->push_back({0, n, i, 0, 0, 0});
  }
  for (int n = 0; n <= std::min(max_deg, 3); ++n) {
    int k = static_cast<int>(partitions_of(n).size());
    for (int i = 0; i < k; ++i) items->push_back({1, n, i, 0, 0, 0});
  }
  CheckFn fn = [items, tables](std::size_t at) -> std::optional<std::string> {
    const Item& it = (*items)[at];
    const auto& parts = partitions_of(it[1]);
    const SetPartition& cpart = parts[it[2]];
    NCSymElement xc = NCSymElement::basis_vector(Basis::x, cpart);
    if (it[0] == 1) {
      TensorElement lhs = convert(coproduct_internal(xc), Basis::m, Basis::m);
      TensorElement rhs = coproduct_internal(convert(xc, Basis::m));
      if (lhs != rhs)
        return cat("internal coproduct of x_", cpart,
                   " disagrees between the x and m routes");
      return std::nullopt;
    }
    const XTables& tb = tables->at(it[1]);
    int k = static_cast<int>(parts.size());
    int ci = it[2];
    // x_C written in m coordinates
    std::vector<Int> vm(k, 0);
    NCSymElement cm = convert(xc, Basis::m);
    for (const auto& [b, c] : cm.terms()) vm[tb.idx.at(b)] = c;
    // W = M (Delta-internal of vm), then U = W M^T; expect the join rule.
    std::vector<std::vector<Int>> w(k, std::vector<Int>(k, 0));
    for (int a = 0; a < k; ++a) {
      const auto& mrow = tb.m_to_x[a];
      auto& wrow = w[a];
      for (int i = 0; i < k; ++i) {
        const Int& f = mrow[i];
        if (f == 0) continue;
        const auto& meets = tb.meet_idx[i];
        for (int j = 0; j < k; ++j) {
          const Int& t = vm[meets[j]];
          if (t != 0) wrow[j] += f * t;
        }
      }
    }
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        Int u = 0;
        const auto& wrow = w[a];
        const auto& mrow = tb.m_to_x[b];
        for (int j = 0; j < k; ++j) {
          if (wrow[j] != 0 && mrow[j] != 0) u += wrow[j] * mrow[j];
        }
        Int expected = (tb.join_idx[a][b] == ci) ? 1 : 0;
        if (u != expected)
          return cat("internal coproduct of x_", cpart,
                     " has coefficient ", to_decimal(u), " at (x_", parts[a],
                     ", x_", parts[b], "), expected ", to_decimal(expected));
      }
    }
    return std::nullopt;
  };
  return run_indexed("x_internal", items->size(), jobs, fn);
}

PropertyResult check_x_external_coassoc(int max_deg) {
  auto items = std::make_shared<std::vector<Item>>();
  for (int n = 0; n <= max_deg; ++n) {
    int k = static_cast<int>(partitions_of(n).size());
    for (int i = 0; i < k; ++i) items->push_back({n, i, 0, 0, 0, 0});
  }
  CheckFn fn = [items](std::size_t at) -> std::optional<std::string> {
    const Item& it = (*items)[at];
    const SetPartition& a = partitions_of(it[0])[it[1]];
    NCSymElement v = NCSymElement::basis_vector(Basis::x, a);
    if (it[1] == 0) {
      try {
        coproduct_external(v);
        return std::optional<std::string>(
            "coproduct_external accepted an x element");
      } catch (const BasisMismatchError&) {
      }
    }
    Coproduct delta = [](const NCSymElement& e) {
      return coproduct_external_x(e);
    };
    if (auto bad = coassoc_failure(v, delta, "x external coproduct")) {
      return bad;
    }
    return counit_failure(v, coproduct_external_x(v), "x external");
  };
  return run_indexed("x_external_coassoc", items->size(), 1, fn);
}

// --- idempotents ------------------------------------------------------------

namespace {
using IdemLists = std::map<std::pair<int, int>, std::vector<AlgebraElement>>;

std::shared_ptr<IdemLists> build_idempotents(int max_n) {
  auto lists = std::make_shared<IdemLists>();
  for (int t = 0; t < 3; ++t) {
    for (int n = 0; n <= max_n; ++n) {
      std::vector<AlgebraElement> row;
      for (const SetPartition& a : partitions_of(n)) {
        row.push_back(idempotent(kAlgebras[t], a));
      }
      (*lists)[{t, n}] = std::move(row);
    }
  }
  return lists;
}
}  // namespace

PropertyResult check_idempotent_orthogonality(int max_n, unsigned jobs) {
  auto lists = build_idempotents(max_n);
  auto items = std::make_shared<std::vector<Item>>();
  for (int t = 0; t < 3; ++t) {
    for (int n = 0; n <= max_n; ++n) {
      int k = static_cast<int>(partitions_of(n).size());
      for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) items->push_back({t, n, i, j, 0, 0});
    }
  }
  CheckFn fn = [items, lists](std::size_t at) -> std::optional<std::string> {
    const Item& it = (*items)[at];
    Algebra t = kAlgebras[it[0]];
    const auto& row = lists->at({it[0], it[1]});
    const AlgebraElement& ei = row[it[2]];
    const AlgebraElement& ej = row[it[3]];
    AlgebraElement prod = alg_multiply(ei, ej);
    const AlgebraElement expected =
        (it[2] == it[3]) ? ei : AlgebraElement{t, it[1], {}};
    if (prod != expected)
      return cat(algebra_name(t), " idempotents not orthogonal at ",
                 partitions_of(it[1])[it[2]], " and ",
                 partitions_of(it[1])[it[3]]);
    return std::nullopt;
  };
  return run_indexed("orthogonality", items->size(), jobs, fn);
}

PropertyResult check_idempotent_completeness(int max_n) {
  auto items = std::make_shared<std::vector<Item>>();
  for (int t = 0; t < 3; ++t)
    for (int n = 0; n <= max_n; ++n) items->push_back({t, n, 0, 0, 0, 0});
  CheckFn fn = [items](std::size_t at) -> std::optional<std::string> {
    const Item& it = (*items)[at];
    Algebra t = kAlgebras[it[0]];
    int n = it[1];
    const auto& parts = partitions_of(n);
    AlgebraElement sum{t, n, {}};
    for (const SetPartition& a : parts) sum = add(sum, idempotent(t, a));
    AlgebraElement expected{t, n, {}};
    if (t == Algebra::meet) {
      expected = algebra_basis(t, SetPartition::one_block(n));
    } else if (t == Algebra::join) {
      expected = algebra_basis(t, SetPartition::singletons(n));
    } else {
      for (const SetPartition& a : parts) expected.add_term(a, 1);
    }
    if (sum != expected)
      return cat(algebra_name(t), " idempotents do not sum to the unit, n=", n);
    auto unit = algebra_unit(t, n);
    if (t == Algebra::diag) {
      if (unit.has_value()) return "diag algebra reported a unit";
    } else {
      if (!unit || *unit != expected)
        return cat(algebra_name(t), " unit wrong, n=", n);
      for (const SetPartition& a : parts) {
        AlgebraElement v = algebra_basis(t, a);
        if (alg_multiply(*unit, v) != v || alg_multiply(v, *unit) != v)
          return cat(algebra_name(t), " unit does not act as identity on ", a);
      }
    }
    auto coords = idempotent_coordinates(sum);
    for (const SetPartition& a : parts) {
      auto found = coords.find(a);
      Int c = (found == coords.end()) ? 0 : found->second;
      if (c != 1)
        return cat(algebra_name(t),
                   " idempotent coordinates of the full sum are not all 1, n=",
                   n);
    }
    return std::nullopt;
  };
  return run_indexed("completeness", items->size(), 1, fn);
}

PropertyResult check_idempotent_concat(int max_total, unsigned jobs) {
  auto items = std::make_shared<std::vector<Item>>();
  for (int t = 0; t < 3; ++t) {
    for (int n = 0; n <= max_total; ++n) {
      for (int m = 0; n + m <= max_total; ++m) {
        int kn = static_cast<int>(partitions_of(n).size());
        int km = static_cast<int>(partitions_of(m).size());
        for (int i = 0; i < kn; ++i)
          for (int j = 0; j < km; ++j) items->push_back({t, n, i, m, j, 0});
      }
    }
  }
  CheckFn fn = [items](std::size_t at) -> std::optional<std::string> {
    const Item& it = (*items)[at];
    Algebra t = kAlgebras[it[0]];
    const SetPartition& a = partitions_of(it[1])[it[2]];
    const SetPartition& b = partitions_of(it[3])[it[4]];
    auto sides = idempotent_concat_sides(t, a, b);
    if (sides.first != sides.second)
      return cat(algebra_name(t), " idempotent concat identity fails at ", a,
                 " and ", b);
    return std::nullopt;
  };
  return run_indexed("concat_identity", items->size(), jobs, fn);
}

PropertyResult check_action_consistency(int max_n, unsigned jobs) {
  auto items = std::make_shared<std::vector<Item>>();
  for (int t = 0; t < 3; ++t) {
    for (int n = 0; n <= max_n; ++n) {
      int k = static_cast<int>(partitions_of(n).size());
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) items->push_back({t, n, i, j, 0, 0});
    }
  }
  CheckFn fn = [items](std::size_t at) -> std::optional<std::string> {
    const Item& it = (*items)[at];
    Algebra t = kAlgebras[it[0]];
    const auto& parts = partitions_of(it[1]);
    const SetPartition& c = parts[it[2]];
    const SetPartition& a = parts[it[3]];
    AlgebraElement e = idempotent(t, a);
    AlgebraElement rhs = scale(e, act_on_simple(t, c, a));
    AlgebraElement cv = algebra_basis(t, c);
    if (alg_multiply(cv, e) != rhs || alg_multiply(e, cv) != rhs)
      return cat(algebra_name(t), " basis element ", c,
                 " does not act on the idempotent of ", a,
                 " by the simple-module scalar");
    if (character(t, a, c) != act_on_simple(t, c, a))
      return cat(algebra_name(t), " character disagrees with the action at ",
                 c, " ", a);
    return std::nullopt;
  };
  return run_indexed("action_consistency", items->size(), jobs, fn);
}

// --- modules ----------------------------------------------------------------

PropertyResult check_module_tensor(int max_n) {
  auto items = std::make_shared<std::vector<Item>>();
  for (int t = 0; t < 3; ++t) {
    for (int n = 0; n <= max_n; ++n) {
      int k = static_cast<int>(partitions_of(n).size());
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) items->push_back({t, n, i, j, 0, 0});
    }
  }
  CheckFn fn = [items](std::size_t at) -> std::optional<std::string> {
    const Item& it = (*items)[at];
    Algebra t = kAlgebras[it[0]];
    int n = it[1];
    const auto& parts = partitions_of(n);
    const SetPartition& a = parts[it[2]];
    const SetPartition& b = parts[it[3]];
    ModuleSum ms = tensor_simple(t, a, b);
    for (const auto& [label, mult] : ms.terms) {
      if (mult <= 0) return cat("tensor multiplicity not positive at ", a, " ", b);
    }
    for (const SetPartition& c : parts) {
      Int lhs = Int(act_on_simple(t, c, a)) * act_on_simple(t, c, b);
      Int rhs = 0;
      for (const auto& [label, mult] : ms.terms) {
        rhs += mult * act_on_simple(t, c, label);
      }
      if (lhs != rhs)
        return cat(algebra_name(t), " tensor of simples at ", a, " (x) ", b,
                   " has the wrong character at ", c);
    }
    if (n >= 1 && it[2] == 0 && it[3] == 0) {
      ModuleSum cross = tensor_simple(t, a, SetPartition::singletons(n - 1));
      if (!cross.terms.empty())
        return cat(algebra_name(t),
                   " tensor across different ground sets was not zero, n=", n);
    }
    return std::nullopt;
  };
  return run_indexed("tensor_characters", items->size(), 1, fn);
}

PropertyResult check_module_restrict(int max_n) {
  auto items = std::make_shared<std::vector<Item>>();
  for (int t = 0; t < 3; ++t) {
    for (int n = 0; n <= max_n; ++n) {
      int kp = static_cast<int>(partitions_of(n).size());
      for (int i = 0; i < kp; ++i)
        for (int k = 0; k <= n; ++k) items->push_back({t, n, i, k, 0, 0});
    }
  }
  CheckFn fn = [items](std::size_t at) -> std::optional<std::string> {
    const Item& it = (*items)[at];
    Algebra t = kAlgebras[it[0]];
    int n = it[1];
    int k = it[3];
    const SetPartition& a = partitions_of(n)[it[2]];
    PairModuleSum res = restrict_simple(t, k, a);
    for (const SetPartition& bl : partitions_of(k)) {
      for (const SetPartition& br : partitions_of(n - k)) {
        Int lhs = act_on_simple(t, concat(bl, br), a);
        Int rhs = 0;
        for (const auto& [key, mult] : res.terms) {
          rhs += mult * Int(act_on_simple(t, bl, key.first)) *
                 act_on_simple(t, br, key.second);
        }
        if (lhs != rhs)
          return cat(algebra_name(t), " restriction of ", a, " at cut ", k,
                     " has the wrong character at ", bl, " | ", br);
      }
    }
    return std::nullopt;
  };
  return run_indexed("restrict_characters", items->size(), 1, fn);
}

PropertyResult check_module_induct(int max_total) {
  auto items = std::make_shared<std::vector<Item>>();
  for (int t = 0; t < 3; ++t) {
    for (int n = 0; n <= max_total; ++n) {
      for (int m = 0; n + m <= max_total; ++m) {
        int kn = static_cast<int>(partitions_of(n).size());
        int km = static_cast<int>(partitions_of(m).size());
        for (int i = 0; i < kn; ++i)
          for (int j = 0; j < km; ++j) items->push_back({t, n, i, m, j, 0});
      }
    }
  }
  CheckFn fn = [items](std::size_t at) -> std::optional<std::string> {
    const Item& it = (*items)[at];
    Algebra t = kAlgebras[it[0]];
    const SetPartition& a = partitions_of(it[1])[it[2]];
    const SetPartition& b = partitions_of(it[3])[it[4]];
    ModuleSum ind = induct_simple(t, a, b);
    AlgebraElement g = concat_extend(idempotent(t, a), idempotent(t, b));
    auto coords = idempotent_coordinates(g);
    for (const SetPartition& d : partitions_of(it[1] + it[3])) {
      auto fi = ind.terms.find(d);
      Int want = (fi == ind.terms.end()) ? 0 : fi->second;
      auto fc = coords.find(d);
      Int got = (fc == coords.end()) ? 0 : fc->second;
      if (want != got)
        return cat(algebra_name(t), " induction of ", a, " (x) ", b,
                   " disagrees with the idempotent coordinates at ", d);
    }
    return std::nullopt;
  };
  return run_indexed("induct_coordinates", items->size(), 1, fn);
}

PropertyResult check_res_coproduct_tensor(int max_n) {
  auto items = std::make_shared<std::vector<Item>>();
  for (int t = 0; t < 3; ++t) {
    for (int n = 0; n <= max_n; ++n) {
      int k = static_cast<int>(partitions_of(n).size());
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) items->push_back({t, n, i, j, 0, 0});
    }
  }
  CheckFn fn = [items](std::size_t at) -> std::optional<std::string> {
    const Item& it = (*items)[at];
    Algebra t = kAlgebras[it[0]];
    const SetPartition& a = partitions_of(it[1])[it[2]];
    const SetPartition& b = partitions_of(it[1])[it[3]];
    ModuleSum ts = tensor_simple(t, a, b);
    PairModuleSum lhs{t, {}};
    for (const auto& [label, mult] : ts.terms) {
      PairModuleSum d = coproduct_restriction(t, label);
      for (const auto& [key, c] : d.terms) {
        lhs.add_term(key.first, key.second, c * mult);
      }
    }
    PairModuleSum rhs =
        tensor_pairs(coproduct_restriction(t, a), coproduct_restriction(t, b));
    if (lhs != rhs)
      return cat(algebra_name(t),
                 " restriction coproduct is not multiplicative at ", a, " ", b);
    return std::nullopt;
  };
  return run_indexed("res_multiplicative", items->size(), 1, fn);
}

PropertyResult check_res_structure(int max_n) {
  auto items = std::make_shared<std::vector<Item>>();
  for (int t = 0; t < 3; ++t) {
    for (int n = 0; n <= max_n; ++n) {
      int k = static_cast<int>(partitions_of(n).size());
      for (int i = 0; i < k; ++i) items->push_back({t, n, i, 0, 0, 0});
    }
  }
  CheckFn fn = [items](std::size_t at) -> std::optional<std::string> {
    const Item& it = (*items)[at];
    Algebra t = kAlgebras[it[0]];
    int n = it[1];
    const SetPartition& a = partitions_of(n)[it[2]];
    int splitting_cuts = 0;
    for (int k = 0; k <= n; ++k) {
      PairModuleSum res = restrict_simple(t, k, a);
      for (const auto& [key, mult] : res.terms) {
        if (mult != 1)
          return cat(algebra_name(t), " restriction multiplicity is not 1 at ",
                     a, " cut ", k);
        if (key.first.size() != k || key.second.size() != n - k)
          return cat(algebra_name(t), " restriction sizes wrong at ", a,
                     " cut ", k);
      }
      auto s = split(a, k);
      if (s) ++splitting_cuts;
      if (t == Algebra::join) {
        SetPartition walls =
            concat(SetPartition::one_block(k), SetPartition::one_block(n - k));
        auto halves = split(meet(a, walls), k);
        if (!halves) return cat("join restriction had a crossing block at ", a);
        if (res.terms.size() != 1 ||
            res.terms.begin()->first !=
                std::make_pair(halves->first, halves->second))
          return cat("join restriction of ", a, " at cut ", k, " wrong");
      } else {
        if (s) {
          if (res.terms.size() != 1 ||
              res.terms.begin()->first != std::make_pair(s->first, s->second))
            return cat(algebra_name(t), " restriction of ", a, " at cut ", k,
                       " should be the split halves");
        } else if (!res.terms.empty()) {
          return cat(algebra_name(t), " restriction of ", a, " at cut ", k,
                     " should vanish");
        }
      }
    }
    PairModuleSum full = coproduct_restriction(t, a);
    std::size_t expected =
        (t == Algebra::join) ? static_cast<std::size_t>(n) + 1
                             : static_cast<std::size_t>(splitting_cuts);
    if (full.terms.size() != expected)
      return cat(algebra_name(t), " coproduct of ", a, " has ",
                 full.terms.size(), " terms, expected ", expected);
    return std::nullopt;
  };
  return run_indexed("res_structure", items->size(), 1, fn);
}

// --- Frobenius --------------------------------------------------------------

PropertyResult check_frobenius_product(int max_total, unsigned jobs) {
  auto items = std::make_shared<std::vector<Item>>();
  for (int t = 0; t < 3; ++t) {
    for (int n = 0; n <= max_total; ++n) {
      for (int m = 0; n + m <= max_total; ++m) {
        int kn = static_cast<int>(partitions_of(n).size());
        int km = static_cast<int>(partitions_of(m).size());
        for (int i = 0; i < kn; ++i)
          for (int j = 0; j < km; ++j) items->push_back({t, n, i, m, j, 0});
      }
    }
  }
  CheckFn fn = [items](std::size_t at) -> std::optional<std::string> {
    const Item& it = (*items)[at];
    Algebra t = kAlgebras[it[0]];
    const SetPartition& a = partitions_of(it[1])[it[2]];
    const SetPartition& b = partitions_of(it[3])[it[4]];
    Basis target = frobenius_basis(t);
    ModuleSum ca{t, {}};
    ca.add_term(a, 1);
    ModuleSum cb{t, {}};
    cb.add_term(b, 1);
    NCSymElement lhs = frobenius(induct_simple(t, a, b));
    NCSymElement rhs = convert(multiply(convert(frobenius(ca), Basis::m),
                                        convert(frobenius(cb), Basis::m)),
                               target);
    if (lhs != rhs)
      return cat(algebra_name(t),
                 " Frobenius image of an induction differs from the product, ",
                 a, " ", b);
    return std::nullopt;
  };
  return run_indexed("product_intertwines", items->size(), jobs, fn);
}

PropertyResult check_frobenius_internal(int max_n, unsigned jobs) {
  auto items = std::make_shared<std::vector<Item>>();
  for (int t = 0; t < 3; ++t) {
    for (int n = 0; n <= max_n; ++n) {
      int k = static_cast<int>(partitions_of(n).size());
      for (int i = 0; i < k; ++i) items->push_back({t, n, i, 0, 0, 0});
    }
  }
  CheckFn fn = [items](std::size_t at) -> std::optional<std::string> {
    const Item& it = (*items)[at];
    Algebra t = kAlgebras[it[0]];
    const SetPartition& c = partitions_of(it[1])[it[2]];
    Basis target = frobenius_basis(t);
    ModuleSum cc{t, {}};
    cc.add_term(c, 1);
    TensorElement lhs = frobenius(coproduct_internal_classes(t, c));
    NCSymElement cm = convert(frobenius(cc), Basis::m);
    TensorElement rhs = convert(coproduct_internal(cm), target, target);
    if (lhs != rhs)
      return cat(algebra_name(t),
                 " Frobenius image of the class coproduct differs from the ",
                 "internal coproduct at ", c);
    return std::nullopt;
  };
  return run_indexed("internal_intertwines", items->size(), jobs, fn);
}

PropertyResult check_ind_res_witness(int max_total) {
  PropertyResult r;
  r.name = "ind_res_incompatible";
  for (int total = 2; total <= max_total; ++total) {
    for (int n = 1; n < total; ++n) {
      int m = total - n;
      for (const SetPartition& a : partitions_of(n)) {
        for (const SetPartition& b : partitions_of(m)) {
          PairModuleSum lhs =
              coproduct_restriction(Algebra::meet, concat(a, b));
          PairModuleSum da = coproduct_restriction(Algebra::meet, a);
          PairModuleSum db = coproduct_restriction(Algebra::meet, b);
          PairModuleSum rhs{Algebra::meet, {}};
          for (const auto& [ka, caf] : da.terms) {
            for (const auto& [kb, cbf] : db.terms) {
              ModuleSum l =
                  induct_simple(Algebra::meet, ka.first, kb.first);
              ModuleSum rr =
                  induct_simple(Algebra::meet, ka.second, kb.second);
              for (const auto& [ll, cl] : l.terms) {
                for (const auto& [rrr, cr] : rr.terms) {
                  rhs.add_term(ll, rrr, caf * cbf * cl * cr);
                }
              }
            }
          }
          if (lhs != rhs) {
            std::string detail;
            for (const auto& [key, c] : rhs.terms) {
              auto fi = lhs.terms.find(key);
              Int have = (fi == lhs.terms.end()) ? 0 : fi->second;
              if (have != c) {
                detail = cat(": multiplicity of V_", key.first, " (x) V_",
                             key.second, " is ", to_decimal(have),
                             " on the left, ", to_decimal(c), " on the right");
                break;
              }
            }
            r.pass = 1;
            r.note = cat("witness A=", a, " B=", b,
                         " in the meet tower: restricting Ind(V_A (x) V_B) "
                         "differs from the product of restrictions",
                         detail);
            return r;
          }
        }
      }
    }
  }
  r.fail = 1;
  r.counterexample =
      cat("restriction turned out multiplicative on every pair up to total "
          "degree ",
          max_total);
  return r;
}

// --- realization ------------------------------------------------------------

PropertyResult check_realization_roundtrip(int max_deg) {
  auto items = std::make_shared<std::vector<Item>>();
  for (int n = 0; n <= max_deg; ++n) {
    int k = static_cast<int>(partitions_of(n).size());
    for (int i = 0; i < k; ++i) items->push_back({n, i, 0, 0, 0, 0});
  }
  CheckFn fn = [items](std::size_t at) -> std::optional<std::string> {
    const Item& it = (*items)[at];
    int n = it[0];
    const SetPartition& a = partitions_of(n)[it[1]];
    TypeDecomposition td = type_decompose(expand_m(a, n + 1));
    if (!td.complete)
      return cat("decomposition with a spare variable flagged incomplete at ",
                 a);
    if (td.element != NCSymElement::basis_vector(Basis::m, a))
      return cat("expanding and re-reading m_", a, " did not round-trip");
    return std::nullopt;
  };
  return run_indexed("expand_roundtrip", items->size(), 1, fn);
}

PropertyResult check_realization_invariance(int max_deg) {
  auto items = std::make_shared<std::vector<Item>>();
  for (int n = 0; n <= max_deg; ++n) {
    int k = static_cast<int>(partitions_of(n).size());
    for (int i = 0; i < k; ++i) items->push_back({n, i, 0, 0, 0, 0});
  }
  CheckFn fn = [items](std::size_t at) -> std::optional<std::string> {
    const Item& it = (*items)[at];
    int n = it[0];
    const SetPartition& a = partitions_of(n)[it[1]];
    std::vector<int> alphabets = {std::max(n, 1)};
    if (n + 1 != alphabets[0]) alphabets.push_back(n + 1);
    for (int alphabet : alphabets) {
      NCPolynomial p = expand_m(a, alphabet);
      std::vector<int> sigma(alphabet);
      for (int i = 0; i < alphabet; ++i) sigma[i] = i + 1;
      do {
        if (permute(sigma, p) != p)
          return cat("m_", a, " over ", alphabet,
                     " variables is not permutation invariant");
      } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
    return std::nullopt;
  };
  return run_indexed("invariance", items->size(), 1, fn);
}

PropertyResult check_realization_product(int max_total, unsigned jobs) {
  auto items = std::make_shared<std::vector<Item>>();
  for (int n = 0; n <= max_total; ++n) {
    for (int m = 0; n + m <= max_total; ++m) {
      int kn = static_cast<int>(partitions_of(n).size());
      int km = static_cast<int>(partitions_of(m).size());
      for (int i = 0; i < kn; ++i)
        for (int j = 0; j < km; ++j) items->push_back({n, i, m, j, 0, 0});
    }
  }
  CheckFn fn = [items](std::size_t at) -> std::optional<std::string> {
    const Item& it = (*items)[at];
    const SetPartition& a = partitions_of(it[0])[it[1]];
    const SetPartition& b = partitions_of(it[2])[it[3]];
    int alphabet = it[0] + it[2];
    TypeDecomposition td =
        type_decompose(nc_multiply(expand_m(a, alphabet), expand_m(b, alphabet)));
    NCSymElement expected =
        multiply(NCSymElement::basis_vector(Basis::m, a),
                 NCSymElement::basis_vector(Basis::m, b));
    if (td.element != expected)
      return cat("word-level product of m_", a, " and m_", b,
                 " decomposes differently from the fiber product");
    return std::nullopt;
  };
  return run_indexed("product_model", items->size(), jobs, fn);
}

PropertyResult check_realization_xy(int max_deg, unsigned jobs) {
  auto items = std::make_shared<std::vector<Item>>();
  for (int n = 0; n <= max_deg; ++n) {
    int k = static_cast<int>(partitions_of(n).size());
    for (int i = 0; i < k; ++i) items->push_back({n, i, 0, 0, 0, 0});
  }
  CheckFn fn = [items](std::size_t at) -> std::optional<std::string> {
    const Item& it = (*items)[at];
    int n = it[0];
    const SetPartition& a = partitions_of(n)[it[1]];
    TensorElement lhs = expand_m_xy(a, n, n);
    TensorElement rhs =
        coproduct_internal(NCSymElement::basis_vector(Basis::m, a));
    if (lhs != rhs)
      return cat("two-alphabet expansion of m_", a,
                 " disagrees with the internal coproduct");
    return std::nullopt;
  };
  return run_indexed("xy_model", items->size(), jobs, fn);
}

PropertyResult check_realization_term_counts(int max_deg) {
  auto items = std::make_shared<std::vector<Item>>();
  for (int n = 0; n <= max_deg; ++n) {
    int k = static_cast<int>(partitions_of(n).size());
    for (int i = 0; i < k; ++i) items->push_back({n, i, 0, 0, 0, 0});
  }
  CheckFn fn = [items](std::size_t at) -> std::optional<std::string> {
    const Item& it = (*items)[at];
    const SetPartition& a = partitions_of(it[0])[it[1]];
    for (int alphabet = 0; alphabet <= 5; ++alphabet) {
      long long expected = falling_factorial(alphabet, a.length());
      NCPolynomial p = expand_m(a, alphabet);
      if (static_cast<long long>(p.terms().size()) != expected)
        return cat("m_", a, " over ", alphabet, " variables has ",
                   p.terms().size(), " monomials, expected ", expected);
      for (const auto& [w, c] : p.terms()) {
        if (c != 1) return cat("monomial coefficient not 1 in m_", a);
        if (static_cast<int>(w.size()) != a.size())
          return cat("monomial length wrong in m_", a);
      }
    }
    return std::nullopt;
  };
  return run_indexed("term_counts", items->size(), 1, fn);
}

// --- suites -----------------------------------------------------------------

namespace {

struct SuiteSpec {
  int preset;
  int cap;
};

const std::vector<std::pair<std::string, SuiteSpec>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteSpec>> table = {
      {"lattice", {5, 7}},     {"mobius", {7, 8}},
      {"bases", {5, 6}},       {"theoremA", {5, 6}},
      {"idempotents", {5, 6}}, {"modules", {4, 5}},
      {"frobenius", {4, 5}},   {"realization", {4, 5}},
      {"all", {4, 5}},
  };
  return table;
}

const SuiteSpec& find_suite(const std::string& name) {
  for (const auto& [n, spec] : suite_table()) {
    if (n == name) return spec;
  }
  throw UnknownSuiteError("no suite named '" + name + "'");
}

std::vector<PropertyResult> assemble(const std::string& suite, int n,
                                     unsigned jobs) {
  std::vector<PropertyResult> out;
  if (suite == "lattice") {
    out.push_back(check_lattice_axioms(n, jobs));
    out.push_back(check_lattice_associativity(std::min(n, 5), jobs));
    out.push_back(check_glb_lub(std::min(n, 5), jobs));
    out.push_back(check_concat_lattice_morphism(n, jobs));
    out.push_back(check_concat_monoid(n, jobs));
    out.push_back(check_split_inverse(n, jobs));
    out.push_back(check_bell_counts(std::min(n + 3, 10)));
    out.push_back(check_type_stability());
  } else if (suite == "mobius") {
    out.push_back(check_mobius_recursion_vs_product(n, jobs));
    out.push_back(check_mobius_inversion(std::min(n, 5), jobs));
    out.push_back(check_mobius_cache_transparent(std::min(n, 5)));
  } else if (suite == "bases") {
    out.push_back(check_convert_roundtrip(n));
    out.push_back(check_triangularity(n));
    out.push_back(check_character_matrix(n));
    out.push_back(check_p_product(n, jobs));
    out.push_back(check_p_internal(n, jobs));
    out.push_back(check_p_external_pipeline(std::min(n, 4)));
    out.push_back(check_coassoc_external(std::min(n, 4)));
    out.push_back(check_counit_laws(std::min(n, 4)));
    out.push_back(check_coassoc_internal(std::min(n, 4)));
    out.push_back(check_bialgebra_compat(std::min(n, 4)));
    out.push_back(check_duality_pairing(std::min(n, 4)));
    out.push_back(check_no_antipode());
  } else if (suite == "theoremA") {
    out.push_back(check_x_product(n, jobs));
    out.push_back(check_x_internal(n, jobs));
    out.push_back(check_x_external_coassoc(std::min(n, 4)));
  } else if (suite == "idempotents") {
    out.push_back(check_idempotent_orthogonality(n, jobs));
    out.push_back(check_idempotent_completeness(n));
    out.push_back(check_idempotent_concat(n, jobs));
    out.push_back(check_action_consistency(std::min(n, 5), jobs));
  } else if (suite == "modules") {
    out.push_back(check_module_tensor(n));
    out.push_back(check_module_restrict(n));
    out.push_back(check_module_induct(n));
    out.push_back(check_res_coproduct_tensor(std::min(n, 4)));
    out.push_back(check_res_structure(n));
  } else if (suite == "frobenius") {
    out.push_back(check_frobenius_product(n, jobs));
    out.push_back(check_frobenius_internal(n, jobs));
    out.push_back(check_ind_res_witness(std::min(n, 3)));
  } else if (suite == "realization") {
    out.push_back(check_realization_roundtrip(n));
    out.push_back(check_realization_invariance(std::min(n, 4)));
    out.push_back(check_realization_product(n, jobs));
    out.push_back(check_realization_xy(std::min(n, 4), jobs));
    out.push_back(check_realization_term_counts(n));
  } else if (suite == "all") {
    for (const auto& [name, spec] : suite_table()) {
      if (name == "all") continue;
      int bound = std::min(n, spec.cap);
      for (PropertyResult& p : assemble(name, bound, jobs)) {
        p.name = name + "." + p.name;
        out.push_back(std::move(p));
      }
    }
  }
  return out;
}

}  // namespace

bool SuiteReport::ok() const {
  for (const PropertyResult& p : properties) {
    if (!p.ok()) return false;
  }
  return true;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, spec] : suite_table()) names.push_back(name);
  return names;
}

int suite_default_bound(const std::string& suite) {
  return find_suite(suite).preset;
}

int suite_max_bound(const std::string& suite) { return find_suite(suite).cap; }

SuiteReport run_suite(const std::string& suite, int max_n, unsigned jobs) {
  const SuiteSpec& spec = find_suite(suite);
  int bound = (max_n < 0) ? spec.preset : max_n;
  if (bound > spec.cap) {
    throw BoundTooLargeError(cat("suite ", suite, " caps max-n at ", spec.cap,
                                 ", requested ", bound));
  }
  if (jobs == 0) jobs = 1;
  SuiteReport report;
  report.suite = suite;
  report.max_n = bound;
  auto t0 = std::chrono::steady_clock::now();
  report.properties = assemble(suite, bound, jobs);
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

std::string render_text(const SuiteReport& report, bool include_timing) {
  std::ostringstream os;
  os << "suite " << report.suite << "  max-n " << report.max_n << "\n";
  for (const PropertyResult& p : report.properties) {
    if (p.ok()) {
      os << "  ok    " << p.name << "  " << p.pass << " checks\n";
    } else {
      os << "  FAIL  " << p.name << "  " << p.pass << " passed, " << p.fail
         << " failed\n";
      os << "        first: " << p.counterexample << "\n";
    }
    if (!p.note.empty()) os << "        note: " << p.note << "\n";
  }
  os << "result " << (report.ok() ? "PASS" : "FAIL") << "\n";
  if (include_timing) {
    os << "time " << std::fixed << std::setprecision(3) << report.seconds
       << "s\n";
  }
  return os.str();
}

nlohmann::ordered_json render_json(const SuiteReport& report,
                                   bool include_timing) {
  nlohmann::ordered_json props = nlohmann::ordered_json::array();
  for (const PropertyResult& p : report.properties) {
    nlohmann::ordered_json entry;
    entry["name"] = p.name;
    entry["pass"] = p.pass;
    entry["fail"] = p.fail;
    if (!p.ok()) entry["counterexample"] = p.counterexample;
    if (!p.note.empty()) entry["note"] = p.note;
    props.push_back(std::move(entry));
  }
  nlohmann::ordered_json out;
  out["suite"] = report.suite;
  out["max_n"] = report.max_n;
  out["ok"] = report.ok();
  out["properties"] = std::move(props);
  if (include_timing) out["seconds"] = report.seconds;
  return out;
}

}  // namespace ncsym::verify
