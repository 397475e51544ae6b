#include "ncsym/set_partition.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "ncsym/errors.hpp"

namespace ncsym {

namespace {

// Union-find with path halving; used only by join().
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

// Renumbers arbitrary labels by first appearance, yielding a canonical rgs.
SetPartition canonicalize(const std::vector<int>& labels, int label_bound) {
  std::vector<int> remap(label_bound, -1);
  std::vector<int> rgs(labels.size());
  int next = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    int& r = remap[labels[i]];
    if (r < 0) r = next++;
    rgs[i] = r;
  }
  return SetPartition(std::move(rgs));
}

}  // namespace

SetPartition::SetPartition(std::vector<int> rgs) : rgs_(std::move(rgs)) {
  int max_seen = -1;
  for (int r : rgs_) {
    if (r < 0 || r > max_seen + 1)
      throw RangeError("not a restricted growth string");
    max_seen = std::max(max_seen, r);
  }
  length_ = max_seen + 1;
}

SetPartition SetPartition::singletons(int n) {
  if (n < 0) throw RangeError("negative ground set size");
  std::vector<int> rgs(n);
  std::iota(rgs.begin(), rgs.end(), 0);
  return SetPartition(std::move(rgs));
}

SetPartition SetPartition::one_block(int n) {
  if (n < 0) throw RangeError("negative ground set size");
  return SetPartition(std::vector<int>(n, 0));
}

SetPartition SetPartition::from_blocks(
    const std::vector<std::vector<int>>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  std::vector<int> owner(n, -1);  // element-1 -> input block index
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    for (int e : blocks[j]) {
      if (e < 1) throw GapError("element " + std::to_string(e) +
                                " is not a positive integer");
      if (static_cast<std::size_t>(e) > n)
        throw GapError("element " + std::to_string(e) + " exceeds ground set");
      if (owner[e - 1] >= 0)
        throw OverlapError("element " + std::to_string(e) +
                           " appears in two blocks");
      owner[e - 1] = static_cast<int>(j);
    }
  }
  // Coverage: n elements placed into n slots with no overlap means no gap.
  return canonicalize(owner, static_cast<int>(blocks.size()));
}

SetPartition SetPartition::standardized(
    const std::vector<std::vector<int>>& sets) {
  std::vector<int> values;
  for (const auto& s : sets) {
    for (int v : s) {
      if (v < 1) throw GapError("set element must be a positive integer");
      values.push_back(v);
    }
  }
  std::sort(values.begin(), values.end());
  if (std::adjacent_find(values.begin(), values.end()) != values.end())
    throw OverlapError("sets are not disjoint");
  std::vector<std::vector<int>> relabeled(sets.size());
  for (std::size_t j = 0; j < sets.size(); ++j) {
    for (int v : sets[j]) {
      auto it = std::lower_bound(values.begin(), values.end(), v);
      relabeled[j].push_back(static_cast<int>(it - values.begin()) + 1);
    }
  }
  return from_blocks(relabeled);
}

SetPartition SetPartition::type_of(const std::vector<int>& values) {
  std::map<int, int> remap;
  std::vector<int> rgs(values.size());
  int next = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    auto [it, fresh] = remap.emplace(values[i], next);
    if (fresh) ++next;
    rgs[i] = it->second;
  }
  return SetPartition(std::move(rgs));
}

int SetPartition::block_of(int element) const {
  if (element < 1 || element > size())
    throw RangeError("element " + std::to_string(element) +
                     " outside ground set");
  return rgs_[element - 1];
}

std::vector<std::vector<int>> SetPartition::blocks() const {
  std::vector<std::vector<int>> out(length_);
  for (int i = 0; i < size(); ++i) out[rgs_[i]].push_back(i + 1);
  return out;
}

std::strong_ordering SetPartition::operator<=>(
    const SetPartition& other) const {
  if (auto c = size() <=> other.size(); c != 0) return c;
  return rgs_ <=> other.rgs_;
}

bool refines(const SetPartition& a, const SetPartition& b) {
  if (a.size() != b.size())
    throw SizeMismatchError("refinement needs equal ground sets");
  std::vector<int> image(a.length(), -1);
  for (int i = 0; i < a.size(); ++i) {
    int& img = image[a.rgs()[i]];
    if (img < 0)
      img = b.rgs()[i];
    else if (img != b.rgs()[i])
      return false;
  }
  return true;
}

SetPartition meet(const SetPartition& a, const SetPartition& b) {
  if (a.size() != b.size())
    throw SizeMismatchError("meet needs equal ground sets");
  std::vector<int> keys(a.size());
  for (int i = 0; i < a.size(); ++i)
    keys[i] = a.rgs()[i] * b.length() + b.rgs()[i];
  return canonicalize(keys, std::max(1, a.length() * b.length()));
}

SetPartition join(const SetPartition& a, const SetPartition& b) {
  if (a.size() != b.size())
    throw SizeMismatchError("join needs equal ground sets");
  int n = a.size();
  UnionFind uf(n);
  for (const SetPartition* p : {&a, &b}) {
    std::vector<int> first(p->length(), -1);
    for (int i = 0; i < n; ++i) {
      int& f = first[p->rgs()[i]];
      if (f < 0)
        f = i;
      else
        uf.unite(f, i);
    }
  }
  std::vector<int> roots(n);
  for (int i = 0; i < n; ++i) roots[i] = uf.find(i);
  return canonicalize(roots, n == 0 ? 1 : n);
}

SetPartition concat(const SetPartition& a, const SetPartition& b) {
  std::vector<int> rgs = a.rgs();
  rgs.reserve(a.size() + b.size());
  for (int r : b.rgs()) rgs.push_back(r + a.length());
  return SetPartition(std::move(rgs));
}

std::optional<std::pair<SetPartition, SetPartition>> split(
    const SetPartition& a, int k) {
  if (k < 0 || k > a.size()) throw RangeError("cut position outside {0..n}");
  // Canonical numbering puts the blocks met in the prefix first, so the
  // prefix uses ids 0..p-1; a suffix id below p marks a crossing block.
  int p = 0;
  for (int i = 0; i < k; ++i) p = std::max(p, a.rgs()[i] + 1);
  std::vector<int> left(a.rgs().begin(), a.rgs().begin() + k);
  std::vector<int> right;
  right.reserve(a.size() - k);
  for (int i = k; i < a.size(); ++i) {
    if (a.rgs()[i] < p) return std::nullopt;
    right.push_back(a.rgs()[i] - p);
  }
  return std::make_pair(SetPartition(std::move(left)),
                        SetPartition(std::move(right)));
}

SetPartition restrict_blocks(const SetPartition& a,
                             const std::vector<int>& block_indices) {
  std::vector<bool> chosen(a.length(), false);
  for (int j : block_indices) {
    if (j < 1 || j > a.length())
      throw IndexError("block index " + std::to_string(j) + " out of range");
    if (chosen[j - 1])
      throw IndexError("block index " + std::to_string(j) + " repeated");
    chosen[j - 1] = true;
  }
  std::vector<std::vector<int>> kept;
  auto bl = a.blocks();
  for (int j = 0; j < a.length(); ++j)
    if (chosen[j]) kept.push_back(bl[j]);
  return SetPartition::standardized(kept);
}

std::vector<int> shape(const SetPartition& a) {
  std::vector<int> sizes(a.length(), 0);
  for (int r : a.rgs()) ++sizes[r];
  std::sort(sizes.begin(), sizes.end(), std::greater<int>());
  return sizes;
}

SetPartition parse_partition(const std::string& text) {
  if (text == "e") return SetPartition();
  if (text.empty()) throw SyntaxError("empty partition text");
  std::vector<std::vector<int>> blocks(1);
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == start)
      throw SyntaxError("expected digit at position " + std::to_string(start));
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(text.data() + start, text.data() + i, value);
    if (ec != std::errc() || ptr != text.data() + i)
      throw SyntaxError("bad integer at position " + std::to_string(start));
    blocks.back().push_back(value);
    if (i == text.size()) break;
    if (text[i] == ',') {
      ++i;
    } else if (text[i] == '|') {
      blocks.emplace_back();
      ++i;
    } else {
      throw SyntaxError(std::string("unexpected character '") + text[i] +
                        "' at position " + std::to_string(i));
    }
    if (i == text.size()) throw SyntaxError("trailing separator");
  }
  return SetPartition::from_blocks(blocks);
}

std::string format_partition(const SetPartition& a) {
  if (a.size() == 0) return "e";
  std::ostringstream out;
  auto bl = a.blocks();
  for (std::size_t j = 0; j < bl.size(); ++j) {
    if (j) out << '|';
    for (std::size_t i = 0; i < bl[j].size(); ++i) {
      if (i) out << ',';
      out << bl[j][i];
    }
  }
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const SetPartition& a) {
  return os << format_partition(a);
}

const std::vector<SetPartition>& partitions_of(int n) {
  if (n < 0) throw RangeError("negative ground set size");
  if (n > 12) throw RangeError("enumeration capped at n = 12");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<std::vector<SetPartition>>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    auto list = std::make_unique<std::vector<SetPartition>>();
    // Walk rgs strings in ascending lex order, then reverse so the
    // all-singletons partition comes first.
    std::vector<int> rgs(n, 0);
    for (;;) {
      list->push_back(SetPartition(rgs));
      int i = n - 1;
      // rgs[i] may grow to 1 + max of the prefix.
      while (i > 0) {
        int prefix_max = *std::max_element(rgs.begin(), rgs.begin() + i);
        if (rgs[i] <= prefix_max) break;
        --i;
      }
      if (i <= 0) break;
      ++rgs[i];
      std::fill(rgs.begin() + i + 1, rgs.end(), 0);
    }
    std::reverse(list->begin(), list->end());
    slot = std::move(list);
  }
  return *slot;
}

Int bell(int n) {
  if (n < 0) throw RangeError("negative ground set size");
  std::vector<Int> b{1};
  for (int m = 1; m <= n; ++m) {
    // b_m = sum over i of C(m-1, i) * b_i
    Int total = 0;
    Int binom = 1;
    for (int i = 0; i < m; ++i) {
      total += binom * b[i];
      binom = binom * (m - 1 - i) / (i + 1);
    }
    b.push_back(total);
  }
  return b[n];
}

}  // namespace ncsym
