#include "ncsym/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "ncsym/errors.hpp"

namespace ncsym {

namespace {

// Canonical rgs strings compose: relabeling a canonical rgs through another
// canonical rgs stays canonical, so quotient lifts need no renumbering.
SetPartition lift_through(const SetPartition& quotient,
                          const SetPartition& base) {
  std::vector<int> rgs(base.size());
  for (int i = 0; i < base.size(); ++i)
    rgs[i] = quotient.rgs()[base.rgs()[i]];
  return SetPartition(std::move(rgs));
}

// Quotient of coarser by finer: the partition of finer's blocks induced by
// coarser's blocks. Assumes finer <= coarser.
SetPartition quotient_partition(const SetPartition& finer,
                                const SetPartition& coarser) {
  std::vector<int> block_image(finer.length(), -1);
  for (int i = 0; i < finer.size(); ++i)
    block_image[finer.rgs()[i]] = coarser.rgs()[i];
  return SetPartition::type_of(block_image);
}

Int mobius_of_profile(const IntervalProfile& profile);

Int compute_profile_value(const IntervalProfile& profile) {
  bool discrete = true;
  int m = 0;
  for (int b : profile) {
    m += b;
    if (b != 1) discrete = false;
  }
  if (discrete) return 1;
  // Canonical interval with this profile: singletons up to the partition of
  // {1..m} into consecutive blocks of the given sizes.
  std::vector<int> rgs;
  rgs.reserve(m);
  for (std::size_t j = 0; j < profile.size(); ++j)
    rgs.insert(rgs.end(), profile[j], static_cast<int>(j));
  SetPartition top(std::move(rgs));
  Int total = 0;
  for (const SetPartition& c : interval(SetPartition::singletons(m), top)) {
    if (c == top) continue;
    total += mobius_of_profile(shape(c));
  }
  return -total;
}

Int mobius_of_profile(const IntervalProfile& profile) {
  static std::mutex mutex;
  static std::map<IntervalProfile, Int> memo;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = memo.find(profile);
    if (it != memo.end()) return it->second;
  }
  Int value = compute_profile_value(profile);
  std::lock_guard<std::mutex> lock(mutex);
  return memo.emplace(profile, std::move(value)).first->second;
}

}  // namespace

IntervalProfile interval_profile(const SetPartition& finer,
                                 const SetPartition& coarser) {
  if (finer.size() != coarser.size())
    throw SizeMismatchError("interval needs equal ground sets");
  if (!refines(finer, coarser))
    throw NotComparableError("arguments are not nested");
  std::vector<int> counts(coarser.length(), 0);
  std::vector<bool> seen(finer.length(), false);
  for (int i = 0; i < finer.size(); ++i) {
    if (seen[finer.rgs()[i]]) continue;
    seen[finer.rgs()[i]] = true;
    ++counts[coarser.rgs()[i]];
  }
  std::sort(counts.begin(), counts.end(), std::greater<int>());
  return counts;
}

Int mobius(const SetPartition& finer, const SetPartition& coarser) {
  if (finer.size() != coarser.size())
    throw SizeMismatchError("mobius needs equal ground sets");
  if (!refines(finer, coarser)) return 0;
  return mobius_of_profile(interval_profile(finer, coarser));
}

Int mobius_product_form(const SetPartition& finer,
                        const SetPartition& coarser) {
  Int product = 1;
  for (int b : interval_profile(finer, coarser)) {
    Int factor = (b - 1) % 2 == 0 ? 1 : -1;
    for (int i = 2; i < b; ++i) factor *= i;
    product *= factor;
  }
  return product;
}

std::vector<SetPartition> interval(const SetPartition& finer,
                                   const SetPartition& coarser) {
  if (finer.size() != coarser.size())
    throw SizeMismatchError("interval needs equal ground sets");
  if (!refines(finer, coarser)) return {};
  int n = finer.size();
  std::vector<SetPartition> out;
  if (n <= 6) {
    for (const SetPartition& c : partitions_of(n))
      if (refines(finer, c) && refines(c, coarser)) out.push_back(c);
    return out;
  }
  SetPartition quotient = quotient_partition(finer, coarser);
  for (const SetPartition& q : refinements(quotient))
    out.push_back(lift_through(q, finer));
  std::sort(out.begin(), out.end(), std::greater<SetPartition>());
  return out;
}

std::vector<SetPartition> refinements(const SetPartition& a) {
  auto groups = a.blocks();
  std::vector<const std::vector<SetPartition>*> choices;
  choices.reserve(groups.size());
  for (const auto& g : groups)
    choices.push_back(&partitions_of(static_cast<int>(g.size())));
  std::vector<std::size_t> pick(groups.size(), 0);
  std::vector<SetPartition> out;
  for (;;) {
    std::vector<int> labels(a.size());
    int offset = 0;
    for (std::size_t j = 0; j < groups.size(); ++j) {
      const SetPartition& local = (*choices[j])[pick[j]];
      for (std::size_t p = 0; p < groups[j].size(); ++p)
        labels[groups[j][p] - 1] = offset + local.rgs()[p];
      offset += static_cast<int>(groups[j].size());
    }
    out.push_back(SetPartition::type_of(labels));
    std::size_t j = 0;
    while (j < pick.size() && ++pick[j] == choices[j]->size()) {
      pick[j] = 0;
      ++j;
    }
    if (j == pick.size()) break;
    if (groups.empty()) break;
  }
  return out;
}

std::vector<SetPartition> coarsenings(const SetPartition& a) {
  std::vector<SetPartition> out;
  for (const SetPartition& q : partitions_of(a.length()))
    out.push_back(lift_through(q, a));
  return out;
}

}  // namespace ncsym
