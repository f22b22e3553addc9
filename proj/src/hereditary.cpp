#include "ultraforest/hereditary.hpp"

#include "ultraforest/error.hpp"
#include "ultraforest/gen.hpp"
#include "ultraforest/parallel.hpp"

#include <deque>
#include <unordered_set>

namespace ultraforest {

namespace {

constexpr std::size_t kDeletionSearchMax = 20;
constexpr std::size_t kFullEnumerationMax = 8;

PointSet subset_ids(const Space& space, std::uint64_t mask) {
  PointSet out;
  for (std::size_t i = 0; i < space.size(); ++i)
    if (mask >> i & 1u) out.push_back(space.point(i));
  return make_point_set(std::move(out));
}

bool member(const Space& space, ClassId id) { return in_class(space, id); }

// The first one-point deletion (with >= 2 points) that leaves the class.
std::optional<PointSet> failing_deletion(const Space& space, ClassId id) {
  if (space.size() < 3) return std::nullopt;
  for (const auto& sub : one_point_deletions(space))
    if (!member(sub, id)) return sub.points();
  return std::nullopt;
}

}  // namespace

std::vector<Space> one_point_deletions(const Space& space) {
  if (space.size() < 2) throw Error(Errc::SingletonSpace, "a one-point space has no proper nonempty subspace");
  std::vector<Space> out;
  for (std::size_t skip = 0; skip < space.size(); ++skip) {
    std::vector<PointId> keep;
    for (std::size_t i = 0; i < space.size(); ++i)
      if (i != skip) keep.push_back(space.point(i));
    out.push_back(restrict(space, keep));
  }
  return out;
}

HereditaryInstance is_hereditary_instance(const Space& space, ClassId id, bool full_enumeration) {
  if (space.size() < 2) throw Error(Errc::SingletonSpace, "hereditary checks need at least two points");
  const std::size_t limit = full_enumeration ? kFullEnumerationMax : kDeletionSearchMax;
  if (space.size() > limit)
    throw Error(Errc::TooLarge, "subspace search is limited to " + std::to_string(limit) + " points");
  if (!member(space, id))
    throw Error(Errc::NotInClass, "the space is not in class " + std::string(class_name(id)));

  const std::size_t n = space.size();
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  auto check = [&](std::uint64_t mask) { return member(restrict(space, subset_ids(space, mask)), id); };

  if (full_enumeration) {
    // Larger subsets first so the witness sits just below a member.
    for (std::size_t size = n - 1; size >= 2; --size)
      for (std::uint64_t mask = 1; mask < all; ++mask)
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) == size && !check(mask))
          return {false, subset_ids(space, mask)};
    return {};
  }

  std::deque<std::uint64_t> queue{all};
  std::unordered_set<std::uint64_t> seen{all};
  while (!queue.empty()) {
    const std::uint64_t mask = queue.front();
    queue.pop_front();
    if (__builtin_popcountll(mask) <= 2) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask >> i & 1u)) continue;
      const std::uint64_t sub = mask & ~(std::uint64_t{1} << i);
      if (!seen.insert(sub).second) continue;
      if (!check(sub)) return {false, subset_ids(space, sub)};
      queue.push_back(sub);
    }
  }
  return {};
}

std::optional<Counterexample> hereditary_counterexample_search(ClassId id, std::size_t max_n, std::size_t budget) {
  std::size_t examined = 0;
  for (std::size_t n = 2; n <= max_n; ++n) {
    const auto spaces = enumerate_spaces(n);
    for (const auto& space : spaces) {
      if (budget != 0 && examined == budget)
        throw Error(Errc::BudgetExhausted, "examined " + std::to_string(budget) + " spaces without a counterexample");
      ++examined;
      if (!member(space, id)) continue;
      if (auto bad = failing_deletion(space, id)) return Counterexample{space, *bad};
    }
  }
  return std::nullopt;
}

VerifyResult hereditary_verify(ClassId id, std::size_t max_n) {
  VerifyResult result;
  for (std::size_t n = 2; n <= max_n && result.holds; ++n) {
    const auto spaces = enumerate_spaces(n);
    std::vector<char> is_member(spaces.size(), 0);
    std::vector<std::optional<PointSet>> bad(spaces.size());
    parallel_for(spaces.size(), [&](std::size_t i) {
      if (!member(spaces[i], id)) return;
      is_member[i] = 1;
      bad[i] = failing_deletion(spaces[i], id);
    });
    for (std::size_t i = 0; i < spaces.size(); ++i) {
      result.members += is_member[i];
      if (bad[i] && result.holds) {
        result.holds = false;
        result.counterexample = Counterexample{spaces[i], *bad[i]};
      }
    }
  }
  return result;
}

}  // namespace ultraforest
