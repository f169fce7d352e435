#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "bipgen/group.hpp"

namespace bipgen {

using SubgroupId = std::size_t;

struct Subgroup {
  SubgroupId id = 0;
  ElementSet carrier;
  std::size_t order = 0;
  PropertyFlags flags;
};

/// Every subgroup of a group, sorted by (order, ascending element list).
/// Id 0 is always the trivial subgroup and the last id is the whole group.
class Lattice {
 public:
  explicit Lattice(std::vector<Subgroup> subgroups);

  std::size_t size() const { return subgroups_.size(); }
  const Subgroup& operator[](SubgroupId id) const { return subgroups_[id]; }
  const std::vector<Subgroup>& subgroups() const { return subgroups_; }
  auto begin() const { return subgroups_.begin(); }
  auto end() const { return subgroups_.end(); }

  std::optional<SubgroupId> find(const ElementSet& carrier) const;

  SubgroupId trivial() const { return 0; }
  SubgroupId whole() const { return subgroups_.size() - 1; }

 private:
  std::vector<Subgroup> subgroups_;
  std::unordered_map<ElementSet, SubgroupId, ElementSetHash> index_;
};

struct FamilyCounts {
  std::size_t cyclic = 0;
  std::size_t abelian = 0;
  std::size_t nilpotent = 0;
  std::size_t solvable = 0;
  std::size_t total = 0;

  friend bool operator==(const FamilyCounts&, const FamilyCounts&) = default;
};

/// Closure-by-extension: start from {1} and every cyclic subgroup, extend each
/// known subgroup H by every x outside H until no new carrier appears.
Lattice enumerate_subgroups(const GroupTable& g, std::size_t cap = kDefaultOrderCap);

FamilyCounts family_counts(const Lattice& lat);

}  // namespace bipgen
