#include "bipgen/lattice.hpp"

#include <algorithm>
#include <string>

namespace bipgen {

Lattice::Lattice(std::vector<Subgroup> subgroups) : subgroups_(std::move(subgroups)) {
  std::sort(subgroups_.begin(), subgroups_.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.carrier.lex_less(b.carrier);
  });
  for (SubgroupId id = 0; id < subgroups_.size(); ++id) {
    subgroups_[id].id = id;
    if (!index_.emplace(subgroups_[id].carrier, id).second)
      throw std::logic_error("duplicate subgroup carrier in lattice");
  }
}

std::optional<SubgroupId> Lattice::find(const ElementSet& carrier) const {
  const auto it = index_.find(carrier);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Lattice enumerate_subgroups(const GroupTable& g, std::size_t cap) {
  if (g.order() > cap) {
    throw CapExceededError("group of order " + std::to_string(g.order()) + " exceeds cap " +
                           std::to_string(cap));
  }
  struct Found {
    ElementSet carrier;
    std::vector<Element> gens;
  };
  std::vector<Found> found;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;

  const auto add = [&](ElementSet carrier, std::vector<Element> gens) {
    if (seen.contains(carrier)) return;
    seen.emplace(carrier, found.size());
    found.push_back({std::move(carrier), std::move(gens)});
  };

  add(generate(g, std::span<const Element>{}), {});
  for (Element x = 1; x < g.order(); ++x) {
    const Element gen[] = {x};
    add(generate(g, std::span<const Element>(gen)), {x});
  }

  // found grows while we walk it; indices stay valid, references do not.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Element x = 1; x < g.order(); ++x) {
      if (found[i].carrier.contains(x)) continue;
      ElementSet next = extend(g, found[i].carrier, found[i].gens, x);
      if (seen.contains(next)) continue;
      std::vector<Element> gens = found[i].gens;
      gens.push_back(x);
      add(std::move(next), std::move(gens));
    }
  }

  std::vector<Subgroup> subgroups;
  subgroups.reserve(found.size());
  for (Found& f : found) {
    Subgroup s;
    s.order = f.carrier.count();
    s.flags = classify(g, f.carrier);
    s.carrier = std::move(f.carrier);
    subgroups.push_back(std::move(s));
  }
  return Lattice(std::move(subgroups));
}

FamilyCounts family_counts(const Lattice& lat) {
  FamilyCounts c;
  for (const Subgroup& s : lat) {
    c.cyclic += s.flags.is_cyclic;
    c.abelian += s.flags.is_abelian;
    c.nilpotent += s.flags.is_nilpotent;
    c.solvable += s.flags.is_solvable;
  }
  c.total = lat.size();
  return c;
}

}  // namespace bipgen
