#pragma once

#include <cstdint>

#include "bipgen/group.hpp"
#include "bipgen/lattice.hpp"

namespace bipgen {

/// Edge count of the generating graph of H, plus the number of single
/// elements generating H.
struct GenGraphSummary {
  SubgroupId subgroup_id = 0;
  std::uint64_t edge_count = 0;
  std::uint64_t diagonal_generators = 0;

  /// 2e + diagonal; equals the degree of H in B(G).
  std::uint64_t pair_count() const { return 2 * edge_count + diagonal_generators; }
};

std::uint64_t totient(std::uint64_t n);

GenGraphSummary gen_graph_edges(const GroupTable& g, const Subgroup& h);

}  // namespace bipgen
