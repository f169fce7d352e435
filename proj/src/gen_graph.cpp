#include "bipgen/gen_graph.hpp"

namespace bipgen {

std::uint64_t totient(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

GenGraphSummary gen_graph_edges(const GroupTable& g, const Subgroup& h) {
  GenGraphSummary s;
  s.subgroup_id = h.id;
  const std::vector<Element> elems = h.carrier.elements();
  std::uint64_t off_diagonal = 0;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const Element one[] = {elems[i]};
    if (generate(g, std::span<const Element>(one)) == h.carrier) ++s.diagonal_generators;
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      const Element two[] = {elems[i], elems[j]};
      if (generate(g, std::span<const Element>(two)) == h.carrier) ++off_diagonal;
    }
  }
  s.edge_count = off_diagonal;
  return s;
}

}  // namespace bipgen
