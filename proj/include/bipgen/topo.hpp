#pragma once

#include <cstdint>

#include "bipgen/bigraph.hpp"

namespace bipgen {

/// Degree-based topological indices of B(G). The Zagreb indices are exact.
struct IndexReport {
  std::uint64_t m1 = 0;
  std::uint64_t m2 = 0;
  double randic = 0;
  double abc = 0;
  double ga = 0;
  double harmonic = 0;
  double sci = 0;
};

/// Evaluates the closed forms in |H| and phi_2(H) for each subgroup.
IndexReport indices_closed_form(const DegreeMap& dm);

/// Walks every vertex and every edge (a pair vertex of degree 1 joined to a
/// subgroup vertex of degree d) and applies the generic index definitions.
IndexReport indices_direct(const DegreeMap& dm);

}  // namespace bipgen
