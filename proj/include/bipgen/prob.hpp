#pragma once

#include <variant>
#include <vector>

#include "bipgen/bigraph.hpp"
#include "bipgen/group.hpp"
#include "bipgen/lattice.hpp"
#include "bipgen/rational.hpp"

namespace bipgen {

struct ProbReport {
  std::vector<Rational> per_subgroup;  // Pr_H(G), indexed by SubgroupId
  Rational phi2_group;
  Rational pr_abelian;
  Rational pr_cyclic;
  Rational pr_nilpotent;
  Rational pr_solvable;
};

/// Probability that a uniform ordered pair generates exactly H.
Rational pr_subgroup(const DegreeMap& dm, SubgroupId h);

/// Probability that a uniform pair from H generates H, read off the degree
/// of H in any enclosing B(G).
Rational phi2(const Subgroup& h, const DegreeMap& dm);

ProbReport aggregate(const DegreeMap& dm, const Lattice& lat);

enum class PairProperty { kAbelian, kCyclic, kNilpotent, kSolvable };

struct EqualsSubgroup {
  ElementSet carrier;
};

using PairPredicate = std::variant<PairProperty, EqualsSubgroup>;

/// Lattice-free reference: scans all |G|^2 pairs, generates <a,b> and
/// classifies it from scratch.
Rational oracle_probability(const GroupTable& g, const PairPredicate& predicate,
                            unsigned threads = 1);

}  // namespace bipgen
