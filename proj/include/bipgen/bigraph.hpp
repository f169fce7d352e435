#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bipgen/group.hpp"
#include "bipgen/lattice.hpp"

namespace bipgen {

class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class RankBucket { kTrivial, kOneGenerated, kTwoGenerated, kNeedsThreePlus };

std::string_view to_string(RankBucket bucket);

/// B(G) up to the identity of its pair vertices: every pair has degree one,
/// so the per-subgroup degrees determine the whole graph.
struct DegreeMap {
  std::size_t group_order = 0;
  std::vector<std::uint64_t> deg;            // indexed by SubgroupId
  std::vector<std::size_t> subgroup_order;   // |H|, indexed by SubgroupId
  std::vector<SubgroupId> l2_ids;            // ids with deg > 0, ascending
  RankBucket rank_bucket = RankBucket::kTrivial;

  std::uint64_t edge_count() const;
};

/// Counts, for every subgroup H, the ordered pairs (a,b) with <a,b> = H.
/// The pair space is split by rows across `threads` workers.
DegreeMap build_degree_map(const GroupTable& g, const Lattice& lat, unsigned threads = 1);

/// Leaf counts of the |L(G)| stars making up B(G), ascending.
struct StarForest {
  std::vector<std::uint64_t> stars;
  std::size_t isolated_count = 0;

  std::uint64_t leaf_total() const;
  friend bool operator==(const StarForest&, const StarForest&) = default;
};

StarForest star_forest(const DegreeMap& dm);
StarForest make_star_forest(std::vector<std::uint64_t> stars);

/// "K2 + 3K(1,3) + K(1,8)" style rendering.
std::string describe(const StarForest& forest);

class Diameter {
 public:
  static Diameter finite(std::uint64_t value) { return Diameter(value); }
  static Diameter infinite() { return Diameter(); }
  bool is_infinite() const { return !value_.has_value(); }
  std::uint64_t value() const { return value_.value(); }
  friend bool operator==(const Diameter&, const Diameter&) = default;

 private:
  Diameter() = default;
  explicit Diameter(std::uint64_t v) : value_(v) {}
  std::optional<std::uint64_t> value_;
};

struct ParamReport {
  std::uint64_t independence_number = 0;
  std::uint64_t domination_number = 0;
  std::uint64_t matching_number = 0;
  std::uint64_t clique_number = 0;
  std::uint64_t vertex_cover_number = 0;
  std::uint64_t irredundance_number = 0;
  std::uint64_t bondage_number = 0;
  std::uint64_t girth = 0;  // 0 means acyclic
  Diameter diameter = Diameter::infinite();
  std::optional<std::uint64_t> domatic_number;  // absent when no domatic partition exists

  // L(G) = L2(G): every subgroup is generated by at most two elements.
  bool all_subgroups_two_generated = true;
  // The two-generated closed forms (domination = |L|, vertex cover = |L|)
  // agree with the general min-form; false flags a discrepancy.
  bool two_generated_branches_agree = true;
};

ParamReport compute_params(const DegreeMap& dm, const Lattice& lat);

enum class Family { kD2p, kD2p2, kQ4p, kQ4p2, kZp, kZ2p, kZp2, kZ2p2, kNoncyclicP2 };

std::string_view to_string(Family family);
Family parse_family(std::string_view name);

/// Group spec realizing the family at prime p, e.g. (kQ4p2, 3) -> "Q:36".
std::string family_group_spec(Family family, std::uint64_t p);

bool is_prime(std::uint64_t n);

/// The star multiset prescribed by the family's closed form at prime p.
/// Throws std::invalid_argument for a non-prime and UnsupportedFamilyError
/// for a (family, p) combination the formula does not cover.
StarForest closed_form_forest(Family family, std::uint64_t p);

/// Alternative closed-form readings for (family, p) besides the headline
/// formula, each with a short name. Empty when there are none.
struct NamedForest {
  std::string reading;
  StarForest forest;
};
std::vector<NamedForest> alternate_readings(Family family, std::uint64_t p);

}  // namespace bipgen
