#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "bipgen/bigraph.hpp"
#include "bipgen/gen_graph.hpp"
#include "bipgen/group.hpp"
#include "bipgen/lattice.hpp"
#include "bipgen/prob.hpp"
#include "bipgen/topo.hpp"

namespace bipgen {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

class SizeRefusalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunOptions {
  std::size_t cap = kDefaultOrderCap;
  unsigned threads = 1;
  bool with_gen_graph = false;
};

/// Full pipeline output for one group.
struct Analysis {
  GroupTable group;
  Lattice lattice;
  DegreeMap degrees;
  StarForest forest;
  ParamReport params;
  ProbReport probs;
  IndexReport indices;
  std::optional<std::vector<GenGraphSummary>> gen_graph;
};

Analysis analyze(const std::string& spec, const RunOptions& opts = {});

/// Throws InconsistencyError if the stars do not sum to |G|^2 or the
/// per-subgroup probabilities do not sum to 1.
void check_consistency(const Analysis& a);

Json to_json(const Analysis& a);

/// Decimal rendering with 12 significant digits.
std::string format_real(double value);

struct VerificationCertificate {
  Family family;
  std::uint64_t prime = 0;
  std::string group_spec;
  std::size_t group_order = 0;
  StarForest expected;  // the family's headline closed form
  StarForest computed;  // brute force
  bool pass = false;    // expected == computed
  std::vector<std::string> matched_readings;
};

/// One certificate per prime in [p_min, p_max] for which the family's
/// closed form is defined. Unsupported primes are listed in `skipped`.
std::vector<VerificationCertificate> verify_family(Family family, std::uint64_t p_min,
                                                   std::uint64_t p_max, const RunOptions& opts,
                                                   std::vector<std::uint64_t>* skipped = nullptr);

Json to_json(const VerificationCertificate& c);

struct Table1Row {
  std::string name;
  std::string spec;
  std::size_t order = 0;
  FamilyCounts counts;
  std::uint64_t edges = 0;
  Rational pr_cyclic, pr_abelian, pr_nilpotent, pr_solvable, phi2;
};

inline constexpr const char* kTable1Header = "group,|G|,LC,LA,LN,LS,edges,pr_cyc,pr,pr_nil,pr_sol,phi2";

/// S3, D8, Q8, D10, D12, A4, S4 computed from scratch.
std::vector<Table1Row> compute_table1(const RunOptions& opts = {});
std::string table1_csv(const std::vector<Table1Row>& rows);

/// The reference values in the same CSV layout.
const std::string& table1_expected_csv();

enum class DotMode { kFull, kCollapsed };

inline constexpr std::uint64_t kDotFullPairLimit = 10000;

/// Full mode refuses (SizeRefusalError) when |G|^2 exceeds kDotFullPairLimit.
std::string to_dot(const Analysis& a, DotMode mode);

}  // namespace bipgen
