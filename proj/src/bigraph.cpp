#include "bipgen/bigraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>

namespace bipgen {

std::string_view to_string(RankBucket bucket) {
  switch (bucket) {
    case RankBucket::kTrivial:
      return "trivial";
    case RankBucket::kOneGenerated:
      return "one_generated";
    case RankBucket::kTwoGenerated:
      return "two_generated";
    case RankBucket::kNeedsThreePlus:
      return "needs_three_plus";
  }
  return "unknown";
}

std::uint64_t DegreeMap::edge_count() const {
  return std::accumulate(deg.begin(), deg.end(), std::uint64_t{0});
}

DegreeMap build_degree_map(const GroupTable& g, const Lattice& lat, unsigned threads) {
  const std::size_t n = g.order();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));

  // <a,b> = <b,a>, so only a <= b is generated and off-diagonal pairs count twice.
  const auto scan_rows = [&](std::size_t first_row, std::size_t stride,
                             std::vector<std::uint64_t>& counts) {
    std::vector<Element> gens;
    for (std::size_t a = first_row; a < n; a += stride) {
      for (std::size_t b = a; b < n; ++b) {
        gens.clear();
        if (a != 0) gens.push_back(static_cast<Element>(a));
        if (b != 0 && b != a) gens.push_back(static_cast<Element>(b));
        const ElementSet carrier = generate(g, std::span<const Element>(gens));
        const auto id = lat.find(carrier);
        if (!id) {
          throw InconsistencyError("subgroup generated by (" + g.label(static_cast<Element>(a)) +
                                   ", " + g.label(static_cast<Element>(b)) +
                                   ") is missing from the lattice");
        }
        counts[*id] += (a == b) ? 1 : 2;
      }
    }
  };

  std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(lat.size()));
  if (threads == 1) {
    scan_rows(0, 1, partial[0]);
  } else {
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        try {
          scan_rows(t, threads, partial[t]);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& w : workers) w.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  DegreeMap dm;
  dm.group_order = n;
  dm.deg.assign(lat.size(), 0);
  for (const auto& counts : partial)
    for (std::size_t i = 0; i < counts.size(); ++i) dm.deg[i] += counts[i];
  for (const Subgroup& s : lat) {
    dm.subgroup_order.push_back(s.order);
    if (dm.deg[s.id] > 0) dm.l2_ids.push_back(s.id);
  }

  if (dm.deg[lat.trivial()] != 1)
    throw InconsistencyError("trivial subgroup must have degree exactly one");
  if (dm.edge_count() != n * n)
    throw InconsistencyError("degree sum differs from |G|^2");

  if (n == 1) {
    dm.rank_bucket = RankBucket::kTrivial;
  } else if (lat[lat.whole()].flags.is_cyclic) {
    dm.rank_bucket = RankBucket::kOneGenerated;
  } else if (dm.deg[lat.whole()] > 0) {
    dm.rank_bucket = RankBucket::kTwoGenerated;
  } else {
    dm.rank_bucket = RankBucket::kNeedsThreePlus;
  }
  return dm;
}

std::uint64_t StarForest::leaf_total() const {
  return std::accumulate(stars.begin(), stars.end(), std::uint64_t{0});
}

StarForest make_star_forest(std::vector<std::uint64_t> stars) {
  StarForest f;
  std::sort(stars.begin(), stars.end());
  f.isolated_count = static_cast<std::size_t>(std::count(stars.begin(), stars.end(), 0u));
  f.stars = std::move(stars);
  return f;
}

StarForest star_forest(const DegreeMap& dm) { return make_star_forest(dm.deg); }

std::string describe(const StarForest& forest) {
  std::map<std::uint64_t, std::size_t> multiplicity;
  for (std::uint64_t d : forest.stars) ++multiplicity[d];
  std::string out;
  for (const auto& [leaves, count] : multiplicity) {
    if (!out.empty()) out += " + ";
    if (count > 1) out += std::to_string(count);
    if (leaves == 0) {
      out += "K1";
    } else if (leaves == 1) {
      out += "K2";
    } else {
      out += "K(1," + std::to_string(leaves) + ")";
    }
  }
  return out;
}

ParamReport compute_params(const DegreeMap& dm, const Lattice& lat) {
  const std::uint64_t n = dm.group_order;
  const std::uint64_t pairs = n * n;
  const std::uint64_t all = lat.size();
  const std::uint64_t l2 = dm.l2_ids.size();

  ParamReport r;
  // Maximum independent set: every pair vertex plus every isolated subgroup.
  r.independence_number = pairs + all - l2;
  r.matching_number = l2;
  r.vertex_cover_number = pairs + all - r.independence_number;
  r.domination_number = std::min(pairs + all - l2, all);
  r.irredundance_number = r.domination_number;
  r.clique_number = 2;
  r.bondage_number = 1;
  r.girth = 0;
  r.diameter = n == 1 ? Diameter::finite(1) : Diameter::infinite();
  r.all_subgroups_two_generated = (l2 == all);
  if (r.all_subgroups_two_generated) r.domatic_number = 2;

  if (dm.rank_bucket != RankBucket::kNeedsThreePlus) {
    r.two_generated_branches_agree =
        r.domination_number == all && r.vertex_cover_number == all && r.independence_number == pairs;
  }
  return r;
}

// Closed forms -------------------------------------------------------------

std::string_view to_string(Family family) {
  switch (family) {
    case Family::kD2p:
      return "D2p";
    case Family::kD2p2:
      return "D2p2";
    case Family::kQ4p:
      return "Q4p";
    case Family::kQ4p2:
      return "Q4p2";
    case Family::kZp:
      return "Zp";
    case Family::kZ2p:
      return "Z2p";
    case Family::kZp2:
      return "Zp2";
    case Family::kZ2p2:
      return "Z2p2";
    case Family::kNoncyclicP2:
      return "noncyclic_p2";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::kD2p, Family::kD2p2, Family::kQ4p, Family::kQ4p2, Family::kZp,
                   Family::kZ2p, Family::kZp2, Family::kZ2p2, Family::kNoncyclicP2}) {
    if (to_string(f) == name) return f;
  }
  throw UnsupportedFamilyError("unknown family '" + std::string(name) + "'");
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::string family_group_spec(Family family, std::uint64_t p) {
  const std::string sp = std::to_string(p);
  switch (family) {
    case Family::kD2p:
      return "D:" + std::to_string(2 * p);
    case Family::kD2p2:
      return "D:" + std::to_string(2 * p * p);
    case Family::kQ4p:
      return "Q:" + std::to_string(4 * p);
    case Family::kQ4p2:
      return "Q:" + std::to_string(4 * p * p);
    case Family::kZp:
      return "Z:" + sp;
    case Family::kZ2p:
      return "Z:" + std::to_string(2 * p);
    case Family::kZp2:
      return "Z:" + std::to_string(p * p);
    case Family::kZ2p2:
      return "Z:" + std::to_string(2 * p * p);
    case Family::kNoncyclicP2:
      return "X(Z:" + sp + ",Z:" + sp + ")";
  }
  return {};
}

namespace {

void repeat(std::vector<std::uint64_t>& out, std::uint64_t count, std::uint64_t leaves) {
  out.insert(out.end(), count, leaves);
}

}  // namespace

StarForest closed_form_forest(Family family, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  const std::uint64_t p2 = p * p, p3 = p2 * p, p4 = p2 * p2;
  std::vector<std::uint64_t> s{1};
  switch (family) {
    case Family::kZp:
      s.push_back(p2 - 1);
      break;
    case Family::kZ2p:
      // At p = 2 the subgroups <a^p> and <a^2> coincide.
      if (p == 2) throw UnsupportedFamilyError("Z2p needs an odd prime");
      s.insert(s.end(), {3, p2 - 1, 3 * p2 - 3});
      break;
    case Family::kZp2:
      s.insert(s.end(), {p2 - 1, p4 - p2});
      break;
    case Family::kZ2p2:
      if (p == 2) throw UnsupportedFamilyError("Z2p2 needs an odd prime");
      s.insert(s.end(), {3, p2 - 1, 3 * p2 - 3, p4 - p2, 3 * p4 - 3 * p2});
      break;
    case Family::kNoncyclicP2:
      repeat(s, p + 1, p2 - 1);
      s.push_back(p * (p - 1) * (p2 - 1));
      break;
    case Family::kD2p:
      repeat(s, p, 3);
      s.insert(s.end(), {p2 - 1, 3 * p * (p - 1)});
      break;
    case Family::kD2p2:
      repeat(s, p2, 3);
      s.insert(s.end(), {p2 - 1, p4 - p2});
      repeat(s, p, 3 * p * (p - 1));
      s.push_back(3 * p2 * (p2 - p));
      break;
    case Family::kQ4p:
      if (p == 2) {
        s.insert(s.end(), {3, 12, 12, 12, 24});
      } else {
        s.push_back(3);
        repeat(s, p, 12);
        s.insert(s.end(), {p2 - 1, 3 * p2 - 3, 12 * p2 - 12 * p});
      }
      break;
    case Family::kQ4p2:
      if (p == 2) {
        s.push_back(3);
        repeat(s, 5, 12);
        s.insert(s.end(), {24, 24, 48, 96});
      } else {
        s.push_back(3);
        repeat(s, p2, 12);
        s.insert(s.end(), {p2 - 1, 3 * p2 - 3, 3 * p4 - 3 * p2});
        repeat(s, p - 1, 12 * p2 - 12 * p);
        s.push_back(13 * p4 - 12 * p3 + 11 * p2 - 12 * p);
      }
      break;
  }
  return make_star_forest(std::move(s));
}

std::vector<NamedForest> alternate_readings(Family family, std::uint64_t p) {
  std::vector<NamedForest> out;
  if (!is_prime(p)) return out;
  const std::uint64_t p2 = p * p, p3 = p2 * p, p4 = p2 * p2;
  if (family == Family::kD2p && p == 2) {
    // The p = 2 case worked out by hand for D4: K2 + 3K(1,3) + K(1,6).
    out.push_back({"case_p2_text", make_star_forest({1, 3, 3, 3, 6})});
  }
  if (family == Family::kQ4p2 && p >= 3) {
    // Counting Q_{4p^2} subgroups directly: the cyclic subgroup of order p^2
    // contributes K(1,p^4-p^2) and there are p (not p-1) copies of Q_{4p};
    // the top star follows from the edge sum 16p^4.
    std::vector<std::uint64_t> s{1, 3};
    repeat(s, p2, 12);
    s.insert(s.end(), {p2 - 1, 3 * p2 - 3, p4 - p2, 3 * p4 - 3 * p2});
    repeat(s, p, 12 * p2 - 12 * p);
    s.push_back(12 * p4 - 12 * p3);
    out.push_back({"subgroup_count", make_star_forest(std::move(s))});
  }
  return out;
}

}  // namespace bipgen
