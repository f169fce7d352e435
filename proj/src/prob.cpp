#include "bipgen/prob.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>

namespace bipgen {

namespace {

Rational ratio(std::uint64_t num, std::uint64_t den) {
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace

Rational pr_subgroup(const DegreeMap& dm, SubgroupId h) {
  return ratio(dm.deg.at(h), dm.group_order * dm.group_order);
}

Rational phi2(const Subgroup& h, const DegreeMap& dm) {
  return ratio(dm.deg.at(h.id), h.order * h.order);
}

ProbReport aggregate(const DegreeMap& dm, const Lattice& lat) {
  ProbReport r;
  std::uint64_t cyclic = 0, abelian = 0, nilpotent = 0, solvable = 0;
  for (const Subgroup& s : lat) {
    r.per_subgroup.push_back(pr_subgroup(dm, s.id));
    const std::uint64_t d = dm.deg[s.id];
    if (s.flags.is_cyclic) cyclic += d;
    if (s.flags.is_abelian) abelian += d;
    if (s.flags.is_nilpotent) nilpotent += d;
    if (s.flags.is_solvable) solvable += d;
  }
  const std::uint64_t pairs = dm.group_order * dm.group_order;
  r.pr_cyclic = ratio(cyclic, pairs);
  r.pr_abelian = ratio(abelian, pairs);
  r.pr_nilpotent = ratio(nilpotent, pairs);
  r.pr_solvable = ratio(solvable, pairs);
  r.phi2_group = phi2(lat[lat.whole()], dm);
  return r;
}

Rational oracle_probability(const GroupTable& g, const PairPredicate& predicate,
                            unsigned threads) {
  const std::size_t n = g.order();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));

  const auto count_rows = [&](std::size_t first_row, std::size_t stride) {
    // Per-worker memo of verdicts by carrier; each distinct <a,b> is
    // classified once, from scratch.
    std::unordered_map<ElementSet, bool, ElementSetHash> verdicts;
    const auto holds = [&](const ElementSet& carrier) {
      if (const auto* eq = std::get_if<EqualsSubgroup>(&predicate)) return carrier == eq->carrier;
      const auto it = verdicts.find(carrier);
      if (it != verdicts.end()) return it->second;
      const PropertyFlags f = classify(g, carrier);
      bool v = false;
      switch (std::get<PairProperty>(predicate)) {
        case PairProperty::kAbelian:
          v = f.is_abelian;
          break;
        case PairProperty::kCyclic:
          v = f.is_cyclic;
          break;
        case PairProperty::kNilpotent:
          v = f.is_nilpotent;
          break;
        case PairProperty::kSolvable:
          v = f.is_solvable;
          break;
      }
      verdicts.emplace(carrier, v);
      return v;
    };
    std::uint64_t hits = 0;
    for (std::size_t a = first_row; a < n; a += stride) {
      for (std::size_t b = 0; b < n; ++b) {
        const Element gens[] = {static_cast<Element>(a), static_cast<Element>(b)};
        if (holds(generate(g, std::span<const Element>(gens)))) ++hits;
      }
    }
    return hits;
  };

  std::vector<std::uint64_t> hits(threads, 0);
  if (threads == 1) {
    hits[0] = count_rows(0, 1);
  } else {
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        try {
          hits[t] = count_rows(t, threads);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& w : workers) w.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  std::uint64_t total = 0;
  for (std::uint64_t h : hits) total += h;
  return ratio(total, n * n);
}

}  // namespace bipgen
