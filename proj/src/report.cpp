#include "bipgen/report.hpp"

#include <cstdio>
#include <sstream>

namespace bipgen {

Analysis analyze(const std::string& spec, const RunOptions& opts) {
  GroupTable g = make_group(spec, opts.cap);
  Lattice lat = enumerate_subgroups(g, opts.cap);
  DegreeMap dm = build_degree_map(g, lat, opts.threads);
  StarForest forest = star_forest(dm);
  ParamReport params = compute_params(dm, lat);
  ProbReport probs = aggregate(dm, lat);
  IndexReport indices = indices_closed_form(dm);
  std::optional<std::vector<GenGraphSummary>> gen;
  if (opts.with_gen_graph) {
    gen.emplace();
    for (const Subgroup& s : lat) gen->push_back(gen_graph_edges(g, s));
  }
  Analysis a{std::move(g),      std::move(lat),   std::move(dm),      std::move(forest),
             std::move(params), std::move(probs), std::move(indices), std::move(gen)};
  check_consistency(a);
  return a;
}

void check_consistency(const Analysis& a) {
  const std::uint64_t n = a.group.order();
  if (a.forest.leaf_total() != n * n)
    throw InconsistencyError("star leaf counts do not sum to |G|^2");
  if (a.forest.stars.size() != a.lattice.size())
    throw InconsistencyError("star count differs from |L(G)|");
  Rational total(0);
  for (const Rational& r : a.probs.per_subgroup) total += r;
  if (total != 1) throw InconsistencyError("subgroup probabilities do not sum to 1");
  if (a.params.independence_number + a.params.vertex_cover_number != n * n + a.lattice.size())
    throw InconsistencyError("independence + vertex cover differs from |V(B(G))|");
  if (a.gen_graph) {
    for (const GenGraphSummary& s : *a.gen_graph) {
      if (s.pair_count() != a.degrees.deg[s.subgroup_id])
        throw InconsistencyError("generating-graph count disagrees with degree of H" +
                                 std::to_string(s.subgroup_id));
    }
  }
}

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

namespace {

Json flags_json(const PropertyFlags& f) {
  return Json{{"cyclic", f.is_cyclic},
              {"abelian", f.is_abelian},
              {"nilpotent", f.is_nilpotent},
              {"solvable", f.is_solvable}};
}

Json params_json(const ParamReport& p) {
  Json j;
  j["independence_number"] = p.independence_number;
  j["domination_number"] = p.domination_number;
  j["matching_number"] = p.matching_number;
  j["clique_number"] = p.clique_number;
  j["vertex_cover_number"] = p.vertex_cover_number;
  j["irredundance_number"] = p.irredundance_number;
  j["bondage_number"] = p.bondage_number;
  j["girth"] = p.girth;
  if (p.diameter.is_infinite()) {
    j["diameter"] = "inf";
  } else {
    j["diameter"] = p.diameter.value();
  }
  if (p.domatic_number) j["domatic_number"] = *p.domatic_number;
  j["all_subgroups_two_generated"] = p.all_subgroups_two_generated;
  j["two_generated_branches_agree"] = p.two_generated_branches_agree;
  return j;
}

Json indices_json(const IndexReport& r) {
  return Json{{"m1", r.m1},
              {"m2", r.m2},
              {"randic", format_real(r.randic)},
              {"abc", format_real(r.abc)},
              {"ga", format_real(r.ga)},
              {"harmonic", format_real(r.harmonic)},
              {"sci", format_real(r.sci)}};
}

}  // namespace

Json to_json(const Analysis& a) {
  const FamilyCounts counts = family_counts(a.lattice);
  Json j;
  j["schema"] = kSchemaVersion;
  j["group"] = a.group.spec();
  j["order"] = a.group.order();
  j["rank_bucket"] = std::string(to_string(a.degrees.rank_bucket));
  j["edges"] = a.degrees.edge_count();
  j["family_counts"] = Json{{"cyclic", counts.cyclic},
                            {"abelian", counts.abelian},
                            {"nilpotent", counts.nilpotent},
                            {"solvable", counts.solvable},
                            {"total", counts.total}};

  Json subgroups = Json::array();
  for (const Subgroup& s : a.lattice) {
    Json elems = Json::array();
    for (Element x : s.carrier.elements()) elems.push_back(a.group.label(x));
    subgroups.push_back(Json{{"id", s.id},
                             {"order", s.order},
                             {"flags", flags_json(s.flags)},
                             {"degree", a.degrees.deg[s.id]},
                             {"pr", to_string(a.probs.per_subgroup[s.id])},
                             {"phi2", to_string(phi2(s, a.degrees))},
                             {"elements", std::move(elems)}});
  }
  j["subgroups"] = std::move(subgroups);
  j["stars"] = a.forest.stars;
  j["isolated_count"] = a.forest.isolated_count;
  j["star_forest"] = describe(a.forest);
  j["parameters"] = params_json(a.params);
  j["probabilities"] = Json{{"pr_cyclic", to_string(a.probs.pr_cyclic)},
                            {"pr_abelian", to_string(a.probs.pr_abelian)},
                            {"pr_nilpotent", to_string(a.probs.pr_nilpotent)},
                            {"pr_solvable", to_string(a.probs.pr_solvable)},
                            {"phi2", to_string(a.probs.phi2_group)}};
  j["topological_indices"] = indices_json(a.indices);
  if (a.gen_graph) {
    Json gen = Json::array();
    for (const GenGraphSummary& s : *a.gen_graph) {
      gen.push_back(Json{{"id", s.subgroup_id},
                         {"edge_count", s.edge_count},
                         {"diagonal_generators", s.diagonal_generators}});
    }
    j["gen_graph"] = std::move(gen);
  }
  return j;
}

// verify -------------------------------------------------------------------

std::vector<VerificationCertificate> verify_family(Family family, std::uint64_t p_min,
                                                   std::uint64_t p_max, const RunOptions& opts,
                                                   std::vector<std::uint64_t>* skipped) {
  std::vector<VerificationCertificate> out;
  for (std::uint64_t p = p_min; p <= p_max; ++p) {
    if (!is_prime(p)) continue;
    StarForest expected;
    try {
      expected = closed_form_forest(family, p);
    } catch (const UnsupportedFamilyError&) {
      if (skipped) skipped->push_back(p);
      continue;
    }
    VerificationCertificate c;
    c.family = family;
    c.prime = p;
    c.group_spec = family_group_spec(family, p);
    const GroupTable g = make_group(c.group_spec, opts.cap);
    const Lattice lat = enumerate_subgroups(g, opts.cap);
    c.group_order = g.order();
    c.computed = star_forest(build_degree_map(g, lat, opts.threads));
    c.expected = std::move(expected);
    c.pass = c.expected == c.computed;
    if (c.pass) c.matched_readings.push_back("as_stated");
    for (const NamedForest& alt : alternate_readings(family, p))
      if (alt.forest == c.computed) c.matched_readings.push_back(alt.reading);
    out.push_back(std::move(c));
  }
  return out;
}

Json to_json(const VerificationCertificate& c) {
  return Json{{"schema", kSchemaVersion},
              {"family", std::string(to_string(c.family))},
              {"prime", c.prime},
              {"group", c.group_spec},
              {"order", c.group_order},
              {"expected", c.expected.stars},
              {"computed", c.computed.stars},
              {"expected_forest", describe(c.expected)},
              {"computed_forest", describe(c.computed)},
              {"matched_readings", c.matched_readings},
              {"verdict", c.pass ? "pass" : "fail"}};
}

// table1 -------------------------------------------------------------------

std::vector<Table1Row> compute_table1(const RunOptions& opts) {
  static const std::pair<const char*, const char*> kGroups[] = {
      {"S3", "S:3"},   {"D8", "D:8"}, {"Q8", "Q:8"}, {"D10", "D:10"},
      {"D12", "D:12"}, {"A4", "A:4"}, {"S4", "S:4"}};
  std::vector<Table1Row> rows;
  for (const auto& [name, spec] : kGroups) {
    const GroupTable g = make_group(spec, opts.cap);
    const Lattice lat = enumerate_subgroups(g, opts.cap);
    const DegreeMap dm = build_degree_map(g, lat, opts.threads);
    const ProbReport probs = aggregate(dm, lat);
    rows.push_back(Table1Row{name, spec, g.order(), family_counts(lat), dm.edge_count(),
                             probs.pr_cyclic, probs.pr_abelian, probs.pr_nilpotent,
                             probs.pr_solvable, probs.phi2_group});
  }
  return rows;
}

std::string table1_csv(const std::vector<Table1Row>& rows) {
  std::ostringstream out;
  out << kTable1Header << '\n';
  for (const Table1Row& r : rows) {
    out << r.name << ',' << r.order << ',' << r.counts.cyclic << ',' << r.counts.abelian << ','
        << r.counts.nilpotent << ',' << r.counts.solvable << ',' << r.edges << ','
        << to_string(r.pr_cyclic) << ',' << to_string(r.pr_abelian) << ','
        << to_string(r.pr_nilpotent) << ',' << to_string(r.pr_solvable) << ','
        << to_string(r.phi2) << '\n';
  }
  return out.str();
}

const std::string& table1_expected_csv() {
  static const std::string kExpected = std::string(kTable1Header) +
                                       "\n"
                                       "S3,6,5,5,5,6,36,1/2,1/2,1/2,1/1,1/2\n"
                                       "D8,8,7,9,10,10,64,7/16,5/8,1/1,1/1,3/8\n"
                                       "Q8,8,5,5,6,6,64,5/8,5/8,1/1,1/1,3/8\n"
                                       "D10,10,7,7,7,8,100,2/5,2/5,2/5,1/1,3/5\n"
                                       "D12,12,10,13,13,16,144,3/8,1/2,1/2,1/1,3/8\n"
                                       "A4,12,8,9,9,10,144,7/24,1/3,1/3,1/1,2/3\n"
                                       "S4,24,17,21,24,30,576,1/6,5/24,1/3,1/1,3/8\n";
  return kExpected;
}

// dot ----------------------------------------------------------------------

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const Analysis& a, DotMode mode) {
  const GroupTable& g = a.group;
  const std::size_t n = g.order();
  std::ostringstream out;
  out << "graph " << quoted("B(" + g.spec() + ")") << " {\n";
  if (mode == DotMode::kCollapsed) {
    for (const Subgroup& s : a.lattice) {
      const std::uint64_t d = a.degrees.deg[s.id];
      out << "  H" << s.id << " [label="
          << quoted("H" + std::to_string(s.id) + "|" + std::to_string(s.order) + " x" +
                    std::to_string(d))
          << ", leaves=" << d << "];\n";
    }
    out << "}\n";
    return out.str();
  }

  if (static_cast<std::uint64_t>(n) * n > kDotFullPairLimit) {
    throw SizeRefusalError("full DOT export needs |G|^2 <= " + std::to_string(kDotFullPairLimit) +
                           ", got " + std::to_string(n * n));
  }
  for (const Subgroup& s : a.lattice) {
    out << "  H" << s.id << " [shape=box, label="
        << quoted("H" + std::to_string(s.id) + "|" + std::to_string(s.order)) << "];\n";
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      out << "  p" << x << "_" << y << " [label="
          << quoted("(" + g.label(x) + "," + g.label(y) + ")") << "];\n";
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element gens[] = {x, y};
      const auto id = a.lattice.find(generate(g, std::span<const Element>(gens)));
      if (!id) throw InconsistencyError("pair generates a subgroup missing from the lattice");
      out << "  p" << x << "_" << y << " -- H" << *id << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace bipgen
