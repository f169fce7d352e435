#pragma once

// Shared fixtures for the unit tests and the acceptance runner: the group
// corpus and brute-force reference implementations that do not reuse any
// library shortcut beyond GroupTable itself.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "bipgen/bigraph.hpp"
#include "bipgen/group.hpp"
#include "bipgen/lattice.hpp"

namespace bipgen::testing {

// Every group order here is at most 200.
inline const std::vector<std::string>& corpus() {
  static const std::vector<std::string> specs = {
      "Z:1",  "Z:2",  "Z:3",  "Z:4",  "Z:5",  "Z:6",  "Z:8",  "Z:9",  "Z:12", "Z:16",
      "D:4",  "S:3",  "D:8",  "Q:8",  "D:10", "D:12", "A:4",  "Q:12", "D:14", "D:16",
      "Q:16", "D:18", "Q:20", "S:4",  "Q:36", "D:50", "A:5",  "S:5",  "D:98", "Q:100",
      "X(Z:2,Z:2)", "X(Z:3,Z:3)", "X(Z:2,Z:4)", "X(Z:2,Z:2,Z:2)", "X(S:3,Z:2)",
      "X(S:3,Z:3)", "X(D:8,Z:2)", "X(Q:8,Z:2)", "X(S:4,Z:2)", "X(Z:5,Z:5)"};
  return specs;
}

inline std::vector<std::string> corpus_up_to(std::size_t max_order) {
  std::vector<std::string> out;
  for (const auto& s : corpus())
    if (spec_order(s) <= max_order) out.push_back(s);
  return out;
}

// ---------------------------------------------------------------------------
// Subgroups by exhaustive subset filtering (|G| <= 16 keeps this at 2^15).

inline std::vector<std::vector<Element>> subgroups_by_subsets(const GroupTable& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<Element>> found;
  const std::uint64_t rest = std::uint64_t{1} << (n - 1);
  for (std::uint64_t m = 0; m < rest; ++m) {
    const std::uint64_t mask = (m << 1) | 1u;  // identity always in
    bool closed = true;
    for (Element x = 0; x < n && closed; ++x) {
      if (!((mask >> x) & 1u)) continue;
      for (Element y = 0; y < n; ++y) {
        if (((mask >> y) & 1u) && !((mask >> g.mul(x, y)) & 1u)) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;  // finite and closed under mul means a subgroup
    std::vector<Element> elems;
    for (Element x = 0; x < n; ++x)
      if ((mask >> x) & 1u) elems.push_back(x);
    found.push_back(std::move(elems));
  }
  std::sort(found.begin(), found.end());
  return found;
}

// ---------------------------------------------------------------------------
// Explicit B(G): vertices 0..n^2-1 are pairs (a,b) with index a*n+b, then one
// vertex per subgroup. Built from a from-scratch closure of every pair.

struct ExplicitGraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::vector<std::size_t>> adj;
};

inline ExplicitGraph explicit_bigraph(const GroupTable& g, const Lattice& lat) {
  const std::size_t n = g.order();
  ExplicitGraph gr;
  gr.vertex_count = n * n + lat.size();
  gr.adj.resize(gr.vertex_count);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const Element seeds[] = {a, b};
      const auto h = lat.find(generate(g, std::span<const Element>(seeds)));
      const std::size_t u = a * n + b;
      const std::size_t v = n * n + h.value();
      gr.edges.emplace_back(u, v);
      gr.adj[u].push_back(v);
      gr.adj[v].push_back(u);
    }
  }
  return gr;
}

// Connected components, each as a list of vertices and of local edges.
struct Component {
  std::vector<std::size_t> vertices;
  std::vector<std::pair<int, int>> edges;  // local indices
};

inline std::vector<Component> components(const ExplicitGraph& gr) {
  std::vector<int> comp(gr.vertex_count, -1);
  std::vector<Component> out;
  for (std::size_t s = 0; s < gr.vertex_count; ++s) {
    if (comp[s] >= 0) continue;
    const int c = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<std::size_t> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      out[c].vertices.push_back(v);
      for (std::size_t w : gr.adj[v]) {
        if (comp[w] < 0) {
          comp[w] = c;
          stack.push_back(w);
        }
      }
    }
  }
  for (auto& c : out) std::sort(c.vertices.begin(), c.vertices.end());
  for (const auto& [u, v] : gr.edges) {
    auto& c = out[comp[u]];
    const auto local = [&](std::size_t x) {
      return static_cast<int>(std::lower_bound(c.vertices.begin(), c.vertices.end(), x) -
                              c.vertices.begin());
    };
    c.edges.emplace_back(local(u), local(v));
  }
  return out;
}

struct BruteParams {
  std::uint64_t independence = 0;
  std::uint64_t domination = 0;
  std::uint64_t matching = 0;
  std::uint64_t vertex_cover = 0;
  std::uint64_t irredundance = 0;
};

// Exhaustive search over vertex subsets (and edge subsets for matchings) of
// one component. Components must have at most 26 vertices.
inline BruteParams brute_component(const Component& c) {
  const int k = static_cast<int>(c.vertices.size());
  const std::uint32_t full = (std::uint32_t{1} << k) - 1;
  std::vector<std::uint32_t> closed_nbhd(k);
  for (int v = 0; v < k; ++v) closed_nbhd[v] = std::uint32_t{1} << v;
  for (const auto& [u, v] : c.edges) {
    closed_nbhd[u] |= std::uint32_t{1} << v;
    closed_nbhd[v] |= std::uint32_t{1} << u;
  }

  BruteParams r;
  r.domination = r.vertex_cover = r.irredundance = static_cast<std::uint64_t>(k);
  std::vector<std::uint8_t> irredundant(std::size_t{full} + 1, 0);
  for (std::uint32_t s = 0; s <= full; ++s) {
    const auto size = static_cast<std::uint64_t>(std::popcount(s));

    bool independent = true, covers = true;
    for (const auto& [u, v] : c.edges) {
      const bool iu = (s >> u) & 1u, iv = (s >> v) & 1u;
      if (iu && iv) independent = false;
      if (!iu && !iv) covers = false;
    }
    if (independent) r.independence = std::max(r.independence, size);
    if (covers) r.vertex_cover = std::min(r.vertex_cover, size);

    std::uint32_t dominated = 0;
    for (int v = 0; v < k; ++v)
      if ((s >> v) & 1u) dominated |= closed_nbhd[v];
    if (dominated == full) r.domination = std::min(r.domination, size);

    // Every member v needs a private neighbour: some u whose closed
    // neighbourhood meets s exactly in {v}.
    std::uint32_t has_private = 0;
    for (int u = 0; u < k; ++u) {
      const std::uint32_t t = closed_nbhd[u] & s;
      if (std::has_single_bit(t)) has_private |= t;
    }
    irredundant[s] = has_private == s;
    if (s == full) break;
  }
  for (std::uint32_t s = 0;; ++s) {
    if (irredundant[s]) {
      bool maximal = true;
      for (int v = 0; v < k && maximal; ++v)
        if (!((s >> v) & 1u) && irredundant[s | (std::uint32_t{1} << v)]) maximal = false;
      if (maximal)
        r.irredundance = std::min(r.irredundance, static_cast<std::uint64_t>(std::popcount(s)));
    }
    if (s == full) break;
  }

  const int m = static_cast<int>(c.edges.size());
  for (std::uint32_t es = 0; es < (std::uint32_t{1} << m); ++es) {
    std::uint32_t used = 0;
    bool ok = true;
    for (int e = 0; e < m && ok; ++e) {
      if (!((es >> e) & 1u)) continue;
      const std::uint32_t ends =
          (std::uint32_t{1} << c.edges[e].first) | (std::uint32_t{1} << c.edges[e].second);
      if (used & ends) ok = false;
      used |= ends;
    }
    if (ok) r.matching = std::max(r.matching, static_cast<std::uint64_t>(std::popcount(es)));
  }
  return r;
}

// All five parameters are additive over connected components.
inline BruteParams brute_params(const ExplicitGraph& gr) {
  BruteParams total;
  for (const auto& c : components(gr)) {
    const BruteParams p = brute_component(c);
    total.independence += p.independence;
    total.domination += p.domination;
    total.matching += p.matching;
    total.vertex_cover += p.vertex_cover;
    total.irredundance += p.irredundance;
  }
  return total;
}

}  // namespace bipgen::testing
