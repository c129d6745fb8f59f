#include "fano/amd.hpp"

#include <algorithm>
#include <set>

namespace fano {

std::vector<int> dull_edges(const LatticePolytope3& p) {
  std::vector<int> out;
  for (size_t e = 0; e < p.edges.size(); ++e)
    if (edge_geometry(p, static_cast<int>(e)).colength == 1)
      out.push_back(static_cast<int>(e));
  return out;
}

bool matching_condition(const std::vector<int>& fpart,
                        const std::vector<int>& gpart) {
  if (fpart.size() != gpart.size())
    throw input_error("matching_condition: partition length mismatch");
  int l = static_cast<int>(fpart.size());
  for (int s = 0; s < l; ++s)
    for (int t = s + 1; t < l; ++t)
      if (fpart[s] == fpart[t] && gpart[s] == gpart[t]) return false;
  return true;
}

namespace {

// locate the pair of segments witnessing a violation, or (0,0)
std::pair<int, int> violation(const std::vector<int>& fpart,
                              const std::vector<int>& gpart) {
  int l = static_cast<int>(fpart.size());
  for (int s = 0; s < l; ++s)
    for (int t = s + 1; t < l; ++t)
      if (fpart[s] == fpart[t] && gpart[s] == gpart[t])
        return {s + 1, t + 1};
  return {0, 0};
}

// all (decomposition, subdivision) choices for one facet, with partitions
// keyed by global edge id in the global segment order
std::vector<FacetChoice> facet_choices(const LatticePolytope3& p, int fi) {
  FacetChart ch = facet_chart(p, fi);
  const LatticePolygon& poly = ch.polygon;

  // chart edge t -> (global edge id, reversed?)
  int m = poly.size();
  std::vector<std::pair<int, bool>> edge_of(m, {-1, false});
  for (int t = 0; t < m; ++t) {
    Vec3 a = ch.from_chart(poly.vertex(t));
    Vec3 b = ch.from_chart(poly.vertex(t + 1));
    for (size_t e = 0; e < p.edges.size(); ++e) {
      Vec3 v0 = p.verts[p.edges[e].v0], v1 = p.verts[p.edges[e].v1];
      if (a == v0 && b == v1) edge_of[t] = {static_cast<int>(e), false};
      if (a == v1 && b == v0) edge_of[t] = {static_cast<int>(e), true};
    }
    if (edge_of[t].first < 0)
      throw invariant_error("facet edge not found among polytope edges");
  }

  std::vector<FacetChoice> out;
  for (const auto& d : enumerate_admissible_decompositions(poly)) {
    for (const auto& s : enumerate_fine_coherent_subdivisions(d)) {
      FacetChoice fc;
      fc.facet = fi;
      fc.decomposition = d;
      fc.subdivision = s;
      for (int t = 0; t < m; ++t) {
        std::vector<int> part = induced_edge_partition(s, poly, t);
        if (edge_of[t].second) std::reverse(part.begin(), part.end());
        fc.edge_partitions[edge_of[t].first] = std::move(part);
      }
      out.push_back(std::move(fc));
    }
  }
  return out;
}

}  // namespace

MatchReport verify_matching(const LatticePolytope3& p, const Amd& a) {
  MatchReport rep;
  for (int e : dull_edges(p)) {
    const auto& fp = a.choices[p.edges[e].f0].edge_partitions.at(e);
    const auto& gp = a.choices[p.edges[e].f1].edge_partitions.at(e);
    bool ok = matching_condition(fp, gp);
    rep.edges.push_back({e, ok, ok ? std::pair<int, int>{0, 0}
                                   : violation(fp, gp)});
    if (!ok) rep.pass = false;
  }
  return rep;
}

long long enumerate_amd(const LatticePolytope3& p, const AmdOptions& opt,
                        const std::function<bool(const Amd&)>& emit) {
  int nf = static_cast<int>(p.facets.size());
  std::vector<std::vector<FacetChoice>> choices(nf);
  for (int f = 0; f < nf; ++f) {
    choices[f] = facet_choices(p, f);
    if (choices[f].empty()) return 0;  // no amd can exist
  }

  std::vector<int> de = dull_edges(p);
  std::set<int> dull(de.begin(), de.end());
  auto checked_edge = [&](int e) {
    return opt.strict_all_edges || dull.count(e) > 0;
  };

  // facet order: greedy, maximizing checked edges shared with placed facets
  std::vector<int> order;
  {
    std::vector<bool> placed(nf, false);
    for (int step = 0; step < nf; ++step) {
      int best = -1, best_score = -1;
      for (int f = 0; f < nf; ++f) {
        if (placed[f]) continue;
        int score = 0;
        for (size_t e = 0; e < p.edges.size(); ++e) {
          if (!checked_edge(static_cast<int>(e))) continue;
          int g = p.edges[e].f0 == f   ? p.edges[e].f1
                  : p.edges[e].f1 == f ? p.edges[e].f0
                                       : -1;
          if (g >= 0 && placed[g]) ++score;
        }
        if (score > best_score) {
          best = f;
          best_score = score;
        }
      }
      placed[best] = true;
      order.push_back(best);
    }
  }

  // per-facet, the earlier-placed neighbor edges to test against
  std::vector<std::vector<std::pair<int, int>>> tests(nf);  // (edge, other)
  {
    std::vector<int> rank(nf);
    for (int i = 0; i < nf; ++i) rank[order[i]] = i;
    for (size_t e = 0; e < p.edges.size(); ++e) {
      if (!checked_edge(static_cast<int>(e))) continue;
      int f0 = p.edges[e].f0, f1 = p.edges[e].f1;
      int late = rank[f0] > rank[f1] ? f0 : f1;
      int early = late == f0 ? f1 : f0;
      tests[late].push_back({static_cast<int>(e), early});
    }
  }

  long long emitted = 0;
  bool stop = false;
  Amd cur;
  cur.choices.resize(nf);
  std::set<std::string> seen;  // dedup keys

  std::function<void(int)> rec = [&](int step) {
    if (stop) return;
    if (step == nf) {
      if (opt.dedup_by_invariants) {
        std::string key;
        for (int f = 0; f < nf; ++f) {
          for (const auto& cell : cur.choices[f].subdivision.tri.cells) {
            for (int v : cell) key += std::to_string(v) + ",";
            key += ";";
          }
          key += "|";
          for (const auto& [e, part] : cur.choices[f].edge_partitions) {
            key += std::to_string(e) + ":";
            for (int j : part) key += std::to_string(j) + ",";
          }
          key += "#";
        }
        if (!seen.insert(std::move(key)).second) return;
      }
      ++emitted;
      if (!opt.count_only && !emit(cur)) stop = true;
      if (opt.limit > 0 && emitted >= opt.limit) stop = true;
      return;
    }
    int f = order[step];
    for (const auto& fc : choices[f]) {
      bool ok = true;
      for (const auto& [e, other] : tests[f]) {
        if (!matching_condition(fc.edge_partitions.at(e),
                                cur.choices[other].edge_partitions.at(e))) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      cur.choices[f] = fc;
      rec(step + 1);
      if (stop) return;
    }
  };
  rec(0);
  return emitted;
}

bool amd_exists(const LatticePolytope3& p) {
  AmdOptions opt;
  opt.limit = 1;
  return enumerate_amd(p, opt, [](const Amd&) { return false; }) > 0;
}

}  // namespace fano
