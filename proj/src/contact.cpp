#include "ccx/contact.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "ccx/error.hpp"
#include "ccx/separation.hpp"

namespace ccx {

ContactGraph contact_graph(const CubeComplex& c) {
  const int k = c.hyperplane_count();
  ContactGraph cg;
  cg.node_count = k;
  cg.adj.assign(k, Bitset(k));
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (c.carrier(a).intersects(c.carrier(b))) {
        cg.adj[a].set(b);
        cg.adj[b].set(a);
      }
  cg.dist.assign(k, std::vector<std::int16_t>(k, -1));
  for (int s = 0; s < k; ++s) {
    auto& row = cg.dist[s];
    row[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      cg.adj[u].for_each([&](int w) {
        if (row[w] < 0) {
          row[w] = static_cast<std::int16_t>(row[u] + 1);
          q.push(w);
        }
      });
    }
  }
  return cg;
}

DeltaChain delta_chain(const CubeComplex& c, int j, int h) {
  c.hyperplane(j);
  c.hyperplane(h);
  if (j == h) throw Error::usage("delta chain needs two distinct hyperplanes");
  DeltaChain out;
  out.j = j;
  out.h = h;

  std::vector<int> cand;
  for (int v = 0; v < c.hyperplane_count(); ++v)
    if (v != j && v != h && separates(c, v, j, h)) cand.push_back(v);
  if (cand.empty()) return out;

  // order by how close each separator sits to j: size of the halfspace
  // containing carrier(j)
  const int anchor = c.carrier(j).find_first();
  std::vector<std::size_t> key(cand.size());
  for (std::size_t i = 0; i < cand.size(); ++i)
    key[i] = c.halfspace(cand[i], c.side_of(anchor, cand[i])).count();
  std::vector<int> order(cand.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return key[a] != key[b] ? key[a] < key[b] : cand[a] < cand[b];
  });

  // longest path over consecutive strong separation; consecutive implies
  // pairwise along nested chains (a hyperplane crossing the two ends would
  // cross the separating middle), re-verified below.
  const int t = static_cast<int>(order.size());
  std::vector<int> len(t, 1), prev(t, -1);
  int best = 0;
  for (int b = 0; b < t; ++b) {
    for (int a = 0; a < b; ++a) {
      int va = cand[order[a]], vb = cand[order[b]];
      if (key[order[a]] < key[order[b]] && strongly_separated(c, va, vb) &&
          len[a] + 1 > len[b]) {
        len[b] = len[a] + 1;
        prev[b] = a;
      }
    }
    if (len[b] > len[best]) best = b;
  }
  for (int at = best; at >= 0; at = prev[at]) out.chain.push_back(cand[order[at]]);
  std::reverse(out.chain.begin(), out.chain.end());

  for (std::size_t a = 0; a < out.chain.size(); ++a)
    for (std::size_t b = a + 1; b < out.chain.size(); ++b)
      if (!strongly_separated(c, out.chain[a], out.chain[b]))
        throw Error::property("delta chain is not pairwise strongly separated");
  for (std::size_t m = 1; m + 1 < out.chain.size(); ++m)
    if (!separates(c, out.chain[m], out.chain[m - 1], out.chain[m + 1]))
      throw Error::property("delta chain member fails to separate its neighbors");
  return out;
}

QiReport qi_check(const CubeComplex& c) {
  QiReport r;
  ContactGraph cg = contact_graph(c);
  for (int j = 0; j < c.hyperplane_count(); ++j) {
    for (int h = j + 1; h < c.hyperplane_count(); ++h) {
      int delta = delta_chain(c, j, h).length();
      int d = cg.distance(j, h);
      ++r.pairs_checked;
      if (delta > d) {
        r.clean = false;
        r.lower_violations.push_back({j, h, delta, d});
      }
      if (delta < d / 5) {
        r.clean = false;
        r.sandwich_violations.push_back({j, h, delta, d});
      }
      if (d > 5 * delta) ++r.literal_upper_failures;
    }
  }
  return r;
}

namespace {

struct GeodesicWalk {
  const ContactGraph& cg;
  const std::vector<int>& seps;
  int target;
  std::vector<int> path;
  long long budget;
  bool ok = true;
  std::string detail;
  long long walked = 0;

  bool near_some_separator(int node) {
    for (int wsep : seps)
      if (cg.dist[node][wsep] <= 1) return true;
    return false;
  }

  void dfs(int at) {
    if (!ok) return;
    if (--budget < 0) {
      ok = false;
      detail = "geodesic enumeration budget exhausted";
      return;
    }
    if (at == target) {
      ++walked;
      // (ii): every separator sits within 1 of some interior vertex
      for (int wsep : seps) {
        bool near = false;
        for (std::size_t i = 1; i + 1 < path.size() && !near; ++i)
          if (cg.dist[path[i]][wsep] <= 1) near = true;
        if (!near) {
          ok = false;
          detail = "separator " + std::to_string(wsep) + " far from a geodesic";
          return;
        }
      }
      return;
    }
    int d = cg.dist[at][target];
    for (int nxt = 0; nxt < cg.node_count && ok; ++nxt) {
      if (!cg.adj[at].test(nxt) || cg.dist[nxt][target] != d - 1) continue;
      // (i): interior vertices stay within 1 of some separator
      if (nxt != target && !near_some_separator(nxt)) {
        ok = false;
        detail = "interior vertex " + std::to_string(nxt) + " far from every separator";
        return;
      }
      path.push_back(nxt);
      dfs(nxt);
      path.pop_back();
    }
  }
};

}  // namespace

HagenReport hagen_check(const CubeComplex& c, const ContactGraph& cg,
                        long long geodesic_cap) {
  HagenReport r;
  long long budget = geodesic_cap;
  for (int j = 0; j < cg.node_count && r.holds; ++j) {
    for (int h = 0; h < cg.node_count && r.holds; ++h) {
      if (j == h || cg.dist[j][h] < 0) continue;
      std::vector<int> seps;
      for (int v = 0; v < c.hyperplane_count(); ++v)
        if (v != j && v != h && separates(c, v, j, h)) seps.push_back(v);
      if (cg.dist[j][h] <= 1) {
        if (!seps.empty()) {
          r.holds = false;
          r.detail = "adjacent hyperplanes with a separator";
        }
        continue;
      }
      GeodesicWalk walk{cg, seps, h, {j}, budget, true, "", 0};
      walk.dfs(j);
      budget = walk.budget;
      r.geodesics_checked += walk.walked;
      if (!walk.ok) {
        r.holds = false;
        r.detail = "pair (" + std::to_string(j) + "," + std::to_string(h) + "): " +
                   walk.detail;
      }
    }
  }
  return r;
}

int four_point_delta_x2(const ContactGraph& cg, int max_nodes) {
  const int k = cg.node_count;
  if (k > max_nodes)
    throw Error::cap("contact graph has " + std::to_string(k) +
                     " nodes; four-point scan capped at " + std::to_string(max_nodes));
  int best = 0;
  for (int a = 0; a < k; ++a) {
    const auto& da = cg.dist[a];
    for (int b = a + 1; b < k; ++b) {
      if (da[b] < 0) continue;
      const auto& db = cg.dist[b];
      for (int x = b + 1; x < k; ++x) {
        if (da[x] < 0) continue;
        const auto& dx = cg.dist[x];
        for (int y = x + 1; y < k; ++y) {
          if (da[y] < 0) continue;
          int s1 = da[b] + dx[y];
          int s2 = da[x] + db[y];
          int s3 = da[y] + db[x];
          int hi = std::max({s1, s2, s3});
          int mid = s1 + s2 + s3 - hi - std::min({s1, s2, s3});
          best = std::max(best, hi - mid);
        }
      }
    }
  }
  return best;
}

}  // namespace ccx
