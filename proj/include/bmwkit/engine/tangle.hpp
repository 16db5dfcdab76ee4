#pragma once

// Combinatorial analysis of the tangle diagram drawn by a generator word.
//
// The word is drawn top to bottom. Boundary level b (0..L) sits between
// letters b-1 and b; node (b, p) is the point of strand position p there.
// T_i joins (k,i)-(k+1,i+1) over (k,i+1)-(k+1,i); T_i^{-1} has the other
// strand on top; E_i joins (k,i)-(k,i+1) and (k+1,i)-(k+1,i+1).
//
// Components are traversed in a fixed order (bottom arcs, then through
// strands, then top arcs, then closed loops) from fixed base points. A
// diagram is descending when every crossing is first reached along its over
// strand; a descending diagram is a stack of unlinked, unknotted framed
// components, so it equals delta^loops * r^{-writhe} times the loop-free,
// writhe-free descending diagram with the same shadow.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "bmwkit/basis/brauer.hpp"

namespace bmwkit {

struct TangleInfo {
  BrauerDiagram shadow;
  int loops = 0;
  /// Index of the first letter whose crossing is met under-first, or -1.
  int wrong = -1;
  /// Sum of the signs of self-crossings of components.
  int writhe = 0;
};

namespace detail {

struct TangleEdge {
  int a, b;
  int token;
  std::int8_t role;  // 0 plain, 1 over, 2 under
};

}  // namespace detail

inline TangleInfo analyze_word(int n, const GenWord& word) {
  TangleInfo info;
  const int len = static_cast<int>(word.size());
  if (len == 0) {
    info.shadow = BrauerDiagram::identity(n);
    return info;
  }
  const int nodes = (len + 1) * n;
  auto node = [n](int level, int pos) { return level * n + pos - 1; };
  auto level_of = [n](int v) { return v / n; };
  auto pos_of = [n](int v) { return v % n + 1; };

  std::vector<detail::TangleEdge> edges;
  edges.reserve(static_cast<std::size_t>(len * n));
  std::vector<int> adj(static_cast<std::size_t>(2 * nodes), -1);
  auto add = [&](int a, int b, int k, std::int8_t role) {
    const int e = static_cast<int>(edges.size());
    edges.push_back({a, b, k, role});
    for (int v : {a, b}) {
      int* slot = &adj[2 * v];
      slot[slot[0] < 0 ? 0 : 1] = e;
    }
  };
  std::vector<int> over_edge(static_cast<std::size_t>(len), -1), under_edge(static_cast<std::size_t>(len), -1);
  for (int k = 0; k < len; ++k) {
    const Gen g = word[k];
    for (int p = 1; p <= n; ++p)
      if (p != g.i && p != g.i + 1) add(node(k, p), node(k + 1, p), k, 0);
    if (g.kind == Gen::E) {
      add(node(k, g.i), node(k, g.i + 1), k, 0);
      add(node(k + 1, g.i), node(k + 1, g.i + 1), k, 0);
    } else {
      const bool t = g.kind == Gen::T;
      add(node(k, g.i), node(k + 1, g.i + 1), k, t ? 1 : 2);
      add(node(k, g.i + 1), node(k + 1, g.i), k, t ? 2 : 1);
      (t ? over_edge : under_edge)[k] = static_cast<int>(edges.size()) - 2;
      (t ? under_edge : over_edge)[k] = static_cast<int>(edges.size()) - 1;
    }
  }

  auto other_end = [&](int e, int v) { return edges[e].a == v ? edges[e].b : edges[e].a; };
  auto other_edge = [&](int v, int e) { return adj[2 * v] == e ? adj[2 * v + 1] : adj[2 * v]; };

  // endpoint of the open strand starting at boundary node v
  auto run_to_end = [&](int v) {
    int e = adj[2 * v];
    int cur = other_end(e, v);
    for (;;) {
      int next = other_edge(cur, e);
      if (next < 0) return cur;
      e = next;
      cur = other_end(e, cur);
    }
  };

  // boundary points: top p -> point p-1, bottom p -> point n+p-1
  auto point_of = [&](int v) { return level_of(v) == 0 ? pos_of(v) - 1 : n + pos_of(v) - 1; };
  auto node_of_point = [&](int pt) { return pt < n ? node(0, pt + 1) : node(len, pt - n + 1); };
  std::vector<int> partner(static_cast<std::size_t>(2 * n), -1);
  for (int pt = 0; pt < 2 * n; ++pt) {
    if (partner[pt] >= 0) continue;
    int q = point_of(run_to_end(node_of_point(pt)));
    partner[pt] = q;
    partner[q] = pt;
  }
  info.shadow = BrauerDiagram::from_partner(partner);

  // component base points in traversal order
  std::vector<int> starts;
  for (int p = 0; p < n; ++p) {  // bottom arcs, by smaller endpoint ascending
    int o = partner[n + p];
    if (o >= n && o > n + p) starts.push_back(node(len, p + 1));
  }
  for (int b = n - 1; b >= 0; --b) {  // through strands, by bottom endpoint descending
    int t = partner[n + b];
    if (t < n) starts.push_back(node(0, t + 1));
  }
  for (int a = n - 1; a >= 0; --a) {  // top arcs, by smaller endpoint descending
    int o = partner[a];
    if (o < n && o > a) starts.push_back(node(0, a + 1));
  }

  // time stamps: (component rank, position); direction as from-node
  struct Stamp {
    int rank = -1, pos = 0, from = 0;
  };
  std::vector<Stamp> stamp(edges.size());
  int rank = 0;
  auto walk = [&](int v, int e) {
    int pos = 0;
    const int start = v;
    for (;;) {
      stamp[e] = {rank, pos++, v};
      v = other_end(e, v);
      if (v == start) break;
      int next = other_edge(v, e);
      if (next < 0) break;
      e = next;
    }
    ++rank;
  };
  for (int v : starts) walk(v, adj[2 * v]);
  const int open_components = rank;
  for (;;) {
    int best_node = -1;
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (stamp[e].rank < 0) {
        int m = std::min(edges[e].a, edges[e].b);
        if (best_node < 0 || m < best_node) best_node = m;
      }
    if (best_node < 0) break;
    // leave towards the smaller neighbour (ties by edge index)
    int e0 = adj[2 * best_node], e1 = adj[2 * best_node + 1];
    int n0 = other_end(e0, best_node), n1 = other_end(e1, best_node);
    int e = (n1 < n0 || (n1 == n0 && e1 < e0)) ? e1 : e0;
    walk(best_node, e);
  }
  info.loops = rank - open_components;

  for (int k = 0; k < len; ++k) {
    if (word[k].kind == Gen::E) continue;
    const Stamp& so = stamp[over_edge[k]];
    const Stamp& su = stamp[under_edge[k]];
    if (info.wrong < 0 && (su.rank < so.rank || (su.rank == so.rank && su.pos < so.pos))) info.wrong = k;
    if (so.rank == su.rank) {
      auto vec = [&](int e, const Stamp& s) {
        int to = other_end(e, s.from);
        return std::pair<int, int>{pos_of(to) - pos_of(s.from), -(level_of(to) - level_of(s.from))};
      };
      auto [ox, oy] = vec(over_edge[k], so);
      auto [ux, uy] = vec(under_edge[k], su);
      info.writhe += (ox * uy - oy * ux) > 0 ? 1 : -1;
    }
  }
  return info;
}

}  // namespace bmwkit
