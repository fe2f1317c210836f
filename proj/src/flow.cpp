#include "ecdp/flow.hpp"

#include <algorithm>
#include <queue>

namespace ecdp {

FlowNetwork::FlowNetwork(int nodes) : out_(static_cast<std::size_t>(nodes)) {}

int FlowNetwork::add_arc(int from, int to, int capacity) {
  const int id = static_cast<int>(arcs_.size());
  arcs_.push_back({to, capacity, 0});
  arcs_.push_back({from, 0, 0});
  out_[from].push_back(id);
  out_[to].push_back(id + 1);
  return id;
}

void FlowNetwork::set_flow(int arc, int value) {
  arcs_[arc].flow = value;
  arcs_[arc ^ 1].flow = -value;
}

int FlowNetwork::max_flow(int source, int sink, int limit) {
  int sent = 0;
  std::vector<int> via(out_.size());
  while (sent < limit) {
    std::fill(via.begin(), via.end(), -1);
    std::queue<int> bfs;
    bfs.push(source);
    via[source] = -2;
    while (!bfs.empty() && via[sink] == -1) {
      const int u = bfs.front();
      bfs.pop();
      for (int a : out_[u]) {
        const Arc& arc = arcs_[a];
        if (via[arc.to] == -1 && arc.capacity - arc.flow > 0) {
          via[arc.to] = a;
          bfs.push(arc.to);
        }
      }
    }
    if (via[sink] == -1) break;
    int push = limit - sent;
    for (int v = sink; v != source; v = arcs_[via[v] ^ 1].to) {
      const Arc& arc = arcs_[via[v]];
      push = std::min(push, arc.capacity - arc.flow);
    }
    for (int v = sink; v != source; v = arcs_[via[v] ^ 1].to) {
      arcs_[via[v]].flow += push;
      arcs_[via[v] ^ 1].flow -= push;
    }
    sent += push;
  }
  return sent;
}

namespace {

int in_node(Vertex v) { return 2 * v; }
int out_node(Vertex v) { return 2 * v + 1; }

}  // namespace

std::vector<std::vector<Vertex>> vertex_disjoint_paths(const std::vector<std::vector<Vertex>>& adj,
                                                       Vertex s, Vertex t) {
  const int n = static_cast<int>(adj.size());
  FlowNetwork net(2 * n);
  for (Vertex v = 0; v < n; ++v) {
    if (v != s && v != t) net.add_arc(in_node(v), out_node(v), 1);
  }
  // arc id of u_out -> w_in, or -1
  std::vector<std::vector<std::pair<Vertex, int>>> arcs(static_cast<std::size_t>(n));
  for (Vertex u = 0; u < n; ++u) {
    if (u == t) continue;
    for (Vertex w : adj[u]) {
      if (w == s || w == u) continue;
      arcs[u].emplace_back(w, net.add_arc(out_node(u), in_node(w), 1));
    }
  }
  net.max_flow(out_node(s), in_node(t));

  // Cancel flow running both ways over one undirected edge.
  for (Vertex u = 0; u < n; ++u) {
    for (auto [w, a] : arcs[u]) {
      if (net.flow(a) <= 0 || w == t) continue;
      for (auto [x, b] : arcs[w]) {
        if (x == u && net.flow(b) > 0) {
          net.set_flow(a, 0);
          net.set_flow(b, 0);
        }
      }
    }
  }

  std::vector<std::vector<Vertex>> paths;
  for (auto [w0, a0] : arcs[s]) {
    if (net.flow(a0) <= 0) continue;
    std::vector<Vertex> path{s, w0};
    Vertex cur = w0;
    while (cur != t) {
      Vertex next = kNoVertex;
      for (auto [w, a] : arcs[cur]) {
        if (net.flow(a) > 0) {
          net.set_flow(a, 0);
          next = w;
          break;
        }
      }
      if (next == kNoVertex) break;
      path.push_back(next);
      cur = next;
    }
    if (cur == t) paths.push_back(std::move(path));
  }
  std::sort(paths.begin(), paths.end());
  return paths;
}

bool on_simple_path(const std::vector<std::vector<Vertex>>& adj, Vertex s, Vertex v, Vertex t) {
  if (v == s || v == t) return true;
  const int n = static_cast<int>(adj.size());
  const int sink = 2 * n;
  FlowNetwork net(2 * n + 1);
  for (Vertex u = 0; u < n; ++u) net.add_arc(in_node(u), out_node(u), u == v ? 2 : 1);
  for (Vertex u = 0; u < n; ++u) {
    if (u == s || u == t) continue;  // paths stop at s and t
    for (Vertex w : adj[u]) {
      if (w != u) net.add_arc(out_node(u), in_node(w), 1);
    }
  }
  net.add_arc(out_node(s), sink, 1);
  net.add_arc(out_node(t), sink, 1);
  return net.max_flow(in_node(v), sink, 2) == 2;
}

namespace {

void require_unbounded(const ProblemInstance& inst, const char* who) {
  if (inst.length_bound) {
    throw PreconditionError(std::string(who) + " does not support a length bound");
  }
}

}  // namespace

PathSolution solve_single_color_flow(const ProblemInstance& inst, ColorId c) {
  require_unbounded(inst, "flow solver");
  if (c < 0 || c >= inst.graph.color_count()) throw InvalidArgument("unknown color index");
  PathSolution sol;
  sol.mode = inst.mode;
  for (auto& p : vertex_disjoint_paths(inst.graph.color_adjacency(c), inst.source, inst.target)) {
    sol.paths.push_back({std::move(p), c});
  }
  return sol;
}

std::vector<int> per_color_flow_values(const ProblemInstance& inst, Execution exec) {
  require_unbounded(inst, "per-color flow");
  const int q = inst.graph.color_count();
  std::vector<int> values(static_cast<std::size_t>(q), 0);
  if (exec == Execution::Serial) {
    for (ColorId c = 0; c < q; ++c) values[c] = static_cast<int>(solve_single_color_flow(inst, c).size());
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (ColorId c = 0; c < q; ++c) values[c] = static_cast<int>(solve_single_color_flow(inst, c).size());
  }
  return values;
}

PathSolution per_color_heuristic(const ProblemInstance& inst, Execution exec) {
  const auto values = per_color_flow_values(inst, exec);
  PathSolution best;
  best.mode = inst.mode;
  if (values.empty()) return best;
  const auto it = std::max_element(values.begin(), values.end());
  if (*it == 0) return best;
  best = solve_single_color_flow(inst, static_cast<ColorId>(it - values.begin()));
  if (inst.mode == Mode::Cddp) best.paths.resize(1);
  return best;
}

}  // namespace ecdp
