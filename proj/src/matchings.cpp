#include "matchings.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace hg {

void validate_graph(const MatchGraph& g) {
  if (g.a_count < 0 || g.b_count < 0) {
    throw std::invalid_argument("graph: negative vertex count");
  }
  std::unordered_set<int> ids;
  for (const MatchEdge& e : g.edges) {
    if (e.a < 0 || e.a >= g.a_count || e.b < 0 || e.b >= g.b_count) {
      throw std::invalid_argument("graph: edge endpoint out of range");
    }
    if (e.sign != 1 && e.sign != -1) {
      throw std::invalid_argument("graph: edge sign must be +1 or -1");
    }
    if (!ids.insert(e.id).second) {
      throw std::invalid_argument("graph: duplicate edge id");
    }
  }
}

MatchGraph graph_of(const HeegaardDiagram& h) {
  validate_diagram(h);
  MatchGraph g;
  g.a_count = h.genus;
  g.b_count = h.genus;
  int id = 0;
  for (int j = 0; j < h.genus; ++j) {
    for (const IntersectionPoint& p : h.beta_words[j]) {
      g.edges.push_back(MatchEdge{p.alpha, j, p.sign, id++});
    }
  }
  return g;
}

namespace {

// Edge indices (into g.edges) incident to each A-slot, in increasing id
// order when the edge list is id-sorted.
std::vector<std::vector<int>> edges_by_a(const MatchGraph& g) {
  std::vector<std::vector<int>> by_a(g.a_count);
  std::vector<int> order(g.edges.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return g.edges[x].id < g.edges[y].id;
  });
  for (int idx : order) by_a[g.edges[idx].a].push_back(idx);
  return by_a;
}

struct MatchingScan {
  const MatchGraph& g;
  long long cap;
  bool first_only;
  std::vector<std::vector<int>> by_a;
  std::vector<char> b_used;
  Matching current;
  std::vector<Matching> out;

  MatchingScan(const MatchGraph& graph, long long limit, bool stop_at_first)
      : g(graph),
        cap(limit),
        first_only(stop_at_first),
        by_a(edges_by_a(graph)),
        b_used(static_cast<size_t>(graph.b_count), 0),
        current(static_cast<size_t>(graph.a_count), -1) {}

  bool walk(int a) {  // returns true to stop the scan
    if (a == g.a_count) {
      if (static_cast<long long>(out.size()) >= cap) {
        throw ResourceLimitError("enumerate_matchings: more than " +
                                 std::to_string(cap) + " matchings");
      }
      out.push_back(current);
      return first_only;
    }
    for (int idx : by_a[a]) {
      const MatchEdge& e = g.edges[idx];
      if (b_used[e.b]) continue;
      b_used[e.b] = 1;
      current[a] = e.id;
      const bool stop = walk(a + 1);
      b_used[e.b] = 0;
      if (stop) return true;
    }
    return false;
  }
};

}  // namespace

std::vector<Matching> enumerate_matchings(const MatchGraph& g, long long cap) {
  validate_graph(g);
  if (cap < 1) {
    throw std::invalid_argument("enumerate_matchings: cap must be positive");
  }
  if (g.a_count != g.b_count) return {};  // no perfect matchings
  MatchingScan scan(g, cap, false);
  scan.walk(0);
  return std::move(scan.out);
}

std::optional<std::pair<MatchGraph, PruneStep>> prune_leaf(const MatchGraph& g) {
  validate_graph(g);
  std::vector<int> deg_a(g.a_count, 0), deg_b(g.b_count, 0);
  for (const MatchEdge& e : g.edges) {
    ++deg_a[e.a];
    ++deg_b[e.b];
  }
  PruneStep step;
  bool found = false;
  for (int i = 0; i < g.a_count && !found; ++i) {
    if (deg_a[i] != 1) continue;
    for (const MatchEdge& e : g.edges) {
      if (e.a == i) {
        step = PruneStep{i, e.b, 'A'};
        found = true;
        break;
      }
    }
  }
  for (int j = 0; j < g.b_count && !found; ++j) {
    if (deg_b[j] != 1) continue;
    for (const MatchEdge& e : g.edges) {
      if (e.b == j) {
        step = PruneStep{e.a, j, 'B'};
        found = true;
        break;
      }
    }
  }
  if (!found) return std::nullopt;

  MatchGraph reduced;
  reduced.a_count = g.a_count - 1;
  reduced.b_count = g.b_count - 1;
  for (const MatchEdge& e : g.edges) {
    if (e.a == step.a || e.b == step.b) continue;
    MatchEdge kept = e;
    if (kept.a > step.a) --kept.a;
    if (kept.b > step.b) --kept.b;
    reduced.edges.push_back(kept);
  }
  return std::make_pair(std::move(reduced), step);
}

namespace {

void validate_matching(const MatchGraph& g, const Matching& mu) {
  if (g.a_count != g.b_count ||
      static_cast<int>(mu.size()) != g.a_count) {
    throw std::invalid_argument("matching: wrong size for a perfect matching");
  }
  std::vector<char> b_cov(g.b_count, 0);
  for (int a = 0; a < g.a_count; ++a) {
    const MatchEdge* found = nullptr;
    for (const MatchEdge& e : g.edges) {
      if (e.id == mu[a]) {
        found = &e;
        break;
      }
    }
    if (!found || found->a != a) {
      throw std::invalid_argument("matching: edge id not incident to its A-slot");
    }
    if (b_cov[found->b]) {
      throw std::invalid_argument("matching: B vertex covered twice");
    }
    b_cov[found->b] = 1;
  }
}

}  // namespace

std::optional<Matching> second_matching(const MatchGraph& g, const Matching& mu) {
  validate_graph(g);
  validate_matching(g, mu);

  std::unordered_set<int> in_mu(mu.begin(), mu.end());
  // Vertices: A slots 0..a-1, then B slots a..a+b-1.
  const int V = g.a_count + g.b_count;
  std::vector<std::vector<std::pair<int, int>>> out(V);  // (edge idx, head)
  {
    std::vector<int> order(g.edges.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      return g.edges[x].id < g.edges[y].id;
    });
    for (int idx : order) {
      const MatchEdge& e = g.edges[idx];
      if (in_mu.count(e.id)) {
        out[e.a].push_back({idx, g.a_count + e.b});
      } else {
        out[g.a_count + e.b].push_back({idx, e.a});
      }
    }
  }

  // Three-color depth-first search; the first edge into a gray vertex closes
  // a directed cycle.  Walk order: least vertex first, least edge id first.
  enum : char { White, Gray, Black };
  std::vector<char> color(V, White);
  struct Frame {
    int v;
    size_t next = 0;
    int enter_edge = -1;  // edge idx used to reach v
  };
  for (int root = 0; root < V; ++root) {
    if (color[root] != White) continue;
    std::vector<Frame> stack;
    stack.push_back(Frame{root});
    color[root] = Gray;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next == out[f.v].size()) {
        color[f.v] = Black;
        stack.pop_back();
        continue;
      }
      const auto [edge_idx, head] = out[f.v][f.next++];
      if (color[head] == Black) continue;
      if (color[head] == White) {
        color[head] = Gray;
        stack.push_back(Frame{head, 0, edge_idx});
        continue;
      }
      // Gray: the stack from `head` to f.v plus this edge is a cycle.
      size_t base = 0;
      while (stack[base].v != head) ++base;
      Matching result = mu;
      auto swap_in = [&](int idx) {
        const MatchEdge& e = g.edges[idx];
        if (!in_mu.count(e.id)) result[e.a] = e.id;  // replaces A's matched edge
      };
      for (size_t i = base + 1; i < stack.size(); ++i) {
        swap_in(stack[i].enter_edge);
      }
      swap_in(edge_idx);
      return result;
    }
  }
  return std::nullopt;
}

UniquenessReport unique_matching(const MatchGraph& g) {
  validate_graph(g);
  UniquenessReport r;
  if (g.a_count != g.b_count) return r;
  MatchingScan scan(g, 2, true);
  scan.walk(0);
  if (scan.out.empty()) return r;
  r.has_matching = true;
  r.matching = scan.out.front();
  r.second = second_matching(g, *r.matching);
  r.unique = !r.second.has_value();
  return r;
}

S3Verdict recognize_s3(const HeegaardDiagram& h, const Limits& limits) {
  S3Verdict v;
  v.strong = check_strong(h, limits.max_generators);
  if (!v.strong.is_strong) {
    v.outcome = S3Outcome::NotStrongDiagram;
    return v;
  }
  if (*v.strong.h1 != 1) {
    v.outcome = S3Outcome::NotIntegerHomologySphere;
    return v;
  }

  MatchGraph g = graph_of(h);
  // Slot -> original label maps, maintained across deletions so the trace
  // reports original vertex names.
  std::vector<int> orig_a(g.a_count), orig_b(g.b_count);
  for (int i = 0; i < g.a_count; ++i) orig_a[i] = i;
  for (int j = 0; j < g.b_count; ++j) orig_b[j] = j;

  while (auto pruned = prune_leaf(g)) {
    auto& [reduced, step] = *pruned;
    v.trace.push_back(PruneStep{orig_a[step.a], orig_b[step.b], step.side});
    orig_a.erase(orig_a.begin() + step.a);
    orig_b.erase(orig_b.begin() + step.b);
    g = std::move(reduced);
  }
  if (g.a_count == 0 && g.b_count == 0) {
    v.outcome = S3Outcome::IsS3;
    return v;
  }
  // Unreachable for a matching count of one; kept as a loud failure mode.
  v.outcome = S3Outcome::Inconsistent;
  const UniquenessReport u = unique_matching(g);
  if (u.second) v.stalled_second = u.second;
  return v;
}

}  // namespace hg
