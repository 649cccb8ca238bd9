#include "pdecomp/separators.hpp"

#include <algorithm>
#include <ostream>

#include "pdecomp/errors.hpp"

namespace pdecomp {
namespace {

SeparatorViolation violation(SeparatorViolationKind kind, std::string message,
                             std::size_t group = 0, std::size_t path = 0,
                             VertexId vertex = kNoVertex) {
  return {kind, group, path, vertex, std::move(message)};
}

// Fills separator_vertices, flaps and total_paths from the groups.
void finalize(const WeightedGraph& g, const VertexMask& mask, PathSeparator& sep) {
  VertexMask rest = mask;
  sep.separator_vertices.clear();
  sep.total_paths = 0;
  for (const SeparatorGroup& group : sep.groups) {
    sep.total_paths += group.paths.size();
    for (const Path& p : group.paths) {
      for (VertexId v : p.vertices) {
        if (rest.contains(v)) {
          rest.erase(v);
          sep.separator_vertices.push_back(v);
        }
      }
    }
  }
  std::sort(sep.separator_vertices.begin(), sep.separator_vertices.end());
  sep.flaps.clear();
  for (const auto& comp : components(g, rest)) sep.flaps.push_back(VertexMask::of(g.n(), comp));
}

}  // namespace

std::string_view to_string(SeparatorViolationKind kind) {
  switch (kind) {
    case SeparatorViolationKind::kMalformed: return "malformed";
    case SeparatorViolationKind::kMaskChain: return "mask-chain";
    case SeparatorViolationKind::kPathNotAlive: return "path-not-alive";
    case SeparatorViolationKind::kPathNotWalk: return "path-not-walk";
    case SeparatorViolationKind::kNotShortest: return "not-shortest";
    case SeparatorViolationKind::kVertexSetMismatch: return "vertex-set-mismatch";
    case SeparatorViolationKind::kFlapMismatch: return "flap-mismatch";
    case SeparatorViolationKind::kUnbalanced: return "unbalanced";
  }
  return "unknown";
}

std::optional<SeparatorViolation> validate_separator(const WeightedGraph& g,
                                                     const VertexMask& mask,
                                                     const PathSeparator& sep) {
  using K = SeparatorViolationKind;
  if (mask.universe() != g.n()) return violation(K::kMalformed, "mask universe differs from graph");
  if (sep.groups.empty() && !mask.empty()) return violation(K::kMalformed, "no separator groups");

  VertexMask expected = mask;
  std::vector<VertexId> union_s;
  std::size_t total = 0;
  for (std::size_t j = 0; j < sep.groups.size(); ++j) {
    const SeparatorGroup& group = sep.groups[j];
    if (group.residual_before != expected) {
      return violation(K::kMaskChain,
                       "group " + std::to_string(j) +
                           " residual mask is not the node mask minus earlier groups",
                       j);
    }
    if (group.paths.empty()) return violation(K::kMalformed, "empty group", j);
    total += group.paths.size();

    for (std::size_t i = 0; i < group.paths.size(); ++i) {
      const Path& p = group.paths[i];
      if (p.vertices.empty()) return violation(K::kMalformed, "empty path", j, i);
      for (VertexId v : p.vertices) {
        if (!group.residual_before.contains(v)) {
          return violation(K::kPathNotAlive,
                           "vertex " + std::to_string(v) + " is not alive in G_j", j, i, v);
        }
      }
      auto len = walk_length(g, p.vertices);
      if (!len) return violation(K::kPathNotWalk, "consecutive path vertices not adjacent", j, i);
      if (*len != p.length) {
        return violation(K::kPathNotWalk, "recorded length differs from edge-weight sum", j, i);
      }
      ShortestPathTree t = sssp(g, group.residual_before, p.vertices.front());
      const double d = t.dist[p.vertices.back()];
      if (*len != d) {
        return violation(K::kNotShortest,
                         "path length " + std::to_string(*len) + " exceeds residual distance " +
                             std::to_string(d),
                         j, i, p.vertices.back());
      }
    }
    for (const Path& p : group.paths) {
      for (VertexId v : p.vertices) {
        if (expected.contains(v)) {
          expected.erase(v);
          union_s.push_back(v);
        }
      }
    }
  }
  if (total != sep.total_paths) {
    return violation(K::kMalformed, "total_paths does not match the number of paths");
  }

  std::sort(union_s.begin(), union_s.end());
  if (union_s != sep.separator_vertices) {
    return violation(K::kVertexSetMismatch, "separator_vertices is not the union of the paths");
  }

  auto comps = components(g, expected);
  if (comps.size() != sep.flaps.size()) {
    return violation(K::kFlapMismatch, "flap count " + std::to_string(sep.flaps.size()) +
                                           " differs from component count " +
                                           std::to_string(comps.size()));
  }
  const std::size_t limit = mask.count() / 2;
  for (std::size_t f = 0; f < comps.size(); ++f) {
    if (sep.flaps[f] != VertexMask::of(g.n(), comps[f])) {
      return violation(K::kFlapMismatch, "flap " + std::to_string(f) + " is not a component",
                       0, 0, comps[f].front());
    }
    if (comps[f].size() > limit) {
      return violation(K::kUnbalanced,
                       "flap containing vertex " + std::to_string(comps[f].front()) + " has " +
                           std::to_string(comps[f].size()) + " > " + std::to_string(limit) +
                           " vertices",
                       0, 0, comps[f].front());
    }
  }
  return std::nullopt;
}

PathSeparator greedy_find(const WeightedGraph& g, const VertexMask& mask) {
  if (mask.empty()) throw PreconditionError("greedy_find: empty residual graph");
  if (components(g, mask).size() != 1) {
    throw PreconditionError("greedy_find: residual graph is not connected");
  }

  const std::size_t limit = mask.count() / 2;
  PathSeparator sep;
  VertexMask residual = mask;
  for (;;) {
    auto comps = components(g, residual);
    const std::vector<VertexId>* largest = nullptr;
    for (const auto& c : comps) {
      if (c.size() > limit && (largest == nullptr || c.size() > largest->size())) largest = &c;
    }
    if (largest == nullptr) break;

    const VertexId anchor = largest->front();
    const VertexId u = farthest(g, residual, anchor).first;
    ShortestPathTree t = sssp(g, residual, u);
    VertexId v = u;
    double best = -1.0;
    for (VertexId w : *largest) {
      if (t.dist[w] > best) {
        best = t.dist[w];
        v = w;
      }
    }
    Path path = t.path_to(v);

    SeparatorGroup group{{std::move(path)}, residual};
    for (VertexId w : group.paths.front().vertices) residual.erase(w);
    sep.groups.push_back(std::move(group));
  }
  finalize(g, mask, sep);
  return sep;
}

PathSeparator tree_centroid_find(const WeightedGraph& g, const VertexMask& mask) {
  if (mask.empty()) throw PreconditionError("tree_centroid_find: empty residual graph");
  const std::vector<VertexId> alive = mask.vertices();

  std::size_t edge_count = 0;
  for (VertexId u : alive) {
    for (const Arc& a : g.neighbors(u)) {
      if (a.to > u && mask.contains(a.to)) ++edge_count;
    }
  }
  if (edge_count + 1 != alive.size() || components(g, mask).size() != 1) {
    throw PreconditionError("tree_centroid_find: residual graph is not a tree");
  }

  // Iterative DFS from the smallest vertex for parent pointers and a
  // post-order, then subtree sizes.
  const std::size_t n = g.n();
  std::vector<VertexId> parent(n, kNoVertex);
  std::vector<VertexId> order;
  order.reserve(alive.size());
  std::vector<VertexId> stack{alive.front()};
  std::vector<bool> seen(n, false);
  seen[alive.front()] = true;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    order.push_back(u);
    for (const Arc& a : g.neighbors(u)) {
      if (mask.contains(a.to) && !seen[a.to]) {
        seen[a.to] = true;
        parent[a.to] = u;
        stack.push_back(a.to);
      }
    }
  }
  std::vector<std::size_t> subtree(n, 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (parent[*it] != kNoVertex) subtree[parent[*it]] += subtree[*it];
  }

  const std::size_t total = alive.size();
  VertexId centroid = kNoVertex;
  std::size_t best = total + 1;
  for (VertexId u : alive) {
    std::size_t worst = total - subtree[u];
    for (const Arc& a : g.neighbors(u)) {
      if (mask.contains(a.to) && parent[a.to] == u) worst = std::max(worst, subtree[a.to]);
    }
    if (worst < best) {
      best = worst;
      centroid = u;
    }
  }

  PathSeparator sep;
  sep.groups.push_back({{Path{{centroid}, 0.0}}, mask});
  finalize(g, mask, sep);
  return sep;
}

SeparatorFinder make_finder(FinderKind kind) {
  switch (kind) {
    case FinderKind::kGreedy: return greedy_find;
    case FinderKind::kTreeCentroid: return tree_centroid_find;
  }
  throw ParameterError("unknown finder kind");
}

FinderKind parse_finder(std::string_view name) {
  if (name == "greedy") return FinderKind::kGreedy;
  if (name == "centroid" || name == "tree_centroid") return FinderKind::kTreeCentroid;
  throw ParameterError("unknown finder '" + std::string(name) + "' (expected greedy|centroid)");
}

std::string_view to_string(FinderKind kind) {
  return kind == FinderKind::kGreedy ? "greedy" : "centroid";
}

void write_separator(std::ostream& out, const PathSeparator& sep) {
  for (std::size_t j = 0; j < sep.groups.size(); ++j) {
    for (const Path& p : sep.groups[j].paths) {
      out << "group " << j << ':';
      for (VertexId v : p.vertices) out << ' ' << v;
      out << '\n';
    }
  }
}

}  // namespace pdecomp
