#include "cyclecover/tree_cover.hpp"

#include <algorithm>
#include <set>

#include "cyclecover/errors.hpp"

namespace cyclecover {

Dipath tree_dipath(const BridgeTree& tree, VertexId u, VertexId v) {
  if (u == v) {
    throw PreconditionViolated("degenerate-path",
                               "tree_dipath endpoints must differ");
  }
  std::vector<VertexId> verts = tree_path(tree.edges, u, v);
  Dipath path;
  path.reserve(verts.size() - 1);
  for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
    path.push_back(Arc{verts[i], verts[i + 1], 0});
  }
  return path;
}

DipathFamily path_family(const BridgeTree& tree, const Partition& eta,
                         const Labeling& labeling) {
  std::set<VertexId> leaves = tree.attachment_set();
  if (eta.n() != static_cast<int>(leaves.size())) {
    throw PartitionMismatch("partition sums to " + std::to_string(eta.n()) +
                            " but the tree has " +
                            std::to_string(leaves.size()) + " leaves");
  }

  // The labeling must pair every leaf with a distinct digraph vertex.
  std::vector<VertexId> inverse(static_cast<std::size_t>(eta.n()), -1);
  for (const auto& [leaf, vid] : labeling) {
    if (leaves.count(leaf) == 0) {
      throw Error("labeling mentions " + std::to_string(leaf) +
                  " which is not a leaf of the tree");
    }
    if (vid < 0 || vid >= eta.n() || inverse[static_cast<std::size_t>(vid)] != -1) {
      throw Error("labeling is not a bijection onto the digraph vertices");
    }
    inverse[static_cast<std::size_t>(vid)] = leaf;
  }
  if (labeling.size() != leaves.size()) {
    throw Error("labeling does not cover every leaf of the tree");
  }

  AuxDigraph aux = build_aux(eta);
  DipathFamily family;
  family.reserve(aux.arcs().size());
  for (const Arc& arc : aux.arcs()) {
    VertexId from = inverse[static_cast<std::size_t>(arc.tail)];
    VertexId to = inverse[static_cast<std::size_t>(arc.head)];
    family.push_back(tree_dipath(tree, from, to));
  }
  return family;
}

std::map<EdgePair, int> coverage(const BridgeTree& tree,
                                 const DipathFamily& family) {
  std::map<EdgePair, int> counts;
  for (const EdgePair& e : tree.edges) {
    counts[make_edge(e.first, e.second)] = 0;
  }
  for (const Dipath& path : family) {
    for (const Arc& arc : path) {
      ++counts[make_edge(arc.tail, arc.head)];
    }
  }
  return counts;
}

}  // namespace cyclecover
