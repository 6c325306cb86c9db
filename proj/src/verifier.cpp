#include "cyclecover/verifier.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <set>
#include <string>

#include "cyclecover/errors.hpp"

namespace cyclecover {

namespace {

int env_int(const char* name, int fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  long value = std::strtol(raw, &end, 10);
  if (end == nullptr || *end != '\0' || value <= 0 || value > 64) return fallback;
  return static_cast<int>(value);
}

}  // namespace

const OracleCaps& oracle_caps() {
  static const OracleCaps caps{env_int("CYCLECOVER_LONGEST_CAP", 18),
                               env_int("CYCLECOVER_LAMBDA_CAP", 20)};
  return caps;
}

std::vector<EdgePair> instance_edges(const Instance& inst) {
  std::set<EdgePair> edges;
  const EdgeSet host_edges = inst.host.edges();
  for (const EdgePair& e : host_edges.edges()) edges.insert(e);
  for (const BridgeTree& b : inst.bridges) {
    for (const EdgePair& e : b.edges) edges.insert(make_edge(e.first, e.second));
  }
  return std::vector<EdgePair>(edges.begin(), edges.end());
}

FeasibilityReport verify_feasible(const Instance& inst, const CycleFamily& fam) {
  FeasibilityReport rep;
  const HostCycle& host = inst.host;

  std::set<EdgePair> allowed;
  for (const EdgePair& e : instance_edges(inst)) allowed.insert(e);
  for (const EdgePair& e : allowed) rep.edge_counts[e] = 0;

  for (int ci = 0; ci < fam.size(); ++ci) {
    const Dicycle& c = fam.dicycles()[ci];
    const EdgeSet cycle_edges = c.edge_set();
    for (const EdgePair& e : cycle_edges.edges()) {
      if (allowed.count(e) == 0) {
        rep.structural_ok = false;
        rep.violations.push_back(
            "dicycle " + std::to_string(ci) + " uses edge {" +
            std::to_string(e.first) + "," + std::to_string(e.second) +
            "} which is not in the instance");
      } else {
        ++rep.edge_counts[e];
      }
    }
  }

  // Host edges must appear in exactly two members, every other edge in at
  // least four.
  rep.c1_ok = true;
  for (const auto& [e, count] : rep.edge_counts) {
    bool on_host = host.has_edge(e.first, e.second);
    if (on_host && count != 2) {
      rep.c1_ok = false;
      rep.violations.push_back("host edge {" + std::to_string(e.first) + "," +
                               std::to_string(e.second) + "} covered " +
                               std::to_string(count) + " times, expected 2");
    }
    if (!on_host && count < 4) {
      rep.c1_ok = false;
      rep.violations.push_back("bridge edge {" + std::to_string(e.first) + "," +
                               std::to_string(e.second) + "} covered " +
                               std::to_string(count) + " times, expected >= 4");
    }
  }

  rep.c2_ok = true;
  for (int ci = 0; ci < fam.size(); ++ci) {
    auto [diff, single] = symdiff_with_host(host, fam.dicycles()[ci]);
    (void)diff;
    rep.c2_single_cycle.push_back(single);
    if (!single) {
      rep.c2_ok = false;
      rep.violations.push_back("dicycle " + std::to_string(ci) +
                               ": symmetric difference with the host is not a "
                               "single cycle");
    }
  }

  rep.c3_ok = true;
  for (int ci = 0; ci < fam.size(); ++ci) {
    const Dicycle& c = fam.dicycles()[ci];
    std::vector<int> per_bridge;
    for (std::size_t bi = 0; bi < inst.bridges.size(); ++bi) {
      int hits = 0;
      for (VertexId a : inst.bridges[bi].attachments) {
        if (c.contains_vertex(a)) ++hits;
      }
      per_bridge.push_back(hits);
      if (hits != 0 && hits != 2) {
        rep.c3_ok = false;
        rep.violations.push_back("dicycle " + std::to_string(ci) +
                                 " meets bridge " + std::to_string(bi) +
                                 " in " + std::to_string(hits) +
                                 " attachments, expected 0 or 2");
      }
    }
    rep.c3_attachment_counts.push_back(std::move(per_bridge));
  }

  rep.c4_ok = true;
  for (const BridgeTree& b : inst.bridges) {
    for (VertexId a : b.attachments) {
      std::vector<VertexId> nbr_list = b.neighbors(a);
      std::set<VertexId> nbrs(nbr_list.begin(), nbr_list.end());
      for (TypeTag tag :
           {TypeTag::t00, TypeTag::t01, TypeTag::t10, TypeTag::t11}) {
        rep.c4_tag_counts[{a, tag}] = 0;
      }
      for (const Dicycle& c : fam.dicycles()) {
        for (TypeTag tag : type_tags(c, a, host, nbrs)) {
          ++rep.c4_tag_counts[{a, tag}];
        }
      }
      for (TypeTag tag :
           {TypeTag::t00, TypeTag::t01, TypeTag::t10, TypeTag::t11}) {
        int count = rep.c4_tag_counts[{a, tag}];
        if (count != 1) {
          rep.c4_ok = false;
          rep.violations.push_back(
              "attachment " + std::to_string(a) + " tag " + to_string(tag) +
              " realized by " + std::to_string(count) +
              " dicycles, expected 1");
        }
      }
    }
  }

  return rep;
}

bool verify_voss(const Instance& inst, const CycleFamily& fam,
                 bool longest_certified) {
  if (!longest_certified) {
    throw NotCertified(
        "length bound requires a longest-cycle certificate for the host");
  }

  bool ok = true;
  for (const Dicycle& c : fam.dicycles()) {
    int on_host = 0;
    int off_host = 0;
    const EdgeSet cycle_edges = c.edge_set();
    for (const EdgePair& e : cycle_edges.edges()) {
      if (inst.host.has_edge(e.first, e.second)) {
        ++on_host;
      } else {
        ++off_host;
      }
    }
    if (off_host > on_host) ok = false;
  }

  int lambda_sum = 0;
  for (const BridgeTree& b : inst.bridges) {
    RawBridge raw{b.edges, b.attachments};
    lambda_sum += lambda_oracle(raw, oracle_caps().lambda_cap);
  }
  if (lambda_sum > inst.host.size() / 2) ok = false;
  return ok;
}

int longest_cycle_len(const std::vector<EdgePair>& graph_edges) {
  std::vector<VertexId> verts;
  for (const EdgePair& e : graph_edges) {
    verts.push_back(e.first);
    verts.push_back(e.second);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  int n = static_cast<int>(verts.size());
  if (n == 0) return 0;
  if (n > oracle_caps().longest_cap) {
    throw TooLarge("longest-cycle search capped at " +
                   std::to_string(oracle_caps().longest_cap) + " vertices, got " +
                   std::to_string(n));
  }

  auto index_of = [&](VertexId v) {
    return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) -
                            verts.begin());
  };
  std::vector<unsigned> adj(static_cast<std::size_t>(n), 0u);
  for (const EdgePair& e : graph_edges) {
    int a = index_of(e.first);
    int b = index_of(e.second);
    if (a == b) continue;
    adj[static_cast<std::size_t>(a)] |= 1u << b;
    adj[static_cast<std::size_t>(b)] |= 1u << a;
  }

  // dp[mask] holds, as a bitmask over vertices, the possible endpoints of a
  // simple path that covers exactly `mask` and starts at mask's lowest bit.
  // Anchoring paths at their minimum vertex enumerates each cycle once.
  std::vector<unsigned> dp(std::size_t{1} << n, 0u);
  for (int v = 0; v < n; ++v) dp[std::size_t{1} << v] = 1u << v;

  int best = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    unsigned ends = dp[mask];
    if (ends == 0) continue;
    int start = std::countr_zero(mask);
    unsigned above_start = ~((1u << (start + 1)) - 1u);
    for (unsigned rest = ends; rest != 0; rest &= rest - 1) {
      int last = std::countr_zero(rest);
      unsigned nexts = adj[static_cast<std::size_t>(last)] & ~mask & above_start;
      for (unsigned nr = nexts; nr != 0; nr &= nr - 1) {
        int nx = std::countr_zero(nr);
        dp[mask | (1u << nx)] |= 1u << nx;
      }
      if ((adj[static_cast<std::size_t>(last)] >> start & 1u) != 0 &&
          std::popcount(mask) >= 3) {
        best = std::max(best, std::popcount(mask));
      }
    }
  }
  return best;
}

}  // namespace cyclecover
