#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclecover/bridges.hpp"

namespace cyclecover {

struct GenParams {
    int host_len = 24;
    int bridge_count = 3;
    int max_leaves_per_bridge = 3;
    int max_internal_per_bridge = 2;
    std::uint64_t seed = 0;
};

// Small counter-based generator (splitmix64). Stable across platforms, which
// the determinism contract of the command-line tool depends on; substreams
// derived with split() are independent of how much of the parent was consumed.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);
    std::uint64_t next();
    int below(int n);  // uniform on [0, n), rejection sampled
    Rng split(std::uint64_t tag) const;

  private:
    std::uint64_t seed_;
    std::uint64_t state_;
};

// Seeded instance with bridge_count tree bridges whose overlap graph is a
// random recursive tree. Throws GenerationFailed when the parameters are out
// of range or placement cannot be completed.
Instance gen_random(const GenParams& params);

// 2k-cycle with k pairwise chords whose lambda total meets the host bound
// with equality.
Instance gen_extremal(int k);

// The complete bipartite graph on parts of size 2 and 3, presented as a
// 4-cycle host with one path bridge.
Instance gen_k23();

// Well-formed documents that construct() must reject, with the reason token
// it must reject them for.
struct NegativeCase {
    std::string name;
    Instance instance;
    std::string expected_rejection;
    std::string note;
};
std::vector<NegativeCase> gen_negatives();

}  // namespace cyclecover
