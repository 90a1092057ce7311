#pragma once

#include "hexdet/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hexdet {

// Tiling geometry for concrete lambda = mu - 2. The lozenge has width
// lambda+n+s and height n+t; path start points sit at (lambda+s+i-1, 0) and
// end points at (0, t+j-1).
struct RegionSpec {
    long s = 0;
    long t = 0;
    long n = 1;
    long lambda = 0;
};

enum class Step { Up, Left };

// One tuple of lattice paths; paths[k] walks from its start point to its end
// point via (0,1) and (-1,0) steps.
struct PathTuple {
    std::vector<std::vector<Step>> paths;
};

struct EnumerationLimits {
    long max_n = 4;
    long max_area = 60;
};

// Exhaustive count of tuples of pairwise vertex-disjoint paths, with the
// start points indexed by I and the end points indexed by J omitted. This is
// the independent oracle: no determinants anywhere on this code path.
Integer enumerate_path_tuples(const RegionSpec& region, const std::vector<long>& omit_starts,
                              const std::vector<long>& omit_ends,
                              const EnumerationLimits& limits = {});

// Collects the path tuples themselves instead of counting; used for figures.
std::vector<PathTuple> collect_path_tuples(const RegionSpec& region,
                                           const EnumerationLimits& limits = {});

// Signed sum over delta positions of minors of the binomial-only matrix;
// equals the full determinant symbolically.
RationalFunction sum_of_minors(long s, long t, long n);

// Signed (or raw, with apply_signs = false) tiling count over all admissible
// omission patterns; equals D_{s,t}(n) at mu = lambda+2 when signed.
Integer brute_force_count(const RegionSpec& region, bool apply_signs = true,
                          const EnumerationLimits& limits = {});

// SVG (1.1) picture of the lozenge, its 2n cut-out triangles, and, when a
// tuple is supplied, the rhombi its steps induce.
std::string render_region(const RegionSpec& region,
                          const std::optional<PathTuple>& tuple = std::nullopt);

}  // namespace hexdet
