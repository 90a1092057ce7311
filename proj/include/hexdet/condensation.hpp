#pragma once

#include "hexdet/matrix.hpp"

#include <map>
#include <tuple>

namespace hexdet {

// Desnanot-Jacobi-Dodgson engine for the shifted determinants. One session
// owns one memoization cache; sessions share nothing.
class CondensationSession {
public:
    // D_{s,t}(n) through the DJD recursion, with Bareiss as fallback whenever
    // the central divisor D_{s+1,t+1}(n-2) vanishes.
    RationalFunction eval(long s, long t, long n);

private:
    std::map<std::tuple<long, long, long>, RationalFunction> cache_;
};

// Left side minus right side of the DJD identity at (s, t, n), all five
// determinants computed by Bareiss. Identically zero.
RationalFunction djd_residual(long s, long t, long n);

RationalFunction djd_eval(long s, long t, long n);

}  // namespace hexdet
