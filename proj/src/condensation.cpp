#include "hexdet/condensation.hpp"

namespace hexdet {

namespace {

RationalFunction bareiss_det(long s, long t, long n) {
    return determinant(build_matrix({s, t, n, DeltaMode::WithDelta}));
}

}  // namespace

RationalFunction CondensationSession::eval(long s, long t, long n) {
    if (n < 1) throw std::invalid_argument("djd_eval: n must be positive");
    auto key = std::make_tuple(s, t, n);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    RationalFunction value;
    if (n <= 2) {
        value = bareiss_det(s, t, n);
    } else {
        RationalFunction divisor = eval(s + 1, t + 1, n - 2);
        if (divisor.is_zero()) {
            value = bareiss_det(s, t, n);
        } else {
            RationalFunction top = eval(s, t, n - 1) * eval(s + 1, t + 1, n - 1) -
                                   eval(s + 1, t, n - 1) * eval(s, t + 1, n - 1);
            value = top / divisor;
            if (!value.is_polynomial())
                throw std::logic_error("djd_eval: condensation division not exact");
        }
    }
    cache_.emplace(key, value);
    return value;
}

RationalFunction djd_residual(long s, long t, long n) {
    if (n < 3) throw std::invalid_argument("djd_residual: n must be at least 3");
    RationalFunction lhs = bareiss_det(s, t, n) * bareiss_det(s + 1, t + 1, n - 2);
    RationalFunction rhs = bareiss_det(s, t, n - 1) * bareiss_det(s + 1, t + 1, n - 1) -
                           bareiss_det(s + 1, t, n - 1) * bareiss_det(s, t + 1, n - 1);
    return lhs - rhs;
}

RationalFunction djd_eval(long s, long t, long n) {
    CondensationSession session;
    return session.eval(s, t, n);
}

}  // namespace hexdet
