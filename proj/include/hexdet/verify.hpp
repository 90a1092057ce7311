#pragma once

#include "hexdet/closed_forms.hpp"
#include "hexdet/combinatorics.hpp"
#include "hexdet/condensation.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hexdet {

using ParamPoint = std::map<std::string, long>;

struct PointOutcome {
    bool pass = false;
    std::string residual;  // pretty-printed nonzero residual on failure
    long millis = 0;
};

struct VerificationReport {
    std::string identity;
    bool conjecture = false;
    std::vector<ParamPoint> grid;
    std::vector<PointOutcome> outcomes;
    long millis = 0;

    bool all_pass() const;
    std::string to_json() const;
};

struct GridOverrides {
    std::optional<long> n_max;
    std::optional<long> r_max;
};

// Every statement of the paper that the harness can check, each with a
// default grid. conj-* entries are checked the same way but flagged.
std::vector<std::string> identity_ids();
bool is_conjecture(const std::string& id);

VerificationReport verify_identity(const std::string& id, const GridOverrides& grid = {},
                                   int workers = 1);

// True iff sum_i coeffs_at(ell)[i] * data[ell+i] = 0 for every window.
// ell_base is the index of data[0] in the caller's numbering.
bool check_recurrence(const std::vector<RationalFunction>& data,
                      const std::function<std::vector<RationalFunction>(long)>& coeffs_at,
                      long ell_base = 0);

// Constant-coefficient convenience overload.
bool check_recurrence(const std::vector<RationalFunction>& data,
                      const std::vector<RationalFunction>& coeffs);

}  // namespace hexdet
