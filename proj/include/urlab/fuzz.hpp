#pragma once

#include "urlab/report.hpp"

namespace urlab::fuzz {

struct FuzzParams {
    std::int64_t trials = 0;
    int max_dim = 8;
    int max_ops = 4;
    int max_states = 3;
    std::uint64_t seed = 0;
    bool mixed = false;        // draw density matrices of random rank
    bool nonhermitian = false; // draw plain Ginibre operators, check S/K lines
    int threads = 1;
    double tol = kDefaultTol;
};

// Randomized soundness sweep. Every trial derives its own sub-seed from
// (seed, trial index), so the outcome is a pure function of the params and
// in particular independent of the thread count.
report::VerdictReport run_fuzz(const FuzzParams& params);

} // namespace urlab::fuzz
