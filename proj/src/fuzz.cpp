#include "urlab/fuzz.hpp"

#include "urlab/linalg.hpp"

#include <algorithm>
#include <random>
#include <thread>

namespace urlab::fuzz {

using relations::RelationId;
using relations::URVerdict;

namespace {

struct TrialTally {
    std::map<std::string, report::RelationSummary> relations;

    void add(const URVerdict& v) {
        report::RelationSummary& s = relations[relations::relation_name(v.relation)];
        double scaled = v.margin / v.scale;
        if (s.checks == 0 || scaled < s.worst_scaled_margin)
            s.worst_scaled_margin = scaled;
        ++s.checks;
        if (!v.pass) ++s.violations;
    }
};

// Up to `cap` index sets over 1..n; exhaustive when the total count fits.
std::vector<IndexSet> sample_index_sets(int n, int cap, std::mt19937_64& rng) {
    std::int64_t total = (1LL << n) - 1;
    if (total <= cap) {
        std::vector<IndexSet> all;
        for (int r = 1; r <= n; ++r)
            for (IndexSet& s : linalg::index_sets_of_order(n, r))
                all.push_back(std::move(s));
        return all;
    }
    std::vector<IndexSet> out;
    std::uniform_int_distribution<int> order_dist(1, n);
    for (int i = 0; i < cap; ++i) {
        int r = order_dist(rng);
        std::vector<int> pool(n);
        for (int k = 0; k < n; ++k) pool[k] = k + 1;
        for (int k = 0; k < r; ++k) {
            std::uniform_int_distribution<int> pick(k, n - 1);
            std::swap(pool[k], pool[pick(rng)]);
        }
        std::vector<int> idx(pool.begin(), pool.begin() + r);
        std::sort(idx.begin(), idx.end());
        out.push_back(IndexSet(std::move(idx)));
    }
    return out;
}

TrialTally run_trial(const FuzzParams& params, std::int64_t trial) {
    std::mt19937_64 rng(states::derive_seed(params.seed, static_cast<std::uint64_t>(trial)));
    std::uniform_int_distribution<int> dim_dist(2, params.max_dim);
    std::uniform_int_distribution<int> ops_dist(1, params.max_ops);
    std::uniform_int_distribution<int> states_dist(1, params.max_states);

    const int dim = dim_dist(rng);
    const int n = ops_dist(rng);
    const int m = states_dist(rng);

    std::vector<ComplexMatrix> mats;
    for (int i = 0; i < n; ++i)
        mats.push_back(params.nonhermitian ? states::random_operator(dim, rng())
                                           : states::random_hermitian(dim, rng()));
    OperatorSet ops = OperatorSet::create(std::move(mats));

    std::vector<State> states_drawn;
    for (int i = 0; i < m; ++i) {
        if (params.mixed) {
            std::uniform_int_distribution<int> rank_dist(1, dim);
            int rank = rank_dist(rng);
            states_drawn.emplace_back(states::random_density(dim, rank, rng()));
        } else {
            states_drawn.emplace_back(states::random_pure(dim, rng()));
        }
    }

    TrialTally tally;
    const double tol = params.tol;
    std::vector<IndexSet> idx_sets = sample_index_sets(n, 20, rng);

    if (!params.nonhermitian) {
        auto input = relations::MultiStateInput::create(ops, states_drawn);
        for (const State& s : states_drawn) {
            auto single = relations::MultiStateInput::create(ops, {s});
            tally.add(relations::check_robertson(single, tol));
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    tally.add(relations::check_schrodinger(ops.ops[i], ops.ops[j], s, tol));
        }
        for (int r = 1; r <= n; ++r)
            tally.add(relations::check_char_ur_multistate(input, r, tol));

        std::vector<ComplexMatrix> gammas;
        for (const State& s : states_drawn)
            gammas.push_back(uncertainty::gram_robertson(
                ops, s,
                state_is_pure(s) ? uncertainty::GramPath::PureGram
                                 : uncertainty::GramPath::MixedTrace));
        for (int r = 1; r <= n; ++r)
            tally.add(relations::check_gram_superadditivity(gammas, r, tol));

        for (const IndexSet& idx : idx_sets) {
            auto [first, second] = relations::check_minor_urs(input, idx, tol);
            tally.add(first);
            tally.add(second);
        }

        if (n >= 2)
            for (int mu = 0; mu < m; ++mu)
                for (int nu = mu + 1; nu < m; ++nu)
                    for (int i = 0; i < n; ++i)
                        for (int j = i + 1; j < n; ++j)
                            tally.add(relations::check_entangled_pair(
                                ops.ops[i], ops.ops[j], states_drawn[mu], states_drawn[nu],
                                tol));
    } else {
        std::vector<ComplexMatrix> gammas;
        for (const State& s : states_drawn)
            gammas.push_back(uncertainty::gram_robertson(
                ops, s,
                state_is_pure(s) ? uncertainty::GramPath::PureGram
                                 : uncertainty::GramPath::MixedTrace));
        for (int r = 1; r <= n; ++r) {
            tally.add(relations::check_char_ur_gram(gammas, r, tol));
            tally.add(relations::check_gram_superadditivity(gammas, r, tol));
        }
        for (const IndexSet& idx : idx_sets) {
            auto [first, second] = relations::check_minor_gram(gammas, idx, tol);
            tally.add(first);
            tally.add(second);
        }
    }
    return tally;
}

void merge(std::map<std::string, report::RelationSummary>& into, const TrialTally& tally) {
    for (const auto& [name, s] : tally.relations) {
        report::RelationSummary& dst = into[name];
        if (dst.checks == 0 || s.worst_scaled_margin < dst.worst_scaled_margin)
            dst.worst_scaled_margin = s.worst_scaled_margin;
        dst.checks += s.checks;
        dst.violations += s.violations;
    }
}

} // namespace

report::VerdictReport run_fuzz(const FuzzParams& params) {
    if (params.trials < 1) throw InputError("fuzz requires trials >= 1");
    if (params.max_dim < 2) throw InputError("fuzz requires max_dim >= 2");
    if (params.max_ops < 1 || params.max_states < 1)
        throw InputError("fuzz requires max_ops >= 1 and max_states >= 1");
    int threads = std::max(1, params.threads);

    // One tally per trial, merged in trial order afterwards, so scheduling
    // cannot influence the report.
    std::vector<TrialTally> tallies(static_cast<std::size_t>(params.trials));
    auto worker = [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t t = begin; t < end; ++t)
            tallies[static_cast<std::size_t>(t)] = run_trial(params, t);
    };
    if (threads == 1 || params.trials < 2) {
        worker(0, params.trials);
    } else {
        std::vector<std::thread> pool;
        std::int64_t chunk = (params.trials + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            std::int64_t begin = t * chunk;
            std::int64_t end = std::min<std::int64_t>(params.trials, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(worker, begin, end);
        }
        for (std::thread& th : pool) th.join();
    }

    report::VerdictReport rep;
    rep.mode = "fuzz";
    rep.tolerance = params.tol;
    rep.seed = params.seed;
    rep.fuzz_params = report::FuzzParamsEcho{params.trials,     params.max_dim,
                                             params.max_ops,    params.max_states,
                                             params.mixed,      params.nonhermitian};
    for (const TrialTally& tally : tallies)
        merge(rep.relations, tally);
    bool first = true;
    for (const auto& [name, s] : rep.relations) {
        rep.passed += s.checks - s.violations;
        rep.failed += s.violations;
        if (first || s.worst_scaled_margin < rep.worst_scaled_margin) {
            rep.worst_scaled_margin = s.worst_scaled_margin;
            first = false;
        }
    }
    return rep;
}

} // namespace urlab::fuzz
