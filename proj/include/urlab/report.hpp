#pragma once

#include "urlab/relations.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace urlab::report {

// One evaluated check, with the input names it was built from.
struct CheckRecord {
    std::string relation;
    std::vector<std::string> operators;
    std::vector<std::string> states;
    std::optional<int> order;
    std::optional<std::vector<int>> indices;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool pass = false;
};

// Aggregate over many fuzz checks of one relation.
struct RelationSummary {
    std::int64_t checks = 0;
    std::int64_t violations = 0;
    double worst_scaled_margin = 0.0; // min of margin / scale
};

struct FuzzParamsEcho {
    std::int64_t trials = 0;
    int max_dim = 0;
    int max_ops = 0;
    int max_states = 0;
    bool mixed = false;
    bool nonhermitian = false;
};

// Serializable outcome of a check or fuzz run. Serialization is
// deterministic: fixed key order, shortest round-trip doubles. The thread
// count is deliberately absent so reports are byte-identical across
// schedules.
struct VerdictReport {
    std::string mode; // "check" or "fuzz"
    double tolerance = kDefaultTol;
    std::optional<std::uint64_t> seed;
    std::optional<FuzzParamsEcho> fuzz_params;
    std::vector<CheckRecord> checks;                    // check mode
    std::map<std::string, RelationSummary> relations;   // fuzz mode
    std::int64_t passed = 0;
    std::int64_t failed = 0;
    double worst_scaled_margin = 0.0;

    void add(const relations::URVerdict& v, std::vector<std::string> op_names,
             std::vector<std::string> state_names);
    bool all_pass() const { return failed == 0; }
};

CheckRecord record_from_verdict(const relations::URVerdict& v,
                                std::vector<std::string> op_names,
                                std::vector<std::string> state_names);

std::string serialize(const VerdictReport& r);
VerdictReport parse(const std::string& json_text);

bool operator==(const CheckRecord& a, const CheckRecord& b);
bool operator==(const RelationSummary& a, const RelationSummary& b);
bool operator==(const FuzzParamsEcho& a, const FuzzParamsEcho& b);
bool operator==(const VerdictReport& a, const VerdictReport& b);

} // namespace urlab::report
