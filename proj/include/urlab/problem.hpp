#pragma once

#include "urlab/report.hpp"

#include <map>

namespace urlab::problem {

struct NamedOperator {
    ComplexMatrix matrix;
    bool hermitian = false;
};

struct CheckEntry {
    relations::RelationId relation{};
    std::vector<std::string> operators;
    std::vector<std::string> states;
    std::optional<int> order;
    std::optional<IndexSet> indices;
};

// Parsed problem document. Exactly one of dim / mode_dims is present;
// complex numbers are [re, im] pairs and matrices are row-major arrays of
// rows. Validation happens at parse time and throws InputError with the
// offending name or check position in the message.
struct ProblemFile {
    std::optional<int> dim;
    std::optional<std::array<int, 2>> mode_dims;
    std::map<std::string, NamedOperator> operators;
    std::map<std::string, State> states;
    std::vector<CheckEntry> checks;

    int total_dim() const {
        return dim ? *dim : (*mode_dims)[0] * (*mode_dims)[1];
    }
};

ProblemFile parse_problem(const std::string& json_text);

// Evaluate every check in order and assemble a "check" report.
report::VerdictReport run_problem(const ProblemFile& pf, double tol = kDefaultTol);

} // namespace urlab::problem
