#include "urlab/problem.hpp"

#include "urlab/linalg.hpp"

#include <json.hpp>

namespace urlab::problem {

using nlohmann::json;
using relations::RelationId;

namespace {

Complex parse_complex(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw InputError(where + ": complex numbers must be [re, im] pairs");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

ComplexVector parse_vector(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty())
        throw InputError(where + ": expected a non-empty array of [re, im] pairs");
    ComplexVector v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        v[static_cast<Eigen::Index>(i)] = parse_complex(j[i], where);
    return v;
}

ComplexMatrix parse_matrix(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty())
        throw InputError(where + ": expected a non-empty array of rows");
    const std::size_t n = j.size();
    ComplexMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        const json& row = j[r];
        if (!row.is_array() || row.size() != n)
            throw InputError(where + ": matrix must be square, row " + std::to_string(r) +
                             " has the wrong length");
        for (std::size_t c = 0; c < n; ++c)
            m(r, c) = parse_complex(row[c], where);
    }
    return m;
}

} // namespace

ProblemFile parse_problem(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("problem file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw InputError("problem file must be a JSON object");

    try {
    ProblemFile pf;
    if (j.contains("dim") == j.contains("mode_dims"))
        throw InputError("problem file must declare exactly one of dim / mode_dims");
    if (j.contains("dim")) {
        if (!j["dim"].is_number_integer() || j["dim"].get<int>() < 1)
            throw InputError("dim must be a positive integer");
        pf.dim = j["dim"].get<int>();
    } else {
        const json& md = j["mode_dims"];
        if (!md.is_array() || md.size() != 2 || !md[0].is_number_integer() ||
            !md[1].is_number_integer())
            throw InputError("mode_dims must be a two-element integer array");
        pf.mode_dims = {md[0].get<int>(), md[1].get<int>()};
        if ((*pf.mode_dims)[0] < 2 || (*pf.mode_dims)[1] < 2)
            throw InputError("mode_dims entries must be >= 2");
    }
    const int dim = pf.total_dim();

    if (j.contains("operators")) {
        if (!j["operators"].is_object())
            throw InputError("operators must be an object of named entries");
        for (const auto& [name, jop] : j["operators"].items()) {
            if (!jop.is_object() || !jop.contains("matrix") || !jop.contains("hermitian"))
                throw InputError("operator '" + name + "' needs matrix and hermitian fields");
            NamedOperator op;
            op.matrix = parse_matrix(jop["matrix"], "operator '" + name + "'");
            if (op.matrix.rows() != dim)
                throw InputError("operator '" + name + "' has dimension " +
                                 std::to_string(op.matrix.rows()) + ", expected " +
                                 std::to_string(dim));
            if (!jop["hermitian"].is_boolean())
                throw InputError("operator '" + name + "': hermitian must be a boolean");
            op.hermitian = jop["hermitian"].get<bool>();
            if (op.hermitian && !linalg::is_hermitian(op.matrix, 1e-12))
                throw InputError("operator '" + name +
                                 "' is flagged hermitian but fails the Hermiticity check "
                                 "(1e-12 entrywise)");
            pf.operators.emplace(name, std::move(op));
        }
    }

    if (j.contains("states")) {
        if (!j["states"].is_object())
            throw InputError("states must be an object of named entries");
        for (const auto& [name, js] : j["states"].items()) {
            const std::string where = "state '" + name + "'";
            if (!js.is_object() || (js.contains("pure") == js.contains("density")))
                throw InputError(where + " needs exactly one of pure / density");
            try {
                if (js.contains("pure")) {
                    ComplexVector v = parse_vector(js["pure"], where);
                    if (v.size() != dim)
                        throw InputError(where + " has dimension " + std::to_string(v.size()) +
                                         ", expected " + std::to_string(dim));
                    pf.states.emplace(name, PureState::from_vector(std::move(v)));
                } else {
                    ComplexMatrix m = parse_matrix(js["density"], where);
                    if (m.rows() != dim)
                        throw InputError(where + " has dimension " + std::to_string(m.rows()) +
                                         ", expected " + std::to_string(dim));
                    pf.states.emplace(name, DensityMatrix::from_matrix(std::move(m)));
                }
            } catch (const InputError& e) {
                throw InputError(where + ": " + e.what());
            }
        }
    }

    if (!j.contains("checks") || !j["checks"].is_array() || j["checks"].empty())
        throw InputError("problem file needs a non-empty checks array");
    int pos = 0;
    for (const json& jc : j["checks"]) {
        ++pos;
        const std::string where = "check #" + std::to_string(pos);
        if (!jc.is_object() || !jc.contains("relation"))
            throw InputError(where + ": each check needs a relation field");
        CheckEntry entry;
        const std::string rel = jc["relation"].get<std::string>();
        auto id = relations::relation_from_name(rel);
        if (!id) throw InputError(where + ": unknown relation '" + rel + "'");
        entry.relation = *id;
        if (jc.contains("operators"))
            entry.operators = jc["operators"].get<std::vector<std::string>>();
        if (jc.contains("states"))
            entry.states = jc["states"].get<std::vector<std::string>>();
        if (jc.contains("r")) entry.order = jc["r"].get<int>();
        if (jc.contains("indices"))
            entry.indices = IndexSet(jc["indices"].get<std::vector<int>>());
        for (const std::string& op : entry.operators)
            if (!pf.operators.count(op))
                throw InputError(where + ": unknown operator '" + op + "'");
        for (const std::string& st : entry.states)
            if (!pf.states.count(st))
                throw InputError(where + ": unknown state '" + st + "'");
        pf.checks.push_back(std::move(entry));
    }
    return pf;
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed problem file: ") + e.what());
    }
}

namespace {

struct ResolvedCheck {
    OperatorSet ops;
    std::vector<State> states;
};

ResolvedCheck resolve(const ProblemFile& pf, const CheckEntry& entry, const std::string& where,
                      bool need_hermitian) {
    if (entry.operators.empty())
        throw InputError(where + ": at least one operator is required");
    std::vector<ComplexMatrix> mats;
    std::vector<bool> flags;
    for (const std::string& name : entry.operators) {
        const NamedOperator& op = pf.operators.at(name);
        if (need_hermitian && !op.hermitian)
            throw InputError(where + ": operator '" + name + "' must be hermitian here");
        mats.push_back(op.matrix);
        flags.push_back(op.hermitian);
    }
    std::vector<State> states;
    for (const std::string& name : entry.states)
        states.push_back(pf.states.at(name));
    return ResolvedCheck{OperatorSet::create(std::move(mats), std::move(flags)),
                         std::move(states)};
}

void require_counts(const CheckEntry& entry, const std::string& where, int n_ops, int n_states) {
    if (n_ops >= 0 && static_cast<int>(entry.operators.size()) != n_ops)
        throw InputError(where + ": expected " + std::to_string(n_ops) + " operators, got " +
                         std::to_string(entry.operators.size()));
    if (n_states >= 0 && static_cast<int>(entry.states.size()) != n_states)
        throw InputError(where + ": expected " + std::to_string(n_states) + " states, got " +
                         std::to_string(entry.states.size()));
}

std::vector<ComplexMatrix> gram_per_state(const ResolvedCheck& rc) {
    std::vector<ComplexMatrix> gammas;
    for (const State& s : rc.states)
        gammas.push_back(uncertainty::gram_robertson(
            rc.ops, s,
            state_is_pure(s) ? uncertainty::GramPath::PureGram
                             : uncertainty::GramPath::MixedTrace));
    return gammas;
}

bool all_hermitian(const ProblemFile& pf, const CheckEntry& entry) {
    for (const std::string& name : entry.operators)
        if (!pf.operators.at(name).hermitian) return false;
    return true;
}

} // namespace

report::VerdictReport run_problem(const ProblemFile& pf, double tol) {
    report::VerdictReport rep;
    rep.mode = "check";
    rep.tolerance = tol;

    int pos = 0;
    for (const CheckEntry& entry : pf.checks) {
        ++pos;
        const std::string where =
            "check #" + std::to_string(pos) + " (" + relations::relation_name(entry.relation) + ")";
        switch (entry.relation) {
            case RelationId::RUR: {
                require_counts(entry, where, -1, 1);
                ResolvedCheck rc = resolve(pf, entry, where, true);
                auto input = relations::MultiStateInput::create(rc.ops, rc.states);
                rep.add(relations::check_robertson(input, tol), entry.operators, entry.states);
                break;
            }
            case RelationId::SUR: {
                require_counts(entry, where, 2, 1);
                ResolvedCheck rc = resolve(pf, entry, where, true);
                rep.add(relations::check_schrodinger(rc.ops.ops[0], rc.ops.ops[1],
                                                     rc.states[0], tol),
                        entry.operators, entry.states);
                break;
            }
            case RelationId::EUR1: {
                if (!entry.order) throw InputError(where + ": r is required");
                if (entry.states.empty()) throw InputError(where + ": states are required");
                if (all_hermitian(pf, entry)) {
                    ResolvedCheck rc = resolve(pf, entry, where, true);
                    auto input = relations::MultiStateInput::create(rc.ops, rc.states);
                    rep.add(relations::check_char_ur_multistate(input, *entry.order, tol),
                            entry.operators, entry.states);
                } else {
                    ResolvedCheck rc = resolve(pf, entry, where, false);
                    rep.add(relations::check_char_ur_gram(gram_per_state(rc), *entry.order, tol),
                            entry.operators, entry.states);
                }
                break;
            }
            case RelationId::EUR2: {
                if (!entry.order) throw InputError(where + ": r is required");
                if (entry.states.empty()) throw InputError(where + ": states are required");
                ResolvedCheck rc = resolve(pf, entry, where, false);
                rep.add(relations::check_gram_superadditivity(gram_per_state(rc), *entry.order,
                                                              tol),
                        entry.operators, entry.states);
                break;
            }
            case RelationId::MINOR_SIGMA_KAPPA:
            case RelationId::MINOR_GRAM_SUPERADD: {
                if (!entry.indices) throw InputError(where + ": indices are required");
                if (entry.states.empty()) throw InputError(where + ": states are required");
                const bool first = entry.relation == RelationId::MINOR_SIGMA_KAPPA;
                if (all_hermitian(pf, entry)) {
                    ResolvedCheck rc = resolve(pf, entry, where, true);
                    auto input = relations::MultiStateInput::create(rc.ops, rc.states);
                    auto pair = relations::check_minor_urs(input, *entry.indices, tol);
                    rep.add(first ? pair.first : pair.second, entry.operators, entry.states);
                } else {
                    ResolvedCheck rc = resolve(pf, entry, where, false);
                    auto pair =
                        relations::check_minor_gram(gram_per_state(rc), *entry.indices, tol);
                    rep.add(first ? pair.first : pair.second, entry.operators, entry.states);
                }
                break;
            }
            case RelationId::SHEUR: {
                require_counts(entry, where, 2, 2);
                ResolvedCheck rc = resolve(pf, entry, where, true);
                rep.add(relations::check_entangled_pair(rc.ops.ops[0], rc.ops.ops[1],
                                                        rc.states[0], rc.states[1], tol),
                        entry.operators, entry.states);
                break;
            }
            case RelationId::NEWUR:
            case RelationId::DETS_DETK: {
                if (!pf.mode_dims)
                    throw InputError(where + ": requires a mode_dims problem file");
                if (!entry.operators.empty())
                    throw InputError(where + ": operators are built internally, list none");
                require_counts(entry, where, 0, 1);
                const State& st = pf.states.at(entry.states[0]);
                auto res = relations::check_two_mode_new_ur(st, *pf.mode_dims, tol);
                rep.add(entry.relation == RelationId::NEWUR ? res.new_ur : res.det_s_det_k,
                        {}, entry.states);
                break;
            }
        }
    }
    return rep;
}

} // namespace urlab::problem
