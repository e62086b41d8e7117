#include "urlab/report.hpp"

#include <json.hpp>

#include <cmath>

namespace urlab::report {

using nlohmann::json;

CheckRecord record_from_verdict(const relations::URVerdict& v,
                                std::vector<std::string> op_names,
                                std::vector<std::string> state_names) {
    CheckRecord rec;
    rec.relation = relations::relation_name(v.relation);
    rec.operators = std::move(op_names);
    rec.states = std::move(state_names);
    rec.order = v.order;
    if (v.indices) rec.indices = v.indices->indices;
    rec.lhs = v.lhs;
    rec.rhs = v.rhs;
    rec.margin = v.margin;
    rec.pass = v.pass;
    return rec;
}

void VerdictReport::add(const relations::URVerdict& v, std::vector<std::string> op_names,
                        std::vector<std::string> state_names) {
    checks.push_back(record_from_verdict(v, std::move(op_names), std::move(state_names)));
    if (v.pass) ++passed; else ++failed;
    double scaled = v.margin / v.scale;
    if (checks.size() == 1 || scaled < worst_scaled_margin)
        worst_scaled_margin = scaled;
}

namespace {

json check_to_json(const CheckRecord& c) {
    json j;
    j["relation"] = c.relation;
    j["operators"] = c.operators;
    j["states"] = c.states;
    if (c.order) j["r"] = *c.order;
    if (c.indices) j["indices"] = *c.indices;
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
    j["margin"] = c.margin;
    j["pass"] = c.pass;
    return j;
}

CheckRecord check_from_json(const json& j) {
    CheckRecord c;
    c.relation = j.at("relation").get<std::string>();
    c.operators = j.at("operators").get<std::vector<std::string>>();
    c.states = j.at("states").get<std::vector<std::string>>();
    if (j.contains("r")) c.order = j.at("r").get<int>();
    if (j.contains("indices")) c.indices = j.at("indices").get<std::vector<int>>();
    c.lhs = j.at("lhs").get<double>();
    c.rhs = j.at("rhs").get<double>();
    c.margin = j.at("margin").get<double>();
    c.pass = j.at("pass").get<bool>();
    return c;
}

} // namespace

std::string serialize(const VerdictReport& r) {
    json j;
    j["tool"] = "urlab";
    j["version"] = URLAB_VERSION;
    j["mode"] = r.mode;
    j["tolerance"] = r.tolerance;
    if (r.seed) j["seed"] = *r.seed;
    if (r.fuzz_params) {
        const FuzzParamsEcho& p = *r.fuzz_params;
        j["params"] = {{"trials", p.trials},       {"max_dim", p.max_dim},
                       {"max_ops", p.max_ops},     {"max_states", p.max_states},
                       {"mixed", p.mixed},         {"nonhermitian", p.nonhermitian}};
    }
    if (r.mode == "check") {
        j["checks"] = json::array();
        for (const CheckRecord& c : r.checks)
            j["checks"].push_back(check_to_json(c));
    }
    if (!r.relations.empty()) {
        json rel = json::object();
        for (const auto& [name, s] : r.relations)
            rel[name] = {{"checks", s.checks},
                         {"violations", s.violations},
                         {"worst_scaled_margin", s.worst_scaled_margin}};
        j["relations"] = rel;
    }
    j["summary"] = {{"passed", r.passed},
                    {"failed", r.failed},
                    {"worst_scaled_margin", r.worst_scaled_margin}};
    return j.dump(2) + "\n";
}

VerdictReport parse(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("report is not valid JSON: ") + e.what());
    }
    try {
        VerdictReport r;
        if (j.at("tool").get<std::string>() != "urlab")
            throw InputError("report was not produced by this tool");
        r.mode = j.at("mode").get<std::string>();
        r.tolerance = j.at("tolerance").get<double>();
        if (j.contains("seed")) r.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("params")) {
            FuzzParamsEcho p;
            const json& jp = j.at("params");
            p.trials = jp.at("trials").get<std::int64_t>();
            p.max_dim = jp.at("max_dim").get<int>();
            p.max_ops = jp.at("max_ops").get<int>();
            p.max_states = jp.at("max_states").get<int>();
            p.mixed = jp.at("mixed").get<bool>();
            p.nonhermitian = jp.at("nonhermitian").get<bool>();
            r.fuzz_params = p;
        }
        if (j.contains("checks"))
            for (const json& jc : j.at("checks"))
                r.checks.push_back(check_from_json(jc));
        if (j.contains("relations"))
            for (const auto& [name, js] : j.at("relations").items()) {
                RelationSummary s;
                s.checks = js.at("checks").get<std::int64_t>();
                s.violations = js.at("violations").get<std::int64_t>();
                s.worst_scaled_margin = js.at("worst_scaled_margin").get<double>();
                r.relations[name] = s;
            }
        const json& sum = j.at("summary");
        r.passed = sum.at("passed").get<std::int64_t>();
        r.failed = sum.at("failed").get<std::int64_t>();
        r.worst_scaled_margin = sum.at("worst_scaled_margin").get<double>();
        return r;
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed report: ") + e.what());
    }
}

bool operator==(const CheckRecord& a, const CheckRecord& b) {
    return a.relation == b.relation && a.operators == b.operators && a.states == b.states &&
           a.order == b.order && a.indices == b.indices && a.lhs == b.lhs && a.rhs == b.rhs &&
           a.margin == b.margin && a.pass == b.pass;
}

bool operator==(const RelationSummary& a, const RelationSummary& b) {
    return a.checks == b.checks && a.violations == b.violations &&
           a.worst_scaled_margin == b.worst_scaled_margin;
}

bool operator==(const FuzzParamsEcho& a, const FuzzParamsEcho& b) {
    return a.trials == b.trials && a.max_dim == b.max_dim && a.max_ops == b.max_ops &&
           a.max_states == b.max_states && a.mixed == b.mixed &&
           a.nonhermitian == b.nonhermitian;
}

bool operator==(const VerdictReport& a, const VerdictReport& b) {
    return a.mode == b.mode && a.tolerance == b.tolerance && a.seed == b.seed &&
           a.fuzz_params == b.fuzz_params && a.checks == b.checks &&
           a.relations == b.relations && a.passed == b.passed && a.failed == b.failed &&
           a.worst_scaled_margin == b.worst_scaled_margin;
}

} // namespace urlab::report
