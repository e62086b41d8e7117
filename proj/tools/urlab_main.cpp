#include "urlab/fuzz.hpp"
#include "urlab/grid.hpp"
#include "urlab/problem.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

// Exit codes: 0 all checks pass, 1 an inequality failed or a demo
// classification mismatched, 2 input or usage error.
constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

double tolerance_from_env() {
    const char* env = std::getenv("UR_LAB_TOL");
    if (!env || !*env) return urlab::kDefaultTol;
    char* end = nullptr;
    double tol = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(tol > 0.0))
        throw urlab::InputError("UR_LAB_TOL must be a positive decimal literal");
    return tol;
}

int cmd_check(const std::string& path, double tol) {
    std::ifstream in(path);
    if (!in) throw urlab::InputError("cannot open problem file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    urlab::problem::ProblemFile pf = urlab::problem::parse_problem(buf.str());
    urlab::report::VerdictReport rep = urlab::problem::run_problem(pf, tol);
    std::cout << urlab::report::serialize(rep);
    return rep.all_pass() ? kExitPass : kExitViolation;
}

int cmd_fuzz(const urlab::fuzz::FuzzParams& params) {
    urlab::report::VerdictReport rep = urlab::fuzz::run_fuzz(params);
    std::cout << urlab::report::serialize(rep);
    return rep.all_pass() ? kExitPass : kExitViolation;
}

int cmd_demo_domain(const std::vector<int>& levels, const std::string& function) {
    using namespace urlab::grid;
    ScalarFunction f;
    double x_min = 0.0, x_max = 0.0;
    bool expect_divergent_product = false;
    if (function == "triangle") {
        f = triangle_function();
        x_min = -1.0;
        x_max = 1.0;
        expect_divergent_product = true;
    } else if (function == "gaussian") {
        f = gaussian_function();
        x_min = -8.0;
        x_max = 8.0;
    } else {
        throw urlab::InputError("unknown function '" + function +
                                "', expected triangle or gaussian");
    }

    DivergenceStudy study = kink_divergence_study(f, x_min, x_max, levels);
    std::printf("function: %s\n", function.c_str());
    std::printf("%8s  %12s  %18s  %18s\n", "N", "h", "||p^2 psi||^2", "generalized (dp)^2");
    for (const RefinementLevel& lvl : study.levels)
        std::printf("%8d  %12.6e  %18.12e  %18.12e\n", lvl.n_points, lvl.h, lvl.p2_norm_sq,
                    lvl.generalized_var_p);
    std::printf("product-form: %s\n", convergence_name(study.product_form));
    std::printf("generalized: %s\n", convergence_name(study.generalized));

    const bool product_ok = expect_divergent_product
                                ? study.product_form == Convergence::Divergent
                                : study.product_form == Convergence::Convergent;
    const bool generalized_ok = study.generalized == Convergence::Convergent;
    return (product_ok && generalized_ok) ? kExitPass : kExitViolation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"uncertainty-relation verification toolbox"};
    app.require_subcommand(1);

    std::string problem_path;
    CLI::App* check = app.add_subcommand("check", "evaluate the checks in a problem file");
    check->add_option("file", problem_path, "problem file (JSON)")->required();

    urlab::fuzz::FuzzParams params;
    params.threads = static_cast<int>(std::thread::hardware_concurrency());
    if (params.threads < 1) params.threads = 1;
    CLI::App* fuzz = app.add_subcommand("fuzz", "randomized soundness sweep");
    fuzz->add_option("--trials", params.trials, "number of trials")->required();
    fuzz->add_option("--seed", params.seed, "master seed")->required();
    fuzz->add_option("--max-dim", params.max_dim, "largest Hilbert space dimension");
    fuzz->add_option("--max-ops", params.max_ops, "largest operator count");
    fuzz->add_option("--max-states", params.max_states, "largest state count");
    fuzz->add_flag("--mixed", params.mixed, "draw density matrices of random rank");
    fuzz->add_flag("--nonhermitian", params.nonhermitian,
                   "draw non-Hermitian operators and check the S/K lines");
    fuzz->add_option("--threads", params.threads, "worker threads (does not affect output)");

    std::string levels_csv = "129,257,513,1025";
    std::string function = "triangle";
    CLI::App* demo = app.add_subcommand("demo-domain", "grid refinement study of p and p^2");
    demo->add_option("--levels", levels_csv, "comma-separated grid sizes (at least 3)");
    demo->add_option("--function", function, "triangle or gaussian");

    try {
        app.parse(argc, argv);
        double tol = tolerance_from_env();
        params.tol = tol;
        if (check->parsed()) return cmd_check(problem_path, tol);
        if (fuzz->parsed()) return cmd_fuzz(params);
        if (demo->parsed()) {
            std::vector<int> levels;
            std::stringstream ss(levels_csv);
            std::string item;
            while (std::getline(ss, item, ',')) {
                try {
                    std::size_t used = 0;
                    int v = std::stoi(item, &used);
                    if (used != item.size()) throw std::invalid_argument(item);
                    levels.push_back(v);
                } catch (const std::exception&) {
                    throw urlab::InputError("--levels entries must be integers");
                }
            }
            return cmd_demo_domain(levels, function);
        }
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e); // prints help, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const urlab::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
}
