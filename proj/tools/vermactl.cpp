// vermactl: command-line front end for the Verma-module engine.
// Exit codes: 0 success, 1 verification/suite failure, 2 input validation
// error, 3 criterion (precondition) violation.

#include "hv/json_io.hpp"
#include "hv/reduction.hpp"
#include "hv/submodules.hpp"
#include "hv/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace hv;

struct Cli {
    std::string order_arg = R"({"kind":"discrete","matrix":[[1,0],[0,1]]})";
    std::string charge_arg = "0,0,0,0";
    long long window = 6;
    int maxlen = 5;
    long long trials = 100;
    std::uint64_t seed = 0;
    std::string in_path, out_path;
};

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

json load_json_arg(const std::string& arg) {
    // inline JSON (starts with '{' or '[') or a file path
    std::string text = (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) ? arg : slurp(arg);
    return json::parse(text);
}

OrderSpec parse_order(const Cli& cli) {
    return order_from_json(load_json_arg(cli.order_arg));
}

CentralCharge parse_charge(const Cli& cli) {
    std::vector<Rat> cs;
    std::stringstream ss(cli.charge_arg);
    std::string item;
    while (std::getline(ss, item, ',')) cs.push_back(rat_from_string(item));
    if (cs.size() != 4) throw std::invalid_argument("--charge expects c1,c2,c3,c4");
    return {cs[0], cs[1], cs[2], cs[3]};
}

void emit(const Cli& cli, const json& j) {
    std::string text = canonical_dump(j) + "\n";
    if (cli.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(cli.out_path);
        if (!f) throw std::invalid_argument("cannot open " + cli.out_path);
        f << text;
    }
}

ModuleVector load_vector(const Cli& cli) {
    if (cli.in_path.empty()) throw std::invalid_argument("--in <vector.json> is required");
    return vector_from_json(json::parse(slurp(cli.in_path)));
}

int cmd_criterion(const Cli& cli) {
    OrderSpec order = parse_order(cli);
    CentralCharge charge = parse_charge(cli);
    json out{{"irreducible", irreducible(order, charge)},
             {"case", order.is_dense() ? "dense" : "discrete"}};
    if (!order.is_dense()) out["epsilon"] = group_to_json(order.epsilon());
    emit(cli, out);
    return 0;
}

int cmd_act(const Cli& cli, const std::string& elem_arg) {
    ModuleVector v = load_vector(cli);
    LieElement x = lie_from_json(load_json_arg(elem_arg));
    emit(cli, vector_to_json(act_elem(x, v)));
    return 0;
}

int cmd_certify(const Cli& cli) {
    ModuleVector v = load_vector(cli);
    Certificate cert = reduce_to_highest(v);
    emit(cli, certificate_to_json(cert));
    return 0;
}

int cmd_verify(const Cli& cli, const std::string& cert_path) {
    ModuleVector v = load_vector(cli);
    Certificate cert = certificate_from_json(json::parse(slurp(cert_path)));
    bool ok = verify_certificate(v, cert);
    emit(cli, json{{"verified", ok}});
    return ok ? 0 : 1;
}

int cmd_check(const Cli& cli, const std::string& suite) {
    SuiteConfig cfg{parse_order(cli), parse_charge(cli), cli.window, cli.maxlen, cli.trials,
                    cli.seed};
    SuiteReport rep = run_suite(suite, cfg);
    json fails = json::array();
    for (const auto& f : rep.failures)
        fails.push_back({{"trial", f.trial}, {"seed", f.seed}, {"detail", f.detail}});
    emit(cli, json{{"suite", rep.suite},
                   {"trials", rep.trials},
                   {"seed", rep.seed},
                   {"failures", fails},
                   {"pass", rep.pass()}});
    return rep.pass() ? 0 : 1;
}

int cmd_enumerate(const Cli& cli, const std::string& degree_arg) {
    OrderSpec order = parse_order(cli);
    std::stringstream ss(degree_arg);
    std::string sx, sy;
    if (!std::getline(ss, sx, ',') || !std::getline(ss, sy, ','))
        throw std::invalid_argument("--degree expects x,y");
    GroupElement degree{std::stoll(sx), std::stoll(sy)};
    auto basis = enumerate_basis(order, degree, cli.window, cli.maxlen);
    json monos = json::array();
    for (const auto& m : basis) {
        json t = json::array(), e = json::array();
        for (auto a : m.t) t.push_back(group_to_json(a));
        for (auto b : m.e) e.push_back(group_to_json(b));
        monos.push_back({{"t", t}, {"e", e}});
    }
    emit(cli, json{{"degree", group_to_json(degree)},
                   {"window", cli.window},
                   {"maxlen", cli.maxlen},
                   {"count", basis.size()},
                   {"monomials", monos}});
    return 0;
}

int cmd_member(const Cli& cli, const std::string& variant, const std::string& params_arg,
               long long h) {
    ModuleVector v = load_vector(cli);
    SecondaryCase c = secondary_case_from_name(variant);
    bool member;
    if (c == SecondaryCase::prop37_1 || c == SecondaryCase::prop37_2) {
        member = prop37_member(v, c);
    } else {
        WhittakerParams p;
        if (!params_arg.empty()) p = params_from_json(load_json_arg(params_arg));
        p.variant = c;
        member = prop38_member(v, p, h, p.window);
    }
    emit(cli, json{{"variant", variant}, {"member", member}, {"window", cli.window}});
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Verma-module engine for the rank-two Heisenberg-Virasoro algebra"};
    app.require_subcommand(1);

    Cli cli;
    app.add_option("--order", cli.order_arg, "order spec: inline JSON or a file path");
    app.add_option("--charge", cli.charge_arg, "central charge c1,c2,c3,c4 (rationals)");
    app.add_option("--window", cli.window, "truncation window for lattice scans");
    app.add_option("--maxlen", cli.maxlen, "maximum monomial length");
    app.add_option("--trials", cli.trials, "randomized suite trial count");
    app.add_option("--seed", cli.seed, "randomized suite seed");
    app.add_option("--in", cli.in_path, "input vector file");
    app.add_option("--out", cli.out_path, "output file (stdout when absent)");

    auto* criterion = app.add_subcommand("criterion", "decide irreducibility of M(c, order)");
    auto* actcmd = app.add_subcommand("act", "apply a Lie element to a stored vector");
    std::string elem_arg;
    actcmd->add_option("--elem", elem_arg, "Lie element: inline JSON or file")->required();
    auto* certify = app.add_subcommand("certify", "reduce a vector to the highest-weight line");
    auto* verify = app.add_subcommand("verify", "replay a certificate against a vector");
    std::string cert_path;
    verify->add_option("--cert", cert_path, "certificate file")->required();
    auto* checkcmd = app.add_subcommand("check", "run a randomized property suite");
    std::string suite;
    checkcmd->add_option("suite", suite, "one of: jacobi rep grading confluence mu orders prop37 prop38")
        ->required();
    auto* enumerate = app.add_subcommand("enumerate", "list basis monomials of one degree");
    std::string degree_arg;
    enumerate->add_option("--degree", degree_arg, "degree x,y (must be <= 0)")->required();
    auto* member = app.add_subcommand("member", "maximal-submodule membership test");
    std::string variant, params_arg;
    long long h = 0;
    member->add_option("--variant", variant, "prop37_1 | prop37_2 | prop38_ab | prop38_xi")
        ->required();
    member->add_option("--params", params_arg, "Whittaker parameters: inline JSON or file");
    member->add_option("--height", h, "eps'-height h of the vector (prop38)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*criterion) return cmd_criterion(cli);
        if (*actcmd) return cmd_act(cli, elem_arg);
        if (*certify) return cmd_certify(cli);
        if (*verify) return cmd_verify(cli, cert_path);
        if (*checkcmd) return cmd_check(cli, suite);
        if (*enumerate) return cmd_enumerate(cli, degree_arg);
        if (*member) return cmd_member(cli, variant, params_arg, h);
    } catch (const hv::CriterionError& e) {
        std::cerr << "criterion fails: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
