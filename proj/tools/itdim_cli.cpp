// Command-line front end. Talks to the engine only through the C interface.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "itdim/itdim.h"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// One-line rendering of a report: status plus the headline value if any.
std::string summary(const std::string& json) {
    const auto j = nlohmann::ordered_json::parse(json);
    std::string out = j.value("command", "") + ": " + j.value("status", "");
    if (j.contains("error")) return out + " (" + j["error"].value("message", "") + ")";
    if (!j.contains("result")) return out;
    const auto& r = j["result"];
    if (r.contains("value")) out += ", value " + r["value"]["value"].dump();
    for (const char* key : {"pd", "injdim", "resdim"})
        if (r.contains(key)) {
            out += std::string(", ") + key + " " + r[key].value("kind", "");
            if (r[key].contains("value")) out += " " + r[key]["value"]["value"].dump();
        }
    if (r.contains("verdict")) out += ", verdict " + r["verdict"].get<std::string>();
    if (r.contains("bound")) out += ", bound " + r["bound"]["value"].dump();
    if (r.contains("summary"))
        out += ", checks " + r["summary"]["checks"]["value"].dump() + ", failures " +
               r["summary"]["failures"]["value"].dump() + ", expected violations " +
               r["summary"]["expected_violations"]["value"].dump();
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Igusa-Todorov functions and LIT certificates for monomial algebras over F_p"};
    app.require_subcommand(1);

    itdim_config cfg;
    itdim_config_default(&cfg);
    std::string file, module, d_gens, v, out_path;
    int n = 0;
    bool show_summary = false;

    app.add_option("--prime", cfg.prime, "odd prime p")->capture_default_str();
    app.add_option("--cutoff", cfg.cutoff, "syzygy and resolution cutoff")->capture_default_str();
    app.add_option("--ext-window", cfg.ext_window, "Ext vanishing window")->capture_default_str();
    app.add_option("--trials", cfg.trials, "random isomorphism trials")->capture_default_str();
    app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    app.add_option("--d-cap", cfg.d_cap, "D-closure classes entering approximations")->capture_default_str();
    app.add_option("-o,--out", out_path, "write the JSON report to this file");
    app.add_flag("--summary", show_summary, "print a one-line rendering of the report instead of the JSON");

    const std::pair<const char*, const char*> commands[] = {
        {"phi", "Igusa-Todorov Phi of --module"},
        {"psi", "Igusa-Todorov Psi of --module"},
        {"phid", "Phi relative to the class D generated by --d-gens"},
        {"psid", "Psi relative to the class D generated by --d-gens"},
        {"pd", "projective dimension of --module"},
        {"injdim", "injective dimension of --module"},
        {"resdim", "resolution dimension of --module in D"},
        {"lit-certify", "certify the (n, V, D)-LIT property on the module corpus"},
        {"bound", "finitistic dimension bound from a LIT certificate"},
        {"verify-paper", "check the inequalities on the module corpus"},
        {"cotilting-check", "check whether --module is cotilting"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("file", file, "algebra file")->required()->check(CLI::ExistingFile);
        sub->add_option("--module", module, "module expression");
        sub->add_option("--d-gens", d_gens, "generators of D, or 'all'");
        sub->add_option("--v", v, "the module V");
        sub->add_option("--n", n, "syzygy degree")->check(CLI::NonNegativeNumber);
        sub->fallthrough();
    }

    CLI11_PARSE(app, argc, argv);
    const std::string command = app.get_subcommands().front()->get_name();

    std::string text;
    try {
        text = read_file(file);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    itdim_request req{};
    req.module = module.empty() ? nullptr : module.c_str();
    req.d_gens = d_gens.empty() ? nullptr : d_gens.c_str();
    req.v = v.empty() ? nullptr : v.c_str();
    req.n = n;
    req.config = cfg;

    char* json = nullptr;
    int32_t exit_code = 1;
    const itdim_status st = itdim_run(command.c_str(), text.c_str(), &req, &json, &exit_code);
    if (st != ITDIM_OK) {
        std::cerr << itdim_status_name(st) << ": " << itdim_last_error() << "\n";
        return 1;
    }
    const std::string report(json);
    itdim_string_free(json);

    if (show_summary) std::cout << summary(report) << "\n";
    if (out_path.empty()) {
        if (!show_summary) std::cout << report << "\n";
    } else {
        std::ofstream out(out_path, std::ios::binary);
        out << report << "\n";
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return 1;
        }
    }
    return exit_code;
}
