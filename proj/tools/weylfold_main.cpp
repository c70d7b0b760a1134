// Command-line front door. Builds a JSON request per subcommand, hands it to
// the shared library through the C API, and prints the JSON report.
//
// Exit codes: 0 success, 2 invalid input, 3 budget exceeded, 4 internal
// consistency failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "weylfold/weylfold.h"

namespace {

using nlohmann::json;

int fail(int code, const std::string& msg) {
    std::cerr << "weylfold: " << msg << "\n";
    return code;
}

// "(1 4)(2 3)" -> image list over 1..n.
std::vector<int> parse_cycles(const std::string& text, int n, bool& ok) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    ok = true;
    size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
        if (pos >= text.size()) break;
        if (text[pos] != '(') {
            ok = false;
            return img;
        }
        const size_t close = text.find(')', pos);
        if (close == std::string::npos) {
            ok = false;
            return img;
        }
        std::istringstream cycle(text.substr(pos + 1, close - pos - 1));
        std::vector<int> nodes;
        std::string tok;
        while (cycle >> tok) {
            try {
                nodes.push_back(std::stoi(tok));
            } catch (...) {
                ok = false;
                return img;
            }
        }
        for (int v : nodes)
            if (v < 1 || v > n) {
                ok = false;
                return img;
            }
        for (size_t i = 0; i < nodes.size(); ++i)
            img[nodes[i] - 1] = nodes[(i + 1) % nodes.size()];
        pos = close + 1;
    }
    return img;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

int rank_of_type(const std::string& type) {
    if (type.size() < 2) return -1;
    try {
        return std::stoi(type.substr(1));
    } catch (...) {
        return -1;
    }
}

bool read_file(const std::string& path, json& out, std::string& err) {
    std::ifstream in(path);
    if (!in) {
        err = "cannot open '" + path + "'";
        return false;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        out = json::parse(buf.str());
    } catch (const std::exception& e) {
        err = "file '" + path + "' is not valid JSON: " + e.what();
        return false;
    }
    return true;
}

int emit(wf_session* session,
         wf_status (*command)(wf_session*, const char*, char**),
         const json& request, bool pretty) {
    char* report = nullptr;
    const wf_status status = command(session, request.dump().c_str(), &report);
    if (status != WF_OK) return fail(status, wf_session_last_error(session));
    const std::string text = report;
    wf_string_free(report);
    if (pretty)
        std::cout << json::parse(text).dump(2) << "\n";
    else
        std::cout << text << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of partial resolutions of symplectic singularities"};
    app.set_version_flag("--version", std::string(wf_version()));
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent the JSON report");
    app.fallthrough();  // allow --pretty after the subcommand
    app.require_subcommand(1);

    std::string type, contract_arg, parabolic_arg, file_arg, nilpotent;
    std::vector<std::string> gen_args;
    unsigned long long seed = 0, samples_fan = 100, samples_kleinian = 20;

    auto* fold = app.add_subcommand("fold", "fold a simply-laced diagram along an automorphism group");
    fold->add_option("--type", type, "simply-laced type, e.g. A4")->required();
    fold->add_option("--gen", gen_args, "automorphism in cycle notation, e.g. \"(1 4)(2 3)\"");

    auto* namikawa = app.add_subcommand("namikawa", "Namikawa Weyl group from codimension-2 leaf data");
    namikawa->add_option("file", file_arg, "singularity JSON file");
    namikawa->add_option("--contract", contract_arg, "comma-separated generator tags, e.g. L1:1,L1:2");
    namikawa->add_option("--nilpotent", nilpotent, "type of a nilpotent cone instead of a leaf file");

    auto* fan = app.add_subcommand("fan", "classify the faces of a Mori fan");
    fan->add_option("file", file_arg, "fan JSON file")->required();
    fan->add_option("--seed", seed, "seed for the randomized checks");
    fan->add_option("--samples", samples_fan, "fundamental-domain sample count");

    auto* kleinian = app.add_subcommand("kleinian", "partial resolution of a Kleinian singularity");
    kleinian->add_option("--type", type, "ADE type, e.g. A3")->required();
    kleinian->add_option("--contract", contract_arg, "comma-separated contracted nodes, e.g. 1,3");
    kleinian->add_option("--seed", seed, "seed for the quotient-tower samples");
    kleinian->add_option("--samples", samples_kleinian, "quotient-tower sample count");

    auto* hecke = app.add_subcommand("hecke", "double-coset algebra of a parabolic subgroup");
    hecke->add_option("--type", type, "finite type, e.g. A2")->required();
    hecke->add_option("--parabolic", parabolic_arg, "comma-separated generator numbers");

    auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
    selftest->add_option("--seed", seed, "seed for the randomized criteria");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return WF_ERR_INVALID_INPUT;
    }

    wf_session* session = wf_session_new();
    if (!session) return fail(WF_ERR_INTERNAL, "cannot create session");
    struct SessionGuard {
        wf_session* s;
        ~SessionGuard() { wf_session_free(s); }
    } guard{session};

    if (const char* env = std::getenv("WEYLFOLD_BUDGET")) {
        try {
            const unsigned long long budget = std::stoull(env);
            if (wf_session_set_budget(session, budget) != WF_OK)
                return fail(WF_ERR_INVALID_INPUT, wf_session_last_error(session));
        } catch (...) {
            return fail(WF_ERR_INVALID_INPUT, "WEYLFOLD_BUDGET is not a number");
        }
    }

    if (fold->parsed()) {
        const int n = rank_of_type(type);
        if (n < 1) return fail(WF_ERR_INVALID_INPUT, "invalid type '" + type + "'");
        json req;
        req["type"] = type;
        if (!gen_args.empty()) {
            json gens = json::array();
            for (const std::string& g : gen_args) {
                bool ok = false;
                const std::vector<int> img = parse_cycles(g, n, ok);
                if (!ok) return fail(WF_ERR_INVALID_INPUT, "cannot parse cycles '" + g + "'");
                gens.push_back(img);
            }
            req["generators"] = std::move(gens);
        }
        return emit(session, wf_fold, req, pretty);
    }
    if (namikawa->parsed()) {
        json req;
        if (!nilpotent.empty()) {
            req["nilpotent"] = nilpotent;
        } else {
            if (file_arg.empty())
                return fail(WF_ERR_INVALID_INPUT, "namikawa needs a file or --nilpotent");
            json data;
            std::string err;
            if (!read_file(file_arg, data, err)) return fail(WF_ERR_INVALID_INPUT, err);
            req["singularity"] = std::move(data);
            if (namikawa->count("--contract")) req["contracted"] = split_commas(contract_arg);
        }
        return emit(session, wf_namikawa, req, pretty);
    }
    if (fan->parsed()) {
        json data;
        std::string err;
        if (!read_file(file_arg, data, err)) return fail(WF_ERR_INVALID_INPUT, err);
        json req;
        req["fan"] = std::move(data);
        req["seed"] = seed;
        req["samples"] = samples_fan;
        return emit(session, wf_fan, req, pretty);
    }
    if (kleinian->parsed()) {
        json req;
        req["type"] = type;
        json nodes = json::array();
        for (const std::string& item : split_commas(contract_arg)) {
            try {
                nodes.push_back(std::stoi(item));
            } catch (...) {
                return fail(WF_ERR_INVALID_INPUT, "bad node number '" + item + "'");
            }
        }
        req["contracted"] = std::move(nodes);
        req["seed"] = seed;
        req["samples"] = samples_kleinian;
        return emit(session, wf_kleinian, req, pretty);
    }
    if (hecke->parsed()) {
        json req;
        req["type"] = type;
        json gens = json::array();
        for (const std::string& item : split_commas(parabolic_arg)) {
            try {
                gens.push_back(std::stoi(item));
            } catch (...) {
                return fail(WF_ERR_INVALID_INPUT, "bad generator number '" + item + "'");
            }
        }
        req["parabolic"] = std::move(gens);
        return emit(session, wf_hecke, req, pretty);
    }
    json req;
    req["seed"] = seed;
    char* report = nullptr;
    const wf_status status = wf_selftest(session, req.dump().c_str(), &report);
    if (status != WF_OK) return fail(status, wf_session_last_error(session));
    const std::string text = report;
    wf_string_free(report);
    const json parsed = json::parse(text);
    std::cout << (pretty ? parsed.dump(2) : text) << "\n";
    // A failing criterion is a consistency failure, not a report.
    return parsed.at("result").at("all_pass").get<bool>() ? 0 : WF_ERR_INTERNAL;
}
