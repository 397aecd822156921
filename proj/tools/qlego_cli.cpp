// Copyright 2026 The qlego Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qlego/qlego.h"

namespace {

struct Failure {
    int code;
};

void check(qlego_status status) {
    if (status != QLEGO_OK) {
        std::cerr << "error: " << qlego_last_error() << "\n";
        throw Failure{static_cast<int>(status)};
    }
}

/// Takes ownership of a library-allocated string.
std::string take(char *s) {
    if (!s) {
        return {};
    }
    std::string out(s);
    qlego_string_free(s);
    return out;
}

struct NetworkHandle {
    qlego_network *p = nullptr;
    ~NetworkHandle() { qlego_network_free(p); }
};

struct CodeHandle {
    qlego_code *p = nullptr;
    ~CodeHandle() { qlego_code_free(p); }
};

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        throw Failure{QLEGO_ERR_USAGE};
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path);
    if (!out || !(out << text)) {
        std::cerr << "error: cannot write '" << path << "'\n";
        throw Failure{QLEGO_ERR_USAGE};
    }
}

/// Accepts either inline JSON or a path to a JSON file.
std::string json_argument(const std::string &value) {
    size_t first = value.find_first_not_of(" \t\n");
    if (first != std::string::npos && value[first] == '{') {
        return value;
    }
    return read_file(value);
}

std::string quote(const std::string &s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    return out + "\"";
}

struct ReportFlags {
    bool no_distance = false;
    int max_weight = 0;
    bool bare = false;
    uint64_t budget = 0;
};

void print_report(const qlego_code *code, const ReportFlags &flags, bool distance, const std::string &json_out) {
    qlego_report_options o{};
    o.distance = distance ? 1 : 0;
    o.max_weight = flags.max_weight;
    o.bare = flags.bare ? 1 : 0;
    o.budget = flags.budget;
    char *text = nullptr;
    check(qlego_code_report(code, &o, &text));
    std::cout << take(text);
    if (!json_out.empty()) {
        o.json = 1;
        char *structured = nullptr;
        check(qlego_code_report(code, &o, &structured));
        write_file(json_out, take(structured));
    }
}

void add_report_flags(CLI::App *cmd, ReportFlags &flags) {
    cmd->add_option("--max-weight", flags.max_weight, "Weight cap for the distance search")->check(CLI::PositiveNumber);
    cmd->add_flag("--bare", flags.bare, "Bare rather than dressed distance");
    cmd->add_option("--budget", flags.budget, "Enumeration budget (default 2^24)");
}

std::vector<size_t> parse_indices(const std::string &text) {
    std::vector<size_t> out;
    std::stringstream list(text);
    std::string item;
    while (std::getline(list, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
            std::cerr << "error: pair index list must be comma-separated integers\n";
            throw Failure{QLEGO_ERR_USAGE};
        }
        out.push_back(std::stoul(item));
    }
    return out;
}

int run(int argc, char **argv) {
    CLI::App app{"Build and analyze stabilizer codes from networks of small code tensors."};
    app.require_subcommand(1);
    app.fallthrough(false);

    std::string net_path, report_path, dot_path, out_path;
    ReportFlags flags;

    auto *build = app.add_subcommand("build", "Contract a network file and print the code report");
    build->add_option("net", net_path, "Network file")->required();
    build->add_option("--report", report_path, "Also write the structured report to this file");
    build->add_flag("--no-distance", flags.no_distance, "Skip the distance computation");
    add_report_flags(build, flags);

    std::string demo_name;
    std::map<std::string, std::string> demo_params;
    bool demo_build = false;
    int cz_d = 2;
    auto *demo = app.add_subcommand("demo", "Emit a named example network");
    demo->add_option("name", demo_name, "Example name")
        ->required()
        ->check(CLI::IsMember({"toric", "surface", "xzzx", "twist", "bacon-shor", "chain", "642", "1d-dual", "3d",
                               "rm-pair", "flat-perfect", "cz-check", "steane-from-422", "double-trace"}));
    const std::pair<const char *, const char *> sizes[] = {
        {"L", "Lattice size (toric, flat-perfect)"},   {"M", "Rows (surface, xzzx, bacon-shor)"},
        {"N", "Columns (surface, xzzx, bacon-shor)"},  {"m", "Chain length (chain)"},
        {"r", "Repetition length (surface --boundary repetition)"},
        {"Lx", "Extent along x (3d)"},                {"Ly", "Extent along y (3d)"},
        {"Lz", "Extent along z (3d)"},
    };
    for (const auto &[key, help] : sizes) {
        demo->add_option_function<std::string>(
            std::string("--") + key, [&demo_params, key = key](const std::string &v) { demo_params[key] = v; }, help);
    }
    demo->add_option_function<std::string>("--boundary", [&](const std::string &v) { demo_params["boundary"] = v; },
                                           "Boundary kind");
    demo->add_option_function<std::string>("--variant", [&](const std::string &v) { demo_params["variant"] = v; },
                                           "rm-pair variant: plain, xgate or flipped");
    demo->add_option("--d", cz_d, "Qudit dimension for cz-check");
    demo->add_option("--out", out_path, "Write the network file here; without --build it goes to stdout");
    demo->add_flag("--build", demo_build, "Also build the network and print its report");
    demo->add_option("--report", report_path, "Structured report file (with --build)");
    demo->add_flag("--no-distance", flags.no_distance, "Skip the distance computation (with --build)");
    add_report_flags(demo, flags);

    std::string erasure;
    bool want_distance = false, want_css = false, want_plan = false;
    std::string gauge_keep;
    size_t pair_weight = 0;
    std::vector<std::string> erasures;
    auto *analyze = app.add_subcommand("analyze", "Distance, erasure and structure checks");
    analyze->add_option("net", net_path, "Network file")->required();
    analyze->add_flag("--distance", want_distance, "Compute the distance");
    analyze->add_option("--erasure", erasures, "Comma-separated physical legs id.leg; repeatable");
    analyze->add_flag("--css", want_css, "Print CSS and self-dual flags");
    analyze->add_flag("--plan", want_plan, "Print an isometric contraction schedule");
    analyze->add_option("--gauge-fix", gauge_keep, "Comma-separated logical pair indices to keep");
    analyze->add_option("--pair-weight", pair_weight, "Re-derive logical pairs up to this weight before gauge fixing");
    analyze->add_option("--report", report_path, "Also write the structured report to this file");
    add_report_flags(analyze, flags);

    std::string assign;
    auto *push = app.add_subcommand("push", "Verify a symbolic operator assignment");
    push->add_option("net", net_path, "Network file")->required();
    push->add_option("--assign", assign, "Assignment JSON file or inline object")->required();
    push->add_option("--dot", dot_path, "Write the flow diagram as DOT");

    std::string prescribe;
    auto *represent = app.add_subcommand("represent", "Find an operator matching a partial prescription");
    represent->add_option("net", net_path, "Network file")->required();
    represent->add_option("--prescribe", prescribe, "Prescription JSON file or inline object")->required();
    represent->add_option("--dot", dot_path, "Write the flow diagram as DOT");

    double p = 0;
    bool log_domain = false;
    uint64_t trials = 1000, seed = 1;
    auto *decode = app.add_subcommand("decode", "Monte Carlo maximum-likelihood decoding under depolarizing noise");
    decode->add_option("net", net_path, "Network file")->required();
    decode->add_option("--p", p, "Depolarizing probability")->required()->check(CLI::Range(0.0, 1.0));
    decode->add_option("--trials", trials, "Number of trials");
    decode->add_option("--seed", seed, "Random seed");
    decode->add_flag("--log-domain", log_domain, "Accumulate class probabilities as logs");

    std::string logical;
    auto *export_tl = app.add_subcommand("export-tl", "Write the sparse T(L) tensor of a logical operator");
    export_tl->add_option("net", net_path, "Network file")->required();
    export_tl->add_option("--logical", logical, "Pauli string over the logical legs")->required();
    export_tl->add_option("--out", out_path, "Write here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : QLEGO_ERR_USAGE;
    }

    NetworkHandle net;
    CodeHandle code;
    auto load = [&] { check(qlego_network_load(net_path.c_str(), &net.p)); };
    auto build_code = [&] { check(qlego_code_build(net.p, &code.p)); };

    if (*build) {
        load();
        build_code();
        print_report(code.p, flags, !flags.no_distance, report_path);
    } else if (*demo) {
        if (demo_name == "cz-check") {
            int pass = 0;
            check(qlego_verify_cz(cz_d, &pass));
            std::cout << (pass ? "PASS" : "FAIL") << "\n";
            return pass ? 0 : QLEGO_ERR_TRACE_RANK;
        }
        std::string params = "{";
        for (const auto &[key, value] : demo_params) {
            params += (params.size() > 1 ? "," : "") + quote(key) + ":" + quote(value);
        }
        params += "}";
        check(qlego_network_demo(demo_name.c_str(), params.c_str(), &net.p));
        char *text = nullptr;
        check(qlego_network_write(net.p, &text));
        std::string file = take(text);
        if (!out_path.empty()) {
            write_file(out_path, file);
        } else if (!demo_build) {
            std::cout << file;
        }
        if (demo_build) {
            build_code();
            print_report(code.p, flags, !flags.no_distance, report_path);
        }
    } else if (*analyze) {
        load();
        if (want_plan) {
            char *text = nullptr;
            check(qlego_network_plan(net.p, &text));
            std::cout << take(text);
        }
        build_code();
        if (!gauge_keep.empty()) {
            std::vector<size_t> keep = parse_indices(gauge_keep);
            check(qlego_code_gauge_fix(code.p, pair_weight, keep.data(), keep.size()));
        }
        print_report(code.p, flags, want_distance, report_path);
        if (want_css) {
            int css = 0, self_dual = 0;
            check(qlego_code_flags(code.p, &css, &self_dual));
            std::cout << "css " << (css ? "yes" : "no") << "\nself-dual " << (self_dual ? "yes" : "no") << "\n";
        }
        for (const std::string &legs : erasures) {
            int ok = 0;
            check(qlego_code_erasure(code.p, legs.c_str(), &ok));
            std::cout << "erasure {" << legs << "}: " << (ok ? "correctable" : "not correctable") << "\n";
        }
    } else if (*push) {
        load();
        std::string body = json_argument(assign);
        int ok = 0;
        char *text = nullptr, *dot = nullptr;
        check(qlego_network_push(net.p, body.c_str(), &ok, &text, dot_path.empty() ? nullptr : &dot));
        std::cout << take(text);
        if (!dot_path.empty()) {
            write_file(dot_path, take(dot));
        }
    } else if (*represent) {
        load();
        std::string body = json_argument(prescribe);
        int found = 0;
        char *text = nullptr, *dot = nullptr;
        check(qlego_network_represent(net.p, body.c_str(), &found, &text, dot_path.empty() ? nullptr : &dot));
        std::cout << take(text);
        if (!dot_path.empty() && found) {
            write_file(dot_path, take(dot));
        }
    } else if (*decode) {
        load();
        build_code();
        char *csv = nullptr;
        check(qlego_code_decode(code.p, p, trials, seed, log_domain ? 1 : 0, &csv));
        std::cout << take(csv);
    } else if (*export_tl) {
        load();
        build_code();
        char *text = nullptr;
        check(qlego_code_export_tl(code.p, logical.c_str(), &text));
        std::string out = take(text);
        if (out_path.empty()) {
            std::cout << out;
        } else {
            write_file(out_path, out);
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    try {
        return run(argc, argv);
    } catch (const Failure &f) {
        return f.code;
    }
}
