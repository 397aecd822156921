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

#include "qlego/qlego.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <sstream>

#include "json.hpp"
#include "qlego/decoder.hpp"
#include "qlego/legos.hpp"
#include "qlego/netfile.hpp"
#include "qlego/pushing.hpp"
#include "qlego/trace.hpp"

struct qlego_network {
    qlego::TensorNetwork net;
};

struct qlego_code {
    qlego::TensorNetwork net;
    qlego::CodeReport report;
};

namespace {

using namespace qlego;
using json = nlohmann::json;

thread_local std::string last_error;

template <typename F>
qlego_status guarded(F &&body) {
    try {
        body();
        last_error.clear();
        return QLEGO_OK;
    } catch (const TraceRankError &e) {
        last_error = e.what();
        return QLEGO_ERR_TRACE_RANK;
    } catch (const BudgetExceeded &e) {
        last_error = e.what();
        return QLEGO_ERR_BUDGET;
    } catch (const UsageError &e) {
        last_error = e.what();
        return QLEGO_ERR_USAGE;
    } catch (const json::exception &e) {
        last_error = e.what();
        return QLEGO_ERR_USAGE;
    } catch (const std::exception &e) {
        last_error = e.what();
        return QLEGO_ERR_INTERNAL;
    }
}

char *copy_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (!out) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(const void *p, const char *what) {
    if (!p) {
        throw UsageError(std::string(what) + " must not be null");
    }
}

json parse_object(const char *text, const char *what) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw UsageError(std::string(what) + ": " + e.what());
    }
    if (!doc.is_object()) {
        throw UsageError(std::string(what) + " must be a JSON object");
    }
    return doc;
}

std::pair<int, int> parse_local(const Modulus &mod, const std::string &label) {
    if (mod.d() == 2 && label.size() == 1) {
        switch (label[0]) {
            case 'I':
                return {0, 0};
            case 'X':
                return {1, 0};
            case 'Y':
                return {1, 1};
            case 'Z':
                return {0, 1};
        }
    }
    int x = 0, z = 0;
    char tail = 0;
    if (std::sscanf(label.c_str(), "x%dz%d%c", &x, &z, &tail) != 2 || x < 0 || z < 0 || x >= mod.d() ||
        z >= mod.d()) {
        throw UsageError("malformed single-leg operator '" + label + "'");
    }
    return {x, z};
}

/// Largest weight cap whose search space fits in the budget.
size_t affordable_cap(size_t n, int d, uint64_t budget) {
    long double per_leg = static_cast<long double>(d) * d - 1;
    long double total = 1, term = 1;
    size_t cap = 0;
    for (size_t w = 1; w <= n; w++) {
        term = term * static_cast<long double>(n - w + 1) / w * per_leg;
        total += term;
        if (total > budget) {
            break;
        }
        cap = w;
    }
    return std::max<size_t>(cap, 1);
}

DistanceReport run_distance(const CodeReport &report, const qlego_report_options &o) {
    DistanceOptions opts;
    opts.bare = o.bare != 0;
    if (o.budget) {
        opts.budget = o.budget;
    }
    if (o.max_weight > 0) {
        opts.weight_cap = static_cast<size_t>(o.max_weight);
        return distance(report, opts);
    }
    try {
        return distance(report, opts);
    } catch (const BudgetExceeded &) {
        opts.weight_cap = affordable_cap(report.n, report.mod().d(), opts.budget);
        return distance(report, opts);
    }
}

}  // namespace

extern "C" {

const char *qlego_last_error(void) { return last_error.c_str(); }

void qlego_string_free(char *s) { std::free(s); }

qlego_status qlego_network_parse(const char *text, qlego_network **out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = new qlego_network{parse_network(text)};
    });
}

qlego_status qlego_network_load(const char *path, qlego_network **out) {
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        *out = new qlego_network{load_network(path)};
    });
}

qlego_status qlego_network_demo(const char *name, const char *params, qlego_network **out) {
    return guarded([&] {
        require(name, "name");
        require(out, "out");
        std::map<std::string, std::string> values;
        if (params) {
            json doc = parse_object(params, "demo parameters");
            for (const auto &[key, value] : doc.items()) {
                values[key] = value.is_string() ? value.get<std::string>() : value.dump();
            }
        }
        *out = new qlego_network{demo_network(name, values)};
    });
}

qlego_status qlego_network_write(const qlego_network *net, char **out) {
    return guarded([&] {
        require(net, "network");
        require(out, "out");
        *out = copy_string(write_network(net->net));
    });
}

qlego_status qlego_network_plan(const qlego_network *net, char **out) {
    return guarded([&] {
        require(net, "network");
        require(out, "out");
        ContractionSchedule s = plan_contraction(net->net);
        std::ostringstream text;
        text << (s.ok ? "schedule found" : "no schedule") << "\n";
        for (size_t i = 0; i < s.steps.size(); i++) {
            text << "  " << i << ": " << s.steps[i].instance << (s.steps[i].isometric ? "" : " (not isometric)");
            for (const Edge &e : s.steps[i].contracted) {
                text << " " << e.a.str() << "-" << e.b.str();
            }
            text << "\n";
        }
        if (!s.ok) {
            text << s.message << "\n";
        }
        *out = copy_string(text.str());
    });
}

qlego_status qlego_network_push(const qlego_network *net, const char *assignment, int *ok, char **text, char **dot) {
    return guarded([&] {
        require(net, "network");
        require(assignment, "assignment");
        std::map<std::string, std::string> entries;
        json doc = parse_object(assignment, "assignment");
        for (const auto &[id, value] : doc.items()) {
            if (!value.is_string()) {
                throw UsageError("assignment for '" + id + "' must be a string");
            }
            entries[id] = value.get<std::string>();
        }
        SymbolicResult r = verify_symbolic(net->net, entries, MatchingTable::builtin(net->net.dimension().d()));
        std::ostringstream out;
        out << (r.ok ? "ok" : "mismatch") << "\n";
        for (const std::string &m : r.mismatches) {
            out << "  " << m << "\n";
        }
        out << "dangling labels:\n";
        std::map<std::string, std::map<std::string, size_t>> summary;
        for (const auto &[leg, label] : r.dangling) {
            std::string role = net->net.role_of(leg) == Role::Logical ? "logical" : "physical";
            out << "  " << leg.str() << " " << label << " (" << role << ")\n";
            summary[leg.instance + " " + role][label]++;
        }
        out << "pattern:\n";
        for (const auto &[where, counts] : summary) {
            out << "  " << where << ":";
            for (const auto &[label, count] : counts) {
                out << " " << label << " x" << count;
            }
            out << "\n";
        }
        if (ok) {
            *ok = r.ok ? 1 : 0;
        }
        if (text) {
            *text = copy_string(out.str());
        }
        if (dot) {
            *dot = copy_string(to_dot(r));
        }
    });
}

qlego_status qlego_network_represent(const qlego_network *net, const char *prescription, int *found, char **text,
                                     char **dot) {
    return guarded([&] {
        require(net, "network");
        require(prescription, "prescription");
        const Modulus &mod = net->net.dimension();
        BuiltState state = build(net->net);
        Prescription partial;
        json doc = parse_object(prescription, "prescription");
        for (const auto &[key, value] : doc.items()) {
            LegRef leg = parse_leg(key);
            if (!state.leg_index.count(leg)) {
                throw UsageError("prescription names '" + key + "', which is not a dangling leg");
            }
            partial[leg] = parse_local(mod, value.get<std::string>());
        }
        std::optional<Representation> rep = find_representation(state, partial);
        std::ostringstream out;
        if (!rep) {
            out << "no representation\n";
        } else {
            out << "representation " << rep->op.str() << "\n";
            for (size_t c = 0; c < state.legs.size(); c++) {
                out << "  " << state.legs[c].str() << " "
                    << local_label(mod, rep->op.x(c), rep->op.z(c)) << "\n";
            }
        }
        if (found) {
            *found = rep ? 1 : 0;
        }
        if (text) {
            *text = copy_string(out.str());
        }
        if (dot) {
            *dot = rep ? copy_string(to_dot(flow_decomposition(net->net, state, rep->op))) : nullptr;
        }
    });
}

void qlego_network_free(qlego_network *net) { delete net; }

qlego_status qlego_code_build(const qlego_network *net, qlego_code **out) {
    return guarded([&] {
        require(net, "network");
        require(out, "out");
        BuiltState state = build(net->net);
        *out = new qlego_code{net->net, extract(state, net->net)};
    });
}

qlego_status qlego_code_params(const qlego_code *code, size_t *n, size_t *apparent_k, size_t *true_k) {
    return guarded([&] {
        require(code, "code");
        if (n) {
            *n = code->report.n;
        }
        if (apparent_k) {
            *apparent_k = code->report.apparent_k;
        }
        if (true_k) {
            *true_k = code->report.true_k;
        }
    });
}

qlego_status qlego_code_flags(const qlego_code *code, int *css, int *self_dual) {
    return guarded([&] {
        require(code, "code");
        if (css) {
            *css = code->report.css ? 1 : 0;
        }
        if (self_dual) {
            *self_dual = code->report.self_dual ? 1 : 0;
        }
    });
}

qlego_status qlego_code_report(const qlego_code *code, const qlego_report_options *options, char **out) {
    return guarded([&] {
        require(code, "code");
        require(out, "out");
        qlego_report_options o{};
        if (options) {
            o = *options;
        }
        std::optional<DistanceReport> d;
        if (o.distance) {
            d = run_distance(code->report, o);
        }
        *out = copy_string(o.json ? report_json(code->report, d) : report_text(code->report, d));
    });
}

qlego_status qlego_code_erasure(const qlego_code *code, const char *legs, int *correctable) {
    return guarded([&] {
        require(code, "code");
        require(legs, "legs");
        require(correctable, "correctable");
        std::vector<size_t> indices;
        std::stringstream list(legs);
        std::string item;
        while (std::getline(list, item, ',')) {
            if (item.empty()) {
                continue;
            }
            LegRef leg = parse_leg(item);
            const auto &phys = code->report.physical_legs;
            auto it = std::find(phys.begin(), phys.end(), leg);
            if (it == phys.end()) {
                throw UsageError("'" + item + "' is not a physical leg");
            }
            indices.push_back(static_cast<size_t>(it - phys.begin()));
        }
        *correctable = is_correctable_erasure(code->report, indices) ? 1 : 0;
    });
}

qlego_status qlego_code_gauge_fix(qlego_code *code, size_t pair_weight, const size_t *keep, size_t keep_count) {
    return guarded([&] {
        require(code, "code");
        if (keep_count) {
            require(keep, "keep");
        }
        CodeReport regrouped = pair_weight ? low_weight_pairs(code->report, pair_weight) : code->report;
        code->report = gauge_fix(regrouped, std::vector<size_t>(keep, keep + keep_count));
    });
}

qlego_status qlego_code_decode(const qlego_code *code, double p, uint64_t trials, uint64_t seed, int log_domain,
                               char **csv) {
    return guarded([&] {
        require(code, "code");
        require(csv, "csv");
        if (!(p >= 0 && p <= 1)) {
            throw UsageError("p must lie in [0, 1]");
        }
        NoiseModel noise = NoiseModel::depolarizing(code->report.mod(), code->report.n, p);
        MonteCarloResult r = monte_carlo(code->report, noise, trials, seed, p, log_domain != 0);
        *csv = copy_string(MonteCarloResult::csv_header() + "\n" + r.csv_row() + "\n");
    });
}

qlego_status qlego_code_export_tl(const qlego_code *code, const char *logical, char **out) {
    return guarded([&] {
        require(code, "code");
        require(logical, "logical");
        require(out, "out");
        PauliVector l = PauliVector::parse(logical, code->report.mod());
        *out = copy_string(export_tl(code->report, l).to_text());
    });
}

void qlego_code_free(qlego_code *code) { delete code; }

qlego_status qlego_verify_cz(int d, int *pass) {
    return guarded([&] {
        require(pass, "pass");
        *pass = verify_cz_synthesis(d) ? 1 : 0;
    });
}

}  // extern "C"
