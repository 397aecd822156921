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

#include <set>

#include "qlego/legos.hpp"

namespace qlego {

namespace {

class Params {
   public:
    Params(const std::string &demo, const std::map<std::string, std::string> &values) : demo_(demo), values_(values) {}

    size_t size(const std::string &key, size_t fallback, size_t minimum) {
        used_.insert(key);
        auto it = values_.find(key);
        if (it == values_.end()) {
            return fallback;
        }
        const std::string &text = it->second;
        if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || text.size() > 6) {
            throw UsageError(demo_ + ": parameter " + key + " must be a positive integer, got '" + text + "'");
        }
        size_t v = std::stoul(text);
        if (v < minimum) {
            throw UsageError(demo_ + ": parameter " + key + " must be at least " + std::to_string(minimum));
        }
        return v;
    }

    std::string text(const std::string &key, const std::string &fallback) {
        used_.insert(key);
        auto it = values_.find(key);
        return it == values_.end() ? fallback : it->second;
    }

    void finish() const {
        for (const auto &[key, value] : values_) {
            if (!used_.count(key)) {
                throw UsageError(demo_ + " takes no parameter '" + key + "'");
            }
        }
    }

   private:
    std::string demo_;
    std::map<std::string, std::string> values_;
    std::set<std::string> used_;
};

}  // namespace

std::vector<std::string> demo_names() {
    return {"toric",         "surface",         "xzzx",         "twist",      "bacon-shor", "chain", "642", "1d-dual",
            "3d",            "rm-pair",         "flat-perfect", "steane-from-422", "double-trace"};
}

TensorNetwork demo_network(const std::string &name, const std::map<std::string, std::string> &params) {
    Params p(name, params);
    auto done = [&](TensorNetwork net) {
        p.finish();
        return net;
    };
    if (name == "toric") {
        return done(build_toric(p.size("L", 3, 2)));
    }
    if (name == "surface") {
        size_t M = p.size("M", 3, 1), N = p.size("N", 3, 1);
        std::string kind = p.text("boundary", "stoppers");
        SurfaceBoundary b;
        if (kind == "bare") {
            b.kind = BoundaryKind::Bare;
        } else if (kind == "stoppers") {
            b.kind = BoundaryKind::Stoppers;
        } else if (kind == "repetition") {
            b.kind = BoundaryKind::Repetition;
            b.r = p.size("r", 2, 2);
        } else {
            throw UsageError("surface: boundary must be bare, stoppers or repetition");
        }
        return done(build_surface(M, N, b));
    }
    if (name == "xzzx") {
        size_t M = p.size("M", 3, 2), N = p.size("N", 3, 2);
        return done(build_xzzx(M, N));
    }
    if (name == "twist") {
        return done(build_triangle_twist());
    }
    if (name == "bacon-shor") {
        size_t M = p.size("M", 3, 1), N = p.size("N", 3, 1);
        return done(build_bacon_shor(M, N));
    }
    if (name == "chain") {
        return done(build_chain(p.size("m", 3, 1)));
    }
    if (name == "642") {
        return done(build_code_642());
    }
    if (name == "1d-dual") {
        return done(build_1d_dual());
    }
    if (name == "3d") {
        size_t Lx = p.size("Lx", 2, 1), Ly = p.size("Ly", 2, 1), Lz = p.size("Lz", 2, 1);
        std::string kind = p.text("boundary", "corner");
        if (kind == "corner") {
            if (Lx != 2 || Ly != 2 || Lz != 2) {
                throw UsageError("3d: the corner boundary is defined for the 2x2x2 lattice");
            }
            return done(build_3d_steane(Lx, Ly, Lz, corner_boundary()));
        }
        if (kind == "open") {
            return done(build_3d_steane(Lx, Ly, Lz, {}));
        }
        throw UsageError("3d: boundary must be corner or open");
    }
    if (name == "rm-pair") {
        std::string v = p.text("variant", "plain");
        RmVariant variant = v == "plain"     ? RmVariant::Plain
                            : v == "xgate"   ? RmVariant::XGate
                            : v == "flipped" ? RmVariant::FlippedCatalog
                                             : throw UsageError("rm-pair: variant must be plain, xgate or flipped");
        return done(build_rm_pair(variant));
    }
    if (name == "flat-perfect") {
        return done(build_flat_perfect(p.size("L", 2, 1)));
    }
    if (name == "steane-from-422") {
        return done(build_steane_from_422());
    }
    if (name == "double-trace") {
        return done(build_double_trace());
    }
    throw UsageError("unknown demo '" + name + "'");
}

}  // namespace qlego
