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

#ifndef QLEGO_NETFILE_HPP
#define QLEGO_NETFILE_HPP

#include <optional>
#include <string>

#include "qlego/analysis.hpp"
#include "qlego/network.hpp"

namespace qlego {

struct ParseError : UsageError {
    using UsageError::UsageError;
};

/// Reads the JSON network description. Errors carry "line L, column C" when the text is not valid JSON.
TensorNetwork parse_network(const std::string &text);
TensorNetwork load_network(const std::string &path);
std::string write_network(const TensorNetwork &net);

/// Structural equality: same dimension, lego matrices, instances, edges and roles.
bool same_network(const TensorNetwork &a, const TensorNetwork &b);

/// Parses "inst.leg" into a LegRef.
LegRef parse_leg(const std::string &text);

std::string report_text(const CodeReport &report, const std::optional<DistanceReport> &distance);
std::string report_json(const CodeReport &report, const std::optional<DistanceReport> &distance);

}  // namespace qlego

#endif
