// Copyright 2026 The diagclimb Authors
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

#ifndef DIAGCLIMB_JSON_IO_H
#define DIAGCLIMB_JSON_IO_H

#include <string>
#include <vector>

#include "json.hpp"

#include "diagclimb/css_code.h"
#include "diagclimb/gate.h"
#include "diagclimb/gen_coeff.h"
#include "diagclimb/synth.h"

namespace diagclimb {

/// Thrown for malformed JSON inputs.
struct FormatError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

nlohmann::json code_to_json(const CssCode &code);
CssCode code_from_json(const nlohmann::json &j);

/// Rotation gates serialize as "transversal_zrot"; other block gates list
/// each block as CkZ, zrot or an explicit diag.
nlohmann::json gate_to_json(const DiagonalGate &gate);
DiagonalGate gate_from_json(const nlohmann::json &j);

nlohmann::json row_to_json(const GenCoeffRow &row);
nlohmann::json summary_to_json(const CodeSummary &s);
nlohmann::json step_to_json(const SynthStep &s);
nlohmann::json weight_to_json(const WeightResult &w);

std::vector<PipelineOp> script_from_json(const nlohmann::json &j, size_t n);
nlohmann::json script_to_json(const std::vector<PipelineOp> &ops);

nlohmann::json read_json_file(const std::string &path);
void write_json_file(const std::string &path, const nlohmann::json &j);

}  // namespace diagclimb

#endif
