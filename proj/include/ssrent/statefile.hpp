// Copyright 2026 The ssr-ent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ssrent/catalysis.hpp"
#include "ssrent/operators.hpp"

namespace ssrent {

/// Parse or validation failure of a state file; the message is anchored to
/// a line/column or JSON path where possible.
class StateFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Loads a JSON state file. Supported forms:
///   pure   — {"amplitudes": [[amp, "00,11"], ...]}
///   mixed  — {"components": [{"weight": w, "amplitudes": [...]}, ...]}
///   matrix — {"basis": ["00,11", ...], "matrix": [[amp, ...], ...]}
/// where amp is a number or an [re, im] pair, every file declares
/// {"layout": {"parties": [{"label": "A", "modes": [...]}, ...]}}, and
/// occupation strings follow the "00,11[;...]" grammar. Amplitude lists
/// must be normalized within 1e-9, mixture weights nonnegative and summing
/// to 1, and matrices Hermitian, PSD and trace-one within the module
/// tolerances. The basis is canonicalized to lexicographic order.
DensityOperator load_state_file(const std::string& path);

/// Same, from text already in memory; `origin` names the source in errors.
DensityOperator parse_state_text(const std::string& text,
                                 const std::string& origin = "<input>");

/// Matrix-form JSON for any density operator; re-parses to the same
/// operator entry-wise (doubles are serialized losslessly).
nlohmann::ordered_json state_to_json(const DensityOperator& op);

/// Mixed-form JSON for a two-sector catalyst: one weighted pure state per
/// parity sector.
nlohmann::ordered_json catalyst_to_json(const CatalystSpec& spec,
                                        const LayoutPtr& catalyst_layout);

void write_json_file(const std::string& path, const nlohmann::ordered_json& j);

}  // namespace ssrent
