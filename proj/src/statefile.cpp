// Copyright 2026 The ssr-ent Authors
// SPDX-License-Identifier: Apache-2.0

#include "ssrent/statefile.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "ssrent/tolerances.hpp"

namespace ssrent {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& origin, const std::string& where,
                       const std::string& msg) {
  throw StateFileError(origin + ": " + where + ": " + msg);
}

std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

Complex parse_amplitude(const json& j, const std::string& origin,
                        const std::string& where) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return Complex(j[0].get<double>(), j[1].get<double>());
  fail(origin, where, "amplitude must be a number or an [re, im] pair");
}

LayoutPtr parse_layout(const json& j, const std::string& origin) {
  if (!j.is_object() || !j.contains("parties") || !j["parties"].is_array() ||
      j["parties"].empty())
    fail(origin, "layout", "expected {\"parties\": [...]}");
  std::vector<Party> parties;
  for (std::size_t p = 0; p < j["parties"].size(); ++p) {
    const json& jp = j["parties"][p];
    const std::string where = "layout.parties[" + std::to_string(p) + "]";
    if (!jp.is_object() || !jp.contains("label") || !jp["label"].is_string() ||
        !jp.contains("modes") || !jp["modes"].is_array())
      fail(origin, where, "expected {\"label\": ..., \"modes\": [...]}");
    Party party{jp["label"].get<std::string>(), {}};
    for (const json& m : jp["modes"]) {
      if (!m.is_string()) fail(origin, where, "mode labels must be strings");
      party.modes.push_back(m.get<std::string>());
    }
    parties.push_back(std::move(party));
  }
  try {
    return ModeLayout::create(std::move(parties));
  } catch (const std::exception& e) {
    fail(origin, "layout", e.what());
  }
}

std::vector<KetAmplitude> parse_amplitude_list(const json& j,
                                               const LayoutPtr& layout,
                                               const std::string& origin,
                                               const std::string& where) {
  if (!j.is_array() || j.empty())
    fail(origin, where, "expected a non-empty array of [amplitude, ket]");
  std::vector<KetAmplitude> terms;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    const json& term = j[i];
    if (!term.is_array() || term.size() != 2 || !term[1].is_string())
      fail(origin, at, "expected [amplitude, \"occupations\"]");
    const Complex amp = parse_amplitude(term[0], origin, at);
    try {
      terms.push_back(
          {amp, occupation_from_string(term[1].get<std::string>(), layout)});
    } catch (const std::exception& e) {
      fail(origin, at, e.what());
    }
  }
  return terms;
}

DensityOperator parse_matrix_form(const json& j, const LayoutPtr& layout,
                                  const std::string& origin) {
  if (!j.contains("basis") || !j["basis"].is_array() || j["basis"].empty())
    fail(origin, "basis", "matrix form needs a non-empty \"basis\" array");
  if (!j.contains("matrix") || !j["matrix"].is_array())
    fail(origin, "matrix", "matrix form needs a \"matrix\" array");

  std::vector<OccupationState> kets;
  for (std::size_t i = 0; i < j["basis"].size(); ++i) {
    const json& b = j["basis"][i];
    const std::string at = "basis[" + std::to_string(i) + "]";
    if (!b.is_string()) fail(origin, at, "kets are occupation strings");
    try {
      kets.push_back(occupation_from_string(b.get<std::string>(), layout));
    } catch (const std::exception& e) {
      fail(origin, at, e.what());
    }
  }
  const std::size_t n = kets.size();
  if (j["matrix"].size() != n)
    fail(origin, "matrix", "matrix must have one row per basis ket");

  CMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    const json& row = j["matrix"][r];
    const std::string at = "matrix[" + std::to_string(r) + "]";
    if (!row.is_array() || row.size() != n)
      fail(origin, at, "rows must have one entry per basis ket");
    for (std::size_t c = 0; c < n; ++c)
      m(r, c) = parse_amplitude(row[c], origin,
                                at + "[" + std::to_string(c) + "]");
  }

  // Canonicalize to lexicographic basis order.
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return kets[a].lex_key() < kets[b].lex_key();
  });
  auto basis = std::make_shared<Basis>();
  for (std::size_t i : perm) basis->push_back(kets[i]);
  CMatrix sorted(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) sorted(r, c) = m(perm[r], perm[c]);

  try {
    DensityOperator op = DensityOperator::make(layout, std::move(basis),
                                               std::move(sorted));
    op.validate_psd();
    return op;
  } catch (const std::exception& e) {
    fail(origin, "matrix", e.what());
  }
}

}  // namespace

DensityOperator parse_state_text(const std::string& text,
                                 const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw StateFileError(origin + ": " + line_col(text, e.byte) + ": " +
                         e.what());
  }
  if (!j.is_object()) fail(origin, "$", "state file must be a JSON object");
  if (!j.contains("layout")) fail(origin, "$", "missing \"layout\"");
  const LayoutPtr layout = parse_layout(j["layout"], origin);

  if (!j.contains("form") || !j["form"].is_string())
    fail(origin, "form", "expected \"pure\", \"mixed\" or \"matrix\"");
  const std::string form = j["form"].get<std::string>();

  try {
    if (form == "pure") {
      if (!j.contains("amplitudes"))
        fail(origin, "$", "pure form needs \"amplitudes\"");
      return density_from_pure(
          layout,
          parse_amplitude_list(j["amplitudes"], layout, origin, "amplitudes"));
    }
    if (form == "mixed") {
      if (!j.contains("components") || !j["components"].is_array() ||
          j["components"].empty())
        fail(origin, "$", "mixed form needs non-empty \"components\"");
      std::vector<std::pair<double, DensityOperator>> parts;
      for (std::size_t i = 0; i < j["components"].size(); ++i) {
        const json& comp = j["components"][i];
        const std::string at = "components[" + std::to_string(i) + "]";
        if (!comp.is_object() || !comp.contains("weight") ||
            !comp["weight"].is_number() || !comp.contains("amplitudes"))
          fail(origin, at, "expected {\"weight\": w, \"amplitudes\": [...]}");
        parts.emplace_back(
            comp["weight"].get<double>(),
            density_from_pure(layout,
                              parse_amplitude_list(comp["amplitudes"], layout,
                                                   origin, at)));
      }
      return density_from_mixture(parts);
    }
    if (form == "matrix") return parse_matrix_form(j, layout, origin);
  } catch (const StateFileError&) {
    throw;
  } catch (const std::exception& e) {
    fail(origin, "$", e.what());
  }
  fail(origin, "form", "unknown form '" + form + "'");
}

DensityOperator load_state_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StateFileError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state_text(buf.str(), path);
}

namespace {

ordered_json layout_to_json(const ModeLayout& layout) {
  ordered_json parties = ordered_json::array();
  for (const Party& p : layout.parties()) {
    ordered_json jp;
    jp["label"] = p.label;
    jp["modes"] = p.modes;
    parties.push_back(std::move(jp));
  }
  return ordered_json{{"parties", std::move(parties)}};
}

ordered_json complex_to_json(const Complex& z) {
  return ordered_json::array({z.real(), z.imag()});
}

}  // namespace

ordered_json state_to_json(const DensityOperator& op) {
  ordered_json j;
  j["layout"] = layout_to_json(op.layout());
  j["form"] = "matrix";
  ordered_json basis = ordered_json::array();
  for (const OccupationState& s : op.basis()) basis.push_back(s.str());
  j["basis"] = std::move(basis);
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < op.dim(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < op.dim(); ++c)
      row.push_back(complex_to_json(op.matrix()(r, c)));
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  return j;
}

ordered_json catalyst_to_json(const CatalystSpec& spec,
                              const LayoutPtr& catalyst_layout) {
  // |even> = sqrt(r1)|00,11> + conj(phase1) sqrt(1-r1)|11,00> reproduces the
  // sector coherence gamma1 = phase1 sqrt(r1 (1-r1)); likewise for odd.
  const auto pure_component = [&](double r, Complex phase,
                                  const char* lo_ket, const char* hi_ket) {
    ordered_json amps = ordered_json::array();
    amps.push_back(
        ordered_json::array({complex_to_json(std::sqrt(r)), lo_ket}));
    amps.push_back(ordered_json::array(
        {complex_to_json(std::conj(phase) * std::sqrt(1.0 - r)), hi_ket}));
    return amps;
  };
  ordered_json j;
  j["layout"] = layout_to_json(*catalyst_layout);
  j["form"] = "mixed";
  ordered_json components = ordered_json::array();
  components.push_back(
      ordered_json{{"weight", spec.inter_weight},
                   {"amplitudes", pure_component(spec.even_prob,
                                                 spec.even_phase, "00,11",
                                                 "11,00")}});
  components.push_back(
      ordered_json{{"weight", 1.0 - spec.inter_weight},
                   {"amplitudes", pure_component(spec.odd_prob,
                                                 spec.odd_phase, "01,10",
                                                 "10,01")}});
  j["components"] = std::move(components);
  return j;
}

void write_json_file(const std::string& path, const ordered_json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw StateFileError(path + ": cannot open for writing");
  out << j.dump(2) << '\n';
}

}  // namespace ssrent
