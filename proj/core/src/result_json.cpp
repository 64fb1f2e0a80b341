// Copyright 2026 The Brooks Coloring Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <nlohmann/json.hpp>

#include "brooks/dispatch.hpp"

namespace brooks {

std::string to_json(const ColorResult& result, bool include_trace) {
  using nlohmann::ordered_json;
  ordered_json out;
  out["palette"] = result.palette;
  out["colors"] = ordered_json::array();
  for (Color c : result.coloring.colors()) out["colors"].push_back(c);

  out["components"] = ordered_json::array();
  for (const auto& comp : result.components) {
    ordered_json entry;
    entry["vertices"] = comp.vertices;
    entry["class"] = to_string(comp.graph_class);
    entry["colors_used"] = comp.colors_used;
    entry["algorithm"] = comp.algorithm;
    out["components"].push_back(std::move(entry));
  }

  const Counters& k = result.instrumentation;
  ordered_json inst;
  inst["edges_examined"] = k.edges_examined;
  inst["kempe_swaps"] = k.kempe_swaps;
  inst["recolorings"] = k.recolorings;
  inst["path_edge_examinations"] = k.path_edge_examinations;
  inst["path_edges"] = k.path_edges;
  inst["branches"] = ordered_json::array();
  for (Branch b : result.branches) inst["branches"].push_back(std::string(to_string(b)));
  out["instrumentation"] = std::move(inst);
  out["fallbacks"] = result.fallbacks;
  if (!result.fallback_reasons.empty()) out["fallback_reasons"] = result.fallback_reasons;

  if (include_trace) {
    out["trace"] = ordered_json::array();
    for (const auto& e : result.trace) {
      out["trace"].push_back(ordered_json{{"step", e.step}, {"detail", e.detail}});
    }
  }
  return out.dump();
}

}  // namespace brooks
