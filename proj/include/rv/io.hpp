#pragma once

#include <string>

#include "rv/axioms.hpp"
#include "rv/margin_graph.hpp"
#include "rv/methods.hpp"

namespace rv {

/// DOT rendering, deterministic: vertices sorted by label, edges by
/// (source, target); margins as edge labels; zero-margin edges gray;
/// a river root carries a `winner` attribute.
std::string render_dot(const MarginGraph& g);
std::string render_dot(const Diagram& d, const MarginGraph& g);

/// Structured result document: winners, method, tiebreaker, certificate.
std::string result_to_json(const WinnerResult& r, Method m, const MarginGraph& g,
                           const std::string& tiebreaker);

/// One violation report document.
std::string report_to_json(const AxiomReport& r, const Profile& p, const std::string& tiebreaker);

}  // namespace rv
