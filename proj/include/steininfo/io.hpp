#pragma once

#include <string>

#include "steininfo/bounds.hpp"
#include "steininfo/pmf.hpp"
#include "steininfo/repro.hpp"
#include "steininfo/score_info.hpp"

namespace steininfo {

// Pmf file format: {"a": int, "probs": [...], "tail_mass": float,
// "label": string}. The reader runs the full invariant validation and
// rejects nonpositive entries or mass inconsistencies.
std::string pmf_to_json(const Pmf& p);
Pmf pmf_from_json(const std::string& text);
Pmf load_pmf(const std::string& path);

// {"window_lo": int, "values": [...]}
std::string lattice_to_json(const LatticeFunction& f);
LatticeFunction lattice_from_json(const std::string& text);

std::string identity_report_to_json(const IdentityReport& rep);
std::string bound_report_to_json(const BoundReport& rep);
std::string example_row_to_json(const ExampleRow& row);

}  // namespace steininfo
