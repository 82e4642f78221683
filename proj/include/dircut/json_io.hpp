#pragma once

#include <string>
#include <vector>

#include "dircut/graph.hpp"
#include "dircut/lp.hpp"
#include "dircut/oracle.hpp"
#include "dircut/region.hpp"
#include "dircut/rounding.hpp"

namespace dircut {

// Serializers are hand-rolled with a fixed field order and %.12g numbers so
// identical runs emit byte-identical reports. Wall-time fields stay out of
// the JSON for the same reason.
std::string to_json(const FractionalSolution& sol);
std::string to_json(const RadiusScan& scan);
std::string to_json(const CutResult& cut, const Graph& g);
std::string to_json(const Report& report);
std::string to_json(const VerifyResult& result);
std::string to_json(const ParamCheck& check);

// "..."-wrapped JSON string with the usual escapes.
std::string json_quote(const std::string& s);

// Aligned table, one row per report; with_summary appends max/mean rows over
// the ratio columns (rows with errors or missing OPT are skipped per column).
struct BatchRow {
    Report report;
    std::string error;  // non-empty marks a failed file; report is then blank
};
std::string report_table(const std::vector<BatchRow>& rows, bool with_summary);

// Cut file: {"edges": [[tail, head, weight], ...]} (the edge triples of a
// solve report). Matches each triple to the lowest-id unused edge with equal
// endpoints and weight within 1e-9; throws std::invalid_argument when a
// triple matches nothing.
std::vector<EdgeId> parse_cut_file(const std::string& text, const Graph& g);

}  // namespace dircut
