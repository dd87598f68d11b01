#pragma once

#include <string>

#include "cliffspec/hemisphere.hpp"
#include "cliffspec/scan_engine.hpp"

namespace cliffspec {

/// Per-cell SVG heatmap of one field of a 2-D scan grid, with the zero set
/// overlaid as markers.  The ramp is the fixed 256-step table documented in
/// the grid schema.
std::string svg_heatmap(const ScanGrid& grid, char field, double eps_overlay);

/// Curve figure: accepted points as a polyline over (x, z), rejected
/// samples as hollow markers.
std::string svg_curve(const CurveTrace& trace);

std::string curve_to_csv(const CurveTrace& trace);
std::string curve_to_json(const CurveTrace& trace);

/// Versioned JSON schemas embedded in the binary.
std::string grid_schema_json();
std::string curve_schema_json();
std::string report_schema_json();
std::string all_schemas_json();

/// Structural validation against the embedded schema subset (type,
/// properties, required, items, enum).  Returns an empty string when the
/// document conforms, else a diagnostic path.
std::string validate_against_schema(const std::string& document_json,
                                    const std::string& schema_json);

void write_text_file(const std::string& path, const std::string& contents);

}  // namespace cliffspec
