#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "axo/criterion.hpp"
#include "axo/generator.hpp"

namespace axo::cli {

enum class InputFormat { text, json };

/// One coordinate matrix with optional per-document tolerance overrides.
struct InputDocument {
    linalg::Matrix matrix;
    std::optional<double> tau_rel;
    std::optional<double> tau_abs;
    std::optional<double> tau_rank;

    /// base with the document's overrides applied.
    criterion::ToleranceConfig tolerances(const criterion::ToleranceConfig& base = {}) const;
};

/// Parses a matrix document.
///
/// Text: one matrix row per line, entries whitespace-separated, blank lines
/// and '#' comments ignored. JSON: an object with a "matrix" key holding an
/// array of row arrays and an optional "tolerances" object with any of
/// tau_rel / tau_abs / tau_rank; unknown keys are ignored.
///
/// Throws ParseError (with line/column for text input) on ragged rows,
/// non-numeric tokens, non-finite values, and shape violations (at least
/// 3 rows, at least 4 columns, fewer rows than columns).
InputDocument parse_input(std::string_view bytes, InputFormat format);

/// Deterministic serialization of an analysis report: one line of JSON with
/// fixed key order and decimals printed to 17 significant digits (so values
/// round-trip exactly). Pretty mode appends a human-readable summary block.
std::string format_report(const criterion::AnalysisReport& r, bool pretty);

/// Instance document, parseable by parse_input with the json format.
std::string format_instance(const generator::GeneratedInstance& inst);

/// 17-significant-digit decimal form of one value (shared by all writers).
std::string format_double(double v);

}  // namespace axo::cli
