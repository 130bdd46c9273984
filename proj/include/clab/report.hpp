#pragma once

#include <iosfwd>
#include <string>

#include "clab/registry.hpp"

namespace clab {

enum class ReportFormat { json, csv, text };

/// Serializes a suite result. All numbers appear as decimal strings (residues
/// can exceed native integer width); records carry no timestamps so a fixed
/// configuration always produces byte-identical output.
void write_json(std::ostream& os, const SuiteResult& result);
void write_csv(std::ostream& os, const SuiteResult& result);
void write_text(std::ostream& os, const SuiteResult& result);

void write_report(std::ostream& os, const SuiteResult& result, ReportFormat format);

} // namespace clab
