#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gasolve/model.hpp"

namespace gasolve {

/// One JSON object per line, keys in declaration order, reals emitted with
/// shortest round-trip precision so identical runs serialize byte-identically.
void write_trace_jsonl(std::ostream& out, const GenerationTrace& trace);
void write_trace_jsonl(std::ostream& out, const std::vector<GenerationTrace>& traces);

std::string trace_to_json_line(const GenerationTrace& trace);

/// Parses a JSONL trace stream; blank lines are skipped. Throws ParseError
/// (with the 1-based line number) on malformed JSON or a record with missing
/// or mistyped fields.
std::vector<GenerationTrace> read_trace_jsonl(std::istream& in);
std::vector<GenerationTrace> load_trace_jsonl(const std::string& path);

/// Compares two trace sequences field by field: integers exactly, reals to
/// an absolute tolerance of 1e-12. Returns a description of the first
/// mismatch (generation and field), or nullopt when everything matches.
std::optional<std::string> first_trace_mismatch(const std::vector<GenerationTrace>& expected,
                                                const std::vector<GenerationTrace>& actual);

/// Multi-line report for terminals; reals rounded to 6 decimals.
std::string format_trace_human(const GenerationTrace& trace);

} // namespace gasolve
