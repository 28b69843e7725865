#pragma once

// Text and machine formats: aligned window diagrams, the sequence spec file,
// and line-delimited check records. Machine output is JSON, one record per
// line; Unknown entries render as "?" in both formats.

#include <string>

#include <json.hpp>

#include "oxtoby/core.hpp"
#include "oxtoby/harness.hpp"
#include "oxtoby/ttype.hpp"

namespace oxtoby::serialize {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// On-disk sequence description: {"ratios": [...], "symbols": [...],
// "depth": n}. depth is optional and defaults to the ratio count; it selects
// the leading depth ratios.
struct SpecFile {
  std::vector<core::Int> ratios;
  std::vector<std::string> symbols;
  int depth = 0;
};

SpecFile parse_spec_file(const std::string& text);  // throws ParseError
nlohmann::json spec_file_json(const SpecFile& sf);
ttype::OxtobySpec to_oxtoby_spec(const SpecFile& sf);

// Space-joined symbol labels, "?" for Unknown.
std::string symbols_line(const ttype::SymbolWindow& w);
// Space-joined levels, "?" for Unknown.
std::string levels_line(const ttype::SymbolWindow& w);
// Three-line diagram: header with the interval, symbols, levels.
std::string window_text(const ttype::SymbolWindow& w);
// {"lo", "hi", "symbols": [...], "levels": [...]}, Unknown as "?".
nlohmann::json window_json(const ttype::SymbolWindow& w);

nlohmann::json block_json(const core::Block& b);
std::string block_text(const core::Block& b);

nlohmann::json check_json(const harness::CheckRecord& rec);
std::string check_text(const harness::CheckRecord& rec);
nlohmann::json report_json(const harness::CampaignReport& report);
std::string report_text(const harness::CampaignReport& report);

}  // namespace oxtoby::serialize
