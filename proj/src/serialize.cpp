#include "oxtoby/serialize.hpp"

#include <sstream>

namespace oxtoby::serialize {

namespace {

using nlohmann::json;

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += ' ';
    out += parts[k];
  }
  return out;
}

const char* status_name(harness::CheckStatus st) {
  switch (st) {
    case harness::CheckStatus::Pass: return "pass";
    case harness::CheckStatus::Fail: return "fail";
    case harness::CheckStatus::Error: return "error";
  }
  return "?";
}

}  // namespace

SpecFile parse_spec_file(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& ex) {
    throw ParseError(std::string("spec file is not valid JSON: ") + ex.what());
  }
  if (!j.is_object()) throw ParseError("spec file must be a JSON object");
  SpecFile sf;
  try {
    sf.ratios = j.at("ratios").get<std::vector<core::Int>>();
    sf.symbols = j.at("symbols").get<std::vector<std::string>>();
    sf.depth = j.value("depth", static_cast<int>(sf.ratios.size()));
  } catch (const json::exception& ex) {
    throw ParseError(std::string("spec file field error: ") + ex.what());
  }
  if (sf.ratios.empty()) throw ParseError("spec file needs at least one ratio");
  if (sf.depth < 1 || sf.depth > static_cast<int>(sf.ratios.size()))
    throw ParseError("depth must select a nonempty prefix of the ratios");
  return sf;
}

json spec_file_json(const SpecFile& sf) {
  return json{{"ratios", sf.ratios}, {"symbols", sf.symbols}, {"depth", sf.depth}};
}

ttype::OxtobySpec to_oxtoby_spec(const SpecFile& sf) {
  const std::vector<core::Int> head(sf.ratios.begin(),
                                    sf.ratios.begin() + sf.depth);
  return ttype::oxtoby_spec_from_sequence(sf.symbols,
                                          core::mk_fast_growth(head));
}

std::string symbols_line(const ttype::SymbolWindow& w) {
  std::vector<std::string> parts;
  parts.reserve(w.symbols.size());
  for (const auto& s : w.symbols) parts.push_back(s ? *s : "?");
  return join(parts);
}

std::string levels_line(const ttype::SymbolWindow& w) {
  std::vector<std::string> parts;
  parts.reserve(w.levels.size());
  for (const auto& l : w.levels)
    parts.push_back(l ? std::to_string(*l) : "?");
  return join(parts);
}

std::string window_text(const ttype::SymbolWindow& w) {
  std::ostringstream out;
  out << "window [" << w.window.lo << ", " << w.window.hi << ")\n";
  out << "symbols: " << symbols_line(w) << "\n";
  out << "levels:  " << levels_line(w) << "\n";
  return out.str();
}

json window_json(const ttype::SymbolWindow& w) {
  json symbols = json::array();
  for (const auto& s : w.symbols) symbols.push_back(s ? json(*s) : json("?"));
  json levels = json::array();
  for (const auto& l : w.levels) levels.push_back(l ? json(*l) : json("?"));
  return json{{"lo", w.window.lo},
              {"hi", w.window.hi},
              {"symbols", std::move(symbols)},
              {"levels", std::move(levels)}};
}

json block_json(const core::Block& b) {
  return json{{"n0", b.n0}, {"n1", b.n1}, {"m", b.m}, {"class", b.content_class}};
}

std::string block_text(const core::Block& b) {
  std::ostringstream out;
  out << "block [" << b.n0 << ", " << b.n1 << "] m=" << b.m
      << " class=" << b.content_class;
  return out.str();
}

json check_json(const harness::CheckRecord& rec) {
  json j{{"ratios", rec.ratios},
         {"lemma", std::string(harness::lemma_name(rec.result.id))},
         {"status", status_name(rec.result.status)},
         {"instances", rec.result.instances},
         {"skipped", rec.result.skipped},
         {"millis", rec.result.millis}};
  if (rec.result.status == harness::CheckStatus::Fail)
    j["counterexample"] = rec.result.counterexample;
  if (rec.result.status == harness::CheckStatus::Error)
    j["error"] = rec.result.error;
  return j;
}

std::string check_text(const harness::CheckRecord& rec) {
  std::ostringstream out;
  const auto& r = rec.result;
  const char* tag = r.status == harness::CheckStatus::Pass   ? "PASS"
                    : r.status == harness::CheckStatus::Fail ? "FAIL"
                                                             : "ERROR";
  out << "[" << tag << "] " << harness::lemma_name(r.id) << " ratios=";
  for (std::size_t k = 0; k < rec.ratios.size(); ++k) {
    if (k) out << ',';
    out << rec.ratios[k];
  }
  out << " instances=" << r.instances << " skipped=" << r.skipped;
  if (r.status == harness::CheckStatus::Fail)
    out << " counterexample=" << r.counterexample.dump();
  if (r.status == harness::CheckStatus::Error) out << " error=" << r.error;
  return out.str();
}

json report_json(const harness::CampaignReport& report) {
  return json{{"passed", report.passed},
              {"failed", report.failed},
              {"errors", report.errors},
              {"ok", report.ok()}};
}

std::string report_text(const harness::CampaignReport& report) {
  std::ostringstream out;
  out << "checks: " << report.records.size() << " passed: " << report.passed
      << " failed: " << report.failed << " errors: " << report.errors;
  return out.str();
}

}  // namespace oxtoby::serialize
