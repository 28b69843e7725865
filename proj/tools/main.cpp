// Command-line front end: emit windows, blocks and piece classifications,
// recover factor digits from a window, compare presentations for topological
// type, apply the reduction transformers, and run verification campaigns.
//
// Exit codes: 0 success / decision reached, 1 violations found (campaign
// failures, factor mismatch), 2 usage or configuration error.
// OXTOBY_VERBOSE selects report detail: 0 summary, 1 failures (default),
// 2 every record.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oxtoby/core.hpp"
#include "oxtoby/harness.hpp"
#include "oxtoby/serialize.hpp"
#include "oxtoby/ttype.hpp"

namespace {

using oxtoby::core::Int;

int verbosity() {
  const char* env = std::getenv("OXTOBY_VERBOSE");
  if (env == nullptr || *env == '\0') return 1;
  try {
    int v = std::stoi(env);
    return v < 0 ? 0 : (v > 2 ? 2 : v);
  } catch (const std::exception&) {
    return 1;
  }
}

// Shared sequence selection: explicit ratios (+ optional symbols) or a spec
// file; a spec file's depth field selects the leading ratios.
struct SpecOpts {
  std::vector<Int> ratios;
  std::vector<std::string> symbols;
  std::string spec_path;

  void attach(CLI::App* cmd) {
    auto* r = cmd->add_option("--ratios", ratios,
                              "Ratio list r_1,r_2,... (all >= 3)")
                  ->delimiter(',');
    auto* s = cmd->add_option("--spec", spec_path,
                              "Sequence spec file: {ratios, symbols, depth}")
                  ->check(CLI::ExistingFile);
    cmd->add_option("--symbols", symbols,
                    "Symbol labels per level (default x1,x2,...)")
        ->delimiter(',');
    r->excludes(s);
    s->excludes(r);
  }

  oxtoby::ttype::OxtobySpec resolve() const {
    if (!spec_path.empty()) {
      std::ifstream in(spec_path);
      std::ostringstream buf;
      buf << in.rdbuf();
      auto sf = oxtoby::serialize::parse_spec_file(buf.str());
      if (!symbols.empty()) sf.symbols = symbols;
      return oxtoby::serialize::to_oxtoby_spec(sf);
    }
    if (ratios.empty())
      throw CLI::ValidationError("--ratios or --spec is required");
    auto fg = oxtoby::core::mk_fast_growth(ratios);
    std::vector<std::string> syms = symbols;
    if (syms.empty())
      for (int i = 1; i <= fg.depth(); ++i)
        syms.push_back("x" + std::to_string(i));
    return oxtoby::ttype::oxtoby_spec_from_sequence(std::move(syms), fg);
  }
};

std::string read_stream_or_file(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

std::string progression_text(const oxtoby::ttype::Progression& p) {
  return std::to_string(p.a) + " + k*" + std::to_string(p.d);
}

nlohmann::json witness_json(const oxtoby::ttype::TypeWitness& w) {
  nlohmann::json j;
  if (oxtoby::ttype::is_same(w)) {
    const auto& sw = std::get<oxtoby::ttype::SameWitness>(w);
    j["result"] = "same";
    auto arr = nlohmann::json::array();
    for (const auto& c : sw.containments)
      arr.push_back({{"from_side", c.from_side},
                     {"from_symbol", c.from_symbol},
                     {"to_symbol", c.to_symbol},
                     {"exception_bound", c.exception_bound}});
    j["containments"] = arr;
  } else {
    const auto& dw = std::get<oxtoby::ttype::DifferentWitness>(w);
    j["result"] = "different";
    auto arr = nlohmann::json::array();
    for (const auto& p : dw.progressions)
      arr.push_back({{"a", p.a}, {"d", p.d}});
    j["progressions"] = arr;
  }
  return j;
}

int cmd_generate(const SpecOpts& so, Int lo, Int hi, bool machine) {
  auto spec = so.resolve();
  auto w = oxtoby::ttype::render_window(spec, oxtoby::core::mk_window(lo, hi));
  if (machine)
    std::cout << oxtoby::serialize::window_json(w).dump() << "\n";
  else
    std::cout << oxtoby::serialize::window_text(w);
  return 0;
}

int cmd_blocks(const SpecOpts& so, int m, Int lo, Int hi, bool machine) {
  auto spec = so.resolve();
  auto blocks = oxtoby::core::maximal_blocks(spec.fg, m,
                                             oxtoby::core::mk_window(lo, hi));
  for (const auto& b : blocks) {
    if (machine)
      std::cout << oxtoby::serialize::block_json(b).dump() << "\n";
    else
      std::cout << oxtoby::serialize::block_text(b) << "\n";
  }
  if (!machine && blocks.empty())
    std::cout << "no maximal p_" << m << "-periodic blocks inside ["
              << lo << ", " << hi << ")\n";
  return 0;
}

int cmd_pieces(const SpecOpts& so, int i, Int lo, Int hi,
               std::optional<Int> target, bool machine) {
  auto spec = so.resolve();
  const auto& fg = spec.fg;
  auto digits = target.has_value()
                    ? oxtoby::core::aperiodic_element(fg, *target)
                    : oxtoby::core::orbit_element(fg, 0);
  const Int p_i = fg.p.at(static_cast<std::size_t>(i));
  const Int n_i = digits.digits.at(static_cast<std::size_t>(i - 1));
  // First aligned start k*p_i - n_i at or above lo.
  Int a = oxtoby::core::checked_mul(
              oxtoby::core::floor_div(lo + n_i + p_i - 1, p_i), p_i) -
          n_i;
  for (; a + p_i <= hi; a += p_i) {
    auto res = oxtoby::core::classify_piece(fg, digits, i,
                                            oxtoby::core::Window{a, a + p_i});
    using Status = oxtoby::core::PieceResult::Status;
    if (machine) {
      nlohmann::json j{{"a", a}, {"i", i}};
      j["status"] = res.status == Status::Ok ? "ok"
                    : res.status == Status::Misaligned ? "misaligned"
                                                       : "depth_exceeded";
      if (res.status == Status::Ok) j["j"] = res.piece.j;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "[" << a << ", " << a + p_i << ")  ";
      if (res.status == Status::Ok)
        std::cout << "p_" << res.piece.j << "-p_" << i << "-piece\n";
      else if (res.status == Status::Misaligned)
        std::cout << "misaligned\n";
      else
        std::cout << "undecided at this depth\n";
    }
  }
  return 0;
}

int cmd_factor(const SpecOpts& so, const std::string& window_path, int depth,
               bool machine) {
  auto spec = so.resolve();
  auto j = nlohmann::json::parse(read_stream_or_file(window_path));
  if (!j.is_object() || !j.contains("lo") || !j.contains("hi") ||
      !j.contains("symbols"))
    throw CLI::ValidationError("window must be {lo, hi, symbols[]}");
  const Int lo = j["lo"].get<Int>();
  const Int hi = j["hi"].get<Int>();
  std::vector<std::optional<int>> values;
  for (const auto& cell : j["symbols"]) {
    const std::string label = cell.get<std::string>();
    if (label == "?") {
      values.push_back(std::nullopt);
      continue;
    }
    auto it = std::find(spec.symbols.begin(), spec.symbols.end(), label);
    if (it == spec.symbols.end())
      throw CLI::ValidationError("unknown symbol label: " + label);
    values.push_back(static_cast<int>(it - spec.symbols.begin()) + 1);
  }
  if (depth <= 0) depth = spec.fg.depth();
  auto res = oxtoby::core::factor_digits(
      values, oxtoby::core::mk_window(lo, hi), spec.fg, depth);
  using Status = oxtoby::core::FactorResult::Status;
  if (machine) {
    nlohmann::json out;
    out["status"] = res.status == Status::Ok ? "ok"
                    : res.status == Status::NoMatch ? "no_match"
                                                    : "ambiguous";
    out["level_index"] = res.level_index;
    if (res.status == Status::Ok) out["digits"] = res.digits;
    std::cout << out.dump() << "\n";
  } else if (res.status == Status::Ok) {
    std::cout << "digits:";
    for (Int d : res.digits) std::cout << " " << d;
    std::cout << "\n";
  } else if (res.status == Status::NoMatch) {
    std::cout << "no digit vector matches at level " << res.level_index
              << "\n";
  } else {
    std::cout << "ambiguous at level " << res.level_index
              << " (window too narrow)\n";
  }
  return res.status == Status::Ok ? 0 : res.status == Status::NoMatch ? 1 : 2;
}

int cmd_ttype(const std::vector<std::string>& p1,
              const std::vector<std::string>& t1,
              const std::vector<std::string>& p2,
              const std::vector<std::string>& t2, bool machine) {
  auto s1 = oxtoby::ttype::mk_seq(p1, t1);
  auto s2 = oxtoby::ttype::mk_seq(p2, t2);
  auto w = oxtoby::ttype::same_topological_type(s1, s2);
  if (machine) {
    std::cout << witness_json(w).dump() << "\n";
    return 0;
  }
  if (oxtoby::ttype::is_same(w)) {
    std::cout << "same topological type\n";
    for (const auto& c : std::get<oxtoby::ttype::SameWitness>(w).containments)
      std::cout << "  fiber(" << c.from_symbol << ") of s" << c.from_side
                << " inside fiber(" << c.to_symbol << ") beyond index "
                << c.exception_bound << "\n";
  } else {
    std::cout << "different topological type\n";
    const auto& dw = std::get<oxtoby::ttype::DifferentWitness>(w);
    std::cout << "  separating subsequence:";
    for (std::size_t k = 0; k < dw.progressions.size(); ++k)
      std::cout << (k ? " union " : " ") << progression_text(dw.progressions[k]);
    std::cout << "\n";
  }
  return 0;
}

int cmd_reduce(const std::string& transform, const std::vector<std::string>& seq,
               const std::vector<std::string>& with,
               const std::vector<Int>& ratios, bool machine) {
  if (transform == "pointed") {
    auto out = oxtoby::ttype::interleave_pointed(seq);
    if (machine) {
      std::cout << nlohmann::json(out).dump() << "\n";
    } else {
      for (std::size_t k = 0; k < out.size(); ++k)
        std::cout << (k ? " " : "") << out[k];
      std::cout << "\n";
    }
    return 0;
  }
  if (transform == "dense") {
    auto out = oxtoby::ttype::interleave_dense(seq, with);
    if (machine) {
      std::cout << nlohmann::json(out).dump() << "\n";
    } else {
      for (std::size_t k = 0; k < out.size(); ++k)
        std::cout << (k ? " " : "") << out[k];
      std::cout << "\n";
    }
    return 0;
  }
  if (transform == "theta") {
    auto out = oxtoby::ttype::theta(seq);
    if (machine) {
      auto arr = nlohmann::json::array();
      for (const auto& [sym, h] : out)
        arr.push_back({{"symbol", sym},
                       {"height", std::to_string(h.numerator()) + "/" +
                                      std::to_string(h.denominator())}});
      std::cout << arr.dump() << "\n";
    } else {
      for (const auto& [sym, h] : out)
        std::cout << "(" << sym << ", " << h.numerator() << "/"
                  << h.denominator() << ")\n";
    }
    return 0;
  }
  if (transform == "oxtoby") {
    if (ratios.empty())
      throw CLI::ValidationError("reduce oxtoby requires --ratios");
    auto fg = oxtoby::core::mk_fast_growth(ratios);
    auto spec = oxtoby::ttype::oxtoby_spec_from_sequence(seq, fg);
    oxtoby::serialize::SpecFile sf{spec.fg.ratios, spec.symbols,
                                   spec.fg.depth()};
    std::cout << oxtoby::serialize::spec_file_json(sf).dump(machine ? -1 : 2)
              << "\n";
    return 0;
  }
  throw CLI::ValidationError("unknown transform: " + transform);
}

int cmd_verify(const std::vector<std::vector<Int>>& profiles, Int radius,
               const std::vector<std::string>& lemma_names, std::uint64_t seed,
               bool machine) {
  oxtoby::harness::CampaignConfig cfg;
  cfg.ratio_profiles = profiles.empty()
                           ? std::vector<std::vector<Int>>{{3, 3, 3, 3},
                                                           {3, 4, 3}}
                           : profiles;
  cfg.window_radius = radius;
  cfg.seed = seed;
  if (!lemma_names.empty()) {
    cfg.lemmas.clear();
    for (const auto& name : lemma_names) {
      auto id = oxtoby::harness::parse_lemma(name);
      if (!id) throw CLI::ValidationError("unknown lemma: " + name);
      cfg.lemmas.push_back(*id);
    }
  }
  auto report = oxtoby::harness::run_campaign(cfg);
  const int v = verbosity();
  for (const auto& rec : report.records) {
    const bool pass =
        rec.result.status == oxtoby::harness::CheckStatus::Pass;
    if (v == 0 || (v == 1 && pass)) continue;
    if (machine)
      std::cout << oxtoby::serialize::check_json(rec).dump() << "\n";
    else
      std::cout << oxtoby::serialize::check_text(rec) << "\n";
  }
  if (machine)
    std::cout << oxtoby::serialize::report_json(report).dump() << "\n";
  else
    std::cout << oxtoby::serialize::report_text(report) << "\n";
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Oxtoby sequence toolkit: windows, blocks, pieces, factor "
               "digits, topological type, reductions, verification"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Emit a window of the sequence");
  SpecOpts gen_spec;
  gen_spec.attach(gen);
  Int gen_lo = -6, gen_hi = 7;
  bool gen_machine = false;
  gen->add_option("--lo", gen_lo, "Window start (inclusive)");
  gen->add_option("--hi", gen_hi, "Window end (exclusive)");
  gen->add_flag("--machine", gen_machine, "JSON output");

  // blocks
  auto* blk = app.add_subcommand("blocks", "List maximal periodic blocks");
  SpecOpts blk_spec;
  blk_spec.attach(blk);
  int blk_m = 1;
  Int blk_lo = -30, blk_hi = 30;
  bool blk_machine = false;
  blk->add_option("--level", blk_m, "Period level m (blocks in Per_{p_m})")
      ->required();
  blk->add_option("--lo", blk_lo, "Window start (inclusive)");
  blk->add_option("--hi", blk_hi, "Window end (exclusive)");
  blk->add_flag("--machine", blk_machine, "JSON output");

  // pieces
  auto* pcs = app.add_subcommand("pieces", "Classify aligned piece intervals");
  SpecOpts pcs_spec;
  pcs_spec.attach(pcs);
  int pcs_i = 1;
  Int pcs_lo = -30, pcs_hi = 30;
  std::optional<Int> pcs_target;
  bool pcs_machine = false;
  pcs->add_option("--index", pcs_i, "Alignment level i")->required();
  pcs->add_option("--lo", pcs_lo, "Window start (inclusive)");
  pcs->add_option("--hi", pcs_hi, "Window end (exclusive)");
  pcs->add_option("--target", pcs_target,
                  "Classify for the aperiodic point at this target "
                  "(default: the base sequence)");
  pcs->add_flag("--machine", pcs_machine, "JSON output");

  // factor
  auto* fac = app.add_subcommand("factor", "Recover digits from a window");
  SpecOpts fac_spec;
  fac_spec.attach(fac);
  std::string fac_window;
  int fac_depth = 0;
  bool fac_machine = false;
  fac->add_option("--window", fac_window,
                  "Window JSON file ({lo, hi, symbols[]}), or - for stdin")
      ->required();
  fac->add_option("--depth", fac_depth,
                  "Digits to recover (default: full depth)");
  fac->add_flag("--machine", fac_machine, "JSON output");

  // ttype
  auto* tt = app.add_subcommand(
      "ttype", "Compare two eventually periodic presentations");
  std::vector<std::string> tt_p1, tt_t1, tt_p2, tt_t2;
  bool tt_machine = false;
  tt->add_option("--prefix1", tt_p1, "Prefix of the first sequence")
      ->delimiter(',');
  tt->add_option("--tail1", tt_t1, "Periodic tail of the first sequence")
      ->delimiter(',')
      ->required();
  tt->add_option("--prefix2", tt_p2, "Prefix of the second sequence")
      ->delimiter(',');
  tt->add_option("--tail2", tt_t2, "Periodic tail of the second sequence")
      ->delimiter(',')
      ->required();
  tt->add_flag("--machine", tt_machine, "JSON output");

  // reduce
  auto* red = app.add_subcommand("reduce", "Apply a reduction transformer");
  std::string red_transform;
  std::vector<std::string> red_seq, red_with;
  std::vector<Int> red_ratios;
  bool red_machine = false;
  red->add_option("--transform", red_transform,
                  "pointed | dense | theta | oxtoby")
      ->required()
      ->check(CLI::IsMember({"pointed", "dense", "theta", "oxtoby"}));
  red->add_option("--seq", red_seq, "Input symbol sequence")
      ->delimiter(',')
      ->required();
  red->add_option("--with", red_with, "Second sequence (dense interleave)")
      ->delimiter(',');
  red->add_option("--ratios", red_ratios, "Ratio list (oxtoby packaging)")
      ->delimiter(',');
  red->add_flag("--machine", red_machine, "JSON output");

  // verify
  auto* ver = app.add_subcommand("verify", "Run a verification campaign");
  std::vector<std::vector<Int>> ver_profiles;
  Int ver_radius = 200;
  std::vector<std::string> ver_lemmas;
  std::uint64_t ver_seed = 0;
  bool ver_machine = false;
  ver->add_option("--profile", ver_profiles,
                  "Ratio profile (repeatable; default 3,3,3,3 and 3,4,3)")
      ->delimiter(',');
  ver->add_option("--radius", ver_radius, "Scan window radius");
  ver->add_option("--lemma", ver_lemmas,
                  "Check to run (repeatable; default all)");
  ver->add_option("--seed", ver_seed, "Seed for sampled digit targets");
  ver->add_flag("--machine", ver_machine, "JSON output");

  try {
    app.parse(argc, argv);
    if (gen->parsed())
      return cmd_generate(gen_spec, gen_lo, gen_hi, gen_machine);
    if (blk->parsed())
      return cmd_blocks(blk_spec, blk_m, blk_lo, blk_hi, blk_machine);
    if (pcs->parsed())
      return cmd_pieces(pcs_spec, pcs_i, pcs_lo, pcs_hi, pcs_target,
                        pcs_machine);
    if (fac->parsed())
      return cmd_factor(fac_spec, fac_window, fac_depth, fac_machine);
    if (tt->parsed()) return cmd_ttype(tt_p1, tt_t1, tt_p2, tt_t2, tt_machine);
    if (red->parsed())
      return cmd_reduce(red_transform, red_seq, red_with, red_ratios,
                        red_machine);
    if (ver->parsed())
      return cmd_verify(ver_profiles, ver_radius, ver_lemmas, ver_seed,
                        ver_machine);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
