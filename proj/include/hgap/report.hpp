#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hgap/gapcore.hpp"
#include "hgap/hankel.hpp"
#include "hgap/localize.hpp"

namespace hgap {

enum class Stage { Analyze, Gaps, Localize };

struct PipelineOptions {
  IterationOptions iter;
  SegmentOptions segment;
  bool multiplicities = false;
  Rat multiplicity_tol = ratio(1, 1000000);
};

struct InputEcho {
  std::string kind;  // coeffs | roots | matrix | file | batch
  std::string text;
};

struct MultiplicityEntry {
  RootEnclosure enclosure;
  Rat point;  // where the multiplicity was evaluated
  unsigned multiplicity = 0;
};

struct AnalysisReport {
  InputEcho input;
  Stage stage = Stage::Analyze;
  HankelReport hankel;
  std::optional<std::vector<MultiplicityEntry>> multiplicities;
  std::optional<GapSequence> min_gap;
  std::optional<GapSequence> max_gap;
  std::optional<Segment> segment;
  std::optional<double> elapsed_ms;
};

/// Ascending comma-separated coefficients, each an integer or "num/den".
Poly parse_coeffs(std::string_view text);

/// Comma-separated roots; repeats become multiplicities.
Poly parse_roots(std::string_view text);

/// First line n, then n lines of n whitespace-separated rationals.
Matrix parse_matrix(std::istream& in);

/// hankel -> gapcore -> localize, restricted by stage.
AnalysisReport run_pipeline(HankelReport hankel, InputEcho input, Stage stage,
                            const PipelineOptions& opt);

nlohmann::json rat_json(const Rat& x);
nlohmann::json to_json(const GapSequence& seq);
nlohmann::json to_json(const Segment& seg);
nlohmann::json to_json(const AnalysisReport& report);

void write_text(std::ostream& out, const AnalysisReport& report);

}  // namespace hgap
