#include "hgap/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "hgap/error.hpp"
#include "hgap/oracle.hpp"

namespace hgap {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::vector<Rat> parse_list(std::string_view text) {
  std::vector<Rat> v;
  for (auto part : split(text, ',')) v.push_back(parse_rat(part));
  return v;
}

std::string_view stage_name(Stage s) {
  switch (s) {
    case Stage::Analyze: return "analyze";
    case Stage::Gaps: return "gaps";
    case Stage::Localize: return "localize";
  }
  return "analyze";
}

nlohmann::json rats_json(std::span<const Rat> xs) {
  auto arr = nlohmann::json::array();
  for (const auto& x : xs) arr.push_back(to_string(x));
  return arr;
}

nlohmann::json poly_json(const Poly& p) {
  return {{"coeffs", rats_json(p.coeffs())}, {"text", p.to_string()}};
}

}  // namespace

Poly parse_coeffs(std::string_view text) { return Poly(parse_list(text)); }

Poly parse_roots(std::string_view text) {
  std::vector<Rat> roots;
  std::vector<unsigned> mults;
  for (const auto& r : parse_list(text)) {
    auto it = std::find(roots.begin(), roots.end(), r);
    if (it == roots.end()) {
      roots.push_back(r);
      mults.push_back(1);
    } else {
      ++mults[static_cast<std::size_t>(it - roots.begin())];
    }
  }
  return poly_from_roots(roots, mults);
}

Matrix parse_matrix(std::istream& in) {
  std::string tok;
  if (!(in >> tok)) throw Error(Errc::ParseError, "matrix file is empty");
  const Rat nr = parse_rat(tok);
  if (nr.get_den() != 1 || nr < 1 || nr > 4096)
    throw Error(Errc::ParseError, "matrix dimension must be a positive integer");
  const auto n = static_cast<std::size_t>(nr.get_num().get_ui());
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!(in >> tok)) throw Error(Errc::ParseError, "matrix file ends early");
      a(i, j) = parse_rat(tok);
    }
  if (in >> tok) throw Error(Errc::ParseError, "trailing data after matrix: '" + tok + "'");
  return a;
}

AnalysisReport run_pipeline(HankelReport hankel, InputEcho input, Stage stage,
                            const PipelineOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  AnalysisReport r;
  r.input = std::move(input);
  r.stage = stage;
  r.hankel = std::move(hankel);
  const Poly& pm = r.hankel.minimal;
  const unsigned m = r.hankel.m;

  if (opt.multiplicities) {
    const Matrix hm = hankel_matrix(r.hankel.sums, m);
    std::vector<MultiplicityEntry> entries;
    unsigned total = 0;
    for (const auto& e : oracle::isolate_real_roots(pm, ratio(1, 1000))) {
      auto res = multiplicity(e, pm, hm, opt.multiplicity_tol);
      total += res.multiplicity;
      entries.push_back({res.enclosure, res.point, res.multiplicity});
    }
    if (entries.size() != m || total != r.hankel.sums.n)
      throw Error(Errc::InternalInvariant, "multiplicities do not account for the degree");
    r.multiplicities = std::move(entries);
  }

  if (stage != Stage::Localize && m >= 2) {
    const GapPolynomial gp = gap_polynomial(pm);
    r.min_gap = iterate_min_gap(gp, opt.iter);
    r.max_gap = iterate_max_gap(gp, pm, opt.iter);
  }
  if (stage != Stage::Gaps) r.segment = build_segment(pm, opt.segment);

  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

nlohmann::json rat_json(const Rat& x) {
  return {{"value", to_string(x)}, {"approx", to_double(x)}};
}

nlohmann::json to_json(const GapSequence& seq) {
  auto trail = nlohmann::json::array();
  for (const auto& x : seq.iterates) trail.push_back(rat_json(x));
  nlohmann::json j = {
      {"kind", name(seq.kind)},
      {"iterations", seq.steps()},
      {"stop_reason", name(seq.stop)},
      {"trail", std::move(trail)},
      {"bound", rat_json(seq.last())},
      {"root_approx", std::sqrt(to_double(seq.last()))},
  };
  if (seq.regime_step) j["regime_step"] = *seq.regime_step;
  return j;
}

nlohmann::json to_json(const Segment& seg) {
  return {
      {"mean", rat_json(seg.mean)},
      {"a", rat_json(seg.a)},
      {"b", rat_json(seg.b)},
      {"refined_lo", rat_json(seg.refined_lo)},
      {"refined_hi", rat_json(seg.refined_hi)},
      {"radius", to_json(seg.radius)},
      {"alpha", to_json(seg.alpha)},
      {"beta", to_json(seg.beta)},
  };
}

nlohmann::json to_json(const AnalysisReport& r) {
  const auto& h = r.hankel;
  nlohmann::json j = {
      {"input", {{"kind", r.input.kind}, {"text", r.input.text}}},
      {"stage", stage_name(r.stage)},
      {"n", h.sums.n},
      {"m", h.m},
      {"dets", rats_json(h.dets)},
      {"characteristic", poly_json(h.characteristic)},
      {"minimal", poly_json(h.minimal)},
      {"sigma", rats_json(h.sigma)},
  };
  if (r.multiplicities) {
    auto arr = nlohmann::json::array();
    for (const auto& e : *r.multiplicities)
      arr.push_back({{"lo", to_string(e.enclosure.lo)},
                     {"hi", to_string(e.enclosure.hi)},
                     {"point", to_string(e.point)},
                     {"approx", to_double(e.point)},
                     {"multiplicity", e.multiplicity}});
    j["multiplicities"] = std::move(arr);
  }
  nlohmann::json iterations = nlohmann::json::object();
  nlohmann::json stops = nlohmann::json::object();
  auto note = [&](std::string_view key, const GapSequence& s) {
    iterations[std::string(key)] = s.steps();
    stops[std::string(key)] = name(s.stop);
  };
  if (r.stage != Stage::Localize) {
    j["min_gap"] = r.min_gap ? to_json(*r.min_gap) : nlohmann::json(nullptr);
    j["max_gap"] = r.max_gap ? to_json(*r.max_gap) : nlohmann::json(nullptr);
    if (r.min_gap) note("min_gap", *r.min_gap);
    if (r.max_gap) note("max_gap", *r.max_gap);
  }
  if (r.segment) {
    j["segment"] = to_json(*r.segment);
    note("radius", r.segment->radius);
    note("alpha", r.segment->alpha);
    note("beta", r.segment->beta);
  }
  j["iterations"] = std::move(iterations);
  j["stop_reasons"] = std::move(stops);
  if (r.elapsed_ms) j["timing_ms"] = *r.elapsed_ms;
  return j;
}

namespace {

std::string approx(const Rat& x) {
  std::ostringstream os;
  os << std::setprecision(12) << to_double(x);
  return os.str();
}

void write_sequence(std::ostream& out, std::string_view label, const GapSequence& s) {
  out << std::left << std::setw(13) << label << approx(s.last()) << "  (gap ~ "
      << std::setprecision(12) << std::sqrt(to_double(s.last())) << ")  after " << s.steps()
      << " steps [" << name(s.stop) << "]\n";
  out << std::setw(13) << "" << "exact: " << to_string(s.last()) << "\n";
}

}  // namespace

void write_text(std::ostream& out, const AnalysisReport& r) {
  const auto& h = r.hankel;
  out << std::left;
  out << std::setw(13) << "input" << r.input.kind << " " << r.input.text << "\n";
  out << std::setw(13) << "degree" << "n = " << h.sums.n << ", distinct roots m = " << h.m << "\n";
  out << std::setw(13) << "D_k";
  for (std::size_t k = 0; k < h.dets.size(); ++k) out << (k ? ", " : "") << to_display(h.dets[k]);
  out << "\n";
  out << std::setw(13) << "minimal" << h.minimal.to_string() << "\n";
  out << std::setw(13) << "sigma";
  for (std::size_t k = 0; k < h.sigma.size(); ++k) out << (k ? ", " : "") << to_display(h.sigma[k]);
  out << "\n";
  if (r.multiplicities) {
    out << std::setw(13) << "mults";
    bool first = true;
    for (const auto& e : *r.multiplicities) {
      out << (first ? "" : ", ") << "~" << approx(e.point) << ": " << e.multiplicity;
      first = false;
    }
    out << "\n";
  }
  if (r.stage != Stage::Localize) {
    if (r.min_gap) {
      write_sequence(out, "min gap^2 >", *r.min_gap);
      write_sequence(out, "max gap^2 <", *r.max_gap);
    } else {
      out << std::setw(13) << "gaps" << "undefined for a single distinct root\n";
    }
  }
  if (r.segment) {
    const auto& s = *r.segment;
    out << std::setw(13) << "segment" << "[" << approx(s.a) << ", " << approx(s.b) << "]\n";
    out << std::setw(13) << "refined" << "[" << approx(s.refined_lo) << ", " << approx(s.refined_hi)
        << "]\n";
    out << std::setw(13) << "" << "exact: [" << to_string(s.refined_lo) << ", "
        << to_string(s.refined_hi) << "]\n";
  }
  if (r.elapsed_ms) out << std::setw(13) << "time" << *r.elapsed_ms << " ms\n";
}

}  // namespace hgap
