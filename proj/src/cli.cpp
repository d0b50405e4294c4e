#include "hgap/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "hgap/report.hpp"
#include "hgap/wilkinson.hpp"

namespace hgap {

int exit_code(Errc code) noexcept {
  switch (code) {
    case Errc::NotRealRooted:
      return 2;
    case Errc::ParseError:
    case Errc::InvalidArgument:
    case Errc::ZeroPolynomial:
    case Errc::NotHermitian:
    case Errc::BadDegree:
    case Errc::DuplicateRoot:
    case Errc::BadEpsilon:
    case Errc::TooFewRoots:
    case Errc::ZeroEpsilon:
    case Errc::NegativeRadicand:
      return 1;
    default:
      return 3;
  }
}

namespace {

struct NumericFlags {
  std::string tol = "2^-40";
  std::size_t max_iter = 10000;
  std::string sqrt_prec = "2^-40";
  unsigned denom_cap_bits = 128;

  void attach(CLI::App& app) {
    app.add_option("--tol", tol, "Relative increment that stops a sequence (rational, 1e-9, 2^-40)")
        ->capture_default_str();
    app.add_option("--max-iter", max_iter, "Iteration cap per sequence")->capture_default_str();
    app.add_option("--sqrt-prec", sqrt_prec, "Relative precision of rational square roots")
        ->capture_default_str();
    app.add_option("--denom-cap", denom_cap_bits,
                   "Round iterates outward to denominators <= 2^BITS; 0 keeps them exact")
        ->capture_default_str();
  }

  PipelineOptions pipeline() const {
    PipelineOptions o;
    o.iter.tol = parse_rat(tol);
    o.iter.max_iter = max_iter;
    if (denom_cap_bits == 0)
      o.iter.denom_cap.reset();
    else
      o.iter.denom_cap = Int(1) << denom_cap_bits;
    o.segment.radius = o.iter;
    o.segment.endpoint = o.iter;
    o.segment.sqrt_prec = parse_rat(sqrt_prec);
    if (o.iter.tol <= 0) throw Error(Errc::InvalidArgument, "--tol must be positive");
    if (o.segment.sqrt_prec <= 0 || o.segment.sqrt_prec >= 1)
      throw Error(Errc::InvalidArgument, "--sqrt-prec must lie in (0, 1)");
    return o;
  }
};

struct InputFlags {
  std::string coeffs;
  std::string roots;
  std::string matrix_file;
  std::string imag_file;
  std::string input_file;

  void attach(CLI::App& app) {
    app.add_option("--coeffs", coeffs,
                   "Ascending coefficients, comma-separated: \"0,3,-4,1\" is x^3 - 4x^2 + 3x");
    app.add_option("--roots", roots, "Roots, comma-separated; repeats are multiplicities");
    app.add_option("--matrix-file", matrix_file,
                   "Symmetric matrix: first line n, then n rows of n rationals");
    app.add_option("--imag-file", imag_file,
                   "Imaginary part of a complex Hermitian matrix (same format)");
    app.add_option("input", input_file, "File holding one ascending coefficient list");
  }

  std::pair<HankelReport, InputEcho> load() const {
    const int given = !coeffs.empty() + !roots.empty() + !matrix_file.empty() + !input_file.empty();
    if (given != 1)
      throw Error(Errc::InvalidArgument,
                  "give exactly one of --coeffs, --roots, --matrix-file or an input file");
    if (!imag_file.empty() && matrix_file.empty())
      throw Error(Errc::InvalidArgument, "--imag-file needs --matrix-file");
    if (!coeffs.empty()) return {analyze_polynomial(parse_coeffs(coeffs)), {"coeffs", coeffs}};
    if (!roots.empty()) return {analyze_polynomial(parse_roots(roots)), {"roots", roots}};
    if (!input_file.empty()) {
      std::ifstream in(input_file);
      if (!in) throw Error(Errc::InvalidArgument, "cannot open " + input_file);
      std::string line;
      while (std::getline(in, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos && line[0] != '#') break;
      return {analyze_polynomial(parse_coeffs(line)), {"file", input_file}};
    }
    auto read = [](const std::string& path) {
      std::ifstream in(path);
      if (!in) throw Error(Errc::InvalidArgument, "cannot open " + path);
      return parse_matrix(in);
    };
    const Matrix re = read(matrix_file);
    if (!imag_file.empty()) {
      const Matrix im = read(imag_file);
      return {analyze_power_sums(power_sums_from_complex_hermitian(re, im, 2 * re.rows())),
              {"matrix", matrix_file + " + i " + imag_file}};
    }
    return {analyze_power_sums(power_sums_from_hermitian(re, 2 * re.rows())),
            {"matrix", matrix_file}};
  }
};

void report_error(const Error& e, bool json, std::ostream& out, std::ostream& err) {
  err << e.what() << "\n";
  if (json)
    out << nlohmann::json{{"error", name(e.code())}, {"message", e.what()},
                          {"exit_code", exit_code(e.code())}}
               .dump()
        << "\n";
}

int run_stage(const InputFlags& in, const NumericFlags& num, bool json, bool mults, Stage stage,
              std::ostream& out, std::ostream& err) {
  try {
    PipelineOptions opt = num.pipeline();
    opt.multiplicities = mults;
    auto [hankel, echo] = in.load();
    const AnalysisReport r = run_pipeline(std::move(hankel), std::move(echo), stage, opt);
    if (json)
      out << to_json(r).dump(2) << "\n";
    else
      write_text(out, r);
    return 0;
  } catch (const Error& e) {
    report_error(e, json, out, err);
    return exit_code(e.code());
  }
}

nlohmann::json batch_line(std::size_t lineno, const std::string& text, Stage stage,
                          const PipelineOptions& opt) {
  try {
    AnalysisReport r = run_pipeline(analyze_polynomial(parse_coeffs(text)), {"batch", text},
                                    stage, opt);
    r.elapsed_ms.reset();
    nlohmann::json j = to_json(r);
    j["line"] = lineno;
    return j;
  } catch (const Error& e) {
    return {{"line", lineno},
            {"input", {{"kind", "batch"}, {"text", text}}},
            {"error", name(e.code())},
            {"message", e.what()},
            {"exit_code", exit_code(e.code())}};
  }
}

int run_batch(const std::string& path, unsigned jobs, Stage stage, const NumericFlags& num,
              bool mults, std::ostream& out, std::ostream& err) {
  PipelineOptions opt;
  try {
    opt = num.pipeline();
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code(e.code());
  }
  opt.multiplicities = mults;
  std::ifstream file;
  if (path != "-") {
    file.open(path);
    if (!file) {
      err << "cannot open " << path << "\n";
      return 1;
    }
  }
  std::istream& in = path == "-" ? std::cin : file;

  std::vector<std::pair<std::size_t, std::string>> lines;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    lines.emplace_back(no, line);
  }
  if (jobs == 0) jobs = 1;
  for (std::size_t start = 0; start < lines.size(); start += jobs) {
    const std::size_t end = std::min(lines.size(), start + jobs);
    std::vector<std::future<nlohmann::json>> pending;
    for (std::size_t i = start; i < end; ++i)
      pending.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred,
                                   batch_line, lines[i].first, lines[i].second, stage, opt));
    for (auto& f : pending) out << f.get().dump() << "\n";
  }
  return 0;
}

int run_wilkinson(unsigned m, const std::string& mu_text, std::optional<std::size_t> steps,
                  const std::string& delta_text, const NumericFlags& num, bool json,
                  std::ostream& out, std::ostream& err) {
  try {
    if (m < 3) throw Error(Errc::TooFewRoots, "wilkinson needs m >= 3");
    const Rat mu = parse_rat(mu_text);
    if (mu <= 0) throw Error(Errc::InvalidArgument, "--mu must be positive");
    WilkinsonOptions opt;
    if (num.denom_cap_bits == 0)
      opt.denom_cap.reset();
    else
      opt.denom_cap = Int(1) << num.denom_cap_bits;

    std::optional<Rat> delta;
    if (!delta_text.empty()) {
      delta = parse_rat(delta_text);
      if (*delta <= 0) throw Error(Errc::InvalidArgument, "--delta must be positive");
    }
    WilkinsonSpec ws = steps    ? w_recurrence(m, *steps, opt)
                         : delta ? w_recurrence_until(m, *delta, num.max_iter, opt)
                                 : w_recurrence(m, 10, opt);
    ws.mu = mu;
    const auto checks = check_rate_bounds(ws);
    const bool all_ok =
        std::all_of(checks.begin(), checks.end(), [](const StepCheck& c) { return c.ok; });

    nlohmann::json j;
    j["m"] = m;
    j["mu"] = to_string(mu);
    auto w = nlohmann::json::array(), scaled = nlohmann::json::array(), eps = nlohmann::json::array();
    for (std::size_t k = 0; k < ws.w_trail.size(); ++k) {
      w.push_back(rat_json(ws.w_trail[k]));
      scaled.push_back(rat_json(mu * mu * ws.w_trail[k]));
      eps.push_back({{"lower", to_string(ws.eps_lower[k])},
                     {"upper", to_string(ws.eps_upper[k])},
                     {"approx", to_double(ws.eps_upper[k])}});
    }
    auto steps_json = nlohmann::json::array();
    for (const auto& c : checks)
      steps_json.push_back({{"k", c.k},
                            {"increment", to_string(c.increment)},
                            {"lower", to_string(c.lower)},
                            {"upper", to_string(c.upper)},
                            {"ok", c.ok}});
    j["w2_trail"] = std::move(w);
    j["mu2_trail"] = std::move(scaled);
    j["eps_trail"] = std::move(eps);
    j["rate_checks"] = std::move(steps_json);
    j["rate_checks_ok"] = all_ok;
    if (delta) {
      j["delta"] = to_string(*delta);
      j["forecast"] = predicted_iterations(m, *delta);
      j["majorant"] = majorant_iterations(m, *delta);
      const auto observed = observed_iterations(ws, *delta);
      j["observed"] = observed ? nlohmann::json(*observed) : nlohmann::json(nullptr);
    }

    if (json) {
      out << j.dump(2) << "\n";
    } else {
      out << "m = " << m << ", mu = " << to_display(mu) << "\n";
      for (std::size_t k = 0; k < ws.w_trail.size(); ++k) {
        out << "w_" << k << "^2 = " << to_display(ws.w_trail[k]);
        if (ws.w_trail[k].get_den() != 1)
          out << "  (~" << std::setprecision(12) << to_double(ws.w_trail[k]) << ")";
        out << "  eps <= " << std::setprecision(6) << to_double(ws.eps_upper[k]);
        if (k < checks.size()) out << (checks[k].ok ? "  rate ok" : "  rate VIOLATED");
        out << "\n";
      }
      if (delta) {
        out << "delta = " << to_display(*delta) << ": forecast k = " << j["forecast"]
            << ", majorant k = " << j["majorant"] << ", observed k = " << j["observed"] << "\n";
      }
    }
    return all_ok ? 0 : 3;
  } catch (const Error& e) {
    report_error(e, json, out, err);
    return exit_code(e.code());
  }
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Hankel-matrix analysis of real-rooted polynomials: distinct roots, "
               "minimal polynomial, monotone rational bounds on the minimal and maximal root "
               "gaps, and a certified segment holding every root.",
               "hgap"};
  app.require_subcommand(1);

  InputFlags in;
  NumericFlags num;
  bool json = false;
  bool mults = false;

  auto* analyze = app.add_subcommand("analyze", "Full pipeline: Hankel ladder, gaps, segment");
  auto* gaps = app.add_subcommand("gaps", "Hankel ladder and gap sequences only");
  auto* localize = app.add_subcommand("localize", "Hankel ladder and localisation segment only");
  for (auto* sub : {analyze, gaps, localize}) {
    in.attach(*sub);
    num.attach(*sub);
    sub->add_flag("--json", json, "Emit a JSON report");
    sub->add_flag("--multiplicities", mults, "Certify root multiplicities");
  }

  auto* wilk = app.add_subcommand("wilkinson", "Normalised recurrence for equidistant roots");
  unsigned wm = 0;
  std::string wmu = "1";
  std::optional<std::size_t> wsteps;
  std::string wdelta;
  wilk->add_option("-m", wm, "Number of roots (>= 3)")->required();
  wilk->add_option("--mu", wmu, "Root spacing")->capture_default_str();
  wilk->add_option("--steps", wsteps, "Number of recurrence steps");
  wilk->add_option("--delta", wdelta, "Run until eps_k < delta and compare with the forecast");
  num.attach(*wilk);
  wilk->add_flag("--json", json, "Emit JSON");

  auto* batch = app.add_subcommand("batch", "One coefficient list per line in, one JSON object per line out");
  std::string batch_path = "-";
  unsigned jobs = 1;
  std::string batch_stage = "analyze";
  batch->add_option("file", batch_path, "Input file, '-' for stdin")->capture_default_str();
  batch->add_option("--jobs", jobs, "Lines processed concurrently")->capture_default_str();
  batch->add_option("--stage", batch_stage, "analyze | gaps | localize")
      ->check(CLI::IsMember({"analyze", "gaps", "localize"}))
      ->capture_default_str();
  num.attach(*batch);
  batch->add_flag("--multiplicities", mults, "Certify root multiplicities");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 1;
  }

  if (analyze->parsed()) return run_stage(in, num, json, mults, Stage::Analyze, out, err);
  if (gaps->parsed()) return run_stage(in, num, json, mults, Stage::Gaps, out, err);
  if (localize->parsed()) return run_stage(in, num, json, mults, Stage::Localize, out, err);
  if (wilk->parsed()) return run_wilkinson(wm, wmu, wsteps, wdelta, num, json, out, err);
  const Stage st = batch_stage == "gaps"       ? Stage::Gaps
                   : batch_stage == "localize" ? Stage::Localize
                                               : Stage::Analyze;
  return run_batch(batch_path, jobs, st, num, mults, out, err);
}

}  // namespace hgap
