// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Expected values come from the brute-force oracles in support/.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <algorithm>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hgap/cli.hpp"
#include "hgap/error.hpp"
#include "hgap/gapcore.hpp"
#include "hgap/hankel.hpp"
#include "hgap/localize.hpp"
#include "hgap/oracle.hpp"
#include "hgap/wilkinson.hpp"
#include "support/json_schema.hpp"
#include "support/oracles.hpp"

using namespace hgap;
namespace T = hgap::testing;
using nlohmann::json;

namespace {

const Rat kTol = ratio(1, 1000000);

// Collects the first few failures of a criterion for the report line.
struct Check {
  std::size_t failures = 0;
  std::size_t cases = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ == 0) first = what;
  }
  bool ok() const { return failures == 0; }
};

std::vector<Rat> rats(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InternalInvariant;
}

// 100 simple integer-rooted polynomials of degree 3..7, roots in [-20, 20].
std::vector<T::RootSet> simple_corpus() {
  std::mt19937 rng(20240501);
  std::vector<T::RootSet> out;
  for (int i = 0; i < 100; ++i) out.push_back(T::random_roots(rng, -20, 20, 3, 7, 1, 7));
  return out;
}

template <class Cmp>
bool monotone(const std::vector<Rat>& xs, Cmp cmp) {
  for (std::size_t k = 0; k + 1 < xs.size(); ++k)
    if (!cmp(xs[k], xs[k + 1])) return false;
  return true;
}

Check hankel_ladder() {
  Check c;
  const auto a = analyze_polynomial(Poly{0, 3, -4, 1});
  c.expect(a.dets == rats({3, 14, 36}), "D(x^3-4x^2+3x)");
  c.expect(a.m == 3, "m(x^3-4x^2+3x)");
  const auto b = analyze_polynomial(Poly{-2, 5, -4, 1});
  c.expect(b.dets == rats({3, 2, 0}), "D((x-1)^2(x-2))");
  c.expect(b.m == 2, "m((x-1)^2(x-2))");
  // D_2 = t0 t2 - t1^2 = sum (p_j - p_i)^2, D_3 = prod (p_j - p_i)^2 for roots 0, 1, 3.
  const auto& t = a.sums.t;
  c.expect(a.dets[1] == t[0] * t[2] - t[1] * t[1] && a.dets[1] == 1 + 4 + 9, "D_2 identity");
  c.expect(a.dets[2] == 1 * 4 * 9, "D_3 identity");
  // With multiplicities: D_2 = r_1 r_2 (p_2 - p_1)^2.
  c.expect(b.dets[1] == 2 * 1 * 1, "D_2 with multiplicities");
  c.cases = 2;
  return c;
}

Check minimal_double_path() {
  Check c;
  std::mt19937 rng(7001);
  for (int i = 0; i < 200; ++i) {
    const auto rs = T::random_roots(rng, -20, 20, 1, 8, 3, 8);
    const Poly p = poly_from_roots(rs.roots, rs.mults);
    const auto sums = power_sums_from_coeffs(p, 2 * p.degree());
    const auto dets = hankel_determinants(sums, static_cast<std::size_t>(p.degree()));
    const unsigned m = distinct_root_count(dets);
    const auto mp = minimal_polynomial(sums, m);
    c.expect(m == rs.roots.size(), "distinct count, case " + std::to_string(i));
    c.expect(mp.poly == square_free_part(p), "minors != square-free part, case " + std::to_string(i));
    ++c.cases;
  }
  return c;
}

Check real_rootedness() {
  Check c;
  c.expect(code_of([] { analyze_polynomial(Poly{1, 0, 1}); }) == Errc::NotRealRooted, "x^2+1");
  std::mt19937 rng(7002);
  std::uniform_int_distribution<int> b(-10, 10), extra(1, 20), any(-10, 10);
  for (int i = 0; i < 50; ++i) {
    // x^2 + bx + c with b^2 < 4c has a complex pair.
    const long bb = b(rng);
    const long cc = bb * bb / 4 + extra(rng);
    Poly p{cc, bb, 1};
    if (i % 2) p = p * Poly{any(rng), any(rng), 1};
    const Errc got = code_of([&] { analyze_polynomial(p); });
    c.expect(got == Errc::NotRealRooted, "not rejected: " + p.to_string());
    ++c.cases;
  }
  return c;
}

Check multiplicity_certification() {
  Check c;
  std::mt19937 rng(7003);
  for (int i = 0; i < 60; ++i) {
    auto rs = T::random_roots(rng, -15, 15, 1, 6, 3, 8);
    if (i % 3 == 1)
      for (auto& r : rs.roots) r /= 4;
    const Poly p = poly_from_roots(rs.roots, rs.mults);
    const auto rep = analyze_polynomial(p);
    const Matrix h = hankel_matrix(rep.sums, rep.m);
    const auto chain = oracle::multiplicities_via_gcd(p, ratio(1, 1000));
    c.expect(chain.size() == rep.m, "chain size");
    for (std::size_t k = 0; k < chain.size() && k < rs.roots.size(); ++k) {
      const auto eq5 = multiplicity(chain[k].where, rep.minimal, h, kTol);
      c.expect(eq5.multiplicity == chain[k].multiplicity,
               "quadratic form vs gcd chain at " + to_display(rs.roots[k]));
      c.expect(chain[k].multiplicity == rs.mults[k], "gcd chain vs construction");
    }
    for (std::size_t a = 0; a < rs.roots.size(); ++a)
      for (std::size_t b = 0; b < rs.roots.size(); ++b) {
        const Rat g = gram_orthogonality(rs.roots[a], rs.roots[b], h);
        c.expect(g == (a == b ? ratio(1, rs.mults[a]) : Rat(0)), "Gram entry");
      }
    ++c.cases;
  }
  return c;
}

Check gap_convergence() {
  Check c;
  const auto gp0 = gap_polynomial(Poly{0, 3, -4, 1});
  c.expect(iterate_min_gap(gp0).iterates[0] == ratio(36, 49), "mu_0^2 = 36/49");
  c.expect(iterate_max_gap(gp0, Poly{0, 3, -4, 1}).iterates[1] == ratio(556, 49),
           "M_1^2 = 556/49");
  for (const auto& rs : simple_corpus()) {
    const Poly p = poly_from_roots(rs.roots);
    const auto gp = gap_polynomial(p);
    const auto lo = iterate_min_gap(gp), hi = iterate_max_gap(gp, p);
    const std::string tag = p.to_string();
    c.expect(monotone(lo.iterates, std::less<>()), "min trail not increasing: " + tag);
    c.expect(monotone(hi.iterates, std::greater<>()), "max trail not decreasing: " + tag);
    c.expect(lo.stop == StopReason::ToleranceReached && hi.stop == StopReason::ToleranceReached,
             "max_iter reached: " + tag);

    const auto encl = oracle::isolate_real_roots(p, pow2(-30));
    const auto gaps = oracle::brute_force_gaps(encl);
    const Rat mu = T::min_gap(rs.roots), big = T::max_gap(rs.roots);
    c.expect(gaps.min_gap.contains(mu) && gaps.max_gap.contains(big), "oracle gaps");
    for (const auto& x : lo.iterates)
      c.expect(x < mu * mu && x <= gaps.min_gap.hi * gaps.min_gap.hi, "min bracket: " + tag);
    for (const auto& x : hi.iterates)
      c.expect(x > big * big && x >= gaps.max_gap.lo * gaps.max_gap.lo, "max bracket: " + tag);
    // mu - mu_k = (mu^2 - mu_k^2) / (mu + mu_k) < (mu^2 - mu_k^2) / mu, and
    // M_k - M < (M_k^2 - M^2) / (2M).
    c.expect(mu * mu - lo.last() < kTol * mu, "|mu_k - mu| >= 1e-6: " + tag);
    c.expect(hi.last() - big * big < 2 * kTol * big, "|M_k - M| >= 1e-6: " + tag);
    ++c.cases;
  }
  return c;
}

Check closed_form() {
  Check c;
  std::mt19937 rng(7006);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 9), mult(1, 3);
  for (int i = 0; i < 50; ++i) {
    const Rat x = ratio(num(rng), den(rng));
    Rat y = ratio(num(rng), den(rng));
    if (y == x) y += 1;
    std::vector<unsigned> ms{static_cast<unsigned>(mult(rng)), static_cast<unsigned>(mult(rng))};
    const Poly p = poly_from_roots(std::vector<Rat>{x, y}, ms);
    const auto rep = analyze_polynomial(p);
    const auto gp = gap_polynomial(rep.minimal);
    const auto lo = iterate_min_gap(gp), hi = iterate_max_gap(gp, rep.minimal);
    const Rat gap2 = (x - y) * (x - y);
    c.expect(rep.m == 2, "m != 2");
    c.expect(lo.iterates == std::vector<Rat>{gap2} && lo.stop == StopReason::ClosedForm,
             "min gap not closed form for " + p.to_string());
    c.expect(hi.iterates == std::vector<Rat>{gap2} && hi.stop == StopReason::ClosedForm,
             "max gap not closed form for " + p.to_string());
    ++c.cases;
  }
  return c;
}

Check wilkinson_suite() {
  Check c;
  c.expect(w0_squared(3) == ratio(4, 9), "w_0^2(3)");
  c.expect(w_recurrence(3, 1).w_trail[1] == ratio(436, 621), "w_1^2(3)");
  for (unsigned m = 3; m <= 10; ++m) {
    const auto s = w_recurrence_until(m, ratio(1, 1000), 10000);
    c.expect(monotone(s.w_trail, std::less<>()) && s.w_trail.back() < 1,
             "w trail not increasing below 1, m=" + std::to_string(m));
    for (const auto& step : check_rate_bounds(s))
      c.expect(step.ok, "rate bracket, m=" + std::to_string(m) + " k=" + std::to_string(step.k));
    ++c.cases;
  }
  IterationOptions exact;
  exact.denom_cap.reset();
  exact.max_iter = 3;
  exact.tol = 0;
  WilkinsonOptions wexact;
  wexact.denom_cap.reset();
  for (unsigned m = 3; m <= 6; ++m)
    for (const Rat& mu : {Rat(1), Rat(5), ratio(1, 3)}) {
      const auto seq = iterate_min_gap(gap_polynomial(wilkinson_poly(m, mu)), exact);
      const auto w = w_recurrence(m, seq.steps(), wexact);
      bool same = seq.iterates.size() == w.w_trail.size();
      for (std::size_t k = 0; same && k < w.w_trail.size(); ++k)
        same = seq.iterates[k] == mu * mu * w.w_trail[k];
      c.expect(same, "scaling identity, m=" + std::to_string(m) + " mu=" + to_display(mu));
      ++c.cases;
    }
  const Rat delta = ratio(1, 100);
  const auto forecast = predicted_iterations(3, delta);
  const auto observed = observed_iterations(w_recurrence_until(3, delta, 1000), delta);
  c.expect(forecast == 9, "forecast(3, 0.01) = " + std::to_string(forecast));
  c.expect(observed && *observed <= forecast, "observed exceeds forecast");
  return c;
}

Check localization() {
  Check c;
  const Rat prec = pow2(-40);
  for (const auto& rs : simple_corpus()) {
    const Poly p = poly_from_roots(rs.roots);
    const std::string tag = p.to_string();
    const auto s = build_segment(p);
    c.expect(s.a <= s.refined_lo && s.refined_lo <= s.refined_hi && s.refined_hi <= s.b,
             "[refined] not inside [a, b]: " + tag);
    c.expect(monotone(s.radius.iterates, std::greater<>()), "radius not decreasing: " + tag);
    c.expect(monotone(s.alpha.iterates, std::less<>()), "alpha not increasing: " + tag);
    c.expect(monotone(s.beta.iterates, std::less<>()), "beta not increasing: " + tag);

    // Each enclosed root lies in [refined_lo, refined_hi]: clip the
    // enclosure to the segment and recount its root with Sturm.
    const auto seq = oracle::sturm_sequence(p);
    const auto encl = oracle::isolate_real_roots(p, prec);
    for (const auto& e : encl) {
      const Rat lo = std::max(e.lo, s.refined_lo), hi = std::min(e.hi, s.refined_hi);
      const bool inside =
          lo <= hi && (oracle::count_roots(seq, lo, hi) == 1 || p(lo) == 0);
      c.expect(inside, "enclosed root outside refined segment: " + tag);
    }
    // alpha limit against the oracle's smallest root.
    const auto& first = encl.front();
    const Rat dlo = first.lo - s.a, dhi = first.hi - s.a;
    c.expect(abs(s.alpha.last() - dlo * dlo) < kTol && abs(s.alpha.last() - dhi * dhi) < kTol,
             "alpha limit off: " + tag);
    ++c.cases;
  }
  return c;
}

Check z_identity() {
  Check c;
  std::mt19937 rng(7009);
  std::uniform_int_distribution<int> num(-60, 60), den(1, 11);
  while (c.cases < 100) {
    auto rs = T::random_roots(rng, -12, 12, 1, 6, 1, 6);
    const Rat scale = den(rng);
    for (auto& r : rs.roots) r /= scale;
    if (rs.roots.size() < 2) continue;
    const auto gp = gap_polynomial(poly_from_roots(rs.roots));
    const Rat eps = ratio(num(rng), den(rng));
    if (eps == 0 || gp.delta(eps * eps) == 0) continue;
    const Rat lhs = (z_function(gp, eps) + Rat(gp.m) / (2 * eps)) / eps;
    c.expect(lhs == pair_sum(gp, eps * eps), "identity fails at eps=" + to_string(eps));
    c.expect(lhs == T::brute_pair_sum(rs.roots, eps * eps), "pair sum vs brute force");
    ++c.cases;
  }
  // m = 1: Z(eps) = -1/(2 eps).
  c.expect(z_function(GapPolynomial{Poly{1}, 1}, 2) == ratio(-1, 4), "m = 1");
  return c;
}

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(std::move(args), out, err);
  return {code, out.str()};
}

Check cli_contract() {
  Check c;
  const json schema = T::load_report_schema();

  const auto a = cli({"analyze", "--coeffs", "0,3,-4,1", "--json"});
  c.expect(a.code == 0, "exit code of analyze x^3-4x^2+3x");
  if (a.code == 0) {
    const json j = json::parse(a.out);
    c.expect(T::validate(j, schema).empty(), "schema");
    c.expect(j["m"] == 3 && j["dets"] == json({"3/1", "14/1", "36/1"}), "m / dets");
    const Rat lo = parse_rat(j["min_gap"]["bound"]["value"].get<std::string>());
    const Rat hi = parse_rat(j["max_gap"]["bound"]["value"].get<std::string>());
    c.expect(lo < 1 && 1 - lo < kTol, "min gap^2 -> 1");
    c.expect(hi > 9 && hi - 9 < kTol, "max gap^2 -> 9");
  }

  const auto b = cli({"analyze", "--coeffs", "1,0,1", "--json"});
  c.expect(b.code == 2, "exit code of analyze x^2+1");
  if (!b.out.empty()) {
    const json j = json::parse(b.out);
    c.expect(T::validate(j, schema, schema["definitions"]["error"]).empty(), "error schema");
    c.expect(j["message"] == "not real-rooted: D_2 = -4/1 < 0", "error message");
  }

  const auto m = cli({"analyze", "--coeffs", "-2,5,-4,1", "--multiplicities", "--json"});
  c.expect(m.code == 0, "exit code of analyze (x-1)^2(x-2)");
  if (m.code == 0) {
    const json j = json::parse(m.out);
    c.expect(T::validate(j, schema).empty(), "schema");
    c.expect(j["m"] == 2 && j["minimal"]["text"] == "x^2 - 3x + 2", "minimal");
    const auto& ms = j["multiplicities"];
    c.expect(ms.size() == 2 && ms[0]["point"] == "1/1" && ms[0]["multiplicity"] == 2 &&
                 ms[1]["point"] == "2/1" && ms[1]["multiplicity"] == 1,
             "multiplicities {1:2, 2:1}");
  }
  c.cases = 3;

  // Batch: 100 lines, mixed successes and failures.
  std::mt19937 rng(7010);
  std::ostringstream corpus;
  for (int i = 0; i < 100; ++i) {
    if (i % 10 == 3) {
      corpus << "1,0," << (i % 4) + 1 << "\n";  // complex roots
    } else {
      const auto rs = T::random_roots(rng, -9, 9, 1, 4, 2, 6);
      const Poly p = poly_from_roots(rs.roots, rs.mults);
      for (std::size_t k = 0; k < p.coeffs().size(); ++k)
        corpus << (k ? "," : "") << to_display(p.coeffs()[k]);
      corpus << "\n";
    }
  }
  const auto path = std::filesystem::temp_directory_path() / "hgap_acceptance_batch.txt";
  std::ofstream(path) << corpus.str();
  const auto serial = cli({"batch", path.string(), "--jobs", "1"});
  const auto parallel = cli({"batch", path.string(), "--jobs", "8"});
  const auto again = cli({"batch", path.string(), "--jobs", "8"});
  c.expect(serial.code == 0 && parallel.code == 0, "batch exit code");
  c.expect(serial.out == parallel.out && parallel.out == again.out, "batch not deterministic");
  std::istringstream lines(serial.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const json j = json::parse(line);
    c.expect(j["line"] == count + 1, "batch order at line " + std::to_string(count + 1));
    ++count;
  }
  c.expect(count == 100, "batch produced " + std::to_string(count) + " lines");
  ++c.cases;
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Check (*run)();
  };
  const Criterion criteria[] = {
      {"exact Hankel ladder", hankel_ladder},
      {"minimal polynomial: minors == square-free part (200 cases)", minimal_double_path},
      {"real-rootedness certification (x^2+1 and 50 complex-rooted)", real_rootedness},
      {"multiplicities: quadratic form == gcd chain, Gram == diag(1/r)", multiplicity_certification},
      {"min/max gap convergence to 1e-6 (100 cases)", gap_convergence},
      {"m = 2 closed form, zero iterations", closed_form},
      {"Wilkinson values, rate bracket, scaling identity, forecast", wilkinson_suite},
      {"localisation soundness and alpha limit to 1e-6", localization},
      {"Z(eps) identity (100 cases)", z_identity},
      {"CLI exit codes, JSON fields, batch determinism", cli_contract},
  };
  int failed = 0, index = 0;
  for (const auto& crit : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = crit.run();
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (c.ok() ? "PASS" : "FAIL") << "  [" << index << "] " << crit.name << "  ("
              << c.cases << " cases, " << secs << " s)";
    if (!c.ok()) std::cout << "  " << c.failures << " failures, first: " << c.first;
    std::cout << "\n";
    failed += c.ok() ? 0 : 1;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << (10 - failed) << "/10\n";
  return failed ? 1 : 0;
}
