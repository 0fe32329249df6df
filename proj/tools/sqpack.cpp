// sqpack: explicit square packings in the unit square, exact side-sum
// accounting, substitution-based upper-bound certificates, and a stochastic
// search for packings that would beat the conjectured sums.
#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sqpack/bounds.hpp"
#include "sqpack/construct.hpp"
#include "sqpack/geometry.hpp"
#include "sqpack/io.hpp"
#include "sqpack/search.hpp"

namespace {

using namespace sqpack;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string approx(const Rational& r) { return r.to_decimal_string(12); }

std::string decomposition_line(const Decomposition& d) {
  std::ostringstream out;
  if (d.perfect_square) {
    out << d.n << " = " << d.k << "²; f = " << d.k;
  } else {
    out << d.n << " = " << d.k << "² + 2·";
    if (d.c < 0)
      out << "(" << d.c << ")";
    else
      out << d.c;
    Rational f = conjectured_value(d.n);
    out << " + 1; conjectured f = " << f.to_string();
    if (!f.is_integer()) out << " ≈ " << approx(f);
  }
  return out.str();
}

void print_violations(const VerificationReport& report, std::ostream& out) {
  for (const Violation& v : report.violations) {
    switch (v.kind) {
      case ViolationKind::NonpositiveSide:
        out << "  square " << v.first << ": nonpositive side\n";
        break;
      case ViolationKind::Containment:
        out << "  square " << v.first << ": outside the unit square, witness corner ("
            << v.witness_x << ", " << v.witness_y << ")\n";
        break;
      case ViolationKind::Overlap:
        out << "  squares " << v.first << " and " << v.second
            << ": open interiors overlap, witness point (" << v.witness_x << ", "
            << v.witness_y << ")\n";
        break;
    }
  }
}

Direction parse_direction(const std::string& s) {
  if (s == "below" || s == "from-below") return Direction::FromBelow;
  if (s == "above" || s == "from-above") return Direction::FromAbove;
  throw UsageError("direction must be 'below' or 'above'");
}

std::optional<Rational> parse_slack(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return Rational::parse_number(s);
}

int cmd_conjecture(long long n) {
  std::cout << decomposition_line(decompose(n)) << "\n";
  return 0;
}

int cmd_construct(long long n, const std::string& slack_text, const std::string& out_json,
                  const std::string& out_svg) {
  Packing p = construct_conjectured(n, parse_slack(slack_text));
  Rational sum = side_sum(p);
  VerificationReport report = verify(p);
  std::cout << "constructed packing for n = " << n << ": " << p.size() << " squares\n"
            << "exact side sum = " << sum << " ≈ " << approx(sum) << "\n"
            << "conjectured f(" << n << ") = " << conjectured_value(n) << "\n"
            << "verification: " << (report.valid ? "OK" : "INVALID") << "\n";
  print_violations(report, std::cout);
  if (!out_json.empty()) {
    io::write_file(out_json, io::serialize_packing(p));
    std::cout << "wrote packing JSON to " << out_json << "\n";
  }
  if (!out_svg.empty()) {
    io::write_file(out_svg, io::packing_svg(p));
    std::cout << "wrote SVG to " << out_svg << "\n";
  }
  return report.valid ? 0 : 1;
}

void print_certificate_summary(const BoundCertificate& cert, std::ostream& out) {
  if (cert.has_limit_claim()) {
    const LimitClaim& claim = cert.limit_claim();
    out << "limit b→∞: f(" << claim.n << ") ≤ " << claim.value << " (conditional on P("
        << cert.assumed_c << "))\n";
    if (!claim.witness.empty()) {
      const auto& [b, bound] = claim.witness.back();
      Rational residual = bound - claim.value;
      out << "residual at b=" << b << ": " << residual << " ≈ " << approx(residual) << "\n";
    }
  }
}

int cmd_bound(long long k, long long c, const std::string& dir_text, long long b,
              std::vector<long long> schedule, const std::string& out_path) {
  Direction dir = parse_direction(dir_text);
  long long n = k * k + 2 * c + 1;

  auto [one_closed, one_step] = step_one_bound(k, c, dir);
  std::cout << "target f(" << n << "), k = " << k << ", c = " << c
            << ", direction = " << to_string(dir) << "\n"
            << "step one (a=" << one_step.a << ", b=" << one_step.b << "): f(" << n
            << ") ≤ " << one_closed << " ≈ " << approx(one_closed) << "\n";

  BoundCertificate cert;
  if (b > 0) {
    auto [two_closed, two_step] = step_two_bound(k, c, b, dir);
    std::cout << "step two (a=" << k << ", b=" << b << "): f(" << n << ") ≤ " << two_closed
              << " ≈ " << approx(two_closed) << "\n";
    cert = single_bound_certificate(k, c, b, dir);
    std::cout << "limit b→∞: f(" << n << ") ≤ " << (Rational(k) + Rational(c, k))
              << " (conditional on P(" << cert.assumed_c << "))\n";
    (void)two_step;
  } else {
    if (schedule.empty()) schedule = default_b_schedule();
    cert = limit_bound(k, c, dir, schedule);
    for (const auto& [wb, bound] : cert.limit_claim().witness)
      std::cout << "step two (a=" << k << ", b=" << wb << "): f(" << n << ") ≤ " << bound
                << " ≈ " << approx(bound) << "\n";
    print_certificate_summary(cert, std::cout);
  }

  if (!out_path.empty()) {
    io::write_file(out_path, io::serialize_certificate(cert));
    std::cout << "wrote certificate to " << out_path << "\n";
  }
  return 0;
}

int cmd_chain(long long c_start, long long c_target, long long k,
              std::vector<long long> schedule, const std::string& out_path) {
  if (schedule.empty()) schedule = default_b_schedule();
  BoundCertificate cert = chain_derive(c_start, c_target, k, schedule);
  std::cout << "chain P(" << c_start << ") → P(" << c_target << ") at k = " << k << "\n";
  for (const LimitClaim& claim : cert.limits)
    std::cout << "  hop to c=" << claim.c << " (" << to_string(claim.direction) << "): f("
              << claim.n << ") ≤ " << claim.value << "\n";
  std::cout << "final bound: f(" << k * k + 2 * c_target + 1 << ") ≤ " << cert.final_bound
            << " (conditional on P(" << c_start << "))\n";
  CertificateCheck check = check_certificate(cert);
  std::cout << "certificate check: " << (check.ok ? "OK" : "FAILED") << "\n";
  for (const std::string& issue : check.issues) std::cout << "  " << issue << "\n";
  if (!out_path.empty()) {
    io::write_file(out_path, io::serialize_certificate(cert));
    std::cout << "wrote certificate to " << out_path << "\n";
  }
  return check.ok ? 0 : 2;
}

int cmd_search(const SearchConfig& cfg, const std::string& out_json,
               const std::string& out_svg) {
  SearchResult result = search(cfg);
  std::cout << "search n=" << cfg.n << " seed=" << cfg.seed << " restarts=" << cfg.restarts
            << " iters=" << cfg.iterations_per_restart << "\n"
            << "best float sum = " << result.best_float_sum << "\n";
  if (!result.best_packing) {
    std::cout << "no candidate survived exact snapping; float result only\n";
    return 1;
  }
  const Rational& sum = *result.exact_sum;
  std::cout << "snapped exact sum = " << sum << " ≈ " << approx(sum) << " (restart "
            << result.best_restart << ")\n"
            << "conjectured f(" << cfg.n << ") = " << conjectured_value(cfg.n)
            << "; gap = " << *result.conjecture_gap << "\n"
            << "counterexample: " << (result.counterexample_flag ? "YES" : "no") << "\n";
  std::string json_path = out_json;
  if (result.counterexample_flag && json_path.empty()) {
    json_path = "counterexample-n" + std::to_string(cfg.n) + ".json";
    std::cout << "exceedance found; dumping packing\n";
  }
  if (!json_path.empty()) {
    io::write_file(json_path, io::serialize_packing(*result.best_packing));
    std::cout << "wrote packing JSON to " << json_path << "\n";
  }
  if (!out_svg.empty()) {
    io::write_file(out_svg, io::packing_svg(*result.best_packing));
    std::cout << "wrote SVG to " << out_svg << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& path) {
  Packing p = io::parse_packing(io::read_file(path));
  VerificationReport report = verify(p);
  if (report.valid) {
    std::cout << "OK: " << p.size() << " squares, side sum " << side_sum(p)
              << ", valid packing\n";
    return 0;
  }
  std::cout << "INVALID: " << report.violations.size() << " violation(s)\n";
  print_violations(report, std::cout);
  return 1;
}

int cmd_epsilon(const std::vector<std::string>& triples) {
  std::vector<EpsilonRecord> records;
  for (const std::string& t : triples) {
    auto p1 = t.find(',');
    auto p2 = t.find(',', p1 == std::string::npos ? p1 : p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos)
      throw UsageError("record \"" + t + "\" must look like k,c,estimate");
    EpsilonRecord r;
    try {
      r.k = std::stoll(t.substr(0, p1));
      r.c = std::stoll(t.substr(p1 + 1, p2 - p1 - 1));
    } catch (const std::exception&) {
      throw UsageError("record \"" + t + "\": k and c must be integers");
    }
    r.estimate = Rational::parse_number(t.substr(p2 + 1));
    records.push_back(std::move(r));
  }
  for (const EpsilonRecord& r : epsilon_diagnostic(std::move(records))) {
    std::cout << "k=" << r.k << " c=" << r.c << " estimate=" << r.estimate
              << " ε=" << r.epsilon() << " k·ε=" << r.k_epsilon();
    if (r.above_conjecture()) std::cout << "  ** above conjecture **";
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Square packings in the unit square: conjectured sums, explicit "
               "constructions, exact bound certificates, and numerical search."};
  app.require_subcommand(1);

  long long n = 1;
  auto* conjecture = app.add_subcommand("conjecture", "Decompose n and print the conjectured f(n)");
  conjecture->add_option("n", n, "number of squares")->required()->check(CLI::PositiveNumber);

  long long cn = 1;
  std::string slack_text, out_json, out_svg;
  auto* construct = app.add_subcommand("construct", "Build the packing realizing the conjectured sum");
  construct->add_option("n", cn, "number of squares")->required()->check(CLI::PositiveNumber);
  construct->add_option("--slack", slack_text,
                        "positive slack < 1/k, required for the k^2+1 family");
  construct->add_option("--out", out_json, "write the packing document here");
  construct->add_option("--svg", out_svg, "write an SVG figure here");

  long long bk = 2, bc = 0, bb = 0;
  std::string bdir = "below", bout;
  std::vector<long long> bschedule;
  auto* bound = app.add_subcommand("bound", "Derive upper bounds via grid substitution");
  bound->add_option("-k,--k", bk, "stage k")->required();
  bound->add_option("-c,--c", bc, "statement index c")->required();
  bound->add_option("-d,--direction", bdir, "below (uses P(c-1)) or above (uses P(c+1))");
  bound->add_option("-b,--b", bb, "single b for step two");
  bound->add_option("--schedule", bschedule, "b schedule for the limit (default powers of 10)");
  bound->add_option("--out", bout, "write the certificate document here");

  long long hfrom = 0, hto = 0, hk = 1;
  std::vector<long long> hschedule;
  std::string hout;
  auto* chain = app.add_subcommand("chain", "Transport the conjecture between statement indices");
  chain->add_option("--from", hfrom, "assumed statement index c_start")->required();
  chain->add_option("--to", hto, "target statement index c_target")->required();
  chain->add_option("-k,--k", hk, "stage k")->required();
  chain->add_option("--schedule", hschedule, "b schedule per hop (default powers of 10)");
  chain->add_option("--out", hout, "write the certificate document here");

  SearchConfig scfg;
  std::string sout, ssvg;
  auto* searchcmd = app.add_subcommand("search", "Anneal for high-sum packings, snap and verify exactly");
  searchcmd->add_option("n", scfg.n, "number of squares")->required()->check(CLI::PositiveNumber);
  searchcmd->add_option("--seed", scfg.seed, "RNG seed (default 1)");
  searchcmd->add_option("--restarts", scfg.restarts, "independent restarts (default 12)");
  searchcmd->add_option("--iters", scfg.iterations_per_restart,
                        "iterations per restart (default 40000)");
  searchcmd->add_option("--temp", scfg.initial_temperature, "initial temperature (default 0.25)");
  searchcmd->add_option("--cool", scfg.cooling_rate, "cooling rate per iteration (default 0.99975)");
  searchcmd->add_option("--move-scale", scfg.move_scale, "move amplitude (default 0.12)");
  searchcmd->add_option("--den-limit", scfg.snap_denominator_limit,
                        "snap denominator limit (default 10^6)");
  searchcmd->add_option("--out", sout, "write the best packing document here");
  searchcmd->add_option("--svg", ssvg, "write an SVG of the best packing here");

  std::string vpath;
  auto* verifycmd = app.add_subcommand("verify", "Exactly verify a packing document");
  verifycmd->add_option("path", vpath, "packing document")->required();

  std::vector<std::string> etriples;
  auto* epsilon = app.add_subcommand("epsilon", "Report ε = estimate - (k + c/k) and k·ε");
  epsilon->add_option("records", etriples, "records of the form k,c,estimate")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (conjecture->parsed()) return cmd_conjecture(n);
    if (construct->parsed()) return cmd_construct(cn, slack_text, out_json, out_svg);
    if (bound->parsed()) return cmd_bound(bk, bc, bdir, bb, bschedule, bout);
    if (chain->parsed()) return cmd_chain(hfrom, hto, hk, hschedule, hout);
    if (searchcmd->parsed()) return cmd_search(scfg, sout, ssvg);
    if (verifycmd->parsed()) return cmd_verify(vpath);
    if (epsilon->parsed()) return cmd_epsilon(etriples);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
