// Command line front end. Every verb buffers its whole artifact and writes
// it only on success, so a failing invocation produces no partial output.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "binomrank/characterization.hpp"
#include "binomrank/errors.hpp"
#include "binomrank/gf2.hpp"
#include "binomrank/json_writer.hpp"
#include "binomrank/parity.hpp"
#include "binomrank/systems.hpp"
#include "binomrank/validation.hpp"

namespace {

using namespace binomrank;

// Largest row the text verbs will materialize, and the widest generator
// index (2^popcount entries) the tuple verbs will expand.
constexpr std::int64_t kRowCap = 1 << 20;
constexpr int kPopcountCap = 20;
constexpr std::int64_t kPascalCap = 1 << 12;
constexpr std::int64_t kGridCap = 1 << 24;

void require_modulus(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
}

void require_offset(std::int64_t j) {
  if (j < 0) throw std::invalid_argument("j must be >= 0");
}

void require_row_bound(std::int64_t m) {
  if (m > kRowCap)
    throw RefusalError("row of length " + std::to_string(m + 1) +
                       " exceeds the materialization bound " + std::to_string(kRowCap + 1));
}

void require_index_bound(std::int64_t m) {
  int pc = __builtin_popcountll(static_cast<unsigned long long>(m));
  if (pc > kPopcountCap)
    throw RefusalError("generator index for m with popcount " + std::to_string(pc) +
                       " exceeds the bound of " + std::to_string(kPopcountCap));
}

void require_grid_bound(std::int64_t cells) {
  if (cells > kGridCap)
    throw RefusalError("grid of " + std::to_string(cells) + " points exceeds the bound of " +
                       std::to_string(kGridCap));
}

std::string parity_row(std::int64_t m) {
  std::string row;
  row.reserve(static_cast<std::size_t>(m) + 1);
  for (std::int64_t n = 0; n <= m; ++n)
    row += binom_parity(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(n)) ? '1' : '0';
  return row;
}

std::string run_parity(std::int64_t m, const std::string& fmt) {
  require_modulus(m);
  require_row_bound(m);
  std::string row = parity_row(m);
  if (fmt == "json") {
    Json out = Json::object();
    out.add("m", m);
    out.add("row", row);
    return out.dump() + "\n";
  }
  return row + "\n";
}

std::string run_odd_positions(std::int64_t m, const std::string& fmt) {
  require_modulus(m);
  require_index_bound(m);
  OddIndex idx = odd_positions(static_cast<std::uint64_t>(m));
  if (fmt == "json") {
    Json entries = Json::array();
    for (const auto& e : idx.entries) {
      Json tuple = Json::array();
      for (auto part : e.tuple) tuple.push(part);
      Json item = Json::object();
      item.add("position", e.position);
      item.add("tuple", std::move(tuple));
      entries.push(std::move(item));
    }
    Json out = Json::object();
    out.add("m", idx.m);
    out.add("count", static_cast<std::uint64_t>(idx.entries.size()));
    out.add("entries", std::move(entries));
    return out.dump() + "\n";
  }
  std::string out;
  for (const auto& e : idx.entries) {
    out += std::to_string(e.position);
    out += ':';
    for (auto part : e.tuple) {
      out += ' ';
      out += std::to_string(part);
    }
    out += '\n';
  }
  return out;
}

std::string run_runs(std::int64_t m, const std::string& fmt) {
  require_modulus(m);
  require_row_bound(m);
  RunProfile profile = even_run_profile(static_cast<std::uint64_t>(m));
  if (fmt == "json") {
    Json runs = Json::array();
    for (const auto& r : profile.runs) {
      Json item = Json::object();
      item.add("start", r.start);
      item.add("length", r.length);
      item.add("odd", r.odd);
      runs.push(std::move(item));
    }
    Json out = Json::object();
    out.add("m", profile.m);
    out.add("runs", std::move(runs));
    return out.dump() + "\n";
  }
  std::string out;
  for (const auto& r : profile.runs) {
    out += std::to_string(r.start);
    out += ' ';
    out += std::to_string(r.length);
    out += r.odd ? " odd\n" : " even\n";
  }
  return out;
}

std::string run_audit(std::int64_t mmax, unsigned threads, const std::string& fmt) {
  if (mmax < 1) throw std::invalid_argument("mmax must be >= 1");
  require_row_bound(mmax);
  AuditSummary summary = audit_all(static_cast<std::uint64_t>(mmax), threads);
  if (fmt == "json") return to_json(summary).dump() + "\n";
  std::ostringstream out;
  out << "mmax: " << summary.mmax << "\n";
  out << "fact1: pass=" << summary.fact1_pass << " fail=" << summary.fact1_violations << "\n";
  out << "fact2: pass=" << summary.fact2_pass << " fail=" << summary.fact2_violations << "\n";
  out << "fact3: pass=" << summary.fact3_pass << " fail=" << summary.fact3_violations << "\n";
  out << "index_scan_mismatches: " << summary.index_scan_mismatches << "\n";
  out << "total_odd_positions: " << summary.total_odd_positions << "\n";
  for (const auto& s : summary.samples)
    out << "m=" << s.m << " fact=" << s.fact << " " << s.detail << "\n";
  return out.str();
}

std::string run_pascal(std::int64_t rows, const std::string& fmt) {
  if (rows < 1) throw std::invalid_argument("rows must be >= 1");
  if (rows > kPascalCap)
    throw RefusalError("triangle of " + std::to_string(rows) + " rows exceeds the bound of " +
                       std::to_string(kPascalCap));
  std::string out;
  if (fmt == "pbm") {
    out = "P1\n" + std::to_string(rows) + " " + std::to_string(rows) + "\n";
    int line = 0;
    for (std::int64_t m = 0; m < rows; ++m) {
      for (std::int64_t n = 0; n < rows; ++n) {
        out += n <= m && binom_parity(static_cast<std::uint64_t>(m),
                                      static_cast<std::uint64_t>(n))
                   ? '1'
                   : '0';
        if (++line == 64) {
          out += '\n';
          line = 0;
        }
      }
    }
    if (line != 0) out += '\n';
    return out;
  }
  for (std::int64_t m = 0; m < rows; ++m) {
    for (std::int64_t n = 0; n <= m; ++n)
      out += binom_parity(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(n)) ? '1'
                                                                                        : '.';
    out += '\n';
  }
  return out;
}

std::string matrix_row_string(const Gf2Matrix& a, std::size_t r) {
  std::string row;
  for (std::size_t c = 0; c < a.cols(); ++c) row += a.get(r, c) ? '1' : '0';
  return row;
}

std::string vector_string(const Gf2Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += v.get(i) ? '1' : '0';
  return out;
}

Json system_json(const LinearSystem& sys) {
  Json matrix = Json::array();
  for (std::size_t r = 0; r < sys.a.rows(); ++r) matrix.push(matrix_row_string(sys.a, r));
  Json out = Json::object();
  out.add("rows", static_cast<std::uint64_t>(sys.a.rows()));
  out.add("cols", static_cast<std::uint64_t>(sys.a.cols()));
  out.add("matrix", std::move(matrix));
  out.add("rhs", vector_string(sys.b));
  return out;
}

std::string run_build_i(std::int64_t m, std::int64_t j, std::int64_t k, std::int64_t l,
                        const std::string& fmt) {
  require_modulus(m);
  LinearSystem sys = build_problem_i({static_cast<std::uint64_t>(m), j, k, l});
  if (fmt == "json") {
    Json out = Json::object();
    out.add("m", m);
    out.add("j", j);
    out.add("k", k);
    out.add("l", l);
    Json body = system_json(sys);
    out.add("system", std::move(body));
    return out.dump() + "\n";
  }
  return to_dump(sys.a, sys.b);
}

std::string run_build_ii(std::int64_t alpha, std::int64_t delta, std::int64_t j, std::int64_t k,
                         std::int64_t l, std::int64_t q, const std::string& fmt) {
  LinearSystem sys = build_problem_ii({alpha, delta, j, k, l, q});
  if (fmt == "json") {
    Json out = Json::object();
    out.add("alpha", alpha);
    out.add("delta", delta);
    out.add("m", alpha + delta);
    out.add("j", j);
    out.add("k", k);
    out.add("l", l);
    out.add("q", q);
    Json body = system_json(sys);
    out.add("system", std::move(body));
    return out.dump() + "\n";
  }
  return to_dump(sys.a, sys.b);
}

std::string solve_output(const LinearSystem& sys, const std::string& method,
                         const std::string& fmt) {
  SolveReport report = solve_report(sys.a, sys.b);
  if (method == "brute") {
    auto x = brute_force_solve(sys.a, sys.b);
    report.solvable = x.has_value();
    report.x = std::move(x);
  }
  if (fmt == "json") return to_json(report).dump() + "\n";
  std::ostringstream out;
  out << "solvable: " << (report.solvable ? "true" : "false") << "\n";
  if (report.x) out << "x: " << vector_string(*report.x) << "\n";
  out << "rank: " << report.rank << "\n";
  out << "rank_aug: " << report.rank_aug << "\n";
  return out.str();
}

LinearSystem system_from_dump(const std::string& path) {
  DumpContents dump;
  if (path == "-") {
    dump = from_dump(std::cin);
  } else {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open dump file: " + path);
    dump = from_dump(in);
  }
  if (!dump.rhs) throw std::invalid_argument("dump has no right-hand-side line");
  return {std::move(dump.a), std::move(*dump.rhs)};
}

std::string run_characterize_i(std::int64_t m, std::int64_t j, const EnumerationBounds& bounds,
                               const std::string& fmt) {
  require_modulus(m);
  require_offset(j);
  require_index_bound(m);
  auto candidates = enumerate_problem_i(static_cast<std::uint64_t>(m), j, bounds);
  if (fmt == "json") return to_json(candidates, false).dump() + "\n";
  std::string out;
  for (const auto& c : candidates) {
    out += "k=" + std::to_string(c.k) + " l=" + std::to_string(c.l) +
           " subcase=" + to_string(c.subcase);
    for (const auto& [key, val] : c.choices) out += " " + key + "=" + std::to_string(val);
    out += '\n';
  }
  return out;
}

std::string run_characterize_ii(std::int64_t alpha, std::int64_t delta, std::int64_t j,
                                const EnumerationBounds& bounds, const std::string& fmt) {
  if (alpha < 1 || delta < 1) throw std::invalid_argument("alpha and delta must be >= 1");
  require_offset(j);
  require_index_bound(alpha + delta);
  auto candidates =
      enumerate_problem_ii(static_cast<std::uint64_t>(alpha), static_cast<std::uint64_t>(delta),
                           static_cast<std::uint64_t>(j), bounds);
  if (fmt == "json") return to_json(candidates, true).dump() + "\n";
  std::string out;
  for (const auto& c : candidates) {
    out += "k=" + std::to_string(c.k) + " l=" + std::to_string(c.l) +
           " q=" + std::to_string(c.q) + " subcase=" + to_string(c.subcase);
    for (const auto& [key, val] : c.choices) out += " " + key + "=" + std::to_string(val);
    out += '\n';
  }
  return out;
}

std::string run_sweep_i(std::int64_t m, std::int64_t j, std::int64_t kmax, std::int64_t lmax,
                        unsigned threads, const std::string& fmt) {
  require_modulus(m);
  require_offset(j);
  require_index_bound(m);
  if (kmax < 1 || lmax < 1) throw std::invalid_argument("kmax and lmax must be >= 1");
  require_grid_bound(kmax * lmax);
  SweepGrid grid =
      sweep_i(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(j), kmax, lmax, threads);
  if (fmt == "json") return to_json(grid).dump() + "\n";
  return to_csv(grid);
}

std::string classes_line(const char* name, const ClassCounts& c) {
  std::ostringstream out;
  out << name << ": both_yes=" << c.both_yes << " both_no=" << c.both_no
      << " oracle_only=" << c.oracle_only << " paper_only=" << c.paper_only << "\n";
  return out.str();
}

std::string validation_text(const ValidationReport& report) {
  std::ostringstream out;
  out << "problem " << report.problem;
  if (report.problem == "II") out << " alpha=" << report.alpha << " delta=" << report.delta;
  out << " m=" << report.m << " j=" << report.j << " kmax=" << report.bounds.kmax
      << " lmax=" << report.bounds.lmax;
  if (report.problem == "II") out << " qmax=" << report.bounds.qmax;
  out << "\npoints: " << report.points << "\n";
  out << classes_line("restated", report.restated_classes);
  out << classes_line("enumerated", report.enumerated_classes);
  if (report.problem == "II")
    out << "star_closed_form: checked=" << report.star.checked
        << " disagreements=" << report.star.disagreements << "\n";
  out << "discrepancies listed: " << report.discrepancies.size() << " (cap "
      << report.discrepancy_cap << " per class)\n";
  for (const auto& d : report.discrepancies) {
    out << "k=" << d.k << " l=" << d.l;
    if (report.problem == "II") out << " q=" << d.q;
    out << " oracle=" << d.oracle << " restated=" << d.restated
        << " enumerated=" << d.enumerated;
    if (!d.subcases.empty()) {
      out << " subcases=";
      for (std::size_t i = 0; i < d.subcases.size(); ++i) {
        if (i) out << ',';
        out << d.subcases[i];
      }
    }
    out << "\n";
  }
  return out.str();
}

std::string run_validate_i(std::int64_t m, std::int64_t j, const ValidationOptions& opts,
                           const std::string& fmt) {
  require_modulus(m);
  require_offset(j);
  require_index_bound(m);
  if (opts.bounds.kmax < 1 || opts.bounds.lmax < 1)
    throw std::invalid_argument("kmax and lmax must be >= 1");
  require_grid_bound(opts.bounds.kmax * opts.bounds.lmax);
  if (fmt == "csv")
    return to_csv(sweep_i(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(j),
                          opts.bounds.kmax, opts.bounds.lmax, opts.threads));
  ValidationReport report =
      cross_validate_i(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(j), opts);
  if (fmt == "text") return validation_text(report);
  return to_json(report).dump() + "\n";
}

std::string run_validate_ii(std::int64_t alpha, std::int64_t delta, std::int64_t j,
                            const ValidationOptions& opts, const std::string& fmt) {
  if (alpha < 1 || delta < 1) throw std::invalid_argument("alpha and delta must be >= 1");
  require_offset(j);
  require_index_bound(alpha + delta);
  if (opts.bounds.kmax < 1 || opts.bounds.lmax < 1 || opts.bounds.qmax < 1)
    throw std::invalid_argument("kmax, lmax and qmax must be >= 1");
  require_grid_bound(opts.bounds.kmax * opts.bounds.lmax * opts.bounds.qmax);
  if (fmt == "csv")
    return to_csv(sweep_ii(static_cast<std::uint64_t>(alpha), static_cast<std::uint64_t>(delta),
                           static_cast<std::uint64_t>(j), opts.bounds.kmax, opts.bounds.lmax,
                           opts.bounds.qmax, opts.threads));
  ValidationReport report =
      cross_validate_ii(static_cast<std::uint64_t>(alpha), static_cast<std::uint64_t>(delta),
                        static_cast<std::uint64_t>(j), opts);
  if (fmt == "text") return validation_text(report);
  return to_json(report).dump() + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"binomial parity systems: construction, exact solving, "
               "characterization and cross-validation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string artifact;
  std::string out_path;
  std::string fmt;
  unsigned threads = 1;
  std::int64_t m = 1, j = 0, k = 1, l = 1, q = 1, alpha = 1, delta = 1;
  std::int64_t kmax = 16, lmax = 16, qmax = 8, mmax = 256, rows = 32;
  std::size_t max_disc = 100;
  std::string from_dump_path, method = "elim";
  std::vector<std::int64_t> params;

  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "write output to FILE instead of stdout");
  };
  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", fmt, "output format")
        ->check(CLI::IsMember(std::move(allowed)));
  };
  auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", threads, "worker threads (0 = hardware)")
        ->envname("BINOMRANK_THREADS");
  };
  auto pick = [&](const char* def) { return fmt.empty() ? std::string(def) : fmt; };

  auto* c_parity = app.add_subcommand("parity", "print the parity row of C(m, 0..m)");
  c_parity->add_option("m", m, "modulus row")->required();
  add_format(c_parity, {"text", "json"});
  add_out(c_parity);
  c_parity->callback([&] { artifact = run_parity(m, pick("text")); });

  auto* c_odd = app.add_subcommand("odd-positions",
                                   "positions and generator tuples of the odd entries");
  c_odd->add_option("m", m, "modulus row")->required();
  add_format(c_odd, {"json", "text"});
  add_out(c_odd);
  c_odd->callback([&] { artifact = run_odd_positions(m, pick("json")); });

  auto* c_runs = app.add_subcommand("runs", "maximal constant-parity segments of the row");
  c_runs->add_option("m", m, "modulus row")->required();
  add_format(c_runs, {"text", "json"});
  add_out(c_runs);
  c_runs->callback([&] { artifact = run_runs(m, pick("text")); });

  auto* c_audit = app.add_subcommand("audit", "run-length structure audit over all m <= mmax");
  c_audit->add_option("mmax", mmax, "largest modulus to audit")->capture_default_str();
  add_format(c_audit, {"json", "text"});
  add_out(c_audit);
  add_threads(c_audit);
  c_audit->callback([&] { artifact = run_audit(mmax, threads, pick("json")); });

  auto* c_pascal = app.add_subcommand("pascal-mod2", "parity triangle as ascii art or PBM");
  c_pascal->add_option("--rows", rows, "number of triangle rows")->capture_default_str();
  add_format(c_pascal, {"ascii", "pbm"});
  add_out(c_pascal);
  c_pascal->callback([&] { artifact = run_pascal(rows, pick("ascii")); });

  auto* c_build_i = app.add_subcommand("build-i", "emit the system for one basic instance");
  c_build_i->add_option("m", m, "modulus")->required();
  c_build_i->add_option("j", j, "offset")->required();
  c_build_i->add_option("k", k, "unknown count minus one")->required();
  c_build_i->add_option("l", l, "equation count minus one")->required();
  c_build_i->add_flag("--dump", "emit the plain matrix dump (default)");
  add_format(c_build_i, {"text", "json"});
  add_out(c_build_i);
  c_build_i->callback([&] { artifact = run_build_i(m, j, k, l, pick("text")); });

  auto* c_build_ii = app.add_subcommand("build-ii", "emit the system for one split instance");
  c_build_ii->add_option("alpha", alpha, "first summand of the modulus")->required();
  c_build_ii->add_option("delta", delta, "second summand of the modulus")->required();
  c_build_ii->add_option("j", j, "offset")->required();
  c_build_ii->add_option("k", k, "unknown count minus one")->required();
  c_build_ii->add_option("l", l, "bottom equation count minus one")->required();
  c_build_ii->add_option("q", q, "top equation count")->required();
  c_build_ii->add_flag("--dump", "emit the plain matrix dump (default)");
  add_format(c_build_ii, {"text", "json"});
  add_out(c_build_ii);
  c_build_ii->callback([&] { artifact = run_build_ii(alpha, delta, j, k, l, q, pick("text")); });

  auto* c_solve_i = app.add_subcommand("solve-i", "solve one basic instance exactly");
  c_solve_i->add_option("params", params, "M j k l");
  c_solve_i->add_option("--from-dump", from_dump_path,
                        "read the system from a dump file ('-' = stdin)");
  c_solve_i->add_option("--method", method, "elim or brute")
      ->check(CLI::IsMember({"elim", "brute"}));
  add_format(c_solve_i, {"text", "json"});
  add_out(c_solve_i);
  c_solve_i->callback([&] {
    LinearSystem sys = [&] {
      if (!from_dump_path.empty()) {
        if (!params.empty())
          throw std::invalid_argument("give either M j k l or --from-dump, not both");
        return system_from_dump(from_dump_path);
      }
      if (params.size() != 4)
        throw std::invalid_argument("solve-i needs M j k l (or --from-dump FILE)");
      require_modulus(params[0]);
      return build_problem_i(
          {static_cast<std::uint64_t>(params[0]), params[1], params[2], params[3]});
    }();
    artifact = solve_output(sys, method, pick("text"));
  });

  auto* c_solve_ii = app.add_subcommand("solve-ii", "solve one split instance exactly");
  c_solve_ii->add_option("alpha", alpha, "first summand of the modulus")->required();
  c_solve_ii->add_option("delta", delta, "second summand of the modulus")->required();
  c_solve_ii->add_option("j", j, "offset")->required();
  c_solve_ii->add_option("k", k, "unknown count minus one")->required();
  c_solve_ii->add_option("l", l, "bottom equation count minus one")->required();
  c_solve_ii->add_option("q", q, "top equation count")->required();
  c_solve_ii->add_option("--method", method, "elim or brute")
      ->check(CLI::IsMember({"elim", "brute"}));
  add_format(c_solve_ii, {"text", "json"});
  add_out(c_solve_ii);
  c_solve_ii->callback([&] {
    LinearSystem sys = build_problem_ii({alpha, delta, j, k, l, q});
    artifact = solve_output(sys, method, pick("text"));
  });

  auto* c_char_i = app.add_subcommand("characterize-i",
                                      "enumerate claimed solutions for one basic instance");
  c_char_i->add_option("m", m, "modulus")->required();
  c_char_i->add_option("j", j, "offset")->required();
  c_char_i->add_option("--kmax", kmax, "largest k to emit")->capture_default_str();
  c_char_i->add_option("--lmax", lmax, "largest l to emit")->capture_default_str();
  add_format(c_char_i, {"json", "text"});
  add_out(c_char_i);
  c_char_i->callback([&] {
    artifact = run_characterize_i(m, j, {kmax, lmax, qmax}, pick("json"));
  });

  auto* c_char_ii = app.add_subcommand("characterize-ii",
                                       "enumerate claimed solutions for one split instance");
  c_char_ii->add_option("alpha", alpha, "first summand of the modulus")->required();
  c_char_ii->add_option("delta", delta, "second summand of the modulus")->required();
  c_char_ii->add_option("j", j, "offset")->required();
  c_char_ii->add_option("--kmax", kmax, "largest k to emit")->capture_default_str();
  c_char_ii->add_option("--lmax", lmax, "largest l to emit")->capture_default_str();
  c_char_ii->add_option("--qmax", qmax, "largest q to emit")->capture_default_str();
  add_format(c_char_ii, {"json", "text"});
  add_out(c_char_ii);
  c_char_ii->callback([&] {
    artifact = run_characterize_ii(alpha, delta, j, {kmax, lmax, qmax}, pick("json"));
  });

  auto* c_sweep = app.add_subcommand("sweep-i", "verdict grid over the (k, l) rectangle");
  c_sweep->add_option("m", m, "modulus")->required();
  c_sweep->add_option("j", j, "offset")->required();
  c_sweep->add_option("--kmax", kmax, "grid width")->capture_default_str();
  c_sweep->add_option("--lmax", lmax, "grid height")->capture_default_str();
  add_format(c_sweep, {"csv", "json"});
  add_out(c_sweep);
  add_threads(c_sweep);
  c_sweep->callback([&] { artifact = run_sweep_i(m, j, kmax, lmax, threads, pick("csv")); });

  auto* c_val_i = app.add_subcommand("validate-i",
                                     "cross-validate characterization vs solver, basic form");
  c_val_i->add_option("m", m, "modulus")->required();
  c_val_i->add_option("j", j, "offset")->required();
  c_val_i->add_option("--kmax", kmax, "grid width")->capture_default_str();
  c_val_i->add_option("--lmax", lmax, "grid height")->capture_default_str();
  c_val_i->add_option("--max-discrepancies", max_disc, "listing cap per class")
      ->capture_default_str();
  add_format(c_val_i, {"json", "csv", "text"});
  add_out(c_val_i);
  add_threads(c_val_i);
  c_val_i->callback([&] {
    ValidationOptions opts{{kmax, lmax, qmax}, threads, max_disc};
    artifact = run_validate_i(m, j, opts, pick("json"));
  });

  auto* c_val_ii = app.add_subcommand("validate-ii",
                                      "cross-validate characterization vs solver, split form");
  c_val_ii->add_option("alpha", alpha, "first summand of the modulus")->required();
  c_val_ii->add_option("delta", delta, "second summand of the modulus")->required();
  c_val_ii->add_option("j", j, "offset")->required();
  c_val_ii->add_option("--kmax", kmax, "grid width")->capture_default_str();
  c_val_ii->add_option("--lmax", lmax, "grid height")->capture_default_str();
  c_val_ii->add_option("--qmax", qmax, "grid depth")->capture_default_str();
  c_val_ii->add_option("--max-discrepancies", max_disc, "listing cap per class")
      ->capture_default_str();
  add_format(c_val_ii, {"json", "csv", "text"});
  add_out(c_val_ii);
  add_threads(c_val_ii);
  c_val_ii->callback([&] {
    ValidationOptions opts{{kmax, lmax, qmax}, threads, max_disc};
    artifact = run_validate_ii(alpha, delta, j, opts, pick("json"));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const RefusalError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }

  try {
    if (out_path.empty()) {
      std::cout << artifact;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw std::runtime_error("cannot open output file: " + out_path);
      out << artifact;
      if (!out) throw std::runtime_error("write failed: " + out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
