#include "hgsearch/cli.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <csignal>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "hgsearch/errors.hpp"
#include "hgsearch/searcher.hpp"
#include "hgsearch/verifier.hpp"

namespace hgsearch::cli {

namespace {

struct FamilyArgs {
  long a = 1, b = 0, c = 0;
  std::string b0 = "0", c0 = "0";

  void add_to(CLI::App* cmd) {
    cmd->add_option("--a", a, "n-slope of the terminating slot, F(-a n, ...)")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--b", b, "n-slope of the second upper slot")->required();
    cmd->add_option("--c", c, "n-slope of the lower slot")->required();
    cmd->add_option("--b0", b0, "constant of the second upper slot (p/q)")->required();
    cmd->add_option("--c0", c0, "constant of the lower slot (p/q)")->required();
  }
  FamilySpec family() const {
    return FamilySpec::search_form(a, b, parse_rational(b0), c, parse_rational(c0));
  }
};

QuadExt parse_x(const std::string& text) {
  if (text.rfind("quad:", 0) == 0) return parse_quad(text);
  return QuadExt(parse_rational(text));
}

std::string value_string(const QuadExt& v) { return v.is_rational() ? to_string(v.a()) : to_string(v); }

int cmd_eval(const FamilyArgs& fa, const std::string& xs, long n, bool json, std::ostream& out) {
  const FamilySpec family = fa.family();
  const QuadExt x = parse_x(xs);
  if (n < 0) throw std::invalid_argument("--n must be >= 0");
  auto v = eval_terminating(family, n, x);
  if (json) {
    out << Json{{"family", encode(family)}, {"n", n}, {"value", v ? Json(value_string(*v)) : Json(nullptr)}}.dump()
        << "\n";
  } else {
    out << (v ? value_string(*v) : std::string("undefined")) << "\n";
  }
  return v ? kOk : kNegative;
}

int cmd_guess(const FamilyArgs& fa, const std::string& xs, std::size_t d, std::size_t extra, bool json,
              std::ostream& out) {
  const FamilySpec family = fa.family();
  GuessConfig cfg;
  cfg.degree_bound = d;
  cfg.confirm_extra = extra;
  cfg.validate();
  const QuadExt x = parse_x(xs);
  GuessStatus status;
  std::optional<Certificate> cert;
  std::string closed;
  if (x.is_rational()) {
    auto g = guess(family, x.a(), cfg);
    status = g.status;
    if (g.certificate) {
      cert = widen(*g.certificate);
      closed = closed_form_ratio(*g.certificate);
    }
  } else {
    auto g = guess(family, x, cfg);
    status = g.status;
    cert = g.certificate;
  }
  if (json) {
    Json j{{"family", encode(family)}, {"x", encode(make_candidate(x))}, {"status", to_string(status)}};
    if (cert) j["certificate"] = encode(*cert);
    if (!closed.empty()) j["closed_form"] = closed;
    out << j.dump() << "\n";
  } else if (cert) {
    out << to_string(*cert) << "\n";
  } else {
    out << to_string(status) << "\n";
  }
  return status == GuessStatus::Hypergeometric ? kOk : kNegative;
}

int cmd_solvex(const FamilyArgs& fa, std::size_t d, std::size_t extra, const std::string& method, bool json,
               std::ostream& out) {
  const FamilySpec family = fa.family();
  SolveOptions options;
  options.confirm_extra = extra;
  if (method == "exact") {
    options.method = SolveMethod::Exact;
  } else if (method == "modular") {
    options.method = SolveMethod::Modular;
  } else {
    throw std::invalid_argument("--method must be exact or modular");
  }
  SolveResult res = solve_x(family, d, options);
  Json rows = Json::array();
  std::size_t kept = 0;
  std::ostringstream text;
  text << "family: " << to_string(family) << "\n";
  if (res.all_x) {
    text << "hypergeometric for every x\n";
  } else {
    text << "gcd: " << to_string(res.gcd) << "\n";
  }
  for (const auto& cand : res.candidates) {
    Json row{{"x", encode(cand.x)}};
    if (!cand.certificate) {
      text << "unresolved factor: " << to_string(cand.x) << "\n";
      row["status"] = "unresolved";
      rows.push_back(row);
      continue;
    }
    const Classification chaff = is_chaff(FamilyX{family, cand.x});
    const bool suppressed = is_chaff_class(chaff);
    const Classification cls = suppressed ? chaff : classify(family, cand.x, chaff);
    kept += !suppressed;
    text << "x = " << to_string(cand.x) << "  " << to_string(cls) << (suppressed ? " (suppressed)" : "")
         << "  u(n+1)/u(n) = " << to_string(*cand.certificate) << "\n";
    row["status"] = "confirmed";
    row["classification"] = to_string(cls);
    row["suppressed"] = suppressed;
    row["certificate"] = encode(*cand.certificate);
    rows.push_back(row);
  }
  if (json) {
    out << Json{{"family", encode(family)},
                {"degree_bound", d},
                {"window_start", res.window_start},
                {"all_x", res.all_x},
                {"gcd", encode(res.gcd)},
                {"candidates", rows}}
               .dump()
        << "\n";
  } else {
    out << text.str();
  }
  return kept > 0 || res.all_x ? kOk : kNegative;
}

std::vector<Rational> parse_list(const std::vector<std::string>& items) {
  std::vector<Rational> out;
  for (const auto& s : items) out.push_back(parse_rational(s));
  return out;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot write " + path);
  return f;
}

extern "C" void on_sigint(int) { search_interrupt_flag().store(true); }

}  // namespace

void install_interrupt_handler() { std::signal(SIGINT, on_sigint); }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Search for closed-form evaluations of terminating 2F1 families"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  FamilyArgs fa;
  std::string x;
  long n = 0;
  std::size_t degree = 6, extra = 8;
  bool json = false;
  std::string method = "modular";

  auto* eval = app.add_subcommand("eval", "exact value of one term u_n");
  fa.add_to(eval);
  eval->add_option("--x", x, "argument: p/q or quad:p/q+s/t*sqrt(r)")->required();
  eval->add_option("--n", n, "index")->required();
  eval->add_flag("--json", json);

  FamilyArgs ga;
  auto* guess_cmd = app.add_subcommand("guess", "fit and confirm u(n+1)/u(n) = p(n)/q(n)");
  ga.add_to(guess_cmd);
  guess_cmd->add_option("--x", x, "argument")->required();
  guess_cmd->add_option("--degree", degree, "degree bound d")->check(CLI::PositiveNumber);
  guess_cmd->add_option("--confirm-extra", extra, "extra confirmation indices");
  guess_cmd->add_flag("--json", json);

  FamilyArgs sa;
  auto* solvex = app.add_subcommand("solvex", "every x for which the family is hypergeometric");
  sa.add_to(solvex);
  solvex->add_option("--degree", degree, "degree bound d")->check(CLI::PositiveNumber);
  solvex->add_option("--confirm-extra", extra, "extra confirmation indices");
  solvex->add_option("--method", method, "determinant gcd route: modular or exact");
  solvex->add_flag("--json", json);

  SearchConfig sc;
  sc.worker_count = static_cast<std::size_t>(std::max(1, omp_get_num_procs()));
  long all_up_to = 0;
  bool verbose = false;
  auto* search_cmd = app.add_subcommand("search", "grid search over (a, b, c, b0, c0)");
  search_cmd->add_option("--grid-bound", sc.grid_bound, "M")->required()->check(CLI::PositiveNumber);
  auto* den_opt = search_cmd->add_option("--denominator", sc.denominator, "D")->check(CLI::PositiveNumber);
  search_cmd->add_option("--all-denominators-up-to", all_up_to, "use every denominator 1..D")
      ->check(CLI::PositiveNumber)
      ->excludes(den_opt);
  search_cmd->add_option("--degree", sc.degree_bound, "degree bound d")->check(CLI::PositiveNumber);
  search_cmd->add_option("--confirm-extra", sc.confirm_extra, "extra confirmation indices");
  search_cmd->add_option("--jobs", sc.worker_count, "worker threads")->check(CLI::PositiveNumber);
  search_cmd->add_option("--out", sc.output_path, "catalog (JSON lines)")->required();
  search_cmd->add_option("--checkpoint", sc.checkpoint_path, "checkpoint file (default: <out>.checkpoint)");
  search_cmd->add_flag("--resume", sc.resume, "continue from the checkpoint");
  search_cmd->add_option("--method", method, "determinant gcd route: modular or exact");
  search_cmd->add_option("--stop-after", sc.stop_after, "stop after this many families")->group("");
  search_cmd->add_flag("--verbose", verbose, "log skipped families to stderr");

  std::string catalog_in, out_path;
  auto* dedup = app.add_subcommand("dedup", "re-apply orbit dedup to a catalog");
  dedup->add_option("catalog", catalog_in, "input catalog")->required();
  dedup->add_option("--out", out_path, "output catalog")->required();

  auto* report = app.add_subcommand("report", "identity table grouped by classification");
  report->add_option("catalog", catalog_in, "catalog")->required();
  bool audit = false;
  report->add_flag("--audit", audit, "re-confirm every certificate first");

  long r_max = 6, n_max = 25;
  std::vector<std::string> b_samples{"1/3", "2/5", "7/3", "-5/2"};
  auto* vt1 = app.add_subcommand("verify-theorem1", "exact check of the perturbed Kummer closed form");
  vt1->add_option("--r-max", r_max, "largest r")->check(CLI::PositiveNumber);
  vt1->add_option("--b", b_samples, "b samples (p/q)");
  vt1->add_option("--n-max", n_max, "largest n")->check(CLI::NonNegativeNumber);
  vt1->add_option("--out", out_path, "per-check records (JSON lines)");

  long i_min = -2, i_max = 2, j_min = -2, j_max = 2;
  std::size_t cdeg = 6;
  auto* vc1 = app.add_subcommand("verify-conjecture1", "certificates for F(-2n, -1/2+i; -3n-1/2+j; -3)");
  vc1->add_option("--i-min", i_min);
  vc1->add_option("--i-max", i_max);
  vc1->add_option("--j-min", j_min);
  vc1->add_option("--j-max", j_max);
  vc1->add_option("--degree", cdeg, "degree bound d")->check(CLI::PositiveNumber);
  vc1->add_option("--out", out_path, "per-(i,j) records (JSON lines)");

  std::vector<std::string> argv_store{"hgsearch"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*eval) return cmd_eval(fa, x, n, json, out);
    if (*guess_cmd) return cmd_guess(ga, x, degree, extra, json, out);
    if (*solvex) return cmd_solvex(sa, degree, extra, method, json, out);
    if (*search_cmd) {
      if (all_up_to) {
        sc.denominator = all_up_to;
        sc.all_denominators = true;
      }
      if (method == "exact") {
        sc.method = SolveMethod::Exact;
      } else if (method != "modular") {
        throw std::invalid_argument("--method must be exact or modular");
      }
      sc.validate();
      std::function<void(const std::string&)> log;
      if (verbose) log = [&err](const std::string& m) { err << m << "\n"; };
      SearchSummary s = search(sc, log);
      out << encode(s).dump(2) << "\n";
      if (s.interrupted) {
        err << "interrupted at grid index " << s.next_index << "; rerun with --resume to continue\n";
        return kInterrupted;
      }
      return kOk;
    }
    if (*dedup) {
      std::size_t k = dedup_catalog(catalog_in, out_path);
      out << "newly suppressed: " << k << "\n";
      return kOk;
    }
    if (*report) {
      auto records = read_catalog(catalog_in);
      if (audit) {
        auto bad = audit_catalog(records, 16);
        for (auto i : bad) err << "audit failed for record " << i << "\n";
        if (!bad.empty()) return kNegative;
        out << "audit: " << records.size() << " records re-confirmed\n";
      }
      out << render_report(records);
      return kOk;
    }
    if (*vt1) {
      auto rep = verify_theorem1(r_max, parse_list(b_samples), n_max);
      if (!out_path.empty()) {
        auto f = open_out(out_path);
        for (const auto& c : rep.all) f << encode(c).dump() << "\n";
        if (!f) throw IoError("write to " + out_path + " failed");
      }
      for (const auto& c : rep.counterexamples) out << encode(c).dump() << "\n";
      out << Json{{"checks", rep.checks},
                  {"counterexamples", rep.counterexamples.size()},
                  {"skipped", rep.skipped.size()}}
                 .dump()
          << "\n";
      return rep.counterexamples.empty() ? kOk : kNegative;
    }
    if (*vc1) {
      auto rep = verify_conjecture1(i_min, i_max, j_min, j_max, cdeg);
      std::unique_ptr<std::ofstream> f;
      if (!out_path.empty()) f = std::make_unique<std::ofstream>(open_out(out_path));
      for (const auto& e : rep.entries) {
        if (f) *f << encode(e).dump() << "\n";
        out << "i=" << e.i << " j=" << e.j << ": " << e.status;
        if (e.certificate) out << "  " << closed_form_ratio(*e.certificate);
        out << "\n";
      }
      if (f && !*f) throw IoError("write to " + out_path + " failed");
      out << rep.found() << "/" << rep.entries.size() << " certificates\n";
      return rep.found() == rep.entries.size() ? kOk : kNegative;
    }
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kNegative;
  }
  return kUsage;
}

}  // namespace hgsearch::cli
