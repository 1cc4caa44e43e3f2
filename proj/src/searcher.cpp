#include "hgsearch/searcher.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "hgsearch/errors.hpp"
#include "hgsearch/guesser.hpp"

namespace hgsearch {

namespace fs = std::filesystem;

void SearchConfig::validate() const {
  if (grid_bound < 1) throw std::invalid_argument("grid bound must be >= 1");
  if (denominator < 1) throw std::invalid_argument("denominator must be >= 1");
  if (degree_bound < 1) throw std::invalid_argument("degree bound must be >= 1");
  if (worker_count < 1) throw std::invalid_argument("worker count must be >= 1");
  if (output_path.empty()) throw std::invalid_argument("output path is required");
}

std::string SearchConfig::hash() const {
  std::ostringstream s;
  s << "M=" << grid_bound << ";D=" << denominator << ";all=" << all_denominators << ";d=" << degree_bound
    << ";extra=" << confirm_extra << ";transforms=" << kTransformListVersion << ";orbit="
    << OrbitBounds{}.max_nodes << "/" << OrbitBounds{}.max_depth;
  // FNV-1a, 64 bit.
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s.str()) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<Rational> shift_values(const SearchConfig& config) {
  const long M = config.grid_bound, D = config.denominator;
  std::set<Rational> values;
  for (long q = config.all_denominators ? 1 : D; q <= D; ++q) {
    for (long k = -M * q; k <= M * q; ++k) values.insert(fraction(k, q));
  }
  return {values.begin(), values.end()};
}

std::vector<GridPoint> enumerate_grid(const SearchConfig& config) {
  const long M = config.grid_bound;
  const auto shifts = shift_values(config);
  std::vector<GridPoint> out;
  out.reserve(grid_cardinality(config));
  for (long a = 1; a <= M; ++a)
    for (long b = -M; b <= M; ++b)
      for (long c = -M; c <= M; ++c)
        for (const auto& b0 : shifts)
          for (const auto& c0 : shifts) out.push_back(GridPoint{a, b, c, b0, c0});
  return out;
}

std::size_t grid_cardinality(const SearchConfig& config) {
  const std::size_t M = config.grid_bound;
  const std::size_t s = shift_values(config).size();
  return M * (2 * M + 1) * (2 * M + 1) * s * s;
}

bool passes_prescreen(const FamilySpec& family, std::size_t d) {
  for (long n = 0; n <= static_cast<long>(2 * d + 2); ++n) {
    if (definedness(family, n)) return true;
  }
  return false;
}

namespace {

Json encode_value(const SeriesValue<QuadExt>& v) {
  if (!v) return nullptr;
  return v->is_rational() ? encode(v->a()) : encode(*v);
}

std::string record_key(const FamilySpec& f, const CandidateX& x) { return serialize_key(FamilyX{f, x}); }

struct SearchForm {
  long a, b, c;
  Rational b0, c0;
};

std::optional<SearchForm> search_form_of(const FamilySpec& f) {
  auto a = f.search_a();
  if (!a || !is_integer(f.upper2.slope) || !is_integer(f.lower.slope)) return std::nullopt;
  return SearchForm{*a, f.upper2.slope.get_num().get_si(), f.lower.slope.get_num().get_si(), f.upper2.intercept,
                    f.lower.intercept};
}

void write_checkpoint(const std::string& path, const Json& j) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << j.dump() << '\n';
    out.flush();
    if (!out) throw IoError("cannot write checkpoint " + tmp);
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw IoError("cannot rename checkpoint into " + path + ": " + ec.message());
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

// Dedup state shared by search and dedup_catalog.
struct Deduper {
  std::unordered_map<std::string, std::string> primary;  // orbit_key -> record key

  void apply(IdentityRecord& r) {
    if (r.suppressed) return;
    auto [it, inserted] = primary.emplace(r.orbit_key, record_key(r.family, r.x));
    if (!inserted) {
      r.suppressed = true;
      r.aliases = {it->second};
    }
  }
};

void count(SearchSummary& s, const IdentityRecord& r) {
  auto& bucket = r.suppressed ? s.suppressed : s.unsuppressed;
  ++bucket[to_string(r.classification)];
}

}  // namespace

Json encode(const IdentityRecord& r) {
  Json values = Json::array();
  for (const auto& v : r.initial_values) values.push_back(encode_value(v));
  return Json{{"family", encode(r.family)},
              {"x", encode(r.x)},
              {"certificate", encode(r.certificate)},
              {"classification", to_string(r.classification)},
              {"suppressed", r.suppressed},
              {"orbit_key", r.orbit_key},
              {"aliases", r.aliases},
              {"initial_values", values}};
}

IdentityRecord decode_record(const Json& j) {
  IdentityRecord r;
  r.family = decode_family(j.at("family"));
  r.x = decode_candidate(j.at("x"));
  r.certificate = decode_certificate(j.at("certificate"));
  auto c = parse_classification(j.at("classification").get<std::string>());
  if (!c || *c == Classification::None) throw ParseError("bad classification in record");
  r.classification = *c;
  r.suppressed = j.at("suppressed").get<bool>();
  r.orbit_key = j.at("orbit_key").get<std::string>();
  r.aliases = j.at("aliases").get<std::vector<std::string>>();
  for (const auto& v : j.at("initial_values")) {
    if (v.is_null()) {
      r.initial_values.emplace_back(std::nullopt);
    } else {
      r.initial_values.emplace_back(decode_quad(v));
    }
  }
  return r;
}

Classification classify(const FamilySpec& family, const CandidateX& x, Classification chaff) {
  auto form = search_form_of(family);
  if (form && form->a == 2 && form->b == 0) {
    const QuadExt v = candidate_value(x);
    const Rational sum = form->b0 + form->c0;
    if (form->c == -2 && v == QuadExt(-1) && is_integer(sum) && sgn(sum) >= 0) return Classification::Theorem1;
    if (form->c == -3 && v == QuadExt(-3) && is_integer(Rational(form->b0 + Rational(1, 2))) &&
        is_integer(Rational(form->c0 + Rational(1, 2)))) {
      return Classification::Conjecture1;
    }
  }
  if (is_chaff_class(chaff)) return chaff;
  return Classification::Strange;
}

FamilyOutcome process_family(const GridPoint& point, const SearchConfig& config) {
  FamilyOutcome out;
  const FamilySpec family = point.family();
  if (!passes_prescreen(family, config.degree_bound)) {
    out.status = FamilyOutcome::Status::Skipped;
    out.reason = "undefined for every n in 0.." + std::to_string(2 * config.degree_bound + 2);
    return out;
  }
  try {
    SolveOptions options;
    options.method = config.method;
    options.confirm_extra = config.confirm_extra;
    options.parallel = false;
    SolveResult solved = solve_x(family, config.degree_bound, options);
    if (solved.all_x) out.reason = "hypergeometric for every x (not recorded)";
    for (const auto& cand : solved.candidates) {
      if (!cand.certificate) continue;
      FamilyX fx{family, cand.x};
      const auto elements = orbit(fx);
      IdentityRecord rec;
      rec.family = family;
      rec.x = cand.x;
      rec.certificate = *cand.certificate;
      const Classification chaff = chaff_in_orbit(elements);
      rec.suppressed = is_chaff_class(chaff);
      rec.classification = rec.suppressed ? chaff : classify(family, cand.x, chaff);
      rec.orbit_key = serialize_key(elements.front());
      for (const auto& e : elements) rec.orbit_key = std::min(rec.orbit_key, serialize_key(e));
      const QuadExt xv = candidate_value(cand.x);
      for (long n = 0; n < 4; ++n) rec.initial_values.push_back(eval_terminating(family, n, xv));
      out.records.push_back(std::move(rec));
    }
  } catch (const Error& e) {
    out.status = FamilyOutcome::Status::Failed;
    out.reason = e.what();
    out.records.clear();
  }
  return out;
}

Json encode(const SearchSummary& s) {
  return Json{{"grid_size", s.grid_size}, {"processed", s.processed},     {"skipped", s.skipped},
              {"failed", s.failed},       {"next_index", s.next_index},   {"interrupted", s.interrupted},
              {"unsuppressed", s.unsuppressed}, {"suppressed", s.suppressed}};
}

std::atomic<bool>& search_interrupt_flag() {
  static std::atomic<bool> flag{false};
  return flag;
}

SearchSummary search(const SearchConfig& config, const std::function<void(const std::string&)>& log) {
  config.validate();
  const std::vector<GridPoint> grid = enumerate_grid(config);
  const std::string hash = config.hash();
  const std::string checkpoint =
      config.checkpoint_path.empty() ? config.output_path + ".checkpoint" : config.checkpoint_path;

  SearchSummary summary;
  summary.grid_size = grid.size();
  Deduper dedup;
  std::uintmax_t offset = 0;

  if (config.resume && fs::exists(checkpoint)) {
    Json cp;
    try {
      std::ifstream in(checkpoint);
      cp = Json::parse(in);
    } catch (const std::exception& e) {
      throw IoError("unreadable checkpoint " + checkpoint + ": " + e.what());
    }
    if (cp.value("config_hash", "") != hash) throw std::invalid_argument("checkpoint was written for a different configuration");
    summary.next_index = cp.at("grid_index").get<std::size_t>();
    offset = cp.at("catalog_offset").get<std::uintmax_t>();
    summary.processed = cp.value("processed", std::size_t{0});
    summary.skipped = cp.value("skipped", std::size_t{0});
    summary.failed = cp.value("failed", std::size_t{0});
    std::error_code ec;
    if (fs::file_size(config.output_path, ec) < offset || ec) {
      throw IoError("catalog " + config.output_path + " is shorter than the checkpoint offset");
    }
    fs::resize_file(config.output_path, offset, ec);
    if (ec) throw IoError("cannot truncate catalog: " + ec.message());
    for (const auto& line : read_lines(config.output_path)) {
      IdentityRecord r = decode_record(Json::parse(line));
      dedup.apply(r);
      count(summary, r);
    }
  } else {
    std::ofstream create(config.output_path, std::ios::binary | std::ios::trunc);
    if (!create) throw IoError("cannot create catalog " + config.output_path);
  }

  std::ofstream catalog(config.output_path, std::ios::binary | std::ios::app);
  if (!catalog) throw IoError("cannot open catalog " + config.output_path);

  auto checkpoint_json = [&](std::size_t index) {
    return Json{{"grid_index", index},          {"config_hash", hash},
                {"catalog_offset", offset},     {"processed", summary.processed},
                {"skipped", summary.skipped},   {"failed", summary.failed}};
  };
  write_checkpoint(checkpoint, checkpoint_json(summary.next_index));

  const std::size_t workers = config.worker_count;
  const std::size_t batch = workers == 1 ? 1 : 4 * workers;
  std::size_t committed = 0;
  auto& interrupt = search_interrupt_flag();

  while (summary.next_index < grid.size()) {
    if (interrupt.load() || (config.stop_after && committed >= config.stop_after)) {
      summary.interrupted = true;
      break;
    }
    const std::size_t begin = summary.next_index;
    const std::size_t end = std::min(grid.size(), begin + batch);
    std::vector<FamilyOutcome> outcomes(end - begin);
    std::vector<std::exception_ptr> errors(end - begin);
#pragma omp parallel for schedule(dynamic, 1) num_threads(static_cast<int>(workers)) if (workers > 1)
    for (std::size_t i = begin; i < end; ++i) {
      try {
        outcomes[i - begin] = process_family(grid[i], config);
      } catch (...) {
        errors[i - begin] = std::current_exception();
      }
    }
    for (std::size_t i = begin; i < end; ++i) {
      if (errors[i - begin]) std::rethrow_exception(errors[i - begin]);
      if (config.stop_after && committed >= config.stop_after) break;
      FamilyOutcome& o = outcomes[i - begin];
      switch (o.status) {
        case FamilyOutcome::Status::Processed: ++summary.processed; break;
        case FamilyOutcome::Status::Skipped: ++summary.skipped; break;
        case FamilyOutcome::Status::Failed: ++summary.skipped; ++summary.failed; break;
      }
      if (log && !o.reason.empty()) log("grid " + std::to_string(i) + " " + to_string(grid[i].family()) + ": " + o.reason);
      for (auto& r : o.records) {
        dedup.apply(r);
        count(summary, r);
        const std::string line = encode(r).dump();
        catalog << line << '\n';
        offset += line.size() + 1;
      }
      catalog.flush();
      if (!catalog) throw IoError("write to catalog " + config.output_path + " failed");
      summary.next_index = i + 1;
      ++committed;
      write_checkpoint(checkpoint, checkpoint_json(summary.next_index));
    }
  }
  return summary;
}

std::vector<IdentityRecord> read_catalog(const std::string& path) {
  std::vector<IdentityRecord> out;
  std::size_t lineno = 0;
  for (const auto& line : read_lines(path)) {
    ++lineno;
    try {
      out.push_back(decode_record(Json::parse(line)));
    } catch (const Json::exception& e) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::size_t dedup_catalog(const std::string& in_path, const std::string& out_path) {
  auto records = read_catalog(in_path);
  Deduper dedup;
  std::size_t newly = 0;
  std::string text;
  for (auto& r : records) {
    const bool before = r.suppressed;
    dedup.apply(r);
    if (r.suppressed && !before) ++newly;
    text += encode(r).dump();
    text += '\n';
  }
  const std::string tmp = out_path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << text;
    out.flush();
    if (!out) throw IoError("cannot write " + tmp);
  }
  std::error_code ec;
  fs::rename(tmp, out_path, ec);
  if (ec) throw IoError("cannot rename into " + out_path + ": " + ec.message());
  return newly;
}

std::vector<std::size_t> audit_catalog(const std::vector<IdentityRecord>& records, std::size_t extra) {
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    const QuadExt x = candidate_value(r.x);
    bool ok = confirm(r.certificate, r.family, x, extra, r.certificate.start_index);
    for (std::size_t n = 0; ok && n < r.initial_values.size(); ++n) {
      ok = eval_terminating(r.family, static_cast<long>(n), x) == r.initial_values[n];
    }
    if (!ok) bad.push_back(i);
  }
  return bad;
}

std::string render_report(const std::vector<IdentityRecord>& records) {
  std::ostringstream out;
  const Classification order[] = {Classification::Strange, Classification::Theorem1, Classification::Conjecture1,
                                  Classification::Gauss,   Classification::Kummer,   Classification::GaussHalf};
  std::map<std::string, std::size_t> hidden;
  for (const auto& r : records) {
    if (r.suppressed) ++hidden[to_string(r.classification)];
  }
  for (Classification c : order) {
    std::vector<const IdentityRecord*> rows;
    for (const auto& r : records) {
      if (!r.suppressed && r.classification == c) rows.push_back(&r);
    }
    if (rows.empty()) continue;
    out << "== " << to_string(c) << " (" << rows.size() << ")\n";
    for (const auto* r : rows) {
      out << "  " << to_string(r->family) << " at x = " << to_string(r->x) << "\n";
      out << "    u(n+1)/u(n) = " << to_string(r->certificate) << "  (n >= " << r->certificate.start_index << ")\n";
    }
  }
  out << "== suppressed\n";
  if (hidden.empty()) out << "  none\n";
  for (const auto& [name, n] : hidden) out << "  " << name << ": " << n << "\n";
  return out.str();
}

}  // namespace hgsearch
