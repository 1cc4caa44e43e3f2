#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hgsearch/serialize.hpp"
#include "hgsearch/transforms.hpp"
#include "hgsearch/xsolver.hpp"

namespace hgsearch {

struct SearchConfig {
  long grid_bound = 1;            // M
  long denominator = 1;           // D
  bool all_denominators = false;  // every denominator 1..D instead of exactly D
  std::size_t degree_bound = 6;   // d
  std::size_t confirm_extra = 8;
  std::size_t worker_count = 1;
  std::string output_path;
  std::string checkpoint_path;
  bool resume = false;
  SolveMethod method = SolveMethod::Modular;
  /// Stop cleanly after this many newly committed families (0 = no limit).
  std::size_t stop_after = 0;

  void validate() const;
  /// Stable hex digest of everything that affects catalog content.
  std::string hash() const;
};

struct GridPoint {
  long a, b, c;
  Rational b0, c0;

  FamilySpec family() const { return FamilySpec::search_form(a, b, b0, c, c0); }
};

/// Sorted distinct values k/D (or p/q with q <= D) in [-M, M].
std::vector<Rational> shift_values(const SearchConfig& config);

/// Lexicographic (a, b, c, b0, c0) order, no screening.
std::vector<GridPoint> enumerate_grid(const SearchConfig& config);

std::size_t grid_cardinality(const SearchConfig& config);

/// Defined at some n in 0..2d+2.
bool passes_prescreen(const FamilySpec& family, std::size_t d);

struct IdentityRecord {
  FamilySpec family;
  CandidateX x;
  Certificate certificate;
  Classification classification = Classification::Strange;
  bool suppressed = false;
  std::string orbit_key;
  std::vector<std::string> aliases;
  std::vector<SeriesValue<QuadExt>> initial_values;
};

Json encode(const IdentityRecord& r);
IdentityRecord decode_record(const Json& j);

/// Pattern-based triage of a confirmed, non-chaff evaluation.
Classification classify(const FamilySpec& family, const CandidateX& x, Classification chaff);

/// Everything a worker computes for one grid point before commit.
struct FamilyOutcome {
  enum class Status { Processed, Skipped, Failed } status = Status::Processed;
  std::string reason;
  std::vector<IdentityRecord> records;  // not yet deduplicated
};

FamilyOutcome process_family(const GridPoint& point, const SearchConfig& config);

struct SearchSummary {
  std::size_t grid_size = 0;
  std::size_t processed = 0;
  std::size_t skipped = 0;
  std::size_t failed = 0;
  std::size_t next_index = 0;
  bool interrupted = false;
  std::map<std::string, std::size_t> unsuppressed;
  std::map<std::string, std::size_t> suppressed;
};

Json encode(const SearchSummary& s);

/// Set asynchronously (e.g. from a signal handler) to stop after the
/// current batch.
std::atomic<bool>& search_interrupt_flag();

/// Runs or resumes the grid search. Throws IoError when the catalog or
/// checkpoint cannot be written; the checkpoint on disk then still
/// describes a consistent prefix of the catalog.
SearchSummary search(const SearchConfig& config, const std::function<void(const std::string&)>& log = {});

std::vector<IdentityRecord> read_catalog(const std::string& path);

/// Rewrites a catalog so that only the first record of each orbit_key stays
/// unsuppressed; later ones are suppressed with the first one's key as alias.
/// Returns the number of records newly suppressed.
std::size_t dedup_catalog(const std::string& in_path, const std::string& out_path);

/// Re-confirms every certificate against fresh evaluations; returns the
/// indices of failing records.
std::vector<std::size_t> audit_catalog(const std::vector<IdentityRecord>& records, std::size_t extra);

/// Human-readable table grouped by classification.
std::string render_report(const std::vector<IdentityRecord>& records);

}  // namespace hgsearch
