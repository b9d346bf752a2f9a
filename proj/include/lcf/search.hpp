#pragma once

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "lcf/monoid.hpp"
#include "lcf/serialize.hpp"

namespace lcf {

// ---------------------------------------------------------------------------
// Config and records
// ---------------------------------------------------------------------------

struct SearchConfig {
  std::size_t n_min = 1;
  std::size_t n_max = 1;
  std::uint64_t sum_max = 0;
  std::optional<Int> k_filter;  // emit only tuples with this exact value
  unsigned workers = 1;
  std::string output_path;      // JSONL records; empty = no file
  std::string checkpoint_path;  // cursor persistence; empty = none
};

inline void validate(const SearchConfig& cfg) {
  if (cfg.n_min < 1) throw DomainError("search config: n_min must be >= 1");
  if (cfg.n_min > cfg.n_max) {
    throw DomainError("search config: n_min must be <= n_max");
  }
  if (cfg.workers < 1) throw DomainError("search config: workers must be >= 1");
  if (cfg.sum_max > kMaxPowerBits) {
    throw DomainError("search config: sum_max exceeds the exact-arithmetic cap");
  }
  if (cfg.k_filter && *cfg.k_filter < 1) {
    throw DomainError("search config: k filter must be >= 1");
  }
}

/// Hash of the enumeration bounds (not the execution knobs): a checkpoint
/// may be resumed with a different worker count or output path, never with
/// different bounds.
inline std::string config_hash(const SearchConfig& cfg) {
  const std::string key = std::to_string(cfg.n_min) + '|' +
                          std::to_string(cfg.n_max) + '|' +
                          std::to_string(cfg.sum_max) + '|' +
                          (cfg.k_filter ? dec(*cfg.k_filter) : "any");
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return std::string(buf);
}

/// One discovered satisfying tuple plus everything downstream consumers
/// ask for: value, canonical rotation, triviality, prime decomposition.
struct SearchRecord {
  Tuple tuple;
  Int value;
  Tuple canonical;
  bool trivial = false;
  std::vector<Tuple> atoms;
  std::size_t length = 0;
  std::uint64_t sum = 0;
};

/// Classifies a satisfying tuple into a full record. The walk performed for
/// the triviality test doubles as the per-discovery oracle check: an
/// algebraically satisfying tuple whose circuit does not close is an
/// internal contradiction and throws.
inline SearchRecord make_record(const Tuple& t) {
  SatisfactionResult s = is_satisfying(t);
  if (!s.satisfying) {
    throw DomainError("record requires a satisfying tuple, got " + t.display());
  }
  WalkResult w = walk_tuple(t, *s.value);
  if (!w.ok()) {
    throw Error("oracle disagreement: walk rejected satisfying tuple " +
                t.display() + ": " + w.failure->describe());
  }
  SearchRecord rec;
  rec.tuple = t;
  rec.value = *s.value;
  rec.canonical = canonical_form(t);
  const std::set<Int> verts = cycle_vertices(*w.walk);
  rec.trivial = verts.count(Int(1)) || verts.count(Int(2)) ||
                verts.count(Int(8)) || verts.count(Int(16));
  rec.atoms = decompose(MonoidElement(t, rec.value)).atoms;
  rec.length = t.size();
  rec.sum = t.entry_sum();
  return rec;
}

inline Json record_json(const SearchRecord& r) {
  Json atoms = Json::array();
  for (const Tuple& a : r.atoms) atoms.push_back(tuple_json(a));
  return Json{{"tuple", tuple_json(r.tuple)}, {"value", dec(r.value)},
              {"canonical", tuple_json(r.canonical)}, {"trivial", r.trivial},
              {"atoms", std::move(atoms)},
              {"n", r.length},
              {"sum", r.sum}};
}

inline std::string record_jsonl(const SearchRecord& r) {
  return record_json(r).dump();
}

// ---------------------------------------------------------------------------
// Composition enumeration
//
// Tuples are enumerated by length n ascending, then entry sum s ascending,
// then lexicographically among the compositions of s into n non-negative
// parts: (0,...,0,s) first, (s,0,...,0) last. The order is part of the
// output contract — it makes runs diff-able and checkpoints meaningful.
// ---------------------------------------------------------------------------

/// Number of compositions of s into `parts` non-negative parts:
/// C(s + parts - 1, parts - 1).
inline Int composition_count(std::uint64_t s, std::size_t parts) {
  if (parts == 0) return Int(s == 0 ? 1 : 0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(s + parts - 1),
               static_cast<unsigned long>(parts - 1));
  return r;
}

inline std::vector<Entry> first_composition(std::uint64_t s,
                                            std::size_t parts) {
  std::vector<Entry> c(parts, 0);
  if (parts > 0) c.back() = s;
  return c;
}

/// Advances to the lexicographic successor among compositions of the same
/// sum; returns false from the last one.
inline bool next_composition(std::vector<Entry>& c) {
  if (c.size() < 2) return false;
  std::uint64_t suffix = 0;
  for (std::size_t i = c.size() - 1; i > 0; --i) {
    suffix += c[i];
    if (suffix > 0) {
      c[i - 1] += 1;
      for (std::size_t j = i; j + 1 < c.size(); ++j) c[j] = 0;
      c.back() = suffix - 1;
      return true;
    }
  }
  return false;
}

/// Composition of s into `parts` parts at the given lexicographic rank.
inline std::vector<Entry> composition_unrank(std::uint64_t s,
                                             std::size_t parts, Int rank) {
  if (rank < 0 || rank >= composition_count(s, parts)) {
    throw DomainError("composition rank out of range");
  }
  std::vector<Entry> out(parts, 0);
  if (parts == 0) return out;
  std::uint64_t left = s;
  for (std::size_t pos = 0; pos + 1 < parts; ++pos) {
    for (Entry v = 0;; ++v) {
      Int cnt = composition_count(left - v, parts - pos - 1);
      if (rank < cnt) {
        out[pos] = v;
        left -= v;
        break;
      }
      rank -= cnt;
    }
  }
  out[parts - 1] = left;
  return out;
}

/// True when a length-n block with entry sum s can hold satisfying tuples:
/// the shared denominator 2^s - 3^n must be positive.
inline bool block_admissible(std::size_t n, std::uint64_t s) {
  const Int p3 = pow3(n);
  // 2^s > 3^n  <=>  s >= bitlength(3^n), since 3^n is never a power of two.
  return s >= mpz_sizeinbase(p3.get_mpz_t(), 2);
}

// ---------------------------------------------------------------------------
// Cursor and checkpointing
// ---------------------------------------------------------------------------

/// Position in the enumeration: the next composition to process, addressed
/// as (length, sum, lexicographic index within that block). The position
/// one past the end of the whole run is (n_max + 1, 0, 0).
struct Cursor {
  std::size_t n = 0;
  std::uint64_t s = 0;
  Int composition_index = 0;

  bool operator==(const Cursor&) const = default;
};

inline Cursor end_cursor(const SearchConfig& cfg) {
  return Cursor{cfg.n_max + 1, 0, 0};
}

inline Json checkpoint_json(const SearchConfig& cfg, const Cursor& c) {
  return Json{{"config_hash", config_hash(cfg)},
              {"cursor", Json{{"n", c.n},
                              {"s", c.s},
                              {"composition_index", dec(c.composition_index)}}}};
}

inline void write_checkpoint(const std::string& path, const SearchConfig& cfg,
                             const Cursor& c) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw IoError("cannot write checkpoint: " + tmp);
    out << checkpoint_json(cfg, c).dump() << '\n';
    if (!out) throw IoError("checkpoint write failed: " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot replace checkpoint " + path + ": " + ec.message());
}

/// Loads and validates a checkpoint against the given bounds. A checkpoint
/// written for different bounds is a usage error; an unreadable or
/// structurally broken file is never guessed at.
inline Cursor load_checkpoint(const std::string& path,
                              const SearchConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read checkpoint: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw CheckpointError("checkpoint does not parse: " + std::string(e.what()));
  }
  if (!j.is_object() || !j.contains("config_hash") || !j.contains("cursor") ||
      !j["config_hash"].is_string() || !j["cursor"].is_object()) {
    throw CheckpointError("checkpoint is structurally invalid: " + path);
  }
  if (j["config_hash"].get<std::string>() != config_hash(cfg)) {
    throw DomainError(
        "checkpoint was written for different search bounds: " + path);
  }
  const Json& cj = j["cursor"];
  if (!cj.contains("n") || !cj.contains("s") ||
      !cj.contains("composition_index") || !cj["n"].is_number_unsigned() ||
      !cj["s"].is_number_unsigned() || !cj["composition_index"].is_string()) {
    throw CheckpointError("checkpoint cursor is structurally invalid: " + path);
  }
  Cursor c;
  c.n = cj["n"].get<std::size_t>();
  c.s = cj["s"].get<std::uint64_t>();
  const std::string idx = cj["composition_index"].get<std::string>();
  if (idx.empty() ||
      idx.find_first_not_of("0123456789") != std::string::npos) {
    throw CheckpointError("checkpoint composition_index is not a decimal: " +
                          idx);
  }
  c.composition_index = Int(idx);
  const Cursor end = end_cursor(cfg);
  if (c == end) return c;
  if (c.n < cfg.n_min || c.n > cfg.n_max || c.s > cfg.sum_max) {
    throw CheckpointError("checkpoint cursor is outside the search bounds");
  }
  if (c.composition_index > composition_count(c.s, c.n)) {
    throw CheckpointError("checkpoint cursor index exceeds its block");
  }
  return c;
}

// ---------------------------------------------------------------------------
// The enumeration engine
// ---------------------------------------------------------------------------

struct SearchStats {
  Int compositions = 0;
  std::uint64_t blocks_enumerated = 0;
  std::uint64_t blocks_pruned = 0;
  std::uint64_t records = 0;
  std::uint64_t nontrivial = 0;
  bool completed = true;  // false when a stop hook ended the run early
  Cursor cursor;          // next position (the end cursor when completed)
};

namespace detail {

/// A prefix block: all compositions of one (n, s) block sharing the same
/// first entry. Units are the parallelism and checkpoint granularity; their
/// concatenation in (n, s, first) order is exactly the global order.
struct WorkUnit {
  std::size_t n = 0;
  std::uint64_t s = 0;
  Entry first = 0;
  Int start_index;  // global composition index of this unit within (n, s)
  Int count;        // compositions in this unit
  Int offset;       // resume offset into the unit (usually 0)
};

struct UnitOutput {
  std::vector<SearchRecord> records;
  std::vector<std::string> lines;
  Int compositions = 0;
};

inline UnitOutput process_unit(const WorkUnit& u, const SearchConfig& cfg) {
  UnitOutput out;
  const std::size_t suffix_parts = u.n - 1;
  const std::uint64_t suffix_sum = u.s - u.first;
  std::vector<Entry> suffix =
      composition_unrank(suffix_sum, suffix_parts, u.offset);
  std::vector<Entry> full(u.n);
  full[0] = u.first;

  for (Int i = u.offset; i < u.count; ++i) {
    std::copy(suffix.begin(), suffix.end(), full.begin() + 1);
    Tuple t(full);
    ++out.compositions;
    SatisfactionResult s = is_satisfying(t);
    if (s.satisfying && (!cfg.k_filter || *s.value == *cfg.k_filter)) {
      SearchRecord rec = make_record(t);
      out.lines.push_back(record_jsonl(rec));
      out.records.push_back(std::move(rec));
    }
    if (i + 1 < u.count && !next_composition(suffix)) {
      throw Error("composition iterator exhausted before unit end");
    }
  }
  return out;
}

inline std::vector<WorkUnit> build_units(const SearchConfig& cfg,
                                         const Cursor* resume,
                                         SearchStats& stats) {
  std::vector<WorkUnit> units;
  for (std::size_t n = cfg.n_min; n <= cfg.n_max; ++n) {
    for (std::uint64_t s = 0; s <= cfg.sum_max; ++s) {
      if (!block_admissible(n, s)) {
        ++stats.blocks_pruned;
        continue;
      }
      ++stats.blocks_enumerated;
      Int start = 0;
      for (Entry v = 0; v <= s; ++v) {
        Int cnt = composition_count(s - v, n - 1);
        if (cnt > 0) {
          units.push_back(WorkUnit{n, s, v, start, cnt, Int(0)});
        }
        start += cnt;
      }
    }
  }
  if (resume != nullptr) {
    std::size_t keep_from = units.size();
    for (std::size_t i = 0; i < units.size(); ++i) {
      WorkUnit& u = units[i];
      const bool block_before =
          u.n < resume->n || (u.n == resume->n && u.s < resume->s);
      const bool same_block = (u.n == resume->n && u.s == resume->s);
      if (block_before ||
          (same_block && u.start_index + u.count <= resume->composition_index)) {
        continue;  // fully behind the cursor
      }
      if (same_block && u.start_index < resume->composition_index) {
        u.offset = resume->composition_index - u.start_index;
      }
      keep_from = i;
      break;
    }
    units.erase(units.begin(),
                units.begin() + static_cast<std::ptrdiff_t>(keep_from));
  }
  return units;
}

}  // namespace detail

/// Runs the systematic enumeration. Records flow to `on_record` and, as
/// JSONL lines, to `jsonl_out` and/or cfg.output_path — all three see the
/// same deterministic global order regardless of worker count. Resume
/// appends to the output file and continues exactly at the cursor;
/// `stop_after_records` ends the run at the first unit boundary once that
/// many records have been flushed, and `stop_flag` (polled at the same
/// boundaries) lets an interrupt handler request the identical clean stop.
/// Either way the checkpoint on disk names exactly the next unflushed
/// position, so the interrupted-plus-resumed byte stream equals an
/// uninterrupted run.
inline SearchStats run_search(
    const SearchConfig& cfg,
    const std::function<void(const SearchRecord&)>& on_record = {},
    std::ostream* jsonl_out = nullptr, const Cursor* resume_from = nullptr,
    std::optional<std::uint64_t> stop_after_records = std::nullopt,
    const std::atomic<bool>* stop_flag = nullptr) {
  validate(cfg);
  SearchStats stats;
  stats.cursor = end_cursor(cfg);

  std::ofstream file;
  if (!cfg.output_path.empty()) {
    file.open(cfg.output_path,
              resume_from ? std::ios::app : std::ios::trunc);
    if (!file) throw IoError("cannot open output file: " + cfg.output_path);
  }

  std::vector<detail::WorkUnit> units =
      detail::build_units(cfg, resume_from, stats);

  auto cursor_after = [&](std::size_t i) -> Cursor {
    if (i + 1 < units.size()) {
      const detail::WorkUnit& nx = units[i + 1];
      return Cursor{nx.n, nx.s, nx.start_index};
    }
    return end_cursor(cfg);
  };

  bool stopped = false;
  std::size_t flushed_units = 0;

  auto flush_unit = [&](std::size_t i, detail::UnitOutput&& out) {
    for (const std::string& line : out.lines) {
      if (file.is_open()) file << line << '\n';
      if (jsonl_out != nullptr) (*jsonl_out) << line << '\n';
    }
    if (file.is_open()) {
      file.flush();
      if (!file) throw IoError("write failed: " + cfg.output_path);
    }
    for (const SearchRecord& r : out.records) {
      stats.nontrivial += r.trivial ? 0 : 1;
      if (on_record) on_record(r);
    }
    stats.records += out.records.size();
    stats.compositions += out.compositions;
    ++flushed_units;
    const Cursor next = cursor_after(i);
    if (!cfg.checkpoint_path.empty()) {
      write_checkpoint(cfg.checkpoint_path, cfg, next);
    }
    const bool stop_requested =
        (stop_after_records && stats.records >= *stop_after_records) ||
        (stop_flag != nullptr && stop_flag->load(std::memory_order_relaxed));
    if (stop_requested && i + 1 < units.size()) {
      stats.completed = false;
      stats.cursor = next;
      stopped = true;
    }
  };

  if (cfg.workers <= 1 || units.size() <= 1) {
    for (std::size_t i = 0; i < units.size() && !stopped; ++i) {
      flush_unit(i, detail::process_unit(units[i], cfg));
    }
  } else {
    // Workers claim units in order; the merge below flushes strictly in
    // unit order, so output bytes cannot depend on scheduling. The window
    // bounds how far computation may run ahead of flushing.
    const std::size_t window = static_cast<std::size_t>(cfg.workers) * 4;
    std::mutex mu;
    std::condition_variable cv;
    std::vector<std::optional<detail::UnitOutput>> slots(units.size());
    std::atomic<std::size_t> next_unit{0};
    std::atomic<bool> abort{false};
    std::size_t flush_pos = 0;
    std::exception_ptr worker_error;

    auto worker = [&]() {
      while (!abort.load(std::memory_order_relaxed)) {
        const std::size_t i = next_unit.fetch_add(1);
        if (i >= units.size()) return;
        {
          std::unique_lock<std::mutex> lk(mu);
          cv.wait(lk, [&] {
            return abort.load(std::memory_order_relaxed) ||
                   i < flush_pos + window;
          });
          if (abort.load(std::memory_order_relaxed)) return;
        }
        try {
          detail::UnitOutput out = detail::process_unit(units[i], cfg);
          std::lock_guard<std::mutex> lk(mu);
          slots[i] = std::move(out);
          cv.notify_all();
        } catch (...) {
          std::lock_guard<std::mutex> lk(mu);
          if (!worker_error) worker_error = std::current_exception();
          abort.store(true);
          cv.notify_all();
          return;
        }
      }
    };

    std::vector<std::thread> pool;
    const unsigned count =
        std::min<unsigned>(cfg.workers,
                           static_cast<unsigned>(units.size()));
    pool.reserve(count);
    for (unsigned w = 0; w < count; ++w) pool.emplace_back(worker);

    try {
      for (std::size_t i = 0; i < units.size() && !stopped; ++i) {
        detail::UnitOutput out;
        {
          std::unique_lock<std::mutex> lk(mu);
          cv.wait(lk, [&] {
            return slots[i].has_value() || worker_error != nullptr;
          });
          if (worker_error) std::rethrow_exception(worker_error);
          out = std::move(*slots[i]);
          slots[i].reset();
          flush_pos = i + 1;
          cv.notify_all();
        }
        flush_unit(i, std::move(out));
      }
    } catch (...) {
      abort.store(true);
      cv.notify_all();
      for (std::thread& th : pool) th.join();
      throw;
    }
    abort.store(true);
    cv.notify_all();
    for (std::thread& th : pool) th.join();
    if (worker_error && !stopped) std::rethrow_exception(worker_error);
  }

  if (!stopped) {
    stats.completed = true;
    stats.cursor = end_cursor(cfg);
    if (!cfg.checkpoint_path.empty() && units.empty()) {
      write_checkpoint(cfg.checkpoint_path, cfg, stats.cursor);
    }
  }
  return stats;
}

/// Streaming front-end used when only the records matter.
inline SearchStats enumerate_satisfying(
    const SearchConfig& cfg,
    const std::function<void(const SearchRecord&)>& on_record) {
  return run_search(cfg, on_record);
}

// ---------------------------------------------------------------------------
// Method 1: cycle generation by leading triplings + Collatz descent
// ---------------------------------------------------------------------------

struct Method1Failure {
  std::uint64_t steps_taken = 0;
  Int last_value;
};

struct Method1Result {
  std::optional<SearchRecord> record;
  std::optional<Method1Failure> failure;
  bool ok() const { return record.has_value(); }
};

/// Generalized method 1: from `start`, apply the tripling map g_iters
/// times, then iterate the plain Collatz step until the value first
/// returns to start (success) or the step cap trips (reported failure —
/// descent is not guaranteed to revisit arbitrary starts). Each tuple entry
/// records the halvings after the corresponding tripling.
inline Method1Result probe_cycle(const Int& start, std::uint64_t g_iters,
                                 std::uint64_t step_cap = kDefaultStepCap) {
  if (start < 1) throw DomainError("probe_cycle: start must be >= 1");
  if (g_iters < 1) throw DomainError("probe_cycle: g_iters must be >= 1");

  std::vector<Entry> ys;
  Int v = start;
  std::uint64_t steps = 0;
  auto tripling = [&] {
    v = 3 * v + 1;
    ys.push_back(0);
    ++steps;
  };
  for (std::uint64_t i = 0; i < g_iters; ++i) {
    if (steps >= step_cap) return {std::nullopt, Method1Failure{steps, v}};
    tripling();
  }
  while (v != start) {
    if (steps >= step_cap) return {std::nullopt, Method1Failure{steps, v}};
    if (mpz_even_p(v.get_mpz_t())) {
      v /= 2;
      ++ys.back();
      ++steps;
    } else {
      tripling();
    }
  }
  SearchRecord rec = make_record(Tuple(std::move(ys)));
  if (rec.value != start) {
    throw Error("method-1 circuit closed on anchor " + dec(rec.value) +
                " instead of " + dec(start));
  }
  return {std::move(rec), std::nullopt};
}

/// Method 1 proper: restricted to the starts whose cycles are reachable by
/// plain Collatz descent — the definition of a trivial tuple.
inline Method1Result method1_trivial(const Int& start, std::uint64_t g_iters,
                                     std::uint64_t step_cap = kDefaultStepCap) {
  if (start != 1 && start != 2 && start != 8 && start != 16) {
    throw DomainError("method1: start must be one of 1, 2, 8, 16");
  }
  return probe_cycle(start, g_iters, step_cap);
}

// ---------------------------------------------------------------------------
// Conjecture checkers
// ---------------------------------------------------------------------------

/// Every satisfying tuple in range must be all-2s or contain a 0 entry.
/// Counterexamples are collected, never asserted away — finding one would
/// be the headline result of the run.
struct Conjecture2Report {
  SearchConfig config;
  Int compositions = 0;
  std::uint64_t satisfying = 0;
  std::vector<SearchRecord> counterexamples;
};

inline Conjecture2Report check_conjecture2(const SearchConfig& cfg) {
  Conjecture2Report rep;
  rep.config = cfg;
  SearchStats stats = run_search(cfg, [&](const SearchRecord& rec) {
    ++rep.satisfying;
    if (!rec.tuple.uniform(2) && !rec.tuple.contains(0)) {
      rep.counterexamples.push_back(rec);
    }
  });
  rep.compositions = stats.compositions;
  return rep;
}

/// Which integers up to `limit` (skipping multiples of 3, which cannot sit
/// on cycles) appear as vertices of some discovered cycle. Sources record
/// the first witnessing tuple, canonically rotated. Vertices the probes
/// fail to place stay "uncovered" — unknown, not refuted.
struct CoverageReport {
  Int limit;
  std::uint64_t probe_g_max = 0;
  std::set<Int> covered;
  std::vector<Int> uncovered;
  std::map<Int, Tuple> sources;
};

inline CoverageReport check_coverage(const Int& limit, const SearchConfig& cfg,
                                     std::uint64_t probe_g_max,
                                     std::uint64_t step_cap = kDefaultStepCap) {
  if (limit < 1) throw DomainError("coverage: limit must be >= 1");
  CoverageReport rep;
  rep.limit = limit;
  rep.probe_g_max = probe_g_max;

  auto absorb = [&](const SearchRecord& rec) {
    WalkResult w = walk_tuple(rec.tuple, rec.value);
    if (!w.ok()) {
      throw Error("coverage: walk rejected satisfying tuple " +
                  rec.tuple.display());
    }
    for (const Int& v : cycle_vertices(*w.walk)) {
      if (v <= limit && rep.covered.insert(v).second) {
        rep.sources.emplace(v, rec.canonical);
      }
    }
  };

  SearchConfig quiet = cfg;
  quiet.output_path.clear();
  quiet.checkpoint_path.clear();
  run_search(quiet, absorb);

  for (Int v = 1; v <= limit; ++v) {
    if (mpz_fdiv_ui(v.get_mpz_t(), 3) == 0) continue;
    if (rep.covered.count(v)) continue;
    for (std::uint64_t m = 1; m <= probe_g_max; ++m) {
      Method1Result r = probe_cycle(v, m, step_cap);
      if (r.ok()) {
        absorb(*r.record);
        break;
      }
    }
  }
  for (Int v = 1; v <= limit; ++v) {
    if (mpz_fdiv_ui(v.get_mpz_t(), 3) == 0) continue;
    if (!rep.covered.count(v)) rep.uncovered.push_back(v);
  }
  return rep;
}

}  // namespace lcf
