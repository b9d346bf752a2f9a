#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <unistd.h>

#include "lcf/search.hpp"
#include "test_util.hpp"

using lcf::Cursor;
using lcf::DomainError;
using lcf::Entry;
using lcf::Int;
using lcf::SearchConfig;
using lcf::SearchRecord;
using lcf::Tuple;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    static int counter = 0;
    path = std::filesystem::temp_directory_path() /
           ("lcf-search-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter++));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

std::vector<Tuple> collect_tuples(const SearchConfig& cfg) {
  std::vector<Tuple> out;
  lcf::enumerate_satisfying(
      cfg, [&](const SearchRecord& r) { out.push_back(r.tuple); });
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SearchConfig bounds(std::size_t n_min, std::size_t n_max,
                    std::uint64_t sum_max) {
  SearchConfig cfg;
  cfg.n_min = n_min;
  cfg.n_max = n_max;
  cfg.sum_max = sum_max;
  return cfg;
}

}  // namespace

TEST_CASE("config validation") {
  CHECK_THROWS_AS(lcf::validate(bounds(0, 1, 4)), DomainError);
  CHECK_THROWS_AS(lcf::validate(bounds(3, 2, 4)), DomainError);
  SearchConfig cfg = bounds(1, 2, 4);
  cfg.workers = 0;
  CHECK_THROWS_AS(lcf::validate(cfg), DomainError);
  cfg.workers = 1;
  cfg.k_filter = Int(0);
  CHECK_THROWS_AS(lcf::validate(cfg), DomainError);
}

TEST_CASE("composition order is n, then sum, then lexicographic") {
  std::vector<Entry> c = lcf::first_composition(3, 3);
  std::vector<std::vector<Entry>> seen{c};
  while (lcf::next_composition(c)) seen.push_back(c);
  CHECK(seen == std::vector<std::vector<Entry>>{
                    {0, 0, 3}, {0, 1, 2}, {0, 2, 1}, {0, 3, 0}, {1, 0, 2},
                    {1, 1, 1}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}, {3, 0, 0}});
  CHECK(lcf::composition_count(3, 3) == 10);
}

TEST_CASE("composition_unrank agrees with iteration") {
  for (std::uint64_t s : {0ull, 1ull, 4ull, 7ull}) {
    for (std::size_t parts : {1u, 2u, 3u, 4u}) {
      std::vector<Entry> c = lcf::first_composition(s, parts);
      Int rank = 0;
      do {
        CHECK(lcf::composition_unrank(s, parts, rank) == c);
        ++rank;
      } while (lcf::next_composition(c));
      CHECK(rank == lcf::composition_count(s, parts));
      CHECK_THROWS_AS(lcf::composition_unrank(s, parts, rank), DomainError);
    }
  }
}

TEST_CASE("block admissibility is the exact denominator sign") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::uint64_t s = 0; s <= 14; ++s) {
      CHECK(lcf::block_admissible(n, s) ==
            (lcf::pow2(s) > lcf::pow3(n)));
    }
  }
}

TEST_CASE("enumeration matches the documented small ranges") {
  CHECK(collect_tuples(bounds(1, 1, 4)) == std::vector<Tuple>{{2}});
  CHECK(collect_tuples(bounds(2, 2, 5)) == std::vector<Tuple>{{2, 2}});
  CHECK(collect_tuples(bounds(1, 2, 5)) ==
        std::vector<Tuple>{{2}, {2, 2}});

  SearchConfig filtered = bounds(3, 3, 5);
  filtered.k_filter = Int(4);
  CHECK(collect_tuples(filtered) == std::vector<Tuple>{{0, 3, 2}});
}

TEST_CASE("enumeration is exhaustive against the naive oracle (n<=3, sum<=8)") {
  std::set<Tuple> naive;
  for_each_tuple(1, 3, 8, [&](const Tuple& t) {
    if (lcf::is_satisfying(t).satisfying) naive.insert(t);
  });
  const auto found = collect_tuples(bounds(1, 3, 8));
  CHECK(std::set<Tuple>(found.begin(), found.end()) == naive);
  CHECK(found.size() == naive.size());  // no duplicates either
}

TEST_CASE("unfiltered output is closed under rotation (n<=4, sum<=10)") {
  const auto found = collect_tuples(bounds(1, 4, 10));
  const std::set<Tuple> set(found.begin(), found.end());
  for (const Tuple& t : found) {
    for (std::size_t k = 1; k < t.size(); ++k) {
      CHECK(set.count(rotate(t, k)) == 1);
    }
  }
}

TEST_CASE("records carry consistent classification") {
  lcf::enumerate_satisfying(bounds(1, 4, 10), [&](const SearchRecord& r) {
    CHECK(*lcf::is_satisfying(r.tuple).value == r.value);
    CHECK(r.canonical == lcf::canonical_form(r.tuple));
    CHECK(r.trivial == lcf::is_trivial_tuple(r.tuple));
    CHECK(r.length == r.tuple.size());
    CHECK(r.sum == r.tuple.entry_sum());
    std::vector<Entry> joined;
    for (const Tuple& a : r.atoms) {
      joined.insert(joined.end(), a.entries().begin(), a.entries().end());
    }
    CHECK(Tuple(joined) == r.tuple);
    CHECK(lcf::oracle_satisfies(r.tuple).satisfying);
  });
}

TEST_CASE("method 1 regressions") {
  const auto a = lcf::method1_trivial(1, 1);
  REQUIRE(a.ok());
  CHECK(a.record->tuple == Tuple{2});
  CHECK(a.record->value == 1);

  const auto b = lcf::method1_trivial(1, 2);
  REQUIRE(b.ok());
  CHECK(b.record->tuple == Tuple{0, 0, 3, 4});
  CHECK(b.record->value == 1);

  const auto c = lcf::method1_trivial(2, 1);
  REQUIRE(c.ok());
  CHECK(c.record->tuple == Tuple{0, 1, 1, 2, 3, 3});
  CHECK(c.record->value == 2);
  CHECK(c.record->trivial);

  // The start-16 probe: the long cycle through 14 and 7.
  const auto d = lcf::method1_trivial(16, 1);
  REQUIRE(d.ok());
  CHECK(d.record->tuple == Tuple{0, 2, 4, 1, 1, 2, 3, 0});
  CHECK(d.record->value == 16);

  CHECK_THROWS_AS(lcf::method1_trivial(5, 1), DomainError);
  CHECK_THROWS_AS(lcf::method1_trivial(1, 0), DomainError);
}

TEST_CASE("probe failures are reported, never looped") {
  // Descent from g(5)=16 falls into the 1-2-4 cycle and cannot return to 5.
  const auto fail = lcf::probe_cycle(5, 1, 10'000);
  REQUIRE_FALSE(fail.ok());
  CHECK(fail.failure->steps_taken == 10'000);

  // A second leading tripling step reaches 49, whose descent does return.
  const auto ok = lcf::probe_cycle(5, 2, 10'000);
  REQUIRE(ok.ok());
  CHECK(ok.record->tuple == Tuple{0, 0, 2, 4, 1, 1, 2, 3});
  CHECK(ok.record->value == 5);
}

TEST_CASE("workers do not change the bytes") {
  SearchConfig cfg = bounds(1, 4, 10);
  std::ostringstream one;
  lcf::run_search(cfg, {}, &one);

  for (unsigned workers : {2u, 4u}) {
    SearchConfig par = cfg;
    par.workers = workers;
    std::ostringstream out;
    lcf::run_search(par, {}, &out);
    CHECK(out.str() == one.str());
  }
}

TEST_CASE("interrupt and resume reproduce an uninterrupted run") {
  TempDir dir;
  SearchConfig cfg = bounds(1, 4, 10);

  cfg.output_path = dir.file("full.jsonl");
  const lcf::SearchStats full = lcf::run_search(cfg);
  REQUIRE(full.completed);
  REQUIRE(full.records >= 4);
  const std::string full_bytes = read_file(cfg.output_path);

  SearchConfig part = bounds(1, 4, 10);
  part.output_path = dir.file("part.jsonl");
  part.checkpoint_path = dir.file("cp.json");
  const lcf::SearchStats first_half = lcf::run_search(
      part, {}, nullptr, nullptr, full.records / 2);
  CHECK_FALSE(first_half.completed);
  CHECK(first_half.records < full.records);

  const Cursor cursor = lcf::load_checkpoint(part.checkpoint_path, part);
  CHECK(cursor == first_half.cursor);

  const lcf::SearchStats second_half =
      lcf::run_search(part, {}, nullptr, &cursor);
  CHECK(second_half.completed);
  CHECK(first_half.records + second_half.records == full.records);
  CHECK(read_file(part.output_path) == full_bytes);

  // The final checkpoint parks at the end cursor; resuming from it is a
  // no-op that appends nothing.
  const Cursor done = lcf::load_checkpoint(part.checkpoint_path, part);
  CHECK(done == lcf::end_cursor(part));
  const lcf::SearchStats nothing =
      lcf::run_search(part, {}, nullptr, &done);
  CHECK(nothing.records == 0);
  CHECK(read_file(part.output_path) == full_bytes);
}

TEST_CASE("resume at every checkpointable boundary is exact") {
  TempDir dir;
  SearchConfig cfg = bounds(1, 3, 8);
  std::ostringstream full;
  const lcf::SearchStats stats = lcf::run_search(cfg, {}, &full);

  for (std::uint64_t stop = 1; stop <= stats.records; ++stop) {
    SearchConfig part = cfg;
    part.output_path = dir.file("part-" + std::to_string(stop) + ".jsonl");
    part.checkpoint_path = dir.file("cp-" + std::to_string(stop) + ".json");
    const lcf::SearchStats head =
        lcf::run_search(part, {}, nullptr, nullptr, stop);
    if (head.completed) continue;
    const Cursor cursor = lcf::load_checkpoint(part.checkpoint_path, part);
    lcf::run_search(part, {}, nullptr, &cursor);
    CHECK(read_file(part.output_path) == full.str());
  }
}

TEST_CASE("conjecture 2 finds no counterexample at desk scale") {
  const lcf::Conjecture2Report rep =
      lcf::check_conjecture2(bounds(1, 4, 10));
  CHECK(rep.counterexamples.empty());
  CHECK(rep.satisfying == collect_tuples(bounds(1, 4, 10)).size());
  CHECK(rep.compositions > 0);
}

TEST_CASE("coverage at limit 4") {
  const lcf::CoverageReport rep =
      lcf::check_coverage(4, bounds(1, 2, 5), 1, 10'000);
  CHECK(rep.covered == std::set<Int>{1, 2, 4});
  CHECK(rep.uncovered.empty());
  CHECK(rep.sources.at(Int(1)) == Tuple{2});
  CHECK(rep.sources.at(Int(2)) == Tuple{2});
  CHECK(rep.sources.at(Int(4)) == Tuple{2});
}

TEST_CASE("coverage probes fill in what the search misses") {
  // Search bounds too small to cover anything beyond the 1-2-4 cycle;
  // probes from 5 (two leading triplings) and 8 (one) reach the rest.
  const lcf::CoverageReport rep =
      lcf::check_coverage(16, bounds(1, 1, 4), 2, 20'000);
  CHECK(rep.covered ==
        std::set<Int>{1, 2, 4, 5, 7, 8, 10, 11, 13, 14, 16});
  CHECK(rep.uncovered.empty());
  CHECK(rep.sources.at(Int(14)) == Tuple{0, 0, 2, 4, 1, 1, 2, 3});
}

TEST_CASE("coverage leaves unknowns uncovered instead of guessing") {
  // One leading tripling is not enough for 5 or 7 (their descents fall
  // into the 1-2-4 cycle), but the probe from 8 succeeds and happens to
  // pick up 5 along the way. 7 stays unknown.
  const lcf::CoverageReport rep =
      lcf::check_coverage(8, bounds(1, 1, 4), 1, 5'000);
  CHECK(rep.covered == std::set<Int>{1, 2, 4, 5, 8});
  CHECK(rep.uncovered == std::vector<Int>{7});
}
