// Command-line front end for the loosened-Collatz toolkit.
//
// Exit codes: 0 success (including "no counterexample"), 1 usage error,
// 2 I/O error, 3 counterexample found (conjecture commands only).

#include <CLI11.hpp>

#include <atomic>
#include <csignal>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "lcf/lcf.hpp"

namespace {

using lcf::dec;
using lcf::Int;
using lcf::Json;
using lcf::Tuple;

struct Options {
  std::string format = "human";
  bool quiet = false;
};

void require_format(const Options& opt,
                    std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (opt.format == a) return;
  }
  throw lcf::DomainError("--format " + opt.format +
                         " is not supported by this command");
}

std::string walk_arrows(const lcf::CycleWalk& w) {
  std::string out = dec(w.start);
  for (const lcf::Step& s : w.steps) {
    out += (s.label == lcf::StepLabel::g) ? " →g " : " →f ";
    out += dec(s.to);
  }
  return out;
}

void write_text_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw lcf::IoError("cannot open output file: " + path);
  out << text;
  if (!out) throw lcf::IoError("write failed: " + path);
}

std::string record_human(const lcf::SearchRecord& r) {
  std::string out;
  out += "tuple: " + r.tuple.display() + "\n";
  out += "value: " + dec(r.value) + "\n";
  out += "canonical: " + r.canonical.display() + "\n";
  out += std::string("trivial: ") + (r.trivial ? "yes" : "no") + "\n";
  out += "atoms:";
  for (const Tuple& a : r.atoms) out += " " + a.display();
  out += "\n";
  return out;
}

int cmd_eval(const Options& opt, const std::string& text) {
  require_format(opt, {"human", "json"});
  const Tuple t = Tuple::parse(text);
  const lcf::SatisfactionResult r = lcf::is_satisfying(t);
  if (opt.format == "json") {
    std::cout << lcf::satisfaction_json(t, r).dump() << "\n";
    return 0;
  }
  std::cout << "tuple: " << t.display() << "\n";
  std::cout << "N = " << dec(r.raw.numerator) << "\n";
  std::cout << "D = " << dec(r.raw.denominator) << "\n";
  if (r.satisfying) {
    std::cout << "satisfying (value " << dec(*r.value) << ")\n";
  } else {
    std::cout << "not satisfying (value " << dec(r.raw.exact()) << ")\n";
  }
  return 0;
}

int cmd_verify(const Options& opt, const std::string& text) {
  require_format(opt, {"human", "json"});
  const Tuple t = Tuple::parse(text);
  const lcf::SatisfactionResult r = lcf::is_satisfying(t);
  if (!r.satisfying) {
    if (opt.format == "json") {
      std::cout << Json{{"satisfying", false},
                        {"exact_value", dec(r.raw.exact())}}
                       .dump()
                << "\n";
    } else {
      std::cout << "not satisfying: LCF value is " << dec(r.raw.exact())
                << ", no cycle to verify\n";
    }
    return 0;
  }
  const lcf::WalkResult w = lcf::walk_tuple(t, *r.value);
  if (!w.ok()) {
    throw lcf::Error("walk rejected satisfying tuple " + t.display() + ": " +
                     w.failure->describe());
  }
  if (opt.format == "json") {
    std::cout << lcf::walk_json(*w.walk).dump() << "\n";
  } else {
    std::cout << walk_arrows(*w.walk) << "\n";
    std::cout << "cycle verified: value " << dec(*r.value) << ", "
              << w.walk->g_count() << " tripling steps\n";
  }
  return 0;
}

int cmd_rotate(const Options& opt, const std::string& text,
               std::uint64_t count) {
  require_format(opt, {"human", "json"});
  const Tuple r = lcf::rotate(Tuple::parse(text), count);
  if (opt.format == "json") {
    std::cout << lcf::tuple_json(r).dump() << "\n";
  } else {
    std::cout << r.str() << "\n";
  }
  return 0;
}

int cmd_canon(const Options& opt, const std::string& text) {
  require_format(opt, {"human", "json"});
  const Tuple c = lcf::canonical_form(Tuple::parse(text));
  if (opt.format == "json") {
    std::cout << lcf::tuple_json(c).dump() << "\n";
  } else {
    std::cout << c.str() << "\n";
  }
  return 0;
}

int cmd_decompose(const Options& opt, const std::string& text) {
  require_format(opt, {"human", "json"});
  const Tuple t = Tuple::parse(text);
  const lcf::SatisfactionResult r = lcf::is_satisfying(t);
  if (!r.satisfying) {
    throw lcf::DomainError("decompose: " + t.display() +
                           " does not satisfy the LCF (value " +
                           dec(r.raw.exact()) + ")");
  }
  const lcf::MonoidElement e(t, *r.value);
  const lcf::AtomDecomposition d = lcf::decompose(e);
  if (opt.format == "json") {
    std::cout << lcf::decomposition_json(t, d).dump() << "\n";
    return 0;
  }
  std::cout << "k = " << dec(d.anchor) << "\n";
  std::cout << "atoms:";
  for (const Tuple& a : d.atoms) std::cout << " " << a.display();
  std::cout << "\n";
  std::cout << "fingerprint:";
  for (const Tuple& a : lcf::factorization_fingerprint(e)) {
    std::cout << " " << a.display();
  }
  std::cout << "\n";
  return 0;
}

int cmd_concat(const Options& opt, const std::string& text_a,
               const std::string& text_b) {
  require_format(opt, {"human", "json"});
  const Tuple a = Tuple::parse(text_a);
  const Tuple b = Tuple::parse(text_b);
  const lcf::SatisfactionResult ra = lcf::is_satisfying(a);
  const lcf::SatisfactionResult rb = lcf::is_satisfying(b);
  if (!ra.satisfying || !rb.satisfying) {
    throw lcf::DomainError("concat: both tuples must satisfy the LCF");
  }
  const lcf::MonoidElement joined =
      lcf::concat(lcf::MonoidElement(a, *ra.value),
                  lcf::MonoidElement(b, *rb.value));
  if (opt.format == "json") {
    std::cout << Json{{"k", dec(joined.anchor())},
                      {"tuple", lcf::tuple_json(joined.tuple())}}
                     .dump()
              << "\n";
  } else {
    std::cout << a.display() << "·" << b.display() << " = "
              << joined.tuple().display() << "\n";
    std::cout << "k = " << dec(joined.anchor()) << "\n";
  }
  return 0;
}

std::string bounds_line(const lcf::SearchConfig& cfg) {
  std::string line = "bounds: n in [" + std::to_string(cfg.n_min) + "," +
                     std::to_string(cfg.n_max) + "], entry sum <= " +
                     std::to_string(cfg.sum_max);
  line += cfg.k_filter ? (", k = " + dec(*cfg.k_filter)) : ", k = any";
  return line;
}

std::atomic<bool> g_interrupted{false};

extern "C" void on_sigint(int) { g_interrupted.store(true); }

int cmd_search(const Options& opt, lcf::SearchConfig cfg, bool resume) {
  require_format(opt, {"human", "jsonl"});
  std::optional<lcf::Cursor> cursor;
  if (resume) {
    if (cfg.checkpoint_path.empty()) {
      throw lcf::DomainError("--resume requires --checkpoint");
    }
    cursor = lcf::load_checkpoint(cfg.checkpoint_path, cfg);
  }

  // Ctrl-C stops cleanly at the next flushed unit, leaving a resumable
  // checkpoint instead of a torn output file.
  g_interrupted.store(false);
  auto previous = std::signal(SIGINT, on_sigint);

  // Records go to the output file when given, otherwise to stdout; the
  // summary then moves to stderr so the record stream stays clean.
  const bool records_to_stdout = cfg.output_path.empty();
  std::ostream* sink = records_to_stdout ? &std::cout : nullptr;
  lcf::SearchStats stats =
      lcf::run_search(cfg, {}, sink, cursor ? &*cursor : nullptr,
                      std::nullopt, &g_interrupted);
  std::signal(SIGINT, previous);

  if (!opt.quiet) {
    std::ostream& out = records_to_stdout ? std::cerr : std::cout;
    out << "search " << bounds_line(cfg) << "\n";
    out << "blocks: " << stats.blocks_enumerated << " enumerated, "
        << stats.blocks_pruned << " pruned (denominator <= 0)\n";
    out << "compositions examined: " << dec(stats.compositions) << "\n";
    out << "satisfying tuples found: " << stats.records << "\n";
    if (stats.nontrivial > 0) {
      out << "NON-TRIVIAL TUPLES FOUND: " << stats.nontrivial << "\n";
    }
    if (!cfg.output_path.empty()) out << "output: " << cfg.output_path << "\n";
    if (!cfg.checkpoint_path.empty()) {
      out << "checkpoint: " << cfg.checkpoint_path
          << (stats.completed ? " (complete)" : " (partial, resumable)")
          << "\n";
    }
    if (!stats.completed) {
      out << "interrupted"
          << (cfg.checkpoint_path.empty() ? "" : "; resume with --resume")
          << "\n";
    }
    out << "exit codes: 0 ok, 1 usage error, 2 io error\n";
  }
  return 0;
}

int cmd_trivial(const Options& opt, std::uint64_t start, std::uint64_t g_iters,
                std::uint64_t step_cap) {
  require_format(opt, {"human", "json"});
  const lcf::Method1Result r = lcf::method1_trivial(Int(static_cast<unsigned long>(start)), g_iters, step_cap);
  if (!r.ok()) {
    if (opt.format == "json") {
      std::cout << Json{{"found", false},
                        {"steps_taken", r.failure->steps_taken},
                        {"last_value", dec(r.failure->last_value)}}
                       .dump()
                << "\n";
    } else {
      std::cout << "no cycle within step cap: stopped after "
                << r.failure->steps_taken << " steps at value "
                << dec(r.failure->last_value) << "\n";
    }
    return 0;
  }
  if (opt.format == "json") {
    std::cout << lcf::record_jsonl(*r.record) << "\n";
  } else {
    std::cout << "start " << start << ", leading tripling steps " << g_iters
              << "\n"
              << record_human(*r.record);
  }
  return 0;
}

int cmd_conjecture2(const Options& opt, const lcf::SearchConfig& cfg) {
  require_format(opt, {"human", "json"});
  const lcf::Conjecture2Report rep = lcf::check_conjecture2(cfg);
  if (opt.format == "json") {
    Json ce = Json::array();
    for (const lcf::SearchRecord& r : rep.counterexamples) {
      ce.push_back(lcf::record_json(r));
    }
    std::cout << Json{{"n_min", cfg.n_min},
                      {"n_max", cfg.n_max},
                      {"sum_max", cfg.sum_max},
                      {"compositions", dec(rep.compositions)},
                      {"satisfying", rep.satisfying},
                      {"counterexamples", std::move(ce)}}
                     .dump()
              << "\n";
  } else if (!opt.quiet) {
    std::cout << "conjecture: every satisfying tuple is all-2s or contains a 0\n";
    std::cout << bounds_line(cfg) << "\n";
    std::cout << "compositions examined: " << dec(rep.compositions) << "\n";
    std::cout << "satisfying tuples checked: " << rep.satisfying << "\n";
    std::cout << "counterexamples: " << rep.counterexamples.size() << "\n";
    for (const lcf::SearchRecord& r : rep.counterexamples) {
      std::cout << "COUNTEREXAMPLE: " << r.tuple.display() << " (value "
                << dec(r.value) << ")\n";
    }
    std::cout << "exit codes: 0 none found, 3 counterexample found, 1 usage, "
                 "2 io\n";
  }
  return rep.counterexamples.empty() ? 0 : 3;
}

int cmd_coverage(const Options& opt, std::uint64_t limit,
                 const lcf::SearchConfig& cfg, std::uint64_t probe_g_max,
                 std::uint64_t step_cap) {
  require_format(opt, {"human", "json"});
  const lcf::CoverageReport rep =
      lcf::check_coverage(Int(static_cast<unsigned long>(limit)), cfg,
                          probe_g_max, step_cap);
  if (opt.format == "json") {
    Json covered = Json::array();
    for (const Int& v : rep.covered) covered.push_back(dec(v));
    Json uncovered = Json::array();
    for (const Int& v : rep.uncovered) uncovered.push_back(dec(v));
    Json sources = Json::object();
    for (const auto& [v, t] : rep.sources) sources[dec(v)] = lcf::tuple_json(t);
    std::cout << Json{{"limit", dec(rep.limit)},
                      {"probe_g_max", rep.probe_g_max},
                      {"covered", std::move(covered)},
                      {"uncovered", std::move(uncovered)},
                      {"sources", std::move(sources)}}
                     .dump()
              << "\n";
    return 0;
  }
  if (!opt.quiet) {
    std::cout << "coverage limit: " << limit << " (multiples of 3 excluded)\n";
    std::cout << bounds_line(cfg) << "; probes: up to " << probe_g_max
              << " leading tripling steps\n";
    std::cout << "covered (" << rep.covered.size() << "):";
    for (const Int& v : rep.covered) std::cout << " " << dec(v);
    std::cout << "\n";
    std::cout << "uncovered (" << rep.uncovered.size() << "):";
    for (const Int& v : rep.uncovered) std::cout << " " << dec(v);
    std::cout << "\n";
    for (const auto& [v, t] : rep.sources) {
      std::cout << "  " << dec(v) << " <- " << t.display() << "\n";
    }
    std::cout << "uncovered vertices are unknowns, not counterexamples\n";
  }
  return 0;
}

std::string geometry_summary(const Tuple& t, const lcf::OrbitPolygon& p) {
  std::string out;
  out += "tuple: " + t.display() + "\n";
  out += "dimension: " + std::to_string(p.dimension) + "\n";
  out += "vertices:";
  for (const auto& v : p.vertices) {
    out += " " + Tuple(std::vector<lcf::Entry>(v)).display();
  }
  out += "\n";
  out += "squared edge length: " + dec(p.squared_lengths.front()) +
         " (all equal: " +
         (lcf::equal_edge_check(p) ? std::string("yes") : std::string("no")) +
         ")\n";
  out += "centroid: (";
  const auto centroid = lcf::diagonal_centroid(p);
  for (std::size_t i = 0; i < centroid.size(); ++i) {
    if (i > 0) out += ", ";
    out += dec(centroid[i]);
  }
  out += ")\n";
  return out;
}

int cmd_geometry(const Options& opt, const std::string& text,
                 const std::string& out_path) {
  require_format(opt, {"human", "csv", "json"});
  const Tuple t = Tuple::parse(text);
  const lcf::OrbitPolygon p = lcf::orbit_polygon(t);
  if (opt.format == "human") {
    std::cout << geometry_summary(t, p);
    return 0;
  }
  write_text_output(out_path, opt.format == "csv"
                                  ? lcf::polygon_csv(p)
                                  : lcf::polygon_json(p).dump() + "\n");
  // The export is the machine artifact; the summary goes wherever it
  // cannot corrupt it.
  if (!opt.quiet) {
    (out_path.empty() ? std::cerr : std::cout) << geometry_summary(t, p);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact evaluation, search and decomposition of cycles in the "
               "loosened Collatz graph"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"human", "json", "jsonl", "csv"}));
  app.add_flag("--quiet", opt.quiet, "suppress human-readable summaries");

  int rc = 0;
  std::string tuple_a;
  std::string tuple_b;
  std::uint64_t rotate_count = 1;

  auto* eval = app.add_subcommand("eval", "evaluate the LCF on a tuple");
  eval->fallthrough();
  eval->add_option("tuple", tuple_a, "comma-separated entries")->required();
  eval->callback([&] { rc = cmd_eval(opt, tuple_a); });

  auto* verify =
      app.add_subcommand("verify", "verify a tuple by walking its cycle");
  verify->fallthrough();
  verify->add_option("tuple", tuple_a)->required();
  verify->callback([&] { rc = cmd_verify(opt, tuple_a); });

  auto* rot = app.add_subcommand("rotate", "left-rotate a tuple");
  rot->fallthrough();
  rot->add_option("tuple", tuple_a)->required();
  rot->add_option("--count", rotate_count, "number of left rotations");
  rot->callback([&] { rc = cmd_rotate(opt, tuple_a, rotate_count); });

  auto* canon =
      app.add_subcommand("canon", "canonical (least) rotation of a tuple");
  canon->fallthrough();
  canon->add_option("tuple", tuple_a)->required();
  canon->callback([&] { rc = cmd_canon(opt, tuple_a); });

  auto* dec_cmd =
      app.add_subcommand("decompose", "factor a satisfying tuple into atoms");
  dec_cmd->fallthrough();
  dec_cmd->add_option("tuple", tuple_a)->required();
  dec_cmd->callback([&] { rc = cmd_decompose(opt, tuple_a); });

  auto* cat = app.add_subcommand(
      "concat", "concatenate two satisfying tuples with equal values");
  cat->fallthrough();
  cat->add_option("first", tuple_a)->required();
  cat->add_option("second", tuple_b)->required();
  cat->callback([&] { rc = cmd_concat(opt, tuple_a, tuple_b); });

  lcf::SearchConfig cfg;
  std::string k_text;
  bool resume = false;
  auto add_bounds = [&](CLI::App* sub) {
    sub->add_option("--n-min", cfg.n_min, "minimum tuple length");
    sub->add_option("--n-max", cfg.n_max, "maximum tuple length");
    sub->add_option("--sum-max", cfg.sum_max, "maximum entry sum");
    sub->add_option("--workers", cfg.workers, "worker threads");
  };

  auto* search = app.add_subcommand(
      "search", "systematically enumerate satisfying tuples (JSONL)");
  search->fallthrough();
  add_bounds(search);
  search->add_option("--k", k_text, "emit only tuples with this value");
  search->add_option("--out", cfg.output_path,
                     "output file (default: stdout)");
  search->add_option("--checkpoint", cfg.checkpoint_path, "checkpoint file");
  search->add_flag("--resume", resume, "resume from the checkpoint");
  search->callback([&] {
    if (!k_text.empty()) cfg.k_filter = Int(k_text);
    rc = cmd_search(opt, cfg, resume);
  });

  std::uint64_t start = 1;
  std::uint64_t g_iters = 1;
  std::uint64_t step_cap = lcf::kDefaultStepCap;
  auto* trivial = app.add_subcommand(
      "trivial", "generate a trivial tuple from 1, 2, 8 or 16");
  trivial->fallthrough();
  trivial->add_option("--start", start, "start vertex (1, 2, 8 or 16)")
      ->required();
  trivial->add_option("--g-iters", g_iters, "leading tripling steps")
      ->required();
  trivial->add_option("--step-cap", step_cap, "walk step cap");
  trivial->callback([&] { rc = cmd_trivial(opt, start, g_iters, step_cap); });

  std::uint64_t limit = 16;
  std::uint64_t probe_g_max = 8;
  auto* coverage = app.add_subcommand(
      "coverage", "which integers <= limit lie on a discovered cycle");
  coverage->fallthrough();
  coverage->add_option("--limit", limit, "largest vertex to account for")
      ->required();
  coverage->add_option("--probe-g-max", probe_g_max,
                       "max leading tripling steps per probe");
  coverage->add_option("--step-cap", step_cap, "probe walk step cap");
  add_bounds(coverage);
  coverage->callback(
      [&] { rc = cmd_coverage(opt, limit, cfg, probe_g_max, step_cap); });

  auto* conj2 = app.add_subcommand(
      "conjecture2", "check: satisfying tuples are all-2s or contain a 0");
  conj2->fallthrough();
  add_bounds(conj2);
  conj2->callback([&] { rc = cmd_conjecture2(opt, cfg); });

  std::string geo_out;
  auto* geometry = app.add_subcommand(
      "geometry", "orbit polygon of a tuple (csv/json export)");
  geometry->fallthrough();
  geometry->add_option("tuple", tuple_a)->required();
  geometry->add_option("--out", geo_out, "output file (default: stdout)");
  geometry->callback([&] { rc = cmd_geometry(opt, tuple_a, geo_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const lcf::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 2;
  } catch (const lcf::CheckpointError& e) {
    std::cerr << "checkpoint error: " << e.what() << "\n";
    return 2;
  } catch (const lcf::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
