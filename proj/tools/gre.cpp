// gre: generate, partition, run and analyze graphs from the command line.
//
// Exit codes: 0 ok, 1 internal error, 2 bad parameter, 3 I/O, 4 malformed
// input, 5 configuration mismatch.

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "gre/engine/engine.hpp"
#include "gre/graph/edge_list_io.hpp"
#include "gre/graph/directed_graph.hpp"
#include "gre/oracle/oracle.hpp"
#include "gre/partition/agent_graph.hpp"
#include "gre/partition/metrics.hpp"
#include "gre/partition/partition_io.hpp"
#include "gre/partition/placement.hpp"
#include "gre/programs.hpp"
#include "gre/rmat.hpp"

namespace fs = std::filesystem;

namespace {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kParameter = 2,
  kIo = 3,
  kFormat = 4,
  kConfiguration = 5,
};

void note(const std::string& message) { std::cerr << "gre: " << message << '\n'; }

struct GenArgs {
  gre::RmatParams rmat;
  std::string weights;
  std::uint64_t weight_seed = 0;
  std::string output;
};

struct PartitionArgs {
  gre::PartitionConfig config;
  std::string mode = "greedy-coordinated";
  std::string membership = "exact";
  bool loaders_given = false;
};

struct PartitionCmdArgs {
  std::string input;
  bool weighted = false;
  bool symmetrize = false;
  std::string output;
  std::string metrics;
  PartitionArgs part;
};

struct RunArgs {
  std::string app = "pagerank";
  std::string input;
  std::string partitions;
  bool weighted = false;
  PartitionArgs part;
  std::uint64_t iterations = 0;
  std::uint64_t source = 0;
  bool no_predecessor = false;
  double damping = 0.85;
  double base = 0.15;
  unsigned workers = 1;
  std::size_t buffer_capacity = gre::kDefaultBufferCapacity;
  std::size_t lock_table_size = 4096;
  std::uint64_t checkpoint_interval = 0;
  std::string checkpoint_path = "gre.ckpt";
  std::string restore;
  std::optional<std::uint64_t> shuffle_seed;
  bool check_invariants = false;
  std::string output;
  std::string report;
  std::string report_format = "json";
};

struct ReferenceArgs {
  std::string app = "pagerank";
  std::string input;
  bool weighted = false;
  std::uint64_t iterations = 50;
  std::uint64_t source = 0;
  double damping = 0.85;
  double base = 0.15;
  std::string output;
};

struct AnalyzeArgs {
  std::vector<std::string> metrics;
  std::string result;
  std::string reference;
  double tolerance = 0.0;
  std::string format = "text";
};

void add_partition_options(CLI::App* cmd, PartitionArgs& a) {
  cmd->add_option("-k,--partitions-count", a.config.k, "number of partitions")
      ->check(CLI::Range(1U, 1U << 20));
  cmd->add_option("--mode", a.mode,
                  "greedy-coordinated | greedy-oblivious | hash | gre-s | gre-p");
  cmd->add_option("--loaders", a.config.loaders, "parallel loaders")
      ->check(CLI::Range(1U, 1024U))
      ->each([&a](const std::string&) { a.loaders_given = true; });
  cmd->add_option("--sync-interval", a.config.sync_interval,
                  "edges per loader between state merges (coordinated)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--epsilon", a.config.epsilon, "edge-balance slack")->check(CLI::NonNegativeNumber);
  cmd->add_option("--membership", a.membership, "exact | approximate");
  cmd->add_option("--fp-rate", a.config.false_positive_rate,
                  "Bloom false-positive rate for approximate membership")
      ->check(CLI::Range(1e-9, 0.5));
}

gre::PartitionConfig resolve(PartitionArgs& a) {
  gre::PartitionConfig c = a.config;
  c.mode = gre::parse_placement_mode(a.mode);
  // GRE-S is a single coordinated loader; GRE-P is several oblivious ones.
  if (a.mode == "gre-s" && !a.loaders_given) c.loaders = 1;
  if (a.mode == "gre-p" && !a.loaders_given) c.loaders = 8;
  if (a.membership == "exact") {
    c.membership = gre::MembershipMode::exact;
  } else if (a.membership == "approximate") {
    c.membership = gre::MembershipMode::approximate;
  } else {
    throw gre::ParameterError("unknown membership mode '" + a.membership + "'");
  }
  gre::validate(c);
  return c;
}

std::pair<std::uint64_t, std::uint64_t> parse_weight_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw gre::ParameterError("weight range must be LOW:HIGH");
  try {
    std::size_t used = 0;
    const auto low = std::stoull(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("low");
    const auto high_text = text.substr(colon + 1);
    const auto high = std::stoull(high_text, &used);
    if (used != high_text.size()) throw std::invalid_argument("high");
    return {low, high};
  } catch (const std::logic_error&) {
    throw gre::ParameterError("weight range must be LOW:HIGH, got '" + text + "'");
  }
}

int cmd_gen(GenArgs& a) {
  gre::validate(a.rmat);
  auto edges = gre::generate_rmat(a.rmat);
  if (!a.weights.empty()) {
    const auto [low, high] = parse_weight_range(a.weights);
    edges = gre::assign_weights(edges, low, high, a.weight_seed ? a.weight_seed : a.rmat.seed);
  }
  gre::save_edges(a.output, edges);
  std::cout << "vertices " << a.rmat.vertex_count() << "\nedges " << edges.size() << '\n';
  return kOk;
}

std::string metrics_table(const std::vector<std::pair<std::string, gre::PartitionMetrics>>& rows) {
  std::ostringstream out;
  out << std::left << std::setw(24) << "name" << std::right << std::setw(6) << "k" << std::setw(12)
      << "agents" << std::setw(12) << "cut_factor" << std::setw(12) << "eq_edgecut" << std::setw(12) << "edgecut" << std::setw(10)
      << "scatter%" << std::setw(10) << "combine%" << std::setw(10) << "balance" << std::setw(12)
      << "vc_factor" << '\n';
  out << std::fixed;
  for (const auto& [name, m] : rows) {
    out << std::left << std::setw(24) << name << std::right << std::setw(6) << m.k << std::setw(12)
        << m.agent_count << std::setw(12) << std::setprecision(4) << m.cut_factor << std::setw(12)
        << m.equivalent_edge_cut_rate << std::setw(12) << m.edge_cut_rate << std::setw(10) << std::setprecision(1)
        << 100.0 * m.scatter_share << std::setw(10) << 100.0 * m.combiner_share << std::setw(10)
        << std::setprecision(3) << m.edge_balance << std::setw(12) << std::setprecision(4)
        << m.vertexcut_cut_factor << '\n';
  }
  return out.str();
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out || !(out << text)) throw gre::IoError("cannot write " + path.string());
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw gre::IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_partition(PartitionCmdArgs& a) {
  const auto config = resolve(a.part);
  auto edges = gre::load_edges(a.input, a.weighted);
  if (a.symmetrize) edges = gre::symmetrize(edges);
  const auto placement = gre::partition_stream(edges, config);
  auto parts = gre::build_agent_graph(edges, placement);
  for (auto& p : parts) p.symmetrized = a.symmetrize;
  gre::write_partitions(a.output, parts);
  const auto metrics = gre::compute_metrics(parts, config.epsilon, config.mode);
  const fs::path metrics_path = a.metrics.empty() ? fs::path(a.output) / "metrics.json" : fs::path(a.metrics);
  write_text(metrics_path, gre::metrics_to_json(metrics) + "\n");
  std::cout << metrics_table({{std::string(gre::to_string(config.mode)), metrics}});
  if (auto warning = gre::balance_warning(metrics)) note(*warning);
  return kOk;
}

std::vector<gre::AgentGraphPartition> load_run_partitions(RunArgs& a, bool needs_symmetric) {
  if (!a.partitions.empty()) {
    auto parts = gre::read_partitions(a.partitions);
    if (needs_symmetric && !parts.front().symmetrized) {
      throw gre::ConfigurationError(
          "cc needs partitions of a symmetrized graph; repartition with --symmetrize");
    }
    return parts;
  }
  if (a.input.empty()) throw gre::ParameterError("run needs --input or --partitions");
  const auto config = resolve(a.part);
  auto edges = gre::load_edges(a.input, a.weighted);
  if (needs_symmetric) {
    edges = gre::symmetrize(edges);
    note("cc: using the symmetrized view of the input (" + std::to_string(edges.size()) + " edges)");
  }
  auto parts = gre::build_agent_graph(edges, gre::partition_stream(edges, config));
  for (auto& p : parts) p.symmetrized = needs_symmetric;
  return parts;
}

class ReportSink {
 public:
  ReportSink(const std::string& path, std::string format) : format_(std::move(format)) {
    if (format_ != "json" && format_ != "text") {
      throw gre::ParameterError("report format must be json or text");
    }
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw gre::IoError("cannot write report " + path);
    }
  }

  void operator()(const gre::SuperstepReport& r) {
    std::ostream& out = file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout;
    if (format_ == "json") {
      out << gre::report_to_json_line(r) << '\n';
    } else {
      const auto t = r.totals();
      out << "superstep " << std::setw(5) << r.superstep << "  active " << std::setw(10)
          << r.active_scatter << "  scatters " << std::setw(12) << t.scatters << "  applies "
          << std::setw(10) << t.applies << "  messages " << std::setw(10) << t.messages_sent
          << "  buffers " << std::setw(8) << t.buffers_sent << '\n';
    }
  }

 private:
  std::string format_;
  std::ofstream file_;
};

template <class P, class Init, class Write>
void execute(RunArgs& a, std::vector<gre::AgentGraphPartition>& parts, P program, Init init,
             std::optional<std::uint64_t> cap, Write&& write_result) {
  gre::EngineOptions options;
  options.buffer_capacity = a.buffer_capacity;
  options.lock_table_size = a.lock_table_size;
  options.lanes = a.workers;
  options.shuffle_seed = a.shuffle_seed;
  options.check_invariants = a.check_invariants;
  auto engine = a.restore.empty()
                    ? gre::Engine<P>(parts, program, init, options)
                    : gre::Engine<P>::restore(parts, program, fs::path(a.restore), options);
  if (!a.restore.empty()) note("restored from " + a.restore + " at superstep " + std::to_string(engine.superstep()));
  ReportSink sink(a.report, a.report_format);
  engine.run_to_termination(cap, [&](const gre::Engine<P>& e, const gre::SuperstepReport& r) {
    sink(r);
    if (a.checkpoint_interval && e.superstep() % a.checkpoint_interval == 0) {
      e.checkpoint(fs::path(a.checkpoint_path));
    }
  });
  note(std::string("finished after superstep ") + std::to_string(engine.superstep()));
  std::ofstream out(a.output);
  if (!out) throw gre::IoError("cannot write result " + a.output);
  write_result(out, engine.results());
  if (!out) throw gre::IoError("cannot write result " + a.output);
}

std::optional<std::uint64_t> env_number(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  const std::string_view text(raw);
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw gre::ParameterError(std::string(name) + " is not a non-negative integer: " + raw);
  }
  return value;
}

int cmd_run(RunArgs& a) {
  if (a.workers == 0) throw gre::ParameterError("workers must be >= 1");
  std::optional<std::uint64_t> cap;
  if (a.iterations > 0) cap = a.iterations;
  if (a.app == "pagerank") {
    if (!cap) cap = 50;
    auto parts = load_run_partitions(a, false);
    execute(a, parts, gre::PageRank(a.damping, a.base), gre::pagerank_init(), cap,
            [](std::ostream& out, const auto& results) {
              std::vector<gre::GlobalId> ids;
              std::vector<double> values;
              for (const auto& [g, v] : results) {
                ids.push_back(g);
                values.push_back(v);
              }
              gre::oracle::write_csv(out, ids, values);
            });
  } else if (a.app == "sssp") {
    auto parts = load_run_partitions(a, false);
    execute(a, parts, gre::Sssp(a.source, !a.no_predecessor), gre::sssp_init(a.source), cap,
            [](std::ostream& out, const auto& results) {
              std::vector<gre::GlobalId> ids;
              std::vector<std::uint64_t> values;
              for (const auto& [g, v] : results) {
                ids.push_back(g);
                values.push_back(v.distance);
              }
              gre::oracle::write_csv(out, ids, values);
            });
  } else if (a.app == "cc") {
    auto parts = load_run_partitions(a, true);
    execute(a, parts, gre::Cc{}, gre::cc_init(), cap, [](std::ostream& out, const auto& results) {
      std::vector<gre::GlobalId> ids;
      std::vector<std::uint64_t> values;
      for (const auto& [g, v] : results) {
        ids.push_back(g);
        values.push_back(v);
      }
      gre::oracle::write_csv(out, ids, values);
    });
  } else {
    throw gre::ParameterError("unknown app '" + a.app + "' (pagerank, sssp, cc)");
  }
  return kOk;
}

int cmd_reference(ReferenceArgs& a) {
  auto edges = gre::load_edges(a.input, a.weighted);
  std::ofstream out(a.output);
  if (!out) throw gre::IoError("cannot write " + a.output);
  if (a.app == "pagerank") {
    gre::oracle::write_csv(out, gre::oracle::serial_pagerank(gre::DirectedGraph(edges),
                                                             static_cast<unsigned>(a.iterations),
                                                             a.damping, a.base));
  } else if (a.app == "sssp") {
    if (!edges.weighted()) throw gre::ConfigurationError("sssp needs a weighted edge list (--weighted)");
    gre::oracle::write_csv(out, gre::oracle::serial_dijkstra(gre::DirectedGraph(edges), a.source));
  } else if (a.app == "cc") {
    gre::oracle::write_csv(out, gre::oracle::serial_union_find_cc(gre::DirectedGraph(edges)));
  } else {
    throw gre::ParameterError("unknown app '" + a.app + "' (pagerank, sssp, cc)");
  }
  return kOk;
}

struct ValueColumn {
  std::map<gre::GlobalId, double> values;  // +inf for unreachable
};

ValueColumn read_value_csv(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw gre::IoError("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != "global_id,value") {
    throw gre::FormatError(path.string() + ": expected header 'global_id,value'");
  }
  ValueColumn col;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw gre::FormatError(path.string() + ": line " + std::to_string(line_no) + ": missing comma");
    }
    try {
      std::size_t used = 0;
      const auto id = std::stoull(line.substr(0, comma), &used);
      if (used != comma) throw std::invalid_argument("id");
      const std::string value = line.substr(comma + 1);
      double v = HUGE_VAL;
      if (value != "inf") {
        v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument("value");
      }
      if (!col.values.emplace(id, v).second) {
        throw gre::FormatError(path.string() + ": duplicate id " + std::to_string(id));
      }
    } catch (const std::logic_error&) {
      throw gre::FormatError(path.string() + ": line " + std::to_string(line_no) + ": bad record");
    }
  }
  return col;
}

int cmd_analyze(AnalyzeArgs& a) {
  if (a.format != "text" && a.format != "json") throw gre::ParameterError("format must be text or json");
  if (a.metrics.empty() && a.result.empty()) {
    throw gre::ParameterError("analyze needs --metrics files or --result/--reference");
  }
  if (!a.metrics.empty()) {
    std::vector<std::pair<std::string, gre::PartitionMetrics>> rows;
    for (const auto& path : a.metrics) {
      const fs::path p(path);
      const std::string name = p.filename() == "metrics.json" && p.has_parent_path()
                                   ? p.parent_path().filename().string()
                                   : p.stem().string();
      rows.emplace_back(name, gre::metrics_from_json(read_text(p)));
    }
    if (a.format == "json") {
      std::cout << "[";
      for (std::size_t i = 0; i < rows.size(); ++i) {
        std::cout << (i ? "," : "") << "{\"name\":\"" << rows[i].first
                  << "\",\"metrics\":" << gre::metrics_to_json(rows[i].second) << "}";
      }
      std::cout << "]\n";
    } else {
      std::cout << metrics_table(rows);
      const auto& base = rows.front().second;
      for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& m = rows[i].second;
        if (base.equivalent_edge_cut_rate > 0) {
          std::cout << rows[i].first << " / " << rows.front().first << " equivalent edge-cut ratio "
                    << std::setprecision(4) << m.equivalent_edge_cut_rate / base.equivalent_edge_cut_rate
                    << '\n';
        }
      }
    }
  }
  if (!a.result.empty() || !a.reference.empty()) {
    if (a.result.empty() || a.reference.empty()) {
      throw gre::ParameterError("--result and --reference go together");
    }
    const auto result = read_value_csv(a.result);
    const auto reference = read_value_csv(a.reference);
    if (result.values.size() != reference.values.size()) {
      throw gre::FormatError("result has " + std::to_string(result.values.size()) +
                             " vertices, reference has " + std::to_string(reference.values.size()));
    }
    std::uint64_t mismatches = 0;
    double max_error = 0.0;
    for (const auto& [id, expected] : reference.values) {
      const auto it = result.values.find(id);
      if (it == result.values.end()) {
        throw gre::FormatError("vertex " + std::to_string(id) + " missing from result");
      }
      const double got = it->second;
      const double err = (std::isinf(got) || std::isinf(expected))
                             ? (got == expected ? 0.0 : HUGE_VAL)
                             : std::abs(got - expected);
      if (err > a.tolerance) ++mismatches;
      max_error = std::max(max_error, err);
    }
    if (a.format == "json") {
      std::cout << "{\"vertices\":" << reference.values.size() << ",\"mismatches\":" << mismatches
                << ",\"linf\":" << std::setprecision(17) << max_error << "}\n";
    } else {
      std::cout << "vertices   " << reference.values.size() << "\nmismatches " << mismatches
                << "\nlinf       " << std::setprecision(6) << max_error << '\n';
    }
    return mismatches == 0 ? kOk : kInternal;
  }
  return kOk;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const gre::ParameterError*>(&e)) return kParameter;
  if (dynamic_cast<const gre::IoError*>(&e)) return kIo;
  if (dynamic_cast<const gre::FormatError*>(&e)) return kFormat;
  if (dynamic_cast<const gre::ConfigurationError*>(&e) || dynamic_cast<const gre::InitError*>(&e) ||
      dynamic_cast<const gre::CompatibilityError*>(&e)) {
    return kConfiguration;
  }
  if (dynamic_cast<const fs::filesystem_error*>(&e)) return kIo;
  return kInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gre: agent-graph partitioning and scatter-combine execution"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate an R-MAT edge list");
  gen_cmd->add_option("--scale", gen.rmat.scale, "log2 of the vertex id space")->required();
  gen_cmd->add_option("--edge-factor", gen.rmat.edge_factor, "edges per vertex");
  gen_cmd->add_option("--seed", gen.rmat.seed, "generator seed");
  gen_cmd->add_option("--a", gen.rmat.a);
  gen_cmd->add_option("--b", gen.rmat.b);
  gen_cmd->add_option("--c", gen.rmat.c);
  gen_cmd->add_option("--d", gen.rmat.d);
  gen_cmd->add_flag("--permute", gen.rmat.permute, "shuffle the edge order");
  gen_cmd->add_option("--threads", gen.rmat.threads)->check(CLI::Range(1U, 1024U));
  gen_cmd->add_option("--weights", gen.weights, "uniform integer weights LOW:HIGH");
  gen_cmd->add_option("--weight-seed", gen.weight_seed, "defaults to --seed");
  gen_cmd->add_option("-o,--output", gen.output, "edge list (.bin for binary)")->required();

  PartitionCmdArgs part;
  auto* part_cmd = app.add_subcommand("partition", "place edges and build agent-graph partitions");
  part_cmd->add_option("-i,--input", part.input)->required();
  part_cmd->add_flag("--weighted", part.weighted, "input carries a weight column");
  part_cmd->add_flag("--symmetrize", part.symmetrize, "add the reverse of every edge first");
  part_cmd->add_option("-o,--output", part.output, "directory for part-NNNNN.grp files")->required();
  part_cmd->add_option("--metrics", part.metrics, "metrics JSON (default OUTPUT/metrics.json)");
  add_partition_options(part_cmd, part.part);

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "execute a vertex program");
  run_cmd->add_option("--app", run.app, "pagerank | sssp | cc");
  auto* in_opt = run_cmd->add_option("-i,--input", run.input, "edge list; partitioned on the fly");
  run_cmd->add_option("-p,--partitions", run.partitions, "partition directory")->excludes(in_opt);
  run_cmd->add_flag("--weighted", run.weighted, "input carries a weight column");
  add_partition_options(run_cmd, run.part);
  run_cmd->add_option("--iterations", run.iterations, "superstep cap (pagerank default 50, 0 = none)");
  run_cmd->add_option("--source", run.source, "sssp source vertex");
  run_cmd->add_flag("--no-predecessor", run.no_predecessor, "sssp: do not track predecessors");
  run_cmd->add_option("--damping", run.damping, "pagerank damping");
  run_cmd->add_option("--base", run.base, "pagerank teleport term");
  auto* workers_opt = run_cmd->add_option("--workers", run.workers, "lanes per partition worker (env GRE_WORKERS)")
                          ->check(CLI::Range(1U, 1024U));
  auto* capacity_opt =
      run_cmd->add_option("--buffer-capacity", run.buffer_capacity, "message buffer bytes (env GRE_BUFFER_CAPACITY)");
  run_cmd->add_option("--lock-table-size", run.lock_table_size)->check(CLI::PositiveNumber);
  run_cmd->add_option("--checkpoint-interval", run.checkpoint_interval, "supersteps between checkpoints");
  run_cmd->add_option("--checkpoint-path", run.checkpoint_path);
  run_cmd->add_option("--restore", run.restore, "resume from a checkpoint");
  run_cmd->add_option("--shuffle-seed", run.shuffle_seed, "permute delivery order with this seed");
  run_cmd->add_flag("--check-invariants", run.check_invariants);
  run_cmd->add_option("-o,--output", run.output, "result CSV")->required();
  run_cmd->add_option("--report", run.report, "superstep report file (default stdout)");
  run_cmd->add_option("--report-format", run.report_format, "json | text");

  ReferenceArgs ref;
  auto* ref_cmd = app.add_subcommand("reference", "serial reference result for an edge list");
  ref_cmd->add_option("--app", ref.app, "pagerank | sssp | cc");
  ref_cmd->add_option("-i,--input", ref.input)->required();
  ref_cmd->add_flag("--weighted", ref.weighted);
  ref_cmd->add_option("--iterations", ref.iterations);
  ref_cmd->add_option("--source", ref.source);
  ref_cmd->add_option("--damping", ref.damping);
  ref_cmd->add_option("--base", ref.base);
  ref_cmd->add_option("-o,--output", ref.output)->required();

  AnalyzeArgs an;
  auto* an_cmd = app.add_subcommand("analyze", "compare metrics files or result columns");
  an_cmd->add_option("--metrics", an.metrics, "partition metrics JSON files");
  an_cmd->add_option("--result", an.result, "engine result CSV");
  an_cmd->add_option("--reference", an.reference, "reference result CSV");
  an_cmd->add_option("--tolerance", an.tolerance, "allowed absolute difference");
  an_cmd->add_option("--format", an.format, "text | json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParameter;
  }

  try {
    // CLI11 drops environment values that fail validation, so these are read here.
    if (*run_cmd) {
      if (workers_opt->count() == 0) {
        if (const auto w = env_number("GRE_WORKERS")) {
          if (*w < 1 || *w > 1024) throw gre::ParameterError("GRE_WORKERS must be in [1, 1024]");
          run.workers = static_cast<unsigned>(*w);
        }
      }
      if (capacity_opt->count() == 0) {
        if (const auto c = env_number("GRE_BUFFER_CAPACITY")) run.buffer_capacity = static_cast<std::size_t>(*c);
      }
    }
    if (*gen_cmd) return cmd_gen(gen);
    if (*part_cmd) return cmd_partition(part);
    if (*run_cmd) return cmd_run(run);
    if (*ref_cmd) return cmd_reference(ref);
    if (*an_cmd) return cmd_analyze(an);
  } catch (const std::exception& e) {
    note(std::string("error: ") + e.what());
    return exit_code_for(e);
  }
  return kOk;
}
