#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "colred/colred.hpp"

namespace colred::cli {

namespace {

// Unreadable or unwritable files.
class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A verification or check did not pass; the message carries the counterexample.
class CheckFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw FileError("cannot read '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    throw FileError("cannot write '" + path + "'");
  }
}

template <typename Load>
auto load_from(const std::string& path, Load load) {
  try {
    return load(read_file(path));
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

std::string hex(std::uint64_t value) {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << value;
  return out.str();
}

std::string tuple_text(const std::vector<Colour>& colours) {
  std::string out = "(";
  for (std::size_t i = 0; i < colours.size(); ++i) {
    out += (i > 0 ? "," : "") + to_decimal(colours[i]);
  }
  return out + ")";
}

constexpr std::size_t kCompactDisplayLimit = 64;
constexpr std::size_t kConstructSamples = 200;

struct ConstructOptions {
  int c = 0;
  std::string output;
};

int do_construct(const ConstructOptions& opt, std::ostream& out) {
  const Collection collection = construct(opt.c);
  const Construction& scheme = *collection.construction();
  out << "construct(" << opt.c << "): s = C(" << opt.c << "," << opt.c / 2 << ") = " << to_decimal(scheme.half_subset_count())
      << ", " << scheme.pairs().size() << " complement pairs\n";
  out << "size: 2^" << scheme.pairs().size() << " + " << opt.c << " = " << to_decimal(collection.size()) << '\n';
  out << "reduction: " << to_decimal(collection.size()) << " ▷ " << opt.c << '\n';
  ColourfulReport report;
  if (collection.is_lazy()) {
    report = verify_sampled(collection, kConstructSamples, 1);
    out << "colourful: " << (report ? "yes" : "NO") << " (sampled, " << kConstructSamples << " families and pairs)\n";
  } else {
    report = is_colourful(collection);
    out << "colourful: " << (report ? "yes" : "NO") << " (full check)\n";
    if (collection.families().size() <= kCompactDisplayLimit) {
      out << collection.compact();
    }
  }
  if (!report) {
    throw CheckFailed(report.detail);
  }
  if (!opt.output.empty()) {
    write_file(opt.output, save_collection(collection));
    out << "wrote " << opt.output << '\n';
  }
  return kExitOk;
}

struct VerifyOptions {
  std::string input;
  std::size_t samples = 0;
  std::uint64_t seed = 1;
};

int do_verify(const VerifyOptions& opt, std::ostream& out) {
  const Collection collection = load_from(opt.input, load_collection);
  out << "collection: c = " << collection.c() << ", k = " << to_decimal(collection.size()) << '\n';
  const bool sampled = collection.is_lazy() || opt.samples > 0;
  const std::size_t samples = opt.samples > 0 ? opt.samples : 1000;
  const ColourfulReport report = sampled ? verify_sampled(collection, samples, opt.seed) : is_colourful(collection);
  if (sampled) {
    out << "mode: sampled (" << samples << " families and pairs, seed " << opt.seed << ")\n";
  } else {
    out << "mode: full\n";
  }
  if (!report) {
    out << "colourful: no\n";
    throw CheckFailed(report.detail);
  }
  out << "colourful: yes\n";
  return kExitOk;
}

struct CompileOptions {
  std::string input;
  int k = 0;
  std::string output;
};

int do_compile(const CompileOptions& opt, std::ostream& out) {
  const Collection collection = load_from(opt.input, load_collection);
  const ImplicitAlgorithm algorithm(collection);
  const AlgorithmTable table = tabulate(algorithm, opt.k);
  const TableCheck symmetry = check_symmetry(table);
  const TableCheck properness = check_properness(table);
  if (!symmetry || !properness) {
    throw std::logic_error("compiled table fails its own checks: " + (symmetry ? properness.detail : symmetry.detail));
  }
  write_file(opt.output, save_table(table));
  out << "compiled " << table.k() << " ▷ " << table.c() << " table (" << table.entries().size() << " entries) to "
      << opt.output << '\n';
  return kExitOk;
}

struct ExtractOptions {
  std::string input;
  std::string output;
};

int do_extract(const ExtractOptions& opt, std::ostream& out) {
  const AlgorithmTable table = load_from(opt.input, load_table);
  if (const auto sym = check_symmetry(table); !sym) {
    throw CheckFailed("table is not symmetric: " + sym.detail);
  }
  if (const auto proper = check_properness(table); !proper) {
    throw CheckFailed("table is not proper: " + proper.detail);
  }
  const Collection collection = extract(table);
  if (const auto report = is_colourful(collection); !report) {
    throw std::logic_error("extracted collection is not colourful: " + report.detail);
  }
  write_file(opt.output, save_collection(collection));
  out << "extracted colourful collection of size " << collection.families().size() << " over [" << collection.c()
      << "]\n"
      << collection.compact() << "wrote " << opt.output << '\n';
  return kExitOk;
}

struct CheckOptions {
  std::string input;
};

int do_check(const CheckOptions& opt, std::ostream& out) {
  const AlgorithmTable table = load_from(opt.input, load_table);
  const TableCheck symmetry = check_symmetry(table);
  const TableCheck properness = check_properness(table);
  out << "table: " << table.k() << " ▷ " << table.c() << '\n';
  out << "symmetric: " << (symmetry ? "yes" : "no, " + symmetry.detail) << '\n';
  out << "proper: " << (properness ? "yes" : "no, " + properness.detail) << '\n';
  return symmetry && properness ? kExitOk : kExitCheckFailed;
}

struct SimulateOptions {
  std::string topology = "path";
  std::size_t n = 0;
  std::string k;
  std::uint64_t seed = 1;
  std::string chain = "default";
  std::string graph_file;
  bool distinct = false;
  bool snapshots = false;
  std::string trace_file;
  std::string output;
};

std::vector<Stage> load_chain(const std::string& list) {
  std::vector<Stage> chain;
  std::stringstream items(list);
  std::string item;
  while (std::getline(items, item, ',')) {
    if (item == "default") {
      for (Stage& stage : default_chain()) {
        chain.push_back(std::move(stage));
      }
      continue;
    }
    const std::string text = read_file(item);
    try {
      if (looks_like_table(text)) {
        chain.push_back({item, load_table(text)});
      } else {
        chain.push_back({item, ImplicitAlgorithm(load_collection(text))});
      }
    } catch (const FormatError& e) {
      throw FormatError(item + ": " + e.what());
    }
  }
  if (chain.empty() && list != "") {
    throw std::invalid_argument("empty --chain");
  }
  return chain;
}

int do_simulate(const SimulateOptions& opt, std::ostream& out) {
  ColouredGraph graph;
  if (!opt.graph_file.empty()) {
    graph = load_from(opt.graph_file, load_graph);
    out << "graph: " << to_string(graph.topology) << " n=" << graph.size() << " k=" << to_decimal(graph.k)
        << " from " << opt.graph_file << '\n';
  } else {
    if (opt.k.empty() || opt.n == 0) {
      throw std::invalid_argument("simulate needs -n and -k, or --graph");
    }
    const Topology topology = parse_topology(opt.topology);
    const BigInt k = parse_big(opt.k);
    graph = opt.distinct ? random_distinct(topology, opt.n, k, opt.seed) : random_proper(topology, opt.n, k, opt.seed);
    out << "graph: " << to_string(topology) << " n=" << opt.n << " k=" << to_decimal(k) << " seed=" << opt.seed
        << (opt.distinct ? " (distinct colours)" : "") << '\n';
  }
  if (const auto violations = validate(graph); !violations.empty()) {
    throw std::invalid_argument("input graph is not properly coloured: " + violations.front().describe());
  }
  const std::vector<Stage> chain = load_chain(opt.chain);
  const ChainResult result = run_chain(graph, chain, opt.snapshots);

  std::string summary = to_decimal(graph.k);
  for (std::size_t r = 0; r < result.trace.size(); ++r) {
    const RoundRecord& record = result.trace[r];
    out << "round " << r + 1 << ": " << record.stage << "  " << to_decimal(record.k_in) << " ▷ "
        << to_decimal(record.k_out) << "  digest " << hex(record.digest) << '\n';
    summary += " ▷ " + to_decimal(record.k_out);
  }
  out << "chain: " << summary << '\n';
  if (const auto violations = validate(result.graph); !violations.empty()) {
    throw std::logic_error("final colouring is not proper: " + violations.front().describe());
  }
  out << "final: proper " << to_decimal(result.graph.k) << "-colouring of " << result.graph.size() << " nodes after "
      << result.trace.size() << " rounds\n";
  if (!opt.trace_file.empty()) {
    write_file(opt.trace_file, save_trace(result.trace));
  }
  if (!opt.output.empty()) {
    write_file(opt.output, save_graph(result.graph));
  }
  return kExitOk;
}

struct SearchOptions {
  int c = 0;
  std::uint64_t budget = kDefaultSearchBudget;
  std::string output;
};

int do_search(const SearchOptions& opt, std::ostream& out) {
  const SearchResult result = max_colourful(opt.c, opt.budget);
  if (result.witness) {
    if (const auto report = is_colourful(*result.witness); !report) {
      throw std::logic_error("search witness is not colourful: " + report.detail);
    }
  }
  if (result.maximal_only) {
    out << "scope: maximal intersecting families only\n";
  }
  if (result.exhaustive) {
    out << "max=" << result.best_size << " (exhaustive)\n";
  } else {
    out << "max>=" << result.best_size << " (budget exhausted after " << result.nodes << " nodes)\n";
  }
  out << "nodes: " << result.nodes << '\n';
  if (result.witness) {
    out << "witness:\n" << result.witness->compact();
  }
  if (!opt.output.empty()) {
    write_file(opt.output, save_search_result(result));
  }
  return kExitOk;
}

int do_demo(std::ostream& out) {
  const AlgorithmTable table = example_4to3();
  const ColouredGraph input{Topology::path, {1, 2, 1, 4, 3, 4, 3}, 4, false};
  const ColouredGraph output = step(input, table);
  out << "algorithm 4 ▷ 3: A(x,y,z) = y for y <= 3, A(x,4,z) = min({1,2,3} \\ {x,z})\n";
  out << "symmetric: " << (check_symmetry(table) ? "yes" : "no") << ", proper: "
      << (check_properness(table) ? "yes" : "no") << '\n';
  out << "input:  " << tuple_text(input.colours) << '\n';
  out << "output: " << tuple_text(output.colours) << '\n';
  if (const auto violations = validate(output); !violations.empty()) {
    throw std::logic_error("demo output is not proper: " + violations.front().describe());
  }
  const Collection collection = extract(table);
  out << "extracted collection:\n" << collection.compact();
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"One-round colour reduction on paths and cycles via colourful collections", "colred"};
  app.require_subcommand(1);

  ConstructOptions construct_opt;
  auto* construct_cmd = app.add_subcommand("construct", "Build the colourful collection for an even palette");
  construct_cmd->add_option("-c", construct_opt.c, "Target palette size (even, >= 4)")->required();
  construct_cmd->add_option("-o,--output", construct_opt.output, "Write the collection to FILE");

  VerifyOptions verify_opt;
  auto* verify_cmd = app.add_subcommand("verify", "Check that a collection is colourful");
  verify_cmd->add_option("file", verify_opt.input, "Collection file")->required();
  verify_cmd->add_option("--samples", verify_opt.samples, "Sample this many families and pairs instead of a full check");
  verify_cmd->add_option("--seed", verify_opt.seed, "Sampling seed");

  CompileOptions compile_opt;
  auto* compile_cmd = app.add_subcommand("compile", "Tabulate the algorithm of a colourful collection");
  compile_cmd->add_option("file", compile_opt.input, "Collection file")->required();
  compile_cmd->add_option("-k", compile_opt.k, "Input palette size")->required();
  compile_cmd->add_option("-o,--output", compile_opt.output, "Table file")->required();

  ExtractOptions extract_opt;
  auto* extract_cmd = app.add_subcommand("extract", "Recover a colourful collection from an algorithm table");
  extract_cmd->add_option("table", extract_opt.input, "Table file")->required();
  extract_cmd->add_option("-o,--output", extract_opt.output, "Collection file")->required();

  CheckOptions check_opt;
  auto* check_cmd = app.add_subcommand("check", "Check a table for symmetry and properness");
  check_cmd->add_option("table", check_opt.input, "Table file")->required();

  SimulateOptions sim_opt;
  auto* sim_cmd = app.add_subcommand("simulate", "Run a reduction chain on a random or given path or cycle");
  sim_cmd->add_option("--topology", sim_opt.topology, "path or cycle")->check(CLI::IsMember({"path", "cycle"}));
  sim_cmd->add_option("-n", sim_opt.n, "Number of nodes");
  sim_cmd->add_option("-k", sim_opt.k, "Input palette, decimal or B^E (e.g. 10^100)");
  sim_cmd->add_option("--seed", sim_opt.seed, "Random seed");
  sim_cmd->add_option("--chain", sim_opt.chain, "'default' or comma-separated collection/table files");
  sim_cmd->add_option("--graph", sim_opt.graph_file, "Read the input graph from FILE");
  sim_cmd->add_flag("--distinct", sim_opt.distinct, "Draw pairwise distinct colours");
  sim_cmd->add_flag("--snapshots", sim_opt.snapshots, "Store full colourings in the trace");
  sim_cmd->add_option("--trace", sim_opt.trace_file, "Write the per-round trace to FILE");
  sim_cmd->add_option("-o,--output", sim_opt.output, "Write the final graph to FILE");

  SearchOptions search_opt;
  auto* search_cmd = app.add_subcommand("search", "Brute-force the largest colourful collection over [c]");
  search_cmd->add_option("-c", search_opt.c, "Palette size (1..5)")->required();
  search_cmd->add_option("--budget", search_opt.budget, "Node budget");
  search_cmd->add_option("-o,--output", search_opt.output, "Write the search result to FILE");

  auto* demo_cmd = app.add_subcommand("demo", "Run the 4 ▷ 3 example on (1,2,1,4,3,4,3)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*construct_cmd) return do_construct(construct_opt, out);
    if (*verify_cmd) return do_verify(verify_opt, out);
    if (*compile_cmd) return do_compile(compile_opt, out);
    if (*extract_cmd) return do_extract(extract_opt, out);
    if (*check_cmd) return do_check(check_opt, out);
    if (*sim_cmd) return do_simulate(sim_opt, out);
    if (*search_cmd) return do_search(search_opt, out);
    if (*demo_cmd) return do_demo(out);
  } catch (const CheckFailed& e) {
    err << "check failed: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const NotColourfulError& e) {
    err << "not colourful: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const FileError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LazyCollectionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PaletteMismatch& e) {
    err << "palette mismatch: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace colred::cli
