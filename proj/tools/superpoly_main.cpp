#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "superpoly/coloring.hpp"
#include "superpoly/io.hpp"
#include "superpoly/oracles.hpp"
#include "superpoly/render.hpp"
#include "superpoly/setcover.hpp"
#include "superpoly/solver.hpp"

namespace {

using namespace superpoly;

enum class LogLevel { Quiet = 0, Info = 1, Debug = 2 };

LogLevel log_level() {
  static LogLevel level = [] {
    const char* env = std::getenv("SUPERPOLY_LOG");
    if (env == nullptr) return LogLevel::Quiet;
    std::string v(env);
    if (v == "debug") return LogLevel::Debug;
    if (v == "info") return LogLevel::Info;
    return LogLevel::Quiet;
  }();
  return level;
}

void log_info(const std::string& msg) {
  if (log_level() >= LogLevel::Info) std::cerr << "[superpoly] " << msg << "\n";
}

void log_debug(const std::string& msg) {
  if (log_level() >= LogLevel::Debug) std::cerr << "[superpoly] " << msg << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

constexpr int kExitNoEmbedding = 1;
constexpr int kExitParse = 2;
constexpr int kExitGraphTooSmall = 3;
constexpr int kExitTimeout = 4;
constexpr int kExitModeMismatch = 5;
constexpr int kExitExtraction = 6;
constexpr int kExitUsage = 64;
constexpr int kExitUnexpected = 10;

int cmd_gen_coloring(const std::string& graph_path, const std::string& out_path,
                     bool two_color) {
  Graph g = parse_graph(read_file(graph_path));
  log_info("building coloring instance for " + std::to_string(g.n) + " vertices");
  ColoringInstance ci = build_coloring_instance(g);

  Provenance prov;
  prov.kind = Provenance::Kind::Coloring;
  prov.graph = g;
  prov.two_color = two_color;

  Instance inst = std::move(ci.instance);
  if (two_color) {
    std::vector<std::pair<std::string, Polyomino>> scaled;
    for (const auto& [name, poly] : inst.pieces)
      scaled.emplace_back(name, to_two_color(poly));
    inst = Instance(std::move(scaled));
  }
  write_file(out_path, emit_instance(inst, prov));
  log_info("wrote " + out_path);
  return 0;
}

int cmd_gen_setcover(const std::string& cover_path, const std::string& out_path) {
  SetCoverInstance sc = parse_setcover(read_file(cover_path));
  log_info("building setcover instance with n=" + std::to_string(sc.n) +
           " m=" + std::to_string(sc.m()));
  Instance inst = build_setcover_instance(sc);

  Provenance prov;
  prov.kind = Provenance::Kind::SetCover;
  prov.cover = sc;
  write_file(out_path, emit_instance(inst, prov));
  log_info("wrote " + out_path);
  return 0;
}

int cmd_solve(const std::string& instance_path, const std::string& mode, double timeout,
              int threads, const std::string& layout_out) {
  InstanceFile file = parse_instance(read_file(instance_path));
  const Instance& inst = file.instance;
  log_info("solving " + instance_path + " mode=" + mode);

  SolveResult res;
  if (mode == "exact" || mode == "steiner") {
    SolverConfig cfg;
    cfg.mode = mode == "exact" ? SolveMode::ExactContact : SolveMode::ExactSteiner;
    cfg.time_limit_seconds = timeout;
    cfg.workers = threads;
    res = solve_exact(inst, cfg);
  } else if (mode == "greedy") {
    res = solve_greedy(inst);
  } else if (mode == "brute") {
    res = solve_brute(inst);
  } else if (mode == "deck") {
    if (file.provenance.kind != Provenance::Kind::Coloring || !file.provenance.graph) {
      std::cerr << "error: deck mode needs an instance generated from a graph\n";
      return kExitModeMismatch;
    }
    ColoringInstance ci = build_coloring_instance(*file.provenance.graph);
    res = deck_solve(ci);
    if (file.provenance.two_color) {
      TwoColorCodec codec;
      for (Offset& o : res.layout) o = {o.dx * codec.side, o.dy * codec.side};
      log_debug("scaled deck offsets by " + std::to_string(codec.side));
    }
    res.size = evaluate_layout(inst, res.layout);
  } else if (mode == "aligned") {
    if (file.provenance.kind != Provenance::Kind::SetCover || !file.provenance.cover ||
        file.provenance.two_color) {
      std::cerr << "error: aligned mode needs an instance generated from a set cover\n";
      return kExitModeMismatch;
    }
    res = aligned_solve(*file.provenance.cover).first;
  } else {
    std::cerr << "error: unknown mode '" << mode << "'\n";
    return kExitUsage;
  }

  if (!layout_out.empty()) write_file(layout_out, emit_layout(inst, res.layout));
  log_debug("elapsed " + std::to_string(res.stats.elapsed_seconds) + "s");
  std::cout << "size=" << res.size << " optimal=" << (res.optimal ? "true" : "false")
            << " nodes=" << res.stats.nodes << "\n";
  return res.stats.timed_out ? kExitTimeout : 0;
}

int cmd_verify_super(const std::string& container_path, const std::string& piece_path) {
  Polyomino container = parse_polyomino(read_file(container_path));
  Polyomino piece = parse_polyomino(read_file(piece_path));
  auto offsets = is_superpolyomino(container, piece);
  for (const Offset& o : offsets)
    std::cout << "offset=" << o.dx << "," << o.dy << "\n";
  return offsets.empty() ? kExitNoEmbedding : 0;
}

int cmd_extract(const std::string& instance_path, const std::string& layout_path,
                const std::string& kind) {
  InstanceFile file = parse_instance(read_file(instance_path));
  Layout lay = parse_layout(read_file(layout_path), file.instance);

  if (kind == "coloring") {
    if (file.provenance.kind != Provenance::Kind::Coloring || !file.provenance.graph) {
      std::cerr << "error: instance does not carry a graph\n";
      return kExitModeMismatch;
    }
    ColoringInstance ci = build_coloring_instance(*file.provenance.graph);
    auto classes = extract_coloring(ci, lay);
    std::cout << "k=" << classes.size() << "\n";
    for (std::size_t c = 0; c < classes.size(); ++c) {
      std::cout << "class " << c << ":";
      for (int v : classes[c]) std::cout << " " << v;
      std::cout << "\n";
    }
    return 0;
  }
  if (kind == "cover") {
    if (file.provenance.kind != Provenance::Kind::SetCover || !file.provenance.cover) {
      std::cerr << "error: instance does not carry a set cover\n";
      return kExitModeMismatch;
    }
    auto cover = extract_cover(*file.provenance.cover, lay);
    std::cout << "k=" << cover.size() << "\n";
    std::cout << "cover:";
    for (int j : cover) std::cout << " " << j;
    std::cout << "\n";
    return 0;
  }
  std::cerr << "error: unknown kind '" << kind << "'\n";
  return kExitUsage;
}

int cmd_render(const std::string& in_path, const std::string& format,
               const std::string& out_path) {
  std::string text = read_file(in_path);

  bool is_instance = false;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    if (line.rfind("poly ", 0) == 0) {
      is_instance = true;
      break;
    }
  }

  std::string rendered;
  if (is_instance) {
    InstanceFile file = parse_instance(text);
    rendered = format == "svg" ? render_svg(file.instance)
                               : emit_instance(file.instance, file.provenance);
  } else {
    Polyomino p = parse_polyomino(text);
    rendered = format == "svg" ? render_svg(p) : emit_polyomino(p);
  }
  write_file(out_path, rendered);
  log_info("wrote " + out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"colored polyomino toolkit for smallest-superpolyomino problems"};
  app.require_subcommand(1);

  std::string graph_path, cover_path, out_path, instance_path, layout_path, layout_out;
  std::string container_path, piece_path, in_path;
  std::string mode = "exact", kind, format = "ascii";
  double timeout = 0;
  int threads = 1;
  bool two_color = false;

  auto* gen_coloring = app.add_subcommand("gen-coloring", "build pieces from a graph");
  gen_coloring->add_option("--graph", graph_path, "graph file")->required();
  gen_coloring->add_option("--out", out_path, "instance file to write")->required();
  gen_coloring->add_flag("--two-color", two_color, "encode colors as two-color macrocells");

  auto* gen_setcover = app.add_subcommand("gen-setcover", "build pieces from a set cover");
  gen_setcover->add_option("--cover", cover_path, "set cover file")->required();
  gen_setcover->add_option("--out", out_path, "instance file to write")->required();

  auto* solve = app.add_subcommand("solve", "find a small superpolyomino");
  solve->add_option("--instance", instance_path, "instance file")->required();
  solve->add_option("--mode", mode, "exact|steiner|greedy|brute|deck|aligned")
      ->check(CLI::IsMember({"exact", "steiner", "greedy", "brute", "deck", "aligned"}));
  solve->add_option("--timeout", timeout, "time limit in seconds (exact modes)");
  solve->add_option("--threads", threads, "worker threads (exact mode)");
  solve->add_option("--layout-out", layout_out, "layout file to write");

  auto* verify = app.add_subcommand("verify-super", "list embeddings of a piece");
  verify->add_option("--container", container_path, "container grid file")->required();
  verify->add_option("--piece", piece_path, "piece grid file")->required();

  auto* extract = app.add_subcommand("extract", "read a solution back out of a layout");
  extract->add_option("--instance", instance_path, "instance file")->required();
  extract->add_option("--layout", layout_path, "layout file")->required();
  extract->add_option("--kind", kind, "coloring|cover")->required();

  auto* render = app.add_subcommand("render", "draw an instance or a piece");
  render->add_option("--in", in_path, "instance or grid file")->required();
  render->add_option("--format", format, "ascii|svg")
      ->check(CLI::IsMember({"ascii", "svg"}));
  render->add_option("--out", out_path, "file to write")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (gen_coloring->parsed()) return cmd_gen_coloring(graph_path, out_path, two_color);
    if (gen_setcover->parsed()) return cmd_gen_setcover(cover_path, out_path);
    if (solve->parsed()) return cmd_solve(instance_path, mode, timeout, threads, layout_out);
    if (verify->parsed()) return cmd_verify_super(container_path, piece_path);
    if (extract->parsed()) return cmd_extract(instance_path, layout_path, kind);
    if (render->parsed()) return cmd_render(in_path, format, out_path);
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const GraphTooSmallError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGraphTooSmall;
  } catch (const DeckNotIndependentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitExtraction;
  } catch (const MisalignedElementError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitExtraction;
  } catch (const WrongSetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitExtraction;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnexpected;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return kExitUnexpected;
  }
}
