#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dcol/errors.hpp"
#include "dcol/experiment.hpp"
#include "dcol/io.hpp"

namespace {

using namespace dcol;

struct Common {
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;
  std::string format;
};

void add_common(CLI::App* sub, Common& c, bool with_format = true) {
  sub->add_option("--seed", c.seed, "random seed");
  sub->add_option("--threads", c.threads, "worker threads for exact searches");
  if (with_format) sub->add_option("--format", c.format, "graph format: edge-list, graph6, dimacs");
  sub->allow_extras();
}

// Splits leftover tokens into positionals and --key value pairs.
void split_extras(const std::vector<std::string>& extras, std::vector<std::string>& pos, Params& params) {
  for (std::size_t i = 0; i < extras.size(); ++i) {
    const std::string& a = extras[i];
    if (a.size() > 2 && a.rfind("--", 0) == 0) {
      auto eq = a.find('=');
      if (eq != std::string::npos) {
        params.set(a.substr(2, eq - 2), a.substr(eq + 1));
      } else {
        if (i + 1 >= extras.size()) throw InvalidInput("option " + a + " needs a value");
        params.set(a.substr(2), extras[++i]);
      }
    } else {
      pos.push_back(a);
    }
  }
}

std::optional<GraphFormat> parse_format(const std::string& name) {
  if (name.empty()) return std::nullopt;
  auto f = format_from_name(name);
  if (!f) throw InvalidInput("unknown format '" + name + "'");
  return f;
}

Graph load_graph(const std::string& path, const std::string& format) {
  GraphRead r;
  if (path.empty() || path == "-") {
    std::string text(std::istreambuf_iterator<char>(std::cin), {});
    r = read_graph_text(text, parse_format(format));
  } else {
    r = read_graph_file(path, parse_format(format));
  }
  if (r.duplicates) std::cerr << "warning: " << r.duplicates << " duplicate edges collapsed\n";
  return r.graph;
}

void expect_positionals(const std::vector<std::string>& pos, std::size_t lo, std::size_t hi, const char* usage) {
  if (pos.size() < lo || pos.size() > hi) throw CLI::ValidationError(std::string("usage: ") + usage);
}

int run(int argc, char** argv) {
  CLI::App app{"dcol: defective and clustered colouring engines"};
  app.require_subcommand(1);
  Common c;

  auto* gen = app.add_subcommand("gen", "emit a construction (graph6 by default)");
  add_common(gen, c);
  auto* colour = app.add_subcommand("colour", "colour a graph with an engine and print a report");
  add_common(colour, c);
  std::string dot_path, colouring_path;
  colour->add_option("--dot", dot_path, "write a DOT file with colour attributes");
  colour->add_option("--colouring", colouring_path, "write the colouring as 'vertex colour' lines");
  auto* verify = app.add_subcommand("verify", "audit a colouring of a graph");
  add_common(verify, c);
  auto* oracle = app.add_subcommand("oracle", "exact answers under size caps");
  add_common(oracle, c);
  auto* params = app.add_subcommand("params", "closed-form parameter calculators");
  add_common(params, c, false);
  auto* runm = app.add_subcommand("run", "run a JSON experiment manifest");
  add_common(runm, c, false);
  auto* list = app.add_subcommand("list", "list engines, constructions, questions and formulas");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  CLI::App* sub = app.get_subcommands().front();
  std::vector<std::string> pos;
  Params p;
  split_extras(sub->remaining(), pos, p);

  if (sub == list) {
    auto show = [](const char* title, const std::vector<std::string>& xs) {
      std::cout << title << ":";
      for (const auto& x : xs) std::cout << ' ' << x;
      std::cout << '\n';
    };
    show("engines", engine_names());
    show("constructions", construction_names());
    show("questions", oracle_questions());
    show("formulas", formula_names());
    return 0;
  }
  if (sub == gen) {
    expect_positionals(pos, 1, 1, "gen <construction> [--param value ...]");
    Graph g = generate(pos[0], p, c.seed);
    write_graph(std::cout, g, parse_format(c.format).value_or(GraphFormat::Graph6));
    return 0;
  }
  if (sub == colour) {
    expect_positionals(pos, 1, 2, "colour <engine> [--param value ...] [graph|-]");
    Graph g = load_graph(pos.size() > 1 ? pos[1] : "-", c.format);
    Report r = colour_report(pos[0], g, p, c.seed, c.threads);
    std::cout << r.str();
    if (!dot_path.empty() || !colouring_path.empty()) {
      // Rerun is deterministic; keeps the report path free of file concerns.
      Colouring chi = run_engine(pos[0], g, p, c.seed, c.threads).colouring;
      if (!dot_path.empty()) {
        std::ofstream out(dot_path);
        write_dot(out, g, &chi);
      }
      if (!colouring_path.empty()) {
        std::ofstream out(colouring_path);
        write_colouring(out, chi);
      }
    }
    return 0;
  }
  if (sub == verify) {
    expect_positionals(pos, 2, 2, "verify <graph> <colouring>");
    p.check_consumed("verify");
    Graph g = load_graph(pos[0], c.format);
    Colouring chi = read_colouring_file(pos[1], g.n());
    std::cout << colouring_report(g, chi).str();
    return 0;
  }
  if (sub == oracle) {
    expect_positionals(pos, 1, 2, "oracle <question> [--param value ...] [graph|-]");
    Graph g = load_graph(pos.size() > 1 ? pos[1] : "-", c.format);
    std::cout << oracle_answer(pos[0], g, p, c.threads).str();
    return 0;
  }
  if (sub == params) {
    expect_positionals(pos, 1, 1, "params <formula> [--arg value ...]");
    std::cout << evaluate_formula(pos[0], p).str();
    return 0;
  }
  if (sub == runm) {
    expect_positionals(pos, 1, 1, "run <manifest.json>");
    p.check_consumed("run");
    auto outcome = run_manifest(read_manifest_file(pos[0]), c.threads);
    std::cout << outcome.report.str();
    if (!outcome.bounds_met) {
      std::cerr << "expected bounds not met\n";
      return 1;
    }
    return 0;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const dcol::HypothesisViolation& e) {
    std::cout << "violation: " << e.what() << "\nwitness:";
    for (int v : e.witness()) std::cout << ' ' << v;
    std::cout << '\n';
    return 2;
  } catch (const dcol::CapExceeded& e) {
    std::cerr << e.what() << '\n';
    return 3;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
