#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "lpa/generators.hpp"
#include "lpa/io/dot.hpp"
#include "lpa/io/graph_parser.hpp"
#include "lpa/io/literals.hpp"
#include "lpa/io/table.hpp"
#include "lpa/oracle/crosscheck.hpp"

namespace {

using namespace lpa;
using io::Json;

struct Options {
  std::string graph_file;
  std::string ring = "Z";
  std::string out_file;
  bool json = false;
  bool dot = false;

  std::string set;
  std::string breaking_set;
  std::string table;
  std::string left;
  std::string right;
  std::string op;
  std::vector<std::string> gens;
};

struct Output {
  Json json;
  std::string text;
  std::string dot;
  int status = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("io", "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ContextPtr load_context(const Options& o) {
  return LatticeContext::make(io::parse_graph(read_file(o.graph_file)), RingSpec::parse(o.ring));
}

DPair load_pair(const ContextPtr& ctx, const std::string& path) { return io::read_dpair(ctx, io::parse_json(read_file(path))); }

Output pair_output(const DPair& p) { return {io::dpair_to_json(p), io::dpair_to_text(p), {}}; }

Json string_array(const std::vector<std::string>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(x);
  return out;
}

std::vector<std::string> generator_strings(const DPair& p) {
  std::vector<std::string> out;
  for (const Generator& gen : to_generators(p)) out.push_back(io::generator_to_string(p.context()->graph(), gen));
  return out;
}

Output run_closure(const Options& o) {
  Graph g = io::parse_graph(read_file(o.graph_file));
  VertexSet k = io::parse_vertex_set(g, o.set);
  VertexSet her = hereditary_closure(g, k);
  VertexSet hs = hs_closure(g, k);
  Output out;
  out.json["hereditary"] = g.label(her);
  out.json["hereditary_saturated"] = g.label(hs);
  out.json["breaking"] = g.label(breaking_vertices(g, hs));
  out.text = "hereditary: " + g.label(her) + "\nhereditary saturated: " + g.label(hs) +
             "\nbreaking: " + g.label(breaking_vertices(g, hs)) + "\n";
  if (!o.breaking_set.empty()) {
    VertexSet s = s_saturation(g, her, io::parse_vertex_set(g, o.breaking_set));
    out.json["s_saturation"] = g.label(s);
    out.text += "S-saturation: " + g.label(s) + "\n";
  }
  return out;
}

Output run_saturate(const Options& o) {
  auto ctx = load_context(o);
  FunctionTable f = saturate_function(*ctx, io::read_function_table(*ctx, io::parse_json(read_file(o.table))));
  Output out;
  out.json["f"] = io::function_to_json(*ctx, f);
  for (std::size_t a = 0; a < ctx->size(); ++a) {
    if (a != ctx->lattice().bottom()) out.text += "f" + ctx->lattice().label(a) + " = " + f[a].to_string() + "\n";
  }
  return out;
}

Output run_pairs(const Options& o) {
  Graph g = io::parse_graph(read_file(o.graph_file));
  PairLattice lat(g);
  Output out;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < lat.size(); ++i) labels.push_back(lat.label(i));
  out.json["pairs"] = string_array(labels);
  Json covers = Json::array();
  for (const auto& [lo, hi] : lat.covers()) covers.push_back({lat.label(lo), lat.label(hi)});
  out.json["covers"] = covers;
  for (const auto& l : labels) out.text += l + "\n";
  out.dot = io::hasse_dot("admissible pairs", labels, lat.covers());
  return out;
}

Output run_cycles(const Options& o) {
  Graph g = io::parse_graph(read_file(o.graph_file));
  Output out;
  out.json["cycles"] = Json::array();
  for (const auto& c : cycles(g)) {
    bool exclusive = is_exclusive(g, c);
    Json entry;
    entry["label"] = c.label(g);
    entry["exclusive"] = exclusive;
    entry["closure"] = g.label(cycle_closure(g, c));
    entry["down"] = g.label(cycle_down(g, c));
    out.json["cycles"].push_back(entry);
    out.text += c.label(g) + (exclusive ? " exclusive" : "") + " closure " + g.label(cycle_closure(g, c)) + " down " +
                g.label(cycle_down(g, c)) + "\n";
  }
  out.json["condition_K"] = condition_K(g);
  out.text += std::string("condition (K): ") + (condition_K(g) ? "yes" : "no") + "\n";
  return out;
}

Output run_lattice_op(const Options& o) {
  auto ctx = load_context(o);
  DPair a = load_pair(ctx, o.left);
  DPair b = load_pair(ctx, o.right);
  if (o.op == "meet") return pair_output(d_meet(a, b));
  if (o.op == "join") return pair_output(d_join(a, b));
  if (o.op == "product") return pair_output(d_product(a, b));
  if (o.op == "leq") {
    bool leq = d_leq(a, b);
    Output out;
    out.json["leq"] = leq;
    out.text = leq ? "true\n" : "false\n";
    return out;
  }
  throw DomainError("unknown-op", "lattice-op must be meet, join, product or leq");
}

Output run_graded(const Options& o) {
  auto ctx = load_context(o);
  bool graded = is_graded(load_pair(ctx, o.table));
  Output out;
  out.json["graded"] = graded;
  out.text = graded ? "graded\n" : "not graded\n";
  return out;
}

Output run_largest_graded(const Options& o) {
  auto ctx = load_context(o);
  return pair_output(largest_graded(load_pair(ctx, o.table)));
}

Output run_prime(const Options& o) {
  auto ctx = load_context(o);
  PrimeReport r = prime_necessary(load_pair(ctx, o.table));
  const Graph& g = ctx->graph();
  Output out;
  out.json["non_prime_values"] = string_array(r.non_prime_values);
  out.json["values_prime_or_unit"] = r.condition_values();
  out.json["directed"] = Json::array();
  out.text = std::string("values in Spec(R) or R: ") + (r.condition_values() ? "yes" : "no") + "\n";
  for (const auto& label : r.non_prime_values) out.text += "  not prime at " + label + "\n";
  for (const auto& c : r.directed_checks) {
    Json entry;
    entry["value"] = c.value.to_string();
    entry["H"] = g.label(c.h);
    entry["directed"] = c.directed;
    out.json["directed"].push_back(entry);
    out.text += "complement of " + g.label(c.h) + " for " + c.value.to_string() + ": " +
                (c.directed ? "downward directed" : "not downward directed") + "\n";
  }
  out.json["downward_directed"] = r.condition_directed();
  out.json["passes"] = r.passes();
  out.text += std::string("necessary conditions: ") + (r.passes() ? "pass" : "fail") + "\n";
  return out;
}

Output run_generators(const Options& o) {
  auto ctx = load_context(o);
  auto gens = generator_strings(load_pair(ctx, o.table));
  Output out;
  out.json["generators"] = string_array(gens);
  for (const auto& s : gens) out.text += s + "\n";
  return out;
}

Output run_from_generators(const Options& o) {
  auto ctx = load_context(o);
  GeneratorSet gs;
  for (const auto& s : o.gens) gs.push_back(io::parse_generator(ctx->graph(), s));
  return pair_output(from_generators(ctx, gs));
}

Output run_enumerate(const Options& o) {
  auto ctx = load_context(o);
  const RingSpec& r = ctx->ring();
  if (!r.is_finite()) {
    throw DomainError("infinite-lattice", "R = " + r.to_string() +
                                              " is infinite, so f can take infinitely many values; use a finite ring");
  }
  if (!ctx->cu().empty()) {
    throw DomainError("infinite-lattice", "C_u(E) contains " + ctx->cycle_label(0) + ", and " + r.to_string() +
                                              "[x, x^-1] has infinitely many ideals, so g(c) ranges over an infinite set");
  }
  std::vector<DPair> pairs;
  for (FunctionTable& f : graded_lattice(*ctx)) pairs.push_back(DPair::graded(ctx, std::move(f)));
  Output out;
  out.json["count"] = pairs.size();
  out.json["ideals"] = Json::array();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto gens = generator_strings(pairs[i]);
    Json entry = io::dpair_to_json(pairs[i]);
    entry["generators"] = string_array(gens);
    out.json["ideals"].push_back(entry);
    std::string joined;
    for (const auto& s : gens) joined += (joined.empty() ? "" : ", ") + s;
    labels.push_back("<" + joined + ">");
    out.text += "ideal " + std::to_string(i) + ": " + labels.back() + "\n";
  }
  out.text = std::to_string(pairs.size()) + " ideals\n" + out.text;
  out.dot = io::hasse_dot("ideals", labels, io::covering_pairs(pairs.size(), [&](std::size_t i, std::size_t j) {
                            return d_leq(pairs[i], pairs[j]);
                          }));
  return out;
}

Output run_crosscheck(const Options& o) {
  Graph g = io::parse_graph(read_file(o.graph_file));
  auto report = oracle::crosscheck(g, RingSpec::parse(o.ring));
  Output out;
  out.json["concrete_ideals"] = report.concrete_count;
  out.json["classified_ideals"] = report.classified_count;
  out.json["comparisons"] = report.comparisons;
  out.json["mismatches"] = string_array(report.mismatches);
  out.json["ok"] = report.ok();
  out.text = std::to_string(report.concrete_count) + " concrete ideals, " + std::to_string(report.classified_count) +
             " classified, " + std::to_string(report.comparisons) + " comparisons\n";
  for (const auto& m : report.mismatches) out.text += "mismatch: " + m + "\n";
  out.text += report.ok() ? "ok\n" : "FAILED\n";
  out.status = report.ok() ? 0 : 1;
  return out;
}

Output run_validate(const Options& o) {
  auto ctx = load_context(o);
  Json doc = io::parse_json(read_file(o.table));
  FunctionTable f = io::read_function_table(*ctx, doc);
  std::vector<LaurentIdeal> g = io::read_cycle_table(*ctx, f, doc);
  auto violations = dpair_validate(*ctx, f, g);
  Output out;
  out.json["valid"] = violations.empty();
  out.json["violations"] = Json::array();
  for (const auto& v : violations) {
    out.json["violations"].push_back({{"code", v.code}, {"message", v.message}});
    out.text += v.code + ": " + v.message + "\n";
  }
  if (violations.empty()) out.text = "valid\n";
  out.status = violations.empty() ? 0 : 1;
  return out;
}

void emit(const Options& o, const std::string& text) {
  if (o.out_file.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out_file);
  if (!f) throw DomainError("io", "cannot write '" + o.out_file + "'");
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ideal lattices of Leavitt path algebras"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_option("--graph", o.graph_file, "graph description file");
  app.add_option("--ring", o.ring, "Z, Z/n, Fp or Q")->capture_default_str();
  app.add_flag("--json", o.json, "machine-readable output");
  app.add_flag("--dot", o.dot, "Hasse diagram in DOT (pairs, enumerate)");
  app.add_option("--out", o.out_file, "write output to a file");

  using Runner = Output (*)(const Options&);
  std::vector<std::pair<CLI::App*, Runner>> commands;
  auto add = [&](const char* name, const char* help, Runner run) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, run);
    return sub;
  };
  add("closure", "hereditary and hereditary saturated closure", run_closure)->add_option("--set", o.set)->required();
  app.get_subcommand("closure")->add_option("--breaking-set", o.breaking_set, "S for the S-saturation");
  add("saturate", "saturation of a function table", run_saturate)->add_option("--table", o.table)->required();
  add("pairs", "admissible pairs", run_pairs);
  add("cycles", "cycles and exclusive cycles", run_cycles);
  auto* op = add("lattice-op", "meet, join, product or leq of two pairs", run_lattice_op);
  op->add_option("op", o.op)->required()->check(CLI::IsMember({"meet", "join", "product", "leq"}));
  op->add_option("--left", o.left)->required();
  op->add_option("--right", o.right)->required();
  add("graded", "whether a pair is graded", run_graded)->add_option("--table", o.table)->required();
  add("largest-graded", "largest graded pair below", run_largest_graded)->add_option("--table", o.table)->required();
  add("prime", "necessary conditions for primeness", run_prime)->add_option("--table", o.table)->required();
  add("generators", "a generating set", run_generators)->add_option("--table", o.table)->required();
  add("from-generators", "pair of the ideal generated by --gen", run_from_generators)->add_option("--gen", o.gens);
  add("enumerate", "every ideal (finite rings, no exclusive cycles)", run_enumerate);
  add("crosscheck", "compare with the finite algebra", run_crosscheck);
  add("validate", "check a table", run_validate)->add_option("--table", o.table)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error[usage]: " << e.what() << "\n";
    return 2;
  }

  if (o.graph_file.empty()) {
    std::cerr << "error[usage]: --graph is required\n";
    return 2;
  }

  int status = 0;
  try {
    RingSpec::parse(o.ring);
    for (const auto& [sub, run] : commands) {
      if (!sub->parsed()) continue;
      if (o.dot && sub->get_name() != "pairs" && sub->get_name() != "enumerate") {
        throw DomainError("unsupported-flag", "--dot is available for pairs and enumerate");
      }
      Output out = run(o);
      if (o.dot) {
        emit(o, out.dot);
      } else if (o.json) {
        emit(o, out.json.dump(2) + "\n");
      } else {
        emit(o, out.text);
      }
      status = out.status;
    }
  } catch (const ParseError& e) {
    std::cerr << "error[parse]: " << e.line() << ":" << e.column() << ": " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error[" << e.code() << "]: " << e.what() << "\n";
    return 1;
  }
  return status;
}
