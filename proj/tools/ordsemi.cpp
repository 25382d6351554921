// Command-line surface for analyzing semigroups of order-preserving
// transformations with restricted range over finite chains.
//
// Exit codes (stable contract for scripting):
//   0  success; for decide/oracle: the instances are isomorphic;
//      for verify: criterion and oracle agree everywhere
//   1  semantic mismatch: decide/oracle answered "not isomorphic", or
//      verify found a disagreement / transport violation
//   2  resource cap: enumeration cap or oracle search budget exceeded
//   3  invalid input

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ordsemi/cayley.hpp"
#include "ordsemi/decision.hpp"
#include "ordsemi/errors.hpp"
#include "ordsemi/induced.hpp"
#include "ordsemi/io.hpp"
#include "ordsemi/iso.hpp"
#include "ordsemi/structures.hpp"

namespace {

using namespace ordsemi;

std::uint64_t default_cap() {
  if (const char* env = std::getenv("ORDSEMI_CAP")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("ORDSEMI_CAP is not a valid integer: " +
                                  std::string(env));
    }
  }
  return kDefaultEnumerationCap;
}

ChainPair instance_from_tokens(const std::vector<std::string>& tokens) {
  if (tokens.empty()) {
    throw std::invalid_argument(
        "missing instance: pass n=<size> range=<i0,i1,...>, a JSON object, "
        "or a JSON file path");
  }
  std::string joined;
  for (const auto& token : tokens) {
    if (!joined.empty()) joined += ' ';
    joined += token;
  }
  return parse_instance(joined);
}

int cmd_enumerate(const std::vector<std::string>& tokens, std::uint64_t cap,
                  bool count_only, bool as_json, const std::string& table_path) {
  const ChainPair pair = instance_from_tokens(tokens);
  if (!table_path.empty()) {
    std::ofstream out(table_path);
    if (!out.good()) {
      throw std::invalid_argument("cannot write " + table_path);
    }
    out << to_json(build_cayley(pair, cap)).dump() << "\n";
  }
  if (count_only) {
    const std::uint64_t count = count_top(pair);
    if (as_json) {
      std::cout << json{{"pair", to_json(pair)}, {"count", count}}.dump() << "\n";
    } else {
      std::cout << count << "\n";
    }
    return 0;
  }
  const auto elements = enumerate_top(pair, cap);
  if (as_json) {
    json images = json::array();
    for (const auto& alpha : elements) images.push_back(alpha.image());
    std::cout << json{{"pair", to_json(pair)},
                      {"count", elements.size()},
                      {"images", std::move(images)}}
                     .dump()
              << "\n";
  } else {
    for (const auto& alpha : elements) {
      std::cout << render_two_row(alpha) << "\n\n";
    }
    std::cout << "count: " << elements.size() << "\n";
  }
  return 0;
}

int cmd_adjusted(const std::vector<std::string>& tokens, bool as_json) {
  const ChainPair pair = instance_from_tokens(tokens);
  const AdjustedChain chain = adjusted_chain(pair);
  if (as_json) {
    json nodes = json::array();
    for (const auto& node : chain.nodes) {
      if (const int* element = std::get_if<int>(&node)) {
        nodes.push_back(json{{"type", "element"}, {"value", *element}});
      } else {
        const GapBlock& block = std::get<GapBlock>(node);
        nodes.push_back(json{{"type", "block"},
                             {"lo", block.lo},
                             {"hi", block.hi},
                             {"position", block.position}});
      }
    }
    std::cout << json{{"pair", to_json(pair)}, {"nodes", std::move(nodes)}}.dump()
              << "\n";
  } else {
    std::cout << render_adjusted(chain) << "\n";
  }
  return 0;
}

int cmd_graph(const std::vector<std::string>& tokens, const std::string& map_list,
              const std::string& map_json_path, const std::string& dot_path,
              bool as_json) {
  std::optional<Transformation> alpha;
  if (!map_json_path.empty()) {
    std::ifstream in(map_json_path);
    if (!in.good()) {
      throw std::invalid_argument("cannot open " + map_json_path);
    }
    json j;
    in >> j;
    alpha = transformation_from_json(j);
  } else {
    if (map_list.empty()) {
      throw std::invalid_argument(
          "graph needs --map <i0,i1,...> or --map-json <file>");
    }
    const ChainPair pair = instance_from_tokens(tokens);
    alpha = Transformation(pair, parse_int_list(map_list));
  }

  const PartialGraph graph = partial_graph(*alpha);
  if (as_json) {
    json edges = json::array();
    for (const auto& [x, y] : graph.edges) edges.push_back(json::array({x, y}));
    std::cout << json{{"transformation", to_json(*alpha)},
                      {"upper", graph.upper},
                      {"lower", graph.lower},
                      {"edges", std::move(edges)},
                      {"components", graph.components()}}
                     .dump()
              << "\n";
    return 0;
  }
  const std::string dot = to_dot(graph);
  if (dot_path.empty()) {
    std::cout << dot;
  } else {
    std::ofstream out(dot_path);
    if (!out.good()) {
      throw std::invalid_argument("cannot write " + dot_path);
    }
    out << dot;
    std::cout << "wrote " << dot_path << " (" << graph.components()
              << " components)\n";
  }
  return 0;
}

int cmd_kclasses(const std::vector<std::string>& tokens, std::uint64_t cap,
                 bool as_json) {
  const ChainPair pair = instance_from_tokens(tokens);
  const KClassPartition partition = k_classes(pair, cap);
  const bool two = pair.range().size() == 2;

  json out = to_json(partition);
  bool sizes_match = true;
  if (two) {
    const auto predicted = lambda_class_sizes(pair);
    std::array<int, 5> observed{0, 0, 0, 0, 0};
    for (const KClass& c : partition.classes) {
      observed[static_cast<std::size_t>(classify_lambda_class(pair, c))] +=
          static_cast<int>(c.members.size());
    }
    sizes_match = observed == predicted;
    out["predicted_shape_sizes"] = predicted;
    out["observed_shape_sizes"] = observed;
    out["sizes_match"] = sizes_match;
  }

  if (as_json) {
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "classes: " << partition.classes.size() << "\n";
    for (std::size_t i = 0; i < partition.classes.size(); ++i) {
      const KClass& c = partition.classes[i];
      std::cout << "  class " << i << ": size " << c.members.size();
      if (two) {
        std::cout << " shape " << to_string(classify_lambda_class(pair, c));
      }
      std::cout << " restriction [";
      for (std::size_t k = 0; k < c.restriction.size(); ++k) {
        if (k) std::cout << ',';
        std::cout << c.restriction[k];
      }
      std::cout << "] range {";
      for (std::size_t k = 0; k < c.range_set.size(); ++k) {
        if (k) std::cout << ',';
        std::cout << c.range_set[k];
      }
      std::cout << "}\n";
    }
    if (two) {
      const auto predicted = lambda_class_sizes(pair);
      std::cout << "shape sizes from gap triple: ";
      for (int s : predicted) std::cout << s << ' ';
      std::cout << (sizes_match ? "(matches partition)" : "(MISMATCH)") << "\n";
    }
  }
  return sizes_match ? 0 : 1;
}

void print_theta(const RangeBijection& theta) {
  std::cout << "induced range map:";
  for (std::size_t i = 0; i < theta.domain.size(); ++i) {
    std::cout << ' ' << theta.domain[i] << "->" << theta.image[i];
  }
  std::cout << (theta.orientation == Orientation::order ? " (order)" : " (anti)")
            << "\n";
}

int cmd_decide(const std::string& spec_a, const std::string& spec_b,
               bool as_json) {
  const ChainPair a = parse_instance(spec_a);
  const ChainPair b = parse_instance(spec_b);
  const Decision decision = decide_iso(a, b);
  if (as_json) {
    std::cout << to_json(decision).dump() << "\n";
  } else {
    std::cout << to_string(decision.verdict) << " (rule "
              << to_string(decision.rule)
              << (decision.mirror_clause_used ? ", mirror clause used" : "")
              << ")\n";
    if (decision.theta) {
      std::cout << "witness theta: [";
      for (std::size_t i = 0; i < decision.theta->map.size(); ++i) {
        if (i) std::cout << ',';
        std::cout << decision.theta->map[i];
      }
      std::cout << "] ("
                << (decision.theta->orientation == Orientation::order ? "order"
                                                                      : "anti")
                << ")\n";
    } else if (decision.trivial_witness) {
      std::cout << "witness: both semigroups are trivial\n";
    }
  }
  return decision.verdict == Verdict::isomorphic ? 0 : 1;
}

int cmd_oracle(const std::string& spec_a, const std::string& spec_b,
               std::uint64_t cap, std::uint64_t budget, bool as_json) {
  const ChainPair a = parse_instance(spec_a);
  const ChainPair b = parse_instance(spec_b);
  const CayleyTable ta = build_cayley(a, cap);
  const CayleyTable tb = build_cayley(b, cap);
  IsoSearchOptions options;
  options.node_budget = budget;
  const auto iso = find_iso(ta, tb, options);
  if (as_json) {
    json out;
    out["mapping"] = iso ? json(iso->mapping) : json(nullptr);
    std::cout << out.dump() << "\n";
  } else if (iso) {
    std::cout << "isomorphism found: [";
    for (std::size_t i = 0; i < iso->mapping.size(); ++i) {
      if (i) std::cout << ',';
      std::cout << iso->mapping[i];
    }
    std::cout << "]\n";
    print_theta(extract_theta(ta, tb, *iso));
  } else {
    std::cout << "not isomorphic (exhaustive refusal)\n";
  }
  return iso ? 0 : 1;
}

int cmd_verify(int max_size, const std::vector<std::string>& extra_instances,
               std::uint64_t cap, std::uint64_t budget, bool as_json) {
  std::vector<ChainPair> family;
  if (max_size > 0) {
    family = instance_family(max_size, 2);
  }
  for (const std::string& spec : extra_instances) {
    family.push_back(parse_instance(spec));
  }
  if (family.empty()) {
    throw std::invalid_argument(
        "verify needs --max-size and/or --instance entries");
  }

  CrossValidateOptions options;
  options.cap = cap;
  options.search.node_budget = budget;
  const CrossValidateReport report = cross_validate(family, options);

  if (as_json) {
    std::cout << to_json(report).dump() << "\n";
  } else {
    std::cout << "instances: " << report.family.size()
              << ", ordered pairs: " << report.outcomes.size()
              << ", mismatches: " << report.mismatches
              << ", skipped: " << report.skipped << "\n";
    for (const PairOutcome& out : report.outcomes) {
      if (out.agree && out.witness_verified && out.preservation_clean &&
          out.blocks_match) {
        continue;
      }
      std::cout << "  pair (" << out.a_index << ", " << out.b_index
                << "): " << out.note << "\n";
    }
    std::cout << (report.consistent() && report.complete()
                      ? "consistent\n"
                  : report.complete() ? "INCONSISTENT\n"
                                      : "incomplete\n");
  }
  if (report.skipped > 0) return 2;
  return report.consistent() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "ordsemi: order-preserving transformation semigroups with restricted "
      "range over finite chains"};
  app.require_subcommand(1);

  std::uint64_t cap = 0;
  std::uint64_t budget = 50'000'000;
  bool as_json = false;
  bool count_only = false;
  std::vector<std::string> instance_tokens;
  std::string spec_a, spec_b, map_list, map_json_path, dot_path, table_path;
  std::vector<std::string> extra_instances;
  int max_size = 0;

  try {
    cap = default_cap();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }

  auto add_instance_positional = [&instance_tokens](CLI::App* cmd) {
    cmd->add_option("instance", instance_tokens,
                    "instance: n=<size> range=<i0,i1,...>, a JSON object, or "
                    "a JSON file path");
  };

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "list T_OP(X, X') in canonical order");
  add_instance_positional(enumerate);
  enumerate->add_flag("--count-only", count_only, "print only the count");
  enumerate->add_flag("--json", as_json, "machine-readable output");
  enumerate->add_option("--cap", cap, "enumeration cap (env ORDSEMI_CAP)");
  enumerate->add_option("--table", table_path,
                        "also write the Cayley table JSON here");

  CLI::App* adjusted =
      app.add_subcommand("adjusted", "render the adjusted chain");
  add_instance_positional(adjusted);
  adjusted->add_flag("--json", as_json, "machine-readable output");

  CLI::App* graph =
      app.add_subcommand("graph", "partial graph of a transformation as DOT");
  add_instance_positional(graph);
  graph->add_option("--map", map_list, "image list, e.g. 0,4,0,8,4,4,4,2,4");
  graph->add_option("--map-json", map_json_path,
                    "JSON file with {\"pair\": ..., \"image\": [...]}");
  graph->add_option("--dot", dot_path, "write DOT here instead of stdout");
  graph->add_flag("--json", as_json, "graph summary as JSON instead of DOT");

  CLI::App* kclasses = app.add_subcommand(
      "kclasses", "K-class partition (shape-tagged when |X'| = 2)");
  add_instance_positional(kclasses);
  kclasses->add_flag("--json", as_json, "machine-readable output");
  kclasses->add_option("--cap", cap, "enumeration cap");

  CLI::App* decide = app.add_subcommand(
      "decide", "criterion-based isomorphism decision (exit 0 iso, 1 not)");
  decide->add_option("--a", spec_a, "first instance")->required();
  decide->add_option("--b", spec_b, "second instance")->required();
  decide->add_flag("--json", as_json, "machine-readable output");

  CLI::App* oracle = app.add_subcommand(
      "oracle",
      "exhaustive isomorphism search on the Cayley tables (exit 0 iso, 1 not)");
  oracle->add_option("--a", spec_a, "first instance")->required();
  oracle->add_option("--b", spec_b, "second instance")->required();
  oracle->add_flag("--json", as_json, "machine-readable output");
  oracle->add_option("--cap", cap, "enumeration cap");
  oracle->add_option("--budget", budget, "search node budget");

  CLI::App* verify = app.add_subcommand(
      "verify", "cross-validate the decision criterion against the oracle");
  verify->add_option("--max-size", max_size,
                     "all instances with chain size <= N and |range| >= 2");
  verify->add_option("--instance", extra_instances,
                     "explicit instance to include (repeatable)");
  verify->add_flag("--json", as_json, "machine-readable output");
  verify->add_option("--cap", cap, "enumeration cap");
  verify->add_option("--budget", budget, "search node budget per pair");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  try {
    if (app.got_subcommand(enumerate)) {
      return cmd_enumerate(instance_tokens, cap, count_only, as_json,
                           table_path);
    }
    if (app.got_subcommand(adjusted)) {
      return cmd_adjusted(instance_tokens, as_json);
    }
    if (app.got_subcommand(graph)) {
      return cmd_graph(instance_tokens, map_list, map_json_path, dot_path,
                       as_json);
    }
    if (app.got_subcommand(kclasses)) {
      return cmd_kclasses(instance_tokens, cap, as_json);
    }
    if (app.got_subcommand(decide)) {
      return cmd_decide(spec_a, spec_b, as_json);
    }
    if (app.got_subcommand(oracle)) {
      return cmd_oracle(spec_a, spec_b, cap, budget, as_json);
    }
    if (app.got_subcommand(verify)) {
      return cmd_verify(max_size, extra_instances, cap, budget, as_json);
    }
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: invalid JSON: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
