#include "ordsemi/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ordsemi {

json to_json(const ChainPair& pair) {
  return json{{"size", pair.size()}, {"range", pair.range()}};
}

json to_json(const Transformation& alpha) {
  return json{{"pair", to_json(alpha.pair())}, {"image", alpha.image()}};
}

json to_json(const CayleyTable& table) {
  json rows = json::array();
  for (int i = 0; i < table.order; ++i) {
    json row = json::array();
    for (int j = 0; j < table.order; ++j) row.push_back(table.at(i, j));
    rows.push_back(std::move(row));
  }
  return json{{"order", table.order}, {"table", std::move(rows)}};
}

json to_json(const SemigroupIso& iso) { return json{{"mapping", iso.mapping}}; }

json to_json(const Decision& decision) {
  json witness;
  if (decision.verdict == Verdict::isomorphic) {
    if (decision.trivial_witness) {
      witness = json{{"type", "trivial"}};
    } else if (decision.theta) {
      witness = json{{"type", "theta"},
                     {"map", decision.theta->map},
                     {"orientation", decision.theta->orientation ==
                                             Orientation::order
                                         ? "order"
                                         : "anti"}};
    }
  }
  return json{{"verdict", to_string(decision.verdict)},
              {"rule", to_string(decision.rule)},
              {"mirror_clause_used", decision.mirror_clause_used},
              {"witness", std::move(witness)}};
}

json to_json(const KClassPartition& partition) {
  json classes = json::array();
  const bool tagged = partition.pair.range().size() == 2;
  for (const KClass& c : partition.classes) {
    json entry{{"members", c.members},
               {"restriction", c.restriction},
               {"range", c.range_set},
               {"size", c.members.size()}};
    if (tagged) {
      entry["shape"] = to_string(classify_lambda_class(partition.pair, c));
    }
    classes.push_back(std::move(entry));
  }
  return json{{"pair", to_json(partition.pair)},
              {"classes", std::move(classes)}};
}

json to_json(const MultTableReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back(json{{"alpha", v.alpha}, {"beta", v.beta}, {"detail", v.detail}});
  }
  return json{{"pairs_checked", report.pairs_checked},
              {"clean", report.clean()},
              {"violations", std::move(violations)}};
}

json to_json(const CrossValidateReport& report) {
  json family = json::array();
  for (const ChainPair& pair : report.family) family.push_back(to_json(pair));
  json pairs = json::array();
  for (const PairOutcome& out : report.outcomes) {
    const char* oracle = out.oracle == OracleOutcome::found
                             ? "found"
                             : out.oracle == OracleOutcome::refused
                                   ? "refused"
                                   : "budget_exceeded";
    pairs.push_back(json{{"a", out.a_index},
                         {"b", out.b_index},
                         {"decided", to_string(out.decided)},
                         {"rule", to_string(out.rule)},
                         {"mirror_clause_used", out.mirror_clause_used},
                         {"oracle", oracle},
                         {"mapping", out.witness ? json(out.witness->mapping)
                                                 : json(nullptr)},
                         {"agree", out.agree},
                         {"witness_verified", out.witness_verified},
                         {"preservation_clean", out.preservation_clean},
                         {"blocks_match", out.blocks_match},
                         {"note", out.note}});
  }
  return json{{"family", std::move(family)},
              {"pairs", std::move(pairs)},
              {"mismatches", report.mismatches},
              {"skipped", report.skipped},
              {"consistent", report.consistent()},
              {"complete", report.complete()}};
}

ChainPair chain_pair_from_json(const json& j) {
  if (!j.is_object() || !j.contains("size") || !j.contains("range")) {
    throw std::invalid_argument(
        "instance JSON must be an object with \"size\" and \"range\"");
  }
  return ChainPair(j.at("size").get<int>(), j.at("range").get<std::vector<int>>());
}

Transformation transformation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("pair") || !j.contains("image")) {
    throw std::invalid_argument(
        "transformation JSON must be an object with \"pair\" and \"image\"");
  }
  return Transformation(chain_pair_from_json(j.at("pair")),
                        j.at("image").get<std::vector<int>>());
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer: '" + token + "'");
    }
    if (used != token.size()) {
      throw std::invalid_argument("not an integer: '" + token + "'");
    }
    values.push_back(value);
  }
  if (values.empty()) {
    throw std::invalid_argument("empty integer list");
  }
  return values;
}

namespace {

ChainPair parse_inline_instance(const std::string& text) {
  int size = -1;
  std::vector<int> range;
  bool have_range = false;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("expected key=value, got '" + token + "'");
    }
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    if (key == "n" || key == "size") {
      try {
        size = std::stoi(value);
      } catch (const std::exception&) {
        throw std::invalid_argument("not a valid size: '" + value + "'");
      }
    } else if (key == "range") {
      range = parse_int_list(value);
      have_range = true;
    } else {
      throw std::invalid_argument("unknown key '" + key + "' in instance spec");
    }
  }
  if (size < 0 || !have_range) {
    throw std::invalid_argument(
        "instance spec needs both n=<size> and range=<i0,i1,...>");
  }
  return ChainPair(size, std::move(range));
}

}  // namespace

ChainPair parse_instance(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    throw std::invalid_argument("empty instance spec");
  }
  if (text[first] == '{') {
    return chain_pair_from_json(json::parse(text));
  }
  if (std::ifstream file{text}; file.good()) {
    json j;
    file >> j;
    return chain_pair_from_json(j);
  }
  return parse_inline_instance(text);
}

std::string render_two_row(const Transformation& alpha) {
  const int n = alpha.pair().size();
  std::vector<std::string> top(static_cast<std::size_t>(n));
  std::vector<std::string> bottom(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    top[static_cast<std::size_t>(x)] = std::to_string(x);
    bottom[static_cast<std::size_t>(x)] = std::to_string(alpha.apply(x));
  }
  std::ostringstream row1, row2;
  row1 << "(";
  row2 << "(";
  for (int x = 0; x < n; ++x) {
    const std::size_t width = std::max(top[static_cast<std::size_t>(x)].size(),
                                       bottom[static_cast<std::size_t>(x)].size());
    row1 << ' ' << std::string(width - top[static_cast<std::size_t>(x)].size(), ' ')
         << top[static_cast<std::size_t>(x)];
    row2 << ' '
         << std::string(width - bottom[static_cast<std::size_t>(x)].size(), ' ')
         << bottom[static_cast<std::size_t>(x)];
  }
  row1 << " )";
  row2 << " )";
  return row1.str() + "\n" + row2.str();
}

std::string render_adjusted(const AdjustedChain& chain) {
  std::ostringstream os;
  for (std::size_t i = 0; i < chain.nodes.size(); ++i) {
    if (i) os << ' ';
    if (const int* element = std::get_if<int>(&chain.nodes[i])) {
      os << *element;
    } else {
      const GapBlock& block = std::get<GapBlock>(chain.nodes[i]);
      os << "[{";
      for (int x = block.lo; x <= block.hi; ++x) {
        if (x > block.lo) os << ',';
        os << x;
      }
      os << "}]";
    }
  }
  return os.str();
}

std::string to_dot(const PartialGraph& graph) {
  std::ostringstream os;
  os << "digraph partial_graph {\n";
  os << "  rankdir=TB;\n";
  os << "  node [shape=circle];\n";
  os << "  { rank=min;";
  for (std::size_t i = 0; i < graph.upper.size(); ++i) {
    os << " u" << i << " [label=\"" << graph.upper[i] << "\"];";
  }
  os << " }\n";
  os << "  { rank=max;";
  for (std::size_t i = 0; i < graph.lower.size(); ++i) {
    os << " l" << i << " [label=\"" << graph.lower[i] << "\"];";
  }
  os << " }\n";
  if (graph.upper.size() > 1) {
    os << "  ";
    for (std::size_t i = 0; i < graph.upper.size(); ++i) {
      if (i) os << " -> ";
      os << "u" << i;
    }
    os << " [style=invis];\n";
  }
  if (graph.lower.size() > 1) {
    os << "  ";
    for (std::size_t i = 0; i < graph.lower.size(); ++i) {
      if (i) os << " -> ";
      os << "l" << i;
    }
    os << " [style=invis];\n";
  }
  const auto targets = graph.edge_targets();
  for (std::size_t i = 0; i < targets.size(); ++i) {
    os << "  u" << i << " -> l" << targets[i] << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace ordsemi
