#include "rook/poset.hpp"

#include "rook/bruhat.hpp"
#include "rook/length.hpp"
#include "rook/orbit.hpp"
#include "rook/parallel.hpp"

#include "json.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace rook {

namespace {

using json = nlohmann::json;

std::vector<HasseNode> make_nodes(const std::vector<OneLine>& elements) {
  std::vector<HasseNode> nodes;
  nodes.reserve(elements.size());
  for (std::size_t id = 0; id < elements.size(); ++id) {
    nodes.push_back({static_cast<int>(id), elements[id], length(elements[id])});
  }
  return nodes;
}

const char* mode_name(VerifyMode m) { return m == VerifyMode::exhaustive ? "exhaustive" : "sampled"; }

// Cover check for one element against a precomputed strict up-set.
std::vector<OneLine> minimal_elements(const std::vector<OneLine>& above) {
  std::vector<OneLine> out;
  for (const OneLine& y : above) {
    const bool blocked = std::any_of(above.begin(), above.end(), [&](const OneLine& z) {
      return z != y && deodhar_leq(z, y);
    });
    if (!blocked) out.push_back(y);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<int> HasseDiagram::find(const OneLine& x) const {
  const auto it = std::lower_bound(nodes.begin(), nodes.end(), x,
                                   [](const HasseNode& node, const OneLine& v) { return node.element < v; });
  if (it == nodes.end() || it->element != x) return std::nullopt;
  return it->id;
}

HasseDiagram build_hasse(int n) {
  if (n < 1 || n > 5) {
    throw std::invalid_argument("build_hasse supports 1 <= n <= 5, got " + std::to_string(n));
  }
  HasseDiagram h;
  h.n = n;
  h.nodes = make_nodes(enumerate(n));

  std::vector<std::vector<std::pair<int, int>>> per_node(h.nodes.size());
  detail::parallel_blocks(h.nodes.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t id = begin; id < end; ++id) {
      for (const OneLine& y : covers_of(h.nodes[id].element)) {
        per_node[id].emplace_back(static_cast<int>(id), *h.find(y));
      }
    }
  });
  for (auto& edges : per_node) h.edges.insert(h.edges.end(), edges.begin(), edges.end());
  std::sort(h.edges.begin(), h.edges.end());
  return h;
}

std::vector<std::size_t> rank_sizes(const HasseDiagram& h) {
  std::vector<std::size_t> sizes(static_cast<std::size_t>(h.n) * h.n + 1, 0);
  for (const HasseNode& node : h.nodes) ++sizes.at(node.length);
  return sizes;
}

HasseDiagram interval(const HasseDiagram& h, const OneLine& lo, const OneLine& hi) {
  if (!h.find(lo) || !h.find(hi)) throw std::invalid_argument("interval: endpoint not in diagram");
  if (!deodhar_leq(lo, hi)) {
    throw std::invalid_argument("interval: " + to_string(lo) + " is not below " + to_string(hi));
  }
  HasseDiagram sub;
  sub.n = h.n;
  std::vector<int> remap(h.nodes.size(), -1);
  for (const HasseNode& node : h.nodes) {
    if (deodhar_leq(lo, node.element) && deodhar_leq(node.element, hi)) {
      remap[node.id] = static_cast<int>(sub.nodes.size());
      sub.nodes.push_back({remap[node.id], node.element, node.length});
    }
  }
  for (const auto& [a, b] : h.edges) {
    if (remap[a] >= 0 && remap[b] >= 0) sub.edges.emplace_back(remap[a], remap[b]);
  }
  return sub;
}

std::string export_dot(const HasseDiagram& h) {
  std::ostringstream out;
  out << "digraph R" << h.n << " {\n";
  out << "  rankdir=BT;\n";
  for (const HasseNode& node : h.nodes) {
    out << "  n" << node.id << " [label=\"(" << to_string(node.element) << ") l=" << node.length
        << "\"];\n";
  }
  for (const auto& [lo, hi] : h.edges) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

std::string export_json(const HasseDiagram& h) {
  json nodes = json::array();
  for (const HasseNode& node : h.nodes) {
    nodes.push_back({{"id", node.id}, {"oneline", to_string(node.element)}, {"length", node.length}});
  }
  json edges = json::array();
  for (const auto& [lo, hi] : h.edges) edges.push_back({lo, hi});
  json doc;
  doc["n"] = h.n;
  doc["nodes"] = std::move(nodes);
  doc["edges"] = std::move(edges);
  return doc.dump() + "\n";
}

HasseDiagram parse_hasse_json(std::string_view text) {
  HasseDiagram h;
  try {
    const json doc = json::parse(text);
    h.n = doc.at("n").get<int>();
    for (const json& node : doc.at("nodes")) {
      h.nodes.push_back({node.at("id").get<int>(),
                         parse_one_line(node.at("oneline").get<std::string>()),
                         node.at("length").get<int>()});
    }
    for (const json& edge : doc.at("edges")) {
      h.edges.emplace_back(edge.at(0).get<int>(), edge.at(1).get<int>());
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed diagram json: ") + e.what());
  }
  for (std::size_t i = 0; i < h.nodes.size(); ++i) {
    if (h.nodes[i].id != static_cast<int>(i) || h.nodes[i].element.size() != h.n) {
      throw std::invalid_argument("diagram json: node ids must be dense and sizes must match n");
    }
  }
  for (const auto& [lo, hi] : h.edges) {
    const int count = static_cast<int>(h.nodes.size());
    if (lo < 0 || hi < 0 || lo >= count || hi >= count) {
      throw std::invalid_argument("diagram json: edge references unknown node");
    }
  }
  return h;
}

std::vector<OneLine> brute_force_covers(const OneLine& x, const std::vector<OneLine>& universe) {
  std::vector<OneLine> above;
  for (const OneLine& y : universe) {
    if (y != x && deodhar_leq(x, y)) above.push_back(y);
  }
  return minimal_elements(above);
}

VerificationReport verify(int n, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const bool exhaustive = options.mode == VerifyMode::exhaustive;
  if (n < 1 || (exhaustive && n > 4) || (!exhaustive && n > 6)) {
    throw std::invalid_argument(std::string("verify: n = ") + std::to_string(n) +
                                " not supported in " + mode_name(options.mode) + " mode");
  }

  VerificationReport report;
  report.n = n;
  report.mode = options.mode;
  report.seed = options.seed;

  const std::vector<OneLine> elements = enumerate(n);
  const std::size_t count = elements.size();
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> pick(0, count - 1);

  // Pair sample: all ordered pairs, or a seeded uniform draw.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (exhaustive) {
    pairs.reserve(count * count);
    for (std::size_t a = 0; a < count; ++a) {
      for (std::size_t b = 0; b < count; ++b) pairs.emplace_back(a, b);
    }
  } else {
    pairs.reserve(options.sample_count);
    for (std::size_t s = 0; s < options.sample_count; ++s) pairs.emplace_back(pick(rng), pick(rng));
  }

  std::vector<std::optional<PairMismatch>> pair_results(pairs.size());
  detail::parallel_blocks(pairs.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t p = begin; p < end; ++p) {
      const OneLine& x = elements[pairs[p].first];
      const OneLine& y = elements[pairs[p].second];
      const bool d = deodhar_leq(x, y);
      const bool g = deodhar_leq_gamma(x, y);
      const bool r = ppr_leq(x, y);
      if (d != g || d != r) pair_results[p] = PairMismatch{x, y, d, g, r};
    }
  });
  for (auto& m : pair_results) {
    if (m) report.mismatches.push_back(std::move(*m));
  }
  report.pairs_checked = pairs.size();

  // Cover sample: every element, or a seeded draw of distinct elements.
  std::vector<std::size_t> cover_ids;
  if (exhaustive || options.cover_sample >= count) {
    for (std::size_t id = 0; id < count; ++id) cover_ids.push_back(id);
  } else {
    std::vector<std::size_t> all(count);
    for (std::size_t id = 0; id < count; ++id) all[id] = id;
    std::shuffle(all.begin(), all.end(), rng);
    cover_ids.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(options.cover_sample));
    std::sort(cover_ids.begin(), cover_ids.end());
  }
  std::vector<std::optional<CoverMismatch>> cover_results(cover_ids.size());
  detail::parallel_blocks(cover_ids.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t c = begin; c < end; ++c) {
      const OneLine& x = elements[cover_ids[c]];
      std::vector<OneLine> lemma = covers_of(x);
      std::vector<OneLine> brute = brute_force_covers(x, elements);
      if (lemma != brute) cover_results[c] = CoverMismatch{x, std::move(lemma), std::move(brute)};
    }
  });
  for (auto& m : cover_results) {
    if (m) report.cover_mismatches.push_back(std::move(*m));
  }
  report.covers_checked = cover_ids.size();

  std::vector<std::optional<OracleMismatch>> oracle_results(count);
  detail::parallel_blocks(count, [&](std::size_t begin, std::size_t end) {
    for (std::size_t id = begin; id < end; ++id) {
      const int formula = length(elements[id]);
      const int oracle = oracle_length(elements[id]);
      if (formula != oracle) oracle_results[id] = OracleMismatch{elements[id], formula, oracle};
    }
  });
  for (auto& m : oracle_results) {
    if (m) report.oracle_mismatches.push_back(std::move(*m));
  }
  report.oracle_checked = count;

  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

std::string format_report(const VerificationReport& r) {
  std::ostringstream out;
  out << "n: " << r.n << "\n"
      << "mode: " << mode_name(r.mode) << "\n";
  if (r.mode == VerifyMode::sampled) out << "seed: " << r.seed << "\n";
  out << "pairs_checked: " << r.pairs_checked << "\n"
      << "order_mismatches: " << r.mismatches.size() << "\n"
      << "covers_checked: " << r.covers_checked << "\n"
      << "cover_mismatches: " << r.cover_mismatches.size() << "\n"
      << "oracle_checked: " << r.oracle_checked << "\n"
      << "oracle_mismatches: " << r.oracle_mismatches.size() << "\n";
  for (const PairMismatch& m : r.mismatches) {
    out << "  order " << m.x << " vs " << m.y << ": deodhar=" << m.deodhar
        << " gamma=" << m.gamma << " ppr=" << m.ppr << "\n";
  }
  for (const CoverMismatch& m : r.cover_mismatches) {
    out << "  covers of " << m.x << ": lemma=" << m.lemma_covers.size()
        << " brute=" << m.brute_covers.size() << "\n";
  }
  for (const OracleMismatch& m : r.oracle_mismatches) {
    out << "  length of " << m.x << ": formula=" << m.formula << " oracle=" << m.oracle << "\n";
  }
  out << "result: " << (r.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string report_json(const VerificationReport& r) {
  auto elements = [](const std::vector<OneLine>& v) {
    json a = json::array();
    for (const OneLine& x : v) a.push_back(to_string(x));
    return a;
  };
  json doc;
  doc["n"] = r.n;
  doc["mode"] = mode_name(r.mode);
  if (r.mode == VerifyMode::sampled) doc["seed"] = r.seed;
  doc["pairs_checked"] = r.pairs_checked;
  doc["covers_checked"] = r.covers_checked;
  doc["oracle_checked"] = r.oracle_checked;
  doc["mismatches"] = json::array();
  for (const PairMismatch& m : r.mismatches) {
    doc["mismatches"].push_back({{"x", to_string(m.x)},
                                 {"y", to_string(m.y)},
                                 {"deodhar", m.deodhar},
                                 {"gamma", m.gamma},
                                 {"ppr", m.ppr}});
  }
  doc["cover_mismatches"] = json::array();
  for (const CoverMismatch& m : r.cover_mismatches) {
    doc["cover_mismatches"].push_back(
        {{"x", to_string(m.x)}, {"lemma", elements(m.lemma_covers)}, {"brute", elements(m.brute_covers)}});
  }
  doc["oracle_mismatches"] = json::array();
  for (const OracleMismatch& m : r.oracle_mismatches) {
    doc["oracle_mismatches"].push_back(
        {{"x", to_string(m.x)}, {"formula", m.formula}, {"oracle", m.oracle}});
  }
  doc["passed"] = r.passed();
  return doc.dump(2) + "\n";
}

}  // namespace rook
