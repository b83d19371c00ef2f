#include "grove/serialize.hpp"

#include <fstream>
#include <stdexcept>

namespace grove {

using nlohmann::json;

namespace {

const char* kind_name(BivariateKind k) {
  switch (k) {
    case BivariateKind::LL: return "ll";
    case BivariateKind::LG: return "lg";
    case BivariateKind::GL: return "gl";
    case BivariateKind::GG: return "gg";
    case BivariateKind::Checker: return "checker";
    case BivariateKind::Single1: return "single1";
    case BivariateKind::Single2: return "single2";
  }
  throw std::logic_error("unknown bivariate kind");
}

BivariateKind kind_from_name(const std::string& s) {
  if (s == "ll") return BivariateKind::LL;
  if (s == "lg") return BivariateKind::LG;
  if (s == "gl") return BivariateKind::GL;
  if (s == "gg") return BivariateKind::GG;
  if (s == "checker") return BivariateKind::Checker;
  if (s == "single1") return BivariateKind::Single1;
  if (s == "single2") return BivariateKind::Single2;
  throw std::invalid_argument("forest file: unknown split variant '" + s + "'");
}

json node_to_json(const TreeNode& node) {
  json out;
  if (node.is_leaf()) {
    out["mean"] = node.leaf_mean;
    out["count"] = node.leaf_count;
    return out;
  }
  if (const auto* a = std::get_if<AxisSplit>(&node.rule)) {
    out["axis"] = {a->feature, a->threshold};
  } else {
    const auto& b = std::get<BivariateSplit>(node.rule);
    out["biv"] = {kind_name(b.kind), b.f1, b.f2, b.c1, b.c2};
  }
  out["left"] = node.left;
  out["right"] = node.right;
  return out;
}

TreeNode node_from_json(const json& doc) {
  TreeNode node;
  if (doc.contains("mean")) {
    node.leaf_mean = doc.at("mean").get<double>();
    node.leaf_count = doc.at("count").get<std::int32_t>();
    return node;
  }
  if (doc.contains("axis")) {
    const auto& a = doc.at("axis");
    node.rule = AxisSplit{a.at(0).get<int>(), a.at(1).get<double>()};
  } else {
    const auto& b = doc.at("biv");
    node.rule = BivariateSplit{kind_from_name(b.at(0).get<std::string>()), b.at(1).get<int>(),
                               b.at(2).get<int>(), b.at(3).get<double>(), b.at(4).get<double>()};
  }
  node.left = doc.at("left").get<std::int32_t>();
  node.right = doc.at("right").get<std::int32_t>();
  return node;
}

}  // namespace

json config_to_json(const GrowerConfig& cfg) {
  json out;
  out["algorithm"] = algorithm_name(cfg);
  std::visit(
      [&out](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        out["min_node_size"] = c.min_node_size;
        out["num_trees"] = c.num_trees;
        out["replace"] = c.replace;
        out["sample_fraction"] = c.sample_fraction;
        if constexpr (std::is_same_v<T, RfConfig>) {
          out["mtry"] = c.mtry;
        } else if constexpr (std::is_same_v<T, EtConfig>) {
          out["mtry"] = c.mtry;
          out["num_random_splits"] = c.num_random_splits;
        } else if constexpr (std::is_same_v<T, IntfConfig>) {
          out["npairs"] = c.npairs;
        } else if constexpr (std::is_same_v<T, RsrfConfig>) {
          out["width"] = c.width;
          out["include_cartcart"] = c.include_cartcart;
          out["mtry_mode"] = c.mtry_mode == MtryMode::kFixed ? "fixed" : "not_fixed";
          out["mtry_random"] = c.mtry_random ? json(*c.mtry_random) : json(nullptr);
          out["mtry_cart_cart"] = c.mtry_cart_cart ? json(*c.mtry_cart_cart) : json(nullptr);
          out["mtry_random_cart"] = c.mtry_random_cart;
          out["depth"] = c.depth;
        }
      },
      cfg);
  return out;
}

GrowerConfig config_from_json(const json& doc) {
  const std::string algo = doc.at("algorithm").get<std::string>();
  auto common = [&doc](auto& c) {
    c.min_node_size = doc.at("min_node_size").get<int>();
    c.num_trees = doc.at("num_trees").get<int>();
    c.replace = doc.at("replace").get<bool>();
    c.sample_fraction = doc.at("sample_fraction").get<double>();
  };
  if (algo == "rf") {
    RfConfig c;
    common(c);
    c.mtry = doc.at("mtry").get<int>();
    return c;
  }
  if (algo == "et") {
    EtConfig c;
    common(c);
    c.mtry = doc.at("mtry").get<int>();
    c.num_random_splits = doc.at("num_random_splits").get<int>();
    return c;
  }
  if (algo == "intf") {
    IntfConfig c;
    common(c);
    c.npairs = doc.at("npairs").get<int>();
    return c;
  }
  if (algo == "rsrf") {
    RsrfConfig c;
    common(c);
    c.width = doc.at("width").get<int>();
    c.include_cartcart = doc.at("include_cartcart").get<bool>();
    c.mtry_mode = doc.at("mtry_mode").get<std::string>() == "fixed" ? MtryMode::kFixed
                                                                    : MtryMode::kNotFixed;
    if (!doc.at("mtry_random").is_null()) c.mtry_random = doc.at("mtry_random").get<int>();
    if (!doc.at("mtry_cart_cart").is_null()) c.mtry_cart_cart = doc.at("mtry_cart_cart").get<int>();
    c.mtry_random_cart = doc.at("mtry_random_cart").get<int>();
    c.depth = doc.at("depth").get<int>();
    return c;
  }
  throw std::invalid_argument("forest file: unknown algorithm '" + algo + "'");
}

json forest_to_json(const Forest& forest) {
  json out;
  out["format"] = kForestFormatName;
  out["version"] = kForestFormatVersion;
  out["seed"] = forest.seed;
  out["num_features"] = forest.num_features;
  out["config"] = config_to_json(forest.config);
  json trees = json::array();
  for (const Tree& tree : forest.trees) {
    json t;
    t["resample"] = tree.resample;
    json nodes = json::array();
    for (const TreeNode& n : tree.nodes) nodes.push_back(node_to_json(n));
    t["nodes"] = std::move(nodes);
    trees.push_back(std::move(t));
  }
  out["trees"] = std::move(trees);
  return out;
}

Forest forest_from_json(const json& doc) {
  if (!doc.is_object() || doc.value("format", std::string()) != kForestFormatName)
    throw std::invalid_argument("not a grove forest file");
  if (doc.at("version").get<int>() != kForestFormatVersion)
    throw std::invalid_argument("forest version mismatch: expected " +
                                std::to_string(kForestFormatVersion) + ", got " +
                                doc.at("version").dump());
  Forest forest;
  forest.seed = doc.at("seed").get<std::uint64_t>();
  forest.num_features = doc.at("num_features").get<int>();
  forest.config = config_from_json(doc.at("config"));
  for (const json& t : doc.at("trees")) {
    Tree tree;
    tree.resample = t.at("resample").get<IndexSet>();
    for (const json& n : t.at("nodes")) tree.nodes.push_back(node_from_json(n));
    forest.trees.push_back(std::move(tree));
  }
  if (forest.trees.empty()) throw std::invalid_argument("forest file: no trees");
  return forest;
}

std::string forest_to_string(const Forest& forest) { return forest_to_json(forest).dump(1); }

void save_forest(const Forest& forest, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << forest_to_string(forest) << '\n';
}

Forest load_forest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  json doc;
  in >> doc;
  return forest_from_json(doc);
}

}  // namespace grove
