#include "grove/grower_rsrf.hpp"

#include <algorithm>

#include "frame.hpp"
#include "grove/grower_rf.hpp"

namespace grove {

std::optional<RandomSplitDraw> draw_random_split(const IndexSet& cell, const Dataset& data,
                                                 RngStream& rng, std::span<const int> allowed) {
  const int j = allowed.empty() ? rng.uniform_int(data.num_features())
                                : allowed[rng.uniform_int(static_cast<int>(allowed.size()))];
  std::vector<double> values;
  values.reserve(cell.size());
  for (std::int32_t r : cell) values.push_back(data.x(r, j));
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.size() < 2) return std::nullopt;
  return RandomSplitDraw{j, values[rng.uniform_int(static_cast<int>(values.size()) - 1)]};
}

namespace {

using detail::NodeFrame;

// Candidate partition pattern: internal nodes carry axis rules, child links
// >= 0 point at pattern nodes, negative links encode end cells as ~cell_index.
struct PatternNode {
  AxisSplit rule;
  int left = -1;
  int right = -1;
};

struct Candidate {
  std::vector<PatternNode> pattern;
  std::vector<std::vector<std::int32_t>> cells;
  std::vector<CellSums> sums;
  double m_stat = 0.0;  // sum of S_l^2 / c_l over end cells
  std::vector<int> cart_subsets_flat;
};

struct RsrfGrower {
  const Dataset& data;
  const RsrfConfig& cfg;
  RngStream& rng;
  RsrfDebug* debug;
  std::vector<TreeNode> nodes;
  std::vector<std::int32_t> scratch;  // filter_sorted workspace, n zeros

  // Node-level pools for fixed mtry mode (reused by every candidate).
  std::vector<int> fixed_random_pool;
  std::vector<std::vector<int>> fixed_cart_pools;  // one per end-cell position

  int num_end_positions() const { return 1 << (cfg.depth - 1); }

  void draw_fixed_pools() {
    fixed_random_pool = detail::draw_coordinate_subset(data.num_features(), *cfg.mtry_random, rng);
    fixed_cart_pools.clear();
    for (int p = 0; p < num_end_positions(); ++p)
      fixed_cart_pools.push_back(
          detail::draw_coordinate_subset(data.num_features(), cfg.mtry_random_cart, rng));
  }

  // Rows of a cell ordered by coordinate j; is_whole cells reuse the node
  // frame's list directly.
  std::vector<std::int32_t> sorted_by(const NodeFrame& frame, bool is_whole,
                                      const std::vector<std::int32_t>& rows, int j) {
    if (is_whole) return frame.by_coord[j];
    return detail::filter_sorted(frame.by_coord[j], rows, scratch);
  }

  std::optional<RandomSplitDraw> draw_in_cell(const NodeFrame& frame, bool is_whole,
                                              const std::vector<std::int32_t>& rows,
                                              std::span<const int> allowed) {
    const int j = allowed.empty() ? rng.uniform_int(data.num_features())
                                  : allowed[rng.uniform_int(static_cast<int>(allowed.size()))];
    const std::vector<std::int32_t> sorted = sorted_by(frame, is_whole, rows, j);
    std::vector<double> values;
    for (std::int32_t r : sorted) {
      const double v = data.x(r, j);
      if (values.empty() || v != values.back()) values.push_back(v);
    }
    if (values.size() < 2) return std::nullopt;
    return RandomSplitDraw{j, values[rng.uniform_int(static_cast<int>(values.size()) - 1)]};
  }

  int add_cell(Candidate& cand, std::vector<std::int32_t> rows) {
    cand.sums.push_back(cell_sums(rows, data));
    cand.cells.push_back(std::move(rows));
    return static_cast<int>(cand.cells.size()) - 1;
  }

  // CART layer: split the end cell over `pool`, or keep it whole when no
  // valid or gain-improving split exists. Returns a pattern link.
  int cart_layer(Candidate& cand, const NodeFrame& frame, bool is_whole,
                 std::vector<std::int32_t> rows, const std::vector<int>& pool) {
    int best_j = -1;
    double best_m = 0.0, best_s = 0.0;
    for (int j : pool) {
      const std::vector<std::int32_t> sorted = sorted_by(frame, is_whole, rows, j);
      auto sweep = detail::best_split_on_sorted(sorted, j, data, 1);
      if (!sweep) continue;
      if (best_j < 0 || sweep->m_stat > best_m) {
        best_j = j;
        best_m = sweep->m_stat;
        best_s = sweep->threshold;
      }
    }
    if (is_whole && rows.empty()) rows = frame.rows();
    const CellSums sums = cell_sums(rows, data);
    const double gain = best_m - sums.sum * sums.sum / static_cast<double>(sums.count);
    if (best_j < 0 || gain <= detail::zero_gain_eps(sums)) return ~add_cell(cand, std::move(rows));

    std::vector<std::int32_t> left, right;
    for (std::int32_t r : rows)
      (data.x(r, best_j) <= best_s ? left : right).push_back(r);
    const int node = static_cast<int>(cand.pattern.size());
    cand.pattern.push_back(PatternNode{AxisSplit{best_j, best_s}, 0, 0});
    const int l = ~add_cell(cand, std::move(left));
    const int r = ~add_cell(cand, std::move(right));
    cand.pattern[node].left = l;
    cand.pattern[node].right = r;
    return node;
  }

  std::vector<int> cart_pool(Candidate& cand, int end_position) {
    std::vector<int> pool;
    if (cfg.mtry_mode == MtryMode::kFixed) {
      pool = fixed_cart_pools[end_position];
    } else {
      pool = detail::draw_coordinate_subset(data.num_features(), cfg.mtry_random_cart, rng);
    }
    cand.cart_subsets_flat.insert(cand.cart_subsets_flat.end(), pool.begin(), pool.end());
    return pool;
  }

  // Random levels 0..depth-2 over the cell, then the CART layer. The whole
  // node is passed with is_whole = true and empty rows. Returns a pattern
  // link, or nullopt when the level-0 random split is impossible.
  std::optional<int> random_levels(Candidate& cand, const NodeFrame& frame, bool is_whole,
                                   std::vector<std::int32_t> rows, int level, int path) {
    if (level == cfg.depth - 1) {
      const std::vector<int> pool = cart_pool(cand, path);
      return cart_layer(cand, frame, is_whole, std::move(rows), pool);
    }

    std::span<const int> allowed;
    if (cfg.mtry_mode == MtryMode::kFixed) allowed = fixed_random_pool;
    const auto draw = draw_in_cell(frame, is_whole, rows, allowed);
    if (!draw) {
      if (level == 0) return std::nullopt;
      return ~add_cell(cand, std::move(rows));  // deeper cells stay whole
    }

    std::vector<std::int32_t> left, right;
    for (std::int32_t r : is_whole ? frame.rows() : rows)
      (data.x(r, draw->feature) <= draw->value ? left : right).push_back(r);

    const int node = static_cast<int>(cand.pattern.size());
    cand.pattern.push_back(PatternNode{AxisSplit{draw->feature, draw->value}, 0, 0});
    const auto l = random_levels(cand, frame, false, std::move(left), level + 1, path * 2);
    const auto r = random_levels(cand, frame, false, std::move(right), level + 1, path * 2 + 1);
    cand.pattern[node].left = *l;
    cand.pattern[node].right = *r;
    return node;
  }

  std::optional<Candidate> make_random_cart(const NodeFrame& frame) {
    Candidate cand;
    auto root = random_levels(cand, frame, true, {}, 0, 0);
    if (!root) return std::nullopt;
    finish(cand);
    return cand;
  }

  std::optional<Candidate> make_cart_cart(const NodeFrame& frame) {
    Candidate cand;
    std::vector<int> first_pool;
    if (cfg.mtry_mode == MtryMode::kFixed) {
      first_pool = fixed_random_pool;
    } else {
      first_pool = detail::draw_coordinate_subset(data.num_features(), *cfg.mtry_cart_cart, rng);
    }
    cand.cart_subsets_flat = first_pool;

    int best_j = -1;
    double best_m = 0.0, best_s = 0.0;
    for (int j : first_pool) {
      auto sweep = detail::best_split_on_sorted(frame.by_coord[j], j, data, 1);
      if (!sweep) continue;
      if (best_j < 0 || sweep->m_stat > best_m) {
        best_j = j;
        best_m = sweep->m_stat;
        best_s = sweep->threshold;
      }
    }
    if (best_j < 0) return std::nullopt;

    std::vector<std::int32_t> left, right;
    for (std::int32_t r : frame.rows())
      (data.x(r, best_j) <= best_s ? left : right).push_back(r);
    cand.pattern.push_back(PatternNode{AxisSplit{best_j, best_s}, 0, 0});

    const auto daughter_pool = [&](int position) {
      if (cfg.mtry_mode == MtryMode::kFixed) return fixed_cart_pools[position];
      return detail::draw_coordinate_subset(data.num_features(), *cfg.mtry_cart_cart, rng);
    };
    const std::vector<int> pool_l = daughter_pool(0);
    cand.cart_subsets_flat.insert(cand.cart_subsets_flat.end(), pool_l.begin(), pool_l.end());
    const int l = cart_layer(cand, frame, false, std::move(left), pool_l);
    const std::vector<int> pool_r = daughter_pool(1);
    cand.cart_subsets_flat.insert(cand.cart_subsets_flat.end(), pool_r.begin(), pool_r.end());
    const int r = cart_layer(cand, frame, false, std::move(right), pool_r);
    cand.pattern[0].left = l;
    cand.pattern[0].right = r;
    finish(cand);
    return cand;
  }

  void finish(Candidate& cand) {
    double m = 0.0;
    for (const CellSums& s : cand.sums) m += s.sum * s.sum / static_cast<double>(s.count);
    cand.m_stat = m;
  }

  std::int32_t install(const Candidate& cand, int link, NodeFrame frame) {
    if (link < 0) return build(std::move(frame));
    const PatternNode& p = cand.pattern[link];
    const std::int32_t id = static_cast<std::int32_t>(nodes.size());
    nodes.emplace_back();
    nodes[id].rule = SplitRule{p.rule};
    auto [left, right] = detail::split_frame(frame, nodes[id].rule, data);
    frame.by_coord.clear();
    const std::int32_t l = install(cand, p.left, std::move(left));
    const std::int32_t r = install(cand, p.right, std::move(right));
    nodes[id].left = l;
    nodes[id].right = r;
    return id;
  }

  std::int32_t build(NodeFrame frame) {
    const CellSums totals = cell_sums(frame.rows(), data);
    if (frame.size() < cfg.min_node_size) return make_leaf(totals);

    if (cfg.mtry_mode == MtryMode::kFixed) draw_fixed_pools();

    std::vector<Candidate> candidates;
    if (cfg.include_cartcart) {
      if (auto c = make_cart_cart(frame)) candidates.push_back(std::move(*c));
    }
    for (int w = 0; w < cfg.width; ++w)
      if (auto c = make_random_cart(frame)) candidates.push_back(std::move(*c));

    if (candidates.empty()) return make_leaf(totals);

    int best = 0;
    for (int i = 1; i < static_cast<int>(candidates.size()); ++i)
      if (candidates[i].m_stat > candidates[best].m_stat) best = i;

    if (debug) {
      RsrfDebug::Node rec;
      const double t = static_cast<double>(totals.count);
      for (const Candidate& c : candidates) {
        rec.scores.push_back(std::max(0.0, (c.m_stat - totals.sum * totals.sum / t) / t));
        std::vector<IndexSet> cells;
        for (const auto& rows : c.cells) cells.emplace_back(rows.begin(), rows.end());
        rec.cells.push_back(std::move(cells));
        rec.cart_subsets.push_back(c.cart_subsets_flat);
      }
      rec.chosen = best;
      debug->nodes.push_back(std::move(rec));
    }

    return install(candidates[best], 0, std::move(frame));
  }

  std::int32_t make_leaf(const CellSums& totals) {
    const std::int32_t id = static_cast<std::int32_t>(nodes.size());
    nodes.emplace_back();
    nodes[id].leaf_mean = totals.sum / static_cast<double>(totals.count);
    nodes[id].leaf_count = static_cast<std::int32_t>(totals.count);
    return id;
  }
};

CandidateStep to_step(const Candidate& cand, CandidateStep::Kind kind, const CellSums& totals) {
  CandidateStep step;
  step.kind = kind;
  for (const auto& rows : cand.cells) step.cells.emplace_back(rows.begin(), rows.end());
  const double t = static_cast<double>(totals.count);
  step.score = std::max(0.0, (cand.m_stat - totals.sum * totals.sum / t) / t);
  return step;
}

RsrfGrower make_step_grower(const Dataset& data, const RsrfConfig& cfg, RngStream& rng) {
  if (cfg.mtry_mode == MtryMode::kFixed && !cfg.mtry_random.has_value())
    throw std::invalid_argument("mtry_random: required in fixed mtry mode");
  RsrfGrower grower{data, cfg, rng, nullptr, {}, std::vector<std::int32_t>(data.n(), 0), {}, {}};
  if (cfg.mtry_mode == MtryMode::kFixed) grower.draw_fixed_pools();
  return grower;
}

}  // namespace

std::optional<CandidateStep> random_cart_step(const IndexSet& cell, const Dataset& data,
                                              RngStream& rng, const RsrfConfig& cfg) {
  RsrfGrower grower = make_step_grower(data, cfg, rng);
  NodeFrame frame = detail::root_frame(data, cell);
  auto cand = grower.make_random_cart(frame);
  if (!cand) return std::nullopt;
  return to_step(*cand, CandidateStep::Kind::kRandomCart, cell_sums(frame.rows(), data));
}

std::optional<CandidateStep> cart_cart_step(const IndexSet& cell, const Dataset& data,
                                            RngStream& rng, const RsrfConfig& cfg) {
  if (cfg.mtry_mode == MtryMode::kNotFixed && !cfg.mtry_cart_cart.has_value())
    throw std::invalid_argument("mtry_cart_cart: required for the CART-CART step");
  RsrfGrower grower = make_step_grower(data, cfg, rng);
  NodeFrame frame = detail::root_frame(data, cell);
  auto cand = grower.make_cart_cart(frame);
  if (!cand) return std::nullopt;
  return to_step(*cand, CandidateStep::Kind::kCartCart, cell_sums(frame.rows(), data));
}

Tree grow_rsrf_tree(const Dataset& data, IndexSet resample, const RsrfConfig& cfg, RngStream& rng,
                    RsrfDebug* debug) {
  RsrfGrower grower{data, cfg, rng, debug, {}, std::vector<std::int32_t>(data.n(), 0), {}, {}};
  grower.build(detail::root_frame(data, resample));
  return Tree{std::move(grower.nodes), std::move(resample)};
}

}  // namespace grove
