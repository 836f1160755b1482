// Copyright 2026 The evkb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "evkb/learning/forest.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "evkb/core/error.hpp"

namespace evkb::learning {
namespace {

using json = nlohmann::json;

constexpr const char* kFormat = "evkb-forest";
constexpr int kFormatVersion = 1;

double gini(double positives, double n) {
  if (n <= 0) return 0.0;
  const double p = positives / n;
  return 2.0 * p * (1.0 - p);
}

struct Split {
  int feature = -1;
  double threshold = 0.0;
  double decrease = 0.0;
};

class TreeBuilder {
 public:
  TreeBuilder(const std::vector<std::vector<double>>& x, const std::vector<double>& y,
              const ForestParams& params, std::uint64_t seed)
      : x_(x), y_(y), params_(params), rng_(seed), width_(x.empty() ? 0 : x[0].size()) {}

  Tree build() {
    std::vector<std::size_t> sample(x_.size());
    if (params_.bootstrap) {
      for (auto& s : sample) s = static_cast<std::size_t>(rng_.below(x_.size()));
    } else {
      std::iota(sample.begin(), sample.end(), 0);
    }
    Tree tree;
    grow(tree, sample, 0);
    return tree;
  }

 private:
  int grow(Tree& tree, std::vector<std::size_t>& sample, int depth) {
    const int index = static_cast<int>(tree.nodes.size());
    tree.nodes.emplace_back();
    double positives = 0.0;
    for (auto s : sample) positives += y_[s];
    const double n = static_cast<double>(sample.size());
    {
      TreeNode& node = tree.nodes[index];
      node.samples = static_cast<int>(sample.size());
      node.value = positives / n;
      node.impurity = gini(positives, n);
    }
    const bool pure = positives == 0.0 || positives == n;
    if (pure || depth >= params_.max_depth ||
        sample.size() < 2 * static_cast<std::size_t>(std::max(1, params_.min_leaf))) {
      return index;
    }
    const Split split = best_split(sample, tree.nodes[index].impurity);
    if (split.feature < 0) return index;

    std::vector<std::size_t> left, right;
    for (auto s : sample) {
      (x_[s][split.feature] <= split.threshold ? left : right).push_back(s);
    }
    sample.clear();
    sample.shrink_to_fit();
    const int l = grow(tree, left, depth + 1);
    const int r = grow(tree, right, depth + 1);
    TreeNode& node = tree.nodes[index];
    node.feature = split.feature;
    node.threshold = split.threshold;
    node.left = l;
    node.right = r;
    return index;
  }

  std::vector<int> candidate_features() {
    std::vector<int> all(width_);
    std::iota(all.begin(), all.end(), 0);
    const std::size_t k = static_cast<std::size_t>(std::max(1, params_.features_per_split));
    if (k >= width_) return all;
    // Partial Fisher-Yates, then ascending so the lowest index wins ties.
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng_.below(width_ - i));
      std::swap(all[i], all[j]);
    }
    all.resize(k);
    std::sort(all.begin(), all.end());
    return all;
  }

  Split best_split(const std::vector<std::size_t>& sample, double parent_impurity) {
    Split best;
    const double n = static_cast<double>(sample.size());
    const std::size_t min_leaf = static_cast<std::size_t>(std::max(1, params_.min_leaf));
    double total_pos = 0.0;
    for (auto s : sample) total_pos += y_[s];
    std::vector<std::pair<double, double>> column(sample.size());
    for (int f : candidate_features()) {
      for (std::size_t i = 0; i < sample.size(); ++i) {
        column[i] = {x_[sample[i]][f], y_[sample[i]]};
      }
      std::sort(column.begin(), column.end());
      double left_pos = 0.0;
      for (std::size_t i = 0; i + 1 < column.size(); ++i) {
        left_pos += column[i].second;
        if (column[i].first == column[i + 1].first) continue;
        const std::size_t n_left = i + 1;
        const std::size_t n_right = column.size() - n_left;
        if (n_left < min_leaf || n_right < min_leaf) continue;
        const double nl = static_cast<double>(n_left);
        const double nr = static_cast<double>(n_right);
        const double child = (nl * gini(left_pos, nl) + nr * gini(total_pos - left_pos, nr)) / n;
        const double decrease = parent_impurity - child;
        if (decrease > best.decrease + 1e-12) {
          best.feature = f;
          best.threshold = column[i].first + (column[i + 1].first - column[i].first) / 2.0;
          best.decrease = decrease;
        }
      }
    }
    return best;
  }

  const std::vector<std::vector<double>>& x_;
  const std::vector<double>& y_;
  const ForestParams& params_;
  Rng rng_;
  std::size_t width_;
};

json params_to_json(const ForestParams& p) {
  return {{"n_trees", p.n_trees},
          {"max_depth", p.max_depth},
          {"min_leaf", p.min_leaf},
          {"features_per_split", p.features_per_split},
          {"bootstrap", p.bootstrap},
          {"seed", p.seed}};
}

ForestParams params_from_json(const json& j) {
  ForestParams p;
  p.n_trees = j.at("n_trees").get<int>();
  p.max_depth = j.at("max_depth").get<int>();
  p.min_leaf = j.at("min_leaf").get<int>();
  p.features_per_split = j.at("features_per_split").get<int>();
  p.bootstrap = j.at("bootstrap").get<bool>();
  p.seed = j.at("seed").get<std::uint64_t>();
  return p;
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound + 1) % bound;
  std::uint64_t draw = engine_();
  while (draw > limit) draw = engine_();
  return draw % bound;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 of seed + index.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double Tree::predict(const std::vector<double>& x) const {
  int i = 0;
  while (!nodes[i].is_leaf()) {
    i = x[nodes[i].feature] <= nodes[i].threshold ? nodes[i].left : nodes[i].right;
  }
  return nodes[i].value;
}

ForestModel::ForestModel(std::vector<std::string> feature_names, ForestParams params,
                         std::vector<Tree> trees)
    : feature_names_(std::move(feature_names)), params_(params), trees_(std::move(trees)) {}

double ForestModel::predict(const std::vector<double>& x) const {
  if (x.size() != feature_names_.size()) {
    throw SchemaMismatchError("feature vector has " + std::to_string(x.size()) +
                              " columns, model expects " + std::to_string(feature_names_.size()));
  }
  if (trees_.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& t : trees_) sum += t.predict(x);
  return std::clamp(sum / static_cast<double>(trees_.size()), 0.0, 1.0);
}

std::string ForestModel::to_json() const {
  json trees = json::array();
  for (const auto& t : trees_) {
    json nodes = json::array();
    for (const auto& n : t.nodes) {
      nodes.push_back({n.feature, n.threshold, n.left, n.right, n.value, n.samples, n.impurity});
    }
    trees.push_back(std::move(nodes));
  }
  json j = {{"format", kFormat},
            {"version", kFormatVersion},
            {"feature_names", feature_names_},
            {"params", params_to_json(params_)},
            {"trees", std::move(trees)}};
  return j.dump();
}

ForestModel ForestModel::from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    if (j.at("format") != kFormat || j.at("version") != kFormatVersion) {
      throw DataError("not an evkb forest model (format/version mismatch)");
    }
    auto names = j.at("feature_names").get<std::vector<std::string>>();
    const ForestParams params = params_from_json(j.at("params"));
    std::vector<Tree> trees;
    for (const auto& jt : j.at("trees")) {
      Tree t;
      for (const auto& jn : jt) {
        TreeNode n;
        n.feature = jn.at(0).get<int>();
        n.threshold = jn.at(1).get<double>();
        n.left = jn.at(2).get<int>();
        n.right = jn.at(3).get<int>();
        n.value = jn.at(4).get<double>();
        n.samples = jn.at(5).get<int>();
        n.impurity = jn.at(6).get<double>();
        t.nodes.push_back(n);
      }
      const int size = static_cast<int>(t.nodes.size());
      if (size == 0) throw DataError("model tree without nodes");
      for (const auto& n : t.nodes) {
        if (n.value < 0.0 || n.value > 1.0) throw DataError("model leaf value outside [0,1]");
        if (n.is_leaf()) continue;
        if (n.feature >= static_cast<int>(names.size()) || n.left <= 0 || n.left >= size ||
            n.right <= 0 || n.right >= size) {
          throw DataError("model node refers outside the schema or tree");
        }
      }
      trees.push_back(std::move(t));
    }
    return ForestModel(std::move(names), params, std::move(trees));
  } catch (const json::exception& e) {
    throw DataError(std::string("invalid model file: ") + e.what());
  }
}

void ForestModel::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write model: " + path.string());
  out << to_json() << '\n';
}

ForestModel ForestModel::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read model: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_json(buffer.str());
}

ForestModel train_forest(const std::vector<std::vector<double>>& x, const std::vector<double>& y,
                         std::vector<std::string> feature_names, const ForestParams& params) {
  if (x.empty()) throw DataError("cannot train on an empty instance set");
  if (x.size() != y.size()) throw DataError("feature rows and labels differ in count");
  if (params.n_trees < 1) throw UsageError("n_trees must be positive");
  for (const auto& row : x) {
    if (row.size() != feature_names.size()) throw SchemaMismatchError("ragged feature rows");
  }
  for (double label : y) {
    if (label != 0.0 && label != 1.0) throw DataError("labels must be 0 or 1");
  }
  std::vector<Tree> trees;
  trees.reserve(static_cast<std::size_t>(params.n_trees));
  for (int t = 0; t < params.n_trees; ++t) {
    trees.push_back(TreeBuilder(x, y, params, derive_seed(params.seed, t)).build());
  }
  return ForestModel(std::move(feature_names), params, std::move(trees));
}

std::vector<double> gini_importance(const ForestModel& model) {
  std::vector<double> total(model.feature_names().size(), 0.0);
  for (const auto& tree : model.trees()) {
    const double root = tree.nodes.front().samples;
    for (const auto& node : tree.nodes) {
      if (node.is_leaf()) continue;
      const auto& l = tree.nodes[node.left];
      const auto& r = tree.nodes[node.right];
      const double decrease =
          node.samples * node.impurity - l.samples * l.impurity - r.samples * r.impurity;
      total[node.feature] += decrease / root;
    }
  }
  double sum = 0.0;
  for (auto& v : total) {
    v = std::max(0.0, v / static_cast<double>(model.trees().size()));
    sum += v;
  }
  if (sum > 0.0) {
    for (auto& v : total) v /= sum;
  }
  return total;
}

}  // namespace evkb::learning
