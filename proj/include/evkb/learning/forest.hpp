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

#ifndef EVKB_LEARNING_FOREST_HPP_
#define EVKB_LEARNING_FOREST_HPP_

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

namespace evkb::learning {

// std::mt19937_64 output is fixed by the standard but the distributions
// are not, so bounded draws are done here to keep forests identical across
// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

// Seed of tree `index` derived from the forest seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

struct ForestParams {
  int n_trees = 100;
  int max_depth = 12;
  int min_leaf = 2;
  int features_per_split = 5;
  bool bootstrap = true;
  std::uint64_t seed = 42;

  friend bool operator==(const ForestParams&, const ForestParams&) = default;
};

struct TreeNode {
  int feature = -1;  // -1 for leaves
  double threshold = 0.0;  // x[feature] <= threshold goes left
  int left = -1;
  int right = -1;
  double value = 0.0;  // mean label of the node's samples
  int samples = 0;
  double impurity = 0.0;  // Gini 2p(1-p)

  bool is_leaf() const { return feature < 0; }
  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

struct Tree {
  std::vector<TreeNode> nodes;  // nodes[0] is the root

  double predict(const std::vector<double>& x) const;
  friend bool operator==(const Tree&, const Tree&) = default;
};

// Regression forest over {0,1} labels; scores are mean leaf values.
class ForestModel {
 public:
  ForestModel() = default;
  ForestModel(std::vector<std::string> feature_names, ForestParams params, std::vector<Tree> trees);

  // Throws SchemaMismatchError when x has the wrong width.
  double predict(const std::vector<double>& x) const;

  const std::vector<std::string>& feature_names() const { return feature_names_; }
  const ForestParams& params() const { return params_; }
  const std::vector<Tree>& trees() const { return trees_; }

  void save(const std::filesystem::path& path) const;
  // Throws DataError for unreadable or invalid files.
  static ForestModel load(const std::filesystem::path& path);
  std::string to_json() const;
  static ForestModel from_json(const std::string& text);

  friend bool operator==(const ForestModel&, const ForestModel&) = default;

 private:
  std::vector<std::string> feature_names_;
  ForestParams params_;
  std::vector<Tree> trees_;
};

// Trains on rows `x` (all of width feature_names.size()) with labels in
// {0,1}. Throws DataError on empty input or bad labels, SchemaMismatchError
// on rows of the wrong width and UsageError on invalid params.
ForestModel train_forest(const std::vector<std::vector<double>>& x, const std::vector<double>& y,
                         std::vector<std::string> feature_names, const ForestParams& params);

// Impurity decrease per column, weighted by node sample share, averaged
// over trees and normalized to sum to 1. All zeros when no tree splits.
std::vector<double> gini_importance(const ForestModel& model);

}  // namespace evkb::learning

#endif  // EVKB_LEARNING_FOREST_HPP_
