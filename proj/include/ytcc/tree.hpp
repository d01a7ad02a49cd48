#pragma once

#include <cstdint>
#include <vector>

#include "ytcc/models.hpp"
#include "ytcc/rng.hpp"
#include "ytcc/types.hpp"

namespace ytcc::tree {

enum class Criterion { Gini, Entropy };

double impurity(const std::vector<double>& counts, double total, Criterion criterion);

/// Candidate feature count for one split.
int resolve_max_features(const std::string& name, Index n_features);

/// Greedy CART grown to purity: nodes split while some candidate feature
/// offers a strict impurity decrease; otherwise they become leaves
/// holding per-class counts. `samples` may contain repeated indices
/// (bootstrap). Candidate features are drawn per split from `rng` when
/// max_features < n_features.
TreeParams build_tree(const DenseMatrix& X, const std::vector<int>& y, std::vector<int> samples,
                      int n_classes, Criterion criterion, int max_features, Rng& rng);

int tree_predict_row(const TreeParams& tree, const DenseMatrix& X, Index row);
const TreeNode& tree_leaf_for_row(const TreeParams& tree, const DenseMatrix& X, Index row);

/// n with-replacement draws from [0, n); the forest's per-tree sample.
std::vector<int> bootstrap_sample(Rng& rng, int n);

/// RNG stream for tree `index` of a forest seeded with `seed`; exposed so
/// single trees can be reproduced outside a forest.
Rng forest_tree_rng(std::uint64_t seed, std::size_t index);

}  // namespace ytcc::tree
