#include "ytcc/tree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ytcc/errors.hpp"

namespace ytcc::tree {
namespace {

constexpr double kMinGain = 1e-12;

struct NodeTask {
    std::size_t begin;
    std::size_t end;
    int node_index;
};

struct BestSplit {
    double gain = 0.0;
    int feature = -1;
    Real threshold = 0.0;
};

int argmax_lowest(const std::vector<double>& counts) {
    int best = 0;
    for (int k = 1; k < static_cast<int>(counts.size()); ++k) {
        if (counts[k] > counts[best]) best = k;
    }
    return best;
}

}  // namespace

double impurity(const std::vector<double>& counts, double total, Criterion criterion) {
    if (total <= 0) return 0.0;
    double value = criterion == Criterion::Gini ? 1.0 : 0.0;
    for (double c : counts) {
        if (c <= 0) continue;
        const double p = c / total;
        if (criterion == Criterion::Gini) value -= p * p;
        else value -= p * std::log2(p);
    }
    return value;
}

int resolve_max_features(const std::string& name, Index n_features) {
    const int f = static_cast<int>(n_features);
    if (name == "sqrt") return std::max(1, static_cast<int>(std::sqrt(static_cast<double>(f))));
    if (name == "log2") return std::max(1, static_cast<int>(std::log2(static_cast<double>(std::max(f, 2)))));
    if (name == "all") return f;
    throw SchemaError("unknown max_features \"" + name + "\"");
}

TreeParams build_tree(const DenseMatrix& X, const std::vector<int>& y, std::vector<int> samples,
                      int n_classes, Criterion criterion, int max_features, Rng& rng) {
    TreeParams tree;
    if (samples.empty()) throw SchemaError("cannot grow a tree without samples");
    const Index n_features = X.cols();
    const int k_features = std::min<int>(max_features, static_cast<int>(n_features));

    std::vector<NodeTask> stack;
    tree.nodes.emplace_back();
    stack.push_back({0, samples.size(), 0});

    std::vector<double> node_counts(static_cast<std::size_t>(n_classes));
    std::vector<double> left_counts(static_cast<std::size_t>(n_classes));
    std::vector<double> right_counts(static_cast<std::size_t>(n_classes));
    std::vector<double> zero_counts(static_cast<std::size_t>(n_classes));
    std::vector<std::pair<Real, int>> nonzero;  // (value, class) among node samples
    std::vector<std::size_t> feature_pick;

    while (!stack.empty()) {
        const NodeTask task = stack.back();
        stack.pop_back();
        const double total = static_cast<double>(task.end - task.begin);

        std::fill(node_counts.begin(), node_counts.end(), 0.0);
        for (std::size_t s = task.begin; s < task.end; ++s) {
            node_counts[static_cast<std::size_t>(y[static_cast<std::size_t>(samples[s])])] += 1.0;
        }
        const double parent_impurity = impurity(node_counts, total, criterion);

        auto make_leaf = [&](TreeNode& node) {
            node.feature = -1;
            node.counts = node_counts;
            node.majority = argmax_lowest(node_counts);
        };

        if (parent_impurity <= 0.0) {
            make_leaf(tree.nodes[static_cast<std::size_t>(task.node_index)]);
            continue;
        }

        if (k_features == static_cast<int>(n_features)) {
            feature_pick.resize(static_cast<std::size_t>(n_features));
            std::iota(feature_pick.begin(), feature_pick.end(), 0);
        } else {
            feature_pick = rng.sample_without_replacement(static_cast<std::size_t>(k_features),
                                                          static_cast<std::size_t>(n_features));
            // Ascending order so equal gains resolve to the lowest feature.
            std::sort(feature_pick.begin(), feature_pick.end());
        }

        BestSplit best;
        for (std::size_t feature : feature_pick) {
            nonzero.clear();
            double zero_total = 0.0;
            std::fill(zero_counts.begin(), zero_counts.end(), 0.0);
            const auto column = X.col(static_cast<Index>(feature));
            for (std::size_t s = task.begin; s < task.end; ++s) {
                const int row = samples[s];
                const Real v = column[row];
                const int cls = y[static_cast<std::size_t>(row)];
                if (v == 0.0) {
                    zero_total += 1.0;
                    zero_counts[static_cast<std::size_t>(cls)] += 1.0;
                } else {
                    nonzero.emplace_back(v, cls);
                }
            }
            if (nonzero.empty()) continue;  // constant column in this node
            std::sort(nonzero.begin(), nonzero.end());

            // Scan groups of equal value in ascending order, with the
            // implicit zero block inserted between negatives and positives.
            std::fill(left_counts.begin(), left_counts.end(), 0.0);
            double left_total = 0.0;
            Real prev_value = 0.0;
            bool have_prev = false;
            bool zero_done = zero_total == 0.0;
            std::size_t i = 0;

            auto consider_boundary = [&](Real next_value) {
                if (!have_prev) return;
                const Real threshold = prev_value + (next_value - prev_value) / 2;
                if (!(threshold >= prev_value && threshold < next_value)) return;
                const double right_total = total - left_total;
                if (left_total <= 0.0 || right_total <= 0.0) return;
                for (std::size_t k = 0; k < left_counts.size(); ++k) {
                    right_counts[k] = node_counts[k] - left_counts[k];
                }
                const double weighted = (left_total * impurity(left_counts, left_total, criterion) +
                                         right_total * impurity(right_counts, right_total, criterion)) /
                                        total;
                const double gain = parent_impurity - weighted;
                // Strict > keeps the first candidate on ties; features are
                // scanned ascending and thresholds ascending, so equal
                // gains resolve to the lowest feature, then threshold.
                if (gain > best.gain && gain > kMinGain) {
                    best.gain = gain;
                    best.feature = static_cast<int>(feature);
                    best.threshold = threshold;
                }
            };

            while (i < nonzero.size() || !zero_done) {
                const bool take_zero = !zero_done && (i >= nonzero.size() || nonzero[i].first > 0.0);
                if (take_zero) {
                    consider_boundary(0.0);
                    for (std::size_t k = 0; k < zero_counts.size(); ++k) left_counts[k] += zero_counts[k];
                    left_total += zero_total;
                    prev_value = 0.0;
                    have_prev = true;
                    zero_done = true;
                } else {
                    const Real value = nonzero[i].first;
                    consider_boundary(value);
                    while (i < nonzero.size() && nonzero[i].first == value) {
                        left_counts[static_cast<std::size_t>(nonzero[i].second)] += 1.0;
                        left_total += 1.0;
                        ++i;
                    }
                    prev_value = value;
                    have_prev = true;
                }
            }
        }

        TreeNode& node = tree.nodes[static_cast<std::size_t>(task.node_index)];
        if (best.feature < 0) {
            make_leaf(node);
            continue;
        }

        const auto mid_it = std::stable_partition(
            samples.begin() + static_cast<std::ptrdiff_t>(task.begin),
            samples.begin() + static_cast<std::ptrdiff_t>(task.end),
            [&](int row) { return X(row, best.feature) <= best.threshold; });
        const std::size_t mid = static_cast<std::size_t>(mid_it - samples.begin());
        if (mid == task.begin || mid == task.end) {  // numerically degenerate split
            make_leaf(node);
            continue;
        }

        node.feature = best.feature;
        node.threshold = best.threshold;
        node.left = static_cast<int>(tree.nodes.size());
        node.right = node.left + 1;
        tree.nodes.emplace_back();
        tree.nodes.emplace_back();
        // Right pushed first so the left child is processed next (index
        // order stays depth-first left-to-right).
        stack.push_back({mid, task.end, node.right});
        stack.push_back({task.begin, mid, node.left});
    }
    return tree;
}

const TreeNode& tree_leaf_for_row(const TreeParams& tree, const DenseMatrix& X, Index row) {
    const TreeNode* node = &tree.nodes[0];
    while (node->feature >= 0) {
        const int next = X(row, node->feature) <= node->threshold ? node->left : node->right;
        node = &tree.nodes[static_cast<std::size_t>(next)];
    }
    return *node;
}

int tree_predict_row(const TreeParams& tree, const DenseMatrix& X, Index row) {
    return tree_leaf_for_row(tree, X, row).majority;
}

std::vector<int> bootstrap_sample(Rng& rng, int n) {
    std::vector<int> sample(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        sample[static_cast<std::size_t>(i)] = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    }
    return sample;
}

Rng forest_tree_rng(std::uint64_t seed, std::size_t index) {
    return Rng(derive_seed(seed, index));
}

}  // namespace ytcc::tree
