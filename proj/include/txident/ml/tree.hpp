#pragma once

#include <cstdint>

#include "txident/ml/classifier.hpp"

namespace txident::ml {

struct TreeParams {
    int max_depth = -1;            // -1 = grow until pure
    int feature_subsample = -1;    // features considered per node; -1 = all
    bool random_threshold = false; // one uniform threshold per candidate feature
};

// CART-style binary classification tree grown by weighted Gini reduction.
// Leaves predict the (weighted) majority class, ties toward the smallest
// label. Sample weights default to uniform.
class DecisionTree : public Classifier {
public:
    DecisionTree(const TrainingSet& ts, const TreeParams& params, uint64_t seed,
                 std::span<const double> sample_weights = {});

    int predict(std::span<const double> features) const override;
    const std::vector<int>& classes() const override { return classes_; }
    size_t dimension() const override { return dim_; }

    nlohmann::json to_json() const override;
    static std::unique_ptr<DecisionTree> from_json(const nlohmann::json& j);

    size_t node_count() const { return nodes_.size(); }
    int depth() const;

private:
    struct Node {
        int feature = -1;   // -1 marks a leaf
        double threshold = 0.0;
        int left = -1;      // x <= threshold
        int right = -1;
        int label = 0;      // majority class (kept on internal nodes too)
    };

    friend struct TreeBuilder;
    DecisionTree() = default;

    std::vector<Node> nodes_;
    std::vector<int> classes_;
    size_t dim_ = 0;
};

inline std::unique_ptr<Classifier> fit_tree(const TrainingSet& ts, const TreeParams& params,
                                            uint64_t seed,
                                            std::span<const double> sample_weights = {}) {
    return std::make_unique<DecisionTree>(ts, params, seed, sample_weights);
}

}  // namespace txident::ml
