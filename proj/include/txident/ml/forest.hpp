#pragma once

#include "txident/ml/tree.hpp"

namespace txident::ml {

enum class ForestMode {
    RF,  // bootstrap resample, ceil(sqrt(d)) features, best-of-thresholds
    ET,  // full sample, all features, one random threshold each
};

struct ForestParams {
    int n_estimators = 100;
    ForestMode mode = ForestMode::RF;
    int max_depth = -1;
};

// Plurality-vote ensemble of decision trees. Per-tree seeds derive from the
// forest seed, so parallel and serial training produce the same model.
class ForestClassifier : public Classifier {
public:
    ForestClassifier(const TrainingSet& ts, const ForestParams& params, uint64_t seed);

    int predict(std::span<const double> features) const override;
    const std::vector<int>& classes() const override { return classes_; }
    size_t dimension() const override { return dim_; }

    // Vote counts per class (same order as classes()), summing to n_estimators.
    std::vector<int> vote_counts(std::span<const double> features) const;

    nlohmann::json to_json() const override;
    static std::unique_ptr<ForestClassifier> from_json(const nlohmann::json& j);

    const ForestParams& params() const { return params_; }

private:
    ForestClassifier() = default;

    ForestParams params_;
    std::vector<std::unique_ptr<DecisionTree>> trees_;
    std::vector<int> classes_;
    size_t dim_ = 0;
};

std::unique_ptr<Classifier> fit_forest(const TrainingSet& ts, const ForestParams& params,
                                       uint64_t seed);

}  // namespace txident::ml
