#pragma once

#include "txident/ml/forest.hpp"

namespace txident::ml {

enum class AdaBase {
    Stump,   // depth-1 tree fit with weighted Gini
    Forest,  // forest fit on a weighted bootstrap resample
};

struct AdaBoostParams {
    int n_estimators = 100;
    AdaBase base = AdaBase::Stump;
    ForestParams base_forest{100, ForestMode::RF, -1};
};

// Per-round training diagnostics.
struct BoostRound {
    double epsilon;      // weighted training error of the round's learner
    double alpha;        // learner weight
    double weight_sum;   // sample-weight sum after renormalization
};

// Multiclass AdaBoost (SAMME). Rounds stop early when the weighted error
// reaches 0 or exceeds 1 - 1/K.
class AdaBoostClassifier : public Classifier {
public:
    AdaBoostClassifier(const TrainingSet& ts, const AdaBoostParams& params, uint64_t seed);

    int predict(std::span<const double> features) const override;
    const std::vector<int>& classes() const override { return classes_; }
    size_t dimension() const override { return dim_; }

    const std::vector<BoostRound>& rounds() const { return rounds_; }
    size_t learner_count() const { return learners_.size(); }

    nlohmann::json to_json() const override;
    static std::unique_ptr<AdaBoostClassifier> from_json(const nlohmann::json& j);

private:
    AdaBoostClassifier() = default;

    AdaBoostParams params_;
    std::vector<std::unique_ptr<Classifier>> learners_;
    std::vector<double> alphas_;
    std::vector<BoostRound> rounds_;
    std::vector<int> classes_;
    size_t dim_ = 0;
};

std::unique_ptr<Classifier> fit_adaboost(const TrainingSet& ts, const AdaBoostParams& params,
                                         uint64_t seed);

}  // namespace txident::ml
