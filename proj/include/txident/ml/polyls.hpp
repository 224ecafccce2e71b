#pragma once

#include "txident/ml/classifier.hpp"

namespace txident::ml {

// One-vs-all linear least squares: per-class weight vectors solve
// min ||X W - T||^2 for one-hot targets T, via a rank-revealing decomposition
// (minimum-norm solution on rank-deficient inputs). Prediction is the argmax
// of the per-class scores. Intended for degree-2 expanded feature vectors.
class PolyLsClassifier : public Classifier {
public:
    explicit PolyLsClassifier(const TrainingSet& ts);

    int predict(std::span<const double> features) const override;
    const std::vector<int>& classes() const override { return classes_; }
    size_t dimension() const override { return dim_; }

    // Per-class scores w_k . x, ordered like classes().
    std::vector<double> scores(std::span<const double> features) const;

    nlohmann::json to_json() const override;
    static std::unique_ptr<PolyLsClassifier> from_json(const nlohmann::json& j);

private:
    PolyLsClassifier() = default;

    Matrix weights_;  // dim x n_classes
    std::vector<int> classes_;
    size_t dim_ = 0;
};

inline std::unique_ptr<Classifier> fit_polyls(const TrainingSet& ts) {
    return std::make_unique<PolyLsClassifier>(ts);
}

}  // namespace txident::ml
