#pragma once

#include "txident/ml/classifier.hpp"

namespace txident::ml {

// Brute-force k-nearest-neighbours with Euclidean distance. Neighbour order
// is (distance, row index); class ties break toward the smallest label.
class KnnClassifier : public Classifier {
public:
    KnnClassifier(TrainingSet ts, int k);

    int predict(std::span<const double> features) const override;
    const std::vector<int>& classes() const override { return classes_; }
    size_t dimension() const override { return train_.x.cols(); }

    nlohmann::json to_json() const override;
    static std::unique_ptr<KnnClassifier> from_json(const nlohmann::json& j);

    int k() const { return k_; }

private:
    TrainingSet train_;
    std::vector<int> classes_;
    int k_;
};

inline std::unique_ptr<Classifier> fit_knn(TrainingSet ts, int k) {
    return std::make_unique<KnnClassifier>(std::move(ts), k);
}

}  // namespace txident::ml
