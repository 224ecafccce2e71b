#include "txident/ml/knn.hpp"

#include <algorithm>
#include <stdexcept>

namespace txident::ml {

KnnClassifier::KnnClassifier(TrainingSet ts, int k) : train_(std::move(ts)), k_(k) {
    train_.validate();
    if (k_ < 1 || static_cast<size_t>(k_) > train_.x.rows()) {
        throw std::invalid_argument("k out of range");
    }
    classes_ = label_vocabulary(train_.y);
}

int KnnClassifier::predict(std::span<const double> features) const {
    check_dimension(features);
    const size_t n = train_.x.rows();

    std::vector<std::pair<double, size_t>> dist(n);
    for (size_t i = 0; i < n; ++i) {
        const auto row = train_.x.row(i);
        double d2 = 0.0;
        for (size_t j = 0; j < row.size(); ++j) {
            const double diff = row[j] - features[j];
            d2 += diff * diff;
        }
        dist[i] = {d2, i};
    }
    const size_t k = static_cast<size_t>(k_);
    std::partial_sort(dist.begin(), dist.begin() + k, dist.end());

    // Majority vote over the k nearest; ties -> smallest class label.
    int best_label = 0;
    size_t best_count = 0;
    for (int label : classes_) {
        size_t count = 0;
        for (size_t i = 0; i < k; ++i) {
            if (train_.y[dist[i].second] == label) ++count;
        }
        if (count > best_count) {
            best_count = count;
            best_label = label;
        }
    }
    return best_label;
}

nlohmann::json KnnClassifier::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (size_t i = 0; i < train_.x.rows(); ++i) {
        const auto r = train_.x.row(i);
        rows.push_back(std::vector<double>(r.begin(), r.end()));
    }
    return {
        {"format_version", kModelFormatVersion},
        {"kind", "knn"},
        {"k", k_},
        {"labels", train_.y},
        {"rows", std::move(rows)},
    };
}

std::unique_ptr<KnnClassifier> KnnClassifier::from_json(const nlohmann::json& j) {
    TrainingSet ts;
    ts.y = j.at("labels").get<std::vector<int>>();
    for (const auto& row : j.at("rows")) {
        const auto values = row.get<std::vector<double>>();
        ts.x.push_row(values);
    }
    return std::make_unique<KnnClassifier>(std::move(ts), j.at("k").get<int>());
}

}  // namespace txident::ml
