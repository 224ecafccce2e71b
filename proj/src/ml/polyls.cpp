#include "txident/ml/polyls.hpp"

#include <algorithm>

#include <Eigen/Dense>

namespace txident::ml {

PolyLsClassifier::PolyLsClassifier(const TrainingSet& ts) {
    ts.validate();
    dim_ = ts.x.cols();
    classes_ = label_vocabulary(ts.y);
    const auto n = static_cast<Eigen::Index>(ts.x.rows());
    const auto d = static_cast<Eigen::Index>(dim_);
    const auto k = static_cast<Eigen::Index>(classes_.size());

    Eigen::MatrixXd x(n, d);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto row = ts.x.row(static_cast<size_t>(i));
        for (Eigen::Index j = 0; j < d; ++j) x(i, j) = row[static_cast<size_t>(j)];
    }
    Eigen::MatrixXd targets = Eigen::MatrixXd::Zero(n, k);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto cls = std::lower_bound(classes_.begin(), classes_.end(),
                                          ts.y[static_cast<size_t>(i)]) -
                         classes_.begin();
        targets(i, cls) = 1.0;
    }

    const Eigen::MatrixXd w = x.completeOrthogonalDecomposition().solve(targets);
    weights_ = Matrix(dim_, classes_.size());
    for (Eigen::Index j = 0; j < d; ++j) {
        for (Eigen::Index c = 0; c < k; ++c) {
            weights_.at(static_cast<size_t>(j), static_cast<size_t>(c)) = w(j, c);
        }
    }
}

std::vector<double> PolyLsClassifier::scores(std::span<const double> features) const {
    check_dimension(features);
    std::vector<double> s(classes_.size(), 0.0);
    for (size_t j = 0; j < dim_; ++j) {
        for (size_t c = 0; c < classes_.size(); ++c) {
            s[c] += features[j] * weights_.at(j, c);
        }
    }
    return s;
}

int PolyLsClassifier::predict(std::span<const double> features) const {
    const auto s = scores(features);
    size_t best = 0;
    for (size_t c = 1; c < s.size(); ++c) {
        if (s[c] > s[best]) best = c;
    }
    return classes_[best];
}

nlohmann::json PolyLsClassifier::to_json() const {
    nlohmann::json w = nlohmann::json::array();
    for (size_t j = 0; j < dim_; ++j) {
        std::vector<double> row(classes_.size());
        for (size_t c = 0; c < classes_.size(); ++c) row[c] = weights_.at(j, c);
        w.push_back(std::move(row));
    }
    return {
        {"format_version", kModelFormatVersion},
        {"kind", "polyls"},
        {"classes", classes_},
        {"dim", dim_},
        {"weights", std::move(w)},
    };
}

std::unique_ptr<PolyLsClassifier> PolyLsClassifier::from_json(const nlohmann::json& j) {
    auto model = std::unique_ptr<PolyLsClassifier>(new PolyLsClassifier());
    model->classes_ = j.at("classes").get<std::vector<int>>();
    model->dim_ = j.at("dim").get<size_t>();
    model->weights_ = Matrix(model->dim_, model->classes_.size());
    size_t r = 0;
    for (const auto& row : j.at("weights")) {
        const auto values = row.get<std::vector<double>>();
        for (size_t c = 0; c < values.size(); ++c) model->weights_.at(r, c) = values[c];
        ++r;
    }
    return model;
}

}  // namespace txident::ml
