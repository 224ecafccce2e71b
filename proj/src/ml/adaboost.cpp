#include "txident/ml/adaboost.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "txident/rng.hpp"

namespace txident::ml {

namespace {
constexpr uint64_t kRoundStreamBase = 0xADA0000;

// Weighted resample with replacement: n draws from the categorical
// distribution given by `weights` (assumed normalized).
TrainingSet weighted_resample(const TrainingSet& ts, const std::vector<double>& weights,
                              Rng& rng) {
    const size_t n = ts.y.size();
    std::vector<double> cumulative(n);
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) {
        acc += weights[i];
        cumulative[i] = acc;
    }
    TrainingSet out;
    out.x = Matrix(n, ts.x.cols());
    out.y.resize(n);
    for (size_t i = 0; i < n; ++i) {
        const double u = rng.uniform01() * acc;
        const size_t src = static_cast<size_t>(
            std::lower_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin());
        const size_t clamped = std::min(src, n - 1);
        const auto row = ts.x.row(clamped);
        std::copy(row.begin(), row.end(), out.x.row(i).begin());
        out.y[i] = ts.y[clamped];
    }
    return out;
}

}  // namespace

AdaBoostClassifier::AdaBoostClassifier(const TrainingSet& ts, const AdaBoostParams& params,
                                       uint64_t seed)
    : params_(params) {
    ts.validate();
    if (params.n_estimators < 1) throw std::invalid_argument("n_estimators must be >= 1");
    dim_ = ts.x.cols();
    classes_ = label_vocabulary(ts.y);

    const size_t n = ts.y.size();
    const double k_classes = static_cast<double>(classes_.size());
    std::vector<double> weights(n, 1.0 / static_cast<double>(n));

    for (int m = 0; m < params.n_estimators; ++m) {
        const uint64_t round_seed = derive_seed(seed, kRoundStreamBase + m);
        std::unique_ptr<Classifier> learner;
        if (params.base == AdaBase::Stump) {
            TreeParams stump{1, -1, false};
            learner = std::make_unique<DecisionTree>(ts, stump, round_seed, weights);
        } else {
            Rng resample_rng(derive_seed(round_seed, 1));
            const TrainingSet resampled = weighted_resample(ts, weights, resample_rng);
            learner = std::make_unique<ForestClassifier>(resampled, params.base_forest,
                                                         derive_seed(round_seed, 2));
        }

        std::vector<bool> wrong(n);
        double epsilon = 0.0;
        for (size_t i = 0; i < n; ++i) {
            wrong[i] = learner->predict(ts.x.row(i)) != ts.y[i];
            if (wrong[i]) epsilon += weights[i];
        }

        if (epsilon <= 0.0) {
            // Perfect round: keep it and stop; it decides the vote alone.
            learners_.push_back(std::move(learner));
            alphas_.push_back(1.0);
            rounds_.push_back({epsilon, 1.0, 1.0});
            break;
        }
        if (epsilon >= 1.0 - 1.0 / k_classes) {
            // No better than chance; keep a degenerate single learner only if
            // the ensemble would otherwise be empty.
            if (learners_.empty()) {
                learners_.push_back(std::move(learner));
                alphas_.push_back(1.0);
                rounds_.push_back({epsilon, 1.0, 1.0});
            }
            break;
        }

        const double alpha = std::log((1.0 - epsilon) / epsilon) + std::log(k_classes - 1.0);
        for (size_t i = 0; i < n; ++i) {
            if (wrong[i]) weights[i] *= std::exp(alpha);
        }
        double sum = 0.0;
        for (double w : weights) sum += w;
        for (double& w : weights) w /= sum;
        double check = 0.0;
        for (double w : weights) check += w;

        learners_.push_back(std::move(learner));
        alphas_.push_back(alpha);
        rounds_.push_back({epsilon, alpha, check});
    }
}

int AdaBoostClassifier::predict(std::span<const double> features) const {
    check_dimension(features);
    std::vector<double> scores(classes_.size(), 0.0);
    for (size_t m = 0; m < learners_.size(); ++m) {
        const int label = learners_[m]->predict(features);
        const auto it = std::lower_bound(classes_.begin(), classes_.end(), label);
        scores[static_cast<size_t>(it - classes_.begin())] += alphas_[m];
    }
    size_t best = 0;
    for (size_t k = 1; k < scores.size(); ++k) {
        if (scores[k] > scores[best]) best = k;
    }
    return classes_[best];
}

nlohmann::json AdaBoostClassifier::to_json() const {
    nlohmann::json learners = nlohmann::json::array();
    for (const auto& l : learners_) learners.push_back(l->to_json());
    return {
        {"format_version", kModelFormatVersion},
        {"kind", "adaboost"},
        {"base", params_.base == AdaBase::Stump ? "stump" : "forest"},
        {"n_estimators", params_.n_estimators},
        {"classes", classes_},
        {"dim", dim_},
        {"alphas", alphas_},
        {"learners", std::move(learners)},
    };
}

std::unique_ptr<AdaBoostClassifier> AdaBoostClassifier::from_json(const nlohmann::json& j) {
    auto model = std::unique_ptr<AdaBoostClassifier>(new AdaBoostClassifier());
    model->params_.base = j.at("base").get<std::string>() == "stump" ? AdaBase::Stump : AdaBase::Forest;
    model->params_.n_estimators = j.at("n_estimators").get<int>();
    model->classes_ = j.at("classes").get<std::vector<int>>();
    model->dim_ = j.at("dim").get<size_t>();
    model->alphas_ = j.at("alphas").get<std::vector<double>>();
    for (const auto& l : j.at("learners")) model->learners_.push_back(classifier_from_json(l));
    return model;
}

std::unique_ptr<Classifier> fit_adaboost(const TrainingSet& ts, const AdaBoostParams& params,
                                         uint64_t seed) {
    return std::make_unique<AdaBoostClassifier>(ts, params, seed);
}

}  // namespace txident::ml
