#include "txident/ml/forest.hpp"

#include <cmath>
#include <stdexcept>

#include "txident/parallel.hpp"
#include "txident/rng.hpp"

namespace txident::ml {

namespace {
constexpr uint64_t kTreeStreamBase = 0x7000;
constexpr uint64_t kBootstrapTag = 1;
constexpr uint64_t kGrowTag = 2;
}  // namespace

ForestClassifier::ForestClassifier(const TrainingSet& ts, const ForestParams& params,
                                   uint64_t seed)
    : params_(params) {
    ts.validate();
    if (params.n_estimators < 1) throw std::invalid_argument("n_estimators must be >= 1");
    dim_ = ts.x.cols();
    classes_ = label_vocabulary(ts.y);

    TreeParams tree_params;
    tree_params.max_depth = params.max_depth;
    if (params.mode == ForestMode::RF) {
        tree_params.feature_subsample =
            static_cast<int>(std::ceil(std::sqrt(static_cast<double>(dim_))));
        tree_params.random_threshold = false;
    } else {
        tree_params.feature_subsample = -1;  // all features
        tree_params.random_threshold = true;
    }

    trees_.resize(params.n_estimators);
    parallel_for(trees_.size(), [&](size_t t) {
        const uint64_t tree_seed = derive_seed(seed, kTreeStreamBase + t);
        if (params_.mode == ForestMode::RF) {
            Rng boot(derive_seed(tree_seed, kBootstrapTag));
            const size_t n = ts.x.rows();
            TrainingSet resampled;
            resampled.x = Matrix(n, ts.x.cols());
            resampled.y.resize(n);
            for (size_t i = 0; i < n; ++i) {
                const size_t src = boot.uniform_below(n);
                const auto row = ts.x.row(src);
                std::copy(row.begin(), row.end(), resampled.x.row(i).begin());
                resampled.y[i] = ts.y[src];
            }
            trees_[t] = std::make_unique<DecisionTree>(resampled, tree_params,
                                                       derive_seed(tree_seed, kGrowTag));
        } else {
            trees_[t] = std::make_unique<DecisionTree>(ts, tree_params,
                                                       derive_seed(tree_seed, kGrowTag));
        }
    });
}

std::vector<int> ForestClassifier::vote_counts(std::span<const double> features) const {
    check_dimension(features);
    std::vector<int> votes(classes_.size(), 0);
    for (const auto& tree : trees_) {
        const int label = tree->predict(features);
        const auto it = std::lower_bound(classes_.begin(), classes_.end(), label);
        ++votes[static_cast<size_t>(it - classes_.begin())];
    }
    return votes;
}

int ForestClassifier::predict(std::span<const double> features) const {
    const auto votes = vote_counts(features);
    size_t best = 0;
    for (size_t k = 1; k < votes.size(); ++k) {
        if (votes[k] > votes[best]) best = k;  // ties -> smallest class label
    }
    return classes_[best];
}

nlohmann::json ForestClassifier::to_json() const {
    nlohmann::json trees = nlohmann::json::array();
    for (const auto& tree : trees_) trees.push_back(tree->to_json());
    return {
        {"format_version", kModelFormatVersion},
        {"kind", "forest"},
        {"mode", params_.mode == ForestMode::RF ? "rf" : "et"},
        {"n_estimators", params_.n_estimators},
        {"max_depth", params_.max_depth},
        {"classes", classes_},
        {"dim", dim_},
        {"trees", std::move(trees)},
    };
}

std::unique_ptr<ForestClassifier> ForestClassifier::from_json(const nlohmann::json& j) {
    auto forest = std::unique_ptr<ForestClassifier>(new ForestClassifier());
    forest->params_.mode = j.at("mode").get<std::string>() == "rf" ? ForestMode::RF : ForestMode::ET;
    forest->params_.n_estimators = j.at("n_estimators").get<int>();
    forest->params_.max_depth = j.at("max_depth").get<int>();
    forest->classes_ = j.at("classes").get<std::vector<int>>();
    forest->dim_ = j.at("dim").get<size_t>();
    for (const auto& t : j.at("trees")) forest->trees_.push_back(DecisionTree::from_json(t));
    return forest;
}

std::unique_ptr<Classifier> fit_forest(const TrainingSet& ts, const ForestParams& params,
                                       uint64_t seed) {
    return std::make_unique<ForestClassifier>(ts, params, seed);
}

}  // namespace txident::ml
