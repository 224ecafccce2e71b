#include "txident/ml/classifier.hpp"

#include <algorithm>
#include <stdexcept>

#include "txident/ml/adaboost.hpp"
#include "txident/ml/forest.hpp"
#include "txident/ml/knn.hpp"
#include "txident/ml/polyls.hpp"
#include "txident/ml/tree.hpp"

namespace txident::ml {

std::vector<int> label_vocabulary(const std::vector<int>& y) {
    std::vector<int> classes(y);
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    return classes;
}

std::vector<int> Classifier::predict_all(const Matrix& rows) const {
    std::vector<int> out(rows.rows());
    for (size_t i = 0; i < rows.rows(); ++i) out[i] = predict(rows.row(i));
    return out;
}

std::unique_ptr<Classifier> classifier_from_json(const nlohmann::json& j) {
    const int version = j.at("format_version").get<int>();
    if (version != kModelFormatVersion) {
        throw std::runtime_error("unsupported model format version " + std::to_string(version));
    }
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "knn") return KnnClassifier::from_json(j);
    if (kind == "tree") return DecisionTree::from_json(j);
    if (kind == "forest") return ForestClassifier::from_json(j);
    if (kind == "adaboost") return AdaBoostClassifier::from_json(j);
    if (kind == "polyls") return PolyLsClassifier::from_json(j);
    throw std::runtime_error("unknown model kind: " + kind);
}

}  // namespace txident::ml
