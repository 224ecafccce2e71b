#pragma once

#include <string>

#include "txident/ml/adaboost.hpp"
#include "txident/ml/forest.hpp"
#include "txident/ml/knn.hpp"
#include "txident/ml/polyls.hpp"

namespace txident {

enum class ClassifierKind { Knn, RandomForest, ExtraTrees, AdaBoost, PolyLs };

std::string classifier_kind_name(ClassifierKind kind);
ClassifierKind classifier_kind_from_name(const std::string& name);

// Which stage a classifier serves; fixes the default hyperparameters.
enum class PipelineRole {
    Modulation,  // hierarchy branches: kNN k=1, RF 100, ET 100, AdaBoost(stump) 100
    Antenna,     // UAC / dedicated banks: kNN k=5, RF 100, ET 200, AdaBoost(RF-100) 100
    Joint,       // both stages of the joint schemes: kNN k=100, RF 100, ET 200, AdaBoost(RF-100) 100
};

struct ClassifierConfig {
    ClassifierKind kind = ClassifierKind::RandomForest;
    int knn_k = 1;
    int n_estimators = 100;
    ml::AdaBase ada_base = ml::AdaBase::Stump;
    int ada_base_estimators = 100;  // forest size when ada_base == Forest
};

ClassifierConfig default_classifier_config(ClassifierKind kind, PipelineRole role);

// Fits one model of the configured kind. The training features must already
// be in their final space (expanded beforehand where polynomial features are
// wanted; PolyLs callers always expand).
std::unique_ptr<ml::Classifier> fit_classifier(const ClassifierConfig& cfg,
                                               const ml::TrainingSet& ts, uint64_t seed);

}  // namespace txident
