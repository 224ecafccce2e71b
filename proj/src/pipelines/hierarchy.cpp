#include "txident/pipelines/hierarchy.hpp"

#include <stdexcept>

#include "txident/rng.hpp"

namespace txident {

std::string classifier_kind_name(ClassifierKind kind) {
    switch (kind) {
        case ClassifierKind::Knn:          return "knn";
        case ClassifierKind::RandomForest: return "rf";
        case ClassifierKind::ExtraTrees:   return "et";
        case ClassifierKind::AdaBoost:     return "adaboost";
        case ClassifierKind::PolyLs:       return "polyls";
    }
    throw std::invalid_argument("unknown classifier kind");
}

ClassifierKind classifier_kind_from_name(const std::string& name) {
    if (name == "knn") return ClassifierKind::Knn;
    if (name == "rf") return ClassifierKind::RandomForest;
    if (name == "et") return ClassifierKind::ExtraTrees;
    if (name == "adaboost") return ClassifierKind::AdaBoost;
    if (name == "polyls") return ClassifierKind::PolyLs;
    throw std::invalid_argument("unknown classifier: " + name +
                                " (expected knn|rf|et|adaboost|polyls)");
}

ClassifierConfig default_classifier_config(ClassifierKind kind, PipelineRole role) {
    ClassifierConfig cfg;
    cfg.kind = kind;
    switch (role) {
        case PipelineRole::Modulation:
            cfg.knn_k = 1;
            cfg.n_estimators = 100;
            cfg.ada_base = ml::AdaBase::Stump;
            break;
        case PipelineRole::Antenna:
        case PipelineRole::Joint:
            cfg.knn_k = role == PipelineRole::Antenna ? 5 : 100;
            cfg.n_estimators = kind == ClassifierKind::ExtraTrees ? 200 : 100;
            cfg.ada_base = ml::AdaBase::Forest;
            break;
    }
    return cfg;
}

std::unique_ptr<ml::Classifier> fit_classifier(const ClassifierConfig& cfg,
                                               const ml::TrainingSet& ts, uint64_t seed) {
    switch (cfg.kind) {
        case ClassifierKind::Knn:
            return ml::fit_knn(ts, cfg.knn_k);
        case ClassifierKind::RandomForest:
            return ml::fit_forest(ts, {cfg.n_estimators, ml::ForestMode::RF, -1}, seed);
        case ClassifierKind::ExtraTrees:
            return ml::fit_forest(ts, {cfg.n_estimators, ml::ForestMode::ET, -1}, seed);
        case ClassifierKind::AdaBoost: {
            ml::AdaBoostParams params;
            params.n_estimators = cfg.n_estimators;
            params.base = cfg.ada_base;
            params.base_forest = {cfg.ada_base_estimators, ml::ForestMode::RF, -1};
            return ml::fit_adaboost(ts, params, seed);
        }
        case ClassifierKind::PolyLs:
            return ml::fit_polyls(ts);
    }
    throw std::invalid_argument("unknown classifier kind");
}

std::string feature_mode_name(FeatureMode mode) {
    return mode == FeatureMode::Cumulant ? "cumulant" : "polynomial";
}

FeatureMode feature_mode_from_name(const std::string& name) {
    if (name == "cumulant") return FeatureMode::Cumulant;
    if (name == "polynomial") return FeatureMode::Polynomial;
    throw std::invalid_argument("unknown feature mode: " + name);
}

ml::Matrix feature_matrix(const LabeledDataset& ds, FeatureMode mode) {
    ml::Matrix m;
    for (const auto& row : ds.rows) {
        if (mode == FeatureMode::Cumulant) {
            m.push_row(row.features);
        } else {
            m.push_row(polynomial_expand(row.features));
        }
    }
    return m;
}

namespace {

// Binary target of each node; -1 when the row does not reach the node.
int node_target(HierarchicalModulationClassifier::NodeId node, Modulation mod) {
    using Node = HierarchicalModulationClassifier;
    const bool qam = modulation_family(mod) == ModulationFamily::QAM;
    switch (node) {
        case Node::kFamily:
            return qam ? 1 : 0;
        case Node::kPsk2:
            if (qam) return -1;
            return mod == Modulation::BPSK ? 0 : 1;
        case Node::kQam2:
            if (!qam) return -1;
            return mod == Modulation::QAM16 ? 0 : 1;
        case Node::kPsk3:
            if (mod == Modulation::QPSK) return 0;
            if (mod == Modulation::PSK8) return 1;
            return -1;
        case Node::kQam3:
            if (mod == Modulation::QAM64) return 0;
            if (mod == Modulation::QAM256) return 1;
            return -1;
    }
    return -1;
}

}  // namespace

HierarchicalModulationClassifier HierarchicalModulationClassifier::fit(
    const LabeledDataset& train, const ClassifierConfig& cfg, FeatureMode mode,
    uint64_t seed) {
    std::array<bool, kNumModulations> seen{};
    for (const auto& row : train.rows) seen[static_cast<size_t>(row.modulation)] = true;
    for (int m = 0; m < kNumModulations; ++m) {
        if (!seen[m]) {
            throw std::runtime_error("training set misses modulation " +
                                     modulation_name(kAllModulations[m]));
        }
    }

    HierarchicalModulationClassifier hmc;
    hmc.mode_ = cfg.kind == ClassifierKind::PolyLs ? FeatureMode::Polynomial : mode;
    const ml::Matrix features = feature_matrix(train, hmc.mode_);

    for (int n = 0; n < 5; ++n) {
        const auto node = static_cast<NodeId>(n);
        ml::TrainingSet ts;
        for (size_t i = 0; i < train.rows.size(); ++i) {
            const int target = node_target(node, train.rows[i].modulation);
            if (target < 0) continue;
            ts.x.push_row(features.row(i));
            ts.y.push_back(target);
        }
        hmc.nodes_[n] = fit_classifier(cfg, ts, derive_seed(seed, 0xB000 + n));
    }
    return hmc;
}

Modulation HierarchicalModulationClassifier::predict_traced(const FeatureVector& fv,
                                                            std::vector<int>& visited) const {
    std::vector<double> expanded;
    std::span<const double> features;
    if (mode_ == FeatureMode::Polynomial) {
        expanded = polynomial_expand(fv);
        features = expanded;
    } else {
        features = fv;
    }

    visited.clear();
    visited.push_back(kFamily);
    if (nodes_[kFamily]->predict(features) == 0) {
        visited.push_back(kPsk2);
        if (nodes_[kPsk2]->predict(features) == 0) return Modulation::BPSK;
        visited.push_back(kPsk3);
        return nodes_[kPsk3]->predict(features) == 0 ? Modulation::QPSK : Modulation::PSK8;
    }
    visited.push_back(kQam2);
    if (nodes_[kQam2]->predict(features) == 0) return Modulation::QAM16;
    visited.push_back(kQam3);
    return nodes_[kQam3]->predict(features) == 0 ? Modulation::QAM64 : Modulation::QAM256;
}

Modulation HierarchicalModulationClassifier::predict(const FeatureVector& fv) const {
    std::vector<int> visited;
    return predict_traced(fv, visited);
}

std::vector<Modulation> HierarchicalModulationClassifier::predict_all(
    const LabeledDataset& ds) const {
    std::vector<Modulation> out(ds.rows.size());
    for (size_t i = 0; i < ds.rows.size(); ++i) out[i] = predict(ds.rows[i].features);
    return out;
}

}  // namespace txident
