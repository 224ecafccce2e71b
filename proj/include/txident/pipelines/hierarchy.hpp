#pragma once

#include <array>
#include <memory>

#include "txident/dataset.hpp"
#include "txident/pipelines/classifier_config.hpp"

namespace txident {

enum class FeatureMode { Cumulant, Polynomial };

std::string feature_mode_name(FeatureMode mode);
FeatureMode feature_mode_from_name(const std::string& name);

// Feature rows of a dataset in the requested space (9 raw magnitudes or the
// 55-value degree-2 expansion).
ml::Matrix feature_matrix(const LabeledDataset& ds, FeatureMode mode);

// Binary-tree modulation classifier:
//
//            [family]            PSK vs QAM
//           /        |
//      [psk2]        [qam2]      BPSK vs rest | 16QAM vs rest
//      |     |       |     |
//   BPSK [psk3]   16QAM [qam3]   QPSK vs 8PSK | 64QAM vs 256QAM
//
// Each node trains only on rows of its own subtree; antenna labels are
// ignored. PolyLs nodes always see polynomial features.
class HierarchicalModulationClassifier {
public:
    enum NodeId { kFamily = 0, kPsk2 = 1, kQam2 = 2, kPsk3 = 3, kQam3 = 4 };

    // Throws std::runtime_error unless all six modulations are present.
    static HierarchicalModulationClassifier fit(const LabeledDataset& train,
                                                const ClassifierConfig& cfg, FeatureMode mode,
                                                uint64_t seed);

    Modulation predict(const FeatureVector& fv) const;

    // Like predict but records the node ids visited, for consistency checks.
    Modulation predict_traced(const FeatureVector& fv, std::vector<int>& visited) const;

    std::vector<Modulation> predict_all(const LabeledDataset& ds) const;

    FeatureMode feature_mode() const { return mode_; }
    const ml::Classifier& node(NodeId id) const { return *nodes_[id]; }

private:
    std::array<std::unique_ptr<ml::Classifier>, 5> nodes_;
    FeatureMode mode_ = FeatureMode::Cumulant;
};

}  // namespace txident
