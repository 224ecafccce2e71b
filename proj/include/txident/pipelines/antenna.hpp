#pragma once

#include <array>
#include <memory>

#include "txident/dataset.hpp"
#include "txident/pipelines/classifier_config.hpp"

namespace txident {

// Universal antenna classifier: one 3-class model over n_tx, modulation
// labels ignored. Antenna models always work on raw cumulant features.
// Throws std::runtime_error unless all of {1, 2, 4} are present.
std::unique_ptr<ml::Classifier> fit_uac(const LabeledDataset& train,
                                        const ClassifierConfig& cfg, uint64_t seed);

// One antenna classifier per modulation, each trained only on its
// modulation's rows.
class DedicatedBank {
public:
    // Throws std::runtime_error unless every (modulation, n_tx) pair is present.
    static DedicatedBank fit(const LabeledDataset& train, const ClassifierConfig& cfg,
                             uint64_t seed);

    const ml::Classifier& model_for(Modulation mod) const {
        return *models_[static_cast<size_t>(mod)];
    }

    // Antenna prediction by the member dedicated to `routed` (normally the
    // *predicted* modulation, so routing errors hit a mismatched model).
    int predict(Modulation routed, const FeatureVector& fv) const;

private:
    std::array<std::unique_ptr<ml::Classifier>, kNumModulations> models_;
};

}  // namespace txident
