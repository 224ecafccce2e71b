#include "txident/pipelines/antenna.hpp"

#include <stdexcept>

#include "txident/rng.hpp"

namespace txident {

std::unique_ptr<ml::Classifier> fit_uac(const LabeledDataset& train,
                                        const ClassifierConfig& cfg, uint64_t seed) {
    ml::TrainingSet ts;
    bool seen[3] = {false, false, false};
    for (const auto& row : train.rows) {
        ts.x.push_row(row.features);
        ts.y.push_back(row.n_tx);
        for (int t = 0; t < 3; ++t) {
            if (row.n_tx == kTxAntennaClasses[t]) seen[t] = true;
        }
    }
    for (int t = 0; t < 3; ++t) {
        if (!seen[t]) {
            throw std::runtime_error("training set misses antenna class " +
                                     std::to_string(kTxAntennaClasses[t]));
        }
    }
    return fit_classifier(cfg, ts, derive_seed(seed, 0xAC));
}

DedicatedBank DedicatedBank::fit(const LabeledDataset& train, const ClassifierConfig& cfg,
                                 uint64_t seed) {
    DedicatedBank bank;
    for (int m = 0; m < kNumModulations; ++m) {
        const Modulation mod = kAllModulations[m];
        ml::TrainingSet ts;
        bool seen[3] = {false, false, false};
        for (const auto& row : train.rows) {
            if (row.modulation != mod) continue;
            ts.x.push_row(row.features);
            ts.y.push_back(row.n_tx);
            for (int t = 0; t < 3; ++t) {
                if (row.n_tx == kTxAntennaClasses[t]) seen[t] = true;
            }
        }
        if (ts.y.empty() || !(seen[0] && seen[1] && seen[2])) {
            throw std::runtime_error("dedicated bank: incomplete coverage for " +
                                     modulation_name(mod));
        }
        bank.models_[m] = fit_classifier(cfg, ts, derive_seed(seed, 0xDE00 + m));
    }
    return bank;
}

int DedicatedBank::predict(Modulation routed, const FeatureVector& fv) const {
    return models_[static_cast<size_t>(routed)]->predict(fv);
}

}  // namespace txident
