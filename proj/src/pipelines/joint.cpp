#include "txident/pipelines/joint.hpp"

namespace txident {

std::vector<JointPrediction> joint_parallel(const HierarchicalModulationClassifier& hmc,
                                            const ml::Classifier& uac,
                                            const LabeledDataset& test) {
    std::vector<JointPrediction> out;
    out.reserve(test.rows.size());
    for (const auto& row : test.rows) {
        out.push_back({hmc.predict(row.features), uac.predict(row.features)});
    }
    return out;
}

std::vector<JointPrediction> joint_sequential(const HierarchicalModulationClassifier& hmc,
                                              const DedicatedBank& bank,
                                              const LabeledDataset& test) {
    std::vector<JointPrediction> out;
    out.reserve(test.rows.size());
    for (const auto& row : test.rows) {
        const Modulation mod = hmc.predict(row.features);
        out.push_back({mod, bank.predict(mod, row.features)});
    }
    return out;
}

}  // namespace txident
