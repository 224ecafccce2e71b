#pragma once

#include "txident/pipelines/antenna.hpp"
#include "txident/pipelines/hierarchy.hpp"

namespace txident {

struct JointPrediction {
    Modulation modulation;
    int n_tx;
};

// Parallel scheme: modulation and antenna count predicted independently per
// row by the two models.
std::vector<JointPrediction> joint_parallel(const HierarchicalModulationClassifier& hmc,
                                            const ml::Classifier& uac,
                                            const LabeledDataset& test);

// Sequential scheme: the predicted modulation routes each row to a dedicated
// antenna model; a modulation error sends the row to a mismatched member.
std::vector<JointPrediction> joint_sequential(const HierarchicalModulationClassifier& hmc,
                                              const DedicatedBank& bank,
                                              const LabeledDataset& test);

}  // namespace txident
