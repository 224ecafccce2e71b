#pragma once

#include <vector>

#include "txident/pipelines/joint.hpp"

namespace txident {

// Accuracy plus a truth-by-prediction confusion matrix over the union of
// labels seen in either vector.
struct AccuracyReport {
    double accuracy_pct = 0.0;
    std::vector<int> labels;
    std::vector<std::vector<int>> confusion;  // confusion[truth][predicted]
};

// Throws std::invalid_argument on length mismatch or empty input.
AccuracyReport evaluate_labels(const std::vector<int>& predicted,
                               const std::vector<int>& truth);

// Joint report: a row counts as correct only when BOTH labels match.
struct JointReport {
    double joint_accuracy_pct = 0.0;
    AccuracyReport modulation;
    AccuracyReport antennas;
};

JointReport evaluate_joint(const std::vector<JointPrediction>& predicted,
                           const LabeledDataset& truth);

}  // namespace txident
