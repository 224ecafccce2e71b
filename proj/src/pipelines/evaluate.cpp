#include "txident/pipelines/evaluate.hpp"

#include <algorithm>
#include <stdexcept>

namespace txident {

AccuracyReport evaluate_labels(const std::vector<int>& predicted,
                               const std::vector<int>& truth) {
    if (predicted.size() != truth.size()) {
        throw std::invalid_argument("prediction/truth length mismatch");
    }
    if (predicted.empty()) throw std::invalid_argument("nothing to evaluate");

    AccuracyReport report;
    report.labels = truth;
    report.labels.insert(report.labels.end(), predicted.begin(), predicted.end());
    std::sort(report.labels.begin(), report.labels.end());
    report.labels.erase(std::unique(report.labels.begin(), report.labels.end()),
                        report.labels.end());

    const auto index_of = [&](int label) {
        return static_cast<size_t>(
            std::lower_bound(report.labels.begin(), report.labels.end(), label) -
            report.labels.begin());
    };

    report.confusion.assign(report.labels.size(), std::vector<int>(report.labels.size(), 0));
    size_t correct = 0;
    for (size_t i = 0; i < truth.size(); ++i) {
        ++report.confusion[index_of(truth[i])][index_of(predicted[i])];
        if (predicted[i] == truth[i]) ++correct;
    }
    report.accuracy_pct = 100.0 * static_cast<double>(correct) / static_cast<double>(truth.size());
    return report;
}

JointReport evaluate_joint(const std::vector<JointPrediction>& predicted,
                           const LabeledDataset& truth) {
    if (predicted.size() != truth.rows.size()) {
        throw std::invalid_argument("prediction/truth length mismatch");
    }
    if (predicted.empty()) throw std::invalid_argument("nothing to evaluate");

    std::vector<int> pred_mod(predicted.size()), true_mod(predicted.size());
    std::vector<int> pred_ant(predicted.size()), true_ant(predicted.size());
    size_t both = 0;
    for (size_t i = 0; i < predicted.size(); ++i) {
        pred_mod[i] = static_cast<int>(predicted[i].modulation);
        true_mod[i] = static_cast<int>(truth.rows[i].modulation);
        pred_ant[i] = predicted[i].n_tx;
        true_ant[i] = truth.rows[i].n_tx;
        if (pred_mod[i] == true_mod[i] && pred_ant[i] == true_ant[i]) ++both;
    }

    JointReport report;
    report.joint_accuracy_pct =
        100.0 * static_cast<double>(both) / static_cast<double>(predicted.size());
    report.modulation = evaluate_labels(pred_mod, true_mod);
    report.antennas = evaluate_labels(pred_ant, true_ant);
    return report;
}

}  // namespace txident
