#pragma once

#include <memory>
#include <span>
#include <vector>

#include <json.hpp>

#include "txident/ml/matrix.hpp"

namespace txident::ml {

// Feature rows plus integer class labels (arbitrary values; models expose a
// sorted vocabulary and only ever predict labels from it).
struct TrainingSet {
    Matrix x;
    std::vector<int> y;

    void validate() const {
        if (x.rows() != y.size()) throw std::invalid_argument("row/label count mismatch");
        if (x.rows() == 0) throw std::invalid_argument("empty training set");
    }
};

// Sorted unique labels of a training set.
std::vector<int> label_vocabulary(const std::vector<int>& y);

class Classifier {
public:
    virtual ~Classifier() = default;

    // Throws std::invalid_argument if the feature dimension mismatches.
    virtual int predict(std::span<const double> features) const = 0;

    virtual const std::vector<int>& classes() const = 0;
    virtual size_t dimension() const = 0;

    virtual nlohmann::json to_json() const = 0;

    std::vector<int> predict_all(const Matrix& rows) const;

protected:
    void check_dimension(std::span<const double> features) const {
        if (features.size() != dimension()) {
            throw std::invalid_argument("feature dimension mismatch");
        }
    }
};

// Reconstructs any serialized model from its kind tag. Throws on unknown
// kinds or unsupported format versions.
std::unique_ptr<Classifier> classifier_from_json(const nlohmann::json& j);

inline constexpr int kModelFormatVersion = 1;

}  // namespace txident::ml
