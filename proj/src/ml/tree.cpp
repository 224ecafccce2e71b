#include "txident/ml/tree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "txident/rng.hpp"

namespace txident::ml {

namespace {

double gini(const std::vector<double>& class_weights, double total) {
    if (total <= 0.0) return 0.0;
    double sum_sq = 0.0;
    for (double w : class_weights) sum_sq += w * w;
    return 1.0 - sum_sq / (total * total);
}

}  // namespace

struct TreeBuilder {
    const Matrix& x;
    const std::vector<int>& yi;           // labels remapped to [0, K)
    std::span<const double> w;
    const TreeParams& params;
    int n_classes;
    Rng rng;

    std::vector<DecisionTree::Node>& nodes;
    std::vector<size_t> idx;              // sample indices, partitioned in place
    std::vector<int> feature_scratch;
    std::vector<std::pair<double, size_t>> sort_scratch;

    struct Split {
        bool found = false;
        int feature = -1;
        double threshold = 0.0;
        double score = 0.0;   // weighted child impurity; lower is better
    };

    int build(size_t lo, size_t hi, int depth) {
        std::vector<double> counts(n_classes, 0.0);
        double total = 0.0;
        for (size_t i = lo; i < hi; ++i) {
            counts[yi[idx[i]]] += w[idx[i]];
            total += w[idx[i]];
        }
        int majority = 0;
        for (int k = 1; k < n_classes; ++k) {
            if (counts[k] > counts[majority]) majority = k;
        }
        const double node_gini = gini(counts, total);

        const int node_id = static_cast<int>(nodes.size());
        nodes.emplace_back();
        nodes[node_id].label = majority;

        const bool depth_ok = params.max_depth < 0 || depth < params.max_depth;
        if (node_gini <= 0.0 || hi - lo < 2 || !depth_ok) return node_id;

        const Split split = find_split(lo, hi, total, node_gini);
        if (!split.found) return node_id;

        const auto mid = std::stable_partition(
            idx.begin() + lo, idx.begin() + hi,
            [&](size_t s) { return x.at(s, split.feature) <= split.threshold; });
        const size_t cut = static_cast<size_t>(mid - idx.begin());

        nodes[node_id].feature = split.feature;
        nodes[node_id].threshold = split.threshold;
        const int left = build(lo, cut, depth + 1);
        const int right = build(cut, hi, depth + 1);
        nodes[node_id].left = left;
        nodes[node_id].right = right;
        return node_id;
    }

    Split find_split(size_t lo, size_t hi, double total, double node_gini) {
        const int d = static_cast<int>(x.cols());
        int n_candidates = params.feature_subsample;
        if (n_candidates < 1 || n_candidates > d) n_candidates = d;

        feature_scratch.resize(d);
        std::iota(feature_scratch.begin(), feature_scratch.end(), 0);
        for (int i = 0; i < n_candidates; ++i) {
            const auto j = i + rng.uniform_below(d - i);
            std::swap(feature_scratch[i], feature_scratch[j]);
        }

        Split best;
        best.score = node_gini;  // a split must improve on the parent
        for (int c = 0; c < n_candidates; ++c) {
            const int f = feature_scratch[c];
            if (params.random_threshold) {
                consider_random_threshold(f, lo, hi, total, best);
            } else {
                consider_all_thresholds(f, lo, hi, total, best);
            }
        }
        return best;
    }

    // RF-style: scan midpoints between adjacent distinct sorted values.
    void consider_all_thresholds(int f, size_t lo, size_t hi, double total, Split& best) {
        sort_scratch.clear();
        for (size_t i = lo; i < hi; ++i) {
            sort_scratch.emplace_back(x.at(idx[i], f), idx[i]);
        }
        std::sort(sort_scratch.begin(), sort_scratch.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });

        std::vector<double> left_counts(n_classes, 0.0);
        std::vector<double> right_counts(n_classes, 0.0);
        for (size_t i = lo; i < hi; ++i) right_counts[yi[idx[i]]] += w[idx[i]];

        double left_total = 0.0;
        for (size_t i = 0; i + 1 < sort_scratch.size(); ++i) {
            const auto& [value, sample] = sort_scratch[i];
            left_counts[yi[sample]] += w[sample];
            right_counts[yi[sample]] -= w[sample];
            left_total += w[sample];
            const double next = sort_scratch[i + 1].first;
            if (!(value < next)) continue;
            const double right_total = total - left_total;
            const double score = (left_total * gini(left_counts, left_total) +
                                  right_total * gini(right_counts, right_total)) /
                                 total;
            if (score < best.score) {
                double thr = value + (next - value) / 2.0;
                if (!(thr < next)) thr = value;  // fp midpoint collapse
                best = {true, f, thr, score};
            }
        }
    }

    // ET-style: one uniform threshold in [min, max).
    void consider_random_threshold(int f, size_t lo, size_t hi, double total, Split& best) {
        double v_min = x.at(idx[lo], f), v_max = v_min;
        for (size_t i = lo + 1; i < hi; ++i) {
            const double v = x.at(idx[i], f);
            v_min = std::min(v_min, v);
            v_max = std::max(v_max, v);
        }
        if (!(v_min < v_max)) return;
        const double thr = v_min + rng.uniform01() * (v_max - v_min);

        std::vector<double> left_counts(n_classes, 0.0);
        double left_total = 0.0;
        for (size_t i = lo; i < hi; ++i) {
            if (x.at(idx[i], f) <= thr) {
                left_counts[yi[idx[i]]] += w[idx[i]];
                left_total += w[idx[i]];
            }
        }
        std::vector<double> right_counts(n_classes, 0.0);
        {
            std::vector<double> all(n_classes, 0.0);
            for (size_t i = lo; i < hi; ++i) all[yi[idx[i]]] += w[idx[i]];
            for (int k = 0; k < n_classes; ++k) right_counts[k] = all[k] - left_counts[k];
        }
        const double right_total = total - left_total;
        const double score = (left_total * gini(left_counts, left_total) +
                              right_total * gini(right_counts, right_total)) /
                             total;
        if (score < best.score) best = {true, f, thr, score};
    }
};

DecisionTree::DecisionTree(const TrainingSet& ts, const TreeParams& params, uint64_t seed,
                           std::span<const double> sample_weights) {
    ts.validate();
    if (!sample_weights.empty() && sample_weights.size() != ts.y.size()) {
        throw std::invalid_argument("sample weight count mismatch");
    }
    dim_ = ts.x.cols();
    classes_ = label_vocabulary(ts.y);

    std::vector<int> yi(ts.y.size());
    for (size_t i = 0; i < ts.y.size(); ++i) {
        yi[i] = static_cast<int>(
            std::lower_bound(classes_.begin(), classes_.end(), ts.y[i]) - classes_.begin());
    }
    std::vector<double> uniform;
    if (sample_weights.empty()) {
        uniform.assign(ts.y.size(), 1.0);
        sample_weights = uniform;
    }

    TreeBuilder builder{ts.x,   yi,    sample_weights, params, static_cast<int>(classes_.size()),
                        Rng(seed), nodes_, {},          {},     {}};
    builder.idx.resize(ts.y.size());
    std::iota(builder.idx.begin(), builder.idx.end(), size_t{0});
    builder.build(0, builder.idx.size(), 0);
}

int DecisionTree::predict(std::span<const double> features) const {
    check_dimension(features);
    int node = 0;
    while (nodes_[node].feature >= 0) {
        node = features[nodes_[node].feature] <= nodes_[node].threshold
                   ? nodes_[node].left
                   : nodes_[node].right;
    }
    return classes_[nodes_[node].label];
}

int DecisionTree::depth() const {
    // Iterative depth over the implicit tree.
    std::vector<std::pair<int, int>> stack{{0, 0}};
    int depth = 0;
    while (!stack.empty()) {
        auto [node, d] = stack.back();
        stack.pop_back();
        depth = std::max(depth, d);
        if (nodes_[node].feature >= 0) {
            stack.push_back({nodes_[node].left, d + 1});
            stack.push_back({nodes_[node].right, d + 1});
        }
    }
    return depth;
}

nlohmann::json DecisionTree::to_json() const {
    nlohmann::json n = nlohmann::json::array();
    for (const auto& node : nodes_) {
        n.push_back({node.feature, node.threshold, node.left, node.right, node.label});
    }
    return {
        {"format_version", kModelFormatVersion},
        {"kind", "tree"},
        {"classes", classes_},
        {"dim", dim_},
        {"nodes", std::move(n)},
    };
}

std::unique_ptr<DecisionTree> DecisionTree::from_json(const nlohmann::json& j) {
    auto tree = std::unique_ptr<DecisionTree>(new DecisionTree());
    tree->classes_ = j.at("classes").get<std::vector<int>>();
    tree->dim_ = j.at("dim").get<size_t>();
    for (const auto& n : j.at("nodes")) {
        Node node;
        node.feature = n.at(0).get<int>();
        node.threshold = n.at(1).get<double>();
        node.left = n.at(2).get<int>();
        node.right = n.at(3).get<int>();
        node.label = n.at(4).get<int>();
        tree->nodes_.push_back(node);
    }
    return tree;
}

}  // namespace txident::ml
