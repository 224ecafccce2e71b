#include "txident/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "txident/parallel.hpp"
#include "txident/rng.hpp"
#include "txident/simulate.hpp"

namespace txident {

namespace {
constexpr uint64_t kClassStreamBase = 0x1000;
constexpr uint64_t kPoolStream = 0x11;
constexpr uint64_t kCaptureStreamBase = 0x100000;

constexpr const char* kCsvHeader =
    "C20,C21,C40,C41,C42,C60,C61,C62,C63,Modulation,TxAntennas";

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}
}  // namespace

LabeledDataset generate_dataset(int n_rx, double snr_db, int samples_per_class,
                                int n_symbols, uint64_t seed, int channel_pool) {
    if (samples_per_class < 1) throw std::invalid_argument("samples_per_class must be > 0");
    if (channel_pool < 0) throw std::invalid_argument("channel_pool must be >= 0");

    LabeledDataset ds;
    ds.meta = {n_rx, snr_db, samples_per_class, n_symbols, seed, channel_pool};
    ds.rows.resize(static_cast<size_t>(kNumClasses) * samples_per_class);

    // Per-class channel realization pools, drawn up front so that capture
    // generation stays embarrassingly parallel.
    std::vector<std::vector<ChannelMatrix>> pools(kNumClasses);
    for (int c = 0; c < kNumClasses; ++c) {
        const uint64_t class_seed = derive_seed(seed, kClassStreamBase + c);
        if (channel_pool > 0) {
            Rng pool_rng(derive_seed(class_seed, kPoolStream));
            pools[c].reserve(channel_pool);
            const int n_tx = kTxAntennaClasses[c % 3];
            for (int k = 0; k < channel_pool; ++k) {
                pools[c].push_back(draw_channel(n_rx, n_tx, pool_rng));
            }
        }
    }

    parallel_for(ds.rows.size(), [&](size_t idx) {
        const int c = static_cast<int>(idx) / samples_per_class;
        const int i = static_cast<int>(idx) % samples_per_class;
        const Modulation mod = kAllModulations[c / 3];
        const int n_tx = kTxAntennaClasses[c % 3];
        const uint64_t class_seed = derive_seed(seed, kClassStreamBase + c);

        TxConfig cfg;
        cfg.modulation = mod;
        cfg.n_tx = n_tx;
        cfg.n_rx = n_rx;
        cfg.snr_db = snr_db;
        cfg.n_symbols = n_symbols;
        cfg.seed = derive_seed(class_seed, kCaptureStreamBase + i);
        if (!pools[c].empty()) {
            cfg.channel_override = pools[c][i % pools[c].size()];
        }

        ds.rows[idx] = {extract_features(transmit(cfg)), mod, n_tx};
    });
    return ds;
}

std::pair<LabeledDataset, LabeledDataset> split(const LabeledDataset& ds,
                                                double train_fraction, uint64_t seed) {
    if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
        throw std::invalid_argument("train_fraction must be in (0, 1)");
    }

    // Bucket row indices per (modulation, n_tx) class.
    std::vector<std::vector<size_t>> buckets(kNumClasses);
    for (size_t i = 0; i < ds.rows.size(); ++i) {
        const auto& row = ds.rows[i];
        int t = 0;
        while (kTxAntennaClasses[t] != row.n_tx) {
            if (++t >= 3) throw std::invalid_argument("row with unknown n_tx label");
        }
        buckets[static_cast<int>(row.modulation) * 3 + t].push_back(i);
    }

    LabeledDataset train, test;
    train.meta = ds.meta;
    test.meta = ds.meta;
    for (int c = 0; c < kNumClasses; ++c) {
        auto& idx = buckets[c];
        if (idx.empty()) continue;
        Rng rng(derive_seed(seed, 0x5B17 + c));
        for (size_t i = idx.size() - 1; i > 0; --i) {
            std::swap(idx[i], idx[rng.uniform_below(i + 1)]);
        }
        const auto n_train =
            static_cast<size_t>(std::lround(train_fraction * static_cast<double>(idx.size())));
        if (n_train == 0 || n_train == idx.size()) {
            throw std::runtime_error("degenerate split: class with empty train or test side");
        }
        for (size_t i = 0; i < idx.size(); ++i) {
            (i < n_train ? train : test).rows.push_back(ds.rows[idx[i]]);
        }
    }
    return {std::move(train), std::move(test)};
}

void write_csv(const LabeledDataset& ds, const std::string& path) {
    std::ostringstream out;
    out << kCsvHeader << '\n';
    for (const auto& row : ds.rows) {
        for (double f : row.features) out << format_g17(f) << ',';
        out << modulation_name(row.modulation) << ',' << row.n_tx << '\n';
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open for writing: " + path);
    file << out.str();
    if (!file) throw std::runtime_error("write failed: " + path);
}

LabeledDataset read_csv(const std::string& path, DatasetMeta meta) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open for reading: " + path);

    std::string line;
    if (!std::getline(file, line)) throw std::runtime_error("empty file: " + path);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kCsvHeader) {
        throw std::runtime_error("schema mismatch in " + path + ": bad header");
    }

    LabeledDataset ds;
    ds.meta = meta;
    while (std::getline(file, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string field;
        LabeledRow row;
        for (int i = 0; i < kNumFeatures; ++i) {
            if (!std::getline(ss, field, ',')) {
                throw std::runtime_error("schema mismatch in " + path + ": short row");
            }
            size_t pos = 0;
            row.features[i] = std::stod(field, &pos);
            if (pos != field.size()) {
                throw std::runtime_error("schema mismatch in " + path + ": bad number");
            }
        }
        if (!std::getline(ss, field, ',')) {
            throw std::runtime_error("schema mismatch in " + path + ": missing label");
        }
        row.modulation = modulation_from_name(field);
        if (!std::getline(ss, field)) {
            throw std::runtime_error("schema mismatch in " + path + ": missing antennas");
        }
        row.n_tx = std::stoi(field);
        ds.rows.push_back(row);
    }
    return ds;
}

std::string dataset_filename(int n_rx, double snr_db) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "ds_nrx%d_snr%gdB.csv", n_rx, snr_db);
    return buf;
}

}  // namespace txident
