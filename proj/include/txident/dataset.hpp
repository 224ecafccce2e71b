#pragma once

#include <string>
#include <utility>
#include <vector>

#include "txident/cumulants.hpp"
#include "txident/modulation.hpp"

namespace txident {

inline constexpr int kTxAntennaClasses[] = {1, 2, 4};
inline constexpr int kNumClasses = kNumModulations * 3;  // 18 (modulation, n_tx) pairs

struct LabeledRow {
    FeatureVector features{};
    Modulation modulation = Modulation::BPSK;
    int n_tx = 1;

    bool operator==(const LabeledRow&) const = default;
};

struct DatasetMeta {
    int n_rx = 1;
    double snr_db = 20.0;
    int samples_per_class = 600;
    int n_symbols = 1024;
    uint64_t seed = 0;
    int channel_pool = 10;   // channel realizations per class; 0 = fresh per capture

    bool operator==(const DatasetMeta&) const = default;
};

struct LabeledDataset {
    std::vector<LabeledRow> rows;
    DatasetMeta meta;

    bool operator==(const LabeledDataset&) const = default;
};

// Generates samples_per_class captures for each of the 18 (modulation, n_tx)
// classes at the given receiver configuration and SNR, extracting one feature
// row per capture. Each class cycles through a pool of `channel_pool`
// quasi-static channel realizations (capture i uses pool[i % channel_pool]);
// a pool size of 0 draws a fresh realization per capture. Deterministic in
// `seed` and independent of thread count.
LabeledDataset generate_dataset(int n_rx, double snr_db, int samples_per_class,
                                int n_symbols, uint64_t seed, int channel_pool = 10);

// Stratified split: each (modulation, n_tx) class is shuffled and cut at
// train_fraction independently. Throws if any class would end up with an
// empty train or test side.
std::pair<LabeledDataset, LabeledDataset> split(const LabeledDataset& ds,
                                                double train_fraction, uint64_t seed);

// Table-format CSV with header
//   C20,...,C63,Modulation,TxAntennas
// Floats are written with 17 significant digits so that
// read_csv(write_csv(ds), ds.meta) == ds. The CSV carries only the table;
// metadata travels with the caller (filename / experiment config).
void write_csv(const LabeledDataset& ds, const std::string& path);
LabeledDataset read_csv(const std::string& path, DatasetMeta meta = {});

// Canonical file name for a generated dataset: ds_nrx{R}_snr{S}dB.csv.
std::string dataset_filename(int n_rx, double snr_db);

}  // namespace txident
