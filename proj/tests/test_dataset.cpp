#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <map>
#include <string>

#include "txident/dataset.hpp"

using namespace txident;

namespace {

std::string temp_path(const char* name) {
    return std::string("./") + name;
}

}  // namespace

TEST_CASE("generate_dataset: row counts, balance, determinism") {
    const auto tiny = generate_dataset(1, 10.0, 1, 64, 7);
    CHECK(tiny.rows.size() == 18);

    const auto ds = generate_dataset(2, 0.0, 4, 64, 7);
    CHECK(ds.rows.size() == 18 * 4);
    std::map<std::pair<int, int>, int> counts;
    for (const auto& row : ds.rows) {
        ++counts[{static_cast<int>(row.modulation), row.n_tx}];
    }
    CHECK(counts.size() == 18);
    for (const auto& [key, n] : counts) CHECK(n == 4);

    const auto again = generate_dataset(2, 0.0, 4, 64, 7);
    CHECK(ds == again);
    const auto other_seed = generate_dataset(2, 0.0, 4, 64, 8);
    CHECK(ds.rows != other_seed.rows);

    CHECK_THROWS_AS(generate_dataset(1, 0.0, 0, 64, 7), std::invalid_argument);
}

TEST_CASE("channel pool reuses realizations within a class") {
    // With a single pooled realization and no noise, long captures of the
    // same class converge to the same feature point; fresh draws do not.
    const double inf = std::numeric_limits<double>::infinity();
    const auto pooled = generate_dataset(1, inf, 2, 4096, 3, 1);
    const auto fresh = generate_dataset(1, inf, 2, 4096, 3, 0);
    int pooled_close = 0, fresh_close = 0;
    for (int c = 0; c < 18; ++c) {
        const auto& a = pooled.rows[2 * c].features;
        const auto& b = pooled.rows[2 * c + 1].features;
        const auto& u = fresh.rows[2 * c].features;
        const auto& v = fresh.rows[2 * c + 1].features;
        // compare the C21 coordinate (received power), the clearest channel print
        if (std::abs(a[1] - b[1]) < 0.05 * (a[1] + b[1])) ++pooled_close;
        if (std::abs(u[1] - v[1]) < 0.05 * (u[1] + v[1])) ++fresh_close;
    }
    CHECK(pooled_close == 18);
    CHECK(fresh_close < 18);
}

TEST_CASE("split: stratified, deterministic, disjoint") {
    const auto ds = generate_dataset(1, 5.0, 10, 64, 21);
    const auto [train, test] = split(ds, 0.6, 77);
    CHECK(train.rows.size() == 18 * 6);
    CHECK(test.rows.size() == 18 * 4);

    std::map<std::pair<int, int>, int> train_counts;
    for (const auto& row : train.rows) {
        ++train_counts[{static_cast<int>(row.modulation), row.n_tx}];
    }
    for (const auto& [key, n] : train_counts) CHECK(n == 6);

    // union equals the dataset, intersection empty (compare as multisets)
    auto as_multiset = [](const std::vector<LabeledRow>& rows) {
        std::multimap<double, const LabeledRow*> m;
        for (const auto& r : rows) m.emplace(r.features[0], &r);
        return m;
    };
    auto all = train.rows;
    all.insert(all.end(), test.rows.begin(), test.rows.end());
    CHECK(all.size() == ds.rows.size());
    const auto ms_all = as_multiset(all);
    const auto ms_ds = as_multiset(ds.rows);
    CHECK(ms_all.size() == ms_ds.size());
    for (auto it = ms_ds.begin(); it != ms_ds.end(); ++it) {
        CHECK(ms_all.count(it->first) == ms_ds.count(it->first));
    }

    const auto [train2, test2] = split(ds, 0.6, 77);
    CHECK(train.rows == train2.rows);
    CHECK(test.rows == test2.rows);

    const auto one = generate_dataset(1, 5.0, 1, 64, 3);
    CHECK_THROWS(split(one, 0.5, 1));
    CHECK_THROWS_AS(split(ds, 0.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(split(ds, 1.0, 1), std::invalid_argument);
}

TEST_CASE("csv header and round trip") {
    const auto ds = generate_dataset(1, -10.0, 1, 64, 13);
    const auto path = temp_path("ds_roundtrip_test.csv");
    write_csv(ds, path);

    std::ifstream f(path);
    std::string header;
    std::getline(f, header);
    CHECK(header == "C20,C21,C40,C41,C42,C60,C61,C62,C63,Modulation,TxAntennas");
    f.close();

    const auto back = read_csv(path, ds.meta);
    CHECK(back == ds);
    std::remove(path.c_str());
}

TEST_CASE("empty dataset writes a header-only file") {
    LabeledDataset empty;
    const auto path = temp_path("ds_empty_test.csv");
    write_csv(empty, path);
    std::ifstream f(path);
    std::string line;
    int lines = 0;
    while (std::getline(f, line)) ++lines;
    CHECK(lines == 1);
    f.close();
    std::remove(path.c_str());
}

TEST_CASE("csv schema errors") {
    const auto path = temp_path("ds_bad_test.csv");
    {
        std::ofstream f(path);
        f << "C20,C21,WRONG\n";
    }
    CHECK_THROWS(read_csv(path));
    {
        std::ofstream f(path);
        f << "C20,C21,C40,C41,C42,C60,C61,C62,C63,Modulation,TxAntennas\n";
        f << "1,2,3\n";
    }
    CHECK_THROWS(read_csv(path));
    std::remove(path.c_str());
    CHECK_THROWS(read_csv(temp_path("ds_does_not_exist.csv")));
}

TEST_CASE("dataset filenames") {
    CHECK(dataset_filename(1, -10.0) == "ds_nrx1_snr-10dB.csv");
    CHECK(dataset_filename(2, 2.5) == "ds_nrx2_snr2.5dB.csv");
}
