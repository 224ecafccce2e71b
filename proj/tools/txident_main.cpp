// txident: simulate MIMO digital transmissions, extract cumulant features,
// and train/evaluate modulation + antenna-count classifiers.
//
//   txident generate --n-rx 2 --snr -10 --snr 0 --out data/
//   txident run --pipeline hmc --classifier et --features polynomial --out results/
//   txident report results/*.csv --out merged.csv

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "txident/dataset.hpp"
#include "txident/parallel.hpp"
#include "txident/pipelines/evaluate.hpp"
#include "txident/rng.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace txident;

namespace {

struct ExperimentConfig {
    int n_rx = 1;
    std::vector<double> snr_db = {-10, -5, 0, 5, 10, 15, 20};
    int samples_per_class = 600;
    int n_symbols = 1024;
    int channel_pool = 10;
    std::string pipeline = "hmc";
    std::string classifier = "rf";
    std::string features = "cumulant";
    double train_fraction = 0.6;
    uint64_t seed = 42;
    std::string out = ".";
    int jobs = 1;
    // role-default hyperparameter overrides; -1 = keep the role default
    int knn_k = -1;
    int n_estimators = -1;
};

void apply_config_file(const std::string& path, ExperimentConfig& cfg) {
    std::ifstream f(path);
    if (!f) throw CLI::ValidationError("--config", "cannot open " + path);
    json j;
    f >> j;
    if (j.contains("n_rx")) cfg.n_rx = j["n_rx"].get<int>();
    if (j.contains("snr")) cfg.snr_db = j["snr"].get<std::vector<double>>();
    if (j.contains("samples_per_class")) cfg.samples_per_class = j["samples_per_class"].get<int>();
    if (j.contains("symbols")) cfg.n_symbols = j["symbols"].get<int>();
    if (j.contains("channel_pool")) cfg.channel_pool = j["channel_pool"].get<int>();
    if (j.contains("pipeline")) cfg.pipeline = j["pipeline"].get<std::string>();
    if (j.contains("classifier")) cfg.classifier = j["classifier"].get<std::string>();
    if (j.contains("features")) cfg.features = j["features"].get<std::string>();
    if (j.contains("split")) cfg.train_fraction = j["split"].get<double>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<uint64_t>();
    if (j.contains("out")) cfg.out = j["out"].get<std::string>();
    if (j.contains("jobs")) cfg.jobs = j["jobs"].get<int>();
    if (j.contains("knn_k")) cfg.knn_k = j["knn_k"].get<int>();
    if (j.contains("n_estimators")) cfg.n_estimators = j["n_estimators"].get<int>();
}

void attach_common_options(CLI::App* cmd, ExperimentConfig& cfg) {
    cmd->add_option("--config", "JSON config file (flags override file values)")
        ->check(CLI::ExistingFile);
    cmd->add_option("--n-rx", cfg.n_rx, "receive antennas")->check(CLI::Range(1, 8));
    cmd->add_option("--snr", cfg.snr_db, "SNR points in dB");
    cmd->add_option("--samples-per-class", cfg.samples_per_class, "captures per (modulation, n_tx) class");
    cmd->add_option("--symbols", cfg.n_symbols, "symbols per capture");
    cmd->add_option("--channel-pool", cfg.channel_pool,
                    "channel realizations per class (0 = fresh per capture)");
    cmd->add_option("--seed", cfg.seed, "master seed");
    cmd->add_option("--out", cfg.out, "output directory");
    cmd->add_option("--jobs", cfg.jobs, "sweep points run concurrently")->check(CLI::Range(1, 64));
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

std::string format_pct(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

// Writes atomically: full content to a temp file, then rename.
void write_file(const fs::path& path, const std::string& content) {
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open for writing: " + tmp.string());
        f << content;
        if (!f) throw std::runtime_error("write failed: " + tmp.string());
    }
    fs::rename(tmp, path);
}

LabeledDataset load_or_generate(const ExperimentConfig& cfg, double snr) {
    const fs::path path = fs::path(cfg.out) / dataset_filename(cfg.n_rx, snr);
    DatasetMeta meta{cfg.n_rx, snr, cfg.samples_per_class, cfg.n_symbols, cfg.seed,
                     cfg.channel_pool};
    if (fs::exists(path)) {
        return read_csv(path.string(), meta);
    }
    return generate_dataset(cfg.n_rx, snr, cfg.samples_per_class, cfg.n_symbols, cfg.seed,
                            cfg.channel_pool);
}

int cmd_generate(const ExperimentConfig& cfg) {
    fs::create_directories(cfg.out);
    for (double snr : cfg.snr_db) {
        const auto ds = generate_dataset(cfg.n_rx, snr, cfg.samples_per_class, cfg.n_symbols,
                                         cfg.seed, cfg.channel_pool);
        const fs::path path = fs::path(cfg.out) / dataset_filename(cfg.n_rx, snr);
        write_csv(ds, path.string());
        std::cout << path.string() << ": " << ds.rows.size() << " rows\n";
    }
    return 0;
}

ClassifierConfig resolve_classifier(const ExperimentConfig& cfg, PipelineRole role) {
    ClassifierConfig cc =
        default_classifier_config(classifier_kind_from_name(cfg.classifier), role);
    if (cfg.knn_k > 0) cc.knn_k = cfg.knn_k;
    if (cfg.n_estimators > 0) cc.n_estimators = cfg.n_estimators;
    return cc;
}

struct PointResult {
    double snr_db;
    double accuracy_pct;
    json detail;
};

json confusion_json(const AccuracyReport& report, bool modulation_labels) {
    json labels = json::array();
    for (int l : report.labels) {
        if (modulation_labels) {
            labels.push_back(modulation_name(static_cast<Modulation>(l)));
        } else {
            labels.push_back(l);
        }
    }
    return {{"labels", std::move(labels)},
            {"accuracy_pct", report.accuracy_pct},
            {"matrix", report.confusion}};
}

PointResult run_point(const ExperimentConfig& cfg, double snr) {
    const auto ds = load_or_generate(cfg, snr);
    const auto [train, test] = split(ds, cfg.train_fraction, derive_seed(cfg.seed, 0x517));
    const FeatureMode mode = feature_mode_from_name(cfg.features);
    const uint64_t fit_seed = derive_seed(cfg.seed, 0xF17);

    PointResult result;
    result.snr_db = snr;

    std::vector<int> truth_mod, truth_ant;
    for (const auto& row : test.rows) {
        truth_mod.push_back(static_cast<int>(row.modulation));
        truth_ant.push_back(row.n_tx);
    }

    if (cfg.pipeline == "hmc") {
        const auto cc = resolve_classifier(cfg, PipelineRole::Modulation);
        const auto hmc = HierarchicalModulationClassifier::fit(train, cc, mode, fit_seed);
        std::vector<int> pred;
        for (const auto& m : hmc.predict_all(test)) pred.push_back(static_cast<int>(m));
        const auto report = evaluate_labels(pred, truth_mod);
        result.accuracy_pct = report.accuracy_pct;
        result.detail = {{"modulation", confusion_json(report, true)}};
    } else if (cfg.pipeline == "uac") {
        const auto cc = resolve_classifier(cfg, PipelineRole::Antenna);
        const auto uac = fit_uac(train, cc, fit_seed);
        std::vector<int> pred;
        for (const auto& row : test.rows) pred.push_back(uac->predict(row.features));
        const auto report = evaluate_labels(pred, truth_ant);
        result.accuracy_pct = report.accuracy_pct;
        result.detail = {{"antennas", confusion_json(report, false)}};
    } else if (cfg.pipeline == "deac") {
        // Oracle routing: each test row goes to its true modulation's member.
        const auto cc = resolve_classifier(cfg, PipelineRole::Antenna);
        const auto bank = DedicatedBank::fit(train, cc, fit_seed);
        std::vector<int> pred;
        for (const auto& row : test.rows) {
            pred.push_back(bank.predict(row.modulation, row.features));
        }
        const auto report = evaluate_labels(pred, truth_ant);
        result.accuracy_pct = report.accuracy_pct;
        json per_mod = json::object();
        for (Modulation mod : kAllModulations) {
            std::vector<int> p, t;
            for (size_t i = 0; i < test.rows.size(); ++i) {
                if (test.rows[i].modulation != mod) continue;
                p.push_back(pred[i]);
                t.push_back(truth_ant[i]);
            }
            per_mod[modulation_name(mod)] = evaluate_labels(p, t).accuracy_pct;
        }
        result.detail = {{"antennas", confusion_json(report, false)},
                         {"per_modulation_accuracy_pct", std::move(per_mod)}};
    } else if (cfg.pipeline == "joint-parallel" || cfg.pipeline == "joint-sequential") {
        const auto cc = resolve_classifier(cfg, PipelineRole::Joint);
        const auto hmc = HierarchicalModulationClassifier::fit(train, cc, mode, fit_seed);
        std::vector<JointPrediction> preds;
        if (cfg.pipeline == "joint-parallel") {
            const auto uac = fit_uac(train, cc, derive_seed(fit_seed, 2));
            preds = joint_parallel(hmc, *uac, test);
        } else {
            const auto bank = DedicatedBank::fit(train, cc, derive_seed(fit_seed, 3));
            preds = joint_sequential(hmc, bank, test);
        }
        const auto report = evaluate_joint(preds, test);
        result.accuracy_pct = report.joint_accuracy_pct;
        result.detail = {{"joint_accuracy_pct", report.joint_accuracy_pct},
                         {"modulation", confusion_json(report.modulation, true)},
                         {"antennas", confusion_json(report.antennas, false)}};
    } else {
        throw CLI::ValidationError(
            "--pipeline", "unknown pipeline '" + cfg.pipeline +
                              "' (expected hmc|uac|deac|joint-parallel|joint-sequential)");
    }
    return result;
}

int cmd_run(const ExperimentConfig& cfg) {
    if (cfg.snr_db.empty()) throw CLI::ValidationError("--snr", "need at least one SNR point");
    resolve_classifier(cfg, PipelineRole::Modulation);      // validates the name
    (void)feature_mode_from_name(cfg.features);

    fs::create_directories(cfg.out);
    std::vector<PointResult> results(cfg.snr_db.size());
    parallel_for(
        cfg.snr_db.size(), [&](size_t i) { results[i] = run_point(cfg, cfg.snr_db[i]); },
        static_cast<unsigned>(cfg.jobs));

    const std::string tag = cfg.pipeline + "_" + cfg.classifier + "_" + cfg.features +
                            "_nrx" + std::to_string(cfg.n_rx);
    std::ostringstream csv;
    csv << "pipeline,classifier,feature_mode,n_rx,snr_db,accuracy_pct,seed\n";
    for (const auto& r : results) {
        json j = {{"pipeline", cfg.pipeline},
                  {"classifier", cfg.classifier},
                  {"feature_mode", cfg.features},
                  {"n_rx", cfg.n_rx},
                  {"snr_db", r.snr_db},
                  {"samples_per_class", cfg.samples_per_class},
                  {"symbols", cfg.n_symbols},
                  {"channel_pool", cfg.channel_pool},
                  {"train_fraction", cfg.train_fraction},
                  {"seed", cfg.seed},
                  {"accuracy_pct", r.accuracy_pct},
                  {"detail", r.detail}};
        const fs::path jpath =
            fs::path(cfg.out) / ("run_" + tag + "_snr" + format_double(r.snr_db) + "dB.json");
        write_file(jpath, j.dump(2) + "\n");

        csv << cfg.pipeline << ',' << cfg.classifier << ',' << cfg.features << ','
            << cfg.n_rx << ',' << format_double(r.snr_db) << ',' << format_pct(r.accuracy_pct)
            << ',' << cfg.seed << '\n';
        std::cout << tag << " snr=" << format_double(r.snr_db)
                  << "dB accuracy=" << format_pct(r.accuracy_pct) << "%\n";
    }
    write_file(fs::path(cfg.out) / ("results_" + tag + ".csv"), csv.str());
    return 0;
}

int cmd_report(const std::vector<std::string>& inputs, const std::string& out) {
    if (inputs.empty()) throw CLI::ValidationError("files", "no result files given");

    const std::string header = "pipeline,classifier,feature_mode,n_rx,snr_db,accuracy_pct,seed";
    struct Row {
        std::string pipeline, classifier, features, n_rx, snr, acc, seed;
    };
    std::vector<Row> rows;
    for (const auto& path : inputs) {
        std::ifstream f(path);
        if (!f) throw std::runtime_error("cannot open " + path);
        std::string line;
        if (!std::getline(f, line) || line != header) {
            throw std::runtime_error("schema mismatch in " + path);
        }
        while (std::getline(f, line)) {
            if (line.empty()) continue;
            std::stringstream ss(line);
            Row r;
            std::getline(ss, r.pipeline, ',');
            std::getline(ss, r.classifier, ',');
            std::getline(ss, r.features, ',');
            std::getline(ss, r.n_rx, ',');
            std::getline(ss, r.snr, ',');
            std::getline(ss, r.acc, ',');
            if (!std::getline(ss, r.seed)) throw std::runtime_error("schema mismatch in " + path);
            rows.push_back(std::move(r));
        }
    }

    // Pivot: one table row per configuration, one column per SNR.
    std::vector<double> snrs;
    for (const auto& r : rows) snrs.push_back(std::stod(r.snr));
    std::sort(snrs.begin(), snrs.end());
    snrs.erase(std::unique(snrs.begin(), snrs.end()), snrs.end());

    std::map<std::string, std::map<double, std::string>> pivot;
    for (const auto& r : rows) {
        const std::string key =
            r.pipeline + " / " + r.classifier + " (" + r.features + ") nrx=" + r.n_rx;
        pivot[key][std::stod(r.snr)] = r.acc;
    }

    std::ostringstream table;
    table << "configuration";
    for (double s : snrs) table << '\t' << format_double(s) << "dB";
    table << '\n';
    for (const auto& [key, by_snr] : pivot) {
        table << key;
        for (double s : snrs) {
            const auto it = by_snr.find(s);
            table << '\t' << (it == by_snr.end() ? "-" : it->second);
        }
        table << '\n';
    }
    std::cout << table.str();
    std::cout << rows.size() << " result rows from " << inputs.size() << " files\n";

    if (!out.empty()) {
        std::ostringstream merged;
        merged << header << '\n';
        for (const auto& r : rows) {
            merged << r.pipeline << ',' << r.classifier << ',' << r.features << ',' << r.n_rx
                   << ',' << r.snr << ',' << r.acc << ',' << r.seed << '\n';
        }
        write_file(out, merged.str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MIMO modulation and Tx-antenna classification toolkit"};
    app.require_subcommand(1);

    ExperimentConfig cfg;
    // Config file values load first so that explicit flags override them.
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--config") {
            try {
                apply_config_file(argv[i + 1], cfg);
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << '\n';
                return 1;
            }
        }
    }

    auto* generate = app.add_subcommand("generate", "write labeled feature datasets");
    attach_common_options(generate, cfg);

    auto* run = app.add_subcommand("run", "train and evaluate a pipeline over an SNR sweep");
    attach_common_options(run, cfg);
    run->add_option("--pipeline", cfg.pipeline,
                    "hmc|uac|deac|joint-parallel|joint-sequential");
    run->add_option("--classifier", cfg.classifier, "knn|rf|et|adaboost|polyls");
    run->add_option("--features", cfg.features, "cumulant|polynomial (modulation stages)");
    run->add_option("--split", cfg.train_fraction, "train fraction")
        ->check(CLI::Range(0.01, 0.99));
    run->add_option("--knn-k", cfg.knn_k, "override the role default k");
    run->add_option("--n-estimators", cfg.n_estimators, "override the role default count");

    std::vector<std::string> report_inputs;
    std::string report_out;
    auto* report = app.add_subcommand("report", "merge result CSVs into one table");
    report->add_option("files", report_inputs, "results_*.csv files");
    report->add_option("--out", report_out, "write the merged CSV here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed()) return cmd_generate(cfg);
        if (run->parsed()) return cmd_run(cfg);
        return cmd_report(report_inputs, report_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
