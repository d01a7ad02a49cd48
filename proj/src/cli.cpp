#include "ytcc/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ytcc/csv.hpp"
#include "ytcc/errors.hpp"
#include "ytcc/eval.hpp"
#include "ytcc/ingest.hpp"
#include "ytcc/resources.hpp"

namespace ytcc {
namespace {

namespace fs = std::filesystem;

// ------------------------------------------------------------- helpers

FileFormat detect_format(const std::string& path, const std::string& flag) {
    if (flag == "csv") return FileFormat::Csv;
    if (flag == "jsonl") return FileFormat::Jsonl;
    if (path.size() >= 6 && path.substr(path.size() - 6) == ".jsonl") return FileFormat::Jsonl;
    return FileFormat::Csv;
}

HParamValue parse_hparam_value(const std::string& text) {
    if (text == "true") return true;
    if (text == "false") return false;
    try {
        std::size_t used = 0;
        const long long i = std::stoll(text, &used);
        if (used == text.size()) return static_cast<std::int64_t>(i);
    } catch (const std::exception&) {
    }
    try {
        std::size_t used = 0;
        const double d = std::stod(text, &used);
        if (used == text.size()) return d;
    } catch (const std::exception&) {
    }
    return text;
}

void apply_hparam_overrides(EstimatorSpec& spec, const std::vector<std::string>& overrides) {
    for (const std::string& kv : overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw SchemaError("--hp expects name=value, got \"" + kv + "\"");
        }
        spec.hparams.set(kv.substr(0, eq), parse_hparam_value(kv.substr(eq + 1)));
    }
}

void save_spec(const EstimatorSpec& spec, const std::string& path) {
    nlohmann::json j = nlohmann::json::parse(spec_to_string(spec));
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << j.dump(2) << '\n';
}

EstimatorSpec load_spec(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    EstimatorSpec spec;
    const auto kind = parse_estimator_kind(j.at("kind").get<std::string>());
    if (!kind) throw ParseError(path + ": unknown estimator kind");
    spec.kind = *kind;
    for (const auto& [name, value] : j.at("hyperparameters").items()) {
        if (value.is_boolean()) spec.hparams.set(name, value.get<bool>());
        else if (value.is_number_integer()) spec.hparams.set(name, value.get<std::int64_t>());
        else if (value.is_number_float()) spec.hparams.set(name, value.get<double>());
        else spec.hparams.set(name, value.get<std::string>());
    }
    if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
    return spec;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << content;
    if (!out) throw IoError("write failed: " + path);
}

std::string format_double(double v) {
    std::ostringstream ss;
    ss.precision(6);
    ss << v;
    return ss.str();
}

// Per-class rows: model,scheme,class,precision,recall,f1,support
std::string per_class_csv(const EvaluationReport& report) {
    std::string out = "model,scheme,class,precision,recall,f1,support\n";
    for (int k = 0; k < kNumClasses; ++k) {
        const ClassMetrics& cm = report.per_class[static_cast<std::size_t>(k)];
        out += csv::join_row({to_string(report.spec.kind), to_string(report.scheme),
                              to_string(static_cast<CommentClass>(k)), format_double(cm.precision),
                              format_double(cm.recall), format_double(cm.f1),
                              std::to_string(cm.support)});
    }
    return out;
}

std::string learning_curve_csv(const std::vector<const EvaluationReport*>& reports) {
    std::string out = "model,scheme,train_size,accuracy\n";
    for (const EvaluationReport* report : reports) {
        for (const auto& point : report->learning_curve) {
            out += csv::join_row({to_string(report->spec.kind), to_string(report->scheme),
                                  format_double(point.train_size),
                                  std::isnan(point.accuracy) ? "" : format_double(point.accuracy)});
        }
    }
    return out;
}

// ------------------------------------------------------------------ svg

std::string svg_header(int width, int height) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
           " " + std::to_string(height) + "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

const char* kSvgColors[] = {"#4c78a8", "#f58518", "#54a24b", "#e45756", "#72b7b2", "#b279a2"};

std::string render_bar_chart_svg(const std::vector<std::pair<std::string, double>>& bars,
                                 const std::string& title) {
    const int width = 640, height = 360, margin = 60;
    std::string svg = svg_header(width, height);
    svg += "<text x=\"20\" y=\"24\" font-size=\"16\">" + title + "</text>\n";
    if (!bars.empty()) {
        const double plot_w = width - 2.0 * margin;
        const double plot_h = height - 2.0 * margin;
        const double bar_w = plot_w / static_cast<double>(bars.size());
        for (std::size_t i = 0; i < bars.size(); ++i) {
            const double h = std::max(0.0, std::min(1.0, bars[i].second)) * plot_h;
            const double x = margin + static_cast<double>(i) * bar_w + 4;
            const double y = height - margin - h;
            svg += "<rect x=\"" + format_double(x) + "\" y=\"" + format_double(y) + "\" width=\"" +
                   format_double(bar_w - 8) + "\" height=\"" + format_double(h) + "\" fill=\"" +
                   kSvgColors[i % 6] + "\"/>\n";
            svg += "<text x=\"" + format_double(x) + "\" y=\"" + format_double(height - margin + 16) +
                   "\" font-size=\"10\">" + bars[i].first + "</text>\n";
            svg += "<text x=\"" + format_double(x) + "\" y=\"" + format_double(y - 4) +
                   "\" font-size=\"10\">" + format_double(bars[i].second) + "</text>\n";
        }
    }
    svg += "</svg>\n";
    return svg;
}

std::string render_curves_svg(
    const std::vector<std::pair<std::string, std::vector<std::pair<double, double>>>>& series,
    const std::string& title) {
    const int width = 640, height = 360, margin = 60;
    std::string svg = svg_header(width, height);
    svg += "<text x=\"20\" y=\"24\" font-size=\"16\">" + title + "</text>\n";
    const double plot_w = width - 2.0 * margin;
    const double plot_h = height - 2.0 * margin;
    for (std::size_t s = 0; s < series.size(); ++s) {
        std::string points;
        for (const auto& [x, y] : series[s].second) {
            const double px = margin + x * plot_w;
            const double py = height - margin - std::max(0.0, std::min(1.0, y)) * plot_h;
            points += format_double(px) + "," + format_double(py) + " ";
        }
        svg += "<polyline fill=\"none\" stroke=\"" + std::string(kSvgColors[s % 6]) +
               "\" stroke-width=\"2\" points=\"" + points + "\"/>\n";
        svg += "<text x=\"" + format_double(width - margin + 4) + "\" y=\"" +
               format_double(40.0 + 14.0 * static_cast<double>(s)) + "\" font-size=\"10\" fill=\"" +
               kSvgColors[s % 6] + "\">" + series[s].first + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

// --------------------------------------------------------------- options

struct CommonOptions {
    std::string out_dir = ".";
    std::uint64_t seed = 0;
    std::string scheme = "df";
    std::vector<std::string> disabled_steps;
    std::string resources_dir;
    int min_df = 5;
    double max_df = 0.5;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--out-dir", opts.out_dir, "Output directory (created if missing)");
    cmd->add_option("--seed", opts.seed, "Seed for split/CV/estimator randomness");
    cmd->add_option("--scheme", opts.scheme, "Feature scheme: df or tfidf")
        ->check(CLI::IsMember({"df", "df_counts", "tfidf"}));
    cmd->add_option("--disable-step", opts.disabled_steps,
                    "Disable a preprocessing step (repeatable); one of: lowercase, remove_urls, "
                    "remove_newlines, remove_punctuation, remove_integers, remove_emojis, "
                    "spell_correction, lemmatize, remove_stopwords");
    cmd->add_option("--resources", opts.resources_dir,
                    "Resource directory (default: YTCC_RESOURCES or the bundled resources/)");
    cmd->add_option("--min-df", opts.min_df,
                    "Terms in at most this many documents are dropped (strict filter)");
    cmd->add_option("--max-df", opts.max_df, "Terms above this document fraction are dropped");
}

PipelineConfig build_pipeline(const CommonOptions& opts) {
    PipelineConfig config = opts.resources_dir.empty() ? default_pipeline_config()
                                                       : default_pipeline_config(opts.resources_dir);
    for (const std::string& step : opts.disabled_steps) {
        if (!disable_step(config, step)) {
            throw SchemaError("unknown pipeline step \"" + step + "\"");
        }
    }
    for (const std::string& warning : config_warnings(config)) {
        std::cerr << "warning: " << warning << '\n';
    }
    return config;
}

Scheme scheme_of(const CommonOptions& opts) {
    return *parse_scheme(opts.scheme == "df" ? "df_counts" : opts.scheme);
}

VectorizerConfig build_vectorizer_config(const CommonOptions& opts) {
    VectorizerConfig vconfig = VectorizerConfig::defaults(scheme_of(opts));
    vconfig.min_df_count = opts.min_df;
    vconfig.max_df_fraction = opts.max_df;
    return vconfig;
}

void ensure_out_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create directory " + dir + ": " + ec.message());
}

std::string join_path(const std::string& dir, const std::string& name) {
    return (fs::path(dir) / name).string();
}

int map_exception_to_exit(const std::exception& e) {
    if (dynamic_cast<const CredentialError*>(&e)) return kExitAuth;
    if (dynamic_cast<const QuotaError*>(&e)) return kExitAuth;
    if (dynamic_cast<const FingerprintError*>(&e)) return kExitFingerprint;
    if (dynamic_cast<const IoError*>(&e)) return kExitIo;
    if (dynamic_cast<const ParseError*>(&e)) return kExitSchema;
    if (dynamic_cast<const VersionError*>(&e)) return kExitSchema;
    if (dynamic_cast<const SchemaError*>(&e)) return kExitSchema;
    return kExitUsage;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"YouTube comment classifier: six-way sentiment/sentence-type categorization"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from a config/manifest file");
    app.allow_config_extras(CLI::config_extras_mode::ignore_all);

    // ---- fetch ----
    auto* fetch_cmd = app.add_subcommand("fetch", "Fetch top-level comments via the YouTube Data API");
    std::vector<std::string> fetch_videos;
    int fetch_max = 1000;
    int fetch_page_size = 100;
    std::string fetch_out = "raw_comments.jsonl";
    std::string fetch_api_key;
    fetch_cmd->add_option("--video", fetch_videos, "Video id (repeatable)")->required();
    fetch_cmd->add_option("--max", fetch_max, "Maximum comments per video");
    fetch_cmd->add_option("--page-size", fetch_page_size, "Page size, 1..100");
    fetch_cmd->add_option("--out", fetch_out, "Output JSONL path");
    fetch_cmd->add_option("--api-key", fetch_api_key, "API key (falls back to $YT_API_KEY)");

    // ---- train ----
    auto* train_cmd = app.add_subcommand("train", "Split, preprocess, fit and evaluate one model");
    CommonOptions train_opts;
    std::string train_data, train_format = "auto", train_model, train_spec_file;
    double train_fraction = 0.8;
    int train_folds = 5;
    bool train_stratified = false;
    bool train_curve = false;
    std::vector<double> curve_sizes = {0.2, 0.4, 0.6, 0.8, 1.0};
    std::vector<std::string> train_hp;
    add_common(train_cmd, train_opts);
    train_cmd->add_option("--data", train_data, "Labeled dataset (csv or jsonl)")->required();
    train_cmd->add_option("--format", train_format, "Dataset format")
        ->check(CLI::IsMember({"auto", "csv", "jsonl"}));
    train_cmd->add_option("--model", train_model,
                          "Estimator kind: linear_svc, logistic_regression, multinomial_nb, "
                          "random_forest, decision_tree");
    train_cmd->add_option("--spec", train_spec_file, "Estimator spec JSON (e.g. from tune)");
    train_cmd->add_option("--train-fraction", train_fraction, "Training fraction of the split");
    train_cmd->add_option("--folds", train_folds, "Cross-validation folds");
    train_cmd->add_flag("--stratified", train_stratified, "Stratify the train/test split");
    train_cmd->add_flag("--learning-curve", train_curve, "Also compute a learning curve");
    train_cmd->add_option("--curve-sizes", curve_sizes, "Learning-curve training fractions");
    train_cmd->add_option("--hp", train_hp, "Hyperparameter override name=value (repeatable)");

    // ---- tune ----
    auto* tune_cmd = app.add_subcommand("tune", "Grid-search hyperparameters with cross-validation");
    CommonOptions tune_opts;
    std::string tune_data, tune_format = "auto", tune_model;
    double tune_fraction = 0.8;
    int tune_folds = 5;
    bool tune_stratified = false;
    add_common(tune_cmd, tune_opts);
    tune_cmd->add_option("--data", tune_data, "Labeled dataset (csv or jsonl)")->required();
    tune_cmd->add_option("--format", tune_format, "Dataset format")
        ->check(CLI::IsMember({"auto", "csv", "jsonl"}));
    tune_cmd->add_option("--model", tune_model, "Estimator kind")->required();
    tune_cmd->add_option("--train-fraction", tune_fraction, "Training fraction of the split");
    tune_cmd->add_option("--folds", tune_folds, "Cross-validation folds");
    tune_cmd->add_flag("--stratified", tune_stratified, "Stratify the train/test split");

    // ---- predict ----
    auto* predict_cmd = app.add_subcommand("predict", "Categorize unlabeled comments with a model");
    CommonOptions predict_opts;
    std::string predict_model, predict_vocab, predict_data, predict_format = "auto";
    add_common(predict_cmd, predict_opts);
    predict_cmd->add_option("--model", predict_model, "Model JSON file")->required();
    predict_cmd->add_option("--vocab", predict_vocab, "Vectorizer/vocabulary JSON file")->required();
    predict_cmd->add_option("--data", predict_data, "Comments file (csv or jsonl)")->required();
    predict_cmd->add_option("--format", predict_format, "Input format")
        ->check(CLI::IsMember({"auto", "csv", "jsonl"}));

    // ---- report ----
    auto* report_cmd = app.add_subcommand("report", "Aggregate report JSONs into comparison tables");
    CommonOptions report_opts;
    std::vector<std::string> report_files;
    bool report_svg = false;
    add_common(report_cmd, report_opts);
    report_cmd->add_option("--reports", report_files, "Report JSON files")->required();
    report_cmd->add_flag("--svg", report_svg, "Also render SVG charts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        // ---------------------------------------------------------- fetch
        if (fetch_cmd->parsed()) {
            if (fetch_api_key.empty()) {
                if (const char* env = std::getenv("YT_API_KEY"); env && *env) fetch_api_key = env;
            }
            if (fetch_api_key.empty()) {
                throw CredentialError("no API key: pass --api-key or set YT_API_KEY");
            }
            FetchConfig config;
            config.api_key = fetch_api_key;
            config.video_ids = fetch_videos;
            config.max_comments_per_video = fetch_max;
            config.page_size = fetch_page_size;
            auto transport = make_https_transport();
            const FetchResult result = fetch_comments(config, *transport);
            save_raw(result.comments, fetch_out);
            for (const auto& warning : result.warnings) {
                std::cerr << "warning: video " << warning.video_id << ": " << warning.message << '\n';
            }
            std::map<std::string, std::size_t> per_video;
            for (const auto& comment : result.comments) per_video[comment.video_id.value_or("?")]++;
            for (const auto& [video, count] : per_video) {
                std::cout << video << ": " << count << " comments\n";
            }
            std::cout << "wrote " << result.comments.size() << " comments to " << fetch_out << '\n';
            return kExitOk;
        }

        // ---------------------------------------------------------- train
        if (train_cmd->parsed()) {
            if (train_model.empty() && train_spec_file.empty()) {
                throw SchemaError("train needs --model or --spec");
            }
            ensure_out_dir(train_opts.out_dir);
            const Scheme scheme = scheme_of(train_opts);
            EstimatorSpec spec;
            if (!train_spec_file.empty()) {
                spec = load_spec(train_spec_file);
                if (!train_model.empty()) {
                    const auto kind = parse_estimator_kind(train_model);
                    if (!kind) throw SchemaError("unknown model \"" + train_model + "\"");
                    spec.kind = *kind;
                }
            } else {
                const auto kind = parse_estimator_kind(train_model);
                if (!kind) throw SchemaError("unknown model \"" + train_model + "\"");
                spec = default_spec(*kind, scheme);
            }
            apply_hparam_overrides(spec, train_hp);
            spec.seed = train_opts.seed;
            validate_spec(spec);

            const Dataset dataset = load_dataset(train_data, detect_format(train_data, train_format));
            SplitSpec split_spec;
            split_spec.train_fraction = train_fraction;
            split_spec.seed = train_opts.seed;
            split_spec.stratified = train_stratified;
            const auto [train_set, test_set] = split(dataset, split_spec);

            const PipelineConfig pipeline = build_pipeline(train_opts);
            const VectorizerConfig vconfig = build_vectorizer_config(train_opts);
            CVConfig cv;
            cv.folds = train_folds;
            cv.seed = train_opts.seed;

            const TrainOutcome outcome =
                train_and_evaluate(spec, train_set, test_set, pipeline, vconfig, cv,
                                   train_curve ? curve_sizes : std::vector<double>{});

            save_model(outcome.model, join_path(train_opts.out_dir, "model.json"));
            save_vectorizer(outcome.vectorizer, join_path(train_opts.out_dir, "vocabulary.json"));
            save_report(outcome.report, join_path(train_opts.out_dir, "report.json"));
            write_file(join_path(train_opts.out_dir, "report.csv"), per_class_csv(outcome.report));
            if (train_curve) {
                write_file(join_path(train_opts.out_dir, "learning_curve.csv"),
                           learning_curve_csv({&outcome.report}));
            }
            write_file(join_path(train_opts.out_dir, "manifest.txt"), app.config_to_str(true, true));
            for (const auto& warning : outcome.report.warnings) {
                std::cerr << "warning: " << warning << '\n';
            }
            std::cout << to_string(spec.kind) << " " << to_string(scheme)
                      << " cv_score=" << format_double(outcome.report.cv_score)
                      << " f1_weighted=" << format_double(outcome.report.f1_weighted)
                      << " test_accuracy=" << format_double(outcome.report.test_accuracy) << '\n';
            return kExitOk;
        }

        // ----------------------------------------------------------- tune
        if (tune_cmd->parsed()) {
            ensure_out_dir(tune_opts.out_dir);
            const Scheme scheme = scheme_of(tune_opts);
            const auto kind = parse_estimator_kind(tune_model);
            if (!kind) throw SchemaError("unknown model \"" + tune_model + "\"");

            const Dataset dataset = load_dataset(tune_data, detect_format(tune_data, tune_format));
            SplitSpec split_spec;
            split_spec.train_fraction = tune_fraction;
            split_spec.seed = tune_opts.seed;
            split_spec.stratified = tune_stratified;
            const auto [train_set, test_set] = split(dataset, split_spec);

            const PipelineConfig pipeline = build_pipeline(tune_opts);
            const VectorizerConfig vconfig = build_vectorizer_config(tune_opts);
            CVConfig cv;
            cv.folds = tune_folds;
            cv.seed = tune_opts.seed;

            const Grid grid = Grid::tuning_defaults(*kind);
            GridSearchResult result;
            try {
                result = grid_search(grid, train_set, pipeline, vconfig, cv, tune_opts.seed);
            } catch (const Error& e) {
                std::cerr << "error: " << e.what() << '\n';
                return kExitTuneFailed;
            }

            std::string results_csv = "model,scheme,parameters,cv_score,status,detail\n";
            auto assignment_string = [](const GridAssignment& assignment) {
                std::string out;
                for (const auto& [name, value] : assignment) {
                    if (!out.empty()) out += "; ";
                    out += name + "=" + to_display_string(value);
                }
                return out;
            };
            for (const auto& cell : result.evaluated) {
                results_csv += csv::join_row({to_string(grid.kind), to_string(scheme),
                                              assignment_string(cell.assignment),
                                              format_double(cell.cv.mean), "ok", ""});
            }
            for (const auto& cell : result.skipped) {
                results_csv += csv::join_row({to_string(grid.kind), to_string(scheme),
                                              assignment_string(cell.assignment), "", "skipped",
                                              cell.reason});
            }
            for (const auto& cell : result.failed) {
                results_csv += csv::join_row({to_string(grid.kind), to_string(scheme),
                                              assignment_string(cell.assignment), "", "failed",
                                              cell.error});
            }
            write_file(join_path(tune_opts.out_dir, "grid_results.csv"), results_csv);
            save_spec(result.best().spec, join_path(tune_opts.out_dir, "best_spec.json"));
            write_file(join_path(tune_opts.out_dir, "manifest.txt"), app.config_to_str(true, true));
            std::cout << "best " << to_string(grid.kind) << " ("
                      << assignment_string(result.best().assignment)
                      << ") cv_score=" << format_double(result.best().cv.mean) << '\n';
            std::cout << result.evaluated.size() << " cells evaluated, " << result.skipped.size()
                      << " skipped, " << result.failed.size() << " failed\n";
            return kExitOk;
        }

        // -------------------------------------------------------- predict
        if (predict_cmd->parsed()) {
            ensure_out_dir(predict_opts.out_dir);
            const TrainedModel model = load_model(predict_model);
            const VectorizerModel vectorizer = load_vectorizer(predict_vocab);
            const std::string fingerprint = vectorizer_fingerprint(vectorizer);
            if (fingerprint != model.vectorizer_fingerprint) {
                throw FingerprintError("model was trained against a different vocabulary (model " +
                                       model.vectorizer_fingerprint + ", vocabulary " + fingerprint +
                                       ")");
            }
            PipelineConfig pipeline = build_pipeline(predict_opts);
            if (vectorizer.pipeline.resource_fingerprint != pipeline.resource_fingerprint) {
                throw FingerprintError(
                    "preprocessing resources differ from the ones the model was trained with");
            }
            apply_settings(vectorizer.pipeline, pipeline);

            const std::vector<Comment> comments =
                load_comments(predict_data, detect_format(predict_data, predict_format));
            const FeatureMatrix X = vectorize(vectorizer, run_pipeline(comments, pipeline));
            const std::vector<CommentClass> labels = predict(model, X);
            const DenseMatrix scores = predict_scores(model, X);

            const std::string header = "id,text,predicted_label,score\n";
            std::string combined = header;
            std::array<std::string, kNumClasses> per_class_files;
            per_class_files.fill(header);
            std::array<std::size_t, kNumClasses> counts{};
            for (std::size_t i = 0; i < comments.size(); ++i) {
                const int class_index = static_cast<int>(labels[i]);
                double best_score = 0.0;
                for (Index k = 0; k < scores.cols(); ++k) {
                    if (model.classes[static_cast<std::size_t>(k)] == labels[i]) {
                        best_score = scores(static_cast<Index>(i), k);
                    }
                }
                const std::string row =
                    csv::join_row({comments[i].id, comments[i].text, to_string(labels[i]),
                                   format_double(best_score)});
                combined += row;
                per_class_files[static_cast<std::size_t>(class_index)] += row;
                counts[static_cast<std::size_t>(class_index)]++;
            }
            write_file(join_path(predict_opts.out_dir, "predictions.csv"), combined);
            for (int k = 0; k < kNumClasses; ++k) {
                write_file(join_path(predict_opts.out_dir,
                                     to_string(static_cast<CommentClass>(k)) + ".csv"),
                           per_class_files[static_cast<std::size_t>(k)]);
            }
            write_file(join_path(predict_opts.out_dir, "manifest.txt"), app.config_to_str(true, true));
            for (int k = 0; k < kNumClasses; ++k) {
                std::cout << to_string(static_cast<CommentClass>(k)) << ": "
                          << counts[static_cast<std::size_t>(k)] << '\n';
            }
            return kExitOk;
        }

        // --------------------------------------------------------- report
        if (report_cmd->parsed()) {
            ensure_out_dir(report_opts.out_dir);
            std::vector<EvaluationReport> reports;
            for (const std::string& path : report_files) reports.push_back(load_report(path));

            std::string comparison = "model,scheme,cv_score,f1_weighted,f1_macro,test_accuracy\n";
            std::string per_class = "model,scheme,class,precision,recall,f1,support\n";
            std::vector<const EvaluationReport*> report_ptrs;
            for (const auto& report : reports) {
                report_ptrs.push_back(&report);
                comparison += csv::join_row(
                    {to_string(report.spec.kind), to_string(report.scheme),
                     format_double(report.cv_score), format_double(report.f1_weighted),
                     format_double(report.f1_macro), format_double(report.test_accuracy)});
                for (int k = 0; k < kNumClasses; ++k) {
                    const ClassMetrics& cm = report.per_class[static_cast<std::size_t>(k)];
                    per_class += csv::join_row({to_string(report.spec.kind), to_string(report.scheme),
                                                to_string(static_cast<CommentClass>(k)),
                                                format_double(cm.precision), format_double(cm.recall),
                                                format_double(cm.f1), std::to_string(cm.support)});
                }
            }
            write_file(join_path(report_opts.out_dir, "comparison.csv"), comparison);
            write_file(join_path(report_opts.out_dir, "per_class.csv"), per_class);
            write_file(join_path(report_opts.out_dir, "learning_curves.csv"),
                       learning_curve_csv(report_ptrs));

            if (report_svg) {
                std::vector<std::pair<std::string, double>> bars;
                std::vector<std::pair<std::string, std::vector<std::pair<double, double>>>> curves;
                for (const auto& report : reports) {
                    const std::string name =
                        to_string(report.spec.kind) + "/" + to_string(report.scheme);
                    bars.emplace_back(name, report.f1_weighted);
                    std::vector<std::pair<double, double>> line;
                    for (const auto& point : report.learning_curve) {
                        if (!std::isnan(point.accuracy)) {
                            line.emplace_back(point.train_size, point.accuracy);
                        }
                    }
                    if (!line.empty()) curves.emplace_back(name, std::move(line));
                }
                write_file(join_path(report_opts.out_dir, "comparison.svg"),
                           render_bar_chart_svg(bars, "Weighted F1 by model"));
                if (!curves.empty()) {
                    write_file(join_path(report_opts.out_dir, "learning_curves.svg"),
                               render_curves_svg(curves, "Test accuracy vs training size"));
                }
            }
            std::cout << "aggregated " << reports.size() << " reports into " << report_opts.out_dir
                      << '\n';
            return kExitOk;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return map_exception_to_exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace ytcc
