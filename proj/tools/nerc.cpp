// nerc: train, tag, evaluate and cross-validate a named-entity tagger.
//
//   nerc train    --corpus dev.txt --model model.json [--alpha 1.0]
//   nerc tag      --model model.json --input raw.txt [--output tagged.txt]
//   nerc eval     --model model.json --test test.txt [--report-format text|tsv]
//   nerc crossval --corpus dev.txt [--folds 10] [--alpha 1.0] [--report-format text|tsv]
//
// Corpora are UTF-8 word/TAG text. NERC_ALPHA overrides the default
// smoothing constant; an explicit --alpha flag beats the environment.

#include <fstream>
#include <iostream>
#include <limits>
#include <string>

#include "CLI11.hpp"

#include "nerc/nerc.hpp"

namespace {

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw nerc::IoError("cannot open output file: " + path);
  out << text;
  if (!out) throw nerc::IoError("failed writing output file: " + path);
}

void run_train(const std::string& corpus_path, const std::string& model_path,
               double alpha) {
  const nerc::TagSet& tags = nerc::TagSet::default_set();
  const nerc::Corpus corpus = nerc::parse_corpus_file(corpus_path, tags);
  auto [model, timing] = nerc::train_model(corpus, alpha, tags);
  nerc::save_model(model, model_path);
  std::cout << nerc::render_train_timing(timing);
}

void run_tag(const std::string& model_path, const std::string& input_path,
             const std::string& output_path) {
  const nerc::TrainedModel model = nerc::load_model(model_path);
  const std::string input = nerc::read_text_file(input_path);
  write_output(nerc::tag_text(model, input), output_path);
}

void run_eval(const std::string& model_path, const std::string& test_path,
              const std::string& format) {
  const nerc::TrainedModel model = nerc::load_model(model_path);
  const nerc::Corpus test = nerc::parse_corpus_file(test_path, model.tagset);
  auto [report, timing] = nerc::evaluate_model(model, test);
  if (format == "tsv") {
    std::cout << nerc::render_report_tsv(report, model.tagset);
    std::cout << "Accuracy\t" << nerc::detail::fixed2(report.accuracy) << '\n';
  } else {
    std::cout << nerc::render_report(report, model.tagset);
    std::cout << '\n' << "Accuracy : " << nerc::detail::fixed2(report.accuracy) << '\n';
  }
  std::cout << '\n' << nerc::render_test_timing(timing);
}

void run_crossval(const std::string& corpus_path, int folds, double alpha,
                  const std::string& format) {
  const nerc::TagSet& tags = nerc::TagSet::default_set();
  const nerc::Corpus dev = nerc::parse_corpus_file(corpus_path, tags);
  const nerc::CrossValidation cv = nerc::cross_validate(dev, folds, alpha, tags.size());
  if (format == "tsv")
    std::cout << nerc::render_fold_table_tsv(cv);
  else
    std::cout << nerc::render_fold_table(cv);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Named entity recognition and classification with a "
               "multinomial naive Bayes tagger"};
  app.require_subcommand(1);

  std::string corpus_path, model_path, input_path, output_path, test_path;
  std::string report_format = "text";
  double alpha = 1.0;
  int folds = 10;

  const auto format_check = CLI::IsMember({"text", "tsv"});

  CLI::App* train = app.add_subcommand("train", "Fit a tagger on a tagged corpus");
  train->add_option("--corpus", corpus_path, "tagged training corpus (word/TAG)")
      ->required();
  train->add_option("--model", model_path, "model file to write")->required();
  train->add_option("--alpha", alpha, "additive smoothing constant")
      ->envname("NERC_ALPHA")
      ->check(CLI::PositiveNumber);

  CLI::App* tag = app.add_subcommand("tag", "Tag plain text with a trained model");
  tag->add_option("--model", model_path, "trained model file")->required();
  tag->add_option("--input", input_path, "plain UTF-8 text to tag")->required();
  tag->add_option("--output", output_path, "tagged output file (default: stdout)");

  CLI::App* eval = app.add_subcommand("eval", "Score a model against gold tags");
  eval->add_option("--model", model_path, "trained model file")->required();
  eval->add_option("--test", test_path, "tagged test corpus")->required();
  eval->add_option("--report-format", report_format, "report style")
      ->check(format_check);

  CLI::App* crossval =
      app.add_subcommand("crossval", "k-fold cross-validation on a corpus");
  crossval->add_option("--corpus", corpus_path, "tagged development corpus")
      ->required();
  crossval->add_option("--folds", folds, "number of folds")
      ->check(CLI::Range(2, std::numeric_limits<int>::max()));
  crossval->add_option("--alpha", alpha, "additive smoothing constant")
      ->envname("NERC_ALPHA")
      ->check(CLI::PositiveNumber);
  crossval->add_option("--report-format", report_format, "report style")
      ->check(format_check);

  train->callback([&] { run_train(corpus_path, model_path, alpha); });
  tag->callback([&] { run_tag(model_path, input_path, output_path); });
  eval->callback([&] { run_eval(model_path, test_path, report_format); });
  crossval->callback([&] { run_crossval(corpus_path, folds, alpha, report_format); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const nerc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
