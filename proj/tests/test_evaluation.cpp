#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include "helpers.hpp"
#include "nerc/evaluation.hpp"

using namespace nerc;

namespace {

std::vector<int> random_labels(std::mt19937& rng, std::size_t n, int n_classes) {
  std::uniform_int_distribution<int> label(0, n_classes - 1);
  std::vector<int> out(n);
  for (auto& l : out) l = label(rng);
  return out;
}

}  // namespace

TEST_CASE("count_labels tallies tp/fp/fn/support per class") {
  SECTION("perfect prediction") {
    const ClassCounts c = count_labels({0, 1, 2}, {0, 1, 2}, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(c.tp[i] == 1);
      CHECK(c.fp[i] == 0);
      CHECK(c.fn[i] == 0);
      CHECK(c.support[i] == 1);
    }
  }
  SECTION("mixed prediction") {
    const ClassCounts c = count_labels({0, 0, 1}, {0, 1, 1}, 2);
    CHECK(c.tp[0] == 1);
    CHECK(c.fp[0] == 1);
    CHECK(c.fn[0] == 0);
    CHECK(c.tp[1] == 1);
    CHECK(c.fp[1] == 0);
    CHECK(c.fn[1] == 1);
  }
  SECTION("empty lists") {
    const ClassCounts c = count_labels({}, {}, 2);
    CHECK(c.tp == std::vector<std::size_t>{0, 0});
    CHECK(c.support == std::vector<std::size_t>{0, 0});
  }
  SECTION("length mismatch") {
    CHECK_THROWS_AS(count_labels({0}, {0, 1}, 2), ArgumentError);
  }
}

TEST_CASE("make_report computes the documented metric definitions") {
  SECTION("tp=2 fp=1 fn=1 gives 2/3 across the board") {
    ClassCounts c(1);
    c.tp[0] = 2;
    c.fp[0] = 1;
    c.fn[0] = 1;
    c.support[0] = 3;
    const ClassificationReport r = make_report(c);
    CHECK(r.per_class[0].precision == Catch::Approx(2.0 / 3.0).margin(1e-15));
    CHECK(r.per_class[0].recall == Catch::Approx(2.0 / 3.0).margin(1e-15));
    CHECK(r.per_class[0].f1 == Catch::Approx(2.0 / 3.0).margin(1e-15));
  }
  SECTION("support-0 class with no predictions reports zeros") {
    const ClassCounts c = count_labels({0, 0}, {0, 0}, 2);
    const ClassificationReport r = make_report(c);
    CHECK(r.per_class[1].precision == 0.0);
    CHECK(r.per_class[1].recall == 0.0);
    CHECK(r.per_class[1].f1 == 0.0);
    CHECK(r.per_class[1].support == 0);
  }
  SECTION("perfect predictions give all ones") {
    const ClassCounts c = count_labels({0, 1, 2, 1}, {0, 1, 2, 1}, 3);
    const ClassificationReport r = make_report(c);
    for (const auto& m : r.per_class) {
      CHECK(m.precision == 1.0);
      CHECK(m.recall == 1.0);
      CHECK(m.f1 == 1.0);
    }
    CHECK(r.accuracy == 1.0);
    CHECK(r.weighted_f1 == 1.0);
  }
}

TEST_CASE("metric identities hold over random prediction/gold pairs") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> n_dist(0, 40), c_dist(2, 6);
  for (int trial = 0; trial < 150; ++trial) {
    const int n_classes = c_dist(rng);
    const std::size_t n = static_cast<std::size_t>(n_dist(rng));
    const auto pred = random_labels(rng, n, n_classes);
    const auto gold = random_labels(rng, n, n_classes);
    const ClassCounts counts = count_labels(pred, gold, n_classes);
    const ClassificationReport r = make_report(counts);

    std::size_t tp_sum = 0, fp_sum = 0, support_sum = 0, correct = 0;
    double wp = 0, wr = 0, wf = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (pred[i] == gold[i]) ++correct;
    for (int c = 0; c < n_classes; ++c) {
      const std::size_t cs = static_cast<std::size_t>(c);
      const ClassMetrics& m = r.per_class[cs];
      CHECK((m.precision >= 0.0 && m.precision <= 1.0));
      CHECK((m.recall >= 0.0 && m.recall <= 1.0));
      CHECK((m.f1 >= 0.0 && m.f1 <= 1.0));
      // harmonic-mean identity
      CHECK(std::abs(m.f1 * (m.precision + m.recall) - 2.0 * m.precision * m.recall) <
            1e-9);
      CHECK(counts.support[cs] == counts.tp[cs] + counts.fn[cs]);
      tp_sum += counts.tp[cs];
      fp_sum += counts.fp[cs];
      support_sum += counts.support[cs];
      wp += static_cast<double>(m.support) * m.precision;
      wr += static_cast<double>(m.support) * m.recall;
      wf += static_cast<double>(m.support) * m.f1;
    }
    // conservation
    CHECK(tp_sum + fp_sum == n);
    CHECK(support_sum == n);
    CHECK(tp_sum == correct);
    // weighted-average identity
    if (support_sum > 0) {
      const double total = static_cast<double>(support_sum);
      CHECK(std::abs(r.weighted_precision - wp / total) < 1e-9);
      CHECK(std::abs(r.weighted_recall - wr / total) < 1e-9);
      CHECK(std::abs(r.weighted_f1 - wf / total) < 1e-9);
      CHECK((r.accuracy >= 0.0 && r.accuracy <= 1.0));
    }
  }
}

TEST_CASE("swapping two class ids permutes rows, averages unchanged") {
  std::mt19937 rng(123);
  const int n_classes = 5;
  auto pred = random_labels(rng, 60, n_classes);
  auto gold = random_labels(rng, 60, n_classes);
  const ClassificationReport base = make_report(count_labels(pred, gold, n_classes));

  auto swap12 = [](std::vector<int> v) {
    for (auto& l : v) l = l == 1 ? 2 : (l == 2 ? 1 : l);
    return v;
  };
  const ClassificationReport swapped =
      make_report(count_labels(swap12(pred), swap12(gold), n_classes));

  CHECK(swapped.per_class[1].f1 == base.per_class[2].f1);
  CHECK(swapped.per_class[2].precision == base.per_class[1].precision);
  CHECK(swapped.per_class[0].recall == base.per_class[0].recall);
  CHECK(swapped.weighted_precision == Catch::Approx(base.weighted_precision).margin(1e-12));
  CHECK(swapped.weighted_recall == Catch::Approx(base.weighted_recall).margin(1e-12));
  CHECK(swapped.weighted_f1 == Catch::Approx(base.weighted_f1).margin(1e-12));
  CHECK(swapped.accuracy == Catch::Approx(base.accuracy).margin(1e-12));
}

TEST_CASE("cross_validate scores every development token exactly once") {
  const Corpus dev = nerc_test::bijective_corpus(200, 23);
  const CrossValidation cv = cross_validate(dev, 10, 1.0, 23);
  REQUIRE(cv.folds.size() == 10);

  std::size_t support_sum = 0;
  for (const auto& f : cv.folds) {
    CHECK(f.support == 20);
    support_sum += f.support;
    // bijective mapping, every type in every train split: perfect folds
    CHECK(f.report.accuracy == 1.0);
  }
  CHECK(support_sum == dev.size());
  CHECK(cv.aggregate.total_support == dev.size());
  CHECK(cv.aggregate.accuracy == 1.0);
  CHECK(cv.aggregate.weighted_f1 == 1.0);
}

TEST_CASE("cross_validate attaches the fold index to fold errors") {
  Corpus dev = nerc_test::bijective_corpus(10, 5);
  dev.tokens[0].label = 40;  // outside [0, 23)
  try {
    cross_validate(dev, 2, 1.0, 23);
    FAIL("expected FitError");
  } catch (const FitError& e) {
    CHECK(std::string(e.what()).find("fold") != std::string::npos);
  }
}

TEST_CASE("render_report emits the tabular layout") {
  const Corpus c = nerc_test::bijective_corpus(46, 23);
  const auto gold = labels_of(c);
  const ClassificationReport r = make_report(count_labels(gold, gold, 23));
  const std::string text = render_report(r, TagSet::default_set());

  std::istringstream lines(text);
  std::string header;
  std::getline(lines, header);
  CHECK(header.find("Named Entity (NE)") == 0);
  CHECK(header.find("Tag") != std::string::npos);
  CHECK(header.find("Tag label") != std::string::npos);
  CHECK(header.find("Precision") != std::string::npos);
  CHECK(header.find("Recall") != std::string::npos);
  CHECK(header.find("F1 - score") != std::string::npos);
  CHECK(header.find("Support") != std::string::npos);

  // 23 tag rows + header + Average / Total
  int n_lines = 1;
  std::string line, last;
  while (std::getline(lines, line)) {
    ++n_lines;
    if (!line.empty()) last = line;
  }
  CHECK(n_lines == 25);
  CHECK(last.find("Average / Total") == 0);
  CHECK(last.find("1.00") != std::string::npos);
  CHECK(last.find("46") != std::string::npos);

  // first data row is the Person/NEP/0 row
  CHECK(text.find("Person") != std::string::npos);
  CHECK(text.find("NEP") != std::string::npos);
}

TEST_CASE("render_report shows 0.00 rows for support-0 classes") {
  // only class 0 present
  const ClassificationReport r = make_report(count_labels({0, 0}, {0, 0}, 23));
  const std::string text = render_report(r, TagSet::default_set());
  std::istringstream lines(text);
  std::string line;
  bool found_nepi = false;
  while (std::getline(lines, line)) {
    if (line.find("NEPI") != std::string::npos) {
      found_nepi = true;
      CHECK(line.find("0.00") != std::string::npos);
      CHECK(line.back() == '0');  // support column
    }
  }
  CHECK(found_nepi);
}

TEST_CASE("tsv report carries the same cells tab-separated") {
  const ClassificationReport r = make_report(count_labels({0, 1}, {0, 1}, 23));
  const std::string tsv = render_report_tsv(r, TagSet::default_set());
  std::istringstream lines(tsv);
  std::string header;
  std::getline(lines, header);
  CHECK(header ==
        "Named Entity (NE)\tTag\tTag label\tPrecision\tRecall\tF1 - score\tSupport");
  std::string row;
  std::getline(lines, row);
  CHECK(row == "Person\tNEP\t0\t1.00\t1.00\t1.00\t1");
}

TEST_CASE("render_fold_table lists folds and the pooled total") {
  const Corpus dev = nerc_test::bijective_corpus(100, 23);
  const CrossValidation cv = cross_validate(dev, 2, 1.0, 23);
  const std::string text = render_fold_table(cv);
  CHECK(text.find("FOLDS") == 0);
  CHECK(text.find("Average / Total") != std::string::npos);
  CHECK(text.find("50") != std::string::npos);   // per-fold support
  CHECK(text.find("100") != std::string::npos);  // pooled support

  const std::string tsv = render_fold_table_tsv(cv);
  CHECK(tsv.find("FOLDS\tPrecision\tRecall\tF1 - score\tSupport") == 0);
}
