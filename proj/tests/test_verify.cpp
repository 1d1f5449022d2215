#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "spex/canonical.hpp"
#include "spex/families.hpp"
#include "spex/report.hpp"
#include "spex/verify.hpp"

using spex::VerificationReport;
using spex::VerifyOptions;

namespace {

VerifyOptions range(int n_lo, int n_hi, int r_lo = 0, int r_hi = 0) {
  VerifyOptions opt;
  opt.n_lo = n_lo;
  opt.n_hi = n_hi;
  opt.r_lo = r_lo;
  opt.r_hi = r_hi;
  return opt;
}

std::string canon(const spex::Graph& g) { return spex::canonical_form(g).g6; }

bool has_witness(const spex::VerificationRow& row, const std::string& w) {
  return std::find(row.witnesses.begin(), row.witnesses.end(), w) !=
         row.witnesses.end();
}

}  // namespace

TEST_CASE("catalog") {
  const auto& ids = spex::theorem_catalog();
  CHECK(ids.size() == 15);
  CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
  for (const char* id : {"mantel", "turan", "nosal_edges", "nikiforov_spectral", "flz_multipartite",
                         "erdos_stability", "lnw", "lemma33", "brouwer", "lemma42",
                         "main", "kang_nikiforov", "p_main", "hjz_signless",
                         "nikiforov_alpha"})
    CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
  CHECK_THROWS_AS(spex::verify_theorem("zarankiewicz"), std::invalid_argument);
}

TEST_CASE("mantel") {
  VerificationReport rep = spex::verify_theorem("mantel", range(4, 6));
  CHECK(rep.pass);
  REQUIRE(rep.rows.size() == 3);
  for (const auto& row : rep.rows) {
    CHECK(row.pass);
    CHECK(row.unique);
    CHECK(row.found == row.expected);
    CHECK(has_witness(row, canon(spex::turan_graph(row.n, 2))));
  }
  CHECK(rep.rows[1].expected == 6.0);  // e(T_2(5))
}

TEST_CASE("turan") {
  VerificationReport rep = spex::verify_theorem("turan", range(4, 5, 2, 3));
  CHECK(rep.pass);
  CHECK(rep.rows.size() == 4);
}

TEST_CASE("nosal_edges") {
  VerificationReport rep = spex::verify_theorem("nosal_edges", range(3, 6));
  CHECK(rep.pass);
  for (const auto& row : rep.rows) CHECK(row.found <= 1e-9);
}

TEST_CASE("nikiforov spectral") {
  VerificationReport rep = spex::verify_theorem("nikiforov_spectral", range(4, 5, 2, 3));
  CHECK(rep.pass);
  for (const auto& row : rep.rows) {
    CHECK(row.unique);
    CHECK(has_witness(row, canon(spex::turan_graph(row.n, row.r))));
  }
}

TEST_CASE("flz chromatic bound") {
  VerificationReport rep = spex::verify_theorem("flz_multipartite", range(4, 5, 2, 3));
  CHECK(rep.pass);
}

TEST_CASE("erdos stability") {
  VerificationReport rep = spex::verify_theorem("erdos_stability", range(5, 6));
  CHECK(rep.pass);
  for (const auto& row : rep.rows) {
    CHECK(row.expected == double((row.n - 1) * (row.n - 1) / 4 + 1));
    for (int x1 = 1; x1 <= row.n / 2 - 1; ++x1)
      CHECK(has_witness(row, canon(spex::erdos_family_graph(row.n, x1))));
  }
}

TEST_CASE("lnw subdivision argmax") {
  VerificationReport rep = spex::verify_theorem("lnw", range(5, 6));
  CHECK(rep.pass);
  CHECK(rep.rows[0].found == doctest::Approx(2.0).epsilon(1e-9));  // C_5
  CHECK(has_witness(rep.rows[0], canon(spex::sk_graph(2, 2))));
  CHECK(has_witness(rep.rows[1], canon(spex::sk_graph(2, 3))));
}

TEST_CASE("lemma33 balanced subdivision dominates") {
  VerificationReport rep = spex::verify_theorem("lemma33", range(5, 9));
  CHECK(rep.pass);
  CHECK(rep.rows.size() == 5);
}

TEST_CASE("brouwer edge bound") {
  VerificationReport rep = spex::verify_theorem("brouwer", range(5, 6, 2, 2));
  CHECK(rep.pass);
  for (const auto& row : rep.rows)
    CHECK(row.found == row.expected);
}

TEST_CASE("lemma42 composition argmax") {
  VerificationReport rep = spex::verify_theorem("lemma42", range(8, 9, 3, 3));
  CHECK(rep.pass);
  for (const auto& row : rep.rows) CHECK(row.unique);
}

TEST_CASE("main theorem at n = 6 uses the family fallback") {
  VerificationReport rep = spex::verify_theorem("main", range(6, 6, 3, 3));
  CHECK(rep.pass);
  REQUIRE(rep.rows.size() == 1);
  CHECK(rep.rows[0].note.find("below") != std::string::npos);
  // the only K_4-free non-3-partite graph on 6 vertices is the 5-wheel
  CHECK(has_witness(rep.rows[0], canon(spex::pinched_multipartite({2, 2, 1}))));
}

TEST_CASE("hjz signless dichotomy") {
  VerificationReport rep = spex::verify_theorem("hjz_signless", range(6, 6, 2, 3));
  CHECK(rep.pass);
  REQUIRE(rep.rows.size() == 2);
  CHECK(rep.rows[0].witnesses.size() == 3);  // K_{1,5}, K_{2,4}, K_{3,3}
  CHECK(rep.rows[0].found == doctest::Approx(6.0).epsilon(1e-9));
  CHECK(rep.rows[1].unique);
  CHECK(has_witness(rep.rows[1], canon(spex::turan_graph(6, 3))));
}

TEST_CASE("alpha trichotomy") {
  VerifyOptions opt = range(6, 6, 3, 3);
  opt.alpha_values = {0.0, 0.5, 2.0 / 3.0, 0.9};
  VerificationReport rep = spex::verify_theorem("nikiforov_alpha", opt);
  CHECK(rep.pass);
  REQUIRE(rep.rows.size() == 4);
  CHECK(has_witness(rep.rows[0], canon(spex::turan_graph(6, 3))));
  CHECK(has_witness(rep.rows[1], canon(spex::turan_graph(6, 3))));
  CHECK(rep.rows[2].note.find("boundary") != std::string::npos);
  CHECK(has_witness(rep.rows[3], canon(spex::split_graph(6, 2))));
}

TEST_CASE("kang nikiforov p-spectral turan") {
  VerifyOptions opt = range(5, 5, 2, 2);
  opt.p_values = {1.5, 3.0};
  VerificationReport rep = spex::verify_theorem("kang_nikiforov", opt);
  CHECK(rep.pass);
  REQUIRE(rep.rows.size() == 2);
  CHECK(rep.rows[0].param == "p=1.5");
}

TEST_CASE("default ranges produce rows") {
  VerificationReport rep = spex::verify_theorem("mantel");
  CHECK(rep.rows.size() == 4);  // n = 4..7
  CHECK_FALSE(rep.empty_warning);
}

TEST_CASE("format_value uses 10 significant digits") {
  CHECK(spex::format_value(2.0) == "2");
  CHECK(spex::format_value(2.4494897427831781) == "2.449489743");
  CHECK(spex::format_value(-0.5) == "-0.5");
  CHECK(spex::format_value(0.0) == "0");
}

TEST_CASE("report formats") {
  VerificationReport rep = spex::verify_theorem("mantel", range(4, 5));

  std::string csv = spex::emit_report(rep, spex::ReportFormat::csv);
  CHECK(csv.rfind("theorem,n,r,param,found,expected,witnesses,unique,pass\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);

  std::string text = spex::emit_report(rep, spex::ReportFormat::text);
  CHECK(text.find("overall: pass") != std::string::npos);

  std::string json = spex::emit_report(rep, spex::ReportFormat::json);
  VerificationReport back = spex::report_from_json(json);
  CHECK(back.theorem == rep.theorem);
  CHECK(back.pass == rep.pass);
  CHECK(back.rows.size() == rep.rows.size());
  CHECK(back.rows[0].witnesses == rep.rows[0].witnesses);
  CHECK(back.rows[0].n == rep.rows[0].n);
  CHECK(spex::emit_report(back, spex::ReportFormat::json) == json);
}

TEST_CASE("reports are byte-identical across runs") {
  VerifyOptions opt = range(5, 5, 2, 2);
  auto a = spex::emit_report(spex::verify_theorem("nikiforov_spectral", opt),
                             spex::ReportFormat::json);
  auto b = spex::emit_report(spex::verify_theorem("nikiforov_spectral", opt),
                             spex::ReportFormat::json);
  CHECK(a == b);
}
