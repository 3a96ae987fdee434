#include "doctest.h"

#include "twistspec/serialize.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>
#include <vector>

using namespace twistspec;
using nlohmann::ordered_json;

namespace {

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

size_t count_fields(const std::string& csv_line) {
    return static_cast<size_t>(std::count(csv_line.begin(), csv_line.end(), ',')) + 1;
}

// every emitter promises: parse + re-dump reproduces the exact bytes
void check_roundtrip(const std::string& doc) {
    CHECK(ordered_json::parse(doc).dump(2) + "\n" == doc);
    CHECK(doc.back() == '\n');
}

}  // namespace

TEST_CASE("real formatting is plain and stable") {
    CHECK(format_real(0.0) == "0");
    CHECK(format_real(2.0) == "2");
    CHECK(format_real(0.5) == "0.5");
    CHECK(format_real(-0.25) == "-0.25");
    CHECK(format_real(1e-10) == "1e-10");
    CHECK(format_real(1e+100) == "1e+100");
    // 15 significant digits, shortest form
    CHECK(format_real(2.197366055659062) == "2.19736605565906");
    CHECK(format_real(1.0 / 3.0) == "0.333333333333333");
}

TEST_CASE("rational formatting canonicalizes") {
    CHECK(rat_string(Rat(1, 2)) == "1/2");
    CHECK(rat_string(Rat(2, 4)) == "1/2");
    CHECK(rat_string(Rat(-3, 6)) == "-1/2");
    CHECK(rat_string(Rat(4, 2)) == "2");
    CHECK(rat_string(Rat(0)) == "0");
    CHECK(rat_string(Rat(7)) == "7");
}

TEST_CASE("matrix json layout") {
    CurveSystem sys(4);
    LinearMap m = phi_matrix(sys);
    std::string doc = matrix_json(sys, m, RotationDir::Plus);
    check_roundtrip(doc);
    CHECK(doc == matrix_json(sys, m, RotationDir::Plus));  // deterministic

    ordered_json j = ordered_json::parse(doc);
    CHECK(j["kind"] == "transition-matrix");
    CHECK(j["genus"] == 4);
    CHECK(j["dimension"] == 12);
    CHECK(j["rotation"] == "plus");
    CHECK(j["column_is_image"] == true);
    REQUIRE(j["basis"].size() == 12);
    CHECK(j["basis"][0] == "a0");
    CHECK(j["basis"][11] == "d2");
    REQUIRE(j["entries"].size() == 12);
    REQUIRE(j["entries"][0].size() == 12);
    // column a0 is the image 2a1 + b2 + 2c1 + d1
    const int a1 = sys.index_of({Family::A, 1});
    const int b2 = sys.index_of({Family::B, 2});
    const int c1 = sys.index_of({Family::C, 1});
    const int d1 = sys.index_of({Family::D, 1});
    CHECK(j["entries"][a1][0] == "2");
    CHECK(j["entries"][b2][0] == "1");
    CHECK(j["entries"][c1][0] == "2");
    CHECK(j["entries"][d1][0] == "1");
    CHECK(j["entries"][0][0] == "0");
    CHECK(j["entries"][a1][a1] == "1");  // the lone diagonal entry
}

TEST_CASE("matrix text layout") {
    CurveSystem sys(4);
    LinearMap m = phi_matrix(sys);
    auto lines = split_lines(matrix_text(sys, m));
    REQUIRE(lines.size() == 14);  // two header comments + 12 rows
    CHECK(lines[0] == "# transition matrix, genus 4, dimension 12, columns are images");
    CHECK(lines[1] == "# basis: a0 a1 a2 b0 b1 b2 c0 c1 c2 d0 d1 d2");
    std::istringstream row(lines[2]);
    std::vector<std::string> tok;
    std::string t;
    while (row >> t) tok.push_back(t);
    CHECK(tok.size() == 12);
}

TEST_CASE("char poly json layout") {
    IntPolynomial cp = char_poly(phi_matrix(4));
    IntPolynomial ref = expected_char_poly(4);
    std::string doc = charpoly_json(4, cp, ref, RotationDir::Plus);
    check_roundtrip(doc);
    ordered_json j = ordered_json::parse(doc);
    CHECK(j["kind"] == "characteristic-polynomial");
    CHECK(j["degree"] == 12);
    REQUIRE(j["coefficients_ascending"].size() == 13);
    CHECK(j["coefficients_ascending"][0] == "1");
    CHECK(j["coefficients_ascending"][3] == "-12");
    CHECK(j["coefficients_ascending"][6] == "22");
    CHECK(j["palindromic"] == true);
    CHECK(j["matches_reference"] == false);
    CHECK(j["reference"]["degree"] == 12);
    CHECK(j["reference"]["coefficients_ascending"][6] == "-10");

    std::string text = charpoly_text(4, cp, ref);
    CHECK(text.find("matches_reference: no") != std::string::npos);
    CHECK(text.find("palindromic: yes") != std::string::npos);
}

TEST_CASE("spectrum json layout") {
    const Rat tol(1, Int("10000000000"));
    LinearMap a = phi_matrix(5);
    RootEnclosure enc = perron_root(a, tol);

    std::string bare = spectrum_json(5, a.n, enc, nullptr, RotationDir::Plus, tol);
    check_roundtrip(bare);
    ordered_json j = ordered_json::parse(bare);
    CHECK(j["kind"] == "spectrum");
    CHECK(j["genus"] == 5);
    CHECK(j["dimension"] == 16);
    CHECK(j["tolerance"] == "1/10000000000");
    CHECK(j["spectral_radius"].contains("lower_exact"));
    CHECK(j["spectral_radius"].contains("width"));
    CHECK(j["log_spectral_radius"].contains("lower"));
    CHECK_FALSE(j.contains("perron_vector"));

    RatVector v = perron_vector(a, tol);
    std::string with_vec = spectrum_json(5, a.n, enc, &v, RotationDir::Plus, tol);
    check_roundtrip(with_vec);
    ordered_json jv = ordered_json::parse(with_vec);
    CHECK(jv["perron_vector"]["normalization"] == "sum-1");
    CHECK(jv["perron_vector"]["entries"].size() == 16);

    std::string text = spectrum_text(5, enc);
    CHECK(text.find("spectral_radius: [2.19736605") != std::string::npos);
}

TEST_CASE("digraph json layout") {
    CurveSystem sys(4);
    Digraph dg = from_matrix(sys, phi_matrix(sys), Orientation::ColumnsAsImages);
    std::string doc = digraph_json(4, dg);
    check_roundtrip(doc);
    ordered_json j = ordered_json::parse(doc);
    CHECK(j["kind"] == "digraph");
    CHECK(j["orientation"] == "columns");
    REQUIRE(j["vertices"].size() == 12);
    size_t nonzero = 0;
    for (int u = 0; u < dg.n; ++u)
        for (int v = 0; v < dg.n; ++v)
            if (dg.adj.at(u, v) != 0) ++nonzero;
    CHECK(j["edges"].size() == nonzero);
    CHECK(j["edges"][0]["from"] == "a0");
    CHECK(j["edges"][0]["to"] == "a1");
    CHECK(j["edges"][0]["multiplicity"] == "2");
}

TEST_CASE("mixing report and serializations") {
    MixingReport r = make_mixing_report(9, RotationDir::Plus, Orientation::ColumnsAsImages);
    CHECK(r.cap == 17);
    REQUIRE(r.exponent.has_value());
    CHECK(*r.exponent == 15);
    REQUIRE(r.self_loops.size() == 1);
    CHECK(r.self_loops[0].first == "a1");
    CHECK(r.self_loops[0].second == 1);
    CHECK(r.cover_lo == 8);
    CHECK(r.cover_hi == 17);
    CHECK(r.first_incomplete == -1);
    CHECK(r.count_length == 7);
    CHECK(r.max_count == 83);
    CHECK(r.max_count_vertex == "c0");
    CHECK(r.count_bound == 69);

    std::string doc = mixing_json(r);
    check_roundtrip(doc);
    ordered_json j = ordered_json::parse(doc);
    CHECK(j["primitivity"]["exponent"] == 15);
    CHECK(j["primitivity"]["within_cap"] == true);
    CHECK(j["self_loops"][0]["vertex"] == "a1");
    CHECK(j["exact_length_covers"]["all_full"] == true);
    CHECK_FALSE(j["exact_length_covers"].contains("first_incomplete"));
    CHECK(j["path_counts"]["max"] == "83");
    CHECK(j["path_counts"]["within_bound"] == false);

    std::string text = mixing_text(r);
    CHECK(text.find("primitivity_exponent: 15 (cap 17)") != std::string::npos);
    CHECK(text.find("all full") != std::string::npos);
    CHECK(text.find("exceeded") != std::string::npos);
}

TEST_CASE("bounds serializations") {
    std::string low = bounds_json(closed_form_bounds(2));
    check_roundtrip(low);
    ordered_json j2 = ordered_json::parse(low);
    CHECK(j2["dilatation_source"] == "closed-form-only");
    CHECK_FALSE(j2.contains("spectral_radius"));
    CHECK_FALSE(j2.contains("dil_lower"));
    CHECK(j2["ellC_lower"] == "1/3");
    CHECK(j2["filling_floor"] == 3);
    CHECK(j2["filling_euler_identity"] == true);

    SweepRow row = make_sweep_row(5, RotationDir::Plus, Orientation::ColumnsAsImages,
                                  Rat(1, Int("10000000000")));
    std::string full = bounds_json(row.report);
    check_roundtrip(full);
    ordered_json j5 = ordered_json::parse(full);
    CHECK(j5["dilatation_source"] == "certified-enclosure");
    CHECK(j5.contains("spectral_radius"));
    CHECK(j5.contains("kappa_lower"));
    CHECK(j5["mixing_exponent"] == 7);
    CHECK(j5["dil_in_hypothesis"] == true);
    CHECK(j5["filling_euler_identity"] == true);

    std::string text = bounds_text(row.report);
    CHECK(text.find("# bounds, genus 5") == 0);
    CHECK(text.find("mixing_exponent: 7") != std::string::npos);
}

TEST_CASE("sweep csv has a frozen header and fixed field count") {
    CHECK(sweep_csv_header() ==
          "genus,dimension,trace,determinant,lambda_lower,lambda_upper,log_lambda_lower,"
          "log_lambda_upper,dil_lower,dil_upper,dil_upper_sharp,ellC_lower,kappa_lower_lo,"
          "kappa_lower_hi,kappa_upper,kappa_lower_log_g_lo,kappa_lower_log_g_hi,"
          "kappa_upper_log_g,mixing_exponent,filling_floor,rotation,orientation");
    const Rat tol(1, Int("10000000000"));
    std::vector<SweepRow> rows;
    for (int g = 5; g <= 9; ++g)
        rows.push_back(make_sweep_row(g, RotationDir::Plus, Orientation::ColumnsAsImages, tol));
    std::string csv = sweep_csv(rows);
    auto lines = split_lines(csv);
    REQUIRE(lines.size() == 6);
    const size_t want = count_fields(sweep_csv_header());
    CHECK(want == 22);
    for (const auto& line : lines) CHECK(count_fields(line) == want);
    // genus 9 row carries the exact systole bound and the mixing exponent
    CHECK(lines[5].rfind("9,32,1,1,", 0) == 0);
    CHECK(lines[5].find(",1/17,") != std::string::npos);
    CHECK(lines[5].find(",15,17,plus,columns") != std::string::npos);
}

TEST_CASE("sweep json mirrors the csv rows") {
    const Rat tol(1, Int("10000000000"));
    std::vector<SweepRow> rows;
    rows.push_back(make_sweep_row(5, RotationDir::Plus, Orientation::ColumnsAsImages, tol));
    std::string doc = sweep_json(rows);
    check_roundtrip(doc);
    ordered_json j = ordered_json::parse(doc);
    CHECK(j["kind"] == "sweep");
    REQUIRE(j["rows"].size() == 1);
    CHECK(j["rows"][0]["genus"] == 5);
    CHECK(j["rows"][0]["dimension"] == 16);
    CHECK(j["rows"][0]["trace"] == "1");
    CHECK(j["rows"][0]["determinant"] == "1");
    CHECK(j["rows"][0]["mixing_exponent"] == 7);
    CHECK(j["rows"][0]["ellC_lower"] == "1/9");
}

TEST_CASE("verification output formats") {
    std::vector<CheckResult> rs;
    rs.push_back({"alpha", 5, true, "ok"});
    rs.push_back({"beta", -1, false, "bad"});
    CHECK(verify_text(rs) ==
          "PASS alpha g=5: ok\nFAIL beta: bad\nsummary: 2 checks, 1 passed, 1 failed\n");
    std::string doc = verify_json(rs);
    check_roundtrip(doc);
    ordered_json j = ordered_json::parse(doc);
    CHECK(j["kind"] == "verification");
    REQUIRE(j["checks"].size() == 2);
    CHECK(j["checks"][0]["id"] == "alpha");
    CHECK(j["checks"][0]["genus"] == 5);
    CHECK(j["checks"][1]["genus"].is_null());
    CHECK(j["summary"]["total"] == 2);
    CHECK(j["summary"]["passed"] == 1);
    CHECK(j["summary"]["failed"] == 1);
}
