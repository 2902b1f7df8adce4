#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "percsim/io.hpp"

using namespace percsim;
using nlohmann::json;

TEST_CASE("format_double is stable and spells out non-finite values") {
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(-1.25) == "-1.25");
    CHECK(format_double(1e-6) == "1e-06");
    CHECK(format_double(1.0 / 3.0) == "0.333333333333");
    CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
    CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");
}

TEST_CASE("fnv1a64 matches the published test vectors") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
    CHECK(fnv1a64_hex("") == "cbf29ce484222325");
    for (const char* s : {"", "a", "percsim", "p,f_lcc_mean\n0,1\n"}) {
        CHECK(fnv1a64_hex(s).size() == 16);
    }
    CHECK(fnv1a64("curve") != fnv1a64("curvf"));
}

TEST_CASE("file round trip and error reporting") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "percsim_io_test";
    fs::create_directories(dir);
    const std::string path = (dir / "blob.txt").string();
    const std::string content = "line one\nline two\n\x01\x02 binary-ish\n";
    write_text_file(path, content);
    CHECK(read_text_file(path) == content);
    CHECK_THROWS_AS(read_text_file((dir / "missing.txt").string()), std::runtime_error);
    fs::remove_all(dir);
}

namespace {

CanonicalCurve tiny_curve() {
    CanonicalCurve c;
    c.p = {0.0, 0.5, 1.0};
    c.f_mean = {0.1, 0.25, 1.0};
    c.f_stderr = {0.0, 0.01, 0.0};
    c.wrap_prob = {0.0, 0.5, 1.0};
    c.n_norm = 100;
    c.replicas = 2;
    c.wrap_available = true;
    return c;
}

}  // namespace

TEST_CASE("curve CSV layout") {
    const std::string csv = curve_csv(tiny_curve());
    CHECK(csv ==
          "p,f_lcc_mean,f_lcc_stderr,wrap_prob\n"
          "0,0.1,0,0\n"
          "0.5,0.25,0.01,0.5\n"
          "1,1,0,1\n");
}

TEST_CASE("sweep CSV adds a device-time column") {
    const PhysicalParams wg = scheme_params(Scheme::waveguide);
    const std::string csv = sweep_csv(tiny_curve(), wg, 4);
    CHECK(csv.rfind("p,t_seconds,f_lcc_mean,f_lcc_stderr,wrap_prob\n", 0) == 0);
    CHECK(csv.find("\n0,0,0.1,0,0\n") != std::string::npos);       // p = 0 -> t = 0
    CHECK(csv.find("\n1,inf,1,0,1\n") != std::string::npos);       // p = 1 -> t = inf
    // The middle row carries t(0.5) = 69.31 ms.
    const std::string expect_t = format_double(time_to_threshold(0.5, wg, 4));
    CHECK(csv.find("\n0.5," + expect_t + ",0.25,0.01,0.5\n") != std::string::npos);
}

TEST_CASE("yield CSV carries NaN rows for non-percolating points") {
    YieldCurvePoint ok;
    ok.geometry = make_geometry(LatticeKind::square);
    ok.L = 128;
    ok.q = 0.9;
    ok.p_min = 0.5625;
    ok.p_min_stderr = 0.002;
    ok.t_min_seconds = 0.08;
    YieldCurvePoint dead;
    dead.geometry = make_geometry(LatticeKind::triangular);
    dead.L = 128;
    dead.q = 0.4;
    dead.p_min = std::numeric_limits<double>::quiet_NaN();
    dead.p_min_stderr = std::numeric_limits<double>::quiet_NaN();
    dead.t_min_seconds = std::numeric_limits<double>::quiet_NaN();
    dead.status = "non_percolating";
    const std::vector<YieldCurvePoint> points = {ok, dead};
    CHECK(yield_csv(points) ==
          "geometry,q,p_min,p_min_stderr,t_min_seconds,status\n"
          "square,0.9,0.5625,0.002,0.08,ok\n"
          "triangular,0.4,nan,nan,nan,non_percolating\n");
}

TEST_CASE("transparent CSV prefixes the active fraction") {
    const PhysicalParams wg = scheme_params(Scheme::waveguide);
    const std::string csv = transparent_csv(tiny_curve(), 0.01, wg);
    CHECK(csv.rfind("epsilon,p,t_seconds,f_lcc_mean,f_lcc_stderr\n", 0) == 0);
    CHECK(csv.find("\n0.01,0,0,0.1,0\n") != std::string::npos);
    CHECK(csv.find("\n0.01,1,inf,1,0\n") != std::string::npos);
}

TEST_CASE("threshold JSON carries the estimate and its per-size breakdown") {
    ThresholdEstimate est;
    est.p_hat = 0.497;
    est.sigma = 0.004;
    est.per_size = {{64, 0.492, 0.0007, 1.0, 400}, {128, 0.497, 0.0004, 1.0, 400}};
    const json doc = json::parse(threshold_json(est, "square"));
    CHECK(doc.at("geometry") == "square");
    CHECK(doc.at("p_c_hat") == doctest::Approx(0.497));
    CHECK(doc.at("sigma") == doctest::Approx(0.004));
    CHECK(doc.at("criterion") == "wrap_onset_mean");
    CHECK(doc.at("status") == "ok");
    CHECK(doc.at("L_list") == json::array({64, 128}));
    REQUIRE(doc.at("per_size").size() == 2);
    CHECK(doc.at("per_size")[0].at("L") == 64);
    CHECK(doc.at("per_size")[0].at("p_hat") == doctest::Approx(0.492));
    CHECK(doc.at("per_size")[1].at("replicas") == 400);

    SiteThresholdEstimate site;
    site.q_hat = 0.593;
    site.sigma = 0.002;
    site.per_size = {{128, 0.593, 0.001, 1.0, 300}};
    const json sdoc = json::parse(site_threshold_json(site, "square"));
    CHECK(sdoc.at("q_c_hat") == doctest::Approx(0.593));
    CHECK(sdoc.at("criterion") == "site_wrap_onset_mean");
}

TEST_CASE("physics JSON reports all three lattices") {
    const json doc = json::parse(physics_json(scheme_params(Scheme::waveguide)));
    CHECK(doc.at("scheme") == "waveguide");
    CHECK(doc.at("p0") == doctest::Approx(2e-4));
    CHECK(doc.at("t0") == doctest::Approx(5e-6));
    CHECK(doc.at("t_lb_seconds") == doctest::Approx(0.0249975).epsilon(1e-6));
    CHECK_FALSE(doc.contains("eta"));
    REQUIRE(doc.at("records").size() == 3);
    const json& sq = doc.at("records")[0];
    CHECK(sq.at("geometry") == "square");
    CHECK(sq.at("d") == 4);
    CHECK(sq.at("p_c") == doctest::Approx(0.5));
    CHECK(sq.at("t_c") == doctest::Approx(0.069307786).epsilon(1e-6));
    CHECK(sq.at("t_lb") == doc.at("t_lb_seconds"));
    CHECK(doc.at("records")[1].at("geometry") == "triangular");
    CHECK(doc.at("records")[2].at("geometry") == "hexagonal");

    const json with_eta =
        json::parse(physics_json(custom_params(0.05, 5e-6, 0.31622776601683794)));
    CHECK(with_eta.at("scheme") == "custom");
    CHECK(with_eta.at("eta") == doctest::Approx(0.31622776601683794));
}

TEST_CASE("epsilon table JSON mirrors the entries") {
    EpsilonThresholdTable table;
    table.L = 512;
    table.min_p_c = 0.34;
    EpsilonThresholdEntry e;
    e.epsilon = 0.01;
    e.estimate.p_hat = 0.34;
    e.estimate.sigma = 0.003;
    e.estimate.per_size = {{512, 0.34, 0.003, 1.0, 100}};
    table.entries.push_back(e);
    const json doc = json::parse(epsilon_table_json(table));
    CHECK(doc.at("L") == 512);
    CHECK(doc.at("criterion") == "wrap_onset_mean");
    CHECK(doc.at("min_p_c") == doctest::Approx(0.34));
    REQUIRE(doc.at("entries").size() == 1);
    CHECK(doc.at("entries")[0].at("epsilon") == doctest::Approx(0.01));
    CHECK(doc.at("entries")[0].at("frac_wrapped") == doctest::Approx(1.0));
    CHECK(doc.at("entries")[0].at("status") == "ok");
}
