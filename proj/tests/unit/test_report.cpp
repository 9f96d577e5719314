#include "doctest.h"
#include "popov/report.hpp"

using namespace popov;

TEST_CASE("integers beyond the safe range become strings") {
    const Int safe = (Int(1) << 53) - 1;
    CHECK(int_json(safe).is_number_integer());
    CHECK(int_json(-safe).is_number_integer());
    CHECK(int_json(safe + 1).get<std::string>() == "9007199254740992");
    CHECK(int_json(-(safe + 1)).is_string());
}

TEST_CASE("analysis report is deterministic") {
    PairAnalysis a(prepare_pair(1, 4, 2));
    PairAnalysis b(prepare_pair(1, 4, 2));
    VerifyOptions serial;
    serial.exec = Exec::serial;
    const std::string one = analysis_json(a, verify(a)).dump();
    const std::string two = analysis_json(b, verify(b, serial)).dump();
    CHECK(one == two);
    const Json doc = Json::parse(one);
    CHECK(doc["schema"] == "1");
    CHECK(doc["tangent_dimensions"] == Json::array({3, 3}));
    CHECK(doc["borel_fixed_points"].size() == 2);
    CHECK(doc["verification"]["ok"] == true);
    CHECK(doc["F"] == Json::array({"X0^2X1^2", "X0X1^5X3"}));
}

TEST_CASE("smooth pairs get a notice only") {
    const Json doc = classification_json(validate_pair(3, 3, 5));
    CHECK(doc["schema"] == "1");
    CHECK(doc.contains("notice"));
}

TEST_CASE("verify report lists failing checks for a mutant") {
    PairAnalysis an(prepare_pair(1, 4, 2));
    VerifyOptions opts;
    opts.drop_k = 1;
    const VerifyReport report = verify(an, opts);
    CHECK_FALSE(report.ok());
    const CheckResult* h = report.find("ideals.hilbert");
    REQUIRE(h);
    CHECK(h->status == CheckStatus::fail);
    CHECK(verify_json(report)["ok"] == false);
}
