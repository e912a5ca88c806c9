#include "doctest.h"
#include "fullhom/validate.hpp"

using namespace fullhom;

TEST_SUITE("validate") {

TEST_CASE("suite names round trip") {
    for (Suite s : {Suite::paths, Suite::cycles, Suite::table1, Suite::regular, Suite::mu,
                    Suite::blowup, Suite::all})
        CHECK(suite_from_name(suite_name(s)) == s);
    CHECK_THROWS_AS(suite_from_name("nope"), std::invalid_argument);
}

TEST_CASE("table rows 5 to 8 pass and row 9 is flagged") {
    ValidateOptions opt;
    opt.rows = {5, 10};
    const ValidationReport report = run_suite(Suite::table1, opt);
    REQUIRE(report.records.size() == 6);
    CHECK(report.all_passed());
    bool saw_flag = false;
    for (const CheckRecord& r : report.records)
        if (r.id == "table1.row9") {
            saw_flag = true;
            CHECK(r.description.find("FLAGGED") != std::string::npos);
            CHECK(r.description.find("C_7") != std::string::npos);
        }
    CHECK(saw_flag);
}

TEST_CASE("mu suite passes") {
    ValidateOptions opt;
    opt.max_n = 7;
    const ValidationReport report = run_suite(Suite::mu, opt);
    CHECK(report.records.size() == 7);
    CHECK(report.all_passed());
}

TEST_CASE("small paths run passes and is worker-independent") {
    ValidateOptions a;
    a.max_n = 5;
    a.workers = 1;
    ValidateOptions b = a;
    b.workers = 4;
    const ValidationReport ra = run_suite(Suite::paths, a);
    const ValidationReport rb = run_suite(Suite::paths, b);
    CHECK(ra.all_passed());
    REQUIRE(ra.records.size() == rb.records.size());
    for (std::size_t i = 0; i < ra.records.size(); ++i) {
        CHECK(ra.records[i].id == rb.records[i].id);
        CHECK(ra.records[i].pass == rb.records[i].pass);
        CHECK(ra.records[i].witness == rb.records[i].witness);
    }
}

TEST_CASE("report renderers") {
    ValidateOptions opt;
    opt.max_n = 3;
    const ValidationReport report = run_suite(Suite::mu, opt);
    const std::string text = to_text(report);
    CHECK(text.find("suite: mu") != std::string::npos);
    CHECK(text.find("[PASS]") != std::string::npos);
    const std::string tsv = to_tsv(report);
    CHECK(tsv.find("mu\tmu.total=1\tPASS") != std::string::npos);
}

TEST_CASE("mu brute oracle on tiny forests") {
    CHECK(brute_min_injective_path_host(Graph(1)) == 1);
    CHECK(brute_min_injective_path_host(path_graph(4)) == 4);
    CHECK(brute_min_injective_path_host(
              disjoint_union({Graph(1), complete_graph(2)})) == 4);
}

}  // TEST_SUITE
