#include "dunkl/errors.hpp"
#include "dunkl/serialize.hpp"
#include "helpers.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace dunkl;

TEST_SUITE("serialize") {
    TEST_CASE("polynomial JSON round trip (property)") {
        testing::Gen gen(99);
        for (int trial = 0; trial < 20; ++trial) {
            const int m = gen.integer(1, 4);
            const MVPoly p = gen.poly(m, 4, 5);
            const std::string text = polynomial_to_json(p);
            CHECK(polynomial_from_json(text) == p);
            CHECK(polynomial_to_json(polynomial_from_json(text)) == text);
        }
    }

    TEST_CASE("malformed polynomial JSON") {
        CHECK_THROWS_AS(polynomial_from_json("{"), InvalidInput);
        CHECK_THROWS_AS(polynomial_from_json(R"({"schema_version":2,"m":2,"terms":[]})"), InvalidInput);
        CHECK_THROWS_AS(polynomial_from_json(R"({"schema_version":1,"m":2,"terms":[{"exp":[1],"blade":0,"coeff":"1"}]})"),
                        InvalidInput);
        CHECK_THROWS_AS(polynomial_from_json(R"({"schema_version":1,"m":2,"terms":[{"exp":[1,0],"blade":4,"coeff":"1"}]})"),
                        InvalidInput);
        CHECK_THROWS_AS(polynomial_from_json(R"({"schema_version":1,"m":2,"terms":[{"exp":[1,0],"blade":0,"coeff":"x"}]})"),
                        InvalidInput);
        CHECK_THROWS_AS(polynomial_from_json(R"({"schema_version":1,"m":2})"), InvalidInput);
    }

    TEST_CASE("monogenic basis document") {
        const OperatorContext ctx(testing::z2_pair());
        const auto basis = monogenic_basis(ctx, 1);
        const std::string text = monogenic_basis_to_json(ctx.system(), basis);
        CHECK(text == monogenic_basis_to_json(ctx.system(), monogenic_basis(ctx, 1)));
        const auto j = nlohmann::json::parse(text);
        CHECK(j["schema_version"] == kSchemaVersion);
        CHECK(j["dimension"] == 4);
        CHECK(j["basis"].size() == 4);
        CHECK(polynomial_from_json(j["basis"][0].dump()) == basis.basis[0]);
    }

    TEST_CASE("Gegenbauer CSV") {
        const OperatorContext ctx(testing::z2_pair());
        const auto g = gegenbauer(ctx, Family::ball, 2, Rational(1, 2), monogenic_basis(ctx, 0).basis.front());
        const std::string csv = gegenbauer_to_csv(g);
        CHECK(csv.rfind("power,coefficient\n", 0) == 0);
        CHECK(csv.find("\n1,0\n") != std::string::npos);
        const auto j = nlohmann::json::parse(gegenbauer_to_json(ctx.system(), g));
        CHECK(j["coefficients"].size() == 3);
        CHECK(j["family"] == "ball");
    }

    TEST_CASE("Gram CSV") {
        const OperatorContext ctx(testing::z2_pair());
        const auto g = gram(ctx, Family::euclid, Rational(-37, 4), 1,
                            {monogenic_basis(ctx, 0).basis.front(), monogenic_basis(ctx, 1).basis.front()});
        const std::string csv = gram_to_csv(g);
        CHECK(csv.rfind("label,t=0;k=0;M=0,t=1;k=0;M=0,", 0) == 0);
        CHECK(csv.find("n/a") != std::string::npos);
        std::size_t lines = 0;
        for (std::size_t pos = 0; (pos = csv.find('\n', pos)) != std::string::npos; ++pos) ++lines;
        CHECK(lines == g.size() + 1);
        CHECK(csv.find(" × BASE[bilinear;") != std::string::npos);
        CHECK(csv == gram_to_csv(gram(ctx, Family::euclid, Rational(-37, 4), 1,
                                      {monogenic_basis(ctx, 0).basis.front(), monogenic_basis(ctx, 1).basis.front()})));
        const auto j = nlohmann::json::parse(gram_to_json(ctx.system(), g));
        CHECK(j["entries"].size() == 4);
        CHECK(j["entries"][0][2].is_null());
    }

    TEST_CASE("suite report document") {
        SuiteReport r;
        r.suite = "operators";
        r.cases_run = 3;
        r.failures.push_back({"sl2", "residual x_1"});
        const auto j = nlohmann::json::parse(suite_report_to_json({r}));
        CHECK(j["suites"][0]["failures"][0]["identity"] == "sl2");
        CHECK(j["suites"][0]["cases_run"] == 3);
    }
}
