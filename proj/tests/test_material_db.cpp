#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "lamina/material_db.hpp"

namespace lamina {
namespace {

constexpr const char* kHeader = "name,E1,E2,G12,nu12\n";

TEST(MaterialCsv, ParsesMinimalRows) {
    const auto db = parse_material_csv(std::string(kHeader) + "A,10,1,0.5,0.3\nB,20,2,1,0.25\n");
    ASSERT_EQ(db.records.size(), 2u);
    EXPECT_TRUE(db.issues.empty());
    EXPECT_EQ(db.records[1].id, 2);
    EXPECT_EQ(db.records[1].line, 3);
    EXPECT_EQ(db.records[1].constants.name, "B");
    EXPECT_DOUBLE_EQ(db.records[1].constants.g12, 1.0);
    EXPECT_FALSE(db.records[0].polar.has_value());
}

TEST(MaterialCsv, HandlesBomCommentsQuotesAndCrlf) {
    const std::string text =
        "\xEF\xBB\xBF# plies\r\nname,E1,E2,G12,nu12,provenance\r\n\"Glass, E\",40,8,4,0.25,\"from \"\"handbook\"\"\"\r\n";
    const auto db = parse_material_csv(text);
    ASSERT_EQ(db.records.size(), 1u);
    EXPECT_EQ(db.records[0].constants.name, "Glass, E");
    EXPECT_EQ(db.records[0].provenance, "from \"handbook\"");
    EXPECT_EQ(db.records[0].line, 3);
}

TEST(MaterialCsv, ReportsMalformedRowsWithLineNumbers) {
    const auto db = parse_material_csv(std::string(kHeader) + "A,10,1,0.5,0.3\nB,20,x,1,0.25\nC,1,2\n,1,1,1,0.1\n");
    ASSERT_EQ(db.records.size(), 1u);
    ASSERT_EQ(db.issues.size(), 3u);
    EXPECT_EQ(db.issues[0].line, 3);
    EXPECT_NE(db.issues[0].message.find("E2"), std::string::npos);
    EXPECT_EQ(db.issues[1].line, 4);
    EXPECT_EQ(db.issues[2].line, 5);
}

TEST(MaterialCsv, MissingHeaderColumnThrows) {
    EXPECT_THROW(parse_material_csv("name,E1,E2,nu12\nA,1,1,0.1\n"), DataError);
}

TEST(MaterialCsv, EmptyTextHasNoMaterials) {
    const auto db = parse_material_csv("");
    EXPECT_TRUE(db.records.empty());
    EXPECT_TRUE(db.issues.empty());
}

TEST(MaterialCsv, PartialPolarColumnsAreAnIssue) {
    const auto db = parse_material_csv("name,E1,E2,G12,nu12,T0,T1,R0,R1\nA,10,1,0.5,0.3,1,1,,\n");
    EXPECT_TRUE(db.records.empty());
    ASSERT_EQ(db.issues.size(), 1u);
}

TEST(MaterialCsv, BadKIsAnIssue) {
    const auto db = parse_material_csv("name,E1,E2,G12,nu12,T0,T1,R0,R1,K\nA,10,1,0.5,0.3,1,1,1,1,2\n");
    EXPECT_TRUE(db.records.empty());
    EXPECT_EQ(db.issues.size(), 1u);
}

TEST(MaterialJson, ArrayAndWrappedForms) {
    const auto a = parse_material_json(R"([{"name":"A","E1":10,"E2":1,"G12":0.5,"nu12":0.3}])");
    ASSERT_EQ(a.records.size(), 1u);
    EXPECT_DOUBLE_EQ(a.records[0].constants.e1, 10.0);
    const auto b = parse_material_json(
        R"({"materials":[{"name":"A","E1":10,"E2":1,"G12":0.5,"nu12":0.3,"T0":1.66,"T1":1.34,"R0":0.91,"R1":1.2}, 4]})");
    ASSERT_EQ(b.records.size(), 1u);
    ASSERT_TRUE(b.records[0].polar.has_value());
    EXPECT_DOUBLE_EQ(b.records[0].polar->r1, 1.2);
    ASSERT_EQ(b.issues.size(), 1u);
    EXPECT_EQ(b.issues[0].line, 2);
}

TEST(MaterialJson, InvalidDocumentThrows) {
    EXPECT_THROW(parse_material_json("{"), DataError);
    EXPECT_THROW(parse_material_json(R"({"a":1})"), DataError);
}

TEST(MaterialDatabase, FindByIdAndName) {
    const auto db = parse_material_csv(std::string(kHeader) + "A,10,1,0.5,0.3\nB,20,2,1,0.25\nB,30,2,1,0.25\n");
    EXPECT_EQ(db.find("1").constants.name, "A");
    EXPECT_EQ(db.find("A").id, 1);
    EXPECT_THROW(db.find("4"), std::out_of_range);
    EXPECT_THROW(db.find("Z"), std::out_of_range);
    EXPECT_THROW(db.find("B"), std::invalid_argument);
}

TEST(LoadMaterials, MissingFileThrows) {
    EXPECT_THROW(load_materials("/nonexistent/materials.csv"), DataError);
}

TEST(LoadMaterials, BundledDatabase) {
    const auto db = load_materials(LAMINA_TEST_DB);
    ASSERT_EQ(db.records.size(), 15u);
    EXPECT_TRUE(db.issues.empty());
    for (const auto& r : db.records) {
        EXPECT_TRUE(r.polar.has_value());
        EXPECT_TRUE(r.ratios.has_value());
        EXPECT_FALSE(r.provenance.empty());
    }
    EXPECT_EQ(db.records[0].constants.name, "Pine wood");
}

TEST(Validate, FlagsNonPhysicalRecord) {
    const auto db = parse_material_csv(std::string(kHeader) + "bad,1,4,1,0.6\n");
    ASSERT_EQ(db.records.size(), 1u);
    const auto v = validate_record(db.records[0], {});
    EXPECT_FALSE(v.valid);
    ASSERT_FALSE(v.problems.empty());
    EXPECT_NE(v.problems[0].find("non-physical"), std::string::npos);
    EXPECT_THROW(analysis_material(db.records[0]), MaterialError);
}

TEST(Validate, ReportsDeviationsAgainstTolerance) {
    const auto db = parse_material_csv(
        "name,E1,E2,G12,nu12,T0,T1,R0,R1,tau0,tau1,rho\n"
        "carbon,181,10.3,7.17,0.28,26.88,24.74,19.71,21.43,1.254,1.154,0.919\n"
        "off,181,10.3,7.17,0.28,26.80,24.74,19.71,21.43,1.254,1.154,0.919\n");
    const auto ok = validate_record(db.records[0], {});
    EXPECT_TRUE(ok.valid) << (ok.problems.empty() ? "" : ok.problems[0]);
    for (double d : ok.deviation) EXPECT_FALSE(std::isnan(d));
    const auto off = validate_record(db.records[1], {});
    EXPECT_FALSE(off.valid);
    EXPECT_NEAR(off.deviation[0], 0.0804, 1e-3);
    EXPECT_TRUE(validate_record(db.records[1], {.moduli = 0.1, .ratios = 0.001}).valid);
}

TEST(Validate, AbsentPublishedValuesAreNaN) {
    const auto db = parse_material_csv(std::string(kHeader) + "A,10,1,0.5,0.3\n");
    const auto v = validate_record(db.records[0], {});
    EXPECT_TRUE(v.valid);
    for (double d : v.deviation) EXPECT_TRUE(std::isnan(d));
}

TEST(AnalysisMaterial, PrefersPublishedModuli) {
    const auto db = parse_material_csv(
        "name,E1,E2,G12,nu12,T0,T1,R0,R1\nwood,10,0.42,0.75,0.24,1.66,1.34,0.91,1.20\n");
    const auto& r = db.records[0];
    const auto listed = analysis_material(r);
    EXPECT_DOUBLE_EQ(listed.tau0, 1.66 / 1.20);
    const auto derived = analysis_material(r, true);
    EXPECT_NE(derived.tau0, listed.tau0);
    EXPECT_DOUBLE_EQ(derived.tau0, dimensionless(r.constants).tau0);
}

}  // namespace
}  // namespace lamina
