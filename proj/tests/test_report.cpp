#include <clocale>
#include <sstream>

#include <gtest/gtest.h>

#include "sdqc/report.hpp"

using namespace sdqc;

TEST(Report, NumbersAreShortestRoundTrip) {
    EXPECT_EQ(report::num(0.5), "0.5");
    EXPECT_EQ(report::num(1e-15), "1e-15");
    EXPECT_EQ(report::num(1716.0), "1716");
    EXPECT_EQ(report::num(42LL), "42");
    double x = 0.1 + 0.2;
    EXPECT_EQ(std::stod(report::num(x)), x);
}

TEST(Report, LocaleIndependent) {
    const char* prev = std::setlocale(LC_NUMERIC, nullptr);
    std::string saved = prev ? prev : "C";
    if (std::setlocale(LC_NUMERIC, "de_DE.UTF-8")) {
        EXPECT_EQ(report::num(2.5), "2.5");
        std::setlocale(LC_NUMERIC, saved.c_str());
    }
    EXPECT_EQ(report::num(2.5), "2.5");
}

TEST(Report, CsvQuoting) {
    std::ostringstream os;
    report::CsvWriter w(os);
    w.row({"a", "b,c", "say \"hi\"", ""});
    EXPECT_EQ(os.str(), "a,\"b,c\",\"say \"\"hi\"\"\",\n");
}

TEST(Report, EvalRowMatchesColumns) {
    Scenario s;
    s.improvements = {10, 10};
    auto r = evaluate(ecdlp(), s);
    auto cells = report::eval_cells(r);
    ASSERT_EQ(cells.size(), report::eval_columns().size());
    EXPECT_EQ(cells[0], "ecdlp");
    EXPECT_EQ(cells[1], "sdqc");
    EXPECT_EQ(cells[2], "13");
    EXPECT_EQ(cells[3], "10");
    EXPECT_EQ(std::stod(cells[10]), r.success.central);
}

TEST(Report, EvalJsonMirrorsFields) {
    auto r = evaluate(fermi_hubbard(), Scenario{});
    auto j = report::to_json(r);
    EXPECT_EQ(j["app"], "fermi-hubbard");
    EXPECT_DOUBLE_EQ(j["success"]["central"].get<double>(), r.success.central);
    EXPECT_EQ(j["space"]["total"].get<long long>(), r.space->total);
    EXPECT_EQ(j["scenario"]["sweep"]["n_logical"].get<long long>(), 132);
    EXPECT_TRUE(j.contains("loss"));
}

TEST(Report, FailedRowKeepsIdentity) {
    SweepRow row{ArchKind::QCCD, 15, 2.0, std::nullopt, "no fit"};
    auto cells = report::failed_cells("ecdlp", row);
    ASSERT_EQ(cells.size(), report::eval_columns().size());
    EXPECT_EQ(cells[1], "qccd");
    EXPECT_EQ(cells[2], "15");
    EXPECT_EQ(cells.back(), "error: no fit");
}

TEST(Report, LayoutRows) {
    std::ostringstream os;
    report::CsvWriter w(os);
    report::layout_rows(w, chain_mapping(ArchKind::SDQC, 13));
    std::string text = os.str();
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 6);
    EXPECT_NE(text.find("sdqc,13,5,29,14,15,58"), std::string::npos);
}
