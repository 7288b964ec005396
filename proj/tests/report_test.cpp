#include <gtest/gtest.h>

#include "unisylow/report.hpp"

using namespace unisylow;

TEST(Report, RendersBlocksInOrder) {
  Report r;
  r.config("command", "verify");
  r.config("seed", "7");
  r.add("a.first", "x = x", true).set("count", std::uint64_t{3}).set("mode", "exhaustive");
  r.add("a.second", "y = y", false).set("ok", false);
  const std::string expected =
      "[report]\n"
      "tool = unisylow 0.1.0\n"
      "command = verify\n"
      "seed = 7\n"
      "\n[check]\nname = a.first\nanchor = x = x\nstatus = pass\ncount = 3\nmode = exhaustive\n"
      "\n[check]\nname = a.second\nanchor = y = y\nstatus = fail\nok = false\n"
      "\n[summary]\nchecks = 2\npassed = 1\nfailed = 1\nverdict = fail\n";
  EXPECT_EQ(r.render(), expected);
  EXPECT_FALSE(r.pass());
  EXPECT_EQ(r.failed(), 1u);
}

TEST(Report, TimingOnlyOnRequest) {
  Report r;
  Check& c = r.add("t", "timed", true);
  c.seconds = 1.23456;
  EXPECT_EQ(r.render().find("seconds"), std::string::npos);
  EXPECT_NE(r.render(true).find("seconds = 1.235\n"), std::string::npos);
}

TEST(Report, NotesNeverFail) {
  Report r;
  r.note("n", "informational").set("status_detail", "unverified");
  EXPECT_TRUE(r.pass());
  EXPECT_NE(r.render().find("informational = true"), std::string::npos);
  EXPECT_NE(r.render().find("verdict = pass"), std::string::npos);
}

TEST(Report, EmptyReportPasses) {
  Report r;
  EXPECT_TRUE(r.pass());
  EXPECT_NE(r.render().find("checks = 0\n"), std::string::npos);
}
