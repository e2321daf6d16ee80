#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct Result {
  int code = -1;
  std::string out;
};

// Runs the CLI with `args` through the shell; stderr is discarded unless
// `keep_stderr` folds it into the captured text.
Result run(const std::string& args, bool keep_stderr = false) {
  const std::string cmd = std::string(PRIME_GAUGE_CLI) + " " + args +
                          (keep_stderr ? " 2>&1" : " 2>/dev/null");
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out(1);
  for (char c : s) {
    if (c == ',') {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  return out;
}

TEST(Cli, TableOne) {
  const Result r = run("table --id 1");
  EXPECT_EQ(r.code, 0);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 11u);
  EXPECT_EQ(rows[0], "n,leg");
  const char* leg[] = {"2", "2", "2", "3", "2", "4", "3", "4", "3", "5"};
  for (int i = 0; i < 10; ++i) EXPECT_EQ(split(rows[i + 1])[1], leg[i]);
}

TEST(Cli, NthBoundRecord) {
  const Result r = run("nth-bound --n 32");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).at(1), "nth_bound,32,131,3,4,448,true");
}

TEST(Cli, CountRecord) {
  const Result r = run("count --n 10 --k 50");
  EXPECT_EQ(r.code, 0);
  const auto row = split(lines(r.out).at(1));
  EXPECT_EQ(row.at(3), "91");
}

TEST(Cli, ViolationsExitOne) {
  const Result r = run("nth-bound --n 3", true);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("violation: nth_bound n=3"), std::string::npos) << r.out;
  EXPECT_EQ(run("leg-scan --from 1 --to 50").code, 0);
}

TEST(Cli, UsageErrorsExitTwo) {
  const std::string bad[] = {
      "",
      "leg",
      "leg --n",
      "leg --n abc",
      "leg --n -4",
      "leg --n 99999999999999999999999",
      "leg --n 3 --bogus",
      "frobnicate",
      "table --id 6",
      "--format xml leg --n 3",
      "--budget 9999 leg --n 3",
      "--threads 0 leg --n 3",
      "bounds --n 4",
      "rosser --n 17",
      "nagura --n 25",
      "count --n 10 --k 1",
      "threshold --k 1",
      "crossover --k 1",
      "nth-bound --n 2",
      "pnt-ratio --n 1",
      "brocard --i 0",
  };
  for (const auto& args : bad) EXPECT_EQ(run(args).code, 2) << args;
  const Result r = run("leg --n 3 --bogus", true);
  EXPECT_NE(r.out.find("--bogus"), std::string::npos);
  EXPECT_NE(r.out.find("Usage"), std::string::npos);
}

TEST(Cli, ResourceErrorsExitThree) {
  EXPECT_EQ(run("--budget 10000 leg --n 1000").code, 3);
  EXPECT_EQ(run("--budget 10000 table --id 2").code, 3);
  EXPECT_EQ(run("ubcount --n 1099511627776 --k 1073741824").code, 3);
  EXPECT_EQ(run("count --n 18446744073709551615 --k 2").code, 3);
}

TEST(Cli, BudgetFromEnvironment) {
  const auto sh = [&](const std::string& args) {
    return std::system(("env " + std::string("PRIME_GAUGE_BUDGET=20000 ") + PRIME_GAUGE_CLI +
                        " " + args + " >/dev/null 2>&1")
                           .c_str());
  };
  EXPECT_EQ(WEXITSTATUS(sh("leg --n 100")), 0);
  EXPECT_EQ(WEXITSTATUS(sh("leg --n 200")), 3);
  EXPECT_EQ(WEXITSTATUS(sh("--budget 100000 leg --n 200")), 0);
}

TEST(Cli, FormatsCarryTheSameData) {
  const std::string cases[] = {"leg-scan --from 1 --to 20", "bounds --n 500",
                               "threshold --k 22 --scan-limit 500", "brocard --i 9 --decompose",
                               "nth-bound --n 2000", "ubcount --n 500 --k 10", "crossover --k 7",
                               "pnt-ratio --n 1000", "table --id 2", "table --id 4"};
  for (const auto& args : cases) {
    const Result csv = run("--format csv " + args);
    const Result json = run("--format json " + args);
    ASSERT_EQ(csv.code, json.code) << args;
    const auto rows = lines(csv.out);
    const auto arr = nlohmann::json::parse(json.out);
    const auto header = split(rows.at(0));
    ASSERT_EQ(arr.size(), rows.size() - 1) << args;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto row = split(rows[i + 1]);
      ASSERT_EQ(row.size(), header.size()) << args;
      ASSERT_EQ(arr[i].size(), header.size()) << args;
      for (std::size_t c = 0; c < header.size(); ++c) {
        const auto& v = arr[i].at(header[c]);
        if (v.is_string()) {
          EXPECT_EQ(v.get<std::string>(), row[c]) << args;
        } else if (v.is_boolean()) {
          EXPECT_EQ(v.get<bool>() ? "true" : "false", row[c]) << args;
        } else if (v.is_number_unsigned()) {
          EXPECT_EQ(std::to_string(v.get<std::uint64_t>()), row[c]) << args;
        } else if (v.is_null()) {
          EXPECT_EQ(row[c], "") << args;
        } else {
          EXPECT_DOUBLE_EQ(v.get<double>(), std::stod(row[c])) << args << " " << header[c];
        }
      }
    }
  }
}

TEST(Cli, OutFileAndDeterminism) {
  const std::string path = ::testing::TempDir() + "prime_gauge_cli_out.csv";
  ASSERT_EQ(run("--out " + path + " --threads 1 leg-scan --from 1 --to 3000").code, 0);
  std::FILE* f = std::fopen(path.c_str(), "r");
  ASSERT_NE(f, nullptr);
  std::string file;
  std::array<char, 4096> buf{};
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), f)) file.append(buf.data(), got);
  std::fclose(f);
  EXPECT_EQ(file, run("--threads 7 leg-scan --from 1 --to 3000").out);
  EXPECT_EQ(lines(file).size(), 3001u);
  EXPECT_EQ(run("--out /nonexistent/dir/x.csv leg --n 3").code, 2);
}

}  // namespace
