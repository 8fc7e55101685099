#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <thread>

#include "rlab/cli/commands.hpp"
#include "rlab/cli/envelope.hpp"
#include "rlab/cli/store.hpp"

using namespace rlab::cli;
namespace fs = std::filesystem;

namespace {

RunConfig cfg(std::string command, std::string sub, std::vector<std::string> fixtures = {}) {
  RunConfig c;
  c.command = std::move(command);
  c.subcommand = std::move(sub);
  c.fixtures = std::move(fixtures);
  c.workers = 2;
  return c;
}

const Json& check(const Json& payload, const std::string& name) {
  for (const auto& c : payload.at("checks"))
    if (c.at("name") == name) return c;
  throw std::runtime_error("no check " + name);
}

int run_binary(const std::string& args) {
  std::string cmd = std::string(RLAB_CLI_BINARY) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path temp_dir(const std::string& name) {
  fs::path d = fs::temp_directory_path() / ("rlab_test_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(d);
  return d;
}

}  // namespace

TEST(Envelope, Sha256KnownVector) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST(Envelope, CanonicalTextSortsKeys) {
  Json a = Json::parse(R"({"b":1,"a":[2,{"d":3,"c":4}]})");
  EXPECT_EQ(canonical_text(a), R"({"a":[2,{"c":4,"d":3}],"b":1})");
}

TEST(Envelope, RoundTripAndTamperDetection) {
  Outcome o = run_command(cfg("group", "abelianize", {"gamma4"}));
  Json j = o.envelope.to_json();
  EXPECT_TRUE(verify_envelope(j));
  Json reread = Json::parse(j.dump(2));
  EXPECT_TRUE(verify_envelope(reread));
  ResultEnvelope e = ResultEnvelope::from_json(reread);
  EXPECT_EQ(e.checksum, o.envelope.checksum);
  EXPECT_EQ(e.payload, o.envelope.payload);
  EXPECT_EQ(e.payload_schema, "rigidity-lab/abelianize/v1");
  EXPECT_EQ(e.tool_version, kToolVersion);
  reread["payload"]["invariants"][0] = 5;
  EXPECT_FALSE(verify_envelope(reread));
}

TEST(Determinism, RepeatedRunsGiveIdenticalPayloads) {
  std::vector<RunConfig> configs{cfg("group", "abelianize", {"fib8"}), cfg("group", "cosets", {"gamma4-a3"}),
                                 cfg("group", "subgroups", {"gamma-empty"}), cfg("group", "luck", {"free2"}),
                                 cfg("fingerprint", "", {"delta4", "gamma4"}), cfg("charvar", "")};
  configs[2].index = 6;
  configs[3].index = 8;
  configs[4].bound = 12;
  configs[5].n = {5, 6};
  for (const auto& c : configs) {
    Outcome a = run_command(c), b = run_command(c);
    EXPECT_EQ(canonical_text(a.envelope.payload), canonical_text(b.envelope.payload)) << c.command << c.subcommand;
    EXPECT_EQ(a.envelope.checksum, b.envelope.checksum);
  }
}

TEST(Determinism, WorkerCountDoesNotChangePayload) {
  RunConfig c = cfg("fingerprint", "", {"b1", "b2"});
  c.bound = 50;
  c.workers = 1;
  Outcome a = run_command(c);
  c.workers = 4;
  Outcome b = run_command(c);
  EXPECT_EQ(a.envelope.checksum, b.envelope.checksum);
}

TEST(Commands, Abelianize) {
  Outcome o = run_command(cfg("group", "abelianize", {"gamma4"}));
  EXPECT_EQ(o.exit_code, kOk);
  EXPECT_EQ(o.envelope.payload["invariants"], Json::parse("[3,15]"));
  EXPECT_TRUE(check(o.envelope.payload, "abelian_invariants")["ok"]);
  o = run_command(cfg("group", "abelianize", {"delta4"}));
  EXPECT_EQ(o.envelope.payload["invariants"], Json::parse("[4]"));
}

TEST(Commands, SubgroupsOfGammaEmpty) {
  RunConfig c = cfg("group", "subgroups", {"gamma-empty"});
  c.index = 4;
  Outcome o = run_command(c);
  EXPECT_EQ(o.exit_code, kOk);
  EXPECT_EQ(check(o.envelope.payload, "index4_classes")["actual"], 11);
  EXPECT_EQ(check(o.envelope.payload, "index4_with_invariants_[4]")["actual"], 1);
}

TEST(Commands, CosetsOfDeltaTwoReportsMismatch) {
  // The enumeration finds a dihedral group of order 10, not the expected order 8.
  Outcome o = run_command(cfg("group", "cosets", {"delta2"}));
  EXPECT_EQ(o.envelope.payload["index"], 10);
  EXPECT_EQ(o.envelope.payload["quotient"]["label"], "D10");
  EXPECT_FALSE(check(o.envelope.payload, "order")["ok"]);
  EXPECT_TRUE(check(o.envelope.payload, "dihedral")["ok"]);
  EXPECT_EQ(o.exit_code, kMismatch);
  ASSERT_EQ(o.problems.size(), 1u);
}

TEST(Commands, CosetOverflowExitCode) {
  RunConfig c = cfg("group", "cosets", {"delta3"});
  c.limit = 300;
  Outcome o = run_command(c);
  EXPECT_EQ(o.exit_code, kOverflow);
  EXPECT_EQ(o.envelope.payload["status"], "Overflowed");
  EXPECT_TRUE(o.envelope.payload["index"].is_null());
}

TEST(Commands, StrategiesAgree) {
  RunConfig c = cfg("group", "cosets", {"gamma4-a3"});
  Outcome hlt = run_command(c);
  c.strategy = "felsch";
  Outcome felsch = run_command(c);
  EXPECT_EQ(hlt.envelope.payload["index"], 81);
  EXPECT_EQ(felsch.envelope.payload["index"], 81);
  EXPECT_EQ(hlt.envelope.payload["quotient"]["invariants"], felsch.envelope.payload["quotient"]["invariants"]);
}

TEST(Commands, ReidemeisterSchreier) {
  RunConfig c = cfg("group", "rs", {"delta4"});
  c.subgroup = {"b a^-1", "a^-1 b"};
  Outcome o = run_command(c);
  EXPECT_EQ(o.exit_code, kOk);
  EXPECT_EQ(o.envelope.payload["index"], 4);
  EXPECT_EQ(o.envelope.payload["invariants"], Json::parse("[3,15]"));
}

TEST(Commands, LuckChains) {
  RunConfig c = cfg("group", "luck", {"free2"});
  c.index = 8;
  Outcome o = run_command(c);
  EXPECT_EQ(o.exit_code, kOk);
  std::vector<std::string> values;
  for (const auto& e : o.envelope.payload["chain"]) values.push_back(e["value"]);
  EXPECT_EQ(values, (std::vector<std::string>{"2", "3/2", "5/4", "9/8"}));
  c.fixtures = {"gamma4"};
  c.index = 15;
  o = run_command(c);
  EXPECT_EQ(o.exit_code, kOk);
  ASSERT_GE(o.envelope.payload["chain"].size(), 2u);
  for (const auto& e : o.envelope.payload["chain"]) EXPECT_EQ(e["value"], "0");
}

TEST(Commands, FingerprintExamples) {
  RunConfig c = cfg("fingerprint", "", {"delta4", "gamma4"});
  c.bound = 3;
  Outcome o = run_command(c);
  EXPECT_EQ(o.exit_code, kOk);
  EXPECT_EQ(o.envelope.payload["verdict"], "distinguished");
  EXPECT_EQ(o.envelope.payload["only_h"]["label"], "Z/3");

  c.fixtures = {"b1", "b2"};
  c.bound = 200;
  o = run_command(c);
  EXPECT_EQ(o.exit_code, kOk);
  EXPECT_EQ(o.envelope.payload["verdict"], "equal");
  EXPECT_TRUE(o.envelope.payload["G"]["complete"]);
  EXPECT_TRUE(o.envelope.payload["H"]["complete"]);

  c.fixtures = {"free2", "free2"};
  c.bound = 16;
  o = run_command(c);
  EXPECT_EQ(o.envelope.payload["verdict"], "equal");

  c.fixtures = {"free2", "free2:sub=a^2,b,a b a^-1"};
  c.bound = 8;
  o = run_command(c);
  EXPECT_EQ(o.exit_code, kOk);
  EXPECT_EQ(o.envelope.payload["distinguisher"]["quotient"]["label"], "(Z/2)^3");
  EXPECT_EQ(o.envelope.payload["distinguisher"]["side"], "H");
}

TEST(Commands, PartialFingerprintIsRefused) {
  RunConfig c = cfg("fingerprint", "", {"b1", "b2"});
  c.bound = 100;
  c.max_nodes = 30;
  Outcome o = run_command(c);
  EXPECT_EQ(o.exit_code, kOverflow);
  EXPECT_EQ(o.envelope.payload["verdict"], "refused");
  EXPECT_FALSE(o.envelope.payload.contains("distinguisher"));
  EXPECT_FALSE(o.problems.empty());
  EXPECT_NE(o.envelope.payload["G"]["diagnostics"].get<std::string>().find("budget"), std::string::npos);
}

TEST(Commands, Charvar) {
  RunConfig c = cfg("charvar", "");
  c.n = {5, 9};
  Outcome o = run_command(c);
  EXPECT_EQ(o.exit_code, kOk);
  EXPECT_EQ(o.envelope.payload["reports"][0]["trace_field_degree"], 4);
  EXPECT_EQ(o.envelope.payload["reports"][1]["admissible_abs_T"].size(), 3u);
  c.n = {7};
  c.k = 2;
  o = run_command(c);
  ASSERT_EQ(o.envelope.payload["reports"][0]["specializations"].size(), 1u);
  EXPECT_EQ(o.envelope.payload["reports"][0]["specializations"][0]["k"], 2);
}

TEST(Commands, RigidityPrecisionAndSkip) {
  RunConfig c = cfg("rigidity", "gamma4");
  c.precision = 50;
  Outcome o = run_command(c);
  EXPECT_EQ(o.exit_code, kOk);
  EXPECT_EQ(o.envelope.payload["certificate"]["x_poly"], "x^4 - x^3 + 3*x^2 - x + 1");
  EXPECT_LT(o.envelope.payload["numeric"]["residual_log10"].get<double>(), -40);
  c.skip_numeric = true;
  o = run_command(c);
  EXPECT_FALSE(o.envelope.payload.contains("numeric"));
  EXPECT_EQ(o.exit_code, kOk);
}

TEST(ConfigErrors, Rejected) {
  RunConfig c = cfg("charvar", "");
  c.n = {8};
  try {
    run_command(c);
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("epimorphism onto Delta_4"), std::string::npos);
  }
  c.n = {10};
  EXPECT_THROW(run_command(c), ConfigError);

  RunConfig f = cfg("fingerprint", "", {"free2"});
  f.bound = 600;
  EXPECT_THROW(run_command(f), ConfigError);
  f.bound = 0;
  EXPECT_THROW(run_command(f), ConfigError);
  EXPECT_THROW(run_command(cfg("group", "abelianize", {"nosuchgroup"})), ConfigError);
  EXPECT_THROW(run_command(cfg("group", "abelianize", {"free2", "free3"})), ConfigError);
  EXPECT_THROW(run_command(cfg("group", "frobnicate", {"free2"})), ConfigError);
  RunConfig w = cfg("group", "cosets", {"free2"});
  w.subgroup = {"a^"};
  EXPECT_THROW(run_command(w), ConfigError);
  w.subgroup = {"z"};
  EXPECT_THROW(run_command(w), ConfigError);
  w.subgroup = {};
  w.strategy = "random";
  EXPECT_THROW(run_command(w), ConfigError);
}

TEST(ConfigErrors, ParseErrorCarriesPosition) {
  fs::path d = temp_dir("parse");
  fs::create_directories(d);
  fs::path file = d / "bad.txt";
  std::ofstream(file) << "group g a,b\nrel a b ^^ 2\n";
  RunConfig c = cfg("group", "abelianize");
  c.files = {file.string()};
  try {
    run_command(c);
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
  fs::remove_all(d);
}

TEST(Binary, ExitCodes) {
  EXPECT_EQ(run_binary("group abelianize --fixture gamma4"), 0);
  EXPECT_EQ(run_binary("group abelianize --fixture gamma4 --no-such-flag"), 2);
  EXPECT_EQ(run_binary("group abelianize --fixture gamma4 --limit 0"), 2);
  EXPECT_EQ(run_binary("charvar --n 8"), 2);
  EXPECT_EQ(run_binary("fingerprint --fixture free2 --bound 513"), 2);
  EXPECT_EQ(run_binary("group cosets --fixture delta3 --limit 200"), 3);
  EXPECT_EQ(run_binary("group cosets --fixture delta2"), 4);
  EXPECT_EQ(run_binary("--help"), 0);
  EXPECT_EQ(run_binary(""), 2);
}

TEST(Binary, OutputMatchesStore) {
  fs::path d = temp_dir("bin");
  ASSERT_EQ(run_binary("group abelianize --fixture fib8 --out " + d.string()), 0);
  int files = 0;
  for (const auto& e : fs::directory_iterator(d))
    if (e.path().extension() == ".json") {
      ++files;
      std::ifstream in(e.path());
      EXPECT_TRUE(verify_envelope(Json::parse(in)));
    }
  EXPECT_EQ(files, 1);
  fs::remove_all(d);
}

TEST(Store, PutGetAndIndex) {
  fs::path d = temp_dir("store");
  ResultStore store(d);
  Outcome a = run_command(cfg("group", "abelianize", {"gamma4"}));
  Outcome b = run_command(cfg("group", "abelianize", {"delta4"}));
  fs::path pa = store.put(a.envelope);
  store.put(b.envelope);
  store.put(a.envelope);
  EXPECT_EQ(pa.filename().string(), a.envelope.checksum.substr(7) + ".json");
  EXPECT_EQ(store.get(a.envelope.checksum)["payload"], a.envelope.payload);

  std::ifstream idx(d / "index.tsv");
  std::vector<std::string> lines;
  for (std::string l; std::getline(idx, l);) lines.push_back(l);
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[0], "checksum\ttimestamp\tcommand\tinputs\tstatus");
  EXPECT_NE(lines[3].find("existing"), std::string::npos);

  // Corrupt the stored payload: get must refuse it.
  Json j = Json::parse(std::ifstream(pa));
  j["payload"]["betti"] = 7;
  std::ofstream(pa) << j.dump();
  EXPECT_THROW(store.get(a.envelope.checksum), std::runtime_error);
  EXPECT_THROW(store.get("sha256:0000"), std::runtime_error);
  fs::remove_all(d);
}

TEST(Store, ConcurrentWritersKeepIndexIntact) {
  fs::path d = temp_dir("concurrent");
  ResultStore store(d);
  std::vector<ResultEnvelope> envs;
  for (const char* f : {"gamma4", "delta4", "fib8", "free2", "b1", "b2", "figure8", "surface2"})
    envs.push_back(run_command(cfg("group", "abelianize", {f})).envelope);
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t)
    threads.emplace_back([&, t] {
      ResultStore local(d);
      for (int r = 0; r < 5; ++r) local.put(envs[(t + r) % envs.size()]);
    });
  for (auto& t : threads) t.join();
  std::ifstream idx(d / "index.tsv");
  std::size_t lines = 0;
  for (std::string l; std::getline(idx, l);) ++lines;
  EXPECT_EQ(lines, 1u + 8 * 5);
  for (const auto& e : envs) EXPECT_NO_THROW(store.get(e.checksum));
  fs::remove_all(d);
}
