#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

using Json = nlohmann::json;

struct CliResult {
  int status = -1;
  std::string out;
};

/// Runs the CLI through the shell. `redirect` defaults to discarding stderr;
/// pass " 2>&1" to merge it into the captured output. `env` is prepended to
/// the command verbatim.
CliResult run_cli(const std::string& args, const std::string& redirect = " 2>/dev/null",
                  const std::string& env = "") {
  const std::string command = env + std::string(NLPROG_CLI_PATH) + " " + args + redirect;
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t n = 0;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.out.append(buffer, n);
  }
  const int status = pclose(pipe);
  result.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string sample(const std::string& name) {
  return std::string(NLPROG_SAMPLES_DIR) + "/" + name;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = "/tmp/nlprog_cli_" + name;
  std::ofstream(path) << text;
  return path;
}

const std::string kN1Net =
    "node a fact.\n"
    "node b theta 1.\n"
    "node c theta 0.\n"
    "edge a -> b : 1.\n"
    "edge b -> c : -1.\n";

const std::string kN1Program =
    "a.\n"
    "theta b = 1.\n"
    "theta c = 0.\n"
    "b <- a.\n"
    "c <- b : -1.\n";

}  // namespace

TEST_CASE("parse reprints the canonical form") {
  CliResult net = run_cli("parse " + sample("n1.nnet"));
  CHECK(net.status == 0);
  CHECK(net.out == kN1Net);

  CliResult prog = run_cli("parse " + sample("n1.nlp"));
  CHECK(prog.status == 0);
  CHECK(prog.out == kN1Program);
}

TEST_CASE("parse emits JSON on request") {
  CliResult net = run_cli("parse --json " + sample("n1.nnet"));
  CHECK(net.status == 0);
  const Json j = Json::parse(net.out);
  CHECK(j["kind"] == "net");
  CHECK(j["universe"] == Json::array({"a", "b", "c"}));
  CHECK(j["thresholds"]["a"] == "-inf");
  CHECK(j["thresholds"]["b"] == "1");
  CHECK(j["edges"].size() == 2);

  CliResult prog = run_cli("--json parse " + sample("n1.nlp"));
  CHECK(prog.status == 0);
  const Json p = Json::parse(prog.out);
  CHECK(p["kind"] == "program");
  CHECK(p["rules"].size() == 3);
}

TEST_CASE("stdin requires an explicit kind") {
  const std::string file = write_temp("stdin.txt", "node a fact.\n");
  CliResult without = run_cli("parse - < " + file);
  CHECK(without.status == 2);

  CliResult with = run_cli("parse --as net - < " + file);
  CHECK(with.status == 0);
  CHECK(with.out == "node a fact.\n");
}

TEST_CASE("unknown extensions need --as") {
  const std::string file = write_temp("plain.txt", "a.\n");
  CHECK(run_cli("parse " + file).status == 2);

  CliResult forced = run_cli("parse --as program " + file);
  CHECK(forced.status == 0);
  CHECK(forced.out == "a.\n");
}

TEST_CASE("parse errors report a location and exit 3") {
  const std::string file = write_temp("bad.nlp", "a.\nb <- .\n");
  CliResult quiet = run_cli("parse " + file);
  CHECK(quiet.status == 3);
  CHECK(quiet.out.empty());

  CliResult merged = run_cli("parse " + file, " 2>&1");
  CHECK(merged.status == 3);
  CHECK(merged.out.find("bad.nlp:2:") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("").status == 2);
  CHECK(run_cli("frobnicate").status == 2);
  CHECK(run_cli("parse").status == 2);
  CHECK(run_cli("parse --nonsense " + sample("n1.nnet")).status == 2);
  CHECK(run_cli("parse /no/such/file.nnet").status == 2);
  CHECK(run_cli("--help").status == 0);
}

TEST_CASE("tp prints one line per application") {
  CliResult r = run_cli("tp -I a --steps 2 " + sample("n1.nnet"));
  CHECK(r.status == 0);
  CHECK(r.out == "{a, b, c}\n{a, b}\n");

  CliResult j = run_cli("tp -I a --steps 2 --json " + sample("n1.nnet"));
  const Json trace = Json::parse(j.out);
  CHECK(trace["kind"] == "trace");
  CHECK(trace["steps"] ==
        Json::array({Json::array({"a"}), Json::array({"a", "b", "c"}), Json::array({"a", "b"})}));
  CHECK(trace["converged"] == false);
}

TEST_CASE("tp accepts programs and the empty interpretation") {
  CliResult r = run_cli("tp " + sample("n1.nlp"));
  CHECK(r.status == 0);
  CHECK(r.out == "{a, c}\n");
}

TEST_CASE("lfp works on positive inputs and rejects others") {
  const std::string positive =
      write_temp("positive.nnet", "node a fact.\nnode b theta 1.\nedge a -> b : 1.\n");
  CliResult ok = run_cli("lfp " + positive + " --as net");
  CHECK(ok.status == 0);
  CHECK(ok.out == "{a, b}\n");

  CHECK(run_cli("lfp " + sample("n1.nnet")).status == 3);
  CHECK(run_cli("lfp " + sample("n1.nlp")).status == 3);
}

TEST_CASE("models and supported models") {
  CliResult all = run_cli("models " + sample("n1.nnet"));
  CHECK(all.status == 0);
  CHECK(all.out == "{a, b}\n{a, b, c}\n");

  CliResult supported = run_cli("models --supported " + sample("n1.nnet"));
  CHECK(supported.status == 0);
  CHECK(supported.out == "{a, b}\n");

  CliResult json = run_cli("models --supported --json " + sample("n1.nnet"));
  const Json fam = Json::parse(json.out);
  CHECK(fam["kind"] == "supported_models");
  CHECK(fam["count"] == 1);
  CHECK(fam["members"] == Json::array({Json::array({"a", "b"})}));
}

TEST_CASE("answer set semantics selection") {
  CliResult aft = run_cli("answersets " + sample("divergent.nlp"));
  CHECK(aft.status == 0);
  CHECK(aft.out == "{a, c}\n");

  CliResult flp = run_cli("answersets --semantics flp " + sample("divergent.nlp"));
  CHECK(flp.status == 0);
  CHECK(flp.out == "{c}\n{b, c}\n");

  CliResult ultimate = run_cli("answersets --semantics ultimate " + sample("divergent.nlp"));
  CHECK(ultimate.status == 0);
}

TEST_CASE("flp on a net translates first and says so") {
  CliResult r = run_cli("answersets --semantics flp " + sample("n1.nnet"), " 2>&1");
  CHECK(r.status == 0);
  CHECK(r.out.find("translated") != std::string::npos);

  CliResult j = run_cli("answersets --semantics flp --json " + sample("n1.nnet"));
  const Json fam = Json::parse(j.out);
  CHECK(fam["kind"] == "flp_answer_sets");
  REQUIRE(fam.contains("notes"));
  CHECK(fam["notes"].size() == 1);
}

TEST_CASE("ultimate semantics rejects non-minimalist programs") {
  const std::string file =
      write_temp("multi.nlp", "a.\ntheta b = 1.\nb <- a.\nb <- a : 2.\n");
  CHECK(run_cli("answersets --semantics ultimate " + file).status == 3);
  CHECK(run_cli("answersets " + file).status == 0);
}

TEST_CASE("eval feeds a layered net forward") {
  CliResult r = run_cli("eval --input x " + sample("xor.nnet"));
  CHECK(r.status == 0);
  CHECK(r.out == "{z}\n");

  CliResult both = run_cli("eval --input x,y " + sample("xor.nnet"));
  CHECK(both.status == 0);
  CHECK(both.out == "{}\n");

  CHECK(run_cli("eval --input z " + sample("xor.nnet")).status == 3);
  CHECK(run_cli("eval --input a " + sample("n1.nlp")).status == 2);
}

TEST_CASE("layers prints the partition or rejects cycles") {
  CliResult r = run_cli("layers " + sample("xor.nnet"));
  CHECK(r.status == 0);
  CHECK(r.out == "1: {x, y}\n2: {h1, h2}\n3: {z}\n");

  const std::string cyclic = write_temp(
      "cyclic.nnet",
      "node a fact.\nnode b theta 0.\nnode c theta 0.\nedge b -> c : 1.\nedge c -> b : 1.\n");
  CHECK(run_cli("layers " + cyclic + " --as net").status == 3);
}

TEST_CASE("translate converts between the two forms") {
  CliResult to_prog = run_cli("translate --to program " + sample("n1.nnet"));
  CHECK(to_prog.status == 0);
  CHECK(to_prog.out == kN1Program);

  CliResult to_net = run_cli("translate --to net " + sample("n1.nlp"));
  CHECK(to_net.status == 0);
  CHECK(to_net.out == kN1Net);

  CHECK(run_cli("translate --to net " + sample("n1.nnet")).status == 2);
  CHECK(run_cli("translate --to program " + sample("n1.nlp")).status == 2);
}

TEST_CASE("equiv compares across kinds and exits 1 on a difference") {
  CliResult same = run_cli("equiv " + sample("n1.nnet") + " " + sample("n1.nlp"));
  CHECK(same.status == 0);
  CHECK(same.out.find("not equivalent") == std::string::npos);

  const std::string weak =
      write_temp("weak.nnet", "node a fact.\nnode b theta 1.\nedge a -> b : 1.\n");
  const std::string strong =
      write_temp("strong.nnet", "node a fact.\nnode b theta 2.\nedge a -> b : 1.\n");
  CliResult diff = run_cli("equiv " + weak + " " + strong + " --as net");
  CHECK(diff.status == 1);
  CHECK(diff.out.find("not equivalent") != std::string::npos);

  CliResult kind = run_cli("equiv --kind subsumption " + weak + " " + strong + " --as net --json");
  CHECK(kind.status == 1);
  const Json verdict = Json::parse(kind.out);
  CHECK(verdict["kind"] == "equivalence");
  CHECK(verdict["check"] == "subsumption");
  CHECK(verdict["equivalent"] == false);
  REQUIRE(verdict.contains("witness"));
  CHECK(verdict["witness"]["point"] == Json::array({"a"}));

  CliResult ladder = run_cli("equiv --json " + sample("n1.nnet") + " " + sample("n1.nlp"));
  CHECK(ladder.status == 0);
  const Json report = Json::parse(ladder.out);
  CHECK(report["kind"] == "equivalence");
  CHECK(report["all_equivalent"] == true);
  CHECK(report["checks"].size() == 4);
  CHECK(report["notes"].size() == 1);
}

TEST_CASE("enumeration cap applies from flag or environment") {
  CHECK(run_cli("models --cap 3 " + sample("xor.nnet")).status == 4);
  CHECK(run_cli("models " + sample("xor.nnet"), " 2>/dev/null", "NLPROG_CAP=3 ").status == 4);
  CHECK(run_cli("models --cap 32 " + sample("xor.nnet"), " 2>/dev/null", "NLPROG_CAP=3 ").status ==
        0);
}

TEST_CASE("permit-zero-weights is honoured") {
  const std::string file = write_temp("zero.nlp", "a.\ntheta b = 1.\nb <- a : 0.\n");
  CHECK(run_cli("parse " + file).status == 3);
  CHECK(run_cli("parse --permit-zero-weights " + file).status == 0);
}

TEST_CASE("all-errors reports every diagnostic") {
  const std::string file = write_temp("multibad.nlp", "theta a = 1/0.\nb <- ?x.\nc <- .\n");
  CliResult single = run_cli("parse " + file, " 2>&1");
  CHECK(single.status == 3);

  CliResult all = run_cli("parse --all-errors " + file, " 2>&1");
  CHECK(all.status == 3);
  CHECK(std::count(all.out.begin(), all.out.end(), '\n') >= 3);
}

TEST_CASE("explore-flp is reproducible and writes reports") {
  const std::string args = "explore-flp --count 40 --max-neurons 5 --neg-fraction 0.45 --seed 11";
  CliResult first = run_cli(args);
  CliResult second = run_cli(args);
  CHECK(first.status == 0);
  CHECK(first.out == second.out);

  const Json report = Json::parse(first.out);
  CHECK(report["kind"] == "flp_experiment");
  CHECK(report["instances"] == 40);
  CHECK(report["agreeing_instances"].get<std::size_t>() +
            report["counterexamples"].size() <=
        40);

  CliResult dir = run_cli(args + " --out-dir /tmp/nlprog_cli_flp");
  CHECK(dir.status == 0);
  std::ifstream written("/tmp/nlprog_cli_flp/report.json");
  REQUIRE(written.good());
  std::string on_disk((std::istreambuf_iterator<char>(written)),
                      std::istreambuf_iterator<char>());
  CHECK(on_disk == first.out);
}
