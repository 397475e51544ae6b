#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "ncsym/element.hpp"
#include "ncsym/json_io.hpp"
#include "ncsym/lattice_algebra.hpp"
#include "ncsym/set_partition.hpp"

using namespace ncsym;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs the installed binary (path in $NCSYM_CLI) through the shell and
// captures one stream: stdout by default, stderr on request.
Run cli(const std::string& args, bool capture_stderr = false) {
  const char* exe = std::getenv("NCSYM_CLI");
  REQUIRE(exe != nullptr);
  std::string cmd = std::string(exe) + " " + args +
                    (capture_stderr ? " 2>&1 1>/dev/null" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Run r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in), {});
}

SetPartition sp(const std::string& text) { return parse_partition(text); }

}  // namespace

TEST_CASE("worked lattice examples") {
  auto mu = cli("mobius \"1|2|3\" \"1,2,3\"");
  CHECK(mu.status == 0);
  CHECK(mu.out == "2\n");
  CHECK(cli("--json mobius \"1|2|3\" \"1,2,3\"").out == "{\"value\":\"2\"}\n");

  auto m = cli("op meet \"1,3,8|2,4|5|6,7\" \"1|2,3,8|4,5,6,7\"");
  CHECK(m.status == 0);
  CHECK(m.out == "1|2|3,8|4|5|6,7\n");
  CHECK(cli("op join \"1,3,8|2,4|5|6,7\" \"1|2,3,8|4,5,6,7\"").out ==
        "1,2,3,4,5,6,7,8\n");
}

TEST_CASE("structural operations") {
  CHECK(cli("op concat \"1,2\" \"1|2\"").out == "1,2|3|4\n");
  CHECK(cli("op refines \"1|2|3\" \"1,2|3\"").out == "true\n");
  CHECK(cli("op refines \"1,2|3\" \"1|2|3\"").out == "false\n");
  CHECK(cli("op split \"1,2|3\" 2").out == "1,2 1\n");
  CHECK(cli("op split \"1,2|3\" 1").out == "none\n");
  CHECK(cli("--json op split \"1,2|3\" 1").out == "null\n");
  CHECK(cli("op restrict \"1,3,6,8|2|4|5,7,9\" 1,4").out ==
        "1,2,4,6|3,5,7\n");
  CHECK(cli("op standardize \"3,9|5\"").out == "1,3|2\n");
  CHECK(cli("op type 2,5,2").out == "1,3|2\n");
  CHECK(cli("op shape \"1,3,8|2,4|5|6,7\"").out == "3,2,2,1\n");
  // partitions may arrive as JSON block lists
  CHECK(cli("op meet '[[1,3],[2]]' \"1|2,3\"").out == "1|2|3\n");
}

TEST_CASE("enumeration") {
  auto r = cli("enumerate 3");
  CHECK(r.status == 0);
  CHECK(r.out == "1|2|3\n1|2,3\n1,3|2\n1,2|3\n1,2,3\n");
  CHECK(cli("enumerate 10 --count").out == "115975\n");
  CHECK(cli("enumerate 12 --count").out == "4213597\n");

  auto too_big = cli("enumerate 12", true);
  CHECK(too_big.status == 3);
  CHECK(too_big.out.find("RangeError") != std::string::npos);
}

TEST_CASE("basis conversion and products") {
  auto r = cli("convert --from p --to m \"1|2\"");
  CHECK(r.status == 0);
  CHECK(r.out == "m{1,2} + m{1|2}\n");

  auto j = cli("--json convert --from p --to m \"1|2\"");
  auto elem = convert(NCSymElement::basis_vector(Basis::p, sp("1|2")),
                      Basis::m);
  CHECK(parse_json(j.out) == element_to_json(elem));

  CHECK(cli("convert --from x --to m \"1,2\"").out == "-m{1|2}\n");
  CHECK(cli("mul --basis m \"1\" \"1\"").out == "m{1,2} + m{1|2}\n");
  CHECK(cli("mul --basis x \"1\" \"1\"").out == "x{1|2}\n");
}

TEST_CASE("element arguments as JSON and @file") {
  auto elem = NCSymElement::basis_vector(Basis::p, sp("1|2"));
  std::string path = "cli_elem_arg.json";
  {
    std::ofstream out(path);
    out << element_to_json(elem).dump();
  }
  auto from_file = cli("convert --to m @" + path);
  CHECK(from_file.status == 0);
  CHECK(from_file.out == "m{1,2} + m{1|2}\n");
  std::remove(path.c_str());

  auto inline_json =
      cli("convert --to m '" + element_to_json(elem).dump() + "'");
  CHECK(inline_json.out == "m{1,2} + m{1|2}\n");

  // a JSON element that contradicts --from is refused
  auto clash =
      cli("convert --from m --to m '" + element_to_json(elem).dump() + "'",
          true);
  CHECK(clash.status == 3);
  CHECK(clash.out.find("BasisMismatchError") != std::string::npos);
}

TEST_CASE("coproducts") {
  CHECK(cli("coproduct --kind external --basis x \"1,2\"").out ==
        "x{e} (x) x{1,2} - 2*x{1} (x) x{1} + x{1,2} (x) x{e}\n");
  CHECK(cli("coproduct --kind external --basis p \"1|2\"").out ==
        "p{e} (x) p{1|2} + 2*p{1} (x) p{1} + p{1|2} (x) p{e}\n");
  CHECK(cli("coproduct --kind internal --basis p \"1,3|2\"").out ==
        "p{1,3|2} (x) p{1,3|2}\n");
}

TEST_CASE("lattice algebra commands") {
  auto r = cli("idempotent --algebra meet \"1,2\"");
  CHECK(r.status == 0);
  CHECK(r.out == "[1,2] - [1|2]\n");

  auto j = cli("--json idempotent --algebra meet \"1,2\"");
  CHECK(parse_json(j.out) ==
        algebra_element_to_json(idempotent(Algebra::meet, sp("1,2"))));

  CHECK(cli("induct --algebra join \"1\" \"1\"").out == "W{1,2} + W{1|2}\n");
  CHECK(cli("induct --algebra meet \"1\" \"1\"").out == "V{1|2}\n");
  CHECK(cli("restrict --algebra join --cut 1 \"1,2\"").out ==
        "W{1} (x) W{1}\n");
  CHECK(cli("restrict --algebra meet \"1|2,3\"").out ==
        "V{e} (x) V{1|2,3} + V{1} (x) V{1,2} + V{1|2,3} (x) V{e}\n");
  CHECK(cli("character --algebra meet \"1|2\" \"1,2\"").out == "1\n");
  CHECK(cli("character --algebra meet \"1,2\" \"1|2\"").out == "0\n");
  CHECK(cli("frobenius --algebra meet \"1,2\"").out == "x{1,2}\n");
  CHECK(cli("frobenius --algebra diag \"1\"").out == "p{1}\n");

  ModuleSum s;
  s.algebra = Algebra::join;
  s.add_term(sp("1|2"), 2);
  std::string arg = module_sum_to_json(s).dump();
  CHECK(cli("frobenius '" + arg + "'").out == "2*m{1|2}\n");
  auto clash = cli("frobenius --algebra meet '" + arg + "'", true);
  CHECK(clash.status == 3);
  CHECK(clash.out.find("TagMismatchError") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(cli("", true).status == 2);
  CHECK(cli("op meet \"1|2\"", true).status == 2);
  CHECK(cli("convert --from p --to q \"1|2\"", true).status == 2);
  CHECK(cli("restrict --algebra meet --cut 1 --all-cuts \"1,2\"", true)
            .status == 2);
  CHECK(cli("frobenius \"1,2\"", true).status == 2);
  CHECK(cli("enumerate abc", true).status == 2);
}

TEST_CASE("domain errors exit with 3 and name the error") {
  auto gap = cli("mobius \"1|3\" \"1,2,3\"", true);
  CHECK(gap.status == 3);
  CHECK(gap.out.find("GapError") != std::string::npos);

  auto size = cli("op meet \"1\" \"1,2\"", true);
  CHECK(size.status == 3);
  CHECK(size.out.find("SizeMismatchError") != std::string::npos);

  auto overlap = cli("op meet \"1,2|2,3\" \"1|2|3\"", true);
  CHECK(overlap.status == 3);
  CHECK(overlap.out.find("OverlapError") != std::string::npos);
}

TEST_CASE("verify front end") {
  auto base = cli("verify --suite lattice --max-n 2 --no-timing --jobs 1");
  CHECK(base.status == 0);
  CHECK(base.out.find("suite lattice") != std::string::npos);
  CHECK(base.out.find("result PASS") != std::string::npos);

  auto threaded = cli("verify --suite lattice --max-n 2 --no-timing --jobs 2");
  CHECK(threaded.out == base.out);

  auto j = cli("--json verify --suite lattice --max-n 2 --no-timing");
  auto parsed = parse_json(j.out);
  CHECK(parsed["suite"] == "lattice");
  CHECK(parsed["ok"] == true);
  CHECK(!parsed.contains("seconds"));

  std::string path = "cli_report.txt";
  auto to_file = cli("verify --suite lattice --max-n 2 --no-timing --out " +
                     path);
  CHECK(to_file.status == 0);
  CHECK(to_file.out.empty());
  CHECK(slurp(path) == base.out);
  std::remove(path.c_str());

  CHECK(cli("verify --suite nope", true).status == 3);
  auto too_big = cli("verify --suite lattice --max-n 99", true);
  CHECK(too_big.status == 3);
  CHECK(too_big.out.find("BoundTooLargeError") != std::string::npos);
}
