#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sgkit/cli.hpp"
#include "sgkit/io.hpp"
#include "sgkit/semigroup.hpp"
#include "support.hpp"

using namespace sgkit;

namespace {

  struct Run {
    int         code;
    std::string out, err;
  };

  Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int                code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string data(char const* name) {
    return std::string(SGKIT_DATA_DIR) + "/" + name;
  }

  std::size_t count_of(std::string const& text, std::string const& needle) {
    std::size_t n = 0;
    for (auto p = text.find(needle); p != std::string::npos;
         p      = text.find(needle, p + 1)) {
      ++n;
    }
    return n;
  }

}  // namespace

TEST_CASE("pointlikes") {
  auto r = run({"pointlikes", data("z2.sg")});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "{e}\n{g}\n{e,g}\ncount=3\n");

  auto v = run({"pointlikes", "-v", data("lz2.sg")});
  CHECK(v.code == kExitOk);
  CHECK(v.out.find("count=") != std::string::npos);
}

TEST_CASE("decompose") {
  auto r = run({"decompose", data("z4.sg")});
  CHECK(r.code == kExitOk);
  CHECK(count_of(r.out, "(group ") == 2);
  CHECK(r.out.find("verify_tree: ok") != std::string::npos);
  CHECK(r.out.find("group-leaves=2") != std::string::npos);

  auto a = run({"decompose", data("chain3.sg")});
  CHECK(a.code == kExitOk);
  CHECK(a.out.find("group-leaves=0") != std::string::npos);
}

TEST_CASE("separate") {
  auto eo = run({"separate", data("even.dfa"), data("odd.dfa")});
  CHECK(eo.code == kExitInseparable);
  CHECK(eo.out.rfind("INSEPARABLE witness={", 0) == 0);

  auto ab = run({"separate", data("a_first.dfa"), data("b_first.dfa")});
  CHECK(ab.code == kExitOk);
  CHECK(ab.out == "SEPARABLE\n");

  auto same = run({"separate", data("a_plus.dfa"), data("a_plus.dfa")});
  CHECK(same.code == kExitInseparable);
  CHECK(same.out == "INSEPARABLE witness=word:a\n");
}

TEST_CASE("witness and merge-check") {
  auto w = run({"witness", data("lz2.sg")});
  CHECK(w.code == kExitOk);
  CHECK(w.out.find("cross-validation: agrees") != std::string::npos);

  auto m = run({"merge-check", data("lz2.sg")});
  CHECK(m.code == kExitOk);
  CHECK(m.out.find("counterexamples=0") != std::string::npos);
  CHECK(m.out.find("division: ok") != std::string::npos);

  auto rnd = run({"merge-check", "--random", "5", "--seed", "3"});
  CHECK(rnd.code == kExitOk);
  CHECK(count_of(rnd.out, "counterexamples=0") == 5);
}

TEST_CASE("gen matches the oracle closure") {
  auto r = run({"gen", data("t2.tgen")});
  REQUIRE(r.code == kExitOk);
  auto s = parse_sg(r.out);
  auto t = oracle::table_of(oracle::naive_closure({{1, 0}, {0, 0}}));
  CHECK(s.size() == t.size());

  auto path = std::filesystem::temp_directory_path() / "sgkit_cli_gen.sg";
  auto o    = run({"gen", data("t2.tgen"), "-o", path.string()});
  CHECK(o.code == kExitOk);
  CHECK(read_file(path.string()) == r.out);
  std::filesystem::remove(path);
}

TEST_CASE("errors exit with 2") {
  CHECK(run({}).code == kExitError);
  CHECK(run({"separate", data("even.dfa")}).code == kExitError);
  CHECK(run({"pointlikes", "--bogus", data("z2.sg")}).code == kExitError);
  CHECK(run({"pointlikes", "-v", "-q", data("z2.sg")}).code == kExitError);
  CHECK(run({"pointlikes", data("missing.sg")}).code == kExitError);

  auto cap = run({"decompose", data("t2.sg"), "--cap", "3"});
  CHECK(cap.code == kExitError);
  CHECK(cap.err.find("exceeds size cap 3") != std::string::npos);
  CHECK(cap.out.empty());
}

TEST_CASE("output is deterministic") {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"decompose", data("c22.sg")},
        std::vector<std::string>{"witness", data("null3.sg")},
        std::vector<std::string>{"pointlikes", data("k4.sg")}}) {
    auto a = run(args);
    auto b = run(args);
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
  }
}
