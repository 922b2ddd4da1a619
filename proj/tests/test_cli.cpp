#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "knotcalc/cli.hpp"
#include "knotcalc/corpus.hpp"
#include "knotcalc/suite.hpp"

using namespace knotcalc;

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& rel) {
  return default_corpus_dir() + "/" + rel;
}

}  // namespace

TEST_CASE("front invariants") {
  const RunResult r = run({"front", "invariants", fixture("fronts/unknot.json")});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"tb\":-1,\"r\":0}\n");

  const RunResult t =
      run({"front", "invariants", fixture("fronts/trefoil.json")});
  CHECK(t.out == "{\"tb\":1,\"r\":0}\n");

  // Inline JSON instead of a file path.
  const RunResult inline_arg = run(
      {"front", "invariants",
       "{\"format\":1,\"events\":[[\"L\",1],[\"R\",1]]}"});
  CHECK(inline_arg.code == 0);
  CHECK(inline_arg.out == "{\"tb\":-1,\"r\":0}\n");
}

TEST_CASE("front stabilize and to-framed") {
  const RunResult s = run({"front", "stabilize", "--i", "1", "--j", "1",
                           fixture("fronts/unknot.json")});
  CHECK(s.code == 0);
  CHECK(s.out.find("\"events\"") != std::string::npos);

  const RunResult f =
      run({"front", "to-framed", fixture("fronts/trefoil.json")});
  CHECK(f.code == 0);
  CHECK(f.out.find("\"offset\"") != std::string::npos);
}

TEST_CASE("exit codes") {
  // Domain error: an invalid front word.
  const RunResult invalid = run(
      {"front", "validate", "{\"format\":1,\"events\":[[\"X\",1]]}"});
  CHECK(invalid.code == 1);
  CHECK(invalid.err.find("error:") == 0);

  // Usage error: unknown subcommand.
  const RunResult unknown = run({"bogus"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("usage error") == 0);

  // Help is not an error.
  const RunResult help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("front") != std::string::npos);
}

TEST_CASE("framed subcommands") {
  const RunResult sl = run({"framed", "sl", fixture("framed/trefoil.json")});
  CHECK(sl.out == "{\"sl\":3}\n");

  const RunResult m =
      run({"framed", "obstruction", fixture("framed/unknot.json"),
           fixture("framed/unknot_m1.json")});
  CHECK(m.out == "{\"m\":1}\n");

  const RunResult moved = run(
      {"framed", "apply-move", "{\"format\":1,\"gauss\":[],\"offset\":0}",
       "{\"type\":\"offset-trade-insert\",\"at\":0,\"sign\":1}"});
  CHECK(moved.code == 0);
  CHECK(moved.out ==
        "{\"format\":1,\"gauss\":[[1,\"o\",1],[1,\"u\",1]],\"offset\":-1}\n");
}

TEST_CASE("path delta-i") {
  const RunResult plain =
      run({"path", "delta-i", fixture("paths/gamma4_loop.json")});
  CHECK(plain.out == "{\"delta\":-1}\n");

  const RunResult filtered =
      run({"path", "delta-i", "--filter", "alpha-nu",
           fixture("paths/gamma4_loop.json")});
  CHECK(filtered.out == "{\"delta\":0}\n");

  const RunResult grouped =
      run({"path", "delta-i", "--filter", "alpha-nu", "--group", "free:1",
           fixture("paths/gamma4_loop.json")});
  CHECK(grouped.out == "{\"delta\":0}\n");

  const RunResult single =
      run({"path", "delta-i", fixture("paths/homotopy_single_crossing.json")});
  CHECK(single.out == "{\"delta\":-1}\n");

  const RunResult bad = run({"path", "delta-i", "--filter", "nope",
                             fixture("paths/gamma4_loop.json")});
  CHECK(bad.code == 1);
}

TEST_CASE("vassiliev subcommands") {
  const RunResult ext = run({"vassiliev", "extend", "--n", "1",
                             fixture("ladders/sl_demo.json")});
  CHECK(ext.code == 0);
  CHECK(ext.out.find("\"2\":5") != std::string::npos);

  const RunResult ver = run({"vassiliev", "verify", "--n", "1",
                             fixture("ladders/sl_demo.json")});
  CHECK(ver.out == "{\"n\":1,\"holds\":true}\n");

  const RunResult alt = run({"vassiliev", "alt-sum",
                             fixture("singular/trefoil_one_marked.json")});
  CHECK(alt.out == "{\"sum\":2}\n");

  const RunResult order =
      run({"vassiliev", "order-test", "--n", "1",
           fixture("singular/trefoil_two_marked.json")});
  CHECK(order.out == "{\"n\":1,\"order_at_most\":true}\n");

  const RunResult rt = run({"vassiliev", "roundtrip", "--n", "1",
                            fixture("framed/trefoil.json"),
                            fixture("ladders/sl_demo.json")});
  CHECK(rt.out == "{\"n\":1,\"roundtrip\":true}\n");
}

TEST_CASE("topo subcommands") {
  CHECK(run({"topo", "euler-realizable", "--factors", "0", "--e", "4"}).out ==
        "{\"realizable\":true}\n");
  CHECK(run({"topo", "euler-realizable", "--factors", "0", "--e", "3"}).out ==
        "{\"realizable\":false}\n");
  CHECK(run({"topo", "euler-realizable", "--factors", "0,2", "--e", "2,1"})
            .out == "{\"realizable\":false}\n");

  const RunResult star =
      run({"topo", "condition-star", fixture("descriptors/s1xs2.json")});
  CHECK(star.out.find("\"status\":\"fails\"") != std::string::npos);
  CHECK(star.out.find("\"rule\":\"interpretation-ii\"") != std::string::npos);

  const RunResult mul =
      run({"topo", "bundle-mul", "--eps=-", "2:a", "3:a"});
  CHECK(mul.out == "{\"k\":-1,\"w\":\"aa\"}\n");

  const RunResult nu = run({"topo", "alpha-nu", "--rank", "2", "", "abA"});
  CHECK(nu.out == "{\"value\":0}\n");
  CHECK(run({"topo", "alpha-nu", "--rank", "2", "a", "b"}).out ==
        "{\"value\":1}\n");

  const RunResult ttt =
      run({"topo", "ttt-witness", "--eps=+", "0:a", "1:aa"});
  CHECK(ttt.out == "{\"n\":1,\"i\":2,\"j\":1,\"bound\":6}\n");

  const RunResult no_witness =
      run({"topo", "ttt-witness", "--eps=+", "0:a", "0:aaaaaaa"});
  CHECK(no_witness.out == "{\"witness\":null,\"bound\":6}\n");
}

TEST_CASE("json fixtures round trip") {
  const Corpus corpus = load_corpus(default_corpus_dir());
  REQUIRE(!corpus.fronts.empty());
  REQUIRE(!corpus.paths.empty());

  for (const auto& [name, front] : corpus.fronts) {
    CHECK(front_from_json(front_to_json(front)) == front);
  }
  for (const auto& [name, k] : corpus.framed) {
    CHECK(framed_from_json(framed_to_json(k)) == k);
  }
  for (const auto& [name, path] : corpus.paths) {
    CHECK(sequence_from_json(sequence_to_json(path)) == path);
  }
  for (const auto& [name, s] : corpus.singulars) {
    CHECK(singular_from_json(singular_to_json(s)) == s);
  }
  for (const auto& [name, d] : corpus.descriptors) {
    CHECK(descriptor_from_json(descriptor_to_json(d)) == d);
  }
  for (const auto& [name, ladder] : corpus.ladders) {
    const InvariantLadder<IntGroup> back = ladder_from_json(ladder_to_json(ladder));
    CHECK(back.knot_label == ladder.knot_label);
    CHECK(back.cutoff == ladder.cutoff);
    CHECK(back.values == ladder.values);
  }
}

TEST_CASE("json format errors") {
  CHECK_THROWS_AS(parse_json_text("not json"), DomainError);

  try {
    front_from_json(parse_json_text(
        "{\"format\":2,\"events\":[[\"L\",1],[\"R\",1]]}"));
    FAIL("expected FormatError");
  } catch (const DomainError& e) {
    CHECK(e.code() == Errc::FormatError);
  }

  // A crossing-change whose declared sign disagrees with the replayed state.
  const std::string bad_path =
      "{\"format\":1,\"start\":{\"gauss\":[],\"offset\":0},\"events\":["
      "{\"type\":\"offset-trade-insert\",\"at\":0,\"sign\":1},"
      "{\"type\":\"crossing-change\",\"crossing\":1,\"sign\":1}]}";
  try {
    sequence_from_json(parse_json_text(bad_path));
    FAIL("expected FormatError");
  } catch (const DomainError& e) {
    CHECK(e.code() == Errc::FormatError);
    CHECK(e.index() == std::size_t{1});
  }
}

TEST_CASE("suite is deterministic and passes on the bundled corpus") {
  const Corpus corpus = load_corpus(default_corpus_dir());
  const RunReport first = run_suite(corpus, 0);
  const RunReport second = run_suite(corpus, 0);
  CHECK(first.all_passed());
  for (const CheckResult& check : first.checks) {
    CHECK(check.status == "pass");
  }
  CHECK(report_text(first) == report_text(second));
  CHECK(report_json(first) == report_json(second));

  const RunReport other_seed = run_suite(corpus, 12345);
  CHECK(other_seed.all_passed());
}

TEST_CASE("suite run subcommand") {
  const RunResult r = run({"suite", "run", "--seed", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("checks passed") != std::string::npos);

  const RunResult j = run({"suite", "run", "--seed", "0", "--json"});
  CHECK(j.code == 0);
  CHECK(j.out.find("\"status\":\"pass\"") != std::string::npos);
  CHECK(run({"suite", "run", "--seed", "0", "--json"}).out == j.out);
}

TEST_CASE("broken corpus is named") {
  namespace fs = std::filesystem;
  const fs::path broken = fs::temp_directory_path() / "knotcalc-broken-corpus";
  fs::remove_all(broken);
  fs::create_directories(broken / "fronts");
  {
    std::ofstream f(broken / "fronts" / "dud.json");
    f << "{\"format\":1,\"events\":[[\"X\",1]]}";
  }

  try {
    load_corpus(broken.string());
    FAIL("expected CorpusLoadError");
  } catch (const DomainError& e) {
    CHECK(e.code() == Errc::CorpusLoadError);
    CHECK(std::string(e.what()).find("fronts/dud") != std::string::npos);
  }

  const RunResult r =
      run({"suite", "run", "--corpus", broken.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("fronts/dud") != std::string::npos);
  fs::remove_all(broken);
}
