#include "knotcalc/cli.hpp"

#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "knotcalc/corpus.hpp"
#include "knotcalc/json_io.hpp"
#include "knotcalc/suite.hpp"
#include "knotcalc/words.hpp"

namespace knotcalc {

namespace {

// File path, or inline JSON when the argument starts with '{'.
Json load_arg(const std::string& arg) {
  const std::size_t first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && arg[first] == '{') {
    return parse_json_text(arg);
  }
  return load_json_file(arg);
}

// "sl" or "const:C".
InvariantFn<IntGroup> make_invariant(const std::string& spec) {
  if (spec == "sl") return sl_invariant();
  if (spec.rfind("const:", 0) == 0) {
    try {
      return constant_invariant(std::stoll(spec.substr(6)));
    } catch (const std::exception&) {
      throw DomainError(Errc::FormatError, "bad constant in " + spec);
    }
  }
  throw DomainError(Errc::FormatError,
                    "unknown invariant " + spec + " (want sl or const:C)");
}

BundleAlphabet alphabet_from_eps(const std::string& eps) {
  BundleAlphabet alphabet;
  alphabet.rank = static_cast<int>(eps.size());
  for (char c : eps) {
    if (c != '+' && c != '-') {
      throw DomainError(Errc::FormatError,
                        "character string must use only + and -");
    }
    alphabet.eps.push_back(c == '+' ? 1 : -1);
  }
  return alphabet;
}

// "k:word", e.g. "2:abA" or "-1:".
BundleGroupElement element_from_text(const BundleAlphabet& alphabet,
                                     const std::string& text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos) {
    throw DomainError(Errc::FormatError,
                      "bundle element must be k:word, got " + text);
  }
  long long k = 0;
  try {
    std::size_t used = 0;
    k = std::stoll(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw DomainError(Errc::FormatError,
                      "bad fiber exponent in " + text);
  }
  return make_bundle_element(alphabet, k,
                             parse_word(text.substr(colon + 1),
                                        alphabet.rank));
}

int rank_from_group(const std::string& group) {
  if (group.rfind("free:", 0) == 0) {
    try {
      const int rank = std::stoi(group.substr(5));
      if (rank > 0) return rank;
    } catch (const std::exception&) {
    }
  }
  throw DomainError(Errc::FormatError,
                    "unknown group " + group + " (want free:N)");
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Front, framed-diagram, and finite-order invariant toolkit"};
  app.require_subcommand(1);

  // front ---------------------------------------------------------------
  CLI::App* front = app.add_subcommand("front", "Planar front operations");
  front->require_subcommand(1);
  std::string front_file;
  int stab_i = 0;
  int stab_j = 0;

  CLI::App* front_validate =
      front->add_subcommand("validate", "Check a front word");
  front_validate->add_option("file", front_file, "front JSON")->required();
  front_validate->callback([&] {
    const FrontSummary s = validate_front(front_from_json(load_arg(front_file)).word);
    Json j;
    j["valid"] = true;
    j["cusps"] = s.cusp_count;
    j["crossings"] = s.crossing_count;
    j["writhe"] = s.writhe;
    emit(out, j);
  });

  CLI::App* front_invariants =
      front->add_subcommand("invariants", "Classical invariants of a front");
  front_invariants->add_option("file", front_file, "front JSON")->required();
  front_invariants->callback([&] {
    const OrientedFront f = front_from_json(load_arg(front_file));
    Json j;
    j["tb"] = bennequin(f);
    j["r"] = rotation_number(f);
    emit(out, j);
  });

  CLI::App* front_stabilize =
      front->add_subcommand("stabilize", "Add cusp pairs");
  front_stabilize->add_option("file", front_file, "front JSON")->required();
  front_stabilize->add_option("--i", stab_i, "rotation-raising pairs")
      ->check(CLI::NonNegativeNumber);
  front_stabilize->add_option("--j", stab_j, "rotation-lowering pairs")
      ->check(CLI::NonNegativeNumber);
  front_stabilize->callback([&] {
    emit(out, front_to_json(
                  stabilize(front_from_json(load_arg(front_file)), stab_i,
                            stab_j)));
  });

  CLI::App* front_to_framed_cmd =
      front->add_subcommand("to-framed", "Smooth the cusps");
  front_to_framed_cmd->add_option("file", front_file, "front JSON")
      ->required();
  front_to_framed_cmd->callback([&] {
    emit(out,
         framed_to_json(front_to_framed(front_from_json(load_arg(front_file)))));
  });

  // framed ----------------------------------------------------------------
  CLI::App* framed = app.add_subcommand("framed", "Framed diagram operations");
  framed->require_subcommand(1);
  std::string framed_file;
  std::string framed_file2;
  std::string move_arg;

  CLI::App* framed_sl =
      framed->add_subcommand("sl", "Self-linking number");
  framed_sl->add_option("file", framed_file, "framed JSON")->required();
  framed_sl->callback([&] {
    Json j;
    j["sl"] = self_linking(framed_from_json(load_arg(framed_file)));
    emit(out, j);
  });

  CLI::App* framed_obstruction = framed->add_subcommand(
      "obstruction", "Framing obstruction between two diagrams");
  framed_obstruction->add_option("first", framed_file, "framed JSON")
      ->required();
  framed_obstruction->add_option("second", framed_file2, "framed JSON")
      ->required();
  framed_obstruction->callback([&] {
    Json j;
    j["m"] = framing_obstruction(framed_from_json(load_arg(framed_file)),
                                 framed_from_json(load_arg(framed_file2)));
    emit(out, j);
  });

  CLI::App* framed_apply =
      framed->add_subcommand("apply-move", "Apply one framed move");
  framed_apply->add_option("diagram", framed_file, "framed JSON")->required();
  framed_apply->add_option("move", move_arg, "move JSON")->required();
  framed_apply->callback([&] {
    emit(out, framed_to_json(apply_move(framed_from_json(load_arg(framed_file)),
                                        move_from_json(load_arg(move_arg)))));
  });

  // path --------------------------------------------------------------------
  CLI::App* path = app.add_subcommand("path", "Move sequence functionals");
  path->require_subcommand(1);
  std::string path_file;
  std::string filter_name;
  std::string group_name;

  CLI::App* path_delta = path->add_subcommand(
      "delta-i", "Signed count of discriminant passages");
  path_delta->add_option("file", path_file, "sequence JSON")->required();
  path_delta->add_option("--filter", filter_name,
                         "restrict passages (alpha-nu)");
  CLI::Option* group_opt =
      path_delta->add_option("--group", group_name,
                             "loop word group, e.g. free:2");
  path_delta->callback([&] {
    const MoveSequence seq = sequence_from_json(load_arg(path_file));
    Json j;
    if (filter_name.empty()) {
      j["delta"] = delta_I(seq);
    } else if (filter_name == "alpha-nu") {
      std::function<int(const SingularFramedDiagram&)> filter =
          alpha_nu_filter;
      if (group_opt->count() > 0) {
        const int rank = rank_from_group(group_name);
        filter = [rank](const SingularFramedDiagram& s) {
          if (!s.loops) return 1;
          return alpha_nu(WordPair{rank, s.loops->first, s.loops->second});
        };
      }
      j["delta"] = delta_I_filtered(seq, filter);
    } else {
      throw DomainError(Errc::FormatError,
                        "unknown filter " + filter_name + " (want alpha-nu)");
    }
    emit(out, j);
  });

  // vassiliev ---------------------------------------------------------------
  CLI::App* vassiliev =
      app.add_subcommand("vassiliev", "Finite-order invariant machinery");
  vassiliev->require_subcommand(1);
  std::string invariant_spec = "sl";
  std::string singular_file;
  std::vector<std::string> singular_files;
  std::string ladder_file;
  std::string base_file;
  int order_n = 0;
  long long up_to = 0;

  CLI::App* vas_alt = vassiliev->add_subcommand(
      "alt-sum", "Signed sum over all resolutions");
  vas_alt->add_option("file", singular_file, "singular JSON")->required();
  vas_alt->add_option("--invariant", invariant_spec, "sl or const:C");
  vas_alt->callback([&] {
    Json j;
    j["sum"] = alternating_sum<IntGroup>(
        make_invariant(invariant_spec),
        singular_from_json(load_arg(singular_file)));
    emit(out, j);
  });

  CLI::App* vas_order = vassiliev->add_subcommand(
      "order-test", "Vanishing on (n+1)-marked diagrams");
  vas_order->add_option("--n", order_n, "order")->required();
  vas_order->add_option("files", singular_files, "singular JSON files")
      ->required();
  vas_order->add_option("--invariant", invariant_spec, "sl or const:C");
  vas_order->callback([&] {
    std::vector<SingularFramedDiagram> fixtures;
    for (const std::string& file : singular_files) {
      fixtures.push_back(singular_from_json(load_arg(file)));
    }
    Json j;
    j["n"] = order_n;
    j["order_at_most"] = is_order_at_most<IntGroup>(
        make_invariant(invariant_spec), order_n, fixtures);
    emit(out, j);
  });

  CLI::App* vas_extend = vassiliev->add_subcommand(
      "extend", "Fill rungs above the cutoff by the order-n recursion");
  vas_extend->add_option("--n", order_n, "order")->required();
  CLI::Option* up_to_opt =
      vas_extend->add_option("--up-to", up_to, "topmost rung to fill");
  vas_extend->add_option("ladder", ladder_file, "ladder JSON")->required();
  vas_extend->callback([&] {
    std::optional<long long> target;
    if (up_to_opt->count() > 0) target = up_to;
    emit(out, ladder_to_json(extend_invariant<IntGroup>(
                  ladder_from_json(load_arg(ladder_file)), order_n, target)));
  });

  CLI::App* vas_verify = vassiliev->add_subcommand(
      "verify", "Check the order-n recursion on a ladder");
  vas_verify->add_option("--n", order_n, "order")->required();
  vas_verify->add_option("ladder", ladder_file, "ladder JSON")->required();
  vas_verify->callback([&] {
    Json j;
    j["n"] = order_n;
    j["holds"] = verify_main_identity<IntGroup>(
        ladder_from_json(load_arg(ladder_file)), order_n);
    emit(out, j);
  });

  CLI::App* vas_roundtrip = vassiliev->add_subcommand(
      "roundtrip", "Restrict-then-extend against direct evaluation");
  vas_roundtrip->add_option("--n", order_n, "order")->required();
  vas_roundtrip->add_option("base", base_file, "framed JSON")->required();
  vas_roundtrip->add_option("ladder", ladder_file, "ladder JSON")->required();
  vas_roundtrip->add_option("--invariant", invariant_spec, "sl or const:C");
  vas_roundtrip->callback([&] {
    std::vector<LadderEntry<IntGroup>> entries;
    entries.push_back(LadderEntry<IntGroup>{
        framed_from_json(load_arg(base_file)),
        ladder_from_json(load_arg(ladder_file))});
    Json j;
    j["n"] = order_n;
    j["roundtrip"] = roundtrip_check<IntGroup>(make_invariant(invariant_spec),
                                               entries, order_n);
    emit(out, j);
  });

  // topo ----------------------------------------------------------------
  CLI::App* topo = app.add_subcommand("topo", "Homological rule engines");
  topo->require_subcommand(1);
  std::vector<long long> factors;
  std::vector<long long> euler;
  std::string descriptor_file;
  std::string eps_string;
  std::vector<std::string> element_texts;
  std::vector<std::string> pair_words;
  int word_rank = 1;
  int ttt_bound = 6;

  CLI::App* topo_euler = topo->add_subcommand(
      "euler-realizable", "Doubling-image membership");
  topo_euler->add_option("--factors", factors, "invariant factors")
      ->delimiter(',')
      ->required();
  topo_euler->add_option("--e", euler, "euler class coordinates")
      ->delimiter(',')
      ->required();
  topo_euler->callback([&] {
    Json j;
    j["realizable"] = euler_realizable(euler, FGAbelianGroup{factors});
    emit(out, j);
  });

  CLI::App* topo_star = topo->add_subcommand(
      "condition-star", "Rule engine over a manifold descriptor");
  topo_star->add_option("file", descriptor_file, "descriptor JSON")
      ->required();
  topo_star->callback([&] {
    const StarVerdict v =
        condition_star(descriptor_from_json(load_arg(descriptor_file)));
    Json j;
    j["status"] = v.status == StarStatus::Holds   ? "holds"
                  : v.status == StarStatus::Fails ? "fails"
                                                  : "unknown";
    if (v.rule) {
      j["rule"] = star_rule_name(*v.rule);
    } else {
      j["rule"] = nullptr;
    }
    j["detail"] = v.detail;
    emit(out, j);
  });

  CLI::App* topo_mul =
      topo->add_subcommand("bundle-mul", "Normal-form product");
  topo_mul->add_option("--eps", eps_string, "orientation characters, e.g. +-")
      ->required();
  topo_mul->add_option("elements", element_texts, "elements as k:word")
      ->expected(2)
      ->required();
  topo_mul->callback([&] {
    const BundleAlphabet alphabet = alphabet_from_eps(eps_string);
    const BundleGroupElement product =
        bundle_mul(element_from_text(alphabet, element_texts[0]),
                   element_from_text(alphabet, element_texts[1]));
    Json j;
    j["k"] = product.k;
    j["w"] = word_to_string(product.w);
    emit(out, j);
  });

  CLI::App* topo_alpha = topo->add_subcommand(
      "alpha-nu", "Double-point loop classifier");
  topo_alpha->add_option("--rank", word_rank, "free group rank")->required();
  topo_alpha->add_option("words", pair_words, "the two loop words")
      ->expected(2)
      ->required();
  topo_alpha->callback([&] {
    Json j;
    j["value"] = alpha_nu(WordPair{word_rank,
                                   parse_word(pair_words[0], word_rank),
                                   parse_word(pair_words[1], word_rank)});
    emit(out, j);
  });

  CLI::App* topo_ttt = topo->add_subcommand(
      "ttt-witness", "Exponent witness for a commuting pair");
  topo_ttt->add_option("--bound", ttt_bound, "search bound")
      ->check(CLI::PositiveNumber);
  topo_ttt->add_option("--eps", eps_string, "orientation characters")
      ->required();
  topo_ttt->add_option("elements", element_texts, "alpha and beta as k:word")
      ->expected(2)
      ->required();
  topo_ttt->callback([&] {
    const BundleAlphabet alphabet = alphabet_from_eps(eps_string);
    const TttOutcome outcome = check_toughandtechnical(
        element_from_text(alphabet, element_texts[0]),
        element_from_text(alphabet, element_texts[1]), ttt_bound);
    Json j;
    if (outcome.witness) {
      j["n"] = outcome.witness->n;
      j["i"] = outcome.witness->i;
      j["j"] = outcome.witness->j;
    } else {
      j["witness"] = nullptr;
    }
    j["bound"] = outcome.bound;
    emit(out, j);
  });

  // suite ---------------------------------------------------------------
  CLI::App* suite = app.add_subcommand("suite", "Corpus test runner");
  suite->require_subcommand(1);
  std::uint64_t seed = 0;
  std::string corpus_dir = default_corpus_dir();
  bool as_json = false;
  int suite_exit = 0;

  CLI::App* suite_run = suite->add_subcommand("run", "Run every module check");
  suite_run->add_option("--seed", seed, "random seed");
  suite_run->add_option("--corpus", corpus_dir, "corpus directory");
  suite_run->add_flag("--json", as_json, "line-delimited JSON report");
  suite_run->callback([&] {
    const RunReport report = run_suite(load_corpus(corpus_dir), seed);
    out << (as_json ? report_json(report) : report_text(report));
    suite_exit = report.all_passed() ? 0 : 1;
  });

  try {
    std::vector<const char*> argv;
    argv.push_back("knotcalc");
    for (const std::string& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return suite_exit;
}

}  // namespace knotcalc
