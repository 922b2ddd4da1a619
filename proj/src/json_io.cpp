#include "knotcalc/json_io.hpp"

#include <fstream>
#include <variant>

#include "knotcalc/words.hpp"

namespace knotcalc {

namespace {

void check_format(const Json& j) {
  if (j.is_object() && j.contains("format") && j["format"] != 1) {
    throw DomainError(Errc::FormatError, "unsupported format version");
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw DomainError(Errc::FormatError,
                      std::string("missing field '") + key + "'");
  }
  return j[key];
}

// Rethrows library type/parse errors as domain errors; DomainError passes
// through untouched.
template <class F>
auto translated(F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const DomainError&) {
    throw;
  } catch (const Json::exception& e) {
    throw DomainError(Errc::FormatError, e.what());
  }
}

}  // namespace

Json parse_json_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw DomainError(Errc::FormatError, "unparsable JSON");
  }
  check_format(j);
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw DomainError(Errc::FormatError, "cannot open " + path);
  }
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_json_text(text);
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) {
    throw DomainError(Errc::FormatError, "cannot open " + path);
  }
  out << j.dump(2) << '\n';
}

Json front_to_json(const OrientedFront& front) {
  Json events = Json::array();
  for (const Event& e : front.word.events) {
    const char* kind = e.kind == EventKind::LeftCusp    ? "L"
                       : e.kind == EventKind::RightCusp ? "R"
                                                        : "X";
    events.push_back(Json::array({kind, e.pos}));
  }
  Json j;
  j["format"] = 1;
  j["events"] = std::move(events);
  j["orientation"] =
      front.orientation == Orientation::Forward ? "forward" : "reverse";
  return j;
}

OrientedFront front_from_json(const Json& j) {
  return translated([&] {
    check_format(j);
    OrientedFront front;
    for (const Json& e : field(j, "events")) {
      if (!e.is_array() || e.size() != 2) {
        throw DomainError(Errc::FormatError,
                          "event must be a [kind, position] pair");
      }
      const std::string kind = e[0].get<std::string>();
      Event event;
      if (kind == "L") {
        event.kind = EventKind::LeftCusp;
      } else if (kind == "R") {
        event.kind = EventKind::RightCusp;
      } else if (kind == "X") {
        event.kind = EventKind::Crossing;
      } else {
        throw DomainError(Errc::FormatError, "unknown event kind " + kind);
      }
      event.pos = e[1].get<int>();
      front.word.events.push_back(event);
    }
    if (j.contains("orientation")) {
      const std::string o = j["orientation"].get<std::string>();
      if (o == "forward") {
        front.orientation = Orientation::Forward;
      } else if (o == "reverse") {
        front.orientation = Orientation::Reverse;
      } else {
        throw DomainError(Errc::FormatError, "unknown orientation " + o);
      }
    }
    return front;
  });
}

namespace {

Json gauss_to_json(const KnotDiagram& d) {
  Json gauss = Json::array();
  for (const Visit& v : d.visits) {
    gauss.push_back(
        Json::array({v.crossing, v.pass == Pass::Over ? "o" : "u", v.sign}));
  }
  return gauss;
}

KnotDiagram gauss_from_json(const Json& j) {
  KnotDiagram d;
  for (const Json& e : j) {
    if (!e.is_array() || e.size() != 3) {
      throw DomainError(Errc::FormatError,
                        "gauss entry must be [id, pass, sign]");
    }
    Visit v;
    v.crossing = e[0].get<int>();
    const std::string pass = e[1].get<std::string>();
    if (pass == "o") {
      v.pass = Pass::Over;
    } else if (pass == "u") {
      v.pass = Pass::Under;
    } else {
      throw DomainError(Errc::FormatError, "pass must be 'o' or 'u'");
    }
    v.sign = e[2].get<int>();
    d.visits.push_back(v);
  }
  return d;
}

}  // namespace

Json framed_to_json(const FramedDiagram& k) {
  Json j;
  j["format"] = 1;
  j["gauss"] = gauss_to_json(k.diagram);
  j["offset"] = k.offset;
  return j;
}

FramedDiagram framed_from_json(const Json& j) {
  return translated([&] {
    check_format(j);
    FramedDiagram k;
    k.diagram = gauss_from_json(field(j, "gauss"));
    k.offset = field(j, "offset").get<long long>();
    validate(k);
    return k;
  });
}

namespace {

Json loops_to_json(const LoopPair& loops) {
  Json j;
  j["rank"] = loops.rank;
  j["first"] = word_to_string(loops.first);
  j["second"] = word_to_string(loops.second);
  return j;
}

LoopPair loops_from_json(const Json& j) {
  LoopPair loops;
  loops.rank = field(j, "rank").get<int>();
  loops.first = parse_word(field(j, "first").get<std::string>(), loops.rank);
  loops.second = parse_word(field(j, "second").get<std::string>(), loops.rank);
  return loops;
}

}  // namespace

Json singular_to_json(const SingularFramedDiagram& s) {
  Json j;
  j["format"] = 1;
  j["gauss"] = gauss_to_json(s.diagram);
  j["offset"] = s.offset;
  j["marked"] = s.marked;
  if (s.loops) j["loops"] = loops_to_json(*s.loops);
  return j;
}

SingularFramedDiagram singular_from_json(const Json& j) {
  return translated([&] {
    check_format(j);
    SingularFramedDiagram s;
    s.diagram = gauss_from_json(field(j, "gauss"));
    s.offset = field(j, "offset").get<long long>();
    for (const Json& id : field(j, "marked")) s.marked.insert(id.get<int>());
    if (j.contains("loops")) s.loops = loops_from_json(j["loops"]);
    validate(s);
    return s;
  });
}

namespace {

Json event_to_json(const PathEvent& event) {
  Json j;
  std::visit(
      [&j](const auto& e) {
        using E = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<E, R2Insert>) {
          j["type"] = "r2-insert";
          j["over_at"] = e.over_at;
          j["under_at"] = e.under_at;
          j["sign"] = e.sign;
          j["parallel"] = e.parallel;
          j["id_a"] = e.id_a;
          j["id_b"] = e.id_b;
          j["over_first"] = e.over_first;
        } else if constexpr (std::is_same_v<E, R2Remove>) {
          j["type"] = "r2-remove";
          j["c1"] = e.c1;
          j["c2"] = e.c2;
        } else if constexpr (std::is_same_v<E, R3Slide>) {
          j["type"] = "r3";
          j["c1"] = e.c1;
          j["c2"] = e.c2;
          j["c3"] = e.c3;
        } else if constexpr (std::is_same_v<E, KinkCancel>) {
          j["type"] = "kink-cancel";
          j["c1"] = e.c1;
          j["c2"] = e.c2;
        } else if constexpr (std::is_same_v<E, OffsetTradeInsert>) {
          j["type"] = "offset-trade-insert";
          j["at"] = e.at;
          j["sign"] = e.sign;
          j["id"] = e.id;
          j["over_first"] = e.over_first;
        } else if constexpr (std::is_same_v<E, OffsetTradeRemove>) {
          j["type"] = "offset-trade-remove";
          j["crossing"] = e.crossing;
        } else {
          j["type"] = "crossing-change";
          j["crossing"] = e.crossing;
          j["sign"] = e.sign;
          if (e.snapshot.loops) j["loops"] = loops_to_json(*e.snapshot.loops);
        }
      },
      event);
  return j;
}

}  // namespace

FramedMove move_from_json(const Json& j) {
  return translated([&]() -> FramedMove {
    const std::string type = field(j, "type").get<std::string>();
    if (type == "r2-insert") {
      R2Insert e;
      e.over_at = field(j, "over_at").get<std::size_t>();
      e.under_at = field(j, "under_at").get<std::size_t>();
      e.sign = field(j, "sign").get<int>();
      e.parallel = field(j, "parallel").get<bool>();
      if (j.contains("id_a")) e.id_a = j["id_a"].get<int>();
      if (j.contains("id_b")) e.id_b = j["id_b"].get<int>();
      if (j.contains("over_first")) e.over_first = j["over_first"].get<bool>();
      return e;
    }
    if (type == "r2-remove") {
      return R2Remove{field(j, "c1").get<int>(), field(j, "c2").get<int>()};
    }
    if (type == "r3") {
      return R3Slide{field(j, "c1").get<int>(), field(j, "c2").get<int>(),
                     field(j, "c3").get<int>()};
    }
    if (type == "kink-cancel") {
      return KinkCancel{field(j, "c1").get<int>(), field(j, "c2").get<int>()};
    }
    if (type == "offset-trade-insert") {
      OffsetTradeInsert e;
      e.at = field(j, "at").get<std::size_t>();
      e.sign = field(j, "sign").get<int>();
      if (j.contains("id")) e.id = j["id"].get<int>();
      if (j.contains("over_first")) e.over_first = j["over_first"].get<bool>();
      return e;
    }
    if (type == "offset-trade-remove") {
      return OffsetTradeRemove{field(j, "crossing").get<int>()};
    }
    throw DomainError(Errc::FormatError, "unknown move type " + type);
  });
}

namespace {

// Builds the event against the state it applies to; `state` advances.
PathEvent event_from_json(const Json& j, FramedDiagram& state) {
  const std::string type = field(j, "type").get<std::string>();
  PathEvent event;
  if (type == "crossing-change") {
    CrossingChange e =
        make_crossing_change(state, field(j, "crossing").get<int>());
    if (j.contains("sign") && j["sign"].get<int>() != e.sign) {
      throw DomainError(Errc::FormatError,
                        "declared sign disagrees with the replayed state");
    }
    if (j.contains("loops")) e.snapshot.loops = loops_from_json(j["loops"]);
    event = e;
  } else {
    event = std::visit([](const auto& m) -> PathEvent { return m; },
                       move_from_json(j));
  }
  state = apply_event(state, event);
  return event;
}

}  // namespace

Json sequence_to_json(const MoveSequence& path) {
  Json j;
  j["format"] = 1;
  j["start"] = framed_to_json(path.start);
  j["start"].erase("format");
  Json events = Json::array();
  for (const PathEvent& e : path.events) events.push_back(event_to_json(e));
  j["events"] = std::move(events);
  return j;
}

MoveSequence sequence_from_json(const Json& j) {
  return translated([&] {
    check_format(j);
    MoveSequence path;
    path.start = framed_from_json(field(j, "start"));
    FramedDiagram state = path.start;
    std::size_t index = 0;
    for (const Json& e : field(j, "events")) {
      try {
        path.events.push_back(event_from_json(e, state));
      } catch (const DomainError& err) {
        if (err.index()) throw;
        throw DomainError(err.code(), err.detail(), index);
      }
      ++index;
    }
    return path;
  });
}

Json ladder_to_json(const InvariantLadder<IntGroup>& ladder) {
  Json j;
  j["format"] = 1;
  j["knot"] = ladder.knot_label;
  if (ladder.cutoff) {
    j["cutoff"] = *ladder.cutoff;
  } else {
    j["cutoff"] = nullptr;
  }
  j["step"] = 2;
  Json values = Json::object();
  for (const auto& [rung, value] : ladder.values) {
    values[std::to_string(rung)] = value;
  }
  j["values"] = std::move(values);
  return j;
}

InvariantLadder<IntGroup> ladder_from_json(const Json& j) {
  return translated([&] {
    check_format(j);
    InvariantLadder<IntGroup> ladder;
    ladder.knot_label = field(j, "knot").get<std::string>();
    const Json& cutoff = field(j, "cutoff");
    if (!cutoff.is_null()) ladder.cutoff = cutoff.get<long long>();
    if (j.contains("step") && j["step"] != 2) {
      throw DomainError(Errc::FormatError, "ladder step must be 2");
    }
    for (const auto& [key, value] : field(j, "values").items()) {
      long long rung = 0;
      try {
        std::size_t used = 0;
        rung = std::stoll(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw DomainError(Errc::FormatError, "bad rung key '" + key + "'");
      }
      ladder.values[rung] = value.get<long long>();
    }
    validate_ladder(ladder);
    return ladder;
  });
}

Json descriptor_to_json(const ManifoldDescriptor& d) {
  Json j;
  j["format"] = 1;
  j["h2"] = Json{{"factors", d.h2.factors}};
  j["euler"] = d.euler;
  Json flags = Json::object();
  if (d.flags.tight) flags["tight"] = *d.flags.tight;
  if (d.flags.pi2_zero) flags["pi2_zero"] = *d.flags.pi2_zero;
  if (d.flags.no_injective_torus) {
    flags["no_injective_torus"] = *d.flags.no_injective_torus;
  }
  if (d.flags.parallelizable_contact) {
    flags["parallelizable"] = *d.flags.parallelizable_contact;
  }
  j["flags"] = std::move(flags);
  Json tori = Json::array();
  for (const TorusRecord& t : d.tori) {
    Json record;
    record["class"] = t.cls;
    record["realizable"] = t.realizable_by_curve_component;
    record["pairing"] = t.pairing;
    tori.push_back(std::move(record));
  }
  j["tori"] = std::move(tori);
  return j;
}

ManifoldDescriptor descriptor_from_json(const Json& j) {
  return translated([&] {
    check_format(j);
    ManifoldDescriptor d;
    d.h2.factors =
        field(field(j, "h2"), "factors").get<std::vector<long long>>();
    d.euler = field(j, "euler").get<GroupElement>();
    if (j.contains("flags")) {
      const Json& flags = j["flags"];
      if (flags.contains("tight")) d.flags.tight = flags["tight"].get<bool>();
      if (flags.contains("pi2_zero")) {
        d.flags.pi2_zero = flags["pi2_zero"].get<bool>();
      }
      if (flags.contains("no_injective_torus")) {
        d.flags.no_injective_torus = flags["no_injective_torus"].get<bool>();
      }
      if (flags.contains("parallelizable")) {
        d.flags.parallelizable_contact = flags["parallelizable"].get<bool>();
      }
    }
    if (j.contains("tori")) {
      for (const Json& record : j["tori"]) {
        TorusRecord t;
        t.cls = field(record, "class").get<GroupElement>();
        t.realizable_by_curve_component =
            field(record, "realizable").get<bool>();
        t.pairing = field(record, "pairing").get<long long>();
        d.tori.push_back(std::move(t));
      }
    }
    validate(d);
    return d;
  });
}

}  // namespace knotcalc
