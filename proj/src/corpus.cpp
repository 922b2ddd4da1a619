#include "knotcalc/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>

namespace knotcalc {

namespace {

namespace fs = std::filesystem;

std::vector<fs::path> json_files(const fs::path& dir) {
  std::vector<fs::path> out;
  if (!fs::is_directory(dir)) return out;
  for (const fs::directory_entry& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      out.push_back(entry.path());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <class T, class Load>
void load_family(const fs::path& dir, const std::string& family,
                 std::vector<std::pair<std::string, T>>& into, Load load) {
  for (const fs::path& file : json_files(dir / family)) {
    const std::string name = file.stem().string();
    try {
      into.emplace_back(name, load(load_json_file(file.string())));
    } catch (const std::exception& e) {
      throw DomainError(Errc::CorpusLoadError,
                        family + "/" + name + ": " + e.what());
    }
  }
}

template <class Body>
void derived(const std::string& name, Body body) {
  try {
    body();
  } catch (const std::exception& e) {
    throw DomainError(Errc::CorpusLoadError, name + ": " + e.what());
  }
}

}  // namespace

std::string default_corpus_dir() {
  if (const char* env = std::getenv("KNOTCALC_CORPUS")) return env;
  return KNOTCALC_SOURCE_CORPUS;
}

Corpus load_corpus(const std::string& dir) {
  Corpus corpus;
  const fs::path root(dir);

  load_family<OrientedFront>(root, "fronts", corpus.fronts,
                             [](const Json& j) {
                               OrientedFront front = front_from_json(j);
                               analyze(front);
                               return front;
                             });
  load_family<FramedDiagram>(root, "framed", corpus.framed, framed_from_json);
  load_family<MoveSequence>(root, "paths", corpus.paths, [](const Json& j) {
    MoveSequence path = sequence_from_json(j);
    validate(path);
    return path;
  });
  load_family<ManifoldDescriptor>(root, "descriptors", corpus.descriptors,
                                  descriptor_from_json);
  load_family<SingularFramedDiagram>(root, "singular", corpus.singulars,
                                     singular_from_json);
  load_family<InvariantLadder<IntGroup>>(root, "ladders", corpus.ladders,
                                         ladder_from_json);

  const std::size_t file_fronts = corpus.fronts.size();
  for (std::size_t f = 0; f < file_fronts; ++f) {
    // Copies: the emplace_back below may reallocate corpus.fronts.
    const auto [name, front] = corpus.fronts[f];
    if (name != "unknot" && name != "trefoil") continue;
    for (int total = 1; total <= 4; ++total) {
      for (int i = 0; i <= total; ++i) {
        const int j = total - i;
        const std::string grid_name = name + "^" + std::to_string(i) + "," +
                                      std::to_string(j);
        derived(grid_name, [&] {
          OrientedFront stabilized = stabilize(front, i, j);
          analyze(stabilized);
          corpus.fronts.emplace_back(grid_name, stabilized);
        });
      }
    }
  }

  std::vector<std::pair<std::string, FramedDiagram>> smoothed;
  for (std::size_t f = 0; f < file_fronts; ++f) {
    const auto& [name, front] = corpus.fronts[f];
    derived("front:" + name, [&] {
      smoothed.emplace_back("front:" + name, front_to_framed(front));
    });
  }

  std::vector<std::pair<std::string, FramedDiagram>> kink_bases = corpus.framed;
  kink_bases.insert(kink_bases.end(), smoothed.begin(), smoothed.end());
  for (const auto& [name, base] : kink_bases) {
    for (int d = 1; d <= 2; ++d) {
      const std::string singular_name = name + "+kinks" + std::to_string(d);
      derived(singular_name, [&] {
        SingularFramedDiagram s = make_kinked_singular(base, d);
        validate(s);
        corpus.singulars.emplace_back(singular_name, s);
      });
    }
  }
  corpus.framed.insert(corpus.framed.end(), smoothed.begin(), smoothed.end());

  return corpus;
}

}  // namespace knotcalc
