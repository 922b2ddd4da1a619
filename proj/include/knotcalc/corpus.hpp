#pragma once

#include <string>
#include <utility>
#include <vector>

#include "knotcalc/fronts.hpp"
#include "knotcalc/json_io.hpp"
#include "knotcalc/topology.hpp"
#include "knotcalc/vassiliev.hpp"

namespace knotcalc {

// Named fixtures, every one validated at load. Beyond the files on disk the
// loader derives: the stabilization grid K^{i,j} (1 <= i+j <= 4) over the
// fronts named unknot and trefoil, the smoothed image "front:<name>" of every
// front file, and kinked singular diagrams "<name>+kinks{1,2}" over every
// framed fixture and smoothed front file.
struct Corpus {
  std::vector<std::pair<std::string, OrientedFront>> fronts;
  std::vector<std::pair<std::string, FramedDiagram>> framed;
  std::vector<std::pair<std::string, MoveSequence>> paths;
  std::vector<std::pair<std::string, ManifoldDescriptor>> descriptors;
  std::vector<std::pair<std::string, SingularFramedDiagram>> singulars;
  std::vector<std::pair<std::string, InvariantLadder<IntGroup>>> ladders;
};

// KNOTCALC_CORPUS from the environment, else the bundled corpus directory.
std::string default_corpus_dir();

// Reads fronts/, framed/, paths/, descriptors/, singular/, ladders/ under
// dir (each optional), filenames sorted; CorpusLoadError names the fixture
// that failed.
Corpus load_corpus(const std::string& dir);

}  // namespace knotcalc
