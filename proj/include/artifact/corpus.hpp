#pragma once
// The named fixture corpus: builders for every frozen document in the
// fixture directory.

#include <functional>
#include <string>
#include <vector>

#include "artifact/io.hpp"

namespace artifact {

struct CorpusEntry {
  std::string name;
  std::string description;
  std::function<io::Document()> build;
};

const std::vector<CorpusEntry>& corpus();
const CorpusEntry* find_corpus_entry(const std::string& name);

// $ARTIFACT_FIXTURE_DIR when set, else the source tree's fixtures/.
std::string fixture_dir();

}  // namespace artifact
