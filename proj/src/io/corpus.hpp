#pragma once

#include <string>
#include <vector>

namespace tatehh {

struct CorpusEntry {
    std::string name;
    std::string json_text;
};

// the built-in example corpus; entries parse through the ordinary input path
const std::vector<CorpusEntry>& builtin_corpus();
// nullptr if no entry matches; accepts "f2", "f2.json" and paths ending in
// a corpus file name
const CorpusEntry* find_corpus_entry(const std::string& name);

} // namespace tatehh
