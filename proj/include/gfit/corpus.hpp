#ifndef GFIT_CORPUS_HPP
#define GFIT_CORPUS_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "gfit/engel.hpp"
#include "gfit/group.hpp"

namespace gfit {

struct CorpusEntry {
  std::string name;
  GroupPtr group;
  std::vector<AutomorphismMap> automorphisms;
  // "builtin" or the path of the defining file.
  std::string provenance;

  const AutomorphismMap &automorphism(std::string_view name) const;
};

// Family specs:
//   cyclic(n)  dihedral(n)  symmetric(n<=7)  alternating(n<=7)  sl2(p in 3,5,7)
//   direct_product(spec, spec)  holomorph_ext(spec, automorphism-name)
// symmetric/alternating attach "transposition" (conjugation by (1 2)),
// cyclic(n >= 3) attaches "inversion".
CorpusEntry builtin(std::string_view spec);

// Line grammar:
//   # comment
//   name <id>
//   degree <n>
//   gen <cycles>                 (one or more)
//   auto <id>                    followed by one `map <cycles>` per generator
CorpusEntry parse_group_file(std::string_view text, std::string provenance = "<memory>");
std::string serialize_group_file(const CorpusEntry &entry);

// All *.grp files of a directory, sorted by entry name.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path &directory);

// Builtin families plus the curated group files shipped with the project.
std::vector<CorpusEntry> small_std_corpus();
std::vector<std::string> small_std_builtin_specs();

struct NamedCorpus {
  std::string name;
  std::vector<CorpusEntry> entries;
};

// "builtin:small-std", "builtin:<family spec>", a directory, or a .grp file.
NamedCorpus load_corpus_selector(const std::string &selector);

} // namespace gfit

#endif
