#ifndef GFIT_CORPUS_DATA_HPP
#define GFIT_CORPUS_DATA_HPP

#include <string_view>
#include <utility>
#include <vector>

namespace gfit::detail {

// (file name, contents) of the group files under corpus/small-std, embedded
// at build time.
const std::vector<std::pair<std::string_view, std::string_view>> &small_std_files();

} // namespace gfit::detail

#endif
