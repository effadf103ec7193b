#pragma once

#include <filesystem>
#include <iosfwd>

#include "crinv/series.hpp"

namespace crinv {

// Coefficient files, UTF-8 text:
//
//   order N
//   k l re_num/re_den im_num/im_den
//   ...
//
// one line per nonzero coefficient. Reading accepts any line order, bare
// integers for rationals, blank lines and '#' comments; writing emits the
// graded-lexicographic order with explicit denominators. Errors carry the
// offending line number.

TruncatedSeries read_coeff_file(std::istream& in);
TruncatedSeries read_coeff_file(const std::filesystem::path& path);

void write_coeff_file(const TruncatedSeries& s, std::ostream& out);
void write_coeff_file(const TruncatedSeries& s, const std::filesystem::path& path);

}  // namespace crinv
