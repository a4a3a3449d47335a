#ifndef SGKIT_IO_HPP_
#define SGKIT_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "sgkit/semigroup.hpp"

namespace sgkit {

  // ".sg": `n <count>`, then n rows of n indices, then optionally
  // `labels <l1> ... <ln>`.  Blank lines and `#` comments are skipped.
  Semigroup   parse_sg(std::string_view text);
  std::string format_sg(Semigroup const& s);

  // ".tgen": one transformation per line, as its list of images.
  std::vector<std::vector<index_t>> parse_tgen(std::string_view text);

  std::string read_file(std::string const& path);

}  // namespace sgkit

#endif  // SGKIT_IO_HPP_
