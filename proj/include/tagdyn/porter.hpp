// Porter's 1980 suffix-stripping algorithm.
#pragma once

#include <string>
#include <string_view>

namespace tagdyn {

// Stems one lowercase ASCII word through all five steps of the original
// algorithm. Words of any length are processed; non-alphabetic input is
// returned unchanged.
std::string porter_stem(std::string_view word);

}  // namespace tagdyn
