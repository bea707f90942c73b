#pragma once

#include <string_view>
#include <utility>
#include <vector>

namespace simplicia::detail {

// Facet lists in .cplx form, keyed by catalog name.
const std::vector<std::pair<std::string_view, std::string_view>>& verbatim_lists();

}  // namespace simplicia::detail
