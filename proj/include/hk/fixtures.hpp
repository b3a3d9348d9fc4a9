#pragma once

#include <string_view>

#include "hk/format.hpp"

namespace hk::fixtures {

// Canonical bundled structures, identical to the files under fixtures/.
std::string_view p_text();          // 5-element Krasner (2,2)-hyperfield
std::string_view g_text();          // 4-element hyperintegral domain
std::string_view s4_text();         // 4-element Krasner (2,4)-hyperring, one declared
std::string_view s4_no_one_text();  // same tables without a declared one

const StructureFile& p();
const StructureFile& g();
const StructureFile& s4();
const StructureFile& s4_no_one();

}  // namespace hk::fixtures
