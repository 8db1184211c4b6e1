#ifndef LRCKIT_JSON_IO_HPP
#define LRCKIT_JSON_IO_HPP

#include "lrckit/code.hpp"
#include "lrckit/designs.hpp"

#include <json.hpp>

#include <string>

namespace lrc {

using ordered_json = nlohmann::ordered_json;

ordered_json family_to_json(const BlockFamily &fam);
BlockFamily family_from_json(const ordered_json &j);

// {"q","p","m","r","delta","v","w","alphas","sets","G","H","repair_sets","claimed_d"};
// matrices row-major in the canonical element encoding. Derived codes carry
// empty "alphas"/"sets".
ordered_json code_to_json(const LrcCode &code);
LrcCode code_from_json(const ordered_json &j);

ordered_json matrix_to_json(std::uint32_t q, const Matrix &m);

std::string dump_pretty(const ordered_json &j);

} // namespace lrc

#endif
