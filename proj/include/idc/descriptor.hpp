#pragma once

#include <string>

#include "idc/codec_common.hpp"

namespace idc {

// Canonical JSON form of a CodeSpec. Key order is fixed and numbers are
// integers (gamma is a shortest-round-trip decimal string), so a load
// followed by a save is byte-identical.
std::string descriptor_to_json(const CodeSpec& code);
CodeSpec descriptor_from_json(const std::string& text);

void save_descriptor(const CodeSpec& code, const std::string& path);
CodeSpec load_descriptor(const std::string& path);

}  // namespace idc
