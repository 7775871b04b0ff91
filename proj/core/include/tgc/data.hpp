#pragma once

#include <string>

namespace tgc {

// Resolves a file under the data directory: $TGC_DATA_DIR, then the source tree, then the install prefix.
std::string data_path(const std::string& relative);
std::string read_file(const std::string& path);

}  // namespace tgc
