#include "tgc/data.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace tgc {

std::string data_path(const std::string& relative) {
  namespace fs = std::filesystem;
  std::vector<fs::path> roots;
  if (const char* env = std::getenv("TGC_DATA_DIR")) roots.emplace_back(env);
  roots.emplace_back(TGC_SOURCE_DATA_DIR);
  roots.emplace_back(TGC_DATA_DIR);
  for (const auto& r : roots)
    if (fs::exists(r / relative)) return (r / relative).string();
  throw std::runtime_error("data file not found: " + relative);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace tgc
