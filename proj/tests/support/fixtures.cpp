#include "fixtures.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifndef SVC_FIXTURE_DIR
#error "SVC_FIXTURE_DIR must be defined by the build"
#endif

namespace svc::test {

std::string fixture_path(const std::string& relative) {
    return std::string(SVC_FIXTURE_DIR) + "/" + relative;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

std::vector<std::string> corpus_paths() {
    std::vector<std::string> paths;
    for (const auto& entry : std::filesystem::directory_iterator(fixture_path("corpus")))
        if (entry.path().extension() == ".svc") paths.push_back(entry.path().string());
    std::sort(paths.begin(), paths.end());
    if (paths.empty()) throw std::runtime_error("no corpus fixtures found");
    return paths;
}

} // namespace svc::test
