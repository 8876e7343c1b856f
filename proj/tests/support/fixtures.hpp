#pragma once

#include <string>
#include <vector>

namespace svc::test {

// Fixture-relative paths and plain file I/O; SVC_FIXTURE_DIR comes from the
// build so tests run from any working directory.
std::string fixture_path(const std::string& relative);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// Sorted list of the committed corpus files (tests/data/corpus/*.svc).
std::vector<std::string> corpus_paths();

} // namespace svc::test
