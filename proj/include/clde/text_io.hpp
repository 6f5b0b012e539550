#pragma once

#include <map>
#include <string>
#include <vector>

namespace clde {

// Shortest decimal text that round-trips the exact double value.
std::string format_double(double v);

double parse_double(const std::string& s);

// Flat key/value file, one pair per line as "key = value" or "key value";
// '#' comments and blank lines ignored.
std::map<std::string, std::string> read_key_value_file(const std::string& path);

// Whitespace-separated numeric rows, '#' comments and blank lines ignored.
std::vector<std::vector<double>> read_point_file(const std::string& path);

// Truncates and writes the whole file.
void write_text_file(const std::string& path, const std::string& content);

std::string read_text_file(const std::string& path);

}  // namespace clde
