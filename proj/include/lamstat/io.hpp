#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lamstat/generators.hpp"
#include "lamstat/sequence.hpp"

namespace lamstat {

enum class FileFormat { Csv, Jsonl };

FileFormat format_from_name(std::string_view name); // "csv" | "jsonl"

// CSV: one value per line, or "index,value" rows with contiguous 1..N indices.
// JSONL: one JSON number per line, or {"index": i, "value": v} objects.
SequencePrefix parse_sequence_file(const std::string& path, FileFormat format,
                                   bool skip_header = false);

// one lambda value per line
std::vector<double> load_schedule_csv(const std::string& path, bool skip_header = false);

// comma list ("0,2,4,8") or one cut per line in a file
std::vector<std::size_t> parse_cut_list(const std::string& text);
std::vector<std::size_t> load_cuts_csv(const std::string& path, bool skip_header = false);

// two columns "xi,eta" per line
PairList load_pairs_csv(const std::string& path, bool skip_header = false);

// two columns "x,f(x)" per line, for table functions
std::pair<std::vector<double>, std::vector<double>> load_table_csv(const std::string& path,
                                                                   bool skip_header = false);

void write_sequence_csv(const std::string& path, const SequencePrefix& prefix);

} // namespace lamstat
