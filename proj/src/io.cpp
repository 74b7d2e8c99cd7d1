#include "lamstat/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace lamstat {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

double parse_double(const std::string& text, std::size_t line_no) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) {
            throw Error(ErrorCode::Malformed, "trailing characters on line " +
                                                  std::to_string(line_no), line_no);
        }
        return v;
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw Error(ErrorCode::Malformed, "cannot parse number on line " + std::to_string(line_no),
                    line_no);
    }
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::Malformed, "cannot open file: " + path);
    }
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

} // namespace

FileFormat format_from_name(std::string_view name) {
    if (name == "csv") return FileFormat::Csv;
    if (name == "jsonl") return FileFormat::Jsonl;
    throw Error(ErrorCode::BadConfig, "unknown format: " + std::string(name));
}

SequencePrefix parse_sequence_file(const std::string& path, FileFormat format,
                                   bool skip_header) {
    const std::vector<std::string> lines = read_lines(path);
    std::vector<double> values;
    bool indexed = false;
    bool plain = false;
    std::size_t start = skip_header ? 1 : 0;

    for (std::size_t i = start; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        const std::string text = trim(lines[i]);
        if (text.empty()) continue;

        if (format == FileFormat::Jsonl) {
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(text);
            } catch (const std::exception&) {
                throw Error(ErrorCode::Malformed, "invalid JSON on line " + std::to_string(line_no),
                            line_no);
            }
            if (j.is_number()) {
                values.push_back(j.get<double>());
            } else if (j.is_object() && j.contains("index") && j.contains("value")) {
                const auto idx = j["index"].get<std::size_t>();
                if (idx != values.size() + 1) {
                    throw Error(ErrorCode::NonContiguousIndex,
                                "index " + std::to_string(idx) + " on line " +
                                    std::to_string(line_no) + " breaks 1..N order",
                                line_no);
                }
                values.push_back(j["value"].get<double>());
            } else {
                throw Error(ErrorCode::Malformed,
                            "line " + std::to_string(line_no) +
                                " must be a number or {index, value}",
                            line_no);
            }
            continue;
        }

        // CSV: "value" or "index,value"; the two styles must not mix
        const auto comma = text.find(',');
        if (comma == std::string::npos) {
            if (indexed) {
                throw Error(ErrorCode::Malformed, "mixed row styles at line " +
                                                      std::to_string(line_no), line_no);
            }
            plain = true;
            values.push_back(parse_double(text, line_no));
        } else {
            if (plain) {
                throw Error(ErrorCode::Malformed, "mixed row styles at line " +
                                                      std::to_string(line_no), line_no);
            }
            indexed = true;
            const std::string idx_text = trim(text.substr(0, comma));
            const std::string val_text = trim(text.substr(comma + 1));
            const double idx_val = parse_double(idx_text, line_no);
            const auto idx = static_cast<std::size_t>(idx_val);
            if (static_cast<double>(idx) != idx_val || idx != values.size() + 1) {
                throw Error(ErrorCode::NonContiguousIndex,
                            "index " + idx_text + " on line " + std::to_string(line_no) +
                                " breaks 1..N order",
                            line_no);
            }
            values.push_back(parse_double(val_text, line_no));
        }
    }
    if (values.empty()) {
        throw Error(ErrorCode::EmptyFile, "no values in " + path);
    }
    return SequencePrefix::from(std::move(values));
}

std::vector<double> load_schedule_csv(const std::string& path, bool skip_header) {
    const std::vector<std::string> lines = read_lines(path);
    std::vector<double> values;
    for (std::size_t i = skip_header ? 1 : 0; i < lines.size(); ++i) {
        const std::string text = trim(lines[i]);
        if (text.empty()) continue;
        values.push_back(parse_double(text, i + 1));
    }
    if (values.empty()) throw Error(ErrorCode::EmptyFile, "no values in " + path);
    return values;
}

std::vector<std::size_t> parse_cut_list(const std::string& text) {
    std::vector<std::size_t> cuts;
    std::stringstream ss(text);
    std::string token;
    std::size_t pos = 0;
    while (std::getline(ss, token, ',')) {
        ++pos;
        const std::string t = trim(token);
        if (t.empty()) continue;
        const double v = parse_double(t, pos);
        if (v < 0.0 || std::floor(v) != v) {
            throw Error(ErrorCode::Malformed, "cut " + t + " is not a non-negative integer", pos);
        }
        cuts.push_back(static_cast<std::size_t>(v));
    }
    if (cuts.empty()) throw Error(ErrorCode::EmptyFile, "empty cut list");
    return cuts;
}

std::vector<std::size_t> load_cuts_csv(const std::string& path, bool skip_header) {
    const std::vector<std::string> lines = read_lines(path);
    std::vector<std::size_t> cuts;
    for (std::size_t i = skip_header ? 1 : 0; i < lines.size(); ++i) {
        const std::string text = trim(lines[i]);
        if (text.empty()) continue;
        const double v = parse_double(text, i + 1);
        if (v < 0.0 || std::floor(v) != v) {
            throw Error(ErrorCode::Malformed,
                        "cut on line " + std::to_string(i + 1) + " is not a non-negative integer",
                        i + 1);
        }
        cuts.push_back(static_cast<std::size_t>(v));
    }
    if (cuts.empty()) throw Error(ErrorCode::EmptyFile, "no cuts in " + path);
    return cuts;
}

PairList load_pairs_csv(const std::string& path, bool skip_header) {
    const std::vector<std::string> lines = read_lines(path);
    PairList pl;
    for (std::size_t i = skip_header ? 1 : 0; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        const std::string text = trim(lines[i]);
        if (text.empty()) continue;
        const auto comma = text.find(',');
        if (comma == std::string::npos) {
            throw Error(ErrorCode::Malformed,
                        "pair line " + std::to_string(line_no) + " needs two columns", line_no);
        }
        const double a = parse_double(trim(text.substr(0, comma)), line_no);
        const double b = parse_double(trim(text.substr(comma + 1)), line_no);
        pl.pairs.emplace_back(a, b);
    }
    if (pl.pairs.empty()) throw Error(ErrorCode::EmptyFile, "no pairs in " + path);
    return pl;
}

std::pair<std::vector<double>, std::vector<double>> load_table_csv(const std::string& path,
                                                                   bool skip_header) {
    const PairList pl = load_pairs_csv(path, skip_header);
    std::vector<double> xs, ys;
    xs.reserve(pl.pairs.size());
    ys.reserve(pl.pairs.size());
    for (const auto& [x, y] : pl.pairs) {
        xs.push_back(x);
        ys.push_back(y);
    }
    return {std::move(xs), std::move(ys)};
}

void write_sequence_csv(const std::string& path, const SequencePrefix& prefix) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::Malformed, "cannot write file: " + path);
    // shortest round-trip-exact rendering
    for (double v : prefix.values()) out << nlohmann::json(v).dump() << "\n";
}

} // namespace lamstat
