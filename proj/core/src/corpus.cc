// Copyright 2026 The infotweet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "infotweet/corpus.h"

#include <cctype>
#include <fstream>
#include <iterator>
#include <sstream>
#include <system_error>
#include <unordered_set>

#include "infotweet/error.h"

namespace infotweet {
namespace {

std::string_view trim(std::string_view s) {
  auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      cells.push_back(line.substr(start));
      return cells;
    }
    cells.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

// Calls fn(line_number, line) for every physical line, with any trailing
// '\r' removed.
template <typename Fn>
void for_each_line(std::string_view contents, Fn&& fn) {
  std::size_t line_number = 0;
  std::size_t start = 0;
  while (start < contents.size()) {
    std::size_t end = contents.find('\n', start);
    if (end == std::string_view::npos) end = contents.size();
    std::string_view line = contents.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(++line_number, line);
    start = end + 1;
  }
}

bool is_header(std::string_view first_cell) {
  std::string_view cell = trim(first_cell);
  return cell.size() == 2 && std::tolower(cell[0]) == 'i' &&
         std::tolower(cell[1]) == 'd';
}

std::string at_line(std::string_view source, std::size_t line) {
  return std::string(source) + ": line " + std::to_string(line);
}

}  // namespace

std::string_view split_name(SplitName name) {
  switch (name) {
    case SplitName::kTrain: return "train";
    case SplitName::kValid: return "valid";
    case SplitName::kTest: return "test";
  }
  return "unknown";
}

bool DatasetSplit::fully_labeled() const {
  for (const auto& r : records) {
    if (!r.label) return false;
  }
  return true;
}

std::vector<std::string> DatasetSplit::ids() const {
  std::vector<std::string> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.id);
  return out;
}

std::vector<Label> DatasetSplit::labels() const {
  std::vector<Label> out;
  out.reserve(records.size());
  for (const auto& r : records) {
    if (!r.label) {
      throw Error(ErrorCode::kMissingLabel,
                  "record '" + r.id + "' in " +
                      std::string(split_name(name)) + " split has no label");
    }
    out.push_back(*r.label);
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw Error(ErrorCode::kIo, "failed reading '" + path.string() + "'");
  }
  return std::move(buffer).str();
}

void write_file_atomically(const std::filesystem::path& path,
                           std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error(ErrorCode::kIo, "cannot write '" + path.string() + "'");
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      throw Error(ErrorCode::kIo, "failed writing '" + path.string() + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::kIo, "cannot move '" + tmp.string() + "' to '" +
                                    path.string() + "'");
  }
}

DatasetSplit parse_split(std::string_view contents, bool expect_labels,
                         SplitName name, std::string_view source) {
  DatasetSplit split;
  split.name = name;
  std::unordered_set<std::string> seen;
  bool first_content_line = true;

  for_each_line(contents, [&](std::size_t line_no, std::string_view line) {
    if (trim(line).empty()) return;
    std::vector<std::string_view> cells = split_tabs(line);
    if (first_content_line) {
      first_content_line = false;
      if (is_header(cells.front())) return;
    }
    if (cells.size() != 2 && cells.size() != 3) {
      throw Error(ErrorCode::kParse,
                  at_line(source, line_no) +
                      ": expected 2 or 3 tab-separated fields, found " +
                      std::to_string(cells.size()));
    }
    TweetRecord record;
    record.id = std::string(trim(cells[0]));
    if (record.id.empty()) {
      throw Error(ErrorCode::kParse, at_line(source, line_no) + ": empty id");
    }
    if (trim(cells[1]).empty()) {
      throw Error(ErrorCode::kParse, at_line(source, line_no) +
                                         ": empty text for id '" + record.id +
                                         "'");
    }
    record.text = std::string(cells[1]);
    if (cells.size() == 3 && !trim(cells[2]).empty()) {
      record.label = parse_label(cells[2]);
      if (!record.label) {
        throw Error(ErrorCode::kLabel, at_line(source, line_no) +
                                           ": unknown label '" +
                                           std::string(trim(cells[2])) + "'");
      }
    } else if (expect_labels) {
      throw Error(ErrorCode::kMissingLabel,
                  at_line(source, line_no) + ": missing label for id '" +
                      record.id + "'");
    }
    if (!seen.insert(record.id).second) {
      throw Error(ErrorCode::kParse, at_line(source, line_no) +
                                         ": duplicate id '" + record.id + "'");
    }
    split.records.push_back(std::move(record));
  });
  return split;
}

DatasetSplit load_split(const std::filesystem::path& path, bool expect_labels,
                        SplitName name) {
  return parse_split(read_file(path), expect_labels, name, path.string());
}

CorpusStats compute_stats(const DatasetSplit& split) {
  CorpusStats stats;
  for (const auto& r : split.records) {
    if (!r.label) {
      ++stats.unlabeled;
    } else if (*r.label == Label::kInformative) {
      ++stats.informative;
    } else {
      ++stats.uninformative;
    }
  }
  stats.total = split.records.size();
  return stats;
}

CorpusStats reference_stats(SplitName name) {
  switch (name) {
    case SplitName::kTrain: return {3303, 3697, 0, 7000};
    case SplitName::kValid: return {472, 528, 0, 1000};
    case SplitName::kTest: return {944, 1056, 0, 2000};
  }
  return {};
}

void write_predictions(std::span<const std::string> ids,
                       std::span<const Label> labels,
                       const std::filesystem::path& path) {
  if (ids.size() != labels.size()) {
    throw Error(ErrorCode::kArgument,
                "write_predictions: " + std::to_string(ids.size()) +
                    " ids but " + std::to_string(labels.size()) + " labels");
  }
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (trim(ids[i]).empty() ||
        ids[i].find_first_of("\t\r\n") != std::string::npos) {
      throw Error(ErrorCode::kArgument,
                  "prediction id at position " + std::to_string(i) +
                      " is blank or contains a tab or newline");
    }
    out += ids[i];
    out += '\t';
    out += label_name(labels[i]);
    out += '\n';
  }
  write_file_atomically(path, out);
}

std::vector<Prediction> read_predictions(const std::filesystem::path& path) {
  const std::string contents = read_file(path);
  const std::string source = path.string();
  std::vector<Prediction> out;
  for_each_line(contents, [&](std::size_t line_no, std::string_view line) {
    if (trim(line).empty()) return;
    std::vector<std::string_view> cells = split_tabs(line);
    if (cells.size() != 2 || trim(cells[0]).empty()) {
      throw Error(ErrorCode::kParse,
                  at_line(source, line_no) +
                      ": expected id<TAB>LABEL");
    }
    std::optional<Label> label = parse_label(cells[1]);
    if (!label) {
      throw Error(ErrorCode::kLabel, at_line(source, line_no) +
                                         ": unknown label '" +
                                         std::string(trim(cells[1])) + "'");
    }
    out.push_back({std::string(cells[0]), *label});
  });
  return out;
}

}  // namespace infotweet
