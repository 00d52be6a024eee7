// Copyright 2026 The fedl-lab Authors
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

#include "fedl_lab/data/csv_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>

#include <nlohmann/json.hpp>

#include "fedl_lab/errors.hpp"
#include "fedl_lab/io_util.hpp"

namespace fedl_lab::data {

namespace fs = std::filesystem;

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool parse_number(std::string_view text, double& out) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return false;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

struct ParsedFile {
  std::vector<std::string> header;
  UEDataset data;
};

ParsedFile parse_file(const fs::path& path, const CsvSchema& schema) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot open " + path.string());
  ParsedFile out;
  std::string line;
  std::size_t line_no = 0;
  std::size_t label_index = 0;
  std::vector<double> row;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (line_no == 1) {
      for (auto f : split_fields(view)) out.header.emplace_back(trim(f));
      auto it = std::find(out.header.begin(), out.header.end(),
                          schema.label_column);
      if (it == out.header.end()) {
        throw ParseError(path.string(), line_no,
                         "header has no '" + schema.label_column + "' column");
      }
      if (out.header.size() < 2) {
        throw ParseError(path.string(), line_no, "header has no features");
      }
      label_index = static_cast<std::size_t>(it - out.header.begin());
      continue;
    }
    if (view.empty()) continue;
    const auto fields = split_fields(view);
    if (fields.size() != out.header.size()) {
      throw ParseError(path.string(), line_no,
                       "expected " + std::to_string(out.header.size()) +
                           " fields, found " + std::to_string(fields.size()));
    }
    row.clear();
    double label = 0.0;
    for (std::size_t k = 0; k < fields.size(); ++k) {
      double v = 0.0;
      if (!parse_number(fields[k], v)) {
        throw ParseError(path.string(), line_no,
                         "field " + std::to_string(k + 1) + " ('" +
                             std::string(fields[k]) + "') is not a number");
      }
      if (k == label_index) {
        label = v;
      } else {
        row.push_back(v);
      }
    }
    out.data.features.push_row(row);
    out.data.labels.push_back(label);
  }
  if (line_no == 0) throw ParseError(path.string(), 1, "file is empty");
  if (out.data.size() == 0) {
    throw ParseError(path.string(), line_no, "file has no samples");
  }
  return out;
}

std::string csv_text(const UEDataset& data) {
  std::string out;
  for (std::size_t j = 0; j < data.dim(); ++j) {
    out += 'f';
    out += std::to_string(j);
    out += ',';
  }
  out += "label\n";
  for (std::size_t i = 0; i < data.size(); ++i) {
    for (double v : data.features.row(i)) {
      out += format_double(v);
      out += ',';
    }
    out += format_double(data.labels[i]);
    out += '\n';
  }
  return out;
}

std::string ue_file_name(std::size_t n) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "ue_%04zu.csv", n);
  return buf;
}

}  // namespace

void write_ue_csv(const fs::path& path, const UEDataset& data) {
  write_file_atomic(path, csv_text(data));
}

std::vector<UEDataset> load_csv(std::span<const fs::path> files,
                                const CsvSchema& schema) {
  if (files.empty()) throw InvalidInputError("no CSV files given");
  std::vector<UEDataset> out;
  std::vector<std::string> first_header;
  for (std::size_t n = 0; n < files.size(); ++n) {
    ParsedFile parsed = parse_file(files[n], schema);
    if (n == 0) {
      first_header = parsed.header;
    } else if (parsed.header.size() != first_header.size()) {
      throw SchemaError(files[n].string() + " has " +
                        std::to_string(parsed.header.size()) +
                        " columns, " + files[0].string() + " has " +
                        std::to_string(first_header.size()));
    }
    out.push_back(std::move(parsed.data));
  }
  if (schema.weight_rule == WeightRule::kRowCount) {
    assign_size_weights(out);
  } else {
    for (auto& ds : out) ds.weight = 1.0 / static_cast<double>(out.size());
  }
  return out;
}

std::vector<fs::path> list_csv_files(const fs::path& dir) {
  if (!fs::is_directory(dir)) {
    throw InvalidInputError(dir.string() + " is not a directory");
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".csv") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end(), [](const auto& a, const auto& b) {
    return a.filename().string() < b.filename().string();
  });
  return files;
}

std::vector<fs::path> write_dataset_dir(const fs::path& dir,
                                        const SyntheticSpec& spec,
                                        const SyntheticData& data) {
  std::vector<fs::path> written;
  nlohmann::json sizes_train = nlohmann::json::array();
  nlohmann::json sizes_test = nlohmann::json::array();
  for (std::size_t n = 0; n < data.train.size(); ++n) {
    const auto train_path = dir / "train" / ue_file_name(n);
    write_ue_csv(train_path, data.train[n]);
    written.push_back(train_path);
    sizes_train.push_back(data.train[n].size());
  }
  for (std::size_t n = 0; n < data.test.size(); ++n) {
    const auto test_path = dir / "test" / ue_file_name(n);
    write_ue_csv(test_path, data.test[n]);
    written.push_back(test_path);
    sizes_test.push_back(data.test[n].size());
  }
  nlohmann::json doc;
  doc["spec"] = nlohmann::json::parse(synthetic_spec_to_json(spec));
  doc["seed"] = spec.seed;
  doc["train_sizes"] = sizes_train;
  doc["test_sizes"] = sizes_test;
  doc["sigma"] = data.sigma;
  const auto meta = dir / "dataset.json";
  write_file_atomic(meta, doc.dump(2) + "\n");
  written.push_back(meta);
  return written;
}

DatasetSplit load_dataset_dir(const fs::path& dir, const CsvSchema& schema) {
  DatasetSplit out;
  if (fs::is_directory(dir / "train")) {
    const auto train_files = list_csv_files(dir / "train");
    out.train = load_csv(train_files, schema);
    if (fs::is_directory(dir / "test")) {
      const auto test_files = list_csv_files(dir / "test");
      if (!test_files.empty()) out.test = load_csv(test_files, schema);
    }
  } else {
    const auto files = list_csv_files(dir);
    out.train = load_csv(files, schema);
  }
  validate_datasets(out.train);
  if (!out.test.empty()) {
    validate_datasets(out.test);
    if (out.test.front().dim() != out.train.front().dim()) {
      throw SchemaError("train and test feature dimensions differ");
    }
  }
  return out;
}

}  // namespace fedl_lab::data
