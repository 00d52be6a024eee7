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

#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "fedl_lab/data/synthetic.hpp"
#include "fedl_lab/dataset.hpp"

namespace fedl_lab::data {

// Dataset CSV layout: one file per UE, a header row naming the feature
// columns f0..f{d-1} followed by `label`, one sample per row, numbers written
// with 17 significant digits.

enum class WeightRule { kRowCount, kUniform };

struct CsvSchema {
  std::string label_column = "label";
  WeightRule weight_rule = WeightRule::kRowCount;
};

void write_ue_csv(const std::filesystem::path& path, const UEDataset& data);

// Loads one dataset per file, in the given order. Throws ParseError (with
// file and line) on malformed rows and SchemaError when files disagree on
// columns.
std::vector<UEDataset> load_csv(std::span<const std::filesystem::path> files,
                                const CsvSchema& schema = {});

// All *.csv files in `dir`, ordered by file name.
std::vector<std::filesystem::path> list_csv_files(
    const std::filesystem::path& dir);

struct DatasetSplit {
  std::vector<UEDataset> train;
  std::vector<UEDataset> test;  // empty when the directory has no test/
};

// Writes <dir>/train/ue_NNNN.csv, <dir>/test/ue_NNNN.csv and <dir>/dataset.json
// (spec, seed, per-UE sizes). Returns the written paths.
std::vector<std::filesystem::path> write_dataset_dir(
    const std::filesystem::path& dir, const SyntheticSpec& spec,
    const SyntheticData& data);

// Reads the layout produced by write_dataset_dir. A directory holding CSV
// files directly (no train/ subdirectory) is read as training data only.
DatasetSplit load_dataset_dir(const std::filesystem::path& dir,
                              const CsvSchema& schema = {});

}  // namespace fedl_lab::data
