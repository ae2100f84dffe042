// Copyright 2026 The qknn Authors
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

#ifndef QKNN_DATASET_HPP
#define QKNN_DATASET_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qknn {

struct RawRecord {
  std::vector<double> attributes;
  std::string class_name;
};

/// Numeric dataset as parsed from CSV: rows of decimal attributes with a
/// trailing class name.
struct RawDataset {
  std::vector<RawRecord> records;
  std::size_t attribute_count = 0;
};

enum class WidthPolicy {
  kPerAttributeMin,  // minimal width covering each attribute's max scaled value
  kGlobalMax,        // one width, covering the dataset-wide max scaled value
  kExplicit,         // caller-provided widths
};

struct BinarizationSpec {
  unsigned scale_factor = 10;
  WidthPolicy width_policy = WidthPolicy::kPerAttributeMin;
  std::vector<unsigned> widths;  // consulted only for kExplicit
};

/// One training/classification unit: fixed-length bit string plus class id.
/// bits holds characters '0'/'1'.
struct BinaryPattern {
  std::string bits;
  int class_id = 0;
};

struct LabeledDataset {
  std::vector<BinaryPattern> patterns;
  std::vector<std::string> class_names;  // class_id indexes this
  std::size_t bit_length = 0;

  std::size_t size() const { return patterns.size(); }
  int num_classes() const { return static_cast<int>(class_names.size()); }
};

/// Parses comma-separated rows, last column the class name, the rest decimal
/// numerals. A header row is detected (and skipped) when any attribute cell
/// of the first row fails to parse as a number. Throws std::invalid_argument
/// on empty input, ragged rows, non-numeric attributes or an empty class.
RawDataset parse_csv(std::istream& in);
RawDataset parse_csv(const std::string& text);

/// Opens and parses a CSV file; throws std::runtime_error when the file
/// cannot be read.
RawDataset parse_csv_file(const std::string& path);

/// Binary-reflected Gray code of value, fixed width, most significant bit
/// first. Consecutive values differ in exactly one bit. Throws when
/// value >= 2^width.
std::string gray_encode(std::uint64_t value, unsigned width);

/// Widths the given policy resolves to on this dataset (scan of per-attribute
/// maxima for kPerAttributeMin, dataset-wide max for kGlobalMax).
std::vector<unsigned> resolve_widths(const RawDataset& raw, const BinarizationSpec& spec);

/// Scales every attribute by spec.scale_factor, Gray-encodes it at the
/// resolved width and concatenates per-attribute codes in attribute order.
/// Class ids are assigned by first appearance of the class name. Throws when
/// a scaled value is not integral or does not fit its width.
LabeledDataset binarize(const RawDataset& raw, const BinarizationSpec& spec);

/// One leave-one-out fold: all patterns except one, plus the held-out query.
struct LooFold {
  LabeledDataset training;
  BinaryPattern query;
  std::size_t query_index = 0;
};

/// Exactly N folds in dataset order; fold i holds out pattern i and keeps the
/// rest in their original relative order. Requires N >= 2.
std::vector<LooFold> loo_folds(const LabeledDataset& data);

/// Text export, one line per pattern: bits, space, class name.
std::string export_binarized(const LabeledDataset& data);

}  // namespace qknn

#endif  // QKNN_DATASET_HPP
