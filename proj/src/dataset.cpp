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

#include "qknn/dataset.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace qknn {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) {
    return "";
  }
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(trim(line.substr(start)));
      break;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

bool parse_number(const std::string& field, double& out) {
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && !field.empty();
}

}  // namespace

RawDataset parse_csv(std::istream& in) {
  RawDataset ds;
  std::string line;
  std::size_t line_no = 0;
  bool first_row = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) {
      continue;
    }
    const std::vector<std::string> fields = split_fields(line);
    if (fields.size() < 2) {
      throw std::invalid_argument("csv line " + std::to_string(line_no) +
                                  ": need at least one attribute and a class name");
    }
    RawRecord rec;
    rec.class_name = fields.back();
    bool numeric = true;
    for (std::size_t i = 0; i + 1 < fields.size(); ++i) {
      double v = 0.0;
      if (!parse_number(fields[i], v)) {
        numeric = false;
        break;
      }
      rec.attributes.push_back(v);
    }
    if (!numeric) {
      if (first_row) {
        first_row = false;  // header row, skip it
        continue;
      }
      throw std::invalid_argument("csv line " + std::to_string(line_no) +
                                  ": non-numeric attribute");
    }
    if (rec.class_name.empty()) {
      throw std::invalid_argument("csv line " + std::to_string(line_no) +
                                  ": empty class name");
    }
    if (ds.records.empty()) {
      ds.attribute_count = rec.attributes.size();
    } else if (rec.attributes.size() != ds.attribute_count) {
      throw std::invalid_argument("csv line " + std::to_string(line_no) +
                                  ": expected " + std::to_string(ds.attribute_count) +
                                  " attributes, got " + std::to_string(rec.attributes.size()));
    }
    first_row = false;
    ds.records.push_back(std::move(rec));
  }
  if (ds.records.empty()) {
    throw std::invalid_argument("csv: no data rows");
  }
  return ds;
}

RawDataset parse_csv(const std::string& text) {
  std::istringstream in(text);
  return parse_csv(in);
}

RawDataset parse_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open dataset file: " + path);
  }
  return parse_csv(in);
}

std::string gray_encode(std::uint64_t value, unsigned width) {
  if (width == 0 || width > 63) {
    throw std::invalid_argument("gray_encode: width must lie in [1, 63]");
  }
  if (value >= (std::uint64_t{1} << width)) {
    throw std::invalid_argument("gray_encode: value does not fit width");
  }
  const std::uint64_t gray = value ^ (value >> 1);
  std::string bits(width, '0');
  for (unsigned i = 0; i < width; ++i) {
    if ((gray >> (width - 1 - i)) & 1u) {
      bits[i] = '1';
    }
  }
  return bits;
}

namespace {

// Scaled integral value of one attribute; rejects residual fractional parts
// instead of rounding them away.
std::uint64_t scale_to_integer(double value, unsigned scale_factor) {
  const double scaled = value * scale_factor;
  const double rounded = std::round(scaled);
  if (std::abs(scaled - rounded) > 1e-6) {
    throw std::invalid_argument("binarize: value " + std::to_string(value) +
                                " is not integral after scaling by " +
                                std::to_string(scale_factor));
  }
  if (rounded < 0.0) {
    throw std::invalid_argument("binarize: negative attribute value " +
                                std::to_string(value));
  }
  return static_cast<std::uint64_t>(rounded);
}

unsigned bits_needed(std::uint64_t max_value) {
  const auto width = static_cast<unsigned>(std::bit_width(max_value));
  return std::max(1u, width);
}

}  // namespace

std::vector<unsigned> resolve_widths(const RawDataset& raw, const BinarizationSpec& spec) {
  if (raw.records.empty()) {
    throw std::invalid_argument("resolve_widths: empty dataset");
  }
  if (spec.scale_factor == 0) {
    throw std::invalid_argument("resolve_widths: scale factor must be positive");
  }
  if (spec.width_policy == WidthPolicy::kExplicit) {
    if (spec.widths.size() != raw.attribute_count) {
      throw std::invalid_argument("resolve_widths: explicit widths must match attribute count");
    }
    return spec.widths;
  }
  std::vector<std::uint64_t> maxima(raw.attribute_count, 0);
  for (const RawRecord& rec : raw.records) {
    for (std::size_t a = 0; a < raw.attribute_count; ++a) {
      maxima[a] = std::max(maxima[a], scale_to_integer(rec.attributes[a], spec.scale_factor));
    }
  }
  std::vector<unsigned> widths(raw.attribute_count, 0);
  if (spec.width_policy == WidthPolicy::kPerAttributeMin) {
    for (std::size_t a = 0; a < raw.attribute_count; ++a) {
      widths[a] = bits_needed(maxima[a]);
    }
  } else {
    std::uint64_t global = 0;
    for (std::uint64_t m : maxima) {
      global = std::max(global, m);
    }
    widths.assign(raw.attribute_count, bits_needed(global));
  }
  return widths;
}

LabeledDataset binarize(const RawDataset& raw, const BinarizationSpec& spec) {
  const std::vector<unsigned> widths = resolve_widths(raw, spec);
  std::size_t bit_length = 0;
  for (unsigned w : widths) {
    bit_length += w;
  }

  LabeledDataset out;
  out.bit_length = bit_length;
  std::unordered_map<std::string, int> class_ids;
  for (const RawRecord& rec : raw.records) {
    BinaryPattern pat;
    pat.bits.reserve(bit_length);
    for (std::size_t a = 0; a < raw.attribute_count; ++a) {
      pat.bits += gray_encode(scale_to_integer(rec.attributes[a], spec.scale_factor),
                              widths[a]);
    }
    auto [it, inserted] = class_ids.try_emplace(rec.class_name,
                                                static_cast<int>(out.class_names.size()));
    if (inserted) {
      out.class_names.push_back(rec.class_name);
    }
    pat.class_id = it->second;
    out.patterns.push_back(std::move(pat));
  }
  return out;
}

std::vector<LooFold> loo_folds(const LabeledDataset& data) {
  const std::size_t n = data.size();
  if (n < 2) {
    throw std::invalid_argument("loo_folds: need at least 2 patterns");
  }
  std::vector<LooFold> folds;
  folds.reserve(n);
  for (std::size_t held_out = 0; held_out < n; ++held_out) {
    LooFold fold;
    fold.query = data.patterns[held_out];
    fold.query_index = held_out;
    fold.training.class_names = data.class_names;
    fold.training.bit_length = data.bit_length;
    fold.training.patterns.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (i != held_out) {
        fold.training.patterns.push_back(data.patterns[i]);
      }
    }
    folds.push_back(std::move(fold));
  }
  return folds;
}

std::string export_binarized(const LabeledDataset& data) {
  std::string out;
  for (const BinaryPattern& pat : data.patterns) {
    out += pat.bits;
    out += ' ';
    out += data.class_names.at(static_cast<std::size_t>(pat.class_id));
    out += '\n';
  }
  return out;
}

}  // namespace qknn
