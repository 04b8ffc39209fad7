// Copyright 2026 The dqstlab developers
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

#ifndef DQSTLAB_SERIALIZATION_HPP_
#define DQSTLAB_SERIALIZATION_HPP_

#include <string>
#include <vector>

#include "dqstlab/confusion.hpp"
#include "dqstlab/estimation.hpp"
#include "dqstlab/types.hpp"
#include "dqstlab/zne.hpp"

namespace dqstlab {

// All formats carry format_version 1 and print doubles at 17 significant
// digits, which round-trips IEEE doubles bit-exactly. Golden regression
// files rely on byte-stable output.

/// {"format_version":1,"n":...,"entries":[re,im,...]} with entries in
/// row-major order.
std::string matrix_to_json(const CMat& mat);
CMat matrix_from_json(const std::string& text);

/// Per-setting element estimates: a header line per setting, then one
/// "row_bits,col_bits,re,im,stderr_re,stderr_im" record per element.
std::string estimates_to_text(const std::vector<SettingEstimates>& all);
std::vector<SettingEstimates> estimates_from_text(const std::string& text);

/// Confusion matrix: mode, bit count, row-major entries (per block in
/// per-qubit mode).
std::string confusion_to_text(const ConfusionMatrix& c);
ConfusionMatrix confusion_from_text(const std::string& text);

/// Fold series with every per-instance value retained.
std::string zne_to_text(const ZneSeries& series);
ZneSeries zne_from_text(const std::string& text);

/// Shared 17-significant-digit formatting.
std::string format_double(double v);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace dqstlab

#endif  // DQSTLAB_SERIALIZATION_HPP_
