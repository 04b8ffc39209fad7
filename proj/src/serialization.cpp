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

#include "dqstlab/serialization.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace dqstlab {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    throw std::runtime_error("cannot open for writing: " + path);
  }
  f << content;
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    throw std::runtime_error("cannot open for reading: " + path);
  }
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string matrix_to_json(const CMat& mat) {
  const int n = log2_dim(mat.rows());
  std::ostringstream os;
  os << "{\"format_version\":1,\"n\":" << n << ",\"entries\":[";
  bool first = true;
  for (Eigen::Index r = 0; r < mat.rows(); ++r) {
    for (Eigen::Index c = 0; c < mat.cols(); ++c) {
      if (!first) os << ',';
      first = false;
      os << format_double(mat(r, c).real()) << ',' << format_double(mat(r, c).imag());
    }
  }
  os << "]}";
  return os.str();
}

CMat matrix_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  if (j.at("format_version").get<int>() != 1) {
    throw std::runtime_error("matrix_from_json: unsupported format version");
  }
  const int n = j.at("n").get<int>();
  const Eigen::Index d = Eigen::Index{1} << n;
  const auto& entries = j.at("entries");
  if (static_cast<Eigen::Index>(entries.size()) != 2 * d * d) {
    throw std::runtime_error("matrix_from_json: entry count mismatch");
  }
  CMat mat(d, d);
  std::size_t i = 0;
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      const double re = entries[i++].get<double>();
      const double im = entries[i++].get<double>();
      mat(r, c) = Complex(re, im);
    }
  }
  return mat;
}

std::string estimates_to_text(const std::vector<SettingEstimates>& all) {
  std::ostringstream os;
  os << "format_version: 1\n";
  os << "settings: " << all.size() << "\n";
  for (const SettingEstimates& se : all) {
    os << "setting: " << se.setting.k.to_string() << ' '
       << basis_char(se.setting.basis) << ' ' << se.setting.fold << ' '
       << se.estimates.size() << "\n";
    for (const ElementEstimate& e : se.estimates) {
      os << e.row.to_string() << ',' << e.col.to_string() << ','
         << format_double(e.value.real()) << ',' << format_double(e.value.imag())
         << ',' << format_double(e.stderr_re) << ',' << format_double(e.stderr_im)
         << "\n";
    }
  }
  return os.str();
}

namespace {

std::vector<std::string> split(const std::string& s, char delim) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == delim) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::vector<SettingEstimates> estimates_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != "format_version: 1") {
    throw std::runtime_error("estimates: bad or missing format version");
  }
  if (!std::getline(is, line) || line.rfind("settings: ", 0) != 0) {
    throw std::runtime_error("estimates: missing settings count");
  }
  const std::size_t num_settings = std::stoull(line.substr(10));
  std::vector<SettingEstimates> all;
  all.reserve(num_settings);
  for (std::size_t s = 0; s < num_settings; ++s) {
    if (!std::getline(is, line) || line.rfind("setting: ", 0) != 0) {
      throw std::runtime_error("estimates: missing setting header");
    }
    std::istringstream hs(line.substr(9));
    std::string kbits;
    char basis;
    int fold;
    std::size_t records;
    hs >> kbits >> basis >> fold >> records;
    SettingEstimates se;
    se.setting = Setting(BitVector::from_string(kbits), basis_from_char(basis), fold);
    se.estimates.reserve(records);
    for (std::size_t r = 0; r < records; ++r) {
      if (!std::getline(is, line)) {
        throw std::runtime_error("estimates: truncated records");
      }
      const auto f = split(line, ',');
      if (f.size() != 6) {
        throw std::runtime_error("estimates: malformed record: " + line);
      }
      ElementEstimate e;
      e.row = BitVector::from_string(f[0]);
      e.col = BitVector::from_string(f[1]);
      e.value = Complex(std::stod(f[2]), std::stod(f[3]));
      e.stderr_re = std::stod(f[4]);
      e.stderr_im = std::stod(f[5]);
      se.estimates.push_back(e);
    }
    all.push_back(std::move(se));
  }
  return all;
}

std::string confusion_to_text(const ConfusionMatrix& c) {
  std::ostringstream os;
  os << "format_version: 1\n";
  os << "mode: " << (c.mode() == ConfusionMatrix::Mode::PerQubit ? "per_qubit" : "full")
     << "\n";
  os << "bits: " << c.num_bits() << "\n";
  if (c.mode() == ConfusionMatrix::Mode::PerQubit) {
    for (const auto& b : c.blocks()) {
      os << format_double(b(0, 0)) << ',' << format_double(b(0, 1)) << ','
         << format_double(b(1, 0)) << ',' << format_double(b(1, 1)) << "\n";
    }
  } else {
    const Eigen::MatrixXd& m = c.matrix();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index col = 0; col < m.cols(); ++col) {
        if (col) os << ',';
        os << format_double(m(r, col));
      }
      os << "\n";
    }
  }
  return os.str();
}

ConfusionMatrix confusion_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != "format_version: 1") {
    throw std::runtime_error("confusion: bad or missing format version");
  }
  if (!std::getline(is, line) || line.rfind("mode: ", 0) != 0) {
    throw std::runtime_error("confusion: missing mode");
  }
  const std::string mode = line.substr(6);
  if (!std::getline(is, line) || line.rfind("bits: ", 0) != 0) {
    throw std::runtime_error("confusion: missing bit count");
  }
  const int bits = std::stoi(line.substr(6));
  if (mode == "per_qubit") {
    std::vector<Eigen::Matrix2d> blocks;
    for (int q = 0; q < bits; ++q) {
      if (!std::getline(is, line)) {
        throw std::runtime_error("confusion: truncated blocks");
      }
      const auto f = split(line, ',');
      if (f.size() != 4) {
        throw std::runtime_error("confusion: malformed block line");
      }
      Eigen::Matrix2d b;
      b << std::stod(f[0]), std::stod(f[1]), std::stod(f[2]), std::stod(f[3]);
      blocks.push_back(b);
    }
    return ConfusionMatrix::per_qubit(std::move(blocks));
  }
  if (mode == "full") {
    const Eigen::Index d = Eigen::Index{1} << bits;
    Eigen::MatrixXd m(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
      if (!std::getline(is, line)) {
        throw std::runtime_error("confusion: truncated matrix");
      }
      const auto f = split(line, ',');
      if (static_cast<Eigen::Index>(f.size()) != d) {
        throw std::runtime_error("confusion: malformed matrix row");
      }
      for (Eigen::Index col = 0; col < d; ++col) {
        m(r, col) = std::stod(f[static_cast<std::size_t>(col)]);
      }
    }
    return ConfusionMatrix::full(std::move(m));
  }
  throw std::runtime_error("confusion: unknown mode " + mode);
}

std::string zne_to_text(const ZneSeries& series) {
  std::ostringstream os;
  os << "format_version: 1\n";
  os << "extrapolated: " << format_double(series.extrapolated) << "\n";
  os << "slope: " << format_double(series.slope) << "\n";
  os << "points: " << series.points.size() << "\n";
  for (std::size_t i = 0; i < series.points.size(); ++i) {
    const ZnePoint& p = series.points[i];
    os << p.fold << ',' << format_double(p.mean) << ',' << format_double(p.std_err);
    for (double v : series.instance_values[i]) {
      os << ',' << format_double(v);
    }
    os << "\n";
  }
  return os.str();
}

ZneSeries zne_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != "format_version: 1") {
    throw std::runtime_error("zne: bad or missing format version");
  }
  ZneSeries series;
  if (!std::getline(is, line) || line.rfind("extrapolated: ", 0) != 0) {
    throw std::runtime_error("zne: missing extrapolated value");
  }
  series.extrapolated = std::stod(line.substr(14));
  if (!std::getline(is, line) || line.rfind("slope: ", 0) != 0) {
    throw std::runtime_error("zne: missing slope");
  }
  series.slope = std::stod(line.substr(7));
  if (!std::getline(is, line) || line.rfind("points: ", 0) != 0) {
    throw std::runtime_error("zne: missing point count");
  }
  const std::size_t count = std::stoull(line.substr(8));
  for (std::size_t i = 0; i < count; ++i) {
    if (!std::getline(is, line)) {
      throw std::runtime_error("zne: truncated points");
    }
    const auto f = split(line, ',');
    if (f.size() < 3) {
      throw std::runtime_error("zne: malformed point line");
    }
    ZnePoint p;
    p.fold = std::stoi(f[0]);
    p.mean = std::stod(f[1]);
    p.std_err = std::stod(f[2]);
    series.points.push_back(p);
    std::vector<double> values;
    for (std::size_t v = 3; v < f.size(); ++v) {
      values.push_back(std::stod(f[v]));
    }
    series.instance_values.push_back(std::move(values));
  }
  series.validate();
  return series;
}

}  // namespace dqstlab
