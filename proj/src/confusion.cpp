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

#include "dqstlab/confusion.hpp"

#include <cmath>
#include <stdexcept>

#include "dqstlab/rng.hpp"

namespace dqstlab {

namespace {

constexpr double kColumnTol = 1e-10;
constexpr double kSingularTol = 1e-12;

void check_column_stochastic(const Eigen::MatrixXd& m) {
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    double sum = 0.0;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      const double v = m(r, c);
      if (v < -kColumnTol || v > 1.0 + kColumnTol) {
        throw std::invalid_argument("ConfusionMatrix: entry outside [0, 1]");
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > kColumnTol) {
      throw std::invalid_argument("ConfusionMatrix: column does not sum to 1");
    }
  }
}

Eigen::Matrix2d block_from_flips(const ReadoutFlip& f) {
  Eigen::Matrix2d b;
  b << 1.0 - f.p01, f.p10, f.p01, 1.0 - f.p10;
  return b;
}

}  // namespace

ConfusionMatrix ConfusionMatrix::per_qubit(std::vector<Eigen::Matrix2d> blocks) {
  if (blocks.empty()) {
    throw std::invalid_argument("ConfusionMatrix: need at least one block");
  }
  for (const auto& b : blocks) check_column_stochastic(b);
  ConfusionMatrix c;
  c.mode_ = Mode::PerQubit;
  c.bits_ = static_cast<int>(blocks.size());
  c.blocks_ = std::move(blocks);
  return c;
}

ConfusionMatrix ConfusionMatrix::full(Eigen::MatrixXd mat) {
  if (mat.rows() != mat.cols()) {
    throw std::invalid_argument("ConfusionMatrix: matrix must be square");
  }
  const int bits = log2_dim(mat.rows());
  check_column_stochastic(mat);
  ConfusionMatrix c;
  c.mode_ = Mode::Full;
  c.bits_ = bits;
  c.full_ = std::move(mat);
  return c;
}

const std::vector<Eigen::Matrix2d>& ConfusionMatrix::blocks() const {
  if (mode_ != Mode::PerQubit) {
    throw std::logic_error("ConfusionMatrix: not in per-qubit mode");
  }
  return blocks_;
}

const Eigen::MatrixXd& ConfusionMatrix::matrix() const {
  if (mode_ != Mode::Full) {
    throw std::logic_error("ConfusionMatrix: not in full mode");
  }
  return full_;
}

Eigen::MatrixXd ConfusionMatrix::dense() const {
  if (mode_ == Mode::Full) return full_;
  if (bits_ > 10) {
    throw std::invalid_argument("ConfusionMatrix: dense form capped at 10 bits");
  }
  Eigen::MatrixXd out = Eigen::MatrixXd::Ones(1, 1);
  for (const auto& b : blocks_) {
    Eigen::MatrixXd next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
      for (Eigen::Index j = 0; j < out.cols(); ++j) {
        next.block(2 * i, 2 * j, 2, 2) = out(i, j) * b;
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<double> ConfusionMatrix::apply(const std::vector<double>& probs) const {
  if (probs.size() != (std::size_t{1} << bits_)) {
    throw std::invalid_argument("ConfusionMatrix: vector size mismatch");
  }
  if (mode_ == Mode::Full) {
    Eigen::Map<const Eigen::VectorXd> p(probs.data(),
                                        static_cast<Eigen::Index>(probs.size()));
    Eigen::VectorXd out = full_ * p;
    return {out.data(), out.data() + out.size()};
  }
  std::vector<double> out = probs;
  for (int q = 0; q < bits_; ++q) {
    const Eigen::Matrix2d& b = blocks_[static_cast<std::size_t>(q)];
    const std::size_t mask = std::size_t{1} << (bits_ - 1 - q);
    for (std::size_t j = 0; j < out.size(); ++j) {
      if (j & mask) continue;
      const double p0 = out[j];
      const double p1 = out[j | mask];
      out[j] = b(0, 0) * p0 + b(0, 1) * p1;
      out[j | mask] = b(1, 0) * p0 + b(1, 1) * p1;
    }
  }
  return out;
}

std::vector<double> ConfusionMatrix::solve(const std::vector<double>& probs) const {
  if (probs.size() != (std::size_t{1} << bits_)) {
    throw std::invalid_argument("ConfusionMatrix: vector size mismatch");
  }
  if (mode_ == Mode::PerQubit) {
    std::vector<double> out = probs;
    for (int q = 0; q < bits_; ++q) {
      const Eigen::Matrix2d& b = blocks_[static_cast<std::size_t>(q)];
      const double det = b.determinant();
      if (std::abs(det) < kSingularTol) {
        throw std::invalid_argument(
            "ConfusionMatrix: singular calibration block (flip probabilities "
            "sum to 1)");
      }
      const std::size_t mask = std::size_t{1} << (bits_ - 1 - q);
      for (std::size_t j = 0; j < out.size(); ++j) {
        if (j & mask) continue;
        const double p0 = out[j];
        const double p1 = out[j | mask];
        out[j] = (b(1, 1) * p0 - b(0, 1) * p1) / det;
        out[j | mask] = (-b(1, 0) * p0 + b(0, 0) * p1) / det;
      }
    }
    return out;
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(full_);
  if (!lu.isInvertible()) {
    throw std::invalid_argument("ConfusionMatrix: singular calibration matrix");
  }
  Eigen::Map<const Eigen::VectorXd> p(probs.data(),
                                      static_cast<Eigen::Index>(probs.size()));
  Eigen::VectorXd out = lu.solve(p);
  return {out.data(), out.data() + out.size()};
}

ConfusionMatrix exact_confusion(const NoiseModel& noise, int num_bits) {
  noise.validate();
  std::vector<Eigen::Matrix2d> blocks;
  blocks.reserve(static_cast<std::size_t>(num_bits));
  for (int q = 0; q < num_bits; ++q) {
    blocks.push_back(block_from_flips(noise.readout_for(q, num_bits)));
  }
  return ConfusionMatrix::per_qubit(std::move(blocks));
}

ConfusionMatrix calibrate_confusion(const NoiseModel& noise, int num_bits,
                                    std::uint64_t shots, std::uint64_t seed) {
  noise.validate();
  if (shots < 1) {
    throw std::invalid_argument("calibrate_confusion: shots must be positive");
  }
  std::vector<Eigen::Matrix2d> blocks;
  blocks.reserve(static_cast<std::size_t>(num_bits));
  for (int q = 0; q < num_bits; ++q) {
    const ReadoutFlip f = noise.readout_for(q, num_bits);
    Eigen::Matrix2d b;
    for (int prep = 0; prep < 2; ++prep) {
      RngStream rng = derive_stream(seed, {0x636f6e66ULL, static_cast<std::uint64_t>(q),
                                           static_cast<std::uint64_t>(prep)});
      const double pflip = (prep == 0) ? f.p01 : f.p10;
      std::uint64_t flipped = 0;
      for (std::uint64_t s = 0; s < shots; ++s) {
        if (rng.bernoulli(pflip)) ++flipped;
      }
      const double frac = static_cast<double>(flipped) / static_cast<double>(shots);
      b(1 - prep, prep) = frac;        // measured the other value
      b(prep, prep) = 1.0 - frac;      // measured the prepared value
    }
    blocks.push_back(b);
  }
  return ConfusionMatrix::per_qubit(std::move(blocks));
}

ConfusionMatrix calibrate_confusion_full(const NoiseModel& noise, int num_bits,
                                         std::uint64_t shots, std::uint64_t seed) {
  noise.validate();
  if (num_bits > 10) {
    throw std::invalid_argument("calibrate_confusion_full: capped at 10 bits");
  }
  const std::size_t dim = std::size_t{1} << num_bits;
  if (shots == 0) {
    // Exact mode: classical independent flips tensor-factorize exactly.
    return ConfusionMatrix::full(exact_confusion(noise, num_bits).dense());
  }
  Eigen::MatrixXd m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t prep = 0; prep < dim; ++prep) {
    RngStream rng = derive_stream(seed, {0x66756c6cULL, prep});
    std::vector<std::uint64_t> counts(dim, 0);
    for (std::uint64_t s = 0; s < shots; ++s) {
      std::size_t outcome = prep;
      for (int q = 0; q < num_bits; ++q) {
        const ReadoutFlip f = noise.readout_for(q, num_bits);
        const std::size_t mask = std::size_t{1} << (num_bits - 1 - q);
        const double pflip = (outcome & mask) ? f.p10 : f.p01;
        if (pflip > 0.0 && rng.bernoulli(pflip)) outcome ^= mask;
      }
      counts[outcome] += 1;
    }
    for (std::size_t b = 0; b < dim; ++b) {
      m(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(prep)) =
          static_cast<double>(counts[b]) / static_cast<double>(shots);
    }
  }
  return ConfusionMatrix::full(std::move(m));
}

ConfusionMatrix tensor_confusion(const ConfusionMatrix& per_qubit) {
  if (per_qubit.mode() != ConfusionMatrix::Mode::PerQubit) {
    throw std::invalid_argument("tensor_confusion: input must be per-qubit");
  }
  return ConfusionMatrix::full(per_qubit.dense());
}

std::vector<double> mitigate_probs(const ConfusionMatrix& confusion,
                                   const std::vector<double>& probs, bool clip) {
  std::vector<double> q = confusion.solve(probs);
  if (clip) {
    double total = 0.0;
    for (double& v : q) {
      if (v < 0.0) v = 0.0;
      total += v;
    }
    if (total <= 0.0) {
      throw std::runtime_error("mitigate_probs: clipped distribution is empty");
    }
    for (double& v : q) v /= total;
  }
  return q;
}

OutcomeDistribution mitigate_counts(const CountTable& counts,
                                    const ConfusionMatrix& confusion, bool clip) {
  counts.validate();
  if (confusion.num_bits() != counts.n() + 1) {
    throw std::invalid_argument(
        "mitigate_counts: confusion matrix must cover the system bits plus "
        "the meter");
  }
  OutcomeDistribution out;
  out.n = counts.n();
  out.p = mitigate_probs(confusion, counts.frequencies().p, clip);
  return out;
}

}  // namespace dqstlab
