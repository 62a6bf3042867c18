/*
 * Copyright 2026 The SIPA Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SIPA_CORE_PREDICTOR_HPP_
#define SIPA_CORE_PREDICTOR_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "sipa/core/matrix.hpp"

namespace sipa {

class StageTrace;

// Black-box batch prediction function f: (m x p) -> m predictions.
//
// The wrapped function must be deterministic and safe to call concurrently.
// With threads() > 1 a batch is split into contiguous row blocks that are
// predicted on separate threads and stitched back in order; for a row-wise
// model this gives the same values as one sequential call.
class PredictorHandle {
 public:
  using BatchFunction = std::function<Vector(const Matrix&)>;

  PredictorHandle(std::size_t num_features, BatchFunction fn);

  // Row-wise convenience: wraps a single-observation function.
  static PredictorHandle from_row_function(
      std::size_t num_features,
      std::function<double(std::span<const double>)> fn);

  std::size_t num_features() const noexcept { return num_features_; }
  std::size_t threads() const noexcept { return threads_; }
  PredictorHandle with_threads(std::size_t threads) const;

  // Throws kShape on column-count or output-length mismatch.
  Vector predict(const Matrix& rows) const;
  double predict_row(std::span<const double> row) const;

 private:
  Vector call_checked(const Matrix& rows) const;

  std::size_t num_features_;
  std::shared_ptr<const BatchFunction> fn_;
  std::size_t threads_ = 1;
};

// Memoizes whole-batch predictions for the duration of one method run.
// Keys are a hash of the matrix bits; hits are confirmed by comparing the
// stored matrix, so a collision can only cost time.
class CachedPredictor {
 public:
  explicit CachedPredictor(const PredictorHandle& predictor);

  const PredictorHandle& handle() const noexcept { return predictor_; }

  // Records a prediction tally (rows, batches, cache hits) in `trace`.
  Vector predict(const Matrix& rows, StageTrace* trace = nullptr);

  std::size_t hits() const noexcept { return hits_; }
  std::size_t misses() const noexcept { return misses_; }

 private:
  struct Entry {
    Matrix input;
    Vector output;
  };

  PredictorHandle predictor_;
  std::unordered_map<std::uint64_t, std::vector<Entry>> entries_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

std::uint64_t hash_matrix(const Matrix& m) noexcept;

}  // namespace sipa

#endif  // SIPA_CORE_PREDICTOR_HPP_
