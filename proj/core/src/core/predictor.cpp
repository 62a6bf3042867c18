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

#include "sipa/core/predictor.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <exception>
#include <string>
#include <thread>
#include <utility>

#include "sipa/core/error.hpp"
#include "sipa/core/stage_trace.hpp"

namespace sipa {

PredictorHandle::PredictorHandle(std::size_t num_features, BatchFunction fn)
    : num_features_(num_features),
      fn_(std::make_shared<const BatchFunction>(std::move(fn))) {
  if (num_features_ == 0) {
    fail(ErrorCode::kInvalidArgument, "predictor needs at least one feature");
  }
  if (!*fn_) fail(ErrorCode::kInvalidArgument, "predictor function is empty");
}

PredictorHandle PredictorHandle::from_row_function(
    std::size_t num_features,
    std::function<double(std::span<const double>)> fn) {
  return PredictorHandle(num_features, [fn = std::move(fn)](const Matrix& rows) {
    Vector out(rows.rows());
    for (Eigen::Index i = 0; i < rows.rows(); ++i) {
      out(i) = fn(std::span<const double>(rows.row(i).data(),
                                          static_cast<std::size_t>(rows.cols())));
    }
    return out;
  });
}

PredictorHandle PredictorHandle::with_threads(std::size_t threads) const {
  if (threads == 0) fail(ErrorCode::kInvalidArgument, "threads must be >= 1");
  PredictorHandle copy = *this;
  copy.threads_ = threads;
  return copy;
}

Vector PredictorHandle::call_checked(const Matrix& rows) const {
  Vector out = (*fn_)(rows);
  if (out.size() != rows.rows()) {
    fail(ErrorCode::kShape, "predictor returned " + std::to_string(out.size()) +
                                " values for " + std::to_string(rows.rows()) +
                                " rows");
  }
  return out;
}

Vector PredictorHandle::predict(const Matrix& rows) const {
  if (static_cast<std::size_t>(rows.cols()) != num_features_) {
    fail(ErrorCode::kShape, "predictor expects " + std::to_string(num_features_) +
                                " features, data has " +
                                std::to_string(rows.cols()));
  }
  const auto n = static_cast<std::size_t>(rows.rows());
  const std::size_t workers = std::min(threads_, n);
  if (workers <= 1) return call_checked(rows);

  Vector out(rows.rows());
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = n * w / workers;
      const std::size_t end = n * (w + 1) / workers;
      pool.emplace_back([&, w, begin, end] {
        try {
          const auto b = static_cast<Eigen::Index>(begin);
          const auto len = static_cast<Eigen::Index>(end - begin);
          Matrix block = rows.middleRows(b, len);
          out.segment(b, len) = call_checked(block);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

double PredictorHandle::predict_row(std::span<const double> row) const {
  Matrix m(1, static_cast<Eigen::Index>(row.size()));
  for (std::size_t j = 0; j < row.size(); ++j) {
    m(0, static_cast<Eigen::Index>(j)) = row[j];
  }
  return predict(m)(0);
}

std::uint64_t hash_matrix(const Matrix& m) noexcept {
  // FNV-1a over dimensions and value bits.
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](std::uint64_t word) {
    for (int b = 0; b < 8; ++b) {
      h ^= (word >> (8 * b)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(m.rows()));
  mix(static_cast<std::uint64_t>(m.cols()));
  const double* data = m.data();
  for (Eigen::Index k = 0; k < m.size(); ++k) {
    mix(std::bit_cast<std::uint64_t>(data[k]));
  }
  return h;
}

CachedPredictor::CachedPredictor(const PredictorHandle& predictor)
    : predictor_(predictor) {}

namespace {

bool same_bits(const Matrix& a, const Matrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         std::memcmp(a.data(), b.data(),
                     static_cast<std::size_t>(a.size()) * sizeof(double)) == 0;
}

}  // namespace

Vector CachedPredictor::predict(const Matrix& rows, StageTrace* trace) {
  const std::uint64_t key = hash_matrix(rows);
  auto& bucket = entries_[key];
  for (const auto& e : bucket) {
    if (same_bits(e.input, rows)) {
      ++hits_;
      if (trace) trace->tally(Stage::kPrediction, "cache_hits", 1);
      return e.output;
    }
  }
  Vector out = predictor_.predict(rows);
  ++misses_;
  if (trace) {
    trace->tally(Stage::kPrediction, "batches", 1);
    trace->tally(Stage::kPrediction, "rows_predicted", rows.rows());
  }
  bucket.push_back(Entry{rows, out});
  return out;
}

}  // namespace sipa
