// Copyright 2026 The hull3d Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <condition_variable>
#include <cstddef>
#include <exception>
#include <functional>
#include <memory>
#include <mutex>
#include <thread>
#include <vector>

namespace hull3d {

/// Runs a batch of independent jobs. `run` executes job(0) ... job(count - 1)
/// exactly once each, in no particular order, and returns once all have
/// finished. If any job throws, the first exception is rethrown after the
/// batch drains.
class ExecutionBackend {
 public:
  virtual ~ExecutionBackend() = default;
  virtual void run(std::size_t count, const std::function<void(std::size_t)>& job) = 0;
  virtual unsigned width() const noexcept = 0;
};

class SequentialBackend final : public ExecutionBackend {
 public:
  void run(std::size_t count, const std::function<void(std::size_t)>& job) override;
  unsigned width() const noexcept override { return 1; }
};

/// Runs jobs sequentially from the last id to the first. Used to show results
/// do not depend on job order.
class ReverseOrderBackend final : public ExecutionBackend {
 public:
  void run(std::size_t count, const std::function<void(std::size_t)>& job) override;
  unsigned width() const noexcept override { return 1; }
};

/// Fixed pool of worker threads. The calling thread takes part in every batch,
/// so a pool of width w owns w - 1 threads.
class ThreadPoolBackend final : public ExecutionBackend {
 public:
  explicit ThreadPoolBackend(unsigned workers);
  ~ThreadPoolBackend() override;

  ThreadPoolBackend(const ThreadPoolBackend&) = delete;
  ThreadPoolBackend& operator=(const ThreadPoolBackend&) = delete;

  void run(std::size_t count, const std::function<void(std::size_t)>& job) override;
  unsigned width() const noexcept override { return width_; }

 private:
  void worker_loop();
  void drain(std::unique_lock<std::mutex>& lock);

  unsigned width_;
  std::vector<std::thread> threads_;
  std::mutex mutex_;
  std::condition_variable wake_;
  std::condition_variable done_;
  const std::function<void(std::size_t)>* job_ = nullptr;
  std::size_t count_ = 0;
  std::size_t next_ = 0;
  std::size_t finished_ = 0;
  std::size_t generation_ = 0;
  std::exception_ptr error_;
  bool stop_ = false;
};

/// Sequential backend for one worker, thread pool otherwise.
std::unique_ptr<ExecutionBackend> make_backend(unsigned workers);

/// Worker count from HULL3D_WORKERS, or the hardware concurrency when unset
/// or malformed.
unsigned default_workers();

}  // namespace hull3d
