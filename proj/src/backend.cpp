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

#include "hull3d/backend.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <utility>

namespace hull3d {

void SequentialBackend::run(std::size_t count, const std::function<void(std::size_t)>& job) {
  for (std::size_t id = 0; id < count; ++id) job(id);
}

void ReverseOrderBackend::run(std::size_t count, const std::function<void(std::size_t)>& job) {
  for (std::size_t id = count; id-- > 0;) job(id);
}

ThreadPoolBackend::ThreadPoolBackend(unsigned workers) : width_(workers == 0 ? 1 : workers) {
  threads_.reserve(width_ - 1);
  for (unsigned w = 1; w < width_; ++w) threads_.emplace_back([this] { worker_loop(); });
}

ThreadPoolBackend::~ThreadPoolBackend() {
  {
    std::lock_guard lock(mutex_);
    stop_ = true;
  }
  wake_.notify_all();
  for (auto& t : threads_) t.join();
}

// Claims and runs jobs of the current batch until none are left. The lock is
// released while a job runs.
void ThreadPoolBackend::drain(std::unique_lock<std::mutex>& lock) {
  while (next_ < count_) {
    const std::size_t id = next_++;
    const auto* job = job_;
    lock.unlock();
    std::exception_ptr err;
    try {
      (*job)(id);
    } catch (...) {
      err = std::current_exception();
    }
    lock.lock();
    if (err && !error_) error_ = err;
    if (++finished_ == count_) done_.notify_all();
  }
}

void ThreadPoolBackend::worker_loop() {
  std::size_t seen = 0;
  std::unique_lock lock(mutex_);
  for (;;) {
    wake_.wait(lock, [&] { return stop_ || generation_ != seen; });
    if (stop_) return;
    seen = generation_;
    drain(lock);
  }
}

void ThreadPoolBackend::run(std::size_t count, const std::function<void(std::size_t)>& job) {
  if (count == 0) return;
  if (threads_.empty() || count == 1) {
    SequentialBackend{}.run(count, job);
    return;
  }
  std::unique_lock lock(mutex_);
  job_ = &job;
  count_ = count;
  next_ = 0;
  finished_ = 0;
  error_ = nullptr;
  ++generation_;
  wake_.notify_all();
  drain(lock);
  done_.wait(lock, [&] { return finished_ == count_; });
  job_ = nullptr;
  if (error_) std::rethrow_exception(std::exchange(error_, nullptr));
}

std::unique_ptr<ExecutionBackend> make_backend(unsigned workers) {
  if (workers <= 1) return std::make_unique<SequentialBackend>();
  return std::make_unique<ThreadPoolBackend>(workers);
}

unsigned default_workers() {
  if (const char* env = std::getenv("HULL3D_WORKERS")) {
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), value);
    if (ec == std::errc() && *ptr == '\0' && value > 0) return value;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace hull3d
