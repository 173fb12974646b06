#pragma once

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace hookcc {

inline unsigned hardware_workers() {
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

/// Fork-join pool for phase-structured drivers. `for_range` blocks until the
/// whole range is processed, so returning from it is a full barrier: all
/// writes made inside the phase are visible to the caller and to the next
/// phase. Chunks are handed out through an atomic cursor, so workers claim
/// them in ascending index order.
class ThreadPool {
 public:
  using Body = std::function<void(std::uint64_t begin, std::uint64_t end,
                                  unsigned worker)>;

  explicit ThreadPool(unsigned workers) : nworkers_(workers == 0 ? 1 : workers) {
    if (nworkers_ == 1) return;  // single-worker phases run inline
    threads_.reserve(nworkers_);
    for (unsigned w = 0; w < nworkers_; ++w)
      threads_.emplace_back([this, w] { worker_loop(w); });
  }

  ThreadPool(const ThreadPool&) = delete;
  ThreadPool& operator=(const ThreadPool&) = delete;

  ~ThreadPool() {
    if (nworkers_ == 1) return;
    {
      std::lock_guard<std::mutex> lk(mu_);
      stop_ = true;
    }
    cv_start_.notify_all();
    for (auto& t : threads_) t.join();
  }

  unsigned workers() const { return nworkers_; }

  void for_range(std::uint64_t begin, std::uint64_t end, const Body& body) {
    if (begin >= end) return;
    if (nworkers_ == 1) {
      body(begin, end, 0);
      return;
    }
    std::uint64_t range = end - begin;
    std::uint64_t chunk = std::max<std::uint64_t>(
        1, range / (static_cast<std::uint64_t>(nworkers_) * 8));

    {
      std::lock_guard<std::mutex> lk(mu_);
      begin_ = begin;
      end_ = end;
      chunk_ = chunk;
      body_ = &body;
      cursor_.store(begin, std::memory_order_relaxed);
      running_ = nworkers_;
      ++epoch_;
    }
    cv_start_.notify_all();

    std::unique_lock<std::mutex> lk(mu_);
    cv_done_.wait(lk, [this] { return running_ == 0; });
    body_ = nullptr;
  }

 private:
  void worker_loop(unsigned id) {
    std::uint64_t seen_epoch = 0;
    for (;;) {
      const Body* body;
      std::uint64_t end, chunk;
      {
        std::unique_lock<std::mutex> lk(mu_);
        cv_start_.wait(lk, [&] { return stop_ || epoch_ != seen_epoch; });
        if (stop_) return;
        seen_epoch = epoch_;
        body = body_;
        end = end_;
        chunk = chunk_;
      }
      for (;;) {
        std::uint64_t b = cursor_.fetch_add(chunk, std::memory_order_relaxed);
        if (b >= end) break;
        (*body)(b, std::min(b + chunk, end), id);
      }
      {
        std::lock_guard<std::mutex> lk(mu_);
        if (--running_ == 0) cv_done_.notify_one();
      }
    }
  }

  unsigned nworkers_;
  std::vector<std::thread> threads_;

  std::mutex mu_;
  std::condition_variable cv_start_;
  std::condition_variable cv_done_;
  bool stop_ = false;
  std::uint64_t epoch_ = 0;
  unsigned running_ = 0;
  std::uint64_t begin_ = 0, end_ = 0, chunk_ = 0;
  std::atomic<std::uint64_t> cursor_{0};
  const Body* body_ = nullptr;
};

}  // namespace hookcc
