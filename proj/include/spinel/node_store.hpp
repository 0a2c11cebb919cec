#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

namespace spinel::detail {

// Append-only chunked storage with stable addresses and lock-free reads.
// Appends must be externally serialized (the owning bank holds a write lock);
// readers never take a lock. Every element access bumps a visit counter so
// tests can assert how many nodes an operation actually touched.
template <class T>
class NodeStore {
  static constexpr std::uint32_t kBlockBits = 12;
  static constexpr std::uint32_t kBlockSize = 1u << kBlockBits;
  static constexpr std::uint32_t kBlockMask = kBlockSize - 1;
  static constexpr std::uint32_t kMaxBlocks = 1u << 16;

 public:
  NodeStore() {
    for (auto& b : blocks_) b.store(nullptr, std::memory_order_relaxed);
  }
  NodeStore(const NodeStore&) = delete;
  NodeStore& operator=(const NodeStore&) = delete;
  ~NodeStore() {
    for (auto& b : blocks_) delete[] b.load(std::memory_order_relaxed);
  }

  const T& operator[](std::uint32_t i) const {
    visits_.fetch_add(1, std::memory_order_relaxed);
    return blocks_[i >> kBlockBits].load(std::memory_order_acquire)[i & kBlockMask];
  }

  // Caller must hold the owning bank's write lock.
  std::uint32_t append(T value) {
    std::uint32_t i = count_.load(std::memory_order_relaxed);
    std::uint32_t blk = i >> kBlockBits;
    if (blocks_[blk].load(std::memory_order_relaxed) == nullptr)
      blocks_[blk].store(new T[kBlockSize], std::memory_order_release);
    blocks_[blk].load(std::memory_order_relaxed)[i & kBlockMask] = std::move(value);
    count_.store(i + 1, std::memory_order_release);
    return i;
  }

  std::uint32_t size() const { return count_.load(std::memory_order_acquire); }

  std::uint64_t visits() const { return visits_.load(std::memory_order_relaxed); }
  void resetVisits() const { visits_.store(0, std::memory_order_relaxed); }

 private:
  std::array<std::atomic<T*>, kMaxBlocks> blocks_;
  std::atomic<std::uint32_t> count_{0};
  mutable std::atomic<std::uint64_t> visits_{0};
};

// FNV-1a over a word sequence; used as the structural key hash of the banks.
struct WordsHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint64_t w : v) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace spinel::detail
