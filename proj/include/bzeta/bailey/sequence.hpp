#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace bzeta::bailey {

/// Memoized generator n -> E. Copies share one memo table; lookups and
/// insertions are serialized by an internal mutex, while the generator
/// itself runs unlocked so recursive sequences can evaluate lower terms.
template <typename E>
class Sequence {
 public:
  using Generator = std::function<E(std::size_t)>;

  Sequence() = default;
  explicit Sequence(Generator generator)
      : state_(std::make_shared<State>(std::move(generator))) {}

  bool valid() const { return state_ != nullptr; }

  E operator()(std::size_t n) const {
    {
      std::lock_guard lock(state_->mutex);
      if (auto it = state_->memo.find(n); it != state_->memo.end()) return it->second;
    }
    E value = state_->generator(n);
    std::lock_guard lock(state_->mutex);
    return state_->memo.try_emplace(n, std::move(value)).first->second;
  }

 private:
  struct State {
    explicit State(Generator g) : generator(std::move(g)) {}
    Generator generator;
    std::mutex mutex;
    std::map<std::size_t, E> memo;
  };
  std::shared_ptr<State> state_;
};

}  // namespace bzeta::bailey
