#pragma once

// Worker pool helpers and the counter-based random stream used by every
// sampled scan. All helpers return results that do not depend on how the
// index space was partitioned.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace bracelab {

/// Number of workers for parallel scans. Reads BRACELAB_THREADS (0 = auto).
unsigned worker_count();

/// Override the worker count for the current process (0 restores the
/// environment / hardware default).
void set_worker_count(unsigned n);

namespace detail {
/// Set on pool threads; nested scans run serially on the calling worker.
inline bool& inside_pool()
{
	thread_local bool flag = false;
	return flag;
}
} // namespace detail

/// Runs fn(begin, end) over consecutive chunks of [0, n) and returns one
/// result per chunk, in chunk order. The first exception thrown by a chunk is
/// rethrown after all workers have stopped.
template <class Result, class Fn>
std::vector<Result> map_chunks(std::uint64_t n, std::uint64_t chunk, Fn&& fn)
{
	if (chunk == 0)
		chunk = 1;
	std::uint64_t const chunks = (n + chunk - 1) / chunk;
	std::vector<Result> out(chunks);
	unsigned const workers = detail::inside_pool()
	                             ? 1u
	                             : static_cast<unsigned>(std::min<std::uint64_t>(worker_count(), chunks));
	if (workers <= 1)
	{
		for (std::uint64_t i = 0; i < chunks; ++i)
			out[i] = fn(i * chunk, std::min(n, (i + 1) * chunk));
		return out;
	}
	std::atomic<std::uint64_t> next{0};
	std::exception_ptr error;
	std::mutex error_lock;
	auto work = [&] {
		bool const was_inside = std::exchange(detail::inside_pool(), true);
		try
		{
			for (;;)
			{
				std::uint64_t const i = next.fetch_add(1);
				if (i >= chunks)
					break;
				out[i] = fn(i * chunk, std::min(n, (i + 1) * chunk));
			}
		}
		catch (...)
		{
			next = chunks;
			std::lock_guard lock(error_lock);
			if (!error)
				error = std::current_exception();
		}
		detail::inside_pool() = was_inside;
	};
	{
		std::vector<std::jthread> pool;
		pool.reserve(workers - 1);
		for (unsigned w = 1; w < workers; ++w)
			pool.emplace_back(work);
		work();
	}
	if (error)
		std::rethrow_exception(error);
	return out;
}

/// Smallest i in [0, n) with pred(i), or nullopt.
template <class Pred>
std::optional<std::uint64_t> find_first(std::uint64_t n, Pred&& pred,
                                        std::uint64_t chunk = 256)
{
	constexpr auto none = std::numeric_limits<std::uint64_t>::max();
	std::atomic<std::uint64_t> best{none};
	map_chunks<char>(n, chunk, [&](std::uint64_t lo, std::uint64_t hi) {
		for (std::uint64_t i = lo; i < hi; ++i)
		{
			if (i >= best.load(std::memory_order_relaxed))
				return char{};
			if (pred(i))
			{
				std::uint64_t cur = best.load();
				while (i < cur && !best.compare_exchange_weak(cur, i))
				{
				}
				return char{};
			}
		}
		return char{};
	});
	if (best.load() == none)
		return std::nullopt;
	return best.load();
}

inline std::uint64_t splitmix64(std::uint64_t x)
{
	x += 0x9e3779b97f4a7c15ULL;
	x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
	x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
	return x ^ (x >> 31);
}

/// Counter-based generator: draw(i, lane, bound) depends only on the seed and
/// its arguments, so sampled tuple streams are reproducible under any
/// partitioning of the sample index space.
class SeededStream
{
  public:
	explicit SeededStream(std::uint64_t seed) : seed_(seed) {}

	std::uint64_t seed() const { return seed_; }

	std::uint64_t word(std::uint64_t index, std::uint64_t lane) const
	{
		return splitmix64(seed_ ^ splitmix64(index * 0x100000001b3ULL + lane));
	}

	/// Uniform value in [0, bound) by rejection.
	std::uint64_t draw(std::uint64_t index, std::uint64_t lane,
	                   std::uint64_t bound) const
	{
		if (bound <= 1)
			return 0;
		std::uint64_t const limit =
		    std::numeric_limits<std::uint64_t>::max() -
		    std::numeric_limits<std::uint64_t>::max() % bound;
		for (std::uint64_t attempt = 0;; ++attempt)
		{
			std::uint64_t const w = word(index, lane + (attempt << 32));
			if (w < limit)
				return w % bound;
		}
	}

  private:
	std::uint64_t seed_;
};

} // namespace bracelab
