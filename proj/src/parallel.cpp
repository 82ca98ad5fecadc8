#include "cuspidor/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace cuspidor {

std::size_t thread_count() {
	if (const char* env = std::getenv("CUSPIDOR_THREADS")) {
		try {
			long v = std::stol(env);
			if (v >= 1)
				return static_cast<std::size_t>(v);
		} catch (const std::exception&) {
		}
	}
	return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
	std::size_t width = std::min(thread_count(), n);
	if (width <= 1) {
		for (std::size_t i = 0; i < n; ++i)
			body(i);
		return;
	}
	std::atomic<std::size_t> next{0};
	std::atomic<bool> failed{false};
	std::exception_ptr first;
	std::mutex mu;
	auto worker = [&] {
		for (;;) {
			std::size_t i = next++;
			if (i >= n || failed)
				return;
			try {
				body(i);
			} catch (...) {
				std::lock_guard<std::mutex> lock(mu);
				if (!first)
					first = std::current_exception();
				failed = true;
			}
		}
	};
	std::vector<std::thread> pool;
	for (std::size_t k = 0; k < width; ++k)
		pool.emplace_back(worker);
	for (auto& th : pool)
		th.join();
	if (first)
		std::rethrow_exception(first);
}

} // namespace cuspidor
