#include "bracelab/parallel.hpp"

#include <cstdlib>
#include <string>

namespace bracelab {

namespace {

std::atomic<unsigned> override_count{0};

unsigned default_count()
{
	if (char const* env = std::getenv("BRACELAB_THREADS"))
	{
		try
		{
			unsigned long const v = std::stoul(env);
			if (v > 0)
				return static_cast<unsigned>(std::min<unsigned long>(v, 1024));
		}
		catch (std::exception const&)
		{
		}
	}
	return std::max(1u, std::thread::hardware_concurrency());
}

} // namespace

unsigned worker_count()
{
	if (unsigned const n = override_count.load())
		return n;
	static unsigned const fallback = default_count();
	return fallback;
}

void set_worker_count(unsigned n)
{
	override_count = n;
}

} // namespace bracelab
