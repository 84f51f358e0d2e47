#include "graphtda/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace graphtda {

namespace {
int default_threads = -1;
int current_limit = 0;
} // namespace

void set_thread_limit(int threads)
{
    if (threads < 0)
        throw std::invalid_argument("thread limit must be >= 0");
    if (default_threads < 0)
        default_threads = omp_get_max_threads();
    current_limit = threads;
    omp_set_num_threads(threads > 0 ? threads : default_threads);
}

int thread_limit() { return current_limit; }

int apply_thread_env()
{
    char const* env = std::getenv("GRAPHTDA_THREADS");
    if (env == nullptr || *env == '\0')
        return 0;
    int n = 0;
    try {
        n = std::stoi(env);
    } catch (std::exception const&) {
        throw std::invalid_argument(std::string("GRAPHTDA_THREADS is not an integer: ") + env);
    }
    set_thread_limit(n);
    return n;
}

} // namespace graphtda
