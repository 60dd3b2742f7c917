#include "lextab/errors.hpp"

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

namespace lextab {

namespace {

int initial_degree_cap() {
    if (const char* env = std::getenv("LEXTAB_MAX_DEGREE")) {
        try {
            int v = std::stoi(env);
            if (v >= 0) return v;
        } catch (const std::exception&) {
            // fall through to the default
        }
    }
    return 12;
}

std::atomic<int>& degree_cap_storage() {
    static std::atomic<int> cap{initial_degree_cap()};
    return cap;
}

std::atomic<int> g_parallelism{1};

} // namespace

int degree_cap() { return degree_cap_storage().load(); }

void set_degree_cap(int cap) {
    if (cap < 0) throw std::domain_error("degree cap must be nonnegative");
    degree_cap_storage().store(cap);
}

void check_degree_cap(int n, const char* what) {
    if (n > degree_cap()) {
        throw size_limit_error(std::string(what) + ": degree " + std::to_string(n) +
                               " exceeds the configured cap " + std::to_string(degree_cap()));
    }
}

int parallelism() {
    int p = g_parallelism.load();
    if (p == 0) {
        unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : static_cast<int>(hw);
    }
    return p;
}

void set_parallelism(int threads) {
    if (threads < 0) throw std::domain_error("parallelism must be nonnegative");
    g_parallelism.store(threads);
}

} // namespace lextab
