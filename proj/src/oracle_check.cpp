#include "boundrep/oracle_check.hpp"

#include "boundrep/solve.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <string>
#include <thread>

namespace boundrep {

int worker_count(int requested) {
    int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    n = std::max(n, 1);
    if (const char* env = std::getenv("BOUNDREP_THREADS")) {
        try {
            const int cap = std::stoi(env);
            if (cap > 0) n = std::min(n, cap);
        } catch (const std::exception&) {
            // ignore garbage, like an unset variable
        }
    }
    return n;
}

namespace {

bool agrees(const Instance& inst, bool expected, bool inject_bug) {
    SolveResult got;
    if (inject_bug && inst.n() > 0) {
        Instance weakened = inst;
        weakened.bounds.back() = BoundPair{};
        got = solve(weakened);
    } else {
        got = solve(inst);
    }
    if (got.sat() != expected) return false;
    return !got.sat() || check_representation(inst, *got.representation).ok();
}

} // namespace

OracleCheckReport oracle_check(const OracleCheckOptions& opt) {
    const std::vector<Instance> all = enumerate_small_instances(opt.seed, opt.counts, opt.cls);
    OracleCheckReport report;
    report.checked = all.size();

    std::atomic<std::size_t> next{0}, sat{0}, bad{0};
    std::size_t first = all.size();
    std::mutex m;
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < all.size();) {
            const bool expected = brute_force_solve(all[i]).sat;
            if (expected) ++sat;
            if (!agrees(all[i], expected, opt.inject_bug)) {
                ++bad;
                std::lock_guard lock(m);
                first = std::min(first, i);
            }
        }
    };
    const int workers = std::min<int>(worker_count(opt.threads), static_cast<int>(std::max<std::size_t>(all.size(), 1)));
    std::vector<std::thread> pool;
    for (int t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    report.sat = sat;
    report.mismatches = bad;
    if (first < all.size()) report.first_counterexample = all[first];
    return report;
}

} // namespace boundrep
