#include "arccount/twisted.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <thread>

#include "arccount/census.hpp"
#include "arccount/gf.hpp"
#include "arccount/plane.hpp"

namespace arccount {

PrimePower factor_prime_power(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
    for (std::uint64_t p = 2; p * p <= q; ++p) {
        if (q % p) continue;
        std::uint32_t m = 0;
        std::uint64_t r = q;
        while (r % p == 0) {
            r /= p;
            ++m;
        }
        if (r != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
        return {p, m};
    }
    return {q, 1};  // q itself prime
}

std::uint64_t pgl3_order(std::uint64_t q) {
    return q * q * q * (q * q * q - 1) * (q * q - 1);
}

QPoly pgl3_order_poly() {
    QPoly q = QPoly::variable();
    return q.pow(3) * (q.pow(3) - 1) * (q * q - 1);
}

std::uint64_t estimate_tuples(std::uint32_t n, const CycleType& c, std::uint64_t q) {
    if (c.n() != n) throw std::invalid_argument("cycle type does not match n");
    mpz_class est(1);
    for (std::uint32_t k : c.parts()) {
        QPoly pool = (k >= 3) ? generic_count(k) : exact_degree_count(Space::P2, k);
        est *= pool.eval_int(q);
    }
    if (est > mpz_class("18446744073709551615")) return ~std::uint64_t(0);  // saturate
    return est.get_ui();
}

namespace {

struct FixedLines {
    // Accumulated joins of all placed points; C(6,2) = 15 at most.
    ProjLine l[15];
    int count = 0;
};

// Backtracking state for one worker.  Points and lines grow and shrink in
// stack discipline; all cross-orbit collinearity is tested incrementally:
// a new orbit is rejected if any member lies on a stored line (new point on
// a line through two old points) or any join of two new members passes
// through an old point.  Orbit-internal triples are filtered once, when the
// candidate pool is built.
struct Worker {
    const GaloisField* gf = nullptr;
    ProjPoint pts[6];
    int npts = 0;
    FixedLines lines;
    std::uint64_t leaves = 0;

    bool try_place(const ProjPoint* orbit, int s) {
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < npts; ++j)
                if (orbit[i] == pts[j]) return false;
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < lines.count; ++j)
                if (incident(*gf, orbit[i], lines.l[j])) return false;
        ProjLine fresh[15];
        int nfresh = 0;
        for (int i = 0; i < s; ++i)
            for (int j = i + 1; j < s; ++j) {
                ProjLine l = join(*gf, orbit[i], orbit[j]);
                for (int k = 0; k < npts; ++k)
                    if (incident(*gf, pts[k], l)) return false;
                fresh[nfresh++] = l;
            }
        for (int i = 0; i < s; ++i)
            for (int k = 0; k < npts; ++k) fresh[nfresh++] = join(*gf, orbit[i], pts[k]);
        for (int i = 0; i < nfresh; ++i) lines.l[lines.count++] = fresh[i];
        for (int i = 0; i < s; ++i) pts[npts++] = orbit[i];
        return true;
    }

    void unplace(int s, int saved_lines) {
        npts -= s;
        lines.count = saved_lines;
    }
};

// A candidate: one orbit, stored expanded.
struct Candidate {
    ProjPoint orbit[6];
};

// True when no three points of the orbit are collinear (vacuous for s < 3).
bool orbit_self_clear(const GaloisField& gf, const ProjPoint* o, int s) {
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j)
            for (int k = j + 1; k < s; ++k)
                if (collinear(gf, o[i], o[j], o[k])) return false;
    return true;
}

struct Plan {
    const GaloisField* gf;
    std::vector<std::uint32_t> parts;              // enumeration order
    std::vector<std::vector<Candidate>> pools;     // per level >= 1
    bool reverse = false;
};

void expand_orbit(const GaloisField& gf, const ProjPoint& p, std::uint32_t k, Candidate& c) {
    c.orbit[0] = p;
    for (std::uint32_t i = 1; i < k; ++i) c.orbit[i] = point_frobenius(gf, c.orbit[i - 1]);
}

// Candidates of exact degree k with no internal collinear triple, in
// deterministic handle order.
std::vector<Candidate> build_pool(const GaloisField& gf, std::uint32_t k, bool reverse) {
    std::vector<Candidate> pool;
    Candidate c;
    for_each_subplane_point(gf, k, [&](const ProjPoint& p) {
        if (point_degree(gf, p) != k) return;
        expand_orbit(gf, p, k, c);
        if (orbit_self_clear(gf, c.orbit, int(k))) pool.push_back(c);
    });
    if (reverse) std::reverse(pool.begin(), pool.end());
    return pool;
}

void recurse(const Plan& plan, Worker& w, std::size_t level) {
    if (level == plan.parts.size()) {
        ++w.leaves;
        return;
    }
    const std::uint32_t k = plan.parts[level];
    for (const Candidate& c : plan.pools[level]) {
        int saved = w.lines.count;
        if (w.try_place(c.orbit, int(k))) {
            recurse(plan, w, level + 1);
            w.unplace(int(k), saved);
        }
    }
}

// Level 0 streams the subplane points directly (the largest pool is never
// materialized); workers claim chunks of the flattened index space.
std::uint64_t run_level0(const Plan& plan, int jobs) {
    const GaloisField& gf = *plan.gf;
    const std::uint32_t k0 = plan.parts[0];
    const std::vector<GFElem> sub = gf.subfield(k0);
    const std::uint64_t side = sub.size();
    const std::uint64_t domain = side * side + side + 1;

    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> total{0};
    const std::uint64_t chunk = std::max<std::uint64_t>(1, std::min<std::uint64_t>(4096, domain / (4 * std::max(jobs, 1)) + 1));

    auto work = [&] {
        Worker w;
        w.gf = &gf;
        Candidate c;
        for (;;) {
            std::uint64_t lo = next.fetch_add(chunk);
            if (lo >= domain) break;
            std::uint64_t hi = std::min(domain, lo + chunk);
            for (std::uint64_t idx = lo; idx < hi; ++idx) {
                std::uint64_t i = plan.reverse ? domain - 1 - idx : idx;
                ProjPoint p;
                if (i < side * side)
                    p = ProjPoint{1, sub[std::size_t(i / side)], sub[std::size_t(i % side)]};
                else if (i < side * side + side)
                    p = ProjPoint{0, 1, sub[std::size_t(i - side * side)]};
                else
                    p = ProjPoint{0, 0, 1};
                if (point_degree(gf, p) != k0) continue;
                expand_orbit(gf, p, k0, c);
                if (!orbit_self_clear(gf, c.orbit, int(k0))) continue;
                int saved = w.lines.count;
                if (w.try_place(c.orbit, int(k0))) {
                    recurse(plan, w, 1);
                    w.unplace(int(k0), saved);
                }
            }
        }
        total += w.leaves;
    };

    if (jobs <= 1) {
        work();
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t) threads.emplace_back(work);
        for (auto& t : threads) t.join();
    }
    return total.load();
}

}  // namespace

TwistedCount count_twisted(std::uint32_t n, const CycleType& c, std::uint64_t q,
                           const EnumerationOptions& opts) {
    if (c.n() != n) throw std::invalid_argument("cycle type does not match n");
    if (n < 1 || n > 6) throw std::invalid_argument("n must be 1..6");
    const std::uint64_t estimate = estimate_tuples(n, c, q);
    if (estimate > opts.budget) throw BudgetExceeded(estimate, opts.budget);

    const auto t0 = std::chrono::steady_clock::now();
    const PrimePower pp = factor_prime_power(q);

    Plan plan;
    plan.reverse = opts.reverse;
    if (opts.part_order.empty()) {
        plan.parts = c.parts();  // weakly decreasing: largest pool streamed at level 0
    } else {
        CycleType check(opts.part_order);
        if (!(check == c)) throw std::invalid_argument("part_order is not a permutation of the cycle type");
        plan.parts = opts.part_order;
    }

    const std::uint32_t L = std::accumulate(plan.parts.begin(), plan.parts.end(), 1u,
                                            [](std::uint32_t a, std::uint32_t b) { return std::lcm(a, b); });
    GaloisField gf(pp.p, pp.m * L, pp.m);
    plan.gf = &gf;

    plan.pools.resize(plan.parts.size());
    for (std::size_t lvl = 1; lvl < plan.parts.size(); ++lvl)
        plan.pools[lvl] = build_pool(gf, plan.parts[lvl], opts.reverse);

    const std::uint64_t raw = run_level0(plan, opts.jobs);

    TwistedCount out;
    out.n = n;
    out.q = q;
    out.cycle_type = c;
    out.raw_tuples = raw;
    const std::uint64_t cz = c.centralizer_order();
    if (raw % cz != 0)
        throw std::logic_error("tuple count " + std::to_string(raw) + " not divisible by centralizer " + std::to_string(cz));
    out.count = raw / cz;
    out.method = "brute";
    out.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

std::uint64_t frame_fixed_count(std::uint32_t n, std::uint64_t q) {
    if (n < 4 || n > 6) throw std::invalid_argument("frame counts cover n = 4, 5, 6");
    const PrimePower pp = factor_prime_power(q);
    GaloisField gf(pp.p, pp.m, pp.m);

    const ProjPoint frame[4] = {ProjPoint{1, 0, 0}, ProjPoint{0, 1, 0}, ProjPoint{0, 0, 1}, ProjPoint{1, 1, 1}};
    ProjLine base[6];
    int nb = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) base[nb++] = join(gf, frame[i], frame[j]);
    if (n == 4) return 1;

    std::vector<ProjPoint> plane;
    for_each_subplane_point(gf, 1, [&](const ProjPoint& p) { plane.push_back(p); });

    std::uint64_t total = 0;
    for (const ProjPoint& a : plane) {
        bool ok = true;
        for (int i = 0; i < 6 && ok; ++i) ok = !incident(gf, a, base[i]);
        if (!ok) continue;
        if (n == 5) {
            ++total;
            continue;
        }
        ProjLine ext[10];
        for (int i = 0; i < 6; ++i) ext[i] = base[i];
        for (int i = 0; i < 4; ++i) ext[6 + i] = join(gf, a, frame[i]);
        for (const ProjPoint& b : plane) {
            if (b == a) continue;
            bool good = true;
            for (int i = 0; i < 10 && good; ++i) good = !incident(gf, b, ext[i]);
            total += good;
        }
    }
    return total;
}

TwistedCount count_identity_via_frames(std::uint32_t n, std::uint64_t q) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t frames = frame_fixed_count(n, q);
    const std::uint64_t raw = pgl3_order(q) * frames;  // ordered noncollinear n-tuples
    TwistedCount out;
    out.n = n;
    out.q = q;
    out.cycle_type = CycleType::identity(n);
    out.raw_tuples = raw;
    const std::uint64_t nf = factorial(n);
    if (raw % nf != 0) throw std::logic_error("ordered tuple count not divisible by n!");
    out.count = raw / nf;
    out.method = "frame_fixed_brute";
    out.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

QPoly frame_count_poly(std::uint32_t n) {
    QPoly x5 = QPoly::of({6, -5, 1});
    if (n == 5) return x5;
    if (n == 6) return x5 * QPoly::of({21, -9, 1});
    throw std::invalid_argument("closed frame counts cover n = 5, 6");
}

}  // namespace arccount
