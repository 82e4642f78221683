#include "dircut/generator.hpp"

#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace dircut {

namespace {

// Uniform integer in [0, bound) by rejection, so the byte stream drawn from
// the engine maps to values the same way everywhere.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

int draw_range(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

// First `count` entries of a shuffled [0, total) via partial Fisher-Yates.
std::vector<int> sample_distinct(std::mt19937_64& rng, int total, int count) {
    std::vector<int> pool(static_cast<size_t>(total));
    for (int i = 0; i < total; ++i) pool[static_cast<size_t>(i)] = i;
    for (int i = 0; i < count; ++i) {
        int j = draw_range(rng, i, total - 1);
        std::swap(pool[static_cast<size_t>(i)], pool[static_cast<size_t>(j)]);
    }
    pool.resize(static_cast<size_t>(count));
    return pool;
}

void validate(const GenConfig& c) {
    if (c.n < 2) throw std::invalid_argument("need at least 2 vertices");
    const long long slots = static_cast<long long>(c.n) * (c.n - 1);
    if (c.m < 0 || c.m > slots)
        throw std::invalid_argument("m exceeds the " + std::to_string(slots) +
                                    " available edge slots");
    if (c.k < 1) throw std::invalid_argument("need at least one group/pair");
    if (c.wmin < 1 || c.wmax < c.wmin) throw std::invalid_argument("bad weight range");
    if (c.kind == ProblemKind::MultiMultiway) {
        if (c.gmin < 2 || c.gmax < c.gmin) throw std::invalid_argument("bad group size range");
        if (c.gmax > c.n) throw std::invalid_argument("group size exceeds vertex count");
    }
}

}  // namespace

std::string generate_text(const GenConfig& c) {
    validate(c);
    std::mt19937_64 rng(c.seed);
    std::ostringstream os;
    os << "# gen seed=" << c.seed << " n=" << c.n << " m=" << c.m << " k=" << c.k
       << " kind=" << kind_name(c.kind) << " w=" << c.wmin << ".." << c.wmax;
    if (c.kind == ProblemKind::MultiMultiway) os << " g=" << c.gmin << ".." << c.gmax;
    os << '\n';
    os << "p " << kind_name(c.kind) << ' ' << c.n << ' ' << c.m << ' ' << c.k << '\n';

    // Ordered non-self-loop slots: slot -> (u, v) with v skipping u.
    const int slots = c.n * (c.n - 1);
    for (int slot : sample_distinct(rng, slots, c.m)) {
        int u = slot / (c.n - 1);
        int rem = slot % (c.n - 1);
        int v = rem < u ? rem : rem + 1;
        os << "e " << u << ' ' << v << ' ' << draw_range(rng, c.wmin, c.wmax) << '\n';
    }

    for (int i = 0; i < c.k; ++i) {
        if (c.kind == ProblemKind::MultiMultiway) {
            int size = draw_range(rng, c.gmin, c.gmax);
            os << 'g';
            for (int v : sample_distinct(rng, c.n, size)) os << ' ' << v;
            os << '\n';
        } else {
            auto pair = sample_distinct(rng, c.n, 2);
            os << "t " << pair[0] << ' ' << pair[1] << '\n';
        }
    }
    return os.str();
}

Instance generate(const GenConfig& c) { return parse_instance(generate_text(c)); }

}  // namespace dircut
