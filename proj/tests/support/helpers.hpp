#pragma once

#include <random>
#include <string>
#include <vector>

#include "fiberres/fiber.hpp"
#include "fiberres/resolutions.hpp"
#include "oracles.hpp"

namespace testing_support {

using namespace fiberres;

inline std::vector<oracle::Exps> exps_of(const MonomialIdeal& I)
{
    std::vector<oracle::Exps> out;
    for (const auto& g : I.generators())
        out.push_back(g.exponents());
    return out;
}

inline MonomialIdeal ideal_of(const RingSpec& R, const std::vector<oracle::Exps>& gens)
{
    std::vector<Monomial> ms;
    for (const auto& e : gens)
        ms.emplace_back(e);
    return MonomialIdeal(R, ms);
}

inline oracle::Table table_of(const BettiTable& t)
{
    oracle::Table out;
    for (const auto& [lk, n] : t.graded_entries())
        if (n != 0)
            out[lk] = n;
    return out;
}

inline std::vector<std::int64_t> to_i64(const std::vector<std::size_t>& v)
{
    return {v.begin(), v.end()};
}

inline RingSpec block_ring(int m, int n, Field k = Field{})
{
    std::vector<std::string> a, b;
    for (int i = 1; i <= m; ++i)
        a.push_back("x" + std::to_string(i));
    for (int i = 1; i <= n; ++i)
        b.push_back("y" + std::to_string(i));
    return RingSpec::with_blocks(a, b, k);
}

struct RandomInstance {
    int m = 0, n = 0;
    FiberInstance inst;
    std::vector<oracle::Exps> ip, jp;
};

/// m, n in 1..3; I', J' inside the squares of the block ideals with at most
/// four generators of degree at most four.
inline RandomInstance random_instance(std::mt19937& rng, int max_block = 3, int max_gens = 4, int max_deg = 4)
{
    std::uniform_int_distribution<int> bs(1, max_block);
    RandomInstance r;
    r.m = bs(rng);
    r.n = bs(rng);
    RingSpec R = block_ring(r.m, r.n);
    r.ip = oracle::random_square_ideal(rng, R.nvars(), R.block_a_indices(), max_gens, max_deg);
    r.jp = oracle::random_square_ideal(rng, R.nvars(), R.block_b_indices(), max_gens, max_deg);
    r.inst = FiberInstance::from_blocks(ideal_of(R, r.ip), ideal_of(R, r.jp));
    return r;
}

} // namespace testing_support
