#include "fiberres/star.hpp"

#include "fiberres/formulas.hpp"

namespace fiberres {

namespace {

void check_augmented(const ChainComplex& C, const char* name)
{
    if (C.is_zero() || C.min_degree() != 0 || C.rank(0) != 1 || C.module(0).twist(0) != 0)
        throw ComplexError(std::string(name) + " must have R in degree 0 and nothing below");
}

} // namespace

std::size_t star_index(const ChainComplex& X, const ChainComplex& Y, int i, int j, std::size_t a,
                       std::size_t b)
{
    auto idx = TensorLayout(X, Y, i + j, 1, 1).index(i, a, b);
    if (!idx || a >= X.rank(i) || b >= Y.rank(j))
        throw ComplexError("star basis element out of range");
    return *idx;
}

ChainComplex star_product(const ChainComplex& X, const ChainComplex& Y)
{
    if (!(X.ring() == Y.ring()))
        throw RingMismatch();
    check_augmented(X, "left factor");
    check_augmented(Y, "right factor");
    const RingSpec& ring = X.ring();

    std::map<int, GradedFreeModule> mods;
    std::map<int, PolyMatrix> diffs;
    mods.emplace(0, GradedFreeModule::from_multidegrees({Monomial::one(ring.nvars())}));
    const int top = X.max_degree() + Y.max_degree() - 1;
    for (int n = 1; n <= top; ++n) {
        GradedFreeModule M;
        const TensorLayout layout(X, Y, n + 1, 1, 1);
        for (const auto& blk : layout.blocks())
            M = GradedFreeModule::direct_sum(
                M, GradedFreeModule::tensor(X.module(blk.left_degree), Y.module(blk.right_degree)));
        mods.emplace(n, std::move(M));
    }

    for (int n = 1; n <= top; ++n) {
        TensorLayout src(X, Y, n + 1, 1, 1);
        TensorLayout tgt(X, Y, n, 1, 1);
        PolyMatrix d(n == 1 ? 1 : tgt.size(), src.size());
        for (const auto& blk : src.blocks()) {
            const int i = blk.left_degree, j = blk.right_degree;
            const PolyMatrix& dX = X.differential(i);
            const PolyMatrix& dY = Y.differential(j);
            for (std::size_t a = 0; a < blk.left_rank; ++a)
                for (std::size_t b = 0; b < blk.right_rank; ++b) {
                    const std::size_t col = blk.offset + a * blk.right_rank + b;
                    if (i == 1 && j == 1) {
                        d(0, col) = dX(0, a) * dY(0, b);
                        continue;
                    }
                    if (i > 1)
                        for (std::size_t r = 0; r < dX.rows(); ++r)
                            if (!dX(r, a).is_zero())
                                d(*tgt.index(i - 1, r, b), col) += dX(r, a);
                    if (j > 1)
                        for (std::size_t s = 0; s < dY.rows(); ++s)
                            if (!dY(s, b).is_zero())
                                d(*tgt.index(i, a, s), col) += i % 2 == 0 ? dY(s, b) : -dY(s, b);
                }
        }
        diffs.emplace(n, std::move(d));
    }
    return ChainComplex(ring, std::move(mods), std::move(diffs));
}

bool star_betti_check(const ChainComplex& X, const ChainComplex& Y)
{
    if (!is_minimal(X) || !is_minimal(Y))
        throw ComplexError("star_betti_check needs minimal inputs");
    ChainComplex P = star_product(X, Y);
    BettiTable built = generator_table(P);
    BettiTable gx = graded_betti(X), gy = graded_betti(Y);
    for (int l = 1; l <= P.max_degree(); ++l)
        if (built.total(l) != betti_product(gx, gy, l))
            return false;
    return built == star_betti_formula(gx, gy);
}

} // namespace fiberres
