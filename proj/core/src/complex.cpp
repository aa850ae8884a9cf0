#include "fiberres/complex.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace fiberres {

namespace {

const GradedFreeModule kZeroModule{};

std::string deg_str(int n) { return std::to_string(n); }

bool odd(int n) { return (n % 2) != 0; }

void check_entry_degrees(const PolyMatrix& m, const GradedFreeModule& rows,
                         const GradedFreeModule& cols, int shift, const std::string& what)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Polynomial& p = m(i, j);
            if (p.is_zero())
                continue;
            auto d = p.homogeneous_degree();
            if (!d || *d != cols.twist(j) - rows.twist(i) + shift)
                throw ComplexError(what + ": entry (" + std::to_string(i) + "," + std::to_string(j) +
                                   ") has the wrong internal degree");
        }
}

// Every entry is zero or c * (mdeg_col / mdeg_row).
bool entries_match_multidegrees(const PolyMatrix& m, const GradedFreeModule& rows,
                                const GradedFreeModule& cols)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Polynomial& p = m(i, j);
            if (p.is_zero())
                continue;
            const Monomial& r = rows.multidegrees()[i];
            const Monomial& c = cols.multidegrees()[j];
            if (!p.is_term() || !r.divides(c) || !(p.terms()[0].mono == c / r))
                return false;
        }
    return true;
}

} // namespace

GradedFreeModule::GradedFreeModule(std::vector<int> twists) : twists_(std::move(twists)) {}

GradedFreeModule::GradedFreeModule(std::vector<int> twists, std::vector<Monomial> multidegrees)
    : twists_(std::move(twists))
{
    if (multidegrees.size() != twists_.size())
        throw ComplexError("multidegree count differs from rank");
    for (std::size_t i = 0; i < twists_.size(); ++i)
        if (multidegrees[i].degree() != twists_[i])
            throw ComplexError("multidegree does not match twist");
    mdeg_ = std::move(multidegrees);
}

GradedFreeModule GradedFreeModule::from_multidegrees(std::vector<Monomial> multidegrees)
{
    std::vector<int> tw;
    tw.reserve(multidegrees.size());
    for (const auto& m : multidegrees)
        tw.push_back(m.degree());
    return GradedFreeModule(std::move(tw), std::move(multidegrees));
}

GradedFreeModule GradedFreeModule::direct_sum(const GradedFreeModule& a, const GradedFreeModule& b)
{
    std::vector<int> tw = a.twists_;
    tw.insert(tw.end(), b.twists_.begin(), b.twists_.end());
    bool fine = (a.mdeg_ || a.is_zero()) && (b.mdeg_ || b.is_zero()) && (a.mdeg_ || b.mdeg_);
    if (!fine)
        return GradedFreeModule(std::move(tw));
    std::vector<Monomial> md;
    if (a.mdeg_)
        md = *a.mdeg_;
    if (b.mdeg_)
        md.insert(md.end(), b.mdeg_->begin(), b.mdeg_->end());
    return GradedFreeModule(std::move(tw), std::move(md));
}

GradedFreeModule GradedFreeModule::tensor(const GradedFreeModule& a, const GradedFreeModule& b)
{
    std::vector<int> tw;
    tw.reserve(a.rank() * b.rank());
    for (int s : a.twists_)
        for (int t : b.twists_)
            tw.push_back(s + t);
    if (!a.mdeg_ || !b.mdeg_)
        return GradedFreeModule(std::move(tw));
    std::vector<Monomial> md;
    md.reserve(tw.size());
    for (const auto& s : *a.mdeg_)
        for (const auto& t : *b.mdeg_)
            md.push_back(s * t);
    return GradedFreeModule(std::move(tw), std::move(md));
}

ChainComplex::ChainComplex(RingSpec ring, std::map<int, GradedFreeModule> modules,
                           std::map<int, PolyMatrix> differentials)
    : ring_(std::move(ring))
{
    for (auto& [n, M] : modules)
        if (!M.is_zero())
            modules_.emplace(n, std::move(M));

    for (const auto& [n, d] : differentials) {
        if (d.rows() != rank(n - 1) || d.cols() != rank(n))
            throw ComplexError("differential d_" + deg_str(n) + " has shape " + std::to_string(d.rows()) +
                               "x" + std::to_string(d.cols()) + ", expected " +
                               std::to_string(rank(n - 1)) + "x" + std::to_string(rank(n)));
    }
    if (modules_.empty())
        return;

    bool fine = std::all_of(modules_.begin(), modules_.end(),
                            [](const auto& kv) { return kv.second.has_multidegrees(); });
    for (int n = min_degree(); n <= max_degree() + 1; ++n) {
        auto it = differentials.find(n);
        PolyMatrix d = it != differentials.end() ? it->second : PolyMatrix(rank(n - 1), rank(n));
        if (d.rows() > 0 && d.cols() > 0) {
            check_entry_degrees(d, module(n - 1), module(n), 0, "d_" + deg_str(n));
            if (fine && !entries_match_multidegrees(d, module(n - 1), module(n)))
                fine = false;
        }
        differentials_.emplace(n, std::move(d));
    }
    if (!fine)
        for (auto& [n, M] : modules_)
            M = M.without_multidegrees();
}

ChainComplex ChainComplex::ring_itself(const RingSpec& ring)
{
    std::map<int, GradedFreeModule> mods;
    mods.emplace(0, GradedFreeModule::from_multidegrees({Monomial::one(ring.nvars())}));
    return ChainComplex(ring, std::move(mods), {});
}

const GradedFreeModule& ChainComplex::module(int n) const
{
    auto it = modules_.find(n);
    return it == modules_.end() ? kZeroModule : it->second;
}

const PolyMatrix& ChainComplex::differential(int n) const
{
    static const PolyMatrix empty;
    auto it = differentials_.find(n);
    return it == differentials_.end() ? empty : it->second;
}

int ChainComplex::min_degree() const { return modules_.empty() ? 0 : modules_.begin()->first; }

int ChainComplex::max_degree() const { return modules_.empty() ? -1 : modules_.rbegin()->first; }

std::vector<int> ChainComplex::degrees() const
{
    std::vector<int> v;
    for (const auto& [n, M] : modules_)
        v.push_back(n);
    return v;
}

std::size_t ChainComplex::total_rank() const
{
    std::size_t r = 0;
    for (const auto& [n, M] : modules_)
        r += M.rank();
    return r;
}

bool ChainComplex::has_multidegrees() const
{
    return !modules_.empty() && std::all_of(modules_.begin(), modules_.end(),
                                            [](const auto& kv) { return kv.second.has_multidegrees(); });
}

ChainComplex ChainComplex::without_multidegrees() const
{
    ChainComplex c = *this;
    for (auto& [n, M] : c.modules_)
        M = M.without_multidegrees();
    return c;
}

bool operator==(const ChainComplex& a, const ChainComplex& b)
{
    return a.ring_ == b.ring_ && a.modules_ == b.modules_ && a.differentials_ == b.differentials_;
}

ChainMap::ChainMap(ChainComplex source, ChainComplex target, std::map<int, PolyMatrix> mats)
    : source_(std::move(source)), target_(std::move(target))
{
    if (!(source_.ring() == target_.ring()))
        throw RingMismatch();
    for (auto& [n, f] : mats) {
        const auto& S = source_.module(n);
        const auto& T = target_.module(n);
        if (f.rows() != T.rank() || f.cols() != S.rank())
            throw ComplexError("chain map component f_" + deg_str(n) + " has the wrong shape");
        if (f.rows() == 0 || f.cols() == 0)
            continue;
        check_entry_degrees(f, T, S, 0, "f_" + deg_str(n));
        mats_.emplace(n, std::move(f));
    }
}

ChainMap ChainMap::identity(const ChainComplex& C)
{
    std::map<int, PolyMatrix> m;
    for (int n : C.degrees())
        m.emplace(n, PolyMatrix::identity(C.rank(n), C.ring()));
    return ChainMap(C, C, std::move(m));
}

ChainMap ChainMap::zero(ChainComplex source, ChainComplex target)
{
    return ChainMap(std::move(source), std::move(target), {});
}

PolyMatrix ChainMap::at(int n) const
{
    auto it = mats_.find(n);
    if (it != mats_.end())
        return it->second;
    return PolyMatrix(target_.rank(n), source_.rank(n));
}

TensorLayout::TensorLayout(const ChainComplex& C, const ChainComplex& D, int n, int left_min,
                           int right_min)
{
    for (int i : C.degrees()) {
        int j = n - i;
        if (i < left_min || j < right_min || D.rank(j) == 0)
            continue;
        blocks_.push_back({i, j, size_, C.rank(i), D.rank(j)});
        size_ += C.rank(i) * D.rank(j);
    }
}

std::optional<std::size_t> TensorLayout::index(int i, std::size_t a, std::size_t b) const
{
    for (const auto& blk : blocks_)
        if (blk.left_degree == i)
            return blk.offset + a * blk.right_rank + b;
    return std::nullopt;
}

ChainComplex suspension(const ChainComplex& C, int ell)
{
    std::map<int, GradedFreeModule> mods;
    std::map<int, PolyMatrix> diffs;
    for (int n : C.degrees())
        mods.emplace(n + ell, C.module(n));
    if (!C.is_zero())
        for (int n = C.min_degree(); n <= C.max_degree() + 1; ++n)
            diffs.emplace(n + ell, odd(ell) ? -C.differential(n) : C.differential(n));
    return ChainComplex(C.ring(), std::move(mods), std::move(diffs));
}

ChainComplex truncate_geq(const ChainComplex& C, int p)
{
    std::map<int, GradedFreeModule> mods;
    std::map<int, PolyMatrix> diffs;
    for (int n : C.degrees())
        if (n >= p)
            mods.emplace(n, C.module(n));
    for (int n : C.degrees())
        if (n > p)
            diffs.emplace(n, C.differential(n));
    return ChainComplex(C.ring(), std::move(mods), std::move(diffs));
}

ChainComplex tensor(const ChainComplex& C, const ChainComplex& D)
{
    if (!(C.ring() == D.ring()))
        throw RingMismatch();
    std::map<int, GradedFreeModule> mods;
    std::map<int, PolyMatrix> diffs;
    if (C.is_zero() || D.is_zero())
        return ChainComplex(C.ring());
    const int lo = C.min_degree() + D.min_degree();
    const int hi = C.max_degree() + D.max_degree();
    for (int n = lo; n <= hi; ++n) {
        GradedFreeModule M;
        const TensorLayout layout(C, D, n);
        for (const auto& blk : layout.blocks())
            M = GradedFreeModule::direct_sum(
                M, GradedFreeModule::tensor(C.module(blk.left_degree), D.module(blk.right_degree)));
        mods.emplace(n, std::move(M));
    }
    for (int n = lo + 1; n <= hi; ++n) {
        TensorLayout src(C, D, n), tgt(C, D, n - 1);
        PolyMatrix d(tgt.size(), src.size());
        for (const auto& blk : src.blocks()) {
            const int i = blk.left_degree, j = blk.right_degree;
            const PolyMatrix& dC = C.differential(i);
            const PolyMatrix& dD = D.differential(j);
            for (std::size_t a = 0; a < blk.left_rank; ++a)
                for (std::size_t b = 0; b < blk.right_rank; ++b) {
                    std::size_t col = blk.offset + a * blk.right_rank + b;
                    if (C.rank(i - 1) > 0 && dC.rows() > 0) {
                        auto base = tgt.index(i - 1, 0, 0);
                        for (std::size_t r = 0; r < dC.rows(); ++r)
                            if (!dC(r, a).is_zero() && base)
                                d(*tgt.index(i - 1, r, b), col) += dC(r, a);
                    }
                    if (D.rank(j - 1) > 0 && dD.rows() > 0 && tgt.index(i, 0, 0)) {
                        for (std::size_t s = 0; s < dD.rows(); ++s)
                            if (!dD(s, b).is_zero())
                                d(*tgt.index(i, a, s), col) += odd(i) ? -dD(s, b) : dD(s, b);
                    }
                }
        }
        diffs.emplace(n, std::move(d));
    }
    return ChainComplex(C.ring(), std::move(mods), std::move(diffs));
}

ChainComplex direct_sum(const ChainComplex& C, const ChainComplex& D)
{
    if (!(C.ring() == D.ring()))
        throw RingMismatch();
    std::set<int> degs;
    for (int n : C.degrees())
        degs.insert(n);
    for (int n : D.degrees())
        degs.insert(n);
    std::map<int, GradedFreeModule> mods;
    std::map<int, PolyMatrix> diffs;
    for (int n : degs)
        mods.emplace(n, GradedFreeModule::direct_sum(C.module(n), D.module(n)));
    for (int n : degs) {
        PolyMatrix d(C.rank(n - 1) + D.rank(n - 1), C.rank(n) + D.rank(n));
        if (C.rank(n - 1) > 0 && C.rank(n) > 0)
            d.set_block(0, 0, C.differential(n));
        if (D.rank(n - 1) > 0 && D.rank(n) > 0)
            d.set_block(C.rank(n - 1), C.rank(n), D.differential(n));
        diffs.emplace(n, std::move(d));
    }
    return ChainComplex(C.ring(), std::move(mods), std::move(diffs));
}

ChainComplex cone(const ChainMap& f)
{
    if (!is_chain_map(f))
        throw ComplexError("map does not commute with the differentials");
    const ChainComplex& S = f.source();
    const ChainComplex& T = f.target();
    std::set<int> degs;
    for (int n : T.degrees())
        degs.insert(n);
    for (int n : S.degrees())
        degs.insert(n + 1);
    std::map<int, GradedFreeModule> mods;
    std::map<int, PolyMatrix> diffs;
    for (int n : degs)
        mods.emplace(n, GradedFreeModule::direct_sum(T.module(n), S.module(n - 1)));
    for (int n : degs) {
        const std::size_t t0 = T.rank(n - 1), s0 = S.rank(n - 2);
        const std::size_t t1 = T.rank(n), s1 = S.rank(n - 1);
        PolyMatrix d(t0 + s0, t1 + s1);
        if (t0 > 0 && t1 > 0)
            d.set_block(0, 0, T.differential(n));
        if (t0 > 0 && s1 > 0)
            d.set_block(0, t1, f.at(n - 1));
        if (s0 > 0 && s1 > 0)
            d.set_block(t0, t1, -S.differential(n - 1));
        diffs.emplace(n, std::move(d));
    }
    return ChainComplex(T.ring(), std::move(mods), std::move(diffs));
}

bool is_complex(const ChainComplex& C)
{
    if (C.is_zero())
        return true;
    for (int n = C.min_degree() + 2; n <= C.max_degree(); ++n)
        if (!(C.differential(n - 1) * C.differential(n)).is_zero())
            return false;
    return true;
}

bool is_chain_map(const ChainMap& f)
{
    const ChainComplex& S = f.source();
    const ChainComplex& T = f.target();
    std::set<int> degs;
    for (int n : S.degrees())
        degs.insert(n);
    for (int n : T.degrees())
        degs.insert(n + 1);
    for (int n : degs) {
        if (S.rank(n) == 0 || T.rank(n - 1) == 0)
            continue;
        PolyMatrix lhs = T.rank(n) > 0 ? T.differential(n) * f.at(n) : PolyMatrix(T.rank(n - 1), S.rank(n));
        PolyMatrix rhs =
            S.rank(n - 1) > 0 ? f.at(n - 1) * S.differential(n) : PolyMatrix(T.rank(n - 1), S.rank(n));
        if (!(lhs - rhs).is_zero())
            return false;
    }
    return true;
}

bool is_minimal(const ChainComplex& C)
{
    for (int n : C.degrees())
        if (C.differential(n).has_unit_entry())
            return false;
    return true;
}

PowerSeries generating_function(const ChainComplex& C, int D)
{
    PowerSeries s(D);
    std::vector<std::int64_t> c(static_cast<std::size_t>(D) + 1, 0);
    for (int n : C.degrees()) {
        if (n < 0)
            throw ComplexError("complex has a module in negative homological degree");
        if (n <= D)
            c[static_cast<std::size_t>(n)] = static_cast<std::int64_t>(C.rank(n));
    }
    return PowerSeries(std::move(c), D);
}

BettiTable generator_table(const ChainComplex& C)
{
    BettiTable t;
    for (int n : C.degrees())
        for (int tw : C.module(n).twists())
            t.add(n, tw);
    return t;
}

BettiTable graded_betti(const ChainComplex& C)
{
    if (!is_minimal(C))
        throw ComplexError("complex is not minimal; graded Betti numbers are not read off its ranks");
    return generator_table(C);
}

} // namespace fiberres
