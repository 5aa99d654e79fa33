#include "xchannel/alignment.hpp"

namespace xchan {

ChainDecomposition cyclic_decompose(int nd, int nc) {
    if (!(nc > 0 && nc < nd)) throw std::domain_error("cyclic decomposition requires 0 < nc < nd");
    ChainDecomposition d;
    d.nd = nd;
    d.nc = nc;
    d.delta = nd - nc;
    d.blocks = 1;
    d.dim = nd;
    for (int i = 0; i < d.delta; ++i) {
        std::vector<int> chain;
        for (int j = i; j < nd; j += d.delta) chain.push_back(j);
        d.columns.push_back(std::move(chain));
    }
    return d;
}

ChainDecomposition extended_decompose(int nd, int nc) {
    auto base = cyclic_decompose(nd, nc);
    ChainDecomposition d;
    d.nd = nd;
    d.nc = nc;
    d.delta = base.delta;
    d.blocks = 3;
    d.dim = 3 * nd;
    // Three copies of each chain, one per extension slot, kept grouped by the
    // originating chain so column lengths stay non-increasing.
    for (const auto& chain : base.columns)
        for (int b = 0; b < 3; ++b) {
            std::vector<int> col;
            col.reserve(chain.size());
            for (int idx : chain) col.push_back(b * nd + idx);
            d.columns.push_back(std::move(col));
        }
    return d;
}

}  // namespace xchan
