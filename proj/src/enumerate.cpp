#include "kripke/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "kripke/errors.hpp"

namespace kripke {

namespace {

std::size_t idx(int w) { return static_cast<std::size_t>(w); }

std::uint64_t rows_code(const std::vector<WorldSet>& rows, const std::vector<int>& perm, int n) {
    // Bit (perm[a] * n + perm[b]) for each edge a -> b.
    std::uint64_t code = 0;
    for (int a = 0; a < n; ++a)
        for (int b : rows[idx(a)]) code |= std::uint64_t{1} << (perm[idx(a)] * n + perm[idx(b)]);
    return code;
}

void need_small(int n) {
    if (n > 8) throw FormatError("canonical forms are limited to 8 worlds");
}

std::vector<WorldSet> rows_from_code(std::uint64_t code, int n) {
    std::vector<WorldSet> rows(idx(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if ((code >> (a * n + b)) & 1U) rows[idx(a)].insert(b);
    return rows;
}

}  // namespace

FrameCode canonical_code(const Frame& f) {
    const int n = f.size();
    need_small(n);
    std::vector<int> perm(idx(n));
    std::iota(perm.begin(), perm.end(), 0);
    FrameCode best{~std::uint64_t{0}, ~std::uint64_t{0}};
    do {
        FrameCode c{rows_code(f.rows(Modality::One), perm, n), rows_code(f.rows(Modality::Two), perm, n)};
        best = std::min(best, c);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Frame canonical_form(const Frame& f) {
    FrameCode c = canonical_code(f);
    return Frame(rows_from_code(c.first, f.size()), rows_from_code(c.second, f.size()));
}

FrameCode canonical_code(const UniFrame& u) {
    const int n = u.n;
    need_small(n);
    std::vector<int> perm(idx(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        best = std::min(best, rows_code(u.rows, perm, n));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {best, 0};
}

UniFrame relation_from_code(std::uint64_t code, int n) {
    if (n < 0 || n > 8) throw FormatError("relation codes are limited to 8 worlds");
    return UniFrame{n, rows_from_code(code, n)};
}

std::uint64_t relation_code(const UniFrame& u) {
    need_small(u.n);
    std::vector<int> perm(idx(u.n));
    std::iota(perm.begin(), perm.end(), 0);
    return rows_code(u.rows, perm, u.n);
}

std::vector<UniFrame> relations_up_to_iso(int n) {
    if (n > 4) throw FormatError("relations up to isomorphism are enumerated for n <= 4 only");
    const std::uint64_t per = std::uint64_t{1} << (n * n);
    std::vector<UniFrame> out;
    for (std::uint64_t c = 0; c < per; ++c) {
        UniFrame u{n, rows_from_code(c, n)};
        if (canonical_code(u).first == c) out.push_back(std::move(u));
    }
    return out;
}

std::vector<UniFrame> labeled_preorders(int n) {
    need_small(n);
    // Row by row; a partial relation is extended only while it stays transitive
    // on the rows fixed so far, and checked in full at the end.
    std::vector<UniFrame> out;
    UniFrame cur{n, std::vector<WorldSet>(idx(n))};
    auto transitive = [&]() {
        for (int a = 0; a < n; ++a)
            for (int b : cur.rows[idx(a)])
                if (!cur.rows[idx(b)].subset_of(cur.rows[idx(a)])) return false;
        return true;
    };
    const std::uint64_t per_row = std::uint64_t{1} << (n - 1);
    std::vector<std::uint64_t> choice(idx(n), 0);
    int row = 0;
    // Iterative odometer over off-diagonal bits of each row.
    auto row_set = [&](int a, std::uint64_t bits) {
        WorldSet s = WorldSet::single(a);
        int j = 0;
        for (int b = 0; b < n; ++b) {
            if (b == a) continue;
            if ((bits >> j) & 1U) s.insert(b);
            ++j;
        }
        return s;
    };
    if (n == 0) return {cur};
    std::vector<bool> fresh(idx(n), true);
    while (row >= 0) {
        if (row == n) {
            if (transitive()) out.push_back(cur);
            --row;
            continue;
        }
        if (fresh[idx(row)]) {
            choice[idx(row)] = 0;
            fresh[idx(row)] = false;
        } else if (++choice[idx(row)] >= per_row) {
            fresh[idx(row)] = true;
            --row;
            continue;
        }
        cur.rows[idx(row)] = row_set(row, choice[idx(row)]);
        // Prefix check: among fixed rows, a -> b with b fixed requires R(b) inside R(a).
        bool ok = true;
        for (int a = 0; a <= row && ok; ++a)
            for (int b : cur.rows[idx(a)])
                if (b <= row && !cur.rows[idx(b)].subset_of(cur.rows[idx(a)])) {
                    ok = false;
                    break;
                }
        if (ok) ++row;
    }
    std::sort(out.begin(), out.end(), [n](const UniFrame& x, const UniFrame& y) {
        std::vector<int> id(idx(n));
        std::iota(id.begin(), id.end(), 0);
        return rows_code(x.rows, id, n) < rows_code(y.rows, id, n);
    });
    return out;
}

std::vector<UniFrame> preorders_up_to_iso(int n) {
    std::map<std::uint64_t, UniFrame> reps;
    for (const UniFrame& u : labeled_preorders(n)) {
        std::uint64_t c = canonical_code(u).first;
        if (!reps.count(c)) reps.emplace(c, UniFrame{n, rows_from_code(c, n)});
    }
    std::vector<UniFrame> out;
    for (auto& [c, u] : reps) out.push_back(u);
    return out;
}

std::vector<Frame> bimodal_frames_up_to_iso(int n) {
    if (n > 3) throw FormatError("bimodal frames up to isomorphism are enumerated for n <= 3 only");
    const std::uint64_t per = std::uint64_t{1} << (n * n);
    std::vector<Frame> out;
    for (std::uint64_t c1 = 0; c1 < per; ++c1)
        for (std::uint64_t c2 = 0; c2 < per; ++c2) {
            Frame f(rows_from_code(c1, n), rows_from_code(c2, n));
            FrameCode c = canonical_code(f);
            if (c == FrameCode{c1, c2}) out.push_back(f);  // keep the canonical labeling only
        }
    return out;
}

std::vector<Frame> preorder_pairs_up_to_iso(int n) {
    auto pre = labeled_preorders(n);
    std::set<FrameCode> seen;
    std::vector<Frame> out;
    for (const auto& p : pre)
        for (const auto& q : pre) {
            Frame f(p.rows, q.rows);
            FrameCode c = canonical_code(f);
            if (seen.insert(c).second) out.push_back(Frame(rows_from_code(c.first, n), rows_from_code(c.second, n)));
        }
    std::sort(out.begin(), out.end(), [](const Frame& a, const Frame& b) {
        return canonical_code(a) < canonical_code(b);
    });
    return out;
}

}  // namespace kripke
