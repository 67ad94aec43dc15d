#include "kripke/algebra.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "kripke/errors.hpp"
#include "kripke/semantics.hpp"
#include "kripke/syntax.hpp"

namespace kripke {

namespace {

std::size_t idx(int w) { return static_cast<std::size_t>(w); }

constexpr Modality kModalities[] = {Modality::One, Modality::Two};

// Disjoint union of copies of frames: world id = offset + copy * n + w.
struct Space {
    struct Segment {
        const Frame* frame;
        std::uint64_t copies;
        std::size_t offset;
    };
    std::vector<Segment> segments;
    std::size_t size = 0;

    void add(const Frame& f, std::uint64_t copies) {
        segments.push_back({&f, copies, size});
        size += static_cast<std::size_t>(copies) * idx(f.size());
    }
};

struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (std::uint32_t x : v) h = (h ^ x) * 0x100000001b3ULL;
        return static_cast<std::size_t>(h);
    }
};

// Ids numbered by first appearance in world order.
std::vector<std::uint32_t> renumber(const std::vector<std::uint32_t>& labels, std::uint32_t& count) {
    std::unordered_map<std::uint32_t, std::uint32_t> ids;
    std::vector<std::uint32_t> out(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto [it, fresh] = ids.emplace(labels[i], static_cast<std::uint32_t>(ids.size()));
        out[i] = it->second;
    }
    count = static_cast<std::uint32_t>(ids.size());
    return out;
}

// New class of w: (base[w], classes met by R1(w), classes met by R2(w)).
std::vector<std::uint32_t> refine(const Space& sp, const std::vector<std::uint32_t>& base,
                                  const std::vector<std::uint32_t>& cls, std::uint32_t& count) {
    std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, KeyHash> ids;
    std::vector<std::uint32_t> out(sp.size);
    std::vector<std::uint32_t> key;
    std::vector<std::uint32_t> part;
    for (const auto& seg : sp.segments) {
        const Frame& f = *seg.frame;
        const std::size_t n = idx(f.size());
        for (std::uint64_t c = 0; c < seg.copies; ++c) {
            const std::size_t at = seg.offset + static_cast<std::size_t>(c) * n;
            for (int w = 0; w < f.size(); ++w) {
                key.clear();
                key.push_back(base[at + idx(w)]);
                for (Modality m : kModalities) {
                    part.clear();
                    for (int s : f.successors(m, w)) part.push_back(cls[at + idx(s)]);
                    std::sort(part.begin(), part.end());
                    part.erase(std::unique(part.begin(), part.end()), part.end());
                    key.push_back(static_cast<std::uint32_t>(part.size()));
                    key.insert(key.end(), part.begin(), part.end());
                }
                auto [it, fresh] = ids.emplace(key, static_cast<std::uint32_t>(ids.size()));
                out[at + idx(w)] = it->second;
            }
        }
    }
    count = static_cast<std::uint32_t>(ids.size());
    return out;
}

// Coarsest partition refining the labels with equal successor class sets.
std::vector<std::uint32_t> stable_partition(const Space& sp, const std::vector<std::uint32_t>& labels,
                                            std::uint32_t& count) {
    std::vector<std::uint32_t> cls = renumber(labels, count);
    for (;;) {
        std::uint32_t next_count = 0;
        std::vector<std::uint32_t> next = refine(sp, cls, cls, next_count);
        if (next_count == count) return cls;
        cls = std::move(next);
        count = next_count;
    }
}

std::vector<WorldSet> blocks_of(const std::vector<std::uint32_t>& cls, std::uint32_t count) {
    std::vector<WorldSet> out(count);
    for (std::size_t w = 0; w < cls.size(); ++w) out[cls[w]].insert(static_cast<int>(w));
    return out;
}

std::uint64_t saturating_pow2(std::uint64_t e) {
    return e >= 64 ? ~std::uint64_t{0} : std::uint64_t{1} << e;
}

}  // namespace

SetAlgebra generated_subalgebra(const Frame& f, const std::vector<WorldSet>& gens, std::uint64_t cap) {
    const int n = f.size();
    for (WorldSet g : gens)
        if (!g.subset_of(f.worlds())) throw FormatError("generator " + g.to_bitstring(64) + " leaves the frame");
    Space sp;
    sp.add(f, 1);
    // Label each world by its membership pattern in the generators.
    std::map<std::vector<bool>, std::uint32_t> patterns;
    std::vector<std::uint32_t> labels(idx(n));
    for (int w = 0; w < n; ++w) {
        std::vector<bool> p;
        for (WorldSet g : gens) p.push_back(g.contains(w));
        labels[idx(w)] = patterns.emplace(p, static_cast<std::uint32_t>(patterns.size())).first->second;
    }
    std::uint32_t count = 0;
    std::vector<std::uint32_t> cls = n == 0 ? labels : stable_partition(sp, labels, count);

    SetAlgebra a;
    a.n = n;
    a.atoms = blocks_of(cls, count);
    std::uint64_t size = saturating_pow2(count);
    if (size > cap) throw CapExceeded(size, cap);
    a.elements.reserve(static_cast<std::size_t>(size));
    for (std::uint64_t pick = 0; pick < size; ++pick) {
        WorldSet s;
        for (std::uint32_t i = 0; i < count; ++i)
            if ((pick >> i) & 1U) s |= a.atoms[i];
        a.elements.push_back(s);
    }
    std::sort(a.elements.begin(), a.elements.end(),
              [n](WorldSet x, WorldSet y) { return bitstring_key(x, n) < bitstring_key(y, n); });
    for (WorldSet g : gens) {
        auto it = std::lower_bound(a.elements.begin(), a.elements.end(), g, [n](WorldSet x, WorldSet y) {
            return bitstring_key(x, n) < bitstring_key(y, n);
        });
        a.generators.push_back(static_cast<std::size_t>(it - a.elements.begin()));
    }
    return a;
}

FreeAlgebraAtoms free_algebra_atoms(const std::vector<Frame>& frames, int k, std::uint64_t budget) {
    if (k < 0) throw FormatError("negative variable count");
    std::uint64_t copies = 0;
    for (const Frame& f : frames) {
        std::uint64_t bits = static_cast<std::uint64_t>(f.size()) * static_cast<std::uint64_t>(k);
        std::uint64_t c = saturating_pow2(bits);
        copies = c > ~std::uint64_t{0} - copies ? ~std::uint64_t{0} : copies + c;
    }
    if (copies > budget)
        throw BudgetExceeded(copies, budget,
                             "free algebra needs " + std::to_string(copies) + " frame copies, budget " +
                                 std::to_string(budget));
    Space sp;
    for (const Frame& f : frames) sp.add(f, saturating_pow2(static_cast<std::uint64_t>(f.size()) * idx(k)));

    // Copy c of a frame carries the valuation p_i = bits [i*n, (i+1)*n) of c.
    std::vector<std::uint32_t> labels(sp.size);
    for (const auto& seg : sp.segments) {
        const std::size_t n = idx(seg.frame->size());
        for (std::uint64_t c = 0; c < seg.copies; ++c)
            for (std::size_t w = 0; w < n; ++w) {
                std::uint32_t label = 0;
                for (int i = 0; i < k; ++i) label |= static_cast<std::uint32_t>((c >> (idx(i) * n + w)) & 1U) << i;
                labels[seg.offset + static_cast<std::size_t>(c) * n + w] = label;
            }
    }
    FreeAlgebraAtoms out;
    out.copies = copies;
    if (sp.size == 0) return out;
    std::uint32_t count = 0;
    stable_partition(sp, labels, count);
    out.atoms = count;
    return out;
}

std::uint64_t free_algebra_count(const std::vector<Frame>& frames, int k, std::uint64_t cap, std::uint64_t budget) {
    FreeAlgebraAtoms a = free_algebra_atoms(frames, k, budget);
    std::uint64_t size = saturating_pow2(a.atoms);
    if (size > cap || a.atoms >= 64) throw CapExceeded(size, cap);
    return size;
}

int BlockSystem::block_of(int layer, int world) const {
    const auto& blocks = layers[idx(layer)];
    for (std::size_t j = 0; j < blocks.size(); ++j)
        if (blocks[j].contains(world)) return static_cast<int>(j);
    return -1;
}

BlockSystem block_system(const Model& m, int max_layers) {
    const Frame& f = m.frame;
    const int n = f.size();
    BlockSystem bs;
    bs.n = n;
    bs.layers.push_back(n == 0 ? std::vector<WorldSet>{} : std::vector<WorldSet>{f.worlds()});
    bs.parent.emplace_back();
    if (n == 0) {
        bs.stabilization = 1;
        return bs;
    }

    std::vector<std::uint32_t> vars(idx(n), 0);
    std::map<std::vector<bool>, std::uint32_t> patterns;
    for (int w = 0; w < n; ++w) {
        std::vector<bool> p;
        for (const auto& [var, set] : m.valuation) p.push_back(set.contains(w));
        vars[idx(w)] = patterns.emplace(p, static_cast<std::uint32_t>(patterns.size())).first->second;
    }
    Space sp;
    sp.add(f, 1);

    std::uint32_t count = 0;
    std::vector<std::uint32_t> cls = renumber(vars, count);
    auto push = [&](const std::vector<std::uint32_t>& c, std::uint32_t k) {
        const auto& prev = bs.layers.back();
        std::vector<WorldSet> blocks = blocks_of(c, k);
        std::vector<int> parents;
        for (WorldSet b : blocks) {
            int w = b.first();
            for (std::size_t j = 0; j < prev.size(); ++j)
                if (prev[j].contains(w)) parents.push_back(static_cast<int>(j));
        }
        bs.layers.push_back(std::move(blocks));
        bs.parent.push_back(std::move(parents));
    };
    if (max_layers >= 1) push(cls, count);
    for (int i = 1;; ++i) {
        std::uint32_t next_count = 0;
        std::vector<std::uint32_t> next = refine(sp, vars, cls, next_count);
        if (next_count == count) {
            // Layer i+1 equals layer i; this is known even if layer i+1 is past the limit.
            if (i <= max_layers) bs.stabilization = i;
            break;
        }
        if (i + 1 > max_layers) break;
        cls = std::move(next);
        count = next_count;
        push(cls, count);
    }
    return bs;
}

namespace {

Formula literals(const Model& m, int w) {
    std::vector<Formula> lits;
    for (const auto& [var, set] : m.valuation)
        lits.push_back(set.contains(w) ? Formula::var(var) : Formula::negation(Formula::var(var)));
    return conj_all(lits);
}

// Characteristic formulas of the blocks of a block system, layer by layer.
class BlockFormulas {
public:
    BlockFormulas(const Model& sub, const BlockSystem& bs) : sub_(sub), bs_(bs) {}

    Formula chi(int layer, int block) {
        auto key = std::make_pair(layer, block);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        const int w = bs_.layers[idx(layer)][idx(block)].first();
        Formula out = Formula::top();
        if (layer == 1) {
            out = literals(sub_, w);
        } else if (layer >= 2) {
            std::vector<Formula> parts{literals(sub_, w)};
            for (Modality m : kModalities) {
                std::vector<Formula> seen;
                std::vector<bool> hit(bs_.layers[idx(layer - 1)].size(), false);
                for (int s : sub_.frame.successors(m, w)) hit[idx(bs_.block_of(layer - 1, s))] = true;
                for (std::size_t c = 0; c < hit.size(); ++c)
                    if (hit[c]) seen.push_back(chi(layer - 1, static_cast<int>(c)));
                for (const Formula& x : seen) parts.push_back(Formula::dia(m, x));
                parts.push_back(Formula::box(m, disj_all(seen)));
            }
            out = conj_all(parts);
        }
        memo_.emplace(key, out);
        return out;
    }

private:
    const Model& sub_;
    const BlockSystem& bs_;
    std::map<std::pair<int, int>, Formula> memo_;
};

}  // namespace

DefinabilityCertificate beta_formula(const Model& m, int r) {
    const Frame& f = m.frame;
    if (r < 0 || r >= f.size()) throw FormatError("world " + std::to_string(r) + " is not in the frame");

    // Reachability within two steps.
    std::vector<WorldSet> star = reach_closure(f);
    for (int a = 0; a < f.size(); ++a) {
        WorldSet one = f.successors(Modality::One, a) | f.successors(Modality::Two, a);
        WorldSet two = WorldSet::single(a) | one;
        for (int b : one) two |= f.successors(Modality::One, b) | f.successors(Modality::Two, b);
        WorldSet far = star[idx(a)] - two;
        if (!far.empty())
            throw NotPretransitive("world " + std::to_string(far.first()) + " is reachable from " +
                                   std::to_string(a) + " only in more than two steps");
    }

    DefinabilityCertificate cert;
    cert.target = r;
    Restricted<Frame> gen = generated_subframe(f, WorldSet::single(r));
    cert.domain = gen.domain;
    Model sub{gen.frame, {}};
    for (const auto& [var, set] : m.valuation) {
        WorldSet s;
        for (std::size_t i = 0; i < gen.origin.size(); ++i)
            if (set.contains(gen.origin[i])) s.insert(static_cast<int>(i));
        sub.valuation[var] = s;
    }
    const int k = sub.frame.size();
    BlockSystem bs = block_system(sub, k + 1);
    cert.transcript.push_back("generated subframe of " + std::to_string(r) + ": " + gen.domain.to_bitstring(f.size()));
    cert.transcript.push_back("block system stabilizes at layer " + std::to_string(*bs.stabilization) + " with " +
                              std::to_string(bs.last().size()) + " blocks");
    for (WorldSet b : bs.last())
        if (b.count() > 1) {
            auto it = b.begin();
            ++it;
            throw NotDefinable(gen.origin[idx(*it)]);
        }

    BlockFormulas chis(sub, bs);
    std::vector<Formula> alpha;
    cert.alpha.assign(idx(f.size()), std::nullopt);
    for (int a = 0; a < k; ++a) {
        int layer = 0;
        while (bs.layers[idx(layer)][idx(bs.block_of(layer, a))].count() > 1) ++layer;
        Formula x = layer <= 1 ? literals(sub, a) : chis.chi(layer, bs.block_of(layer, a));
        alpha.push_back(x);
        cert.alpha[idx(gen.origin[idx(a)])] = x;
        cert.transcript.push_back("alpha(" + std::to_string(gen.origin[idx(a)]) + "): singleton at layer " +
                                  std::to_string(layer) + ", depth " + std::to_string(modal_depth(x)));
    }

    std::vector<Formula> pattern;
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            for (Modality mod : kModalities) {
                Formula d = Formula::dia(mod, alpha[idx(b)]);
                pattern.push_back(Formula::imp(alpha[idx(a)],
                                               sub.frame.related(mod, a, b) ? d : Formula::negation(d)));
            }
    cert.gamma = Formula::conj(Formula::box(ModalToken::Star, conj_all(pattern)),
                               Formula::box(ModalToken::Star, disj_all(alpha)));
    const auto at_r = std::find(gen.origin.begin(), gen.origin.end(), r) - gen.origin.begin();
    cert.beta = Formula::conj(alpha[static_cast<std::size_t>(at_r)], cert.gamma);
    cert.modal_depth = modal_depth(cert.beta);
    cert.extension = eval(f, m.valuation, cert.beta);
    cert.transcript.push_back("beta: depth " + std::to_string(cert.modal_depth) + ", extension " +
                              cert.extension.to_bitstring(f.size()));
    if (cert.extension != WorldSet::single(r)) {
        WorldSet other = cert.extension - WorldSet::single(r);
        throw NotDefinable(other.empty() ? r : other.first());
    }
    return cert;
}

}  // namespace kripke
