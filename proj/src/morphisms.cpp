#include "kripke/morphisms.hpp"

#include "kripke/errors.hpp"

namespace kripke {

namespace {

std::size_t idx(int w) { return static_cast<std::size_t>(w); }

constexpr Modality kModalities[] = {Modality::One, Modality::Two};

WorldSet image(const WorldMap& f, WorldSet s) {
    WorldSet out;
    for (int a : s) out.insert(f[idx(a)]);
    return out;
}

WorldSet preimage_of(const WorldMap& f, WorldSet u) {
    WorldSet out;
    for (std::size_t a = 0; a < f.size(); ++a)
        if (u.contains(f[a])) out.insert(static_cast<int>(a));
    return out;
}

}  // namespace

std::string to_string(Clause c) {
    switch (c) {
    case Clause::Surjectivity: return "surjectivity";
    case Clause::Forth: return "forth";
    case Clause::Back: return "back";
    case Clause::Admissibility: return "admissibility";
    }
    return "?";
}

std::string Violation::describe() const {
    switch (clause) {
    case Clause::Surjectivity: return "surjectivity: target world " + std::to_string(target) + " is not hit";
    case Clause::Forth:
        return "forth, modality " + std::to_string(modality) + ": " + std::to_string(source) + " R " +
               std::to_string(source_to) + " but the images are unrelated";
    case Clause::Back:
        return "back, modality " + std::to_string(modality) + ": image of " + std::to_string(source) + " sees " +
               std::to_string(target) + ", no successor of " + std::to_string(source) + " maps there";
    case Clause::Admissibility: return "admissibility: preimage of a target set is not admissible";
    }
    return "?";
}

std::optional<Violation> check_pmorphism(const GeneralFrame& g, const GeneralFrame& h, const WorldMap& f) {
    const Frame& src = g.frame();
    const Frame& dst = h.frame();
    if (static_cast<int>(f.size()) != src.size())
        throw FormatError("map has " + std::to_string(f.size()) + " entries for " + std::to_string(src.size()) +
                          " source worlds");
    for (int y : f)
        if (y < 0 || y >= dst.size()) throw FormatError("map value " + std::to_string(y) + " is not a target world");

    WorldSet hit = image(f, src.worlds());
    if (hit != dst.worlds()) {
        Violation v{Clause::Surjectivity};
        v.target = (dst.worlds() - hit).first();
        return v;
    }
    for (Modality m : kModalities)
        for (int a = 0; a < src.size(); ++a)
            for (int b : src.successors(m, a))
                if (!dst.related(m, f[idx(a)], f[idx(b)])) {
                    Violation v{Clause::Forth, static_cast<int>(m)};
                    v.source = a;
                    v.source_to = b;
                    return v;
                }
    for (Modality m : kModalities)
        for (int a = 0; a < src.size(); ++a) {
            WorldSet missing = dst.successors(m, f[idx(a)]) - image(f, src.successors(m, a));
            if (!missing.empty()) {
                Violation v{Clause::Back, static_cast<int>(m)};
                v.source = a;
                v.target = missing.first();
                return v;
            }
        }
    if (!g.full_powerset()) {
        std::vector<WorldSet> tests;
        if (h.full_powerset()) {
            // Preimages commute with unions, so singletons suffice.
            for (int y = 0; y < dst.size(); ++y) tests.push_back(WorldSet::single(y));
        } else {
            tests = *h.algebra();
        }
        for (WorldSet u : tests)
            if (!g.admissible(preimage_of(f, u))) {
                Violation v{Clause::Admissibility};
                v.set = u;
                return v;
            }
    }
    return std::nullopt;
}

std::optional<Violation> check_pmorphism(const Frame& g, const Frame& h, const WorldMap& f) {
    return check_pmorphism(GeneralFrame(g), GeneralFrame(h), f);
}

namespace {

class Search {
public:
    Search(const GeneralFrame& g, const GeneralFrame& h, std::uint64_t budget)
        : g_(g), h_(h), src_(g.frame()), dst_(h.frame()), budget_(budget) {
        src_info_ = analyze(src_);
        dst_info_ = analyze(dst_);
        const int n = src_.size();
        map_.assign(idx(n), -1);
        cluster_target_.assign(idx(src_info_.cluster_count()), -1);
        cluster_assigned_.assign(idx(src_info_.cluster_count()), 0);
        // Worlds whose successor sets are fully assigned once world `a` is placed.
        for (Modality m : kModalities)
            for (int a = 0; a < n; ++a) {
                WorldSet s = src_.successors(m, a);
                int last = s.empty() ? a : std::max(a, 63 - std::countl_zero(s.bits()));
                ready_at_[m == Modality::One ? 0 : 1].resize(idx(n));
                ready_at_[m == Modality::One ? 0 : 1][idx(last)].insert(a);
            }
    }

    std::optional<WorldMap> run() {
        if (src_.size() == 0 || dst_.size() == 0) return std::nullopt;
        if (src_.size() < dst_.size()) return std::nullopt;
        if (extend(0)) return map_;
        return std::nullopt;
    }

private:
    bool consistent(int a, int y) const {
        // Forth on pairs with both ends assigned.
        for (Modality m : kModalities) {
            if (src_.related(m, a, a) && !dst_.related(m, y, y)) return false;
            for (int b = 0; b < a; ++b) {
                int fb = map_[idx(b)];
                if (src_.related(m, a, b) && !dst_.related(m, y, fb)) return false;
                if (src_.related(m, b, a) && !dst_.related(m, fb, y)) return false;
            }
        }
        // One source cluster lands in one target cluster.
        int c = src_info_.cluster[idx(a)];
        int t = cluster_target_[idx(c)];
        if (t >= 0 && dst_info_.cluster[idx(y)] != t) return false;
        return true;
    }

    bool back_ok(int a) const {
        // Back for every world whose successors are now all assigned.
        for (int k = 0; k < 2; ++k) {
            Modality m = kModalities[k];
            for (int b : ready_at_[k][idx(a)]) {
                WorldSet img;
                for (int s : src_.successors(m, b)) img.insert(map_[idx(s)]);
                if (!dst_.successors(m, map_[idx(b)]).subset_of(img)) return false;
            }
        }
        return true;
    }

    bool extend(int a) {
        const int n = src_.size();
        if (a == n) return !check_pmorphism(g_, h_, map_).has_value();
        for (int y = 0; y < dst_.size(); ++y) {
            if (++nodes_ > budget_) throw BudgetExceeded(nodes_, budget_, "p-morphism search exceeded its node budget of " + std::to_string(budget_));
            if (!consistent(a, y)) continue;
            map_[idx(a)] = y;
            int c = src_info_.cluster[idx(a)];
            bool fresh_cluster = cluster_target_[idx(c)] < 0;
            if (fresh_cluster) cluster_target_[idx(c)] = dst_info_.cluster[idx(y)];
            ++cluster_assigned_[idx(c)];
            bool fresh_hit = !hit_.contains(y);
            hit_.insert(y);
            // Enough worlds left to cover the targets not yet hit?
            bool coverable = dst_.size() - hit_.count() <= n - a - 1;
            if (coverable && back_ok(a) && extend(a + 1)) return true;
            if (fresh_hit) hit_.erase(y);
            if (--cluster_assigned_[idx(c)] == 0) cluster_target_[idx(c)] = -1;
            map_[idx(a)] = -1;
        }
        return false;
    }

    const GeneralFrame& g_;
    const GeneralFrame& h_;
    const Frame& src_;
    const Frame& dst_;
    SkeletonInfo src_info_;
    SkeletonInfo dst_info_;
    std::vector<WorldSet> ready_at_[2];
    WorldMap map_;
    std::vector<int> cluster_target_;
    std::vector<int> cluster_assigned_;
    WorldSet hit_;
    std::uint64_t nodes_ = 0;
    std::uint64_t budget_;
};

}  // namespace

std::optional<WorldMap> find_pmorphism(const GeneralFrame& g, const GeneralFrame& h, std::uint64_t budget) {
    return Search(g, h, budget).run();
}

std::optional<WorldMap> find_pmorphism(const Frame& g, const Frame& h, std::uint64_t budget) {
    return find_pmorphism(GeneralFrame(g), GeneralFrame(h), budget);
}

WorldMap union_pmorphism(const WorldMap& f1, const WorldMap& f2, int first_target_size, SumKind) {
    WorldMap out = f1;
    for (int y : f2) out.push_back(first_target_size + y);
    return out;
}

}  // namespace kripke
