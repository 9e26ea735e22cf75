#include "saf/projection.hpp"

#include <deque>
#include <map>
#include <stdexcept>

#include "saf/detail/enumerate.hpp"

namespace saf {

DungAF forget(const Saf& saf) {
    std::vector<Edge> lifted;
    for (auto [a, target] : saf.attacks())
        saf.reach_structural(target).for_each([&](ArgIndex b) { lifted.emplace_back(a, b); });
    return DungAF::from_edges(saf.table(), std::move(lifted));
}

namespace {

class DungSolver {
public:
    explicit DungSolver(const DungAF& af) : af_(af), clash_(af.size(), ArgSet(af.size())) {
        for (ArgIndex a = 0; a < af.size(); ++a) clash_[a] = af.attackers_of(a) | af.attacked_by(a);
    }

    bool defends(const ArgSet& e, ArgIndex a) const {
        bool ok = true;
        af_.attackers_of(a).for_each([&](ArgIndex b) { ok = ok && af_.attackers_of(b).intersects(e); });
        return ok;
    }

    ArgSet characteristic(const ArgSet& e) const {
        ArgSet out(af_.size());
        for (ArgIndex a = 0; a < af_.size(); ++a)
            if (defends(e, a)) out.insert(a);
        return out;
    }

    ArgSet grounded() const {
        ArgSet current(af_.size());
        for (;;) {
            ArgSet next = characteristic(current);
            if (next == current) return current;
            current = std::move(next);
        }
    }

    bool attacks_everything_else(const ArgSet& e) const {
        ArgSet hit(af_.size());
        e.for_each([&](ArgIndex a) { hit |= af_.attacked_by(a); });
        return e.complement().is_subset_of(hit);
    }

    const std::vector<ArgSet>& clash() const { return clash_; }

private:
    const DungAF& af_;
    std::vector<ArgSet> clash_;
};

}  // namespace

ExtensionSet dung_extensions(const DungAF& af, Semantics s, std::size_t bound) {
    DungSolver solver(af);
    if (s == Semantics::grounded) return ExtensionSet{s, {solver.grounded()}, af.digest()};
    if (af.size() > bound) throw InstanceTooLarge(af.size(), bound);

    std::vector<ArgSet> found;
    detail::for_each_conflict_free(af.size(), solver.clash(), [&](const ArgSet& e) {
        switch (s) {
            case Semantics::admissible:
                if (e.is_subset_of(solver.characteristic(e))) found.push_back(e);
                break;
            case Semantics::complete:
            case Semantics::preferred:
                if (solver.characteristic(e) == e) found.push_back(e);
                break;
            case Semantics::stable:
                if (solver.attacks_everything_else(e)) found.push_back(e);
                break;
            case Semantics::grounded: break;
        }
    });
    if (s == Semantics::preferred) found = detail::maximal_sets(found);
    canonicalize(found);
    return ExtensionSet{s, std::move(found), af.digest()};
}

ArgSet reach_attack(const DungAF& af, ArgIndex x) {
    if (x >= af.size()) throw UnknownArgument("#" + std::to_string(x));
    ArgSet seen(af.size());
    seen.insert(x);
    std::deque<ArgIndex> queue{x};
    while (!queue.empty()) {
        const ArgIndex v = queue.front();
        queue.pop_front();
        af.attacked_by(v).for_each([&](ArgIndex w) {
            if (!seen.contains(w)) {
                seen.insert(w);
                queue.push_back(w);
            }
        });
    }
    return seen;
}

PreservationReport check_preservation(const Saf& saf, Semantics s, std::size_t bound) {
    PreservationReport report;
    report.semantics = s;
    report.saf_extensions = extensions(saf, s, bound);
    report.dung_extensions = dung_extensions(forget(saf), s, bound);
    report.equal = report.saf_extensions.same_family(report.dung_extensions);
    if (!report.equal) {
        for (const auto& e : report.saf_extensions.extensions)
            if (!report.dung_extensions.contains(e)) {
                report.counterexample = e;
                break;
            }
        if (!report.counterexample)
            for (const auto& e : report.dung_extensions.extensions)
                if (!report.saf_extensions.contains(e)) {
                    report.counterexample = e;
                    break;
                }
    }
    return report;
}

CollisionWitness::CollisionWitness(Saf f1, Saf f2) : f1_(std::move(f1)), f2_(std::move(f2)) {
    if (f1_ == f2_) throw std::logic_error("collision witness frameworks are identical");
    projected_ = forget(f1_);
    if (!(projected_ == forget(f2_))) throw std::logic_error("collision witness projections differ");
}

std::vector<std::string> canonical_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
    return names;
}

void for_each_canonical_framework(std::size_t n, const std::function<bool(const Saf&)>& visit) {
    if (n > 4) throw std::invalid_argument("canonical enumeration supports at most 4 arguments");
    const auto names = canonical_names(n);
    std::vector<NamePair> all_pairs;
    std::vector<NamePair> off_diagonal;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            all_pairs.emplace_back(names[i], names[j]);
            if (i != j) off_diagonal.emplace_back(names[i], names[j]);
        }
    const std::uint64_t att_limit = std::uint64_t{1} << all_pairs.size();
    const std::uint64_t sub_limit = std::uint64_t{1} << off_diagonal.size();
    auto select = [](const std::vector<NamePair>& pool, std::uint64_t mask) {
        std::vector<NamePair> out;
        for (std::size_t k = 0; k < pool.size(); ++k)
            if ((mask >> k & 1u) != 0) out.push_back(pool[k]);
        return out;
    };
    for (std::uint64_t att = 0; att < att_limit; ++att) {
        const auto attacks = select(all_pairs, att);
        for (std::uint64_t sub = 0; sub < sub_limit; ++sub) {
            const auto subargs = select(off_diagonal, sub);
            Saf f;
            try {
                f = Saf::validate(names, attacks, subargs);
            } catch (const ValidationError&) {
                continue;
            }
            if (!visit(f)) return;
        }
    }
}

std::optional<CollisionWitness> find_collision(std::size_t max_args) {
    for (std::size_t n = 1; n <= max_args; ++n) {
        std::map<std::vector<Edge>, std::vector<Saf>> by_projection;
        std::optional<CollisionWitness> witness;
        for_each_canonical_framework(n, [&](const Saf& f) {
            auto& earlier = by_projection[forget(f).attacks()];
            for (const auto& g : earlier)
                if (g.attacks() != f.attacks()) {
                    witness.emplace(g, f);
                    return false;
                }
            earlier.push_back(f);
            return true;
        });
        if (witness) return witness;
    }
    return std::nullopt;
}

std::vector<ReachDivergence> reach_divergence(const Saf& saf) {
    const DungAF projected = forget(saf);
    std::vector<ReachDivergence> out;
    for (ArgIndex x = 0; x < saf.size(); ++x) {
        ArgSet attack = reach_attack(projected, x);
        if (!(attack == saf.reach_structural(x))) out.push_back({x, saf.reach_structural(x), std::move(attack)});
    }
    return out;
}

std::optional<Saf> find_reach_witness(std::size_t max_args) {
    std::optional<Saf> found;
    for (std::size_t n = 1; n <= max_args && !found; ++n)
        for_each_canonical_framework(n, [&](const Saf& f) {
            if (reach_divergence(f).empty()) return true;
            found = f;
            return false;
        });
    return found;
}

}  // namespace saf
