#include "saf/explanation.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "saf/projection.hpp"

namespace saf {

bool is_justification(const Saf& saf, const ArgSet& e, ArgIndex a, const ArgSet& j) {
    if (!e.contains(a) || !j.is_subset_of(e)) return false;
    if (!saf.is_sub_closed(j)) return false;                 // J1
    if (!saf.sub_closure(a).is_subset_of(j)) return false;  // J2
    bool defended = true;                                    // J3
    saf.sub_closure(a).for_each([&](ArgIndex x) {
        saf.direct_attackers(x).for_each([&](ArgIndex b) {
            if (!defended) return;
            bool countered = false;
            j.for_each([&](ArgIndex c) {
                countered = countered || saf.has_attack(c, b) || saf.direct_targets(c).intersects(saf.sub_closure(b));
            });
            defended = countered;
        });
    });
    return defended;
}

std::vector<ArgSet> minimal_justifications(const Saf& saf, const ArgSet& e, ArgIndex a, std::size_t bound) {
    const ArgSet& required = saf.sub_closure(a);
    if (!e.contains(a) || !required.is_subset_of(e)) return {};
    const auto free = (e - required).members();
    if (free.size() > bound) throw InstanceTooLarge(free.size(), bound);

    std::vector<ArgSet> found;
    // Increasing cardinality: a candidate containing an earlier hit is not minimal.
    for (std::size_t k = 0; k <= free.size(); ++k) {
        ArgSet candidate = required;
        std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t from, std::size_t left) {
            if (left == 0) {
                for (const auto& m : found)
                    if (m.is_subset_of(candidate)) return;
                if (is_justification(saf, e, a, candidate)) found.push_back(candidate);
                return;
            }
            for (std::size_t i = from; i + left <= free.size(); ++i) {
                candidate.insert(free[i]);
                choose(i + 1, left - 1);
                candidate.erase(free[i]);
            }
        };
        choose(0, k);
    }
    canonicalize(found);
    return found;
}

Justification explain(const Saf& saf, Semantics s, const ArgSet& e, ArgIndex a, std::size_t bound) {
    if (!extensions(saf, s, bound).contains(e))
        throw NotAnExtension("set is not a " + std::string(to_string(s)) + " extension");
    if (!e.contains(a)) throw NotAMember("argument '" + saf.name(a) + "' is not in the extension");
    auto minimal = minimal_justifications(saf, e, a, bound);
    if (minimal.empty()) throw NoJustification("no local justification for '" + saf.name(a) + "'");
    auto best = std::min_element(minimal.begin(), minimal.end(), [](const ArgSet& x, const ArgSet& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    return Justification{a, e, *best, true};
}

namespace {

bool same_semantics_everywhere(const Saf& f1, const Saf& f2) {
    for (Semantics s : kAllSemantics)
        if (!extensions(f1, s).same_family(extensions(f2, s))) return false;
    return true;
}

void verify(const ExplanationLossWitness& w) {
    auto fail = [](const char* what) { throw std::logic_error(std::string("explanation-loss witness: ") + what); };
    if (w.first.attacks() != w.second.attacks()) fail("attack relations differ");
    if (!(forget(w.first) == forget(w.second))) fail("projections differ");
    if (w.first == w.second) fail("frameworks are identical");
    if (!extensions(w.first, w.semantics).contains(w.extension) ||
        !extensions(w.second, w.semantics).contains(w.extension))
        fail("extension is not shared");
    if (!w.extension.contains(w.argument)) fail("argument outside the extension");
    if (w.first.sub_closure(w.argument) == w.second.sub_closure(w.argument)) fail("closures coincide");
    if (!same_semantics_everywhere(w.first, w.second)) fail("extension families differ");
    if (w.first_explanation.witness == w.second_explanation.witness) fail("explanations coincide");
}

}  // namespace

ExplanationLossWitness explanation_loss_witness() {
    constexpr Semantics kSemantics = Semantics::complete;
    for (std::size_t n = 1; n <= 3; ++n) {
        std::vector<Saf> seen;
        std::optional<ExplanationLossWitness> found;
        for_each_canonical_framework(n, [&](const Saf& f2) {
            const auto projected = forget(f2);
            for (const auto& f1 : seen) {
                if (f1.attacks() != f2.attacks() || !(forget(f1) == projected)) continue;
                const auto shared = extensions(f1, kSemantics);
                for (const auto& e : shared.extensions) {
                    if (!extensions(f2, kSemantics).contains(e)) continue;
                    for (ArgIndex a : e.members()) {
                        if (f1.sub_closure(a) == f2.sub_closure(a)) continue;
                        ExplanationLossWitness w{f1, f2, kSemantics, e, a, explain(f1, kSemantics, e, a),
                                                 explain(f2, kSemantics, e, a)};
                        verify(w);
                        found = std::move(w);
                        return false;
                    }
                }
            }
            seen.push_back(f2);
            return true;
        });
        if (found) return *found;
    }
    throw std::logic_error("no explanation-loss witness within three arguments");
}

// ---------------------------------------------------------------------------
// Principle report

bool PrincipleReport::all_pass() const noexcept {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const PrincipleVerdict& v) { return v.pass; });
}

namespace {

// Defence straight from the definition, iterating over the attack list.
bool literal_defends(const Saf& saf, const ArgSet& e, ArgIndex a) {
    for (auto [b, x] : saf.attacks()) {
        if (!saf.sub_closure(a).contains(x)) continue;
        bool countered = false;
        for (auto [c, target] : saf.attacks())
            if (e.contains(c) && saf.sub_closure(b).contains(target)) countered = true;
        if (!countered) return false;
    }
    return true;
}

std::string describe(const Saf& saf, std::size_t instance, const ArgSet& e, std::optional<ArgIndex> a) {
    std::string out = "instance " + std::to_string(instance) + ": E={";
    const auto names = saf.names_of(e);
    for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
    out += "}";
    if (a) out += ", a=" + saf.name(*a);
    return out;
}

void record_failure(PrincipleVerdict& v, std::string what) {
    if (v.pass) v.counterexample = std::move(what);
    v.pass = false;
}

}  // namespace

PrincipleReport principle_report(const std::vector<Saf>& corpus, std::size_t bound) {
    PrincipleVerdict separation{"separation_of_conflict_and_structure", true, corpus.size(), std::nullopt,
                                "attacks and subargument edges are stored as independent validated relations; "
                                "neither is derived from the other"};
    PrincipleVerdict defence{"structure_sensitive_defence", true, 0, std::nullopt,
                             "defends() agrees with a definition-literal recomputation"};
    PrincipleVerdict commitment{"commitment_based_admissibility", true, 0, std::nullopt,
                                "every attack on a subargument of an admitted argument is countered"};
    PrincipleVerdict conservative{"conservative_extension", true, 0, std::nullopt,
                                  "sigma(F) = sigma(forget(F)) for all five semantics"};
    PrincipleVerdict justification{"subargument_based_justification", true, 0, std::nullopt,
                                   "every member of every complete extension has a minimal local justification"};

    constexpr std::size_t kExhaustiveDefenceLimit = 12;

    for (std::size_t k = 0; k < corpus.size(); ++k) {
        const Saf& saf = corpus[k];
        const SemanticsIndex index(saf);
        const std::size_t n = saf.size();
        if (n > bound) throw InstanceTooLarge(n, bound);
        const auto admissible = index.extensions(Semantics::admissible, bound);

        auto check_defence = [&](const ArgSet& e) {
            for (ArgIndex a = 0; a < n; ++a) {
                ++defence.checked;
                if (index.defends(e, a) != literal_defends(saf, e, a)) record_failure(defence, describe(saf, k, e, a));
            }
        };
        if (n <= kExhaustiveDefenceLimit) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) check_defence(ArgSet::from_mask(n, mask));
        } else {
            for (const auto& e : admissible.extensions) check_defence(e);
        }

        for (const auto& e : admissible.extensions)
            e.for_each([&](ArgIndex a) {
                ++commitment.checked;
                for (auto [b, x] : saf.attacks()) {
                    if (!saf.sub_closure(a).contains(x)) continue;
                    bool countered = false;
                    e.for_each([&](ArgIndex c) {
                        countered = countered || saf.direct_targets(c).intersects(saf.sub_closure(b));
                    });
                    if (!countered) record_failure(commitment, describe(saf, k, e, a));
                }
            });

        for (Semantics s : kAllSemantics) {
            ++conservative.checked;
            const auto r = check_preservation(saf, s, bound);
            if (!r.equal)
                record_failure(conservative, describe(saf, k, r.counterexample.value_or(ArgSet(n)), std::nullopt) +
                                                 " under " + std::string(to_string(s)));
        }

        for (const auto& e : index.extensions(Semantics::complete, bound).extensions)
            e.for_each([&](ArgIndex a) {
                ++justification.checked;
                const auto minimal = minimal_justifications(saf, e, a, bound);
                const bool ok = !minimal.empty() &&
                                std::all_of(minimal.begin(), minimal.end(),
                                            [&](const ArgSet& j) { return is_justification(saf, e, a, j); });
                if (!ok) record_failure(justification, describe(saf, k, e, a));
            });
    }
    return PrincipleReport{{separation, defence, commitment, conservative, justification}};
}

}  // namespace saf
