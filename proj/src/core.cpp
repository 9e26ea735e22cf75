#include "saf/core.hpp"

#include "saf/projection.hpp"

namespace saf {

ArgSet CoreDecomposition::to_full(const ArgSet& core_set) const {
    ArgSet out(ch.universe());
    core_set.for_each([&](ArgIndex i) { out.insert(core_members.at(i)); });
    return out;
}

ArgSet CoreDecomposition::to_core(const ArgSet& full_set) const {
    ArgSet out(core_members.size());
    for (std::size_t i = 0; i < core_members.size(); ++i)
        if (full_set.contains(core_members[i])) out.insert(static_cast<ArgIndex>(i));
    return out;
}

CoreDecomposition decompose(const Saf& saf) {
    const std::size_t n = saf.size();
    CoreDecomposition dec;
    dec.ch = ArgSet(n);
    for (auto [a, b] : saf.attacks()) {
        dec.ch.insert(a);
        dec.ch.insert(b);
    }
    dec.sd = dec.ch.complement();
    dec.core_members = dec.ch.members();

    std::vector<ArgIndex> position(n, 0);
    for (std::size_t i = 0; i < dec.core_members.size(); ++i) position[dec.core_members[i]] = static_cast<ArgIndex>(i);

    const DungAF projected = forget(saf);
    std::vector<Edge> core_attacks;
    for (auto [a, b] : projected.attacks())
        if (dec.ch.contains(a) && dec.ch.contains(b)) core_attacks.emplace_back(position[a], position[b]);
    dec.core = DungAF::from_edges(ArgumentTable(saf.table().names_of(dec.ch)), std::move(core_attacks));
    return dec;
}

ArgSet lift(const Saf& saf, const CoreDecomposition& dec, const ArgSet& e) {
    if (!e.is_subset_of(dec.ch)) throw NotACoreSubset("lift requires a subset of the conflict-handling arguments");
    ArgSet out(saf.size());
    for (ArgIndex a = 0; a < saf.size(); ++a)
        if ((saf.sub_closure(a) & dec.ch).is_subset_of(e)) out.insert(a);
    return out;
}

ArgSet lift(const Saf& saf, const ArgSet& e) { return lift(saf, decompose(saf), e); }

namespace {

ExtensionSet lifted_family(const Saf& saf, const CoreDecomposition& dec, Semantics s, std::size_t bound) {
    ExtensionSet out{s, {}, saf.digest()};
    for (const auto& e : dung_extensions(dec.core, s, bound).extensions)
        out.extensions.push_back(lift(saf, dec, dec.to_full(e)));
    canonicalize(out.extensions);
    return out;
}

std::optional<ArgSet> symmetric_witness(const ExtensionSet& a, const ExtensionSet& b) {
    for (const auto& e : a.extensions)
        if (!b.contains(e)) return e;
    for (const auto& e : b.extensions)
        if (!a.contains(e)) return e;
    return std::nullopt;
}

}  // namespace

ExtensionSet core_extensions(const Saf& saf, Semantics s, std::size_t bound) {
    return lifted_family(saf, decompose(saf), s, bound);
}

CoreAgreement compare_with_core(const Saf& saf, Semantics s, std::size_t bound) {
    const auto direct = extensions(saf, s, bound);
    const auto lifted = core_extensions(saf, s, bound);
    CoreAgreement out{s, direct.same_family(lifted), std::nullopt};
    if (!out.equal) out.counterexample = symmetric_witness(direct, lifted);
    return out;
}

CoreFirstReport check_core_first(const Saf& saf, std::size_t bound) {
    const auto dec = decompose(saf);
    CoreFirstReport report;

    const auto direct = extensions(saf, Semantics::complete, bound);
    const auto lifted = lifted_family(saf, dec, Semantics::complete, bound);
    report.complete_equal = direct.same_family(lifted);
    if (!report.complete_equal) report.complete_counterexample = symmetric_witness(direct, lifted);

    report.grounded_direct = grounded(saf).extensions.front();
    const auto core_grounded = dung_extensions(dec.core, Semantics::grounded, bound).extensions.front();
    report.grounded_lifted = lift(saf, dec, dec.to_full(core_grounded));
    report.grounded_equal = report.grounded_direct == report.grounded_lifted;
    return report;
}

}  // namespace saf
