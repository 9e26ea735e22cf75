#include <doctest.h>

#include <random>

#include "saf/oracle.hpp"
#include "support.hpp"

using namespace saf;
using saf::test::Family;
using saf::test::family;
using saf::test::fixture;
using saf::test::names;
using saf::test::set_of;
using Names = std::vector<std::string>;

TEST_CASE("in_conflict lifts both endpoints") {
    const Saf f = fixture("motivating.saf");
    CHECK(in_conflict(f, f.index("a"), f.index("b3")));
    CHECK_FALSE(in_conflict(f, f.index("b2"), f.index("b4")));
    CHECK(in_conflict(f, f.index("b5"), f.index("a")));
    // Not symmetric: nothing in Sub*(b3) attacks a.
    CHECK_FALSE(in_conflict(f, f.index("b3"), f.index("a")));
}

TEST_CASE("conflict_free") {
    const Saf f = fixture("motivating.saf");
    CHECK(conflict_free(f, set_of(f, {"b1", "b2", "b3", "b4", "b5"})));
    CHECK_FALSE(conflict_free(f, set_of(f, {"a", "b4"})));
    CHECK(conflict_free(f, ArgSet(f.size())));
}

TEST_CASE("defends quantifies over the whole closure") {
    const Saf f = fixture("motivating.saf");
    CHECK(defends(f, set_of(f, {"b5"}), f.index("b5")));
    CHECK(defends(f, set_of(f, {"a"}), f.index("a")));
    CHECK_FALSE(defends(f, ArgSet(f.size()), f.index("b2")));
    // a is unattacked by anything in {b1}'s reach; b1 cannot defend itself.
    CHECK_FALSE(defends(f, set_of(f, {"b1"}), f.index("b1")));
}

TEST_CASE("characteristic function values") {
    const Saf f = fixture("motivating.saf");
    CHECK(names(f, characteristic(f, ArgSet(f.size()))).empty());
    CHECK(names(f, characteristic(f, set_of(f, {"b5"}))) == Names{"b1", "b2", "b3", "b4", "b5"});
    CHECK(names(f, characteristic(f, set_of(f, {"a"}))) == Names{"a"});
}

TEST_CASE("grounded") {
    CHECK(family(fixture("motivating.saf"), grounded(fixture("motivating.saf"))) == Family{{}});
    const Saf abc = saf::test::abc();
    CHECK(family(abc, grounded(abc)) == Family{{"a"}});
    const Saf empty = fixture("empty.saf");
    CHECK(family(empty, grounded(empty)) == Family{{}});
}

TEST_CASE("extensions of the motivating chain") {
    const Saf f = fixture("motivating.saf");
    const Family all = {{}, {"a"}, {"b1", "b2", "b3", "b4", "b5"}};
    const Family maximal = {{"a"}, {"b1", "b2", "b3", "b4", "b5"}};
    CHECK(family(f, extensions(f, Semantics::complete)) == all);
    CHECK(family(f, extensions(f, Semantics::preferred)) == maximal);
    CHECK(family(f, extensions(f, Semantics::stable)) == maximal);
    CHECK(extensions(f, Semantics::admissible).extensions.size() == 18);
    CHECK(extensions(f, Semantics::complete).framework_digest == f.digest());
}

TEST_CASE("empty framework") {
    const Saf f = fixture("empty.saf");
    for (Semantics s : kAllSemantics) CHECK(family(f, extensions(f, s)) == Family{{}});
}

TEST_CASE("enumeration bound") {
    std::vector<std::string> many;
    for (int i = 0; i < 21; ++i) many.push_back("x" + std::to_string(i));
    const Saf big = Saf::validate(many, {}, {});
    CHECK_THROWS_AS((void)extensions(big, Semantics::complete), InstanceTooLarge);
    CHECK(extensions(big, Semantics::complete, 21).extensions.size() == 1);
    // Grounded never enumerates.
    CHECK(grounded(big).extensions.front().size() == 21);
}

TEST_CASE("semantics labels round trip") {
    for (Semantics s : kAllSemantics) CHECK(parse_semantics(to_string(s)) == s);
    CHECK(parse_semantics("prf") == Semantics::preferred);
    CHECK_FALSE(parse_semantics("semi-stable").has_value());
}

TEST_CASE("properties on random frameworks") {
    std::mt19937_64 rng(2024);
    for (int round = 0; round < 200; ++round) {
        const Saf f = random_saf(rng, {1, 6, 0.35, 0.25});
        const std::size_t n = f.size();
        const SemanticsIndex idx(f);
        const auto cmp = idx.extensions(Semantics::complete);

        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
            const ArgSet e = ArgSet::from_mask(n, m);
            const ArgSet d = idx.characteristic(e);
            CHECK(f.is_sub_closed(d));
            // Fixpoint characterisation.
            CHECK((idx.conflict_free(e) && d == e) == cmp.contains(e));
            // Monotone against every superset obtained by adding one argument.
            for (ArgIndex x = 0; x < n; ++x) {
                ArgSet bigger = e;
                bigger.insert(x);
                CHECK(d.is_subset_of(idx.characteristic(bigger)));
            }
        }

        const ArgSet g = idx.grounded().extensions.front();
        ArgSet meet = ArgSet::full(n);
        for (const auto& e : cmp.extensions) {
            CHECK(g.is_subset_of(e));
            meet &= e;
        }
        CHECK(meet == g);

        const auto adm = idx.extensions(Semantics::admissible);
        const auto prf = idx.extensions(Semantics::preferred);
        for (const auto& e : cmp.extensions) CHECK(adm.contains(e));
        for (const auto& e : prf.extensions) CHECK(cmp.contains(e));
        for (const auto& e : idx.extensions(Semantics::stable).extensions) CHECK(prf.contains(e));

        CHECK(idx.extensions(Semantics::preferred).extensions == prf.extensions);
    }
}

TEST_CASE("fast path agrees with the oracle on fixtures") {
    for (const Saf& f : saf::test::all_fixtures())
        for (Semantics s : kAllSemantics) CHECK(extensions(f, s).same_family(oracle::oracle_extensions(f, s)));
}
