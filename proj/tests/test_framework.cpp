#include <doctest.h>

#include "saf/generate.hpp"
#include "support.hpp"

using namespace saf;
using saf::test::fixture;
using saf::test::names;
using saf::test::set_of;
using Names = std::vector<std::string>;

TEST_CASE("validate accepts the motivating chain") {
    const Saf f = fixture("motivating.saf");
    CHECK(f.size() == 6);
    CHECK(f.attacks().size() == 2);
    CHECK(f.subargs().size() == 4);
    CHECK(f.names() == Names{"a", "b1", "b2", "b3", "b4", "b5"});
}

TEST_CASE("validate rejects a self subargument as a cycle") {
    std::vector<NamePair> sub{{"x", "x"}};
    try {
        (void)Saf::validate({"x"}, {}, sub);
        FAIL("expected SubCycle");
    } catch (const SubCycle& e) {
        CHECK(e.cycle() == Names{"x", "x"});
    }
}

TEST_CASE("validate reports a longer cycle as a vertex sequence") {
    std::vector<NamePair> sub{{"p", "q"}, {"q", "r"}, {"r", "p"}};
    try {
        (void)Saf::validate({"p", "q", "r"}, {}, sub);
        FAIL("expected SubCycle");
    } catch (const SubCycle& e) {
        CHECK(e.cycle() == Names{"p", "q", "r", "p"});
    }
}

TEST_CASE("validate rejects non-minimal attacks") {
    std::vector<NamePair> att{{"a", "b1"}, {"a", "b2"}}, sub{{"b1", "b2"}};
    try {
        (void)Saf::validate({"a", "b1", "b2"}, att, sub);
        FAIL("expected NonMinimalAttack");
    } catch (const NonMinimalAttack& e) {
        CHECK(e.attacker() == "a");
        CHECK(e.target() == "b2");
        CHECK(e.subargument() == "b1");
    }
}

TEST_CASE("attack minimality uses the transitive closure") {
    // b1 is only an indirect subargument of b3.
    std::vector<NamePair> att{{"a", "b1"}, {"a", "b3"}}, sub{{"b1", "b2"}, {"b2", "b3"}};
    CHECK_THROWS_AS((void)Saf::validate({"a", "b1", "b2", "b3"}, att, sub), NonMinimalAttack);
}

TEST_CASE("validate rejects undeclared endpoints and bad names") {
    std::vector<NamePair> att{{"a", "zz"}};
    CHECK_THROWS_AS((void)Saf::validate({"a"}, att, {}), UnknownArgument);
    CHECK_THROWS_AS((void)Saf::validate({"a-b"}, {}, {}), InvalidName);
    CHECK_THROWS_AS((void)Saf::validate({""}, {}, {}), InvalidName);
}

TEST_CASE("empty framework and self-attacks are valid") {
    CHECK(Saf::validate({}, {}, {}).size() == 0);
    std::vector<NamePair> att{{"x", "x"}};
    CHECK(Saf::validate({"x"}, att, {}).has_attack(0, 0));
}

TEST_CASE("duplicates are merged silently") {
    std::vector<NamePair> att{{"a", "b"}, {"a", "b"}}, sub{{"b", "c"}, {"b", "c"}};
    const Saf f = Saf::validate({"a", "b", "b", "c", "a"}, att, sub);
    CHECK(f.size() == 3);
    CHECK(f.attacks().size() == 1);
    CHECK(f.subargs().size() == 1);
}

TEST_CASE("sub_closure on the motivating chain") {
    const Saf f = fixture("motivating.saf");
    CHECK(names(f, f.sub_closure(f.index("b5"))) == Names{"b1", "b2", "b3", "b4", "b5"});
    CHECK(names(f, f.sub_closure(f.index("a"))) == Names{"a"});
    CHECK(names(f, f.sub_closure(f.index("b3"))) == Names{"b1", "b2", "b3"});
}

TEST_CASE("reach_structural on the motivating chain") {
    const Saf f = fixture("motivating.saf");
    CHECK(names(f, f.reach_structural(f.index("b3"))) == Names{"b3", "b4", "b5"});
    CHECK(names(f, f.reach_structural(f.index("b5"))) == Names{"b5"});
    CHECK(names(f, f.reach_structural(f.index("b1"))) == Names{"b1", "b2", "b3", "b4", "b5"});
}

TEST_CASE("direct_attackers on the motivating chain") {
    const Saf f = fixture("motivating.saf");
    CHECK(names(f, f.direct_attackers(f.index("b1"))) == Names{"a"});
    CHECK(names(f, f.direct_attackers(f.index("b3"))).empty());
    CHECK(names(f, f.direct_attackers(f.index("a"))) == Names{"b5"});
    CHECK_THROWS_AS((void)f.index("nope"), UnknownArgument);
}

TEST_CASE("closure properties on random frameworks") {
    for (const Saf& f : random_corpus(11, 150)) {
        const std::size_t n = f.size();
        for (ArgIndex x = 0; x < n; ++x) {
            CHECK(f.sub_closure(x).contains(x));
            CHECK(f.reach_structural(x).contains(x));
            for (ArgIndex y = 0; y < n; ++y)
                CHECK(f.sub_closure(x).contains(y) == f.reach_structural(y).contains(x));
            // Closure of any member stays inside.
            f.sub_closure(x).for_each([&](ArgIndex m) { CHECK(f.sub_closure(m).is_subset_of(f.sub_closure(x))); });
        }
    }
}

TEST_CASE("validate is a projection on valid frameworks") {
    for (const Saf& f : random_corpus(12, 100)) {
        std::vector<NamePair> att, sub;
        for (auto [a, b] : f.attacks()) att.emplace_back(f.name(a), f.name(b));
        for (auto [a, b] : f.subargs()) sub.emplace_back(f.name(a), f.name(b));
        CHECK(Saf::validate(f.names(), att, sub) == f);
    }
}

TEST_CASE("digest depends only on content") {
    const Saf f = fixture("motivating.saf");
    CHECK(f.digest() == fixture("motivating.saf").digest());
    CHECK(f.digest() != fixture("core_example.saf").digest());
    CHECK(f.digest().size() == 16);
}

TEST_CASE("ArgSet canonical order is lexicographic on member lists") {
    const ArgSet empty(4), a(4, {0}), ab(4, {0, 1}), b(4, {1});
    CHECK(empty < a);
    CHECK(a < ab);
    CHECK(ab < b);
    std::vector<ArgSet> fam{b, ab, empty, a, b};
    canonicalize(fam);
    CHECK(fam == std::vector<ArgSet>{empty, a, ab, b});
}
