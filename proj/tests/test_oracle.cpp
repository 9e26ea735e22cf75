#include <doctest.h>

#include "saf/oracle.hpp"
#include "saf/projection.hpp"
#include "support.hpp"

using namespace saf;
using saf::oracle::oracle_dung;
using saf::oracle::oracle_extensions;
using saf::test::Family;
using saf::test::family;
using saf::test::fixture;

namespace {
const Family kChainComplete = {{}, {"a"}, {"b1", "b2", "b3", "b4", "b5"}};
const Family kChainPreferred = {{"a"}, {"b1", "b2", "b3", "b4", "b5"}};
}  // namespace

TEST_CASE("oracle: motivating chain under every semantics") {
    const Saf f = fixture("motivating.saf");
    CHECK(family(f, oracle_extensions(f, Semantics::complete)) == kChainComplete);
    CHECK(family(f, oracle_extensions(f, Semantics::preferred)) == kChainPreferred);
    CHECK(family(f, oracle_extensions(f, Semantics::stable)) == kChainPreferred);
    CHECK(family(f, oracle_extensions(f, Semantics::grounded)) == Family{{}});
    // b5 is admissible on its own; the subargument closure is not required.
    const auto adm = family(f, oracle_extensions(f, Semantics::admissible));
    CHECK(adm.size() == 18);
    CHECK(std::find(adm.begin(), adm.end(), std::vector<std::string>{"b5"}) != adm.end());
    CHECK(std::find(adm.begin(), adm.end(), std::vector<std::string>{"b1", "b5"}) != adm.end());
}

TEST_CASE("oracle: empty framework yields the empty extension everywhere") {
    const Saf f = fixture("empty.saf");
    for (Semantics s : kAllSemantics) CHECK(family(f, oracle_extensions(f, s)) == Family{{}});
}

TEST_CASE("oracle: core example grounded") {
    const Saf f = saf::test::abc();
    CHECK(family(f, oracle_extensions(f, Semantics::grounded)) == Family{{"a"}});
    CHECK(family(f, oracle_extensions(f, Semantics::complete)) == Family{{"a"}});
}

TEST_CASE("oracle_dung: textbook cases") {
    const Saf f = fixture("motivating.saf");
    const DungAF g = forget(f);
    CHECK(family(g, oracle_dung(g, Semantics::preferred)) == kChainPreferred);

    std::vector<NamePair> self{{"x", "x"}};
    const DungAF selfish = DungAF::make({"x"}, self);
    CHECK(oracle_dung(selfish, Semantics::stable).extensions.empty());

    std::vector<NamePair> cycle{{"a", "b"}, {"b", "a"}};
    const DungAF two = DungAF::make({"a", "b"}, cycle);
    CHECK(family(two, oracle_dung(two, Semantics::grounded)) == Family{{}});
    CHECK(family(two, oracle_dung(two, Semantics::preferred)) == Family{{"a"}, {"b"}});
}

TEST_CASE("oracle: hard cap") {
    std::vector<std::string> many;
    for (int i = 0; i < 17; ++i) many.push_back("x" + std::to_string(i));
    const Saf big = Saf::validate(many, {}, {});
    CHECK_THROWS_AS((void)oracle_extensions(big, Semantics::complete), InstanceTooLarge);
    CHECK_THROWS_AS((void)oracle_dung(forget(big), Semantics::complete), InstanceTooLarge);
}
