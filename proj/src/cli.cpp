#include "saf/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include "saf/core.hpp"
#include "saf/explanation.hpp"
#include "saf/generate.hpp"
#include "saf/io.hpp"
#include "saf/oracle.hpp"
#include "saf/projection.hpp"
#include "saf/semantics.hpp"
#include "saf/version.hpp"

namespace saf::cli {

namespace {

using nlohmann::json;

/// Raised for command lines that parse but make no sense.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a checked property fails; the message is the counterexample.
class PropertyViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::size_t enumeration_bound() {
    const char* raw = std::getenv("SAF_ENUM_BOUND");
    if (raw == nullptr || *raw == '\0') return kDefaultEnumerationBound;
    char* end = nullptr;
    const unsigned long long value = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || value == 0) throw UsageError("SAF_ENUM_BOUND must be a positive integer");
    return static_cast<std::size_t>(value);
}

Semantics semantics_from(const std::string& text) {
    if (auto s = parse_semantics(text)) return *s;
    throw UsageError("unknown semantics '" + text + "'");
}

json names_json(const ArgumentTable& table, const ArgSet& set) { return table.names_of(set); }

json family_json(const ArgumentTable& table, const ExtensionSet& ext) {
    json out = json::array();
    for (const auto& e : ext.extensions) out.push_back(names_json(table, e));
    return out;
}

json edges_json(const ArgumentTable& table, const std::vector<Edge>& edges) {
    json out = json::array();
    for (auto [a, b] : edges) out.push_back({table.name(a), table.name(b)});
    return out;
}

json saf_json(const Saf& f) {
    return {{"arguments", f.names()},
            {"attacks", edges_json(f.table(), f.attacks())},
            {"subargs", edges_json(f.table(), f.subargs())}};
}

json dung_json(const DungAF& af) {
    return {{"arguments", af.names()}, {"attacks", edges_json(af.table(), af.attacks())}};
}

std::string brace(const std::vector<std::string>& names) {
    std::string out = "{";
    for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
    return out + "}";
}

std::string brace(const ArgumentTable& table, const ArgSet& set) { return brace(table.names_of(set)); }

void print_family(std::ostream& out, const ArgumentTable& table, const ExtensionSet& ext) {
    out << to_string(ext.semantics) << " extensions (" << ext.extensions.size() << "):\n";
    for (const auto& e : ext.extensions) out << "  " << brace(table, e) << '\n';
}

std::vector<std::string> split_names(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ',')) {
        const auto first = cur.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        const auto last = cur.find_last_not_of(" \t");
        out.push_back(cur.substr(first, last - first + 1));
    }
    return out;
}

struct Options {
    bool json = false;
    std::string file;
    std::string semantics;
    std::string mode = "fast";
    std::string arg;
    std::string extension;
    std::string kind;
    std::size_t max_args = 3;
    bool principles = false;
    std::size_t random = 0;
    std::uint64_t seed = 0;
};

class Runner {
public:
    Runner(const Options& opt, std::ostream& out, std::ostream& err) : opt_(opt), out_(out), err_(err) {}

    int emit(json body) {
        body["version"] = kVersion;
        out_ << body.dump(2) << '\n';
        return kSuccess;
    }

    json envelope(const char* command, const std::optional<Saf>& input, std::optional<Semantics> s) {
        json body;
        body["command"] = command;
        body["input_digest"] = input ? json(input->digest()) : json(nullptr);
        body["semantics"] = s ? json(std::string(to_string(*s))) : json(nullptr);
        return body;
    }

    Saf load() { return io::load_saf(opt_.file); }

    int validate() {
        const Saf f = load();
        if (opt_.json) {
            auto body = envelope("validate", f, std::nullopt);
            body["report"] = {{"valid", true},
                              {"arguments", f.size()},
                              {"attacks", f.attacks().size()},
                              {"subargs", f.subargs().size()}};
            return emit(std::move(body));
        }
        out_ << "valid: " << f.size() << " arguments, " << f.attacks().size() << " attacks, " << f.subargs().size()
             << " subargument edges\n";
        return kSuccess;
    }

    int solve() {
        const Saf f = load();
        const Semantics s = semantics_from(opt_.semantics);
        const std::size_t bound = enumeration_bound();
        ExtensionSet result;
        if (opt_.mode == "fast") {
            result = extensions(f, s, bound);
        } else if (opt_.mode == "oracle") {
            result = oracle::oracle_extensions(f, s);
        } else if (opt_.mode == "both") {
            result = extensions(f, s, bound);
            const auto reference = oracle::oracle_extensions(f, s);
            if (!result.same_family(reference)) {
                for (const auto& e : result.extensions)
                    if (!reference.contains(e))
                        throw PropertyViolation("fast solver reports " + brace(f.table(), e) + ", oracle does not");
                for (const auto& e : reference.extensions)
                    if (!result.contains(e))
                        throw PropertyViolation("oracle reports " + brace(f.table(), e) + ", fast solver does not");
            }
        } else {
            throw UsageError("unknown mode '" + opt_.mode + "'");
        }
        if (opt_.json) {
            auto body = envelope("solve", f, s);
            body["extensions"] = family_json(f.table(), result);
            return emit(std::move(body));
        }
        print_family(out_, f.table(), result);
        return kSuccess;
    }

    int project() {
        const Saf f = load();
        const DungAF projected = forget(f);
        if (opt_.json) {
            auto body = envelope("project", f, std::nullopt);
            body["report"] = dung_json(projected);
            return emit(std::move(body));
        }
        out_ << io::serialize(projected);
        return kSuccess;
    }

    int core() {
        const Saf f = load();
        const auto dec = decompose(f);
        std::optional<Semantics> s;
        if (!opt_.semantics.empty()) s = semantics_from(opt_.semantics);
        std::optional<ExtensionSet> lifted;
        if (s) lifted = core_extensions(f, *s, enumeration_bound());

        if (opt_.json) {
            auto body = envelope("core", f, s);
            json report = {{"ch", names_json(f.table(), dec.ch)},
                           {"sd", names_json(f.table(), dec.sd)},
                           {"core_attacks", edges_json(dec.core.table(), dec.core.attacks())}};
            if (lifted) report["extensions"] = family_json(f.table(), *lifted);
            body["report"] = std::move(report);
            return emit(std::move(body));
        }
        out_ << "conflict-handling: " << brace(f.table(), dec.ch) << '\n';
        out_ << "status-dependent:  " << brace(f.table(), dec.sd) << '\n';
        out_ << "core attacks:";
        for (auto [a, b] : dec.core.attacks()) out_ << " (" << dec.core.name(a) << ',' << dec.core.name(b) << ')';
        out_ << '\n';
        if (lifted) {
            out_ << "lifted ";
            print_family(out_, f.table(), *lifted);
        }
        return kSuccess;
    }

    int reach() {
        const Saf f = load();
        const ArgIndex x = f.index(opt_.arg);
        const ArgSet structural = f.reach_structural(x);
        const ArgSet attack = reach_attack(forget(f), x);
        if (opt_.json) {
            auto body = envelope("reach", f, std::nullopt);
            body["report"] = {{"argument", opt_.arg},
                              {"structural", names_json(f.table(), structural)},
                              {"attack", names_json(f.table(), attack)},
                              {"diverges", !(structural == attack)}};
            return emit(std::move(body));
        }
        out_ << "structural reach of " << opt_.arg << ": " << brace(f.table(), structural) << '\n';
        out_ << "attack reach of " << opt_.arg << ":     " << brace(f.table(), attack) << '\n';
        return kSuccess;
    }

    int explain_cmd() {
        const Saf f = load();
        const Semantics s = semantics_from(opt_.semantics);
        const ArgSet e = f.make_set(split_names(opt_.extension));
        const ArgIndex a = f.index(opt_.arg);
        const Justification j = explain(f, s, e, a, enumeration_bound());
        if (opt_.json) {
            auto body = envelope("explain", f, s);
            body["report"] = {{"argument", opt_.arg},
                              {"extension", names_json(f.table(), e)},
                              {"witness", names_json(f.table(), j.witness)},
                              {"minimal", j.minimal}};
            return emit(std::move(body));
        }
        out_ << "justification of " << opt_.arg << " in " << brace(f.table(), e) << ": "
             << brace(f.table(), j.witness) << '\n';
        return kSuccess;
    }

    int witness() {
        if (opt_.kind == "collision") return collision_witness();
        if (opt_.kind == "reach") return reach_witness();
        if (opt_.kind == "explanation") return explanation_witness();
        throw UsageError("unknown witness kind '" + opt_.kind + "'");
    }

    int collision_witness() {
        const auto w = find_collision(opt_.max_args);
        if (!w) {
            err_ << "no collision witness with at most " << opt_.max_args << " arguments\n";
            return kPropertyViolation;
        }
        if (opt_.json) {
            auto body = envelope("witness", std::nullopt, std::nullopt);
            body["witness"] = {{"kind", "collision"},
                               {"first", saf_json(w->first())},
                               {"second", saf_json(w->second())},
                               {"projection", dung_json(w->projected())}};
            return emit(std::move(body));
        }
        out_ << "% first framework\n" << io::serialize(w->first());
        out_ << "% second framework\n" << io::serialize(w->second());
        out_ << "% common projection\n" << io::serialize(w->projected());
        return kSuccess;
    }

    int reach_witness() {
        const auto f = find_reach_witness(opt_.max_args);
        if (!f) {
            err_ << "no reach divergence with at most " << opt_.max_args << " arguments\n";
            return kPropertyViolation;
        }
        const auto divergence = reach_divergence(*f);
        if (opt_.json) {
            json rows = json::array();
            for (const auto& d : divergence)
                rows.push_back({{"argument", f->name(d.argument)},
                                {"structural", names_json(f->table(), d.structural)},
                                {"attack", names_json(f->table(), d.attack)}});
            auto body = envelope("witness", std::nullopt, std::nullopt);
            body["witness"] = {{"kind", "reach"}, {"framework", saf_json(*f)}, {"divergence", rows}};
            return emit(std::move(body));
        }
        out_ << "% framework\n" << io::serialize(*f);
        for (const auto& d : divergence)
            out_ << "% " << f->name(d.argument) << ": structural " << brace(f->table(), d.structural) << ", attack "
                 << brace(f->table(), d.attack) << '\n';
        return kSuccess;
    }

    int explanation_witness() {
        const auto w = explanation_loss_witness();
        const auto& t = w.first.table();
        if (opt_.json) {
            auto body = envelope("witness", std::nullopt, w.semantics);
            body["witness"] = {{"kind", "explanation"},
                               {"first", saf_json(w.first)},
                               {"second", saf_json(w.second)},
                               {"projection", dung_json(forget(w.first))},
                               {"extension", names_json(t, w.extension)},
                               {"argument", t.name(w.argument)},
                               {"first_explanation", names_json(t, w.first_explanation.witness)},
                               {"second_explanation", names_json(t, w.second_explanation.witness)}};
            return emit(std::move(body));
        }
        out_ << "% first framework\n" << io::serialize(w.first);
        out_ << "% second framework\n" << io::serialize(w.second);
        out_ << "% shared " << to_string(w.semantics) << " extension " << brace(t, w.extension) << ", argument "
             << t.name(w.argument) << '\n';
        out_ << "% explanation in first:  " << brace(t, w.first_explanation.witness) << '\n';
        out_ << "% explanation in second: " << brace(t, w.second_explanation.witness) << '\n';
        return kSuccess;
    }

    int check() {
        if (!opt_.principles) throw UsageError("check requires --principles");
        const Saf f = load();
        std::vector<Saf> corpus{f};
        if (opt_.random > 0) {
            auto extra = random_corpus(opt_.seed, opt_.random);
            corpus.insert(corpus.end(), extra.begin(), extra.end());
        }
        const auto report = principle_report(corpus, enumeration_bound());
        if (opt_.json) {
            json rows = json::array();
            for (const auto& v : report.verdicts)
                rows.push_back({{"name", v.name},
                                {"pass", v.pass},
                                {"checked", v.checked},
                                {"counterexample", v.counterexample ? json(*v.counterexample) : json(nullptr)},
                                {"note", v.note}});
            auto body = envelope("check", f, std::nullopt);
            body["report"] = {{"instances", corpus.size()}, {"seed", opt_.seed}, {"principles", rows}};
            emit(std::move(body));
        } else {
            for (const auto& v : report.verdicts) {
                out_ << (v.pass ? "pass " : "FAIL ") << v.name << " (" << v.checked << " checked)";
                if (v.counterexample) out_ << ": " << *v.counterexample;
                out_ << '\n';
            }
        }
        if (!report.all_pass()) {
            for (const auto& v : report.verdicts)
                if (!v.pass) err_ << "principle violated: " << v.name << ": " << v.counterexample.value_or("") << '\n';
            return kPropertyViolation;
        }
        return kSuccess;
    }

private:
    const Options& opt_;
    std::ostream& out_;
    std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Solver for argumentation frameworks with subarguments", "saf"};
    app.fallthrough();
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json, "Emit one JSON object");

    const std::vector<std::string> semantics_names = {"admissible", "complete", "grounded", "preferred", "stable"};

    auto* validate = app.add_subcommand("validate", "Check that FILE is a valid framework");
    validate->add_option("file", opt.file)->required();

    auto* solve = app.add_subcommand("solve", "Compute extensions");
    solve->add_option("file", opt.file)->required();
    solve->add_option("--semantics", opt.semantics)->required()->check(CLI::IsMember(semantics_names));
    solve->add_option("--mode", opt.mode)->check(CLI::IsMember({"fast", "oracle", "both"}));

    auto* project = app.add_subcommand("project", "Emit the forgetful projection as an attack-only document");
    project->add_option("file", opt.file)->required();

    auto* core = app.add_subcommand("core", "Conflict-handling decomposition and lifted extensions");
    core->add_option("file", opt.file)->required();
    core->add_option("--semantics", opt.semantics)->check(CLI::IsMember(semantics_names));

    auto* reach = app.add_subcommand("reach", "Structural and attack reach of one argument");
    reach->add_option("file", opt.file)->required();
    reach->add_option("--arg", opt.arg)->required();

    auto* explain = app.add_subcommand("explain", "Canonical minimal justification");
    explain->add_option("file", opt.file)->required();
    explain->add_option("--semantics", opt.semantics)->required()->check(CLI::IsMember(semantics_names));
    explain->add_option("--extension", opt.extension, "Comma-separated members")->required();
    explain->add_option("--arg", opt.arg)->required();

    auto* witness = app.add_subcommand("witness", "Search for a witness framework");
    witness->add_option("--kind", opt.kind)->required()->check(CLI::IsMember({"collision", "reach", "explanation"}));
    witness->add_option("--max-args", opt.max_args)->check(CLI::Range(1, 4));

    auto* check = app.add_subcommand("check", "Principle compliance report");
    check->add_option("file", opt.file)->required();
    check->add_flag("--principles", opt.principles);
    check->add_option("--random", opt.random, "Add N seeded random frameworks to the corpus");
    check->add_option("--seed", opt.seed);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    Runner runner(opt, out, err);
    try {
        if (validate->parsed()) return runner.validate();
        if (solve->parsed()) return runner.solve();
        if (project->parsed()) return runner.project();
        if (core->parsed()) return runner.core();
        if (reach->parsed()) return runner.reach();
        if (explain->parsed()) return runner.explain_cmd();
        if (witness->parsed()) return runner.witness();
        if (check->parsed()) return runner.check();
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const PropertyViolation& e) {
        err << "property violation: " << e.what() << '\n';
        return kPropertyViolation;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kUsageError;
}

}  // namespace saf::cli
