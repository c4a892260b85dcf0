#include <gtest/gtest.h>

#include <algorithm>

#include "saseval/dsl/loader.hpp"
#include "saseval/dsl/lower.hpp"
#include "saseval/dsl/parser.hpp"
#include "saseval/dsl/printer.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

namespace saseval {
namespace {

using dsl::parse;

const Diagnostic* find_rule(const std::vector<Diagnostic>& diags, const std::string& rule) {
  auto it = std::find_if(diags.begin(), diags.end(),
                         [&](const Diagnostic& d) { return d.rule == rule; });
  return it == diags.end() ? nullptr : &*it;
}

constexpr const char* kFloodingAttack = R"(threat T2.1.4 {
  asset: GW
  description: "An attacker alters the functioning of the Vehicle Gateway"
  stride: DenialOfService
}

attack AD20 {
  title: "Attacker tries to overload the ECU by packet flooding."
  goals: [SG01, SG02, SG03]
  interface: OBU_RSU
  threat: T2.1.4
  attack_type: Disable
  precondition: "Vehicle is approaching the construction side"
  expected_measures: "Message counter for broken messages"
  success: "Shutdown of service"
  fail: "Security control identifies unwanted sender enforce change of frequency"
}
)";

// Library part that the attack block above refers to.
constexpr const char* kFloodingContext = R"(asset GW { name: "Vehicle Gateway" group: [Hardware] types: [] }
goal SG01 { title: "one" }
goal SG02 { title: "two" }
goal SG03 { title: "three" }
)";

TEST(Lexer, TokensAndEscapes) {
  auto r = dsl::lex("attack AD1 { n: -12 s: \"a\\\"b\\\\c\\nd\" l: [x, y] } # tail");
  ASSERT_TRUE(r.diagnostics.empty());
  std::vector<dsl::TokenKind> kinds;
  for (const auto& t : r.tokens) kinds.push_back(t.kind);
  using K = dsl::TokenKind;
  EXPECT_EQ(kinds, (std::vector{K::Ident, K::Ident, K::LBrace, K::Ident, K::Colon, K::Integer,
                                K::Ident, K::Colon, K::String, K::Ident, K::Colon, K::LBracket,
                                K::Ident, K::Comma, K::Ident, K::RBracket, K::RBrace, K::End}));
  EXPECT_EQ(r.tokens[5].integer, -12);
  EXPECT_EQ(r.tokens[8].text, "a\"b\\c\nd");
  EXPECT_EQ(r.tokens[1].text, "AD1");
  EXPECT_EQ(r.tokens[1].span.column, 8u);
}

TEST(Lexer, Errors) {
  for (const char* text : {"\"open", "\"bad \\q escape\"", "x: 2.1.4", "x: @", "x: 99999999999999999999"}) {
    auto r = dsl::lex(text);
    ASSERT_FALSE(r.diagnostics.empty()) << text;
    EXPECT_EQ(r.diagnostics[0].rule, "LexError") << text;
    EXPECT_TRUE(testing::span_in_bounds(text, *r.diagnostics[0].span)) << text;
  }
  auto numeric = dsl::lex("threat 2.1.4 {");
  ASSERT_FALSE(numeric.diagnostics.empty());
  EXPECT_NE(numeric.diagnostics[0].hint.find("start with a letter"), std::string::npos);
}

TEST(Parser, EmptyInput) {
  for (const char* text : {"", "   \n\n", "# only a comment\n"}) {
    auto doc = parse(text);
    ASSERT_TRUE(doc.ok()) << text;
    EXPECT_TRUE(doc->blocks.empty());
    auto p = dsl::lower(*doc);
    ASSERT_TRUE(p.ok());
    EXPECT_TRUE(p->empty());
  }
}

TEST(Parser, FloodingAttackBlock) {
  auto doc = parse(kFloodingAttack);
  ASSERT_TRUE(doc.ok());
  ASSERT_EQ(doc->blocks.size(), 2u);
  const auto& ad = doc->blocks[1];
  EXPECT_EQ(ad.kind, "attack");
  EXPECT_EQ(ad.id, "AD20");
  const auto* goals = ad.find("goals");
  ASSERT_NE(goals, nullptr);
  ASSERT_EQ(goals->value.kind, dsl::Value::Kind::List);
  ASSERT_EQ(goals->value.items.size(), 3u);
  EXPECT_EQ(goals->value.items[2].text, "SG03");

  auto lowered = dsl::lower(std::vector{*parse(kFloodingContext), *doc});
  ASSERT_TRUE(lowered.ok()) << format_diagnostic(lowered.diagnostics.at(0));
  const auto& a = lowered->attacks.at("AD20");
  EXPECT_EQ(a.goals, (std::vector<std::string>{"SG01", "SG02", "SG03"}));
  EXPECT_EQ(a.attack_type, AttackType::Disable);
  EXPECT_TRUE(a.adopted());
}

TEST(Parser, MissingClosingBraceAtEndOfFile) {
  std::string text = kFloodingAttack;
  text.erase(text.rfind('}'));
  auto doc = parse(text, "f.saseval");
  ASSERT_FALSE(doc.ok());
  ASSERT_FALSE(doc.diagnostics.empty());
  const auto& d = doc.diagnostics[0];
  EXPECT_EQ(d.rule, "ParseError");
  EXPECT_NE(d.message.find("end of file"), std::string::npos);
  ASSERT_TRUE(d.span);
  EXPECT_TRUE(testing::span_in_bounds(text, *d.span));
}

TEST(Parser, MissingClosingBraceBeforeNextBlock) {
  auto doc = parse("function F1 { name: \"a\"\nfunction F2 { name: \"b\" }\n");
  ASSERT_FALSE(doc.ok());
  ASSERT_EQ(doc.diagnostics.size(), 1u);
  EXPECT_EQ(doc.diagnostics[0].span->line, 2u);
}

TEST(Parser, RecoversAndReportsIndependentErrors) {
  // Three broken blocks separated by good ones.
  const std::string text =
      "function F1 { name \"a\" }\n"
      "function F2 { name: \"b\" }\n"
      "function F3 { name: : }\n"
      "function F4 { name: \"d\" }\n"
      "function F5 { name: [a b] }\n"
      "function F6 { name: \"f\" }\n";
  auto doc = parse(text);
  ASSERT_FALSE(doc.ok());
  ASSERT_EQ(doc.diagnostics.size(), 3u);
  EXPECT_EQ(doc.diagnostics[0].span->line, 1u);
  EXPECT_EQ(doc.diagnostics[1].span->line, 3u);
  EXPECT_EQ(doc.diagnostics[2].span->line, 5u);
}

TEST(Parser, DuplicateKeyAndNesting) {
  auto dup = parse("function F1 { name: \"a\" name: \"b\" }");
  ASSERT_FALSE(dup.ok());
  EXPECT_NE(find_rule(dup.diagnostics, "DuplicateKey"), nullptr);

  EXPECT_FALSE(parse("asset A { subscenario s { title: \"x\" } }").ok());
  EXPECT_FALSE(parse("scenario S { subscenario s { subscenario t { } } }").ok());
  auto ok = parse("scenario S { title: \"x\" subscenario s1 { title: \"y\" } }");
  ASSERT_TRUE(ok.ok());
  EXPECT_EQ(ok->blocks[0].children.size(), 1u);
}

TEST(Lower, OutOfRangeExposurePointsAtLiteral) {
  const std::string text =
      "function FN1 { name: \"f\" }\n"
      "hara R1 {\n"
      "  function: FN1\n"
      "  failure_mode: No\n"
      "  hazard: \"h\"\n"
      "  e: 5\n"
      "  s: 3\n"
      "  c: 3\n"
      "}\n";
  auto p = dsl::lower(*parse(text, "h.saseval"));
  ASSERT_FALSE(p.ok());
  const auto* d = find_rule(p.diagnostics, "BadIntRange");
  ASSERT_NE(d, nullptr);
  ASSERT_TRUE(d->span);
  EXPECT_EQ(d->span->line, 6u);
  EXPECT_EQ(d->span->column, 6u);
  EXPECT_EQ(d->span->file, "h.saseval");
  EXPECT_EQ(format_diagnostic(*d).rfind("h.saseval:6:6: error:", 0), 0u);
}

TEST(Lower, DanglingGoalPointsAtReference) {
  std::string text = std::string(kFloodingContext) + kFloodingAttack;
  const std::string needle = "SG03]";
  text.replace(text.find(needle), 4, "SG99");
  auto p = dsl::lower(*parse(text));
  ASSERT_FALSE(p.ok());
  const auto* d = find_rule(p.diagnostics, "DanglingReference");
  ASSERT_NE(d, nullptr);
  EXPECT_EQ(d->entity, "AD20");
  EXPECT_EQ(d->target, "SG99");
  ASSERT_TRUE(d->span);
  EXPECT_TRUE(testing::span_in_bounds(text, *d->span));
  EXPECT_EQ(text.substr(testing::offset_of(text, d->span->line, d->span->column), 4), "SG99");
}

TEST(Lower, FieldErrors) {
  auto rules = [](const char* text) {
    std::vector<std::string> out;
    for (const auto& d : dsl::lower(*parse(text)).diagnostics) out.push_back(d.rule);
    return out;
  };
  EXPECT_EQ(rules("function F { }"), std::vector<std::string>{"MissingKey"});
  EXPECT_EQ(rules("function F { name: 3 }"), std::vector<std::string>{"BadValueType"});
  EXPECT_EQ(rules("function F { name: \"n\" colour: red }"), std::vector<std::string>{"UnknownKey"});
  EXPECT_EQ(rules("asset A { name: \"n\" group: [Plastic] types: [] }"),
            std::vector<std::string>{"BadEnumValue"});
  EXPECT_EQ(rules("function F { name: \"f\" }\n"
                  "hara R { function: F failure_mode: No hazard: \"\" rating: NA e: 1 s: 1 c: 1 }"),
            std::vector<std::string>{"ConflictingKeys"});
}

TEST(Lower, DroppedBlocksDoNotCascade) {
  // The goal block is malformed, so the reference to it must not be reported too.
  auto p = dsl::lower(*parse(
      "goal SG1 { title: 5 }\n"
      "function F { name: \"f\" }\n"
      "hara R { function: F failure_mode: No hazard: \"h\" e: 1 s: 1 c: 1 goal: SG1 }\n"));
  ASSERT_FALSE(p.ok());
  ASSERT_EQ(p.diagnostics.size(), 1u);
  EXPECT_EQ(p.diagnostics[0].rule, "BadValueType");
}

TEST(Lower, NotApplicableRating) {
  auto p = dsl::lower(*parse(
      "function F { name: \"f\" }\nhara R { function: F failure_mode: More hazard: \"\" rating: NA }"));
  ASSERT_TRUE(p.ok());
  EXPECT_FALSE(p->hara.at("R").rating.has_value());
  EXPECT_EQ(p->hara.at("R").failure_mode, FailureMode::More);
}

TEST(Loader, SplitFilesEqualMergedFile) {
  const auto dir = testing::fixture_dir("uc2");
  std::vector<dsl::SourceFile> split;
  std::string merged;
  for (const auto& path : dsl::project_files(dir)) {
    split.push_back({path.filename().string(), dsl::read_file(path)});
    merged += split.back().text + "\n";
  }
  ASSERT_EQ(split.size(), 2u);
  auto a = dsl::load_sources(split);
  auto b = dsl::load_sources({{"all.saseval", merged}});
  ASSERT_TRUE(a.project);
  ASSERT_TRUE(b.project);
  EXPECT_EQ(*a.project, *b.project);
  EXPECT_EQ(a.span_of("attack", "AD08")->file, "attacks.saseval");
}

TEST(Loader, DuplicateAcrossFilesNamesBothLocations) {
  auto loaded = dsl::load_sources(
      {{"a.saseval", "function F { name: \"a\" }"}, {"b.saseval", "function F { name: \"b\" }"}});
  ASSERT_FALSE(loaded.project);
  const auto* d = find_rule(loaded.diagnostics, "DuplicateId");
  ASSERT_NE(d, nullptr);
  EXPECT_EQ(d->span->file, "b.saseval");
}

TEST(Printer, EmptyProjectPrintsNothing) { EXPECT_EQ(dsl::print(Project{}), ""); }

TEST(Printer, CanonicalFormIsFixpoint) {
  for (const char* name : {"uc1", "uc2"}) {
    const Project p = testing::load_fixture(name);
    const std::string once = dsl::print(p);
    auto reparsed = dsl::lower(*parse(once));
    ASSERT_TRUE(reparsed.ok()) << name;
    EXPECT_EQ(*reparsed, p) << name;
    EXPECT_EQ(dsl::print(*reparsed), once) << name;
  }
}

TEST(Printer, Deterministic) {
  const Project p = testing::load_fixture("uc1");
  EXPECT_EQ(dsl::print(p), dsl::print(p));
}

TEST(Printer, QuotesSpecialCharacters) {
  EXPECT_EQ(dsl::quote("a\"b\\c\nd"), "\"a\\\"b\\\\c\\nd\"");
}

TEST(RoundTrip, RandomProjects) {
  testing::Rng rng(2024);
  for (int i = 0; i < 300; ++i) {
    const Project p = testing::random_project(rng);
    const std::string text = dsl::print(p);
    auto doc = parse(text);
    ASSERT_TRUE(doc.ok()) << text;
    auto back = dsl::lower(*doc);
    ASSERT_TRUE(back.ok()) << format_diagnostic(back.diagnostics.at(0)) << "\n" << text;
    ASSERT_EQ(*back, p) << text;
  }
}

TEST(RoundTrip, SingleTokenCorruptionsAreDiagnosed) {
  testing::Rng rng(99);
  for (int i = 0; i < 300; ++i) {
    const std::string text = dsl::print(testing::random_project(rng));
    const std::string bad = testing::corrupt_one_token(text, rng);
    auto doc = parse(bad);
    ASSERT_FALSE(doc.ok()) << bad;
    ASSERT_FALSE(doc.diagnostics.empty());
    for (const auto& d : doc.diagnostics) {
      ASSERT_TRUE(d.span) << bad;
      EXPECT_TRUE(testing::span_in_bounds(bad, *d.span)) << format_diagnostic(d) << "\n" << bad;
    }
  }
}

}  // namespace
}  // namespace saseval
