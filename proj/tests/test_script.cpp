#include <gtest/gtest.h>

#include <map>
#include <set>

#include "mmseg/script.hpp"

using namespace mmseg;

TEST(Script, ClassifyExamples) {
  EXPECT_EQ(classify(cp::KOK), (CharClass{CharTag::MajorLetter, false}));
  EXPECT_EQ(classify(cp::ANAP).tag, CharTag::VowelSign);
  EXPECT_EQ(classify(U'A').tag, CharTag::Foreign);
  EXPECT_EQ(classify(cp::APUN).tag, CharTag::Ligature);
  EXPECT_EQ(classify(cp::LUM).tag, CharTag::Intonation);
  EXPECT_EQ(classify(cp::CHEIKHEI).tag, CharTag::Punctuation);
  EXPECT_EQ(classify(cp::KOK_LONSUM).tag, CharTag::FinalLetter);
  // Unassigned slots inside the block are not part of the inventory.
  EXPECT_EQ(classify(0xABEE).tag, CharTag::Foreign);
  EXPECT_EQ(classify(0xABFA).tag, CharTag::Foreign);
  EXPECT_EQ(classify(0xAAE0).tag, CharTag::Foreign);  // Meetei Mayek Extensions
}

TEST(Script, InventoryCounts) {
  std::map<CharTag, int> counts;
  int vowel_letters = 0;
  for (const ScriptChar& s : inventory()) {
    ++counts[s.char_class.tag];
    vowel_letters += s.char_class.is_vowel_letter;
  }
  EXPECT_EQ(counts[CharTag::MajorLetter], 27);
  EXPECT_EQ(vowel_letters, 3);
  EXPECT_EQ(counts[CharTag::VowelSign], 8);
  EXPECT_EQ(counts[CharTag::FinalLetter], 8);
  EXPECT_EQ(counts[CharTag::Digit], 10);
  EXPECT_EQ(counts[CharTag::Ligature], 1);
  EXPECT_EQ(counts[CharTag::Intonation], 1);
  EXPECT_EQ(counts[CharTag::Punctuation], 1);
  EXPECT_EQ(counts[CharTag::Foreign], 0);
  EXPECT_EQ(inventory().size(), 56u);
}

TEST(Script, InventorySortedAndNamesUniquePerClass) {
  std::map<CharTag, std::set<std::string_view>> names;
  for (std::size_t k = 0; k < inventory().size(); ++k) {
    if (k) {
      EXPECT_LT(inventory()[k - 1].codepoint, inventory()[k].codepoint);
    }
    EXPECT_TRUE(names[inventory()[k].char_class.tag].insert(inventory()[k].traditional_name).second)
        << inventory()[k].traditional_name;
  }
}

TEST(Script, PartitionOverAllScalarValues) {
  std::set<char32_t> members;
  for (const ScriptChar& s : inventory()) members.insert(s.codepoint);
  std::size_t non_foreign = 0;
  for (char32_t c = 0; c <= 0x10FFFF; ++c) {
    const bool foreign = classify(c).tag == CharTag::Foreign;
    if (!foreign) ++non_foreign;
    ASSERT_EQ(!foreign, members.count(c) == 1) << std::hex << static_cast<unsigned>(c);
  }
  EXPECT_EQ(non_foreign, 56u);
}

TEST(Script, DigitsAreTheNumeralBlock) {
  for (char32_t c = 0xABE0; c < 0xAC00; ++c) {
    EXPECT_EQ(is_digit(c), c >= cp::DIGIT_ZERO && c <= cp::DIGIT_NINE);
  }
}

TEST(Script, VowelCharacters) {
  EXPECT_TRUE(is_vowel_character(cp::UN));
  EXPECT_TRUE(is_vowel_character(cp::I));
  EXPECT_TRUE(is_vowel_character(cp::ATIYA));
  EXPECT_FALSE(is_vowel_character(cp::KOK));
  EXPECT_FALSE(is_vowel_character(cp::KOK_LONSUM));
  EXPECT_FALSE(is_vowel_character(cp::I_LONSUM));
  EXPECT_THROW(is_vowel_character(U'A'), std::invalid_argument);

  int vowels = 0;
  for (const ScriptChar& s : inventory()) vowels += is_vowel_character(s.codepoint);
  EXPECT_EQ(vowels, 11);
}

TEST(Script, LonsumBase) {
  EXPECT_EQ(lonsum_base(cp::KOK_LONSUM), cp::KOK);
  EXPECT_EQ(lonsum_base(cp::I_LONSUM), cp::I);
  EXPECT_THROW(lonsum_base(cp::ANAP), std::domain_error);
  EXPECT_THROW(lonsum_base(cp::KOK), std::domain_error);

  std::set<char32_t> bases;
  for (const ScriptChar& s : inventory()) {
    if (s.char_class.tag != CharTag::FinalLetter) continue;
    const char32_t base = lonsum_base(s.codepoint);
    EXPECT_TRUE(is_major(base));
    bases.insert(base);
    // "kok lonsum" derives from "kok"
    const auto b = find_by_name(s.traditional_name.substr(0, s.traditional_name.find(' ')));
    ASSERT_TRUE(b.has_value());
    EXPECT_EQ(b->codepoint, base);
  }
  EXPECT_EQ(bases.size(), 8u);
}

TEST(Script, NameAliases) {
  EXPECT_EQ(find_by_name("aatap")->codepoint, cp::ANAP);
  EXPECT_EQ(find_by_name("ANAP")->codepoint, cp::ANAP);
  EXPECT_EQ(find_by_name("ot nap")->codepoint, cp::ONAP);
  EXPECT_EQ(find_by_name("onap")->codepoint, cp::ONAP);
  EXPECT_EQ(find_by_name("atia")->codepoint, cp::ATIYA);
  EXPECT_EQ(find_by_name("Atiya")->codepoint, cp::ATIYA);
  EXPECT_EQ(find_by_name("ee lonsum")->codepoint, cp::I_LONSUM);
  EXPECT_FALSE(find_by_name("nonesuch").has_value());
}

TEST(Script, FormatCodepoint) {
  EXPECT_EQ(format_codepoint(cp::KOK), "U+ABC0");
  EXPECT_EQ(format_codepoint(U'A'), "U+0041");
  EXPECT_EQ(format_codepoint(0x1F600), "U+1F600");
}
