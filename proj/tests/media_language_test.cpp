#include <gtest/gtest.h>

#include "phytobase/error.hpp"
#include "phytobase/language.hpp"
#include "phytobase/media.hpp"

using namespace phytobase;

TEST(Language, Tags) {
    EXPECT_EQ(LanguageTag().code(), "en");
    EXPECT_EQ(LanguageTag("yo").code(), "yo");
    for (const char* bad : {"", "e", "EN", "eng", "y1"}) {
        try {
            LanguageTag t(bad);
            FAIL() << bad;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::UnknownLanguage);
        }
    }
}

TEST(Language, BundledRegistry) {
    const auto& r = LanguageRegistry::bundled();
    for (const char* tag : {"en", "yo", "ha", "ig", "fr"}) EXPECT_TRUE(r.contains(tag)) << tag;
    EXPECT_FALSE(r.contains("de"));
    EXPECT_FALSE(r.contains("EN"));
    LanguageRegistry copy = r;
    copy.add(LanguageTag("de"));
    EXPECT_TRUE(copy.contains("de"));
    EXPECT_THROW(copy.add(LanguageTag("de")), Error);
}

TEST(Media, Schemes) {
    EXPECT_EQ(uri_scheme("https://x.org/a.mp4"), "https");
    EXPECT_EQ(uri_scheme("images/a.jpg"), std::nullopt);
    EXPECT_EQ(uri_scheme("C:\\media\\a.jpg"), std::nullopt);
    EXPECT_TRUE(has_supported_scheme("file:///tmp/a.png"));
    EXPECT_TRUE(has_supported_scheme("images/a.jpg"));
    EXPECT_FALSE(has_supported_scheme("ftp://x.org/a.jpg"));
}

TEST(Media, InferKind) {
    EXPECT_EQ(infer_media_kind("a/b/ginger.JPG"), MediaKind::Image);
    EXPECT_EQ(infer_media_kind("https://x.org/clip.mp4"), MediaKind::Video);
    EXPECT_EQ(infer_media_kind("https://www.youtube.com/watch?v=abc"), MediaKind::Video);
    EXPECT_EQ(infer_media_kind("speech.ogg"), MediaKind::Audio);
    EXPECT_EQ(parse_media_kind("VIDEO"), MediaKind::Video);
    EXPECT_THROW(parse_media_kind("hologram"), Error);
}

TEST(Media, CleanManifestDropsUnusable) {
    MediaManifest raw;
    raw.items = {{MediaKind::Image, "a.jpg", "first"},
                 {MediaKind::Image, "", std::nullopt},
                 {MediaKind::Video, "ftp://x/y.mp4", std::nullopt},
                 {MediaKind::Image, "a.jpg", "again"},
                 {MediaKind::Video, "https://x.org/y.mp4", std::nullopt}};
    auto r = clean_manifest(raw);
    ASSERT_EQ(r.manifest.items.size(), 2u);
    EXPECT_EQ(r.manifest.items[0].caption, "first");
    EXPECT_EQ(r.manifest.items[1].uri, "https://x.org/y.mp4");
    EXPECT_EQ(r.warnings.size(), 3u);
}
