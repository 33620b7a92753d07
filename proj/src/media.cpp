#include "phytobase/media.hpp"

#include <set>

#include "phytobase/error.hpp"
#include "phytobase/text.hpp"

namespace phytobase {

std::string_view to_string(MediaKind kind) {
    switch (kind) {
        case MediaKind::Image: return "Image";
        case MediaKind::Video: return "Video";
        case MediaKind::Audio: return "Audio";
    }
    return "Image";
}

MediaKind parse_media_kind(std::string_view s) {
    if (text::iequals(s, "image")) return MediaKind::Image;
    if (text::iequals(s, "video")) return MediaKind::Video;
    if (text::iequals(s, "audio")) return MediaKind::Audio;
    throw Error(ErrorCode::BadRequest, "unknown media kind '" + std::string(s) + "'");
}

std::optional<std::string> uri_scheme(std::string_view uri) {
    auto colon = uri.find(':');
    if (colon == std::string_view::npos || colon < 2) return std::nullopt;
    auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
    if (!alpha(uri[0])) return std::nullopt;
    for (std::size_t i = 1; i < colon; ++i) {
        char c = uri[i];
        if (!(alpha(c) || (c >= '0' && c <= '9') || c == '+' || c == '-' || c == '.')) return std::nullopt;
    }
    return text::to_lower(uri.substr(0, colon));
}

bool has_supported_scheme(std::string_view uri) {
    auto scheme = uri_scheme(uri);
    return !scheme || *scheme == "file" || *scheme == "http" || *scheme == "https";
}

MediaKind infer_media_kind(std::string_view uri) {
    auto lower = text::to_lower(uri);
    if (lower.find("youtube.com/") != std::string::npos || lower.find("youtu.be/") != std::string::npos)
        return MediaKind::Video;
    auto query = lower.find_first_of("?#");
    if (query != std::string::npos) lower.resize(query);
    auto dot = lower.rfind('.');
    if (dot == std::string::npos) return MediaKind::Image;
    auto ext = lower.substr(dot + 1);
    static const std::set<std::string> video{"mp4", "avi", "mkv", "webm", "mov", "mpg", "mpeg", "flv", "wmv"};
    static const std::set<std::string> audio{"mp3", "wav", "ogg", "oga", "flac", "m4a", "aac"};
    if (video.count(ext)) return MediaKind::Video;
    if (audio.count(ext)) return MediaKind::Audio;
    return MediaKind::Image;
}

ManifestResult clean_manifest(const MediaManifest& raw) {
    ManifestResult out;
    std::set<std::string> seen;
    for (const auto& ref : raw.items) {
        if (text::is_blank(ref.uri)) {
            out.warnings.push_back("dropped media reference with empty uri");
            continue;
        }
        if (!has_supported_scheme(ref.uri)) {
            out.warnings.push_back("dropped media reference with unsupported scheme: " + ref.uri);
            continue;
        }
        if (!seen.insert(ref.uri).second) {
            out.warnings.push_back("dropped duplicate media reference: " + ref.uri);
            continue;
        }
        out.manifest.items.push_back(ref);
    }
    return out;
}

}  // namespace phytobase
