#pragma once
// Media references attached to a plant record. Only references are kept;
// nothing is downloaded or transcoded.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phytobase/error.hpp"

namespace phytobase {

enum class MediaKind { Image, Video, Audio };

std::string_view to_string(MediaKind kind);
// Case-insensitive; throws Error(BadRequest) on anything else.
MediaKind parse_media_kind(std::string_view s);

struct MediaRef {
    MediaKind kind = MediaKind::Image;
    std::string uri;
    std::optional<std::string> caption;

    friend bool operator==(const MediaRef&, const MediaRef&) = default;
};

struct MediaManifest {
    std::vector<MediaRef> items;

    friend bool operator==(const MediaManifest&, const MediaManifest&) = default;
};

// Lowercased URI scheme, or nullopt for a bare path. Single-letter schemes
// are drive letters ("C:\\...") and count as paths.
std::optional<std::string> uri_scheme(std::string_view uri);
// file, http, https, or no scheme at all.
bool has_supported_scheme(std::string_view uri);

// Guesses the kind from the extension or host; used when a reference
// arrives as a bare URL (CSV "Picture" column).
MediaKind infer_media_kind(std::string_view uri);

struct ManifestResult {
    MediaManifest manifest;
    std::vector<std::string> warnings;
};

// Drops refs with unsupported schemes or empty URIs and repeated URIs,
// reporting each drop as a warning.
ManifestResult clean_manifest(const MediaManifest& raw);

}  // namespace phytobase
