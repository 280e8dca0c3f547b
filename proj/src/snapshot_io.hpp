#pragma once

// Internal helpers for the snapshot file layout shared by the online and
// adaptive models: one JSON header line, then raw little-endian doubles.

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <span>
#include <string>

#include <json.hpp>

#include "obls/errors.hpp"

namespace obls::detail {

inline void write_doubles_le(std::ostream& out, std::span<const double> values) {
    for (double v : values) {
        auto bits = std::bit_cast<std::uint64_t>(v);
        char bytes[8];
        for (int b = 0; b < 8; ++b) {
            bytes[b] = static_cast<char>((bits >> (8 * b)) & 0xff);
        }
        out.write(bytes, 8);
    }
}

inline void read_doubles_le(std::istream& in, std::span<double> values) {
    for (double& v : values) {
        char bytes[8];
        in.read(bytes, 8);
        if (!in) {
            throw SchemaMismatch("snapshot: truncated double payload");
        }
        std::uint64_t bits = 0;
        for (int b = 0; b < 8; ++b) {
            bits |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes[b])) << (8 * b);
        }
        v = std::bit_cast<double>(bits);
    }
}

inline void write_snapshot_header(std::ostream& out, const nlohmann::json& header) {
    out << header.dump() << '\n';
}

inline nlohmann::json read_snapshot_header(std::istream& in, const std::string& expected_kind) {
    std::string line;
    if (!std::getline(in, line)) {
        throw SchemaMismatch("snapshot: missing header line");
    }
    nlohmann::json header;
    try {
        header = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error&) {
        throw SchemaMismatch("snapshot: header is not valid JSON");
    }
    if (header.value("format", "") != "obls-snapshot" || header.value("version", 0) != 1) {
        throw SchemaMismatch("snapshot: unrecognized format/version");
    }
    if (header.value("kind", "") != expected_kind) {
        throw SchemaMismatch("snapshot: kind is not '" + expected_kind + "'");
    }
    return header;
}

} // namespace obls::detail
