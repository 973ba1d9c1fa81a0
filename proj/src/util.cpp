#include "ttq/util.hpp"

#include <openssl/evp.h>

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ttq/errors.hpp"

namespace ttq {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Io: return "IoError";
        case ErrorKind::Format: return "FormatError";
        case ErrorKind::Invariant: return "InvariantError";
        case ErrorKind::DanglingReference: return "DanglingReference";
        case ErrorKind::Grammar: return "GrammarError";
        case ErrorKind::AliasCollision: return "AliasCollision";
        case ErrorKind::NoEvidence: return "NoEvidence";
        case ErrorKind::EmptiedTable: return "EmptiedTable";
        case ErrorKind::BadCoordinates: return "BadCoordinates";
        case ErrorKind::VariantMismatch: return "VariantMismatch";
        case ErrorKind::MissingExemplars: return "MissingExemplars";
        case ErrorKind::DuplicateExemplar: return "DuplicateExemplar";
        case ErrorKind::AuthMissing: return "AuthMissing";
        case ErrorKind::RateLimited: return "RateLimited";
        case ErrorKind::Provider: return "ProviderError";
        case ErrorKind::FixtureMissing: return "FixtureMissing";
        case ErrorKind::EmptyResponse: return "EmptyResponse";
        case ErrorKind::NoFinalAnswer: return "NoFinalAnswer";
        case ErrorKind::InsufficientExamples: return "InsufficientExamples";
        case ErrorKind::UnknownExampleId: return "UnknownExampleId";
        case ErrorKind::EmptyGroup: return "EmptyGroup";
        case ErrorKind::EmptyResults: return "EmptyResults";
        case ErrorKind::Config: return "ConfigError";
    }
    return "Error";
}

static bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && is_space(s[b])) ++b;
    while (e > b && is_space(s[e - 1])) --e;
    return std::string(s.substr(b, e - b));
}

std::string to_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::string collapse_whitespace(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool pending_space = false;
    for (char c : s) {
        if (is_space(c)) {
            pending_space = !out.empty();
        } else {
            if (pending_space) out.push_back(' ');
            pending_space = false;
            out.push_back(c);
        }
    }
    return out;
}

bool starts_with_ci(std::string_view text, std::string_view prefix) {
    if (text.size() < prefix.size()) return false;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(text[i])) !=
            std::tolower(static_cast<unsigned char>(prefix[i])))
            return false;
    }
    return true;
}

bool equals_ci(std::string_view a, std::string_view b) {
    return a.size() == b.size() && starts_with_ci(a, b);
}

bool contains_ci(std::string_view haystack, std::string_view needle) {
    if (needle.empty()) return true;
    if (haystack.size() < needle.size()) return false;
    for (std::size_t i = 0; i + needle.size() <= haystack.size(); ++i) {
        if (starts_with_ci(haystack.substr(i), needle)) return true;
    }
    return false;
}

std::string replace_all(std::string s, std::string_view from, std::string_view to) {
    if (from.empty()) return s;
    std::size_t pos = 0;
    while ((pos = s.find(from, pos)) != std::string::npos) {
        s.replace(pos, from.size(), to);
        pos += to.size();
    }
    return s;
}

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            lines.emplace_back(text.substr(start));
            break;
        }
        std::string line(text.substr(start, nl - start));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(std::move(line));
        start = nl + 1;
    }
    return lines;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out.append(sep);
        out.append(parts[i]);
    }
    return out;
}

bool parse_number(std::string_view s, double& out) {
    std::string t = trim(s);
    if (t.empty()) return false;
    t = replace_all(t, ",", "");
    std::size_t consumed = 0;
    try {
        out = std::stod(t, &consumed);
    } catch (const std::exception&) {
        return false;
    }
    return consumed == t.size();
}

bool looks_like_date(std::string_view s) {
    static const char* kMonths[] = {"january", "february", "march",     "april",   "may",
                                    "june",    "july",     "august",    "september",
                                    "october", "november", "december"};
    std::string t = to_lower(trim(s));
    if (t.empty()) return false;
    for (const char* m : kMonths) {
        if (t.find(m) != std::string::npos) return true;
    }
    // numeric date shapes: 1981, 10-12-2007, 1978/79, 06/10/1989
    int digits = 0;
    for (char c : t) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
            ++digits;
        } else if (c != '-' && c != '/' && c != '.' && c != ' ') {
            return false;
        }
    }
    return digits >= 4;
}

std::uint64_t fnv1a64(std::uint64_t seed, std::string_view text) {
    std::uint64_t h = 14695981039346656037ULL;
    auto mix = [&h](unsigned char byte) {
        h ^= byte;
        h *= 1099511628211ULL;
    };
    for (int i = 0; i < 8; ++i) mix(static_cast<unsigned char>((seed >> (8 * i)) & 0xff));
    for (char c : text) mix(static_cast<unsigned char>(c));
    return h;
}

std::string sha256_hex(std::string_view bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 0xf]);
    }
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
    namespace fs = std::filesystem;
    if (path.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(path.parent_path(), ec);
    }
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorKind::Io, "cannot write " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw Error(ErrorKind::Io, "short write to " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) throw Error(ErrorKind::Io, "cannot move " + tmp.string() + " to " + path.string());
}

}  // namespace ttq
